"""
Tests for packed words and the BitWord lattice operations.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secorder.errors import UsageError
from secorder.models.bitword import (
    BitWord, bottom, combinations, join, leq, meet, successors, top, unit, weight
)
from secorder.utils.bit_utils import (
    coordinates, fixed_weight_values, next_same_weight, permute_value, popcount_array,
    text_to_word, word_to_text
)


def words(width):
    return st.integers(0, (1 << width) - 1).map(lambda v: BitWord(width, v))


class TestBitWord:
    """Test suite for BitWord construction and rendering."""

    def test_parse_and_render(self):
        """Test that words parse from and render to bit strings."""
        word = BitWord.parse('011101')
        assert word.width == 6
        assert word.value == 0b011101
        assert str(word) == '011101'

    def test_coordinate_one_is_leftmost(self):
        """Test that coordinate 1 is the leftmost character."""
        word = BitWord.parse('1000')
        assert word[1] == 1
        assert word[4] == 0
        assert unit(4, 1) == word
        assert str(unit(4, 4)) == '0001'

    def test_invalid_renderings(self):
        """Test that strings with other characters or no width are rejected."""
        with pytest.raises(UsageError):
            BitWord.parse('')
        with pytest.raises(UsageError):
            BitWord.parse('012')
        with pytest.raises(UsageError):
            BitWord.parse('1' * 63)

    def test_value_must_fit_width(self):
        """Test that a value wider than the word is rejected."""
        with pytest.raises(UsageError):
            BitWord(2, 4)
        with pytest.raises(UsageError):
            BitWord(0, 0)

    def test_unit_out_of_range(self):
        """Test that unit words need a coordinate between 1 and n."""
        with pytest.raises(UsageError):
            unit(4, 0)
        with pytest.raises(UsageError):
            unit(4, 5)

    def test_top_and_bottom(self):
        """Test the all-zero and all-one words."""
        assert str(top(3)) == '111'
        assert str(bottom(3)) == '000'


class TestLatticeOperations:
    """Test suite for weight, join, meet and the componentwise order."""

    def test_weight(self):
        """Test that the weight counts the ones."""
        assert weight(BitWord.parse('0110')) == 2
        assert weight(BitWord.parse('0000')) == 0
        assert weight(BitWord.parse('111011')) == 5

    def test_join_and_meet(self):
        """Test coordinatewise or and and."""
        u = BitWord.parse('0110')
        v = BitWord.parse('0011')
        assert str(join(u, v)) == '0111'
        assert str(meet(u, v)) == '0010'
        assert join(u, bottom(4)) == u
        assert join(u, u) == u
        assert (u | v) == join(u, v)
        assert (u & v) == meet(u, v)

    def test_leq(self):
        """Test the coordinatewise order."""
        assert leq(BitWord.parse('0100'), BitWord.parse('0110'))
        assert not leq(BitWord.parse('0110'), BitWord.parse('0100'))
        assert BitWord.parse('0110') <= BitWord.parse('0110')

    def test_width_mismatch(self):
        """Test that words of different widths do not combine."""
        with pytest.raises(UsageError):
            join(BitWord.parse('01'), BitWord.parse('011'))
        with pytest.raises(UsageError):
            leq(BitWord.parse('01'), BitWord.parse('011'))

    @given(words(8), words(8), words(8))
    @settings(max_examples=200)
    def test_leq_is_a_partial_order(self, u, v, w):
        """Test that the order is reflexive, antisymmetric and transitive."""
        assert leq(u, u)
        if leq(u, v) and leq(v, u):
            assert u == v
        if leq(u, v) and leq(v, w):
            assert leq(u, w)

    @given(words(10), words(10))
    @settings(max_examples=200)
    def test_weight_laws(self, u, v):
        """Test that weights of join and meet add up to the weights of the operands."""
        assert weight(join(u, v)) <= weight(u) + weight(v)
        assert leq(meet(u, v), u) and leq(u, join(u, v))
        if leq(u, v):
            assert weight(u) <= weight(v)


class TestGeneration:
    """Test suite for fixed-weight generation and successors."""

    def test_combinations_of_four_choose_two(self):
        """Test the six words of width four and weight two in increasing order."""
        assert [str(u) for u in combinations(4, 2)] == [
            '0011', '0101', '0110', '1001', '1010', '1100'
        ]

    def test_combinations_edge_weights(self):
        """Test weights zero and n and out-of-range weights."""
        assert [str(u) for u in combinations(5, 0)] == ['00000']
        assert [str(u) for u in combinations(3, 3)] == ['111']
        with pytest.raises(UsageError):
            list(combinations(3, 4))

    def test_combinations_exhaustive(self):
        """Test that every weight class has binomial size and no repeats."""
        for n in range(1, 17):
            for w in range(n + 1):
                values = list(fixed_weight_values(n, w))
                assert len(values) == math.comb(n, w)
                assert len(set(values)) == len(values)
                assert all(v.bit_count() == w for v in values)
                assert values == sorted(values)

    def test_next_same_weight(self):
        """Test one step of the same-weight successor."""
        assert next_same_weight(0b0011) == 0b0101
        assert next_same_weight(0b0110) == 0b1001

    def test_successors(self):
        """Test that successors add exactly one coordinate."""
        assert {str(v) for v in successors(BitWord.parse('00'))} == {'01', '10'}
        assert list(successors(BitWord.parse('11'))) == []
        assert {str(v) for v in successors(BitWord.parse('010'))} == {'011', '110'}

    @given(words(12))
    def test_successor_count(self, u):
        """Test that a word has one successor per zero coordinate."""
        found = list(successors(u))
        assert len(found) == u.width - u.weight
        assert all(v.weight == u.weight + 1 and leq(u, v) for v in found)


class TestBitUtils:
    """Test suite for int-level helpers."""

    def test_text_round_trip(self):
        """Test the bit-string codec."""
        assert text_to_word('0101') == 5
        assert word_to_text(4, 5) == '0101'

    def test_coordinates(self):
        """Test the coordinates of the set bits."""
        assert coordinates(5, text_to_word('10110')) == [1, 3, 4]

    def test_permute_value(self):
        """Test moving coordinates of a packed word."""
        # coordinate 1 moves to coordinate 2 and back
        assert permute_value(2, text_to_word('01'), (1, 0)) == text_to_word('10')
        assert permute_value(3, text_to_word('100'), (2, 0, 1)) == text_to_word('001')

    def test_popcount_array(self):
        """Test that the vectorized popcount matches bit_count."""
        values = np.arange(1 << 10, dtype=np.uint32)
        expected = [int(v).bit_count() for v in values]
        assert popcount_array(values).tolist() == expected
