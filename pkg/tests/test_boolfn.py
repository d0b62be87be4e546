"""
Tests for boolean functions B^n -> B^n: representation, predicates, permutations.
"""

import itertools
import random
import unittest

import numpy as np
import pytest

from secorder.errors import DomainError, ResourceLimitError, UsageError
from secorder.models.bitword import BitWord
from secorder.models.boolean_function import BooleanFunction
from secorder.services.boolfn_service import (
    all_functions, and_or_cell, as_permutation, complement, compose, compose_permutations,
    constant, equals, identity, invert_permutation, is_bijective, is_contractive,
    is_increasing, is_injective_on_units, is_strictly_increasing, is_weight_preserving,
    monotone_functions, permutation_action, permutes_units, random_monotone_contractive,
    render_permutation, up_sets
)


class TestBooleanFunction:
    """Test suite for the rule/table representation."""

    def test_table_and_rule_agree(self):
        """Test that a rule contradicting its table is rejected."""
        f = BooleanFunction(2, rule=lambda u: u, table=[0, 1, 2, 3])
        assert f.evaluate(2) == 2
        with pytest.raises(UsageError):
            BooleanFunction(2, rule=lambda u: 0, table=[0, 1, 2, 3])

    def test_table_validation(self):
        """Test that short tables, wide outputs and missing rules are rejected."""
        with pytest.raises(UsageError):
            BooleanFunction.from_table(2, [0, 1, 2])
        with pytest.raises(UsageError):
            BooleanFunction.from_table(2, [0, 1, 2, 4])
        with pytest.raises(UsageError):
            BooleanFunction(2)

    def test_call_on_words(self):
        """Test calling a function on a BitWord."""
        f = and_or_cell(2, 1, 2)
        assert str(f(BitWord.parse('10'))) == '01'
        with pytest.raises(UsageError):
            f(BitWord.parse('100'))

    def test_lazy_table(self):
        """Test that the table is built on first use."""
        f = identity(4)
        assert not f.has_table
        assert f.outputs() == list(range(16))
        assert f.has_table

    def test_table_width_limit(self):
        """Test that materializing a table too wide is a resource error."""
        with pytest.raises(ResourceLimitError):
            identity(10).table(max_width=8)


class TestPredicates:
    """Test suite for monotonicity and weight predicates."""

    def test_identity(self):
        """Test that the identity satisfies every predicate."""
        f = identity(3)
        assert is_increasing(f)
        assert is_contractive(f)
        assert is_strictly_increasing(f)
        assert is_bijective(f)

    def test_complement(self):
        """Test that the complement is bijective but not increasing."""
        assert not is_increasing(complement(2))
        assert is_bijective(complement(2))

    def test_constants(self):
        """Test the predicates on constant functions."""
        assert not is_contractive(constant(3, 0b111))
        assert is_increasing(constant(3, 0b111))
        assert not is_strictly_increasing(constant(3, 0))
        with pytest.raises(UsageError):
            constant(2, 4)

    def test_and_or_cell(self):
        """Test that and/or cells are strictly increasing."""
        f = and_or_cell(2, 1, 2)
        assert f.outputs() == [0b00, 0b01, 0b01, 0b11]
        assert is_contractive(f)
        assert is_strictly_increasing(f)
        for n, i, j in [(3, 1, 3), (4, 2, 3), (5, 1, 5)]:
            assert is_strictly_increasing(and_or_cell(n, i, j))
        with pytest.raises(UsageError):
            and_or_cell(3, 2, 2)

    def test_strict_implies_contractive_and_increasing(self):
        """Test that strictly increasing functions are increasing, contractive and weight preserving."""
        for f in all_functions(2):
            if is_strictly_increasing(f):
                assert is_contractive(f) and is_increasing(f)
                assert is_weight_preserving(f)

    def test_counts(self):
        """Test the number of functions, up-sets and monotone functions for small widths."""
        assert sum(1 for _ in all_functions(1)) == 4
        assert [len(up_sets(n)) for n in (1, 2, 3)] == [3, 6, 20]
        assert sum(1 for _ in monotone_functions(2)) == 36

    def test_equals(self):
        """Test equality of functions by their tables."""
        assert equals(identity(2), BooleanFunction.from_table(2, [0, 1, 2, 3]))
        assert not equals(identity(2), complement(2))
        assert not equals(identity(2), identity(3))


class TestPermutations(unittest.TestCase):
    """Test cases for permutation actions and their recovery."""

    def test_swap(self):
        """Test the action of a transposition."""
        f = permutation_action((1, 0))
        self.assertEqual(str(f(BitWord.parse('01'))), '10')
        self.assertTrue(equals(permutation_action((0, 1, 2)), identity(3)))

    def test_actions_preserve_weight(self):
        """Test that permutation actions preserve weight."""
        for sigma in itertools.permutations(range(4)):
            self.assertTrue(is_weight_preserving(permutation_action(sigma)))

    def test_round_trip(self):
        """Test that as_permutation recovers the permutation of an action."""
        for sigma in itertools.permutations(range(3)):
            self.assertEqual(as_permutation(permutation_action(sigma)), sigma)

    def test_collisions(self):
        """Test that colliding unit images give no permutation."""
        self.assertIsNone(as_permutation(and_or_cell(2, 1, 2)))

    def test_refuses_outside_domain(self):
        """Test that functions that are not increasing and contractive are refused."""
        with self.assertRaises(DomainError):
            as_permutation(complement(2))
        with self.assertRaises(DomainError):
            as_permutation(constant(2, 0b11))

    def test_composition_law(self):
        """Test that composing actions is the action of the composed permutation."""
        rng = random.Random(3)
        for _ in range(50):
            sigma = tuple(rng.sample(range(5), 5))
            tau = tuple(rng.sample(range(5), 5))
            composed = permutation_action(compose_permutations(sigma, tau))
            self.assertTrue(equals(composed, compose(permutation_action(sigma), permutation_action(tau))))
            self.assertEqual(compose_permutations(sigma, invert_permutation(sigma)), tuple(range(5)))

    def test_invalid_permutation(self):
        """Test that a sequence with repeats is not a permutation."""
        with self.assertRaises(UsageError):
            permutation_action((0, 0))

    def test_render(self):
        """Test the 1-based rendering of a permutation."""
        self.assertEqual(render_permutation((1, 0)), '(2,1)')


class TestComposition:
    """Test suite for compose."""

    def test_identity_is_neutral(self):
        """Test that the identity is neutral for composition."""
        g = and_or_cell(3, 1, 3)
        assert equals(compose(identity(3), g), g)
        assert equals(compose(g, identity(3)), g)

    def test_width_mismatch(self):
        """Test that functions of different widths do not compose."""
        with pytest.raises(UsageError):
            compose(identity(2), identity(3))

    def test_contractive_increasing_closed(self):
        """Test that increasing contractive functions are closed under composition."""
        rng = random.Random(9)
        for _ in range(200):
            f = random_monotone_contractive(rng, 3)
            g = random_monotone_contractive(rng, 3)
            h = compose(f, g)
            assert is_increasing(h) and is_contractive(h)


class TestUnitWordCharacterization:
    """Test suite for increasing contractive functions that are injective on unit words."""

    def _conditions(self, f):
        return as_permutation(f) is not None, is_bijective(f), permutes_units(f)

    def test_all_functions_of_width_two(self):
        """Test that the three conditions agree on every increasing contractive function of width two."""
        selected = 0
        for f in all_functions(2):
            if not (is_increasing(f) and is_contractive(f)):
                continue
            selected += 1
            action, bijective, units = self._conditions(f)
            assert action == bijective == units
        assert selected > 0

    def test_zero_image_does_not_count_as_unit(self):
        """Test that distinct images including the zero word do not make a permutation."""
        # f(10) = 00 and f(01) = 01 are distinct, yet f is no permutation
        f = BooleanFunction.from_table(2, [0b00, 0b01, 0b00, 0b01])
        assert is_increasing(f) and is_contractive(f)
        assert is_injective_on_units(f)
        assert not permutes_units(f)
        assert not is_bijective(f)
        assert as_permutation(f) is None

    def test_width_three_actions(self):
        """Test that every permutation action of width three meets all three conditions."""
        for sigma in itertools.permutations(range(3)):
            assert self._conditions(permutation_action(sigma)) == (True, True, True)

    @pytest.mark.slow
    def test_width_three_samples(self):
        """Test the three conditions on sampled functions of width three."""
        rng = random.Random(2718)
        seen = set()
        for _ in range(10000):
            f = random_monotone_contractive(rng, 3, steps=rng.randint(0, 40))
            assert is_increasing(f) and is_contractive(f)
            action, bijective, units = self._conditions(f)
            assert action == bijective == units
            seen.add(action)
        assert False in seen

    def test_sampler_is_seeded(self):
        """Test that the sampler is reproducible from its seed."""
        first = random_monotone_contractive(random.Random(1), 3)
        second = random_monotone_contractive(random.Random(1), 3)
        assert np.array_equal(first.table(), second.table())
