"""
Fixed-width boolean words with their lattice structure.
"""

from dataclasses import dataclass
from typing import Iterator

from secorder.errors import UsageError
from secorder.utils.bit_utils import (
    check_width, coordinate_bit, fixed_weight_values, mask, popcount,
    successor_values, text_to_word, word_to_text
)


@dataclass(frozen=True, order=False)
class BitWord:
    """
    An element of B^n.

    value packs coordinate i at bit width - i; no bit above the width is set.
    """
    width: int
    value: int

    def __post_init__(self):
        check_width(self.width)
        if self.value < 0 or self.value > mask(self.width):
            raise UsageError(f"Value {self.value} does not fit in {self.width} bits")

    @classmethod
    def parse(cls, text: str) -> 'BitWord':
        """Build a word from its rendering, e.g. '011101'."""
        return cls(len(text), text_to_word(text))

    def __str__(self) -> str:
        return word_to_text(self.width, self.value)

    def __repr__(self) -> str:
        return f"<BitWord {self}>"

    def __or__(self, other: 'BitWord') -> 'BitWord':
        return join(self, other)

    def __and__(self, other: 'BitWord') -> 'BitWord':
        return meet(self, other)

    def __le__(self, other: 'BitWord') -> bool:
        return leq(self, other)

    def __ge__(self, other: 'BitWord') -> bool:
        return leq(other, self)

    def __getitem__(self, coordinate: int) -> int:
        """Bit at a 1-based coordinate."""
        return 1 if self.value & coordinate_bit(self.width, coordinate) else 0

    @property
    def weight(self) -> int:
        return popcount(self.value)


def _same_width(u: BitWord, v: BitWord):
    if u.width != v.width:
        raise UsageError(f"Width mismatch: {u.width} vs {v.width}")


def weight(u: BitWord) -> int:
    """Number of 1s in u."""
    return popcount(u.value)


def join(u: BitWord, v: BitWord) -> BitWord:
    """Coordinatewise maximum."""
    _same_width(u, v)
    return BitWord(u.width, u.value | v.value)


def meet(u: BitWord, v: BitWord) -> BitWord:
    """Coordinatewise minimum."""
    _same_width(u, v)
    return BitWord(u.width, u.value & v.value)


def leq(u: BitWord, v: BitWord) -> bool:
    """True iff every 1-bit of u is a 1-bit of v."""
    _same_width(u, v)
    return u.value & ~v.value == 0


def bottom(n: int) -> BitWord:
    return BitWord(n, 0)


def top(n: int) -> BitWord:
    return BitWord(n, mask(check_width(n)))


def unit(n: int, i: int) -> BitWord:
    """The word e_i: a single 1 at coordinate i."""
    return BitWord(n, coordinate_bit(check_width(n), i))


def combinations(n: int, w: int) -> Iterator[BitWord]:
    """
    Every word of width n and weight w, exactly once.

    Words come in ascending packed value, so '0011' precedes '0101'.

    Args:
        n: Word width
        w: Weight, 0 <= w <= n

    Returns:
        Iterator over C(n, w) words
    """
    check_width(n)
    if w < 0 or w > n:
        raise UsageError(f"Weight {w} out of range 0..{n}")
    for value in fixed_weight_values(n, w):
        yield BitWord(n, value)


def successors(u: BitWord) -> Iterator[BitWord]:
    """Words obtained from u by flipping exactly one 0-bit to 1."""
    for value in successor_values(u.width, u.value):
        yield BitWord(u.width, value)
