"""
Utility functions for packed boolean words.

A word of width n is stored in an int; coordinate i (1-based, leftmost in
the textual rendering) lives at bit n - i. Ascending packed value is thus
the lexicographic order of the renderings.
"""

from typing import Iterator, List

import numpy as np

from secorder.errors import UsageError

WORD_MAX_WIDTH = 62

_BYTE_WEIGHTS = np.array([bin(i).count('1') for i in range(256)], dtype=np.uint8)


def check_width(width: int) -> int:
    """
    Validate a word width.

    Args:
        width: Number of coordinates

    Returns:
        The width, unchanged
    """
    if not isinstance(width, int) or isinstance(width, bool):
        raise UsageError(f"Word width must be an integer, got {width!r}")
    if width < 1 or width > WORD_MAX_WIDTH:
        raise UsageError(f"Word width must be between 1 and {WORD_MAX_WIDTH}, got {width}")
    return width


def mask(width: int) -> int:
    """All-ones word of the given width."""
    return (1 << width) - 1


def popcount(value: int) -> int:
    """Number of 1-bits of a packed word."""
    return value.bit_count()


def coordinate_bit(width: int, coordinate: int) -> int:
    """
    Packed bit of a 1-based coordinate.

    Args:
        width: Word width n
        coordinate: Coordinate i in 1..n

    Returns:
        The int with only coordinate i set
    """
    if coordinate < 1 or coordinate > width:
        raise UsageError(f"Coordinate {coordinate} out of range 1..{width}")
    return 1 << (width - coordinate)


def coordinates(width: int, value: int) -> List[int]:
    """1-based coordinates holding a 1, in increasing order."""
    return [i for i in range(1, width + 1) if value >> (width - i) & 1]


def set_bits(value: int) -> Iterator[int]:
    """Yield the single-bit ints making up a packed word."""
    while value:
        low = value & -value
        yield low
        value ^= low


def next_same_weight(value: int) -> int:
    """
    Smallest int greater than value with the same number of 1-bits.

    Gosper's rule; value must be nonzero.
    """
    low = value & -value
    ripple = value + low
    return ripple | (((ripple ^ value) // low) >> 2)


def fixed_weight_values(width: int, weight: int) -> Iterator[int]:
    """
    Yield every packed word of the given width and weight, ascending.

    Args:
        width: Word width n
        weight: Number of 1-bits w, 0 <= w <= n

    Returns:
        Iterator over C(n, w) ints
    """
    if weight < 0 or weight > width:
        raise UsageError(f"Weight {weight} out of range 0..{width}")
    if weight == 0:
        yield 0
        return
    value = mask(weight)
    limit = 1 << width
    while value < limit:
        yield value
        value = next_same_weight(value)


def successor_values(width: int, value: int) -> Iterator[int]:
    """Yield the words obtained by raising exactly one 0-bit, left to right."""
    for i in range(1, width + 1):
        bit = 1 << (width - i)
        if not value & bit:
            yield value | bit


def word_to_text(width: int, value: int) -> str:
    """Render a packed word as n characters, coordinate 1 first."""
    return format(value, f'0{width}b')


def text_to_word(text: str) -> int:
    """
    Parse a rendering made of '0' and '1' characters.

    Args:
        text: Word rendering, coordinate 1 first

    Returns:
        The packed value
    """
    if not text or any(ch not in '01' for ch in text):
        raise UsageError(f"Not a boolean word: {text!r}")
    check_width(len(text))
    return int(text, 2)


def permute_value(width: int, value: int, sigma) -> int:
    """
    Apply the coordinate permutation sigma to a packed word.

    sigma is a tuple of 0-based images; coordinate i moves to sigma[i].
    """
    result = 0
    for i in range(width):
        if value >> (width - 1 - i) & 1:
            result |= 1 << (width - 1 - sigma[i])
    return result


def popcount_array(values: np.ndarray) -> np.ndarray:
    """
    Vectorized popcount of an array of packed words.

    Args:
        values: One-dimensional array of non-negative ints

    Returns:
        Array of weights, same length
    """
    words = np.ascontiguousarray(values, dtype=np.uint64)
    return _BYTE_WEIGHTS[words.view(np.uint8)].reshape(-1, 8).sum(axis=1, dtype=np.int64)
