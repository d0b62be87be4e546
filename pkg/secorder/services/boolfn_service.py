"""
Service module for boolean functions B^n -> B^n: predicates, builders, enumeration.
"""

import itertools
import logging
import random
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np

from secorder.errors import DomainError, UsageError
from secorder.models.boolean_function import BooleanFunction
from secorder.utils.bit_utils import (
    check_width, coordinate_bit, mask, permute_value, popcount_array
)

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def _input_weights(width: int) -> np.ndarray:
    return popcount_array(np.arange(1 << width, dtype=np.uint64))


def is_increasing(f: BooleanFunction, max_width: Optional[int] = None) -> bool:
    """
    Check monotonicity along every successor pair u < v.

    Args:
        f: The function
        max_width: Widest sweep allowed (default SWEEP_MAX_WIDTH)

    Returns:
        bool: True iff f(u) <= f(v) whenever v raises one 0-bit of u
    """
    table = f.table(max_width).astype(np.int64)
    inputs = np.arange(1 << f.width, dtype=np.int64)
    for i in range(f.width):
        bit = 1 << i
        lower = inputs[(inputs & bit) == 0]
        if np.any(table[lower] & ~table[lower | bit]):
            logger.debug("%s is not increasing along bit %d", f.name, f.width - i)
            return False
    return True


def is_contractive(f: BooleanFunction, max_width: Optional[int] = None) -> bool:
    """True iff |f(u)| <= |u| for every u."""
    table = f.table(max_width)
    return bool(np.all(popcount_array(table) <= _input_weights(f.width)))


def is_weight_preserving(f: BooleanFunction, max_width: Optional[int] = None) -> bool:
    """True iff |f(u)| = |u| for every u."""
    table = f.table(max_width)
    return bool(np.array_equal(popcount_array(table), _input_weights(f.width)))


def is_strictly_increasing(f: BooleanFunction, max_width: Optional[int] = None) -> bool:
    """Increasing and weight preserving."""
    return is_weight_preserving(f, max_width) and is_increasing(f, max_width)


def is_bijective(f: BooleanFunction, max_width: Optional[int] = None) -> bool:
    table = f.table(max_width)
    return len(np.unique(table)) == len(table)


def unit_images(f: BooleanFunction) -> List[int]:
    """f(e_1), ..., f(e_n) as packed words."""
    return [f.evaluate(coordinate_bit(f.width, i)) for i in range(1, f.width + 1)]


def is_injective_on_units(f: BooleanFunction) -> bool:
    """f(e_1), ..., f(e_n) are pairwise distinct (one of them may be 0^n)."""
    images = unit_images(f)
    return len(set(images)) == len(images)


def permutes_units(f: BooleanFunction) -> bool:
    """f(e_1), ..., f(e_n) are pairwise distinct unit words."""
    images = unit_images(f)
    return len(set(images)) == len(images) and all(image.bit_count() == 1 for image in images)


def equals(f: BooleanFunction, g: BooleanFunction, max_width: Optional[int] = None) -> bool:
    """Extensional equality."""
    if f.width != g.width:
        return False
    return bool(np.array_equal(f.table(max_width), g.table(max_width)))


def check_permutation(sigma: Sequence[int], n: int) -> Permutation:
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(n)):
        raise UsageError(f"Not a permutation of {n} coordinates: {sigma}")
    return sigma


def compose_permutations(sigma: Sequence[int], tau: Sequence[int]) -> Permutation:
    """sigma o tau: first tau, then sigma."""
    return tuple(sigma[t] for t in tau)


def invert_permutation(sigma: Sequence[int]) -> Permutation:
    inverse = [0] * len(sigma)
    for i, image in enumerate(sigma):
        inverse[image] = i
    return tuple(inverse)


def render_permutation(sigma: Sequence[int]) -> str:
    """1-based one-line notation, e.g. '(2,1)'."""
    return '(' + ','.join(str(image + 1) for image in sigma) + ')'


def identity(n: int) -> BooleanFunction:
    check_width(n)
    return BooleanFunction.from_rule(n, lambda u: u, name='identity')


def constant(n: int, value: int) -> BooleanFunction:
    check_width(n)
    if value < 0 or value > mask(n):
        raise UsageError(f"Constant {value} does not fit in {n} bits")
    return BooleanFunction.from_rule(n, lambda u: value, name=f"constant {value:0{n}b}")


def complement(n: int) -> BooleanFunction:
    top = mask(check_width(n))
    return BooleanFunction.from_rule(n, lambda u: u ^ top, name='complement')


def permutation_action(sigma: Sequence[int]) -> BooleanFunction:
    """
    The function u -> sigma . u moving coordinate i to sigma[i].

    Args:
        sigma: 0-based permutation of range(n)

    Returns:
        BooleanFunction: rule-backed, strictly increasing and bijective
    """
    n = check_width(len(sigma))
    sigma = check_permutation(sigma, n)
    return BooleanFunction.from_rule(n, lambda u: permute_value(n, u, sigma),
                                     name=f"action {render_permutation(sigma)}")


def as_permutation(f: BooleanFunction, max_width: Optional[int] = None) -> Optional[Permutation]:
    """
    Recover tau with f = (u -> tau . u) from an increasing contractive f.

    Args:
        f: Increasing, contractive function
        max_width: Widest sweep allowed

    Returns:
        tuple: tau (0-based) when f is injective on unit words, else None
    """
    if not is_increasing(f, max_width) or not is_contractive(f, max_width):
        raise DomainError(f"{f.name} must be increasing and contractive")

    n = f.width
    images = unit_images(f)
    if len(set(images)) != n:
        return None

    tau = []
    for image in images:
        # contractive and increasing on a nonzero unit word forces a unit image
        if image.bit_count() != 1:
            return None
        tau.append(n - image.bit_length())
    tau = tuple(tau)

    expected = permutation_action(tau)
    if not equals(f, expected, max_width):
        raise DomainError(f"{f.name} is injective on unit words but is not the action of {render_permutation(tau)}")
    return tau


def compose(f: BooleanFunction, g: BooleanFunction) -> BooleanFunction:
    """u -> f(g(u))."""
    if f.width != g.width:
        raise UsageError(f"Width mismatch: {f.width} vs {g.width}")
    return BooleanFunction.from_rule(f.width, lambda u: f.evaluate(g.evaluate(u)),
                                     name=f"{f.name} o {g.name}")


def and_or_cell(n: int, i: int, j: int) -> BooleanFunction:
    """
    The cell (b_i, b_j) -> (b_i and b_j, b_i or b_j), identity elsewhere.

    Args:
        n: Width
        i: First coordinate (1-based)
        j: Second coordinate, i < j <= n

    Returns:
        BooleanFunction: strictly increasing rule
    """
    check_width(n)
    if not (1 <= i < j <= n):
        raise UsageError(f"and/or cell needs 1 <= i < j <= {n}, got i={i}, j={j}")
    bit_i = coordinate_bit(n, i)
    bit_j = coordinate_bit(n, j)
    rest = mask(n) & ~(bit_i | bit_j)

    def rule(u: int) -> int:
        a = bool(u & bit_i)
        b = bool(u & bit_j)
        return (u & rest) | (bit_i if a and b else 0) | (bit_j if a or b else 0)

    return BooleanFunction.from_rule(n, rule, name=f"and/or({i},{j})")


def all_functions(n: int) -> Iterator[BooleanFunction]:
    """Every function B^n -> B^n, (2^n)^(2^n) of them."""
    size = 1 << check_width(n)
    for outputs in itertools.product(range(size), repeat=size):
        yield BooleanFunction.from_table(n, outputs)


def up_sets(n: int) -> List[Tuple[int, ...]]:
    """
    Every increasing function B^n -> B as the sorted tuple of its true inputs.

    Returns:
        list: Dedekind-many up-closed sets of packed words
    """
    size = 1 << n
    result = []
    for chosen in range(1 << size):
        members = [u for u in range(size) if chosen >> u & 1]
        # up-closed: raising one bit never leaves the set
        if all(chosen >> (u | (1 << b)) & 1 for u in members for b in range(n)):
            result.append(tuple(members))
    return result


def monotone_functions(n: int) -> Iterator[BooleanFunction]:
    """
    Every increasing function B^n -> B^n, one up-set per output coordinate.

    Meant for n <= 3 (20^3 functions).
    """
    check_width(n)
    size = 1 << n
    coordinate_tables = []
    for members in up_sets(n):
        column = [0] * size
        for u in members:
            column[u] = 1
        coordinate_tables.append(column)

    for columns in itertools.product(coordinate_tables, repeat=n):
        outputs = [0] * size
        for i, column in enumerate(columns):
            bit = 1 << (n - 1 - i)
            for u in range(size):
                if column[u]:
                    outputs[u] |= bit
        yield BooleanFunction.from_table(n, outputs)


def random_monotone_contractive(rng: random.Random, n: int, steps: Optional[int] = None) -> BooleanFunction:
    """
    Sample an increasing contractive function by random bit raises.

    Starts from u -> 0^n; each step raises one output bit at u and at every
    v above u, and is kept only if every |f(v)| <= |v| still holds. Not a
    uniform sampler.

    Args:
        rng: Seeded random source
        n: Width
        steps: Number of raise attempts (default 4 * 2^n)

    Returns:
        BooleanFunction: table-backed, increasing and contractive
    """
    size = 1 << check_width(n)
    steps = 4 * size if steps is None else steps
    table = [0] * size
    for _ in range(steps):
        u = rng.randrange(size)
        bit = 1 << rng.randrange(n)
        if table[u] & bit:
            continue
        above = [v for v in range(size) if u & ~v == 0]
        if all((table[v] | bit).bit_count() <= v.bit_count() for v in above):
            for v in above:
                table[v] |= bit
    return BooleanFunction.from_table(n, table, name='random monotone contractive')
