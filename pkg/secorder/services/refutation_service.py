"""
Service module for the counterexample to finite generation of contractive
increasing functions, and the search that checks it against arity-m cells.
"""

import itertools
import logging
from typing import Iterator, List, Optional, Sequence, Set

from secorder.errors import ResourceLimitError, UsageError
from secorder.models.boolean_function import BooleanFunction
from secorder.models.report import CaseTag, Placement, RefutationReport
from secorder.services.boolfn_service import (
    is_contractive, is_increasing, is_strictly_increasing, permutes_units
)
from secorder.utils.bit_utils import check_width, coordinate_bit, word_to_text

logger = logging.getLogger(__name__)

MIN_WIDTH = 8


def default_width(m: int) -> int:
    """Word width 2^(m+1) + 4 used against cells of arity m."""
    return (1 << (m + 1)) + 4


def _core(u: int) -> str:
    """Rendering of u between its first and last 1."""
    return format(u >> ((u & -u).bit_length() - 1), 'b')


def _block_size(weight: int) -> Optional[int]:
    """B = 2^k with k > 1 and weight = B + 1, if any."""
    block = weight - 1
    if block >= 4 and block & (block - 1) == 0:
        return block
    return None


def case_conditions(n: int, u: int) -> Set[CaseTag]:
    """
    Tags whose own defining condition holds for u.

    (5) reads "weight 3 and not shape (4)" and (8) "no other line applies".
    """
    w = u.bit_count()
    tags = set()
    if w == 0:
        tags.add(CaseTag.ZERO)
    if w == 1:
        tags.add(CaseTag.SINGLE)
    if w and w % 2 == 0:
        tags.add(CaseTag.EVEN)
    if w == 3:
        core = _core(u)
        if core.startswith('110') and core.endswith('01') and set(core[2:-1]) == {'0'}:
            tags.add(CaseTag.PAIR_GAP_ONE)
        else:
            tags.add(CaseTag.OTHER_THREE)
    block = _block_size(w)
    if block is not None:
        core = _core(u)
        if core == '1' * block + '0' * block + '1':
            tags.add(CaseTag.RUN_GAP_ONE)
        if core == '1' + '0' * block + '1' * block:
            tags.add(CaseTag.ONE_GAP_RUN)
    if not tags:
        tags.add(CaseTag.REMAINING)
    return tags


def case_tag(n: int, u: int) -> CaseTag:
    """The line of the definition that applies to u, by precedence."""
    return min(case_conditions(n, u), key=lambda tag: tag.value)


def _prefix(n: int, k: int) -> int:
    """1^k 0^(n-k)."""
    return ((1 << k) - 1) << (n - k)


def counterexample_fn(n: int) -> BooleanFunction:
    """
    The weight-preserving increasing function that no arity-m cell basis generates.

    Outputs by case: 0^n; 1 0^(n-1); 1^k 0^(n-k) for even k; 1101 0^(n-4)
    for the shape 11 0^l 1; 1110 0^(n-4) for other weight 3; 1^B 01 0^(n-B-2)
    for the shapes 1^B 0^B 1 and 1 0^B 1^B (B = 2^k, k > 1); 1^(w-1) 10 0...
    otherwise.

    Args:
        n: Width, at least 8

    Returns:
        BooleanFunction: rule-backed
    """
    if not isinstance(n, int) or n < MIN_WIDTH:
        raise UsageError(f"The counterexample needs n >= {MIN_WIDTH}, got {n}")
    check_width(n)

    def rule(u: int) -> int:
        w = u.bit_count()
        tag = case_tag(n, u)
        if tag is CaseTag.ZERO:
            return 0
        if tag is CaseTag.SINGLE:
            return 1 << (n - 1)
        if tag is CaseTag.EVEN:
            return _prefix(n, w)
        if tag is CaseTag.PAIR_GAP_ONE:
            return 0b1101 << (n - 4)
        if tag is CaseTag.OTHER_THREE:
            return 0b1110 << (n - 4)
        if tag in (CaseTag.RUN_GAP_ONE, CaseTag.ONE_GAP_RUN):
            block = w - 1
            return _prefix(n, block) | (1 << (n - block - 2))
        return _prefix(n, w)

    return BooleanFunction.from_rule(n, rule, name=f"counterexample({n})")


def _runs(free: Sequence[int], length: int) -> Iterator[List[int]]:
    """Runs of consecutive free coordinates of the given length, left to right."""
    free_set = set(free)
    for start in free:
        run = list(range(start, start + length))
        if all(c in free_set for c in run):
            yield run


def _candidate_runs(n: int, i1: int, i2: int, free: Sequence[int]) -> Iterator[List[int]]:
    """
    Runs to try before the exhaustive search, most promising first.

    The empty assignment, then 11-pairs strictly inside (i1, i2) away from
    both ends, then 2^k-runs at distance 2^k left of i1 or right of i2, then
    every other run by length.
    """
    free_set = set(free)
    yield []
    for p in range(i1 + 2, i2 - 2):
        if p in free_set and p + 1 in free_set:
            yield [p, p + 1]
    block = 4
    while 2 * block + 1 <= n:
        left = list(range(i1 - 2 * block, i1 - block))
        if left and left[0] >= 1 and all(c in free_set for c in left):
            yield left
        right = list(range(i2 + block + 1, i2 + 2 * block + 1))
        if right and right[-1] <= n and all(c in free_set for c in right):
            yield right
        block *= 2
    for length in range(1, len(free) + 1):
        yield from _runs(free, length)


def differentiates(f: BooleanFunction, i1: int, i2: int, fixed: Sequence[int] = ()) -> Optional[int]:
    """
    Search an assignment v separating wires i1 and i2 of f.

    Args:
        f: Function of width n
        i1: First wire (1-based)
        i2: Second wire, i1 < i2
        fixed: Wires K held at 0, disjoint from {i1, i2}

    Returns:
        int: packed v with 1s only outside K and {i1, i2} such that
        f(v + e_i1) != f(v + e_i2), or None when no v exists
    """
    n = f.width
    fixed = set(fixed)
    if not (1 <= i1 < i2 <= n):
        raise UsageError(f"Need 1 <= i1 < i2 <= {n}, got i1={i1}, i2={i2}")
    if fixed & {i1, i2} or any(k < 1 or k > n for k in fixed):
        raise UsageError(f"Fixed wires {sorted(fixed)} must avoid i1, i2 and lie in 1..{n}")
    if len(fixed) + 2 > n:
        raise UsageError("Too many fixed wires")

    bit1 = coordinate_bit(n, i1)
    bit2 = coordinate_bit(n, i2)
    free = [c for c in range(1, n + 1) if c not in fixed and c != i1 and c != i2]

    def separates(v: int) -> bool:
        return f.evaluate(v | bit1) != f.evaluate(v | bit2)

    tried = set()
    for run in _candidate_runs(n, i1, i2, free):
        v = sum(coordinate_bit(n, c) for c in run)
        if v in tried:
            continue
        tried.add(v)
        if separates(v):
            return v

    logger.debug("No run separates %d and %d; exhaustive search over %d wires", i1, i2, len(free))
    for chosen in itertools.product((0, 1), repeat=len(free)):
        v = sum(coordinate_bit(n, c) for c, on in zip(free, chosen) if on)
        if v not in tried and separates(v):
            return v
    return None


def refute_arity(m: int, n_override: Optional[int] = None, fn: Optional[BooleanFunction] = None,
                 max_width: Optional[int] = None, max_arity: Optional[int] = None) -> RefutationReport:
    """
    Check the counterexample against every placement of an arity-m cell.

    Args:
        m: Largest cell arity, at least 2
        n_override: Width to use instead of 2^(m+1) + 4
        fn: Function to check instead of the counterexample (harness self-tests)
        max_width: Widest sweep allowed (default SWEEP_MAX_WIDTH)
        max_arity: Largest accepted m (default REFUTE_MAX_ARITY)

    Returns:
        RefutationReport: failures empty iff every (i1, i2, K) is separated
    """
    from secorder import current_config
    settings = current_config()
    max_width = settings['SWEEP_MAX_WIDTH'] if max_width is None else max_width
    max_arity = settings['REFUTE_MAX_ARITY'] if max_arity is None else max_arity

    if not isinstance(m, int) or m < 2:
        raise UsageError(f"Cell arity must be at least 2, got {m}")
    if m > max_arity:
        raise ResourceLimitError(f"Arity {m} exceeds the refutation budget {max_arity}")
    n = default_width(m) if n_override is None else n_override
    if n > max_width:
        raise ResourceLimitError(f"Width {n} exceeds the sweep limit {max_width}")
    if n < m:
        raise UsageError(f"Width {n} is smaller than the cell arity {m}")

    f = fn if fn is not None else counterexample_fn(n)
    if f.width != n:
        raise UsageError(f"Function width {f.width} does not match n = {n}")

    report = RefutationReport(m=m, n=n)
    report.increasing = is_increasing(f, max_width)
    report.contractive = is_contractive(f, max_width)
    report.strictly_increasing = is_strictly_increasing(f, max_width)
    # A permutation action is invertible; anything else is non-invertible
    report.non_invertible = not (report.increasing and report.contractive and permutes_units(f))

    for i1, i2 in itertools.combinations(range(1, n + 1), 2):
        report.pairs_checked += 1
        others = [c for c in range(1, n + 1) if c != i1 and c != i2]
        for fixed in itertools.combinations(others, m - 2):
            placement: Placement = (i1, i2, tuple(fixed))
            report.checks += 1
            v = differentiates(f, i1, i2, fixed)
            if v is None:
                report.failures.append(placement)
            else:
                report.witnesses[placement] = word_to_text(n, v)

    logger.info("Refutation m=%d n=%d: %d pairs, %d placements, %d failures",
                m, n, report.pairs_checked, report.checks, len(report.failures))
    return report
