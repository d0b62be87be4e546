"""
Service module deciding the section preorder X below Y.
"""

import logging
from typing import Optional, Tuple

from secorder.errors import ResourceLimitError, UsageError
from secorder.models.boolean_function import BooleanFunction
from secorder.models.cover_map import CoverMap
from secorder.models.family import SetFamily
from secorder.services.family_service import (
    enumerate_sections, is_section, require_nonempty, require_same_setting
)
from secorder.utils.bit_utils import fixed_weight_values, set_bits

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def _validate_pair(x: SetFamily, y: SetFamily):
    require_same_setting(x, y)
    require_nonempty(x, 'X')
    require_nonempty(y, 'Y')


def _sweep_limit(x: SetFamily, max_width: Optional[int]):
    if max_width is None:
        from secorder import current_config
        max_width = current_config()['SWEEP_MAX_WIDTH']
    if x.arity > max_width:
        raise ResourceLimitError(f"Arity {x.arity} exceeds the sweep limit {max_width}")


def least_cover_map(x: SetFamily, y: SetFamily) -> CoverMap:
    """
    Sparse seed of the least monotone cover of X along Y.

    Args:
        x: Family X
        y: Family Y over the same ground and arity

    Returns:
        CoverMap: entries[chi_Y(a)] is the join of chi_X(a) over the a sharing that key
    """
    _validate_pair(x, y)
    cover = CoverMap(x.arity)
    for chi_x, chi_y in zip(x.characteristic_values, y.characteristic_values):
        cover.add(chi_y, chi_x)
    logger.debug("Cover map of width %d has %d keys for %d elements",
                 x.arity, len(cover), len(x.ground))
    return cover


def fast_check(x: SetFamily, y: SetFamily, max_width: Optional[int] = None) -> bool:
    """
    Decide X below Y through the least monotone cover.

    Sweeps the words by increasing weight, closing the sparse seed downward
    in place, and fails at the first u whose image is heavier than u.

    Args:
        x: Family X
        y: Family Y
        max_width: Widest sweep allowed (default SWEEP_MAX_WIDTH)

    Returns:
        bool: True iff every section of X is a section of Y
    """
    _validate_pair(x, y)
    _sweep_limit(x, max_width)
    n = x.arity
    f = dict(least_cover_map(x, y).entries)

    for w in range(n + 1):
        for u in fixed_weight_values(n, w):
            v = f.get(u, 0)
            for bit in set_bits(u):
                v |= f.get(u ^ bit, 0)
            f[u] = v
            if v.bit_count() > w:
                logger.debug("Weight violation at level %d: f(%s) = %s",
                             w, format(u, f'0{n}b'), format(v, f'0{n}b'))
                return False
    return True


def naive_check(x: SetFamily, y: SetFamily, cap: Optional[int] = None) -> bool:
    """
    Decide X below Y by testing every section of X against Y.

    Args:
        x: Family X
        y: Family Y
        cap: Enumeration cap for the sections of X (default ENUMERATION_CAP)

    Returns:
        bool: True iff Sec(X) is contained in Sec(Y)
    """
    _validate_pair(x, y)
    sections = enumerate_sections(x, cap=cap)
    return all(is_section(s, y) for s in sections)


def witness(x: SetFamily, y: SetFamily, max_width: Optional[int] = None) -> Optional[BooleanFunction]:
    """
    An increasing contractive f with X contained in lift(f, Y), when X is below Y.

    Returns:
        BooleanFunction: the full table of the least monotone cover, or None
    """
    if not fast_check(x, y, max_width=max_width):
        return None
    table = least_cover_map(x, y).finalize()
    return BooleanFunction.from_table(x.arity, table, name='least monotone cover')


def lift(f: BooleanFunction, y: SetFamily) -> SetFamily:
    """
    The set operator induced by f: a lies in X_i iff f(chi_Y(a)) has a 1 at i.

    Components of the result may be empty.
    """
    if f.width != y.arity:
        raise UsageError(f"Width mismatch: function of width {f.width}, family of arity {y.arity}")
    n = y.arity
    members = [set() for _ in range(n)]
    for element, chi_y in enumerate(y.characteristic_values):
        image = f.evaluate(chi_y)
        for i in range(n):
            if image >> (n - 1 - i) & 1:
                members[i].add(element)
    return SetFamily(y.ground, tuple(frozenset(m) for m in members))


def equiv_check(x: SetFamily, y: SetFamily) -> Optional[Permutation]:
    """
    A permutation sigma with sigma . X = Y, if any.

    Components are matched greedily with multiplicity; sigma[i] = j means
    X_i = Y_j.

    Returns:
        tuple: 0-based images, or None when the canonical forms differ
    """
    require_same_setting(x, y)
    used = [False] * y.arity
    sigma = []
    for xi in x.components:
        match = next((j for j, yj in enumerate(y.components) if not used[j] and yj == xi), None)
        if match is None:
            return None
        used[match] = True
        sigma.append(match)
    return tuple(sigma)
