"""
Service module for families of sets and their unordered sections.
"""

import itertools
import logging
import random
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from secorder.errors import DomainError, ResourceLimitError, UsageError
from secorder.models.bitword import BitWord
from secorder.models.family import GroundSet, Section, SetFamily, make_section
from secorder.utils.bit_utils import check_width, word_to_text
from secorder.utils.matching_utils import has_perfect_matching

logger = logging.getLogger(__name__)


def require_nonempty(family: SetFamily, name: str = 'family'):
    """Refuse families with an empty component."""
    for i, component in enumerate(family.components, start=1):
        if not component:
            raise DomainError(f"Component {i} of {name} is empty")


def require_same_setting(x: SetFamily, y: SetFamily):
    """X and Y must share the arity and the ground set."""
    if x.arity != y.arity:
        raise UsageError(f"Arity mismatch: {x.arity} vs {y.arity}")
    if x.ground != y.ground:
        raise UsageError("X and Y are defined over different ground sets")


def chi(a, family: SetFamily) -> BitWord:
    """
    Characteristic word of an element along a family.

    Args:
        a: Element label
        family: The family F

    Returns:
        BitWord: bit i is 1 iff a belongs to F_i
    """
    element = family.ground.index_of(a)
    return BitWord(family.arity, family.characteristic_values[element])


def section_product(family: SetFamily) -> int:
    """|F_1| * ... * |F_n|."""
    product = 1
    for component in family.components:
        product *= len(component)
    return product


def enumerate_sections(family: SetFamily, cap: Optional[int] = None) -> Set[Section]:
    """
    All unordered sections of a family, by brute force.

    Args:
        family: The family F, all components nonempty
        cap: Largest product of component sizes to enumerate (default ENUMERATION_CAP)

    Returns:
        set: Sorted tuples {sort(a_1..a_n) : a_i in F_i}
    """
    require_nonempty(family)
    if cap is None:
        from secorder import current_config
        cap = current_config()['ENUMERATION_CAP']
    product = section_product(family)
    if product > cap:
        raise ResourceLimitError(f"Section enumeration needs {product} tuples, cap is {cap}")

    components = [sorted(component) for component in family.components]
    return {make_section(choice) for choice in itertools.product(*components)}


def is_section(section: Sequence[int], family: SetFamily) -> bool:
    """
    Decide whether a multiset of elements is an unordered section of a family.

    Builds the bipartite graph with an edge (i, j) iff s_i belongs to F_j and
    asks for a perfect matching.

    Args:
        section: Element indices s_1..s_n (any order)
        family: The family F, all components nonempty

    Returns:
        bool: True if some permutation places every s_i in its own component
    """
    if len(section) != family.arity:
        raise UsageError(f"Section of length {len(section)} tested against a family of arity {family.arity}")
    require_nonempty(family)
    adjacency = [[j for j, component in enumerate(family.components) if element in component]
                 for element in section]
    return has_perfect_matching(adjacency, family.arity)


def divide(sections: Iterable[Section], divisor: Iterable[int]) -> Set[Section]:
    """
    The division T / Z of a collection of n-multisets by a set.

    Args:
        sections: T, canonical n-tuples (n >= 2)
        divisor: Z, a nonempty set of element indices

    Returns:
        set: The (n-1)-tuples r such that sort([a] + r) lies in T for every a in Z
    """
    table = {make_section(s) for s in sections}
    divisor = set(divisor)
    if not divisor:
        raise DomainError("Cannot divide by the empty set")
    if not table:
        return set()

    arities = {len(s) for s in table}
    if len(arities) != 1:
        raise UsageError(f"Sections of mixed lengths: {sorted(arities)}")
    n = arities.pop()
    if n < 2:
        raise UsageError("Division needs sections of length at least 2")

    # Every quotient comes from removing one a in Z from some member of T
    candidates = set()
    for s in table:
        for position, element in enumerate(s):
            if element in divisor and (position == 0 or s[position - 1] != element):
                candidates.add(s[:position] + s[position + 1:])

    return {r for r in candidates
            if all(make_section(r + (a,)) in table for a in divisor)}


def _component_key(component: FrozenSet[int]) -> Tuple[int, Tuple[int, ...]]:
    return len(component), tuple(sorted(component))


def canonical_form(family: SetFamily) -> List[Tuple[int, ...]]:
    """
    Components sorted by cardinality then index list.

    Two families over the same ground have equal canonical forms iff one is
    a coordinate permutation of the other.
    """
    return [key[1] for key in sorted(_component_key(c) for c in family.components)]


def canonical_family(n: int, max_width: Optional[int] = None) -> SetFamily:
    """
    The family over B^n minus the zero word whose characteristic map is the identity.

    Args:
        n: Arity
        max_width: Largest accepted n (default CANONICAL_MAX_WIDTH)

    Returns:
        SetFamily: ground labels are the nonzero words, component i holds the words with bit i set
    """
    if max_width is None:
        from secorder import current_config
        max_width = current_config()['CANONICAL_MAX_WIDTH']
    if not isinstance(n, int) or n < 1 or n > max_width:
        raise UsageError(f"Canonical family width must be between 1 and {max_width}, got {n}")
    check_width(n)

    words = list(range(1, 1 << n))
    ground = GroundSet(tuple(word_to_text(n, u) for u in words))
    components = []
    for i in range(n):
        bit = 1 << (n - 1 - i)
        components.append(frozenset(index for index, u in enumerate(words) if u & bit))
    return SetFamily(ground, tuple(components))


def pointwise_included(x: SetFamily, y: SetFamily) -> bool:
    """X_i is a subset of Y_i for every i."""
    require_same_setting(x, y)
    return all(xi <= yi for xi, yi in zip(x.components, y.components))


def hall_condition(x: SetFamily, y: SetFamily) -> bool:
    """
    Necessary condition for X below Y: every element lies in at most as many
    components of X as of Y.
    """
    require_same_setting(x, y)
    return all(cx.bit_count() <= cy.bit_count()
               for cx, cy in zip(x.characteristic_values, y.characteristic_values))


def variant_hall_applies(x: SetFamily, y: SetFamily) -> bool:
    """
    Check the hypotheses under which hall_condition is also sufficient.

    Returns:
        bool: True if a -> chi_Y(a) is a bijection onto the nonzero words and
        chi_Y(a) -> chi_X(a) is increasing
    """
    require_same_setting(x, y)
    n = y.arity
    chi_y = y.characteristic_values
    if len(chi_y) != (1 << n) - 1 or 0 in chi_y or len(set(chi_y)) != len(chi_y):
        return False

    graph: Dict[int, int] = dict(zip(chi_y, x.characteristic_values))
    for u, fu in graph.items():
        for v, fv in graph.items():
            if u & ~v == 0 and fu & ~fv != 0:
                return False
    return True


def covering_components(x: SetFamily, y: SetFamily) -> Optional[List[int]]:
    """
    For each j an index i with X_i contained in Y_j.

    Returns:
        list: 0-based i for every j, or None if some Y_j contains no X_i
    """
    require_same_setting(x, y)
    choice = []
    for yj in y.components:
        found = next((i for i, xi in enumerate(x.components) if xi <= yj), None)
        if found is None:
            return None
        choice.append(found)
    return choice


def common_component(x: SetFamily, y: SetFamily) -> Optional[Tuple[int, int]]:
    """First 0-based pair (i, j) with X_i = Y_j, or None."""
    require_same_setting(x, y)
    for i, xi in enumerate(x.components):
        for j, yj in enumerate(y.components):
            if xi == yj:
                return i, j
    return None


def permute_family(family: SetFamily, sigma: Sequence[int]) -> SetFamily:
    """
    The family sigma . F, with component i of F moved to position sigma[i].

    Args:
        family: The family F
        sigma: 0-based permutation of range(n)

    Returns:
        SetFamily: sigma . F
    """
    n = family.arity
    if sorted(sigma) != list(range(n)):
        raise UsageError(f"Not a permutation of {n} coordinates: {tuple(sigma)}")
    components: List[FrozenSet[int]] = [frozenset()] * n
    for i, component in enumerate(family.components):
        components[sigma[i]] = component
    return SetFamily(family.ground, tuple(components))


def random_family(rng: random.Random, n: int, c: int, ground: Optional[GroundSet] = None) -> SetFamily:
    """
    A family whose components are uniform nonempty subsets of the ground set.

    Args:
        rng: Seeded random source
        n: Arity
        c: Ground set size; the ground is {"1", ..., "c"} unless given
        ground: Ground set of size c to reuse

    Returns:
        SetFamily: n components, each drawn independently
    """
    if n < 1 or c < 1:
        raise UsageError(f"Random families need n >= 1 and c >= 1, got n={n}, c={c}")
    ground = ground or GroundSet.numbered(c)
    components = []
    for _ in range(n):
        bits = 0
        while bits == 0:
            bits = rng.getrandbits(c)
        components.append(frozenset(a for a in range(c) if bits >> a & 1))
    return SetFamily(ground, tuple(components))


def all_families(n: int, c: int, ground: Optional[GroundSet] = None) -> Iterator[SetFamily]:
    """Every n-tuple of nonempty subsets of a c-element ground set."""
    ground = ground or GroundSet.numbered(c)
    subsets = [frozenset(a for a in range(c) if bits >> a & 1) for bits in range(1, 1 << c)]
    for components in itertools.product(subsets, repeat=n):
        yield SetFamily(ground, components)


def render_section(section: Sequence[int], ground: GroundSet) -> str:
    """Bracket notation with labels, e.g. '[1,3]'."""
    return '[' + ','.join(ground.label_of(a) for a in section) + ']'
