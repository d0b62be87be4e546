"""
Ground sets, n-tuples of subsets and unordered sections.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from secorder.errors import UsageError

# Canonical orbit representative of an n-multiset: element indices sorted ascending
Section = Tuple[int, ...]


def make_section(elements: Iterable[int]) -> Section:
    """Canonical representative of the Perm_n-orbit of a tuple."""
    return tuple(sorted(elements))


@dataclass(frozen=True)
class GroundSet:
    """
    A finite ground set N.

    Labels are opaque strings; internally elements are the dense indices
    0..c-1 in label order.
    """
    labels: Tuple[str, ...]
    index: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(label) for label in self.labels)
        object.__setattr__(self, 'labels', labels)
        if not labels:
            raise UsageError("A ground set needs at least one element")
        index = {label: i for i, label in enumerate(labels)}
        if len(index) != len(labels):
            raise UsageError("Ground set labels must be pairwise distinct")
        object.__setattr__(self, 'index', index)

    @classmethod
    def of(cls, labels: Iterable) -> 'GroundSet':
        return cls(tuple(labels))

    @classmethod
    def numbered(cls, size: int) -> 'GroundSet':
        """Ground set {"1", ..., "size"}."""
        return cls(tuple(str(i) for i in range(1, size + 1)))

    def __len__(self) -> int:
        return len(self.labels)

    def index_of(self, label) -> int:
        try:
            return self.index[str(label)]
        except KeyError:
            raise UsageError(f"Unknown element: {label!r}")

    def label_of(self, element: int) -> str:
        return self.labels[element]


@dataclass(frozen=True)
class SetFamily:
    """
    An n-tuple (F_1, ..., F_n) of subsets of a ground set.

    Components may be empty (lift outputs are); section and order operations
    check all_nonempty and refuse such families.
    """
    ground: GroundSet
    components: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        components = tuple(frozenset(component) for component in self.components)
        object.__setattr__(self, 'components', components)
        if not components:
            raise UsageError("A family needs at least one component")
        size = len(self.ground)
        for i, component in enumerate(components, start=1):
            for element in component:
                if not isinstance(element, int) or element < 0 or element >= size:
                    raise UsageError(f"Component {i} holds {element!r}, not an element of the ground set")

    @classmethod
    def from_labels(cls, ground: GroundSet, components: Sequence[Iterable]) -> 'SetFamily':
        """Build a family from components given as element labels."""
        return cls(ground, tuple(frozenset(ground.index_of(label) for label in component)
                                 for component in components))

    @property
    def arity(self) -> int:
        return len(self.components)

    @property
    def all_nonempty(self) -> bool:
        return all(self.components)

    @cached_property
    def characteristic_values(self) -> List[int]:
        """Packed chi(a, F) for every element index a."""
        n = self.arity
        values = [0] * len(self.ground)
        for i, component in enumerate(self.components):
            bit = 1 << (n - 1 - i)
            for element in component:
                values[element] |= bit
        return values

    def component_labels(self) -> List[List[str]]:
        """Components as sorted label lists, coordinate order."""
        return [[self.ground.label_of(a) for a in sorted(component)] for component in self.components]

    def __repr__(self) -> str:
        parts = ', '.join('{' + ','.join(labels) + '}' for labels in self.component_labels())
        return f"<SetFamily ({parts})>"
