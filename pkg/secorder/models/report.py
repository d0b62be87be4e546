"""
Case tags of the counterexample function and the refutation report.
"""

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

# (i1, i2, K) with 1-based coordinates and K sorted
Placement = Tuple[int, int, Tuple[int, ...]]


class CaseTag(enum.Enum):
    """Defining lines of the counterexample function, in precedence order."""
    ZERO = 1          # |u| = 0
    SINGLE = 2        # |u| = 1
    EVEN = 3          # |u| even
    PAIR_GAP_ONE = 4  # 1 1 0^l 1 with l > 0
    OTHER_THREE = 5   # |u| = 3 otherwise
    RUN_GAP_ONE = 6   # 1^B 0^B 1 with B = 2^k, k > 1
    ONE_GAP_RUN = 7   # 1 0^B 1^B with B = 2^k, k > 1
    REMAINING = 8     # everything else (odd weight >= 5)

    def __str__(self) -> str:
        return f"({self.value})"


def placement_key(placement: Placement) -> str:
    """Render a placement as 'i1,i2|k1,k2'."""
    i1, i2, fixed = placement
    return f"{i1},{i2}|{','.join(str(k) for k in fixed)}"


@dataclass
class RefutationReport:
    """
    Outcome of checking the counterexample against every arity-m cell placement.

    failures lists the placements without a differentiating assignment;
    witnesses maps each other placement to the assignment found (rendered).
    """
    m: int
    n: int
    pairs_checked: int = 0
    checks: int = 0
    failures: List[Placement] = field(default_factory=list)
    witnesses: Dict[Placement, str] = field(default_factory=dict)
    increasing: bool = False
    contractive: bool = False
    strictly_increasing: bool = False
    non_invertible: bool = False

    @property
    def is_valid(self) -> bool:
        return (not self.failures and self.increasing and self.contractive
                and self.strictly_increasing and self.non_invertible)

    def to_dict(self) -> dict:
        return {
            'm': self.m,
            'n': self.n,
            'pairs_checked': self.pairs_checked,
            'checks': self.checks,
            'failures': [placement_key(p) for p in self.failures],
            'increasing': self.increasing,
            'contractive': self.contractive,
            'strictly_increasing': self.strictly_increasing,
            'non_invertible': self.non_invertible,
            'valid': self.is_valid,
            'witnesses': {placement_key(p): word for p, word in sorted(self.witnesses.items())},
        }
