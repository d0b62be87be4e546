"""
Boolean functions B^n -> B^n behind a single evaluation contract.
"""

import logging
import random
from typing import Callable, Iterable, List, Optional

import numpy as np

from secorder.errors import ResourceLimitError, UsageError
from secorder.models.bitword import BitWord
from secorder.utils.bit_utils import check_width, mask

logger = logging.getLogger(__name__)

Rule = Callable[[int], int]

SPOT_CHECKS = 16


def _table_dtype(width: int):
    return np.uint32 if width <= 32 else np.uint64


class BooleanFunction:
    """
    A function f: B^n -> B^n given by a closed-form rule, a truth table, or both.

    Rules map a packed input to a packed output. Tables list the 2^n outputs
    indexed by packed input ('00...0' first). A rule-backed function builds
    its table the first time a sweep asks for it and keeps it.
    """

    def __init__(self, width: int, rule: Optional[Rule] = None,
                 table: Optional[Iterable[int]] = None, name: Optional[str] = None):
        self.width = check_width(width)
        self.name = name or 'f'
        self._rule = rule
        self._table = None

        if rule is None and table is None:
            raise UsageError("A boolean function needs a rule or a truth table")

        if table is not None:
            self._table = self._checked_table(table)
            if rule is not None:
                self._spot_check()

    @classmethod
    def from_table(cls, width: int, outputs: Iterable[int], name: Optional[str] = None) -> 'BooleanFunction':
        return cls(width, table=outputs, name=name)

    @classmethod
    def from_rule(cls, width: int, rule: Rule, name: Optional[str] = None) -> 'BooleanFunction':
        return cls(width, rule=rule, name=name)

    def _checked_table(self, outputs) -> np.ndarray:
        values = np.asarray(outputs if isinstance(outputs, np.ndarray) else list(outputs), dtype=np.int64)
        if values.ndim != 1 or len(values) != 1 << self.width:
            raise UsageError(f"Truth table of width {self.width} needs {1 << self.width} rows, got {values.size}")
        bad = np.flatnonzero((values < 0) | (values > mask(self.width)))
        if bad.size:
            u = int(bad[0])
            raise UsageError(f"Output {int(values[u])} for input {u} does not fit in {self.width} bits")
        return values.astype(_table_dtype(self.width))

    def _spot_check(self):
        rng = random.Random(self.width)
        size = 1 << self.width
        probes = {0, size - 1}
        probes.update(rng.randrange(size) for _ in range(SPOT_CHECKS))
        for u in sorted(probes):
            if int(self._table[u]) != self._rule(u):
                raise UsageError(f"Truth table of {self.name} disagrees with its rule at input {u}")

    @property
    def has_table(self) -> bool:
        return self._table is not None

    def evaluate(self, u: int) -> int:
        """Packed output for a packed input."""
        if self._table is not None:
            return int(self._table[u])
        return self._rule(u)

    def __call__(self, word: BitWord) -> BitWord:
        if word.width != self.width:
            raise UsageError(f"Width mismatch: {self.name} takes {self.width} bits, got {word.width}")
        return BitWord(self.width, self.evaluate(word.value))

    def table(self, max_width: Optional[int] = None) -> np.ndarray:
        """
        Truth table as an array, materialized on first use.

        Args:
            max_width: Widest table allowed (default SWEEP_MAX_WIDTH)

        Returns:
            np.ndarray: 2^n outputs indexed by packed input
        """
        if self._table is not None:
            return self._table
        if max_width is None:
            from secorder import current_config
            max_width = current_config()['SWEEP_MAX_WIDTH']
        if self.width > max_width:
            raise ResourceLimitError(f"Width {self.width} exceeds the sweep limit {max_width}")
        logger.debug("Materializing %s over 2^%d inputs", self.name, self.width)
        rule = self._rule
        self._table = np.fromiter((rule(u) for u in range(1 << self.width)),
                                  dtype=_table_dtype(self.width), count=1 << self.width)
        return self._table

    def outputs(self, max_width: Optional[int] = None) -> List[int]:
        """Truth table as a list of ints."""
        return [int(v) for v in self.table(max_width)]

    def __repr__(self) -> str:
        kind = 'table' if self.has_table else 'rule'
        return f"<BooleanFunction {self.name} width={self.width} ({kind})>"
