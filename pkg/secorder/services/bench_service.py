"""
Benchmark service comparing the cover-map check with the enumeration oracle.
"""

import logging
import random
import time
from dataclasses import dataclass, field
from typing import List, Optional

from secorder.errors import UsageError
from secorder.services.family_service import random_family, section_product
from secorder.services.order_service import fast_check, naive_check

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    """Timings for one (n, c) setting over a number of seeded trials."""
    n: int
    c: int
    trials: int = 0
    fast_seconds: float = 0.0
    naive_seconds: float = 0.0
    compared: int = 0
    agreements: int = 0
    oracle_skipped: int = 0

    @property
    def disagreements(self) -> int:
        return self.compared - self.agreements

    @property
    def status(self) -> str:
        if self.disagreements:
            return 'DISAGREEMENT'
        if self.oracle_skipped == self.trials and self.trials:
            return 'oracle-skipped'
        return 'ok'

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'c': self.c,
            'trials': self.trials,
            'fast_seconds': round(self.fast_seconds, 6),
            'naive_seconds': round(self.naive_seconds, 6),
            'compared': self.compared,
            'agreements': self.agreements,
            'oracle_skipped': self.oracle_skipped,
            'status': self.status,
        }


@dataclass
class BenchReport:
    seed: int
    rows: List[BenchRow] = field(default_factory=list)

    @property
    def has_disagreement(self) -> bool:
        return any(row.disagreements for row in self.rows)

    def to_dict(self) -> dict:
        return {'seed': self.seed, 'rows': [row.to_dict() for row in self.rows]}


def parse_range(text: str) -> List[int]:
    """
    Parse '5', '2-4' or '2,3,8' into a list of positive integers.

    Args:
        text: Option value

    Returns:
        list: the values in the given order (ranges ascending, inclusive)
    """
    values = []
    try:
        for part in str(text).split(','):
            part = part.strip()
            if '-' in part:
                low, high = (int(bound) for bound in part.split('-', 1))
                if low > high:
                    raise UsageError(f"Empty range: {part}")
                values.extend(range(low, high + 1))
            else:
                values.append(int(part))
    except ValueError as e:
        if isinstance(e, UsageError):
            raise
        raise UsageError(f"Not a value, range or list: {text!r}")
    if not values or any(v < 1 for v in values):
        raise UsageError(f"Values must be positive: {text!r}")
    return values


def run_bench(ns: List[int], cs: List[int], trials: int, seed: Optional[int] = None,
              cap: Optional[int] = None, max_width: Optional[int] = None) -> BenchReport:
    """
    Time fast_check against naive_check on seeded random pairs.

    One random.Random(seed) drives every instance, settings taken in the
    order given, so a run is reproducible from (seed, ns, cs, trials). The
    oracle is skipped for pairs whose section product exceeds the cap.

    Args:
        ns: Arities
        cs: Ground set sizes
        trials: Pairs per setting, 0 for an empty table
        seed: Random seed (default BENCH_SEED)
        cap: Enumeration cap (default ENUMERATION_CAP)
        max_width: Sweep limit for fast_check (default SWEEP_MAX_WIDTH)

    Returns:
        BenchReport: one row per (n, c)
    """
    from secorder import current_config
    settings = current_config()
    seed = settings['BENCH_SEED'] if seed is None else seed
    cap = settings['ENUMERATION_CAP'] if cap is None else cap
    if trials < 0:
        raise UsageError(f"Trials must be non-negative, got {trials}")

    report = BenchReport(seed=seed)
    if trials == 0:
        return report

    rng = random.Random(seed)
    for n in ns:
        for c in cs:
            row = BenchRow(n=n, c=c)
            for _ in range(trials):
                x = random_family(rng, n, c)
                y = random_family(rng, n, c, ground=x.ground)
                row.trials += 1

                start = time.perf_counter()
                fast = fast_check(x, y, max_width=max_width)
                row.fast_seconds += time.perf_counter() - start

                if section_product(x) > cap:
                    row.oracle_skipped += 1
                    continue
                start = time.perf_counter()
                naive = naive_check(x, y, cap=cap)
                row.naive_seconds += time.perf_counter() - start
                row.compared += 1
                if fast == naive:
                    row.agreements += 1
                else:
                    logger.warning("fast_check and naive_check disagree on %r vs %r", x, y)

            if row.oracle_skipped:
                logger.warning("Oracle skipped for %d of %d pairs at n=%d, c=%d",
                               row.oracle_skipped, row.trials, n, c)
            logger.info("Bench n=%d c=%d: fast %.4fs, naive %.4fs, %d/%d agree",
                        n, c, row.fast_seconds, row.naive_seconds, row.agreements, row.compared)
            report.rows.append(row)
    return report
