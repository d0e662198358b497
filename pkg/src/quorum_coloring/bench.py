#!/usr/bin/env python3
"""
Linear-scaling harness for the per-level solver.

For each height the family's tree is generated, solved `repetitions` times, and
the median wall time and exact operation count are recorded. A row fails when the
operation count reaches 5n, or when the time per doubling of n between consecutive
rows exceeds the configured ratio.
"""

import logging
import math
import statistics
import time
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .config import Config, get_config
from .exceptions import ShapeSpecError
from .generators import gen_perfect_per_level
from .solver import algo2_solve

logger = logging.getLogger(__name__)


@dataclass
class BenchRow:
    height: int
    n: int
    median_seconds: float
    ops: int
    ratio: Optional[float] = None

    @property
    def ops_ok(self) -> bool:
        return self.ops < 5 * self.n

    def to_dict(self) -> Dict[str, Any]:
        return {
            'height': self.height,
            'n': self.n,
            'median_seconds': self.median_seconds,
            'ops': self.ops,
            'ops_limit': 5 * self.n,
            'ops_ok': self.ops_ok,
            'ratio': self.ratio,
        }


@dataclass
class BenchReport:
    family: str
    rows: List[BenchRow] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> Dict[str, Any]:
        return {
            'family': self.family,
            'ok': self.ok,
            'rows': [row.to_dict() for row in self.rows],
            'failures': self.failures,
        }


def family_counts(family: str, height: int) -> List[int]:
    """
    Child counts for one height of a family: "nary:N" repeats N, "levels:a,b,..."
    cycles through the pattern (so "levels:1" is the path family).
    """
    kind, _, rest = family.partition(':')
    try:
        values = [int(part) for part in rest.split(',')] if rest.strip() else []
    except ValueError:
        raise ShapeSpecError(f"Malformed family {family!r}") from None
    if kind == 'nary' and len(values) == 1:
        return values * height
    if kind == 'levels' and values:
        return [values[i % len(values)] for i in range(height)]
    raise ShapeSpecError(f"Unknown family {family!r}, expected 'nary:N' or 'levels:a,b,...'")


def bench_linear(
    family: str,
    heights: Sequence[int],
    repetitions: Optional[int] = None,
    config: Optional[Config] = None,
) -> BenchReport:
    config = config or get_config()
    if repetitions is None:
        repetitions = int(config.get('benchmark', 'repetitions'))
    repetitions = max(1, repetitions)
    threshold = float(config.get('benchmark', 'ratio_threshold'))
    min_timed = float(config.get('benchmark', 'min_timed_seconds'))
    report = BenchReport(family=family)

    heights = list(heights)
    if heights:
        algo2_solve(gen_perfect_per_level(family_counts(family, heights[0]), config.size_cap))

    previous: Optional[BenchRow] = None
    for h in heights:
        tree = gen_perfect_per_level(family_counts(family, h), config.size_cap)
        times = []
        ops = 0
        for _ in range(repetitions):
            start = time.perf_counter()
            _, trace = algo2_solve(tree)
            times.append(time.perf_counter() - start)
            ops = trace.ops.total
        row = BenchRow(height=h, n=tree.n, median_seconds=statistics.median(times), ops=ops)

        if not row.ops_ok:
            report.failures.append(f"h={h}: {row.ops} operations, limit 5n = {5 * row.n}")
        if (
            previous is not None
            and row.n >= 1.5 * previous.n
            and min(row.median_seconds, previous.median_seconds) >= min_timed
        ):
            # time growth per doubling of n
            exponent = math.log(2) / math.log(row.n / previous.n)
            row.ratio = (row.median_seconds / previous.median_seconds) ** exponent
            if row.ratio > threshold:
                report.failures.append(
                    f"h={h}: time ratio per doubling {row.ratio:.2f} exceeds {threshold}"
                )
        logger.info(f"Bench {family} h={h}: n={row.n}, ops={row.ops}, t={row.median_seconds:.4f}s")
        report.rows.append(row)
        previous = row
    return report
