"""Exhaustive sweep over canonical block-row shift patterns.

Every cyclic shift of a block row, once its row factor is removed, equals one
of that row's canonical patterns, so the Cartesian product of patterns covers
every row-shifted unwrapping of the QC matrix.
"""

from __future__ import annotations

import itertools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .qc import ExponentMatrix, canonical_row_patterns
from .reduction import double_reduce, reciprocal_then_reduce

METRICS = ("mu", "eta", "mu_prime", "delta_mu")


@dataclass(frozen=True, order=True)
class SweepRecord:
    id: tuple[int, ...]  # 1-based pattern index per block row
    mu: int
    eta: int
    mu_prime: int
    delta_mu: int
    spreads: tuple[int, ...]


@dataclass(frozen=True)
class SweepReport:
    records: tuple[SweepRecord, ...]

    def __len__(self):
        return len(self.records)

    def values(self, metric: str) -> list[int]:
        if metric not in METRICS:
            raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
        return [getattr(r, metric) for r in self.records]

    def extrema(self, metric: str) -> tuple[int, int]:
        vals = self.values(metric)
        return min(vals), max(vals)

    def get(self, id) -> SweepRecord:
        id = tuple(id)
        for r in self.records:
            if r.id == id:
                return r
        raise KeyError(id)


def enumerate_patterns(E: ExponentMatrix):
    """Yield (pattern id, stacked pattern matrix) in lexicographic id order."""
    per_row = [canonical_row_patterns(row, E.m) for row in E.exps]
    for idx in itertools.product(*(range(len(p)) for p in per_row)):
        rows = tuple(per_row[b][k] for b, k in enumerate(idx))
        yield tuple(k + 1 for k in idx), ExponentMatrix(E.m, rows)


def evaluate_pattern(pid, S: ExponentMatrix) -> SweepRecord:
    mu, mu_prime, _ = double_reduce(S)
    eta = reciprocal_then_reduce(S).ocl
    return SweepRecord(pid, mu, eta, mu_prime, mu - mu_prime, S.spreads())


def _evaluate(item):
    return evaluate_pattern(*item)


def sweep(E: ExponentMatrix, workers: int = 1) -> SweepReport:
    """Compute mu, eta, mu' and column spreads for every canonical pattern.

    ``workers > 1`` evaluates patterns in a process pool; records are sorted
    by id afterwards so the report does not depend on scheduling.
    """
    items = list(enumerate_patterns(E))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_evaluate, items, chunksize=16))
    else:
        records = [evaluate_pattern(pid, S) for pid, S in items]
    records.sort(key=lambda r: r.id)
    return SweepReport(tuple(records))


def delta_filter(report: SweepReport, delta: int) -> list[SweepRecord]:
    """Records whose every column spread is at most ``delta``."""
    if delta < 0:
        raise ValueError("delta must be nonnegative")
    return [r for r in report.records if max(r.spreads) <= delta]


def histogram(report: SweepReport, metric: str) -> list[tuple[int, int]]:
    return sorted(Counter(report.values(metric)).items())

