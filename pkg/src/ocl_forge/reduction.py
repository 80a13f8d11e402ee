"""Row/column D-factor reduction and the bookkeeping that undoes it.

Factoring D^l out of row i of H(D) delays syndrome subsequence i by l;
factoring it out of column j delays error subsequence j by l.  ``reduce``
repeats row and column passes until every line is delay-free and records the
total delay per line in a ShiftLedger.

Both polynomial matrices and exponent (monomial) matrices are accepted; the
result has the same type as the input.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .errors import AdvanceUnderflow, DegenerateMatrix, WidthMismatch
from .poly import (
    COLUMN,
    ROW,
    BitSymbolSequence,
    Gf2PolyMatrix,
    line_valuation,
    overall_constraint_length,
    reciprocal_rows,
    shift_line,
)
from .qc import ExponentMatrix

Matrix = Union[Gf2PolyMatrix, ExponentMatrix]

ERROR = "error"
SYNDROME = "syndrome"
TO_REDUCED = "to_reduced"
TO_ORIGINAL = "to_original"


@dataclass(frozen=True)
class ShiftLedger:
    row_delays: tuple[int, ...]
    col_delays: tuple[int, ...]
    reversed: bool = False

    @classmethod
    def zero(cls, rows: int, cols: int, reversed: bool = False) -> ShiftLedger:
        return cls((0,) * rows, (0,) * cols, reversed)

    @property
    def is_zero(self) -> bool:
        return not any(self.row_delays) and not any(self.col_delays)


@dataclass(frozen=True)
class ReducedMatrix:
    matrix: Matrix
    ledger: ShiftLedger
    ocl: int = field(default=-1)

    def __post_init__(self):
        object.__setattr__(self, "ocl", ocl(self.matrix))


def ocl(M: Matrix) -> int:
    if isinstance(M, ExponentMatrix):
        return M.ocl()
    return overall_constraint_length(M)


def reciprocal(M: Matrix) -> Matrix:
    """Reciprocal dual: each row reversed within its own constraint length."""
    if isinstance(M, ExponentMatrix):
        return ExponentMatrix(M.m, tuple(tuple(max(row) - x for x in row) for row in M.exps))
    return reciprocal_rows(M)


def _reduce_exponents(E: ExponentMatrix):
    grid = [list(row) for row in E.exps]
    rows, cols = E.shape
    rd, cd = [0] * rows, [0] * cols
    changed = True
    while changed:
        changed = False
        for i, row in enumerate(grid):
            v = min(row)
            if v:
                grid[i] = [x - v for x in row]
                rd[i] += v
                changed = True
        for j in range(cols):
            v = min(row[j] for row in grid)
            if v:
                for row in grid:
                    row[j] -= v
                cd[j] += v
                changed = True
    return ExponentMatrix(E.m, grid), rd, cd


def _reduce_polys(M: Gf2PolyMatrix):
    rd, cd = [0] * M.rows, [0] * M.cols
    for j in range(M.cols):
        if line_valuation(M.column(j)) is None:
            raise DegenerateMatrix(f"column {j + 1} is all zero")
    changed = True
    while changed:
        changed = False
        for i in range(M.rows):
            v = line_valuation(M.entries[i])
            if v:
                M = shift_line(M, ROW, i, v)
                rd[i] += v
                changed = True
        for j in range(M.cols):
            v = line_valuation(M.column(j))
            if v:
                M = shift_line(M, COLUMN, j, v)
                cd[j] += v
                changed = True
    return M, rd, cd


def reduce(M: Matrix, reversed: bool = False) -> ReducedMatrix:
    """Factor D out of rows, then columns, alternating until nothing divides.

    Each productive pass lowers the OCL, so the loop terminates.
    """
    if isinstance(M, ExponentMatrix):
        out, rd, cd = _reduce_exponents(M)
    else:
        out, rd, cd = _reduce_polys(M)
    return ReducedMatrix(out, ShiftLedger(tuple(rd), tuple(cd), reversed))


def reciprocal_then_reduce(M: Matrix) -> ReducedMatrix:
    """Reduce the reciprocal dual of ``M``; its OCL is the eta metric.

    The ledger is flagged ``reversed``: its delays act on time-reversed sequences.
    """
    return reduce(reciprocal(M), reversed=True)


def double_reduce(M: Matrix) -> tuple[int, int, ReducedMatrix]:
    """Reduce, take the reciprocal, reduce again.  Returns (mu, mu_prime, final)."""
    first = reduce(M)
    final = reciprocal_then_reduce(first.matrix)
    return first.ocl, final.ocl, final


def _delay(stream, l):
    if l == 0:
        return list(stream)
    return ([0] * l + list(stream))[: len(stream)]


def _advance(stream, l, label):
    if l == 0:
        return list(stream)
    if any(stream[:l]):
        raise AdvanceUnderflow(f"{label}: advancing by {l} discards nonzero symbols")
    return list(stream[l:]) + [0] * min(l, len(stream))


def apply_ledger(ledger: ShiftLedger, seq: BitSymbolSequence, kind: str, direction: str) -> BitSymbolSequence:
    """Move an error or syndrome sequence between original and reduced matrices.

    Errors: ``to_reduced`` delays stream j by col_delays[j]; ``to_original``
    advances it.  Syndromes: ``to_original`` delays stream i by row_delays[i];
    ``to_reduced`` advances it.  Sequence length is preserved; advanced
    streams are zero-filled at the end.

    With these, for any error ``e``::

        convolve_syndrome(M, e) == apply_ledger(L, convolve_syndrome(R, apply_ledger(L, e, "error", "to_reduced")),
                                                "syndrome", "to_original")

    A ``reversed`` ledger describes a reciprocal matrix, so ``seq`` must
    already be in time-reversed order.
    """
    if kind == ERROR:
        delays = ledger.col_delays
        forward = direction == TO_REDUCED
    elif kind == SYNDROME:
        delays = ledger.row_delays
        forward = direction == TO_ORIGINAL
    else:
        raise ValueError(f"kind must be {ERROR!r} or {SYNDROME!r}")
    if direction not in (TO_REDUCED, TO_ORIGINAL):
        raise ValueError(f"direction must be {TO_REDUCED!r} or {TO_ORIGINAL!r}")
    if seq.width != len(delays):
        raise WidthMismatch(f"{kind} width {seq.width} != ledger width {len(delays)}")
    streams = []
    for j, l in enumerate(delays):
        s = seq.stream(j)
        streams.append(_delay(s, l) if forward else _advance(s, l, f"{kind} stream {j + 1}"))
    if not len(seq):
        return seq
    return BitSymbolSequence.from_streams(streams)
