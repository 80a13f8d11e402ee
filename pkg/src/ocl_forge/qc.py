"""Quasi-cyclic parity-check matrices built from shifted identity circulants.

``I_x`` is the m x m identity with each row cyclically shifted left by x, so
row r carries its single 1 in column (r - x) mod m and the first column has
its 1 in row x, matching the polynomial D^x that unwrapping substitutes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ShapeMismatch
from .poly import Gf2PolyMatrix


def _grid(values, m):
    grid = tuple(tuple(int(x) for x in row) for row in values)
    if not grid or not grid[0]:
        raise ShapeMismatch("need at least one block row and one block column")
    if any(len(row) != len(grid[0]) for row in grid):
        raise ShapeMismatch("ragged block grid")
    if m < 1:
        raise ValueError(f"modulus must be positive, got {m}")
    return grid


@dataclass(frozen=True)
class QcMatrix:
    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = _grid(self.blocks, self.m)
        object.__setattr__(self, "blocks", tuple(tuple(x % self.m for x in row) for row in grid))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.blocks), len(self.blocks[0])


@dataclass(frozen=True)
class ExponentMatrix:
    """Monomial parity-check matrix stored as exponents in [0, m)."""

    m: int
    exps: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        grid = _grid(self.exps, self.m)
        for row in grid:
            for x in row:
                if not 0 <= x < self.m:
                    raise ValueError(f"exponent {x} outside [0, {self.m})")
        object.__setattr__(self, "exps", grid)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.exps), len(self.exps[0])

    @property
    def rows(self) -> int:
        return len(self.exps)

    @property
    def cols(self) -> int:
        return len(self.exps[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.exps)

    def spreads(self) -> tuple[int, ...]:
        """Per-column max minus min."""
        return tuple(max(c) - min(c) for c in zip(*self.exps))

    def ocl(self) -> int:
        return sum(max(row) for row in self.exps)


def expand_scalar(Q: QcMatrix) -> np.ndarray:
    """Binary (b*m) x (c*m) matrix with block (i, j) equal to I_{blocks[i][j]}."""
    m = Q.m
    b, c = Q.shape
    H = np.zeros((b * m, c * m), dtype=np.uint8)
    r = np.arange(m)
    for i in range(b):
        for j in range(c):
            H[i * m + r, j * m + (r - Q.blocks[i][j]) % m] = 1
    return H


def unwrap(Q: QcMatrix) -> ExponentMatrix:
    return ExponentMatrix(Q.m, Q.blocks)


def shift_block_rows(Q: QcMatrix, s: Sequence[int]) -> QcMatrix:
    """Cyclically move the rows of block row i up by ``s[i]`` positions.

    Row r of the result is row r + s[i] of the input, which turns every I_x
    of that block row into I_{x - s[i]}.
    """
    if len(s) != Q.shape[0]:
        raise ShapeMismatch(f"{len(s)} shifts for {Q.shape[0]} block rows")
    return QcMatrix(Q.m, tuple(tuple(x - si for x in row) for row, si in zip(Q.blocks, s)))


def shift_exponent_rows(E: ExponentMatrix, s: Sequence[int]) -> ExponentMatrix:
    if len(s) != E.rows:
        raise ShapeMismatch(f"{len(s)} shifts for {E.rows} rows")
    return ExponentMatrix(E.m, tuple(tuple((x - si) % E.m for x in row) for row, si in zip(E.exps, s)))


def canonical_row_patterns(row: Sequence[int], m: int) -> list[tuple[int, ...]]:
    """Row shifts that zero one entry, ordered by the zeroed column.

    Repeated values in ``row`` yield one pattern, at the first column holding them.
    """
    seen = set()
    out = []
    for v in row:
        if v % m in seen:
            continue
        seen.add(v % m)
        out.append(tuple((e - v) % m for e in row))
    return out


def exponent_to_poly(E: ExponentMatrix) -> Gf2PolyMatrix:
    return Gf2PolyMatrix.from_exponents(E.exps)


def poly_to_exponent(M: Gf2PolyMatrix, m: int) -> ExponentMatrix:
    """Inverse of exponent_to_poly; every entry must be a monomial of degree < m."""
    exps = []
    for row in M.entries:
        out = []
        for p in row:
            if p.weight() != 1:
                raise ValueError(f"entry {p} is not a monomial")
            out.append(p.degree)
        exps.append(out)
    return ExponentMatrix(m, exps)


TANNER_155 = QcMatrix(
    31,
    (
        (1, 2, 4, 8, 16),
        (5, 10, 20, 9, 18),
        (25, 19, 7, 14, 28),
    ),
)
