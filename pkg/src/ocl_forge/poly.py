"""Polynomials and polynomial matrices over GF(2) in the delay variable D.

A polynomial is stored as a nonnegative Python integer whose bit t is the
coefficient of D^t, so degrees are unbounded.  Everything here is immutable.

The degree and valuation of the zero polynomial are ``None``; callers folding
over matrix entries must skip zero entries explicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import FactorTooLarge, ParseError, ShapeMismatch, WidthMismatch

ROW = "row"
COLUMN = "column"


@dataclass(frozen=True, order=True)
class Gf2Poly:
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0:
            raise ValueError("coefficient mask must be nonnegative")

    @classmethod
    def monomial(cls, k: int) -> Gf2Poly:
        if k < 0:
            raise ValueError(f"negative exponent {k}")
        return cls(1 << k)

    @classmethod
    def from_exponents(cls, exps: Iterable[int]) -> Gf2Poly:
        bits = 0
        for k in exps:
            bits ^= 1 << k
        return cls(bits)

    @property
    def is_zero(self) -> bool:
        return self.bits == 0

    @property
    def degree(self) -> int | None:
        return self.bits.bit_length() - 1 if self.bits else None

    @property
    def valuation(self) -> int | None:
        return (self.bits & -self.bits).bit_length() - 1 if self.bits else None

    def coeff(self, t: int) -> int:
        return (self.bits >> t) & 1 if t >= 0 else 0

    def exponents(self) -> list[int]:
        return [t for t in range(self.bits.bit_length()) if (self.bits >> t) & 1]

    def weight(self) -> int:
        return bin(self.bits).count("1")

    def __add__(self, other: Gf2Poly) -> Gf2Poly:
        return Gf2Poly(self.bits ^ other.bits)

    __sub__ = __add__

    def __mul__(self, other: Gf2Poly) -> Gf2Poly:
        a, b, c = self.bits, other.bits, 0
        while b:
            if b & 1:
                c ^= a
            a <<= 1
            b >>= 1
        return Gf2Poly(c)

    def shift(self, l: int) -> Gf2Poly:
        """Multiply by D^(-l).  Positive ``l`` divides and requires valuation >= l."""
        if l <= 0:
            return Gf2Poly(self.bits << -l)
        if self.bits and self.valuation < l:
            raise FactorTooLarge(f"{format_poly(self)} is not divisible by D^{l}")
        return Gf2Poly(self.bits >> l)

    def reciprocal(self, nu: int) -> Gf2Poly:
        """D^nu * p(1/D); ``nu`` must be at least the degree."""
        if self.bits and self.degree > nu:
            raise ValueError(f"degree {self.degree} exceeds reversal length {nu}")
        return Gf2Poly.from_exponents(nu - t for t in self.exponents())

    def __str__(self):
        return format_poly(self)


def degree_and_valuation(p: Gf2Poly) -> tuple[int | None, int | None]:
    return p.degree, p.valuation


_TERM = re.compile(r"\s*(?:(1)|D(?:\^(\d+))?)\s*")


def parse_poly(text: str) -> Gf2Poly:
    """Parse ``0`` or a ``+``-separated sum of ``1``, ``D`` and ``D^k`` terms.

    Repeated terms cancel, as they would in GF(2) arithmetic.
    """
    if text.strip() == "0":
        return Gf2Poly()
    bits, pos = 0, 0
    while True:
        m = _TERM.match(text, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"expected term in {text!r}", pos)
        if m.group(1):
            k = 0
        elif m.group(2) is not None:
            k = int(m.group(2))
            if k < 2:
                raise ParseError(f"write D^{k} as {'1' if k == 0 else 'D'}", pos)
        else:
            k = 1
        bits ^= 1 << k
        pos = m.end()
        if pos == len(text):
            return Gf2Poly(bits)
        if text[pos] != "+":
            raise ParseError(f"unexpected {text[pos]!r} in {text!r}", pos)
        pos += 1


def format_poly(p: Gf2Poly) -> str:
    if p.is_zero:
        return "0"
    terms = []
    for k in p.exponents():
        terms.append("1" if k == 0 else "D" if k == 1 else f"D^{k}")
    return "+".join(terms)


@dataclass(frozen=True)
class Gf2PolyMatrix:
    """Rectangular r x n0 grid of polynomials with no all-zero row."""

    entries: tuple[tuple[Gf2Poly, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(row) for row in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or not rows[0]:
            raise ShapeMismatch("matrix needs at least one row and one column")
        width = len(rows[0])
        for i, row in enumerate(rows):
            if len(row) != width:
                raise ShapeMismatch(f"row {i + 1} has {len(row)} entries, expected {width}")
            if all(p.is_zero for p in row):
                raise ShapeMismatch(f"row {i + 1} is all zero")

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> Gf2PolyMatrix:
        return cls(tuple(tuple(parse_poly(s) for s in row) for row in rows))

    @classmethod
    def from_exponents(cls, exps: Sequence[Sequence[int]]) -> Gf2PolyMatrix:
        return cls(tuple(tuple(Gf2Poly.monomial(x) for x in row) for row in exps))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Gf2Poly, ...]:
        return tuple(row[j] for row in self.entries)

    def to_strings(self) -> list[list[str]]:
        return [[format_poly(p) for p in row] for row in self.entries]

    def __str__(self):
        return "\n".join(", ".join(row) for row in self.to_strings())


def _line_max_degree(line: Iterable[Gf2Poly]) -> int | None:
    degs = [p.degree for p in line if not p.is_zero]
    return max(degs) if degs else None


def line_valuation(line: Iterable[Gf2Poly]) -> int | None:
    """Largest l such that D^l divides every entry; None for an all-zero line."""
    vals = [p.valuation for p in line if not p.is_zero]
    return min(vals) if vals else None


def row_constraint_length(M: Gf2PolyMatrix, i: int) -> int:
    """Maximum entry degree of row ``i`` (0-based)."""
    return _line_max_degree(M.entries[i])


def row_constraint_lengths(M: Gf2PolyMatrix) -> tuple[int, ...]:
    return tuple(row_constraint_length(M, i) for i in range(M.rows))


def overall_constraint_length(M: Gf2PolyMatrix) -> int:
    return sum(row_constraint_lengths(M))


def shift_line(M: Gf2PolyMatrix, axis: str, index: int, l: int) -> Gf2PolyMatrix:
    """Multiply row or column ``index`` (0-based) by D^(-l).

    ``l > 0`` factors D^l out of the line (a row or column operation) and
    raises FactorTooLarge unless every nonzero entry is divisible.  ``l < 0``
    multiplies the line by D^|l|.
    """
    if l == 0:
        return M
    grid = [list(row) for row in M.entries]
    if axis == ROW:
        grid[index] = [p.shift(l) for p in grid[index]]
    elif axis == COLUMN:
        for row in grid:
            row[index] = row[index].shift(l)
    else:
        raise ValueError(f"axis must be {ROW!r} or {COLUMN!r}, got {axis!r}")
    return Gf2PolyMatrix(tuple(tuple(row) for row in grid))


def reciprocal_rows(M: Gf2PolyMatrix) -> Gf2PolyMatrix:
    """Reverse every row within its own constraint length: p(D) -> D^nu_i p(1/D)."""
    out = []
    for i, row in enumerate(M.entries):
        nu = row_constraint_length(M, i)
        out.append(tuple(p.reciprocal(nu) for p in row))
    return Gf2PolyMatrix(tuple(out))


@dataclass(frozen=True)
class BitSymbolSequence:
    """Time-indexed sequence of ``width``-bit symbols.

    Time k (1-based in the maths) is ``symbols[k - 1]``.
    """

    width: int
    symbols: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        syms = tuple(tuple(int(b) for b in s) for s in self.symbols)
        object.__setattr__(self, "symbols", syms)
        if self.width < 1:
            raise WidthMismatch("symbol width must be positive")
        for k, s in enumerate(syms):
            if len(s) != self.width:
                raise WidthMismatch(f"symbol {k + 1} has {len(s)} bits, expected {self.width}")
            if any(b not in (0, 1) for b in s):
                raise ValueError(f"symbol {k + 1} is not binary")

    @classmethod
    def parse(cls, text: str, width: int | None = None) -> BitSymbolSequence:
        groups = text.split()
        if not groups:
            if width is None:
                raise ParseError("empty symbol sequence", 0)
            return cls(width, ())
        pos = 0
        for g in groups:
            pos = text.index(g, pos)
            bad = [c for c in g if c not in "01"]
            if bad:
                raise ParseError(f"non-binary character {bad[0]!r} in symbol {g!r}", pos)
            pos += len(g)
        w = len(groups[0]) if width is None else width
        return cls(w, tuple(tuple(int(c) for c in g) for g in groups))

    @classmethod
    def zeros(cls, width: int, length: int) -> BitSymbolSequence:
        return cls(width, ((0,) * width,) * length)

    def __len__(self):
        return len(self.symbols)

    def __getitem__(self, k):
        return self.symbols[k]

    def __xor__(self, other: BitSymbolSequence) -> BitSymbolSequence:
        if other.width != self.width or len(other) != len(self):
            raise WidthMismatch("sequences differ in width or length")
        return BitSymbolSequence(
            self.width,
            tuple(tuple(a ^ b for a, b in zip(s, t)) for s, t in zip(self.symbols, other.symbols)),
        )

    def stream(self, j: int) -> list[int]:
        """The j-th (0-based) subsequence, e^(j) in time order."""
        return [s[j] for s in self.symbols]

    @classmethod
    def from_streams(cls, streams: Sequence[Sequence[int]]) -> BitSymbolSequence:
        return cls(len(streams), tuple(zip(*streams)))

    def weight(self) -> int:
        return sum(sum(s) for s in self.symbols)

    def __str__(self):
        return " ".join("".join(map(str, s)) for s in self.symbols)


def convolve_syndrome(M: Gf2PolyMatrix, e: BitSymbolSequence) -> BitSymbolSequence:
    """Direct evaluation of zeta_k = e_k H^T(D), with e_s = 0 for s <= 0.

    Deliberately stateless; it is the reference the trellis module's
    register realization is checked against.
    """
    if e.width != M.cols:
        raise WidthMismatch(f"error width {e.width} != matrix columns {M.cols}")
    T = len(e)
    out = []
    for k in range(T):
        sym = []
        for i in range(M.rows):
            bit = 0
            for j in range(M.cols):
                for t in M.entries[i][j].exponents():
                    if k - t >= 0:
                        bit ^= e.symbols[k - t][j]
            sym.append(bit)
        out.append(tuple(sym))
    return BitSymbolSequence(M.rows, tuple(out))
