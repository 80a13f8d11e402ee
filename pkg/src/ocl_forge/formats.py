"""Plain-text file formats for matrices, reduction reports, sweeps and paths.

Polynomial matrix::

    poly rows=2 cols=3
    D, 0, 1
    1, 1+D, 0

Exponent matrix (``qc`` instead of ``exp`` for circulant shift indices)::

    exp m=31 rows=3 cols=5
    1 2 4 8 16
    ...

Blank lines and ``#`` comments are ignored on input.
"""

from __future__ import annotations

import csv
import io
import re
from typing import Iterable, Union

from .errors import ParseError
from .poly import Gf2PolyMatrix, parse_poly
from .qc import ExponentMatrix, QcMatrix
from .reduction import ReducedMatrix
from .search import SweepRecord
from .trellis import ErrorPath

AnyMatrix = Union[Gf2PolyMatrix, ExponentMatrix, QcMatrix]

_HEADER = re.compile(r"^(poly|exp|qc)((?:\s+\w+=\d+)*)\s*$")


def _content_lines(text: str):
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if line:
            yield n, line


def parse_matrix(text: str) -> AnyMatrix:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty matrix file", 1)
    n, header = lines[0]
    m = _HEADER.match(header)
    if m is None:
        raise ParseError(f"bad header {header!r}", f"line {n}")
    kind = m.group(1)
    fields = dict(kv.split("=") for kv in m.group(2).split())
    need = ("rows", "cols") if kind == "poly" else ("m", "rows", "cols")
    for key in need:
        if key not in fields:
            raise ParseError(f"header lacks {key}=", f"line {n}")
    extra = set(fields) - set(need)
    if extra:
        raise ParseError(f"unknown header fields {sorted(extra)}", f"line {n}")
    rows, cols = int(fields["rows"]), int(fields["cols"])
    body = lines[1:]
    if len(body) != rows:
        raise ParseError(f"expected {rows} rows, found {len(body)}", f"line {n}")
    grid = []
    for ln, line in body:
        cells = [c.strip() for c in line.split(",")] if kind == "poly" else line.split()
        if len(cells) != cols:
            raise ParseError(f"expected {cols} entries, found {len(cells)}", f"line {ln}")
        try:
            if kind == "poly":
                grid.append([parse_poly(c) for c in cells])
            else:
                grid.append([int(c) for c in cells])
        except ParseError as exc:
            raise ParseError(f"line {ln}: {exc}", exc.position) from None
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", f"line {ln}") from None
    try:
        if kind == "poly":
            return Gf2PolyMatrix(tuple(tuple(r) for r in grid))
        if kind == "qc":
            return QcMatrix(int(fields["m"]), grid)
        return ExponentMatrix(int(fields["m"]), grid)
    except ValueError as exc:
        raise ParseError(str(exc), f"line {n}") from None


def format_matrix(M: AnyMatrix) -> str:
    if isinstance(M, Gf2PolyMatrix):
        lines = [f"poly rows={M.rows} cols={M.cols}"]
        lines += [", ".join(row) for row in M.to_strings()]
    else:
        kind, grid = ("qc", M.blocks) if isinstance(M, QcMatrix) else ("exp", M.exps)
        lines = [f"{kind} m={M.m} rows={len(grid)} cols={len(grid[0])}"]
        lines += [" ".join(str(x) for x in row) for row in grid]
    return "\n".join(lines) + "\n"


def _ints(xs: Iterable[int]) -> str:
    return ",".join(str(x) for x in xs)


def format_reduction(R: ReducedMatrix) -> str:
    return (
        format_matrix(R.matrix)
        + f"row_delays: {_ints(R.ledger.row_delays)}\n"
        + f"col_delays: {_ints(R.ledger.col_delays)}\n"
        + f"reversed: {'true' if R.ledger.reversed else 'false'}\n"
        + f"ocl: {R.ocl}\n"
    )


def pattern_columns(b: int) -> list[str]:
    """Index column names: i, j, k for three block rows, then onward through the alphabet."""
    names = [chr(ord("i") + n) for n in range(b)]
    if b > 18:
        names = [f"r{n + 1}" for n in range(b)]
    return names


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def format_records_csv(records: Iterable[SweepRecord], b: int) -> str:
    header = pattern_columns(b) + ["mu", "eta", "mu_prime", "delta_mu", "spreads"]
    rows = (
        [*r.id, r.mu, r.eta, r.mu_prime, r.delta_mu, ";".join(map(str, r.spreads))] for r in records
    )
    return _csv_text(header, rows)


def format_histogram_csv(pairs: Iterable[tuple[int, int]]) -> str:
    return _csv_text(["value", "count"], pairs)


def format_paths(paths: Iterable[ErrorPath]) -> str:
    return "".join(f"w={p.weight()} {p}\n" for p in paths)
