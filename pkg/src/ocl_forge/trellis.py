"""Syndrome-former realization and error-trellis construction.

The former for H^T(D) keeps, for row i, a register of nu_i bits (nu_i the row
constraint length).  Register cell t holds the part of the row-i syndrome
already committed for t steps ahead, so cell 1 is emitted next.  A state is a
tuple of per-row register tuples, rows top to bottom; the total width is the
OCL, and the trellis has at most 2^OCL states per layer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .errors import NoAdmissiblePath, ShapeMismatch, TooManyPaths, TrellisTooLarge, WidthMismatch
from .poly import BitSymbolSequence, Gf2PolyMatrix, overall_constraint_length, row_constraint_lengths

DEFAULT_STATE_CAP = 2**20
DEFAULT_PATH_CAP = 2**16

FormerState = tuple[tuple[int, ...], ...]
ErrorPath = BitSymbolSequence


def zero_state(M: Gf2PolyMatrix) -> FormerState:
    return tuple((0,) * nu for nu in row_constraint_lengths(M))


def all_states(M: Gf2PolyMatrix):
    nus = row_constraint_lengths(M)
    for bits in itertools.product((0, 1), repeat=sum(nus)):
        out, pos = [], 0
        for nu in nus:
            out.append(bits[pos : pos + nu])
            pos += nu
        yield tuple(out)


def format_state(s: FormerState) -> str:
    return "(" + "".join(str(b) for reg in s for b in reg) + ")"


def _check_state(M, s):
    nus = row_constraint_lengths(M)
    if len(s) != len(nus) or any(len(reg) != nu for reg, nu in zip(s, nus)):
        raise ShapeMismatch(f"state {s!r} does not fit register lengths {nus}")


def former_step(M: Gf2PolyMatrix, s: FormerState, e) -> tuple[tuple[int, ...], FormerState]:
    """Feed one error symbol; return (syndrome symbol, next state)."""
    _check_state(M, s)
    if len(e) != M.cols:
        raise WidthMismatch(f"symbol width {len(e)} != {M.cols}")
    zeta, nxt = [], []
    for i, reg in enumerate(s):
        row = M.entries[i]
        acc = [0] * (len(reg) + 1)
        for j, bit in enumerate(e):
            if bit:
                for t in row[j].exponents():
                    acc[t] ^= 1
        zeta.append(acc[0] ^ (reg[0] if reg else 0))
        nxt.append(tuple(acc[t] ^ (reg[t] if t < len(reg) else 0) for t in range(1, len(reg) + 1)))
    return tuple(zeta), tuple(nxt)


def run_former(M: Gf2PolyMatrix, e: BitSymbolSequence, start: FormerState | None = None):
    """Iterate former_step over ``e``; returns (syndrome sequence, final state)."""
    s = zero_state(M) if start is None else start
    out = []
    for sym in e.symbols:
        z, s = former_step(M, s, sym)
        out.append(z)
    return BitSymbolSequence(M.rows, tuple(out)), s


@dataclass(frozen=True)
class ErrorTrellis:
    """Pruned layered graph; ``edges[k]`` lists (state, error symbol, next state) for step k+1."""

    matrix: Gf2PolyMatrix
    syndrome: BitSymbolSequence
    layers: tuple[tuple[FormerState, ...], ...]
    edges: tuple[tuple[tuple[FormerState, tuple[int, ...], FormerState], ...], ...]
    start: Optional[FormerState]
    end: Optional[FormerState]
    zero_tail: int = 0

    @property
    def horizon(self) -> int:
        return len(self.edges)

    def max_layer_size(self) -> int:
        return max(len(layer) for layer in self.layers)


def build_error_trellis(
    M: Gf2PolyMatrix,
    zeta: BitSymbolSequence,
    start: FormerState | None = None,
    end: FormerState | None = None,
    *,
    free_start: bool = False,
    free_end: bool = False,
    zero_tail: int = 0,
    state_cap: int = DEFAULT_STATE_CAP,
) -> ErrorTrellis:
    """Keep every transition whose syndrome matches ``zeta``, then prune.

    ``start``/``end`` default to the zero state; ``free_start``/``free_end``
    leave them unconstrained.  The last ``zero_tail`` symbols are imaginary
    (appended only to flush the former), so their error is forced to zero.
    The state cap is checked against 2^OCL before any layer is built.
    """
    nu = overall_constraint_length(M)
    if (1 << nu) > state_cap:
        raise TrellisTooLarge(f"2^{nu} former states exceed the cap of {state_cap}")
    if zeta.width != M.rows:
        raise WidthMismatch(f"syndrome width {zeta.width} != matrix rows {M.rows}")
    if free_start:
        start = None
        first = list(all_states(M))
    else:
        start = zero_state(M) if start is None else start
        _check_state(M, start)
        first = [start]
    if free_end:
        end = None
    else:
        end = zero_state(M) if end is None else end
        _check_state(M, end)

    if not 0 <= zero_tail <= len(zeta):
        raise ValueError(f"zero_tail {zero_tail} outside [0, {len(zeta)}]")
    symbols = list(itertools.product((0, 1), repeat=M.cols))
    quiet = [(0,) * M.cols]
    step_cache = {}
    layers = [set(first)]
    raw_edges = []
    for k in range(len(zeta)):
        target = zeta.symbols[k]
        out, nxt_layer = [], set()
        alphabet = quiet if k >= len(zeta) - zero_tail else symbols
        for s in layers[-1]:
            for e in alphabet:
                key = (s, e)
                if key not in step_cache:
                    step_cache[key] = former_step(M, s, e)
                z, n = step_cache[key]
                if z == target:
                    out.append((s, e, n))
                    nxt_layer.add(n)
        raw_edges.append(out)
        layers.append(nxt_layer)

    # backward pruning
    alive = layers[-1] if end is None else layers[-1] & {end}
    kept_layers = [alive]
    kept_edges = []
    for k in range(len(zeta) - 1, -1, -1):
        es = [ed for ed in raw_edges[k] if ed[2] in alive]
        alive = {ed[0] for ed in es}
        kept_edges.append(es)
        kept_layers.append(alive)
    if not kept_layers[0] or (len(zeta) and not kept_edges[0]):
        raise NoAdmissiblePath("no error sequence reproduces the syndrome between the given states")
    kept_layers.reverse()
    kept_edges.reverse()
    return ErrorTrellis(
        M,
        zeta,
        tuple(tuple(sorted(layer)) for layer in kept_layers),
        tuple(tuple(sorted(es)) for es in kept_edges),
        start,
        end,
        zero_tail,
    )


def _out_edges(t: ErrorTrellis):
    out = []
    for es in t.edges:
        d = {}
        for s, e, n in es:
            d.setdefault(s, []).append((e, n))
        out.append(d)
    return out


def count_paths(t: ErrorTrellis) -> int:
    counts = {s: 1 for s in t.layers[-1]}
    for es in reversed(t.edges):
        nxt = {}
        for s, _, n in es:
            nxt[s] = nxt.get(s, 0) + counts.get(n, 0)
        counts = nxt
    return sum(counts.get(s, 0) for s in t.layers[0]) if t.edges else len(t.layers[0])


def enumerate_paths(t: ErrorTrellis, path_cap: int = DEFAULT_PATH_CAP) -> list[ErrorPath]:
    """All start-to-end label sequences, deduplicated and sorted."""
    n = count_paths(t)
    if n > path_cap:
        raise TooManyPaths(f"{n} paths exceed the cap of {path_cap}")
    adj = _out_edges(t)
    found = set()

    def walk(k, s, prefix):
        if k == len(adj):
            found.add(tuple(prefix))
            return
        for e, nxt in adj[k].get(s, ()):
            prefix.append(e)
            walk(k + 1, nxt, prefix)
            prefix.pop()

    for s in t.layers[0]:
        walk(0, s, [])
    return [BitSymbolSequence(t.matrix.cols, p) for p in sorted(found)]


def min_weight_path(t: ErrorTrellis) -> tuple[int, ErrorPath]:
    """Minimum Hamming weight admissible path; ties go to the lexicographically smallest.

    Survivors compare on (weight, label prefix), which is safe because paths
    merging into one state share every continuation.
    """
    best = {s: (0, ()) for s in t.layers[0]}
    for es in t.edges:
        nxt = {}
        for s, e, n in es:
            if s not in best:
                continue
            w, p = best[s]
            cand = (w + sum(e), p + (e,))
            if n not in nxt or cand < nxt[n]:
                nxt[n] = cand
        best = nxt
    finals = [best[s] for s in t.layers[-1] if s in best]
    if not finals:
        raise NoAdmissiblePath("trellis has no complete path")
    w, p = min(finals)
    return w, BitSymbolSequence(t.matrix.cols, p)


def reverse_path(p: ErrorPath) -> ErrorPath:
    return BitSymbolSequence(p.width, p.symbols[::-1])


def decode(M: Gf2PolyMatrix, received: BitSymbolSequence, **kwargs) -> tuple[int, ErrorPath]:
    """Syndrome-decode ``received``: min-weight error path for its syndrome."""
    zeta, _ = run_former(M, received)
    return min_weight_path(build_error_trellis(M, zeta, **kwargs))
