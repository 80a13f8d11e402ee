"""``ocl-forge`` command line.

Exit codes: 0 ok, 1 usage, 2 unreadable input, 3 infeasible (state or path
cap exceeded, or no admissible path), 4 internal error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .errors import Infeasible, NoAdmissiblePath, OclForgeError, ParseError
from .poly import BitSymbolSequence, Gf2PolyMatrix, convolve_syndrome
from .qc import ExponentMatrix, QcMatrix, shift_block_rows, shift_exponent_rows, unwrap
from .reduction import double_reduce, reciprocal_then_reduce, reduce
from .search import METRICS, delta_filter, histogram, sweep
from .trellis import (
    DEFAULT_PATH_CAP,
    DEFAULT_STATE_CAP,
    build_error_trellis,
    enumerate_paths,
    min_weight_path,
    run_former,
)

EXIT_USAGE = 1
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_INTERNAL = 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read_matrix(path, *kinds):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    M = formats.parse_matrix(text)
    allowed = {"poly": Gf2PolyMatrix, "exp": ExponentMatrix, "qc": QcMatrix}
    if not isinstance(M, tuple(allowed[k] for k in kinds)):
        raise ParseError(f"{path}: expected a {' or '.join(kinds)} matrix")
    return M


def _write(text, out):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _int_list(text):
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def cmd_unwrap(args):
    Q = _read_matrix(args.qc, "qc")
    _write(formats.format_matrix(unwrap(Q)), args.out)


def cmd_shift(args):
    M = _read_matrix(args.qc, "qc", "exp")
    s = _int_list(args.shifts)
    out = shift_block_rows(M, s) if isinstance(M, QcMatrix) else shift_exponent_rows(M, s)
    _write(formats.format_matrix(out), args.out)


def cmd_reduce(args):
    M = _read_matrix(args.poly, "poly") if args.poly else _read_matrix(args.exp, "exp")
    if args.reciprocal and args.double:
        raise UsageError("--reciprocal and --double are mutually exclusive")
    if args.double:
        mu, mu_prime, final = double_reduce(M)
        text = formats.format_reduction(final) + f"mu: {mu}\nmu_prime: {mu_prime}\n"
    elif args.reciprocal:
        text = formats.format_reduction(reciprocal_then_reduce(M))
    else:
        text = formats.format_reduction(reduce(M))
    _write(text, args.out)


def cmd_sweep(args):
    M = _read_matrix(args.qc, "qc", "exp")
    E = unwrap(M) if isinstance(M, QcMatrix) else M
    hists = []
    for spec in args.hist:
        metric, sep, path = spec.partition("=")
        if not sep or metric not in METRICS or not path:
            raise UsageError(f"--hist expects metric=FILE with metric in {METRICS}, got {spec!r}")
        hists.append((metric, path))
    report = sweep(E, workers=args.workers)
    records = list(report.records) if args.delta is None else delta_filter(report, args.delta)
    lines = [f"patterns: {len(report)}"]
    for metric in METRICS:
        lo, hi = report.extrema(metric)
        lines.append(f"{metric}: min={lo} max={hi}")
    if args.delta is not None:
        lines.append(f"delta<={args.delta}: {len(records)} patterns")
        if records:
            best = min(records, key=lambda r: (r.mu, r.id))
            lines.append(f"delta<={args.delta}: best mu={best.mu} at {','.join(map(str, best.id))}")
    if args.per_pattern:
        _write(formats.format_records_csv(records, E.rows), args.per_pattern)
    for metric, path in hists:
        _write(formats.format_histogram_csv(histogram(report, metric)), path)
    _write("\n".join(lines) + "\n", None)


def _symbols(text, width):
    seq = BitSymbolSequence.parse(text)
    if seq.width != width:
        raise ParseError(f"symbols have width {seq.width}, expected {width}")
    return seq


def cmd_syndrome(args):
    M = _read_matrix(args.poly, "poly")
    e = _symbols(args.input, M.cols)
    _write(f"{convolve_syndrome(M, e)}\n", None)


def cmd_trellis(args):
    M = _read_matrix(args.poly, "poly")
    received = None
    if args.syndrome is not None:
        zeta = _symbols(args.syndrome, M.rows)
    else:
        received = _symbols(args.received, M.cols)
        zeta, _ = run_former(M, received)
    if args.start_zero and args.free_start or args.end_zero and args.free_end:
        raise UsageError("a state cannot be both zero and free")
    t = build_error_trellis(
        M,
        zeta,
        free_start=args.free_start,
        free_end=args.free_end,
        zero_tail=args.zero_tail,
        state_cap=args.state_cap,
    )
    if args.action == "paths":
        _write(formats.format_paths(enumerate_paths(t, path_cap=args.path_cap)), args.out)
        return
    _, path = min_weight_path(t)
    text = formats.format_paths([path])
    if received is not None:
        text += f"codeword: {received ^ path}\n"
    _write(text, args.out)


def build_parser():
    p = _Parser(prog="ocl-forge", description="LDPC convolutional OCL reduction and error trellises")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    s = sub.add_parser("unwrap", help="QC shift indices to exponent matrix")
    s.add_argument("--qc", required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_unwrap)

    s = sub.add_parser("shift", help="cyclically shift block rows")
    s.add_argument("--qc", required=True)
    s.add_argument("--shifts", required=True, help="one integer per block row, e.g. 1,5,25")
    s.add_argument("--out")
    s.set_defaults(func=cmd_shift)

    s = sub.add_parser("reduce", help="row/column D-factor reduction")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--poly")
    g.add_argument("--exp")
    s.add_argument("--reciprocal", action="store_true")
    s.add_argument("--double", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("sweep", help="evaluate every canonical shift pattern")
    s.add_argument("--qc", required=True)
    s.add_argument("--per-pattern")
    s.add_argument("--hist", action="append", default=[], metavar="METRIC=FILE")
    s.add_argument("--delta", type=int)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("syndrome", help="syndrome of an error/received sequence")
    s.add_argument("--poly", required=True)
    s.add_argument("--input", required=True)
    s.set_defaults(func=cmd_syndrome)

    s = sub.add_parser("trellis", help="error-trellis path listing or decoding")
    s.add_argument("action", choices=("paths", "decode"))
    s.add_argument("--poly", required=True)
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--syndrome")
    g.add_argument("--received")
    s.add_argument("--start-zero", action="store_true", help="start in the zero state (default)")
    s.add_argument("--end-zero", action="store_true", help="end in the zero state (default)")
    s.add_argument("--free-start", action="store_true")
    s.add_argument("--free-end", action="store_true")
    s.add_argument("--zero-tail", type=int, default=0, help="trailing imaginary symbols with zero error")
    s.add_argument("--state-cap", type=int, default=DEFAULT_STATE_CAP)
    s.add_argument("--path-cap", type=int, default=DEFAULT_PATH_CAP)
    s.add_argument("--out")
    s.set_defaults(func=cmd_trellis)
    return p


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "delta", None) is not None and args.delta < 0:
            raise UsageError("--delta must be nonnegative")
        args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (Infeasible, NoAdmissiblePath) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (OclForgeError, ValueError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
