"""
Command-line frontend.

Exit codes: 0 pass, 1 a checked statement failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import cone
from .lhseq import LHSequence
from .minors import ell_S
from .polyring import LaurentPoly, format_poly, pad
from .verify import (
    FixtureParseError,
    compare_table,
    compute_phi,
    load_table,
    phi_csv,
    verify_lht,
    verify_phi_properties,
    verify_pi,
    verify_sagbi,
    write_atomic,
)

FIXTURES_ENV = "LECTUREHALL_FIXTURES"
OUTPUT_DIR_ENV = "LECTUREHALL_OUTPUT_DIR"
MAX_N = 10
MAX_I = 12

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def default_fixtures_dir() -> Path:
    env = os.environ.get(FIXTURES_ENV)
    return Path(env) if env else Path(__file__).with_name("fixtures")


def parse_set(text: str) -> tuple:
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        items = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}")
    if any(s < 1 for s in items):
        raise argparse.ArgumentTypeError(f"set elements must be positive: {text!r}")
    if len(set(items)) != len(items):
        raise argparse.ArgumentTypeError(f"duplicate set element: {text!r}")
    return tuple(sorted(items))


def positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def nonnegative(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--long", action="store_true",
                        help=f"allow n > {MAX_N} or i > {MAX_I} (no time promise)")
    common.add_argument("--cache-stats", action="store_true", help="report minor-cache statistics")
    common.add_argument("--jobs", type=positive, default=1, help="worker processes for per-subset work")
    common.add_argument("--fixtures-dir", type=Path, default=None,
                        help=f"fixture directory (default: ${FIXTURES_ENV} or the packaged fixtures)")

    parser = argparse.ArgumentParser(prog="lecturehall", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ell", parents=[common], help="print l_i")
    p.add_argument("--i", type=positive, required=True)

    p = sub.add_parser("ell-s", parents=[common], help="print l_S")
    p.add_argument("--set", dest="subset", type=parse_set, required=True,
                   help='comma-separated, e.g. "1,3"; "" for the empty set')

    p = sub.add_parser("verify", parents=[common], help="run a verification pipeline")
    p.add_argument("--conjecture", choices=("pi", "sagbi", "phi-properties", "lht"), required=True)
    p.add_argument("--n", type=positive)
    p.add_argument("--max-i", type=positive)
    p.add_argument("--max-total", type=nonnegative, default=20)
    p.add_argument("--table", type=Path, help="phi table fixture to diff against (sagbi)")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0")

    p = sub.add_parser("series", parents=[common], help="dump one side of the bivariate identity")
    p.add_argument("--n", type=positive, required=True)
    p.add_argument("--max-total", type=nonnegative, required=True)
    p.add_argument("--side", choices=("lh", "product"), default="lh")

    p = sub.add_parser("phi", parents=[common], help="leading exponent vectors of l_S for S in [n-1]")
    p.add_argument("--n", type=positive, required=True)

    p = sub.add_parser("hilbert-basis", parents=[common], help="Hilbert basis of L_n")
    p.add_argument("--n", type=positive, required=True)
    return parser


def emit(args, text: str):
    if args.output:
        write_atomic(args.output, text)
    else:
        sys.stdout.write(text)


def _poly_out(args, label: dict, p: LaurentPoly) -> str:
    if args.format == "json":
        return json.dumps({**label, "poly": format_poly(p), "terms": len(p)}) + "\n"
    if args.format == "csv":
        width = p.nvars
        return "".join(",".join(map(str, (c, *pad(m, width)))) + "\n" for c, m in p)
    return format_poly(p) + "\n"


def _resolve_fixture(args, path: Path) -> Path:
    if path.exists():
        return path
    candidate = (args.fixtures_dir or default_fixtures_dir()) / path.name
    return candidate if candidate.exists() else path


def cmd_ell(args, parser) -> int:
    if args.i > MAX_I and not args.long:
        parser.error(f"--i > {MAX_I} requires --long")
    seq = LHSequence()
    emit(args, _poly_out(args, {"i": args.i}, seq.ell(args.i)))
    return EXIT_PASS


def cmd_ell_s(args, parser) -> int:
    S = args.subset
    if S and max(S) + 1 > MAX_I and not args.long:
        parser.error(f"sets with max element >= {MAX_I} require --long")
    seq = LHSequence()
    emit(args, _poly_out(args, {"S": list(S)}, ell_S(seq, S)))
    return EXIT_PASS


def cmd_verify(args, parser) -> int:
    conj = args.conjecture
    seq = LHSequence()
    if conj == "pi":
        max_i = args.max_i or args.n
        if max_i is None:
            parser.error("--conjecture pi needs --max-i")
        if max_i > MAX_I and not args.long:
            parser.error(f"--max-i > {MAX_I} requires --long")
        report = verify_pi(seq, max_i, cache_stats=args.cache_stats)
    elif conj == "lht":
        if args.n is None:
            parser.error("--conjecture lht needs --n")
        report = verify_lht(args.n, args.max_total)
    else:
        if args.n is None:
            parser.error(f"--conjecture {conj} needs --n")
        if args.n > MAX_N and not args.long:
            parser.error(f"--n > {MAX_N} requires --long")
        if conj == "sagbi":
            report = verify_sagbi(seq, args.n, jobs=args.jobs, cache_stats=args.cache_stats)
        else:
            report = verify_phi_properties(seq, args.n, cache_stats=args.cache_stats)
        if args.table is not None:
            path = _resolve_fixture(args, args.table)
            try:
                table = load_table(path)
            except (OSError, FixtureParseError) as exc:
                parser.error(f"cannot read table {path}: {exc}")
            diff = compare_table(report, table)
            report.extra["table_diff"] = diff
            for line in diff:
                report.fail((), f"table mismatch: {line}")
    if args.no_timing:
        report.elapsed_ms = 0
    text = report.dumps()
    if args.output:
        write_atomic(args.output, text)
    elif os.environ.get(OUTPUT_DIR_ENV):
        name = f"{conj}_{report.n}.json"
        write_atomic(Path(os.environ[OUTPUT_DIR_ENV]) / name, text)
    else:
        sys.stdout.write(text)
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_series(args, parser) -> int:
    build = cone.lh_series if args.side == "lh" else cone.product_series
    series = build(args.n, args.max_total)
    if args.format == "json":
        text = json.dumps({"n": args.n, "max_total": args.max_total, "side": args.side,
                           "coeffs": [list(r) for r in series.rows()]}) + "\n"
    else:
        text = series.to_csv()
    emit(args, text)
    return EXIT_PASS


def cmd_phi(args, parser) -> int:
    if args.n > MAX_N and not args.long:
        parser.error(f"--n > {MAX_N} requires --long")
    seq = LHSequence()
    entries = compute_phi(seq, args.n, jobs=args.jobs)
    if args.format == "csv":
        text = phi_csv(entries)
    elif args.format == "json":
        text = json.dumps({"n": args.n, "entries": [e.to_json() for e in entries]}) + "\n"
    else:
        text = "".join(
            "{" + ", ".join(map(str, e.subset)) + "} -> (" + ", ".join(map(str, e.vector)) + ")"
            + ("" if e.lead_coeff == 1 else f"  [coeff {e.lead_coeff}]") + "\n"
            for e in entries)
    if args.cache_stats:
        sys.stderr.write(json.dumps(seq.cache_stats()) + "\n")
    emit(args, text)
    return EXIT_PASS


def cmd_hilbert_basis(args, parser) -> int:
    basis = sorted(cone.hilbert_basis(args.n))
    if args.format == "json":
        text = json.dumps({"n": args.n, "basis": [list(v) for v in basis]}) + "\n"
    elif args.format == "csv":
        text = "".join(",".join(map(str, v)) + "\n" for v in basis)
    else:
        text = "".join("(" + ", ".join(map(str, v)) + ")\n" for v in basis)
    emit(args, text)
    return EXIT_PASS


COMMANDS = {
    "ell": cmd_ell,
    "ell-s": cmd_ell_s,
    "verify": cmd_verify,
    "series": cmd_series,
    "phi": cmd_phi,
    "hilbert-basis": cmd_hilbert_basis,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
