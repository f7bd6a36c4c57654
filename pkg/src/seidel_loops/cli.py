"""Command-line interface.

Graphs are given as graph6 strings with an optional loop sidecar (``A_:0``
is K_2 with a loop at vertex 0), as a path to a file holding graph6 or an
edge list, or as ``-`` for standard input.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import os
import sys
from contextlib import contextmanager
from typing import Optional, Sequence

from .energy import seidel_energy, seidel_spectrum
from .formats import GraphFormatError, ReportSink, format_number, read_graph
from .graph import complete_graph, cycle_graph, petersen_graph
from .spectra import fiedler_spectrum
from .verify import (
    EXHAUSTIVE_MAX_N,
    JOBS_ENV,
    ScanSummary,
    ScanTooLargeError,
    check_union_theorem,
    default_workers,
    scan,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def union_family():
    """Regular graphs used by ``verify --theorem union`` by default."""
    graphs = [complete_graph(n) for n in range(2, 9)]
    graphs += [cycle_graph(n) for n in (4, 5, 6, 7)]
    graphs.append(petersen_graph())
    return graphs


class _UsageError(Exception):
    pass


def load_graph(arg: str):
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.isfile(arg):
        with open(arg) as fh:
            text = fh.read()
    else:
        text = arg
    return read_graph(text).graph


@contextmanager
def _open_out(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _infer_format(fmt: Optional[str], path: Optional[str], default: str) -> str:
    if fmt:
        return fmt
    if path and path.endswith((".jsonl", ".json")):
        return "jsonl"
    if path and path != "-":
        return "csv"
    return default


def _print_summary(summary: ScanSummary, stream, seed=None) -> None:
    if seed is not None:
        print(f"seed: {seed}", file=stream)
    print(f"records: {summary.records}", file=stream)
    print(f"failures: {summary.failures}", file=stream)
    if summary.violations or summary.min_interior_slack:
        print(f"violations: {summary.violations}", file=stream)
        print(f"review: {summary.review}", file=stream)
        print(f"equality sigma=0: {summary.equality_sigma_0}", file=stream)
        print(f"equality sigma=n: {summary.equality_sigma_n}", file=stream)
        print(f"equality 0<sigma<n: {summary.equality_interior}", file=stream)
        for n, s in sorted(summary.min_interior_slack.items()):
            print(f"min slack n={n} (non-empty, 0<sigma<n): {format_number(s)}", file=stream)
    if summary.hypothesis_violations:
        print(f"hypothesis violations: {summary.hypothesis_violations}", file=stream)
    print("PASS" if summary.ok else "FAIL", file=stream)


def _run_records(records, fmt: str, out: Optional[str], seed=None) -> int:
    summary = ScanSummary()
    if fmt == "text":
        failed = []
        for rec in records:
            summary.add(rec)
            if not rec.passed:
                failed.append(rec)
        for rec in failed[:20]:
            print(f"FAILED: {rec}")
        _print_summary(summary, sys.stdout, seed)
    else:
        with _open_out(out) as fh:
            sink = ReportSink(fh, fmt)
            for rec in sink.write_all(records):
                summary.add(rec)
        _print_summary(summary, sys.stderr, seed)
    return EXIT_OK if summary.ok else EXIT_FAIL


def cmd_spectrum(args) -> int:
    g = load_graph(args.graph)
    spec = seidel_spectrum(g)
    fmt = args.format or "text"
    if fmt == "text":
        for x in spec:
            print(format_number(x))
    else:
        ReportSink(sys.stdout, fmt).write({"graph": args.graph, "spectrum": list(spec.values)})
    return EXIT_OK


def cmd_energy(args) -> int:
    g = load_graph(args.graph)
    rep = seidel_energy(g)
    fmt = args.format or "text"
    if fmt == "text":
        print(f"n: {rep.n}")
        print(f"sigma: {rep.sigma}")
        print(f"shift: {format_number(rep.shift)}")
        print("shifted_eigenvalues: " + " ".join(format_number(x) for x in rep.shifted_eigenvalues))
        print(f"energy: {format_number(rep.energy)}")
    else:
        row = {"graph": args.graph, "n": rep.n, "sigma": rep.sigma, "shift": rep.shift,
               "shifted_eigenvalues": rep.shifted_eigenvalues, "energy": rep.energy}
        ReportSink(sys.stdout, fmt).write(row)
    return EXIT_OK


def cmd_verify(args) -> int:
    fmt = _infer_format(args.format, args.out, "text")
    if args.theorem == "union":
        graphs = [load_graph(s) for s in args.graph] if args.graph else union_family()
        records = (check_union_theorem(g) for g in graphs)
        return _run_records(records, fmt, args.out)
    if args.sample is not None:
        records = scan(args.max_n, "random", args.sample, args.seed, theorem=args.theorem,
                       n_min=args.min_n, workers=args.jobs)
        return _run_records(records, fmt, args.out, seed=args.seed)
    records = scan(args.max_n, "exhaustive", theorem=args.theorem, n_min=args.min_n, workers=args.jobs)
    return _run_records(records, fmt, args.out)


def cmd_scan(args) -> int:
    fmt = _infer_format(args.format, args.out, "csv")
    if fmt == "text":
        raise _UsageError("scan writes csv or jsonl")
    records = scan(args.max_n, "exhaustive", theorem="bounds", n_min=args.min_n, workers=args.jobs)
    return _run_records(records, fmt, args.out)


def cmd_fiedler(args) -> int:
    spec = fiedler_spectrum(args.alpha1, args.rest_a, args.beta1, args.rest_b, args.rho)
    fmt = args.format or "text"
    if fmt == "text":
        for x in spec:
            print(format_number(x))
    else:
        ReportSink(sys.stdout, fmt).write({"spectrum": list(spec.values)})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "jsonl"), default=None,
                        help="output format (default: text on the terminal)")
    jobs = argparse.ArgumentParser(add_help=False)
    jobs.add_argument("--jobs", type=int, default=None,
                      help=f"worker processes for scans (default: ${JOBS_ENV} or 1)")

    parser = argparse.ArgumentParser(
        prog="seidel-loops",
        description="Seidel spectra and energies of graphs with self-loops.",
        epilog="Graphs: graph6 with optional loop sidecar ':v1,v2' (e.g. 'A_:0'), "
               "a file with graph6 or an edge list ('n 3', 'u v', 'loop v'), or '-' for stdin.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="Seidel spectrum, descending")
    p.add_argument("graph")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("energy", parents=[common], help="Seidel energy report")
    p.add_argument("graph")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("verify", parents=[common, jobs], help="check one theorem")
    p.add_argument("--theorem", required=True, choices=("bounds", "complement", "switching", "union"))
    p.add_argument("--max-n", type=int, default=4, help="largest order (default 4)")
    p.add_argument("--min-n", type=int, default=None,
                   help="smallest order (exhaustive default: max-n; random default: 1)")
    p.add_argument("--sample", type=int, default=None, help="random instances instead of enumeration")
    p.add_argument("--seed", type=int, default=0, help="seed for --sample (default 0)")
    p.add_argument("--graph", action="append", default=[], help="union: graphs to check (repeatable)")
    p.add_argument("--out", default=None, help="write records here ('-' for stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", parents=[common, jobs], help="exhaustive energy-bracket scan")
    p.add_argument("--max-n", type=int, required=True, help=f"largest order (<= {EXHAUSTIVE_MAX_N})")
    p.add_argument("--min-n", type=int, default=None, help="smallest order (default: max-n)")
    p.add_argument("--out", required=True, help="record sink path ('-' for stdout)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("fiedler", parents=[common], help="block spectrum from coupled blocks")
    p.add_argument("--alpha1", type=float, required=True)
    p.add_argument("--beta1", type=float, required=True)
    p.add_argument("--rho", type=float, required=True)
    p.add_argument("--rest-a", type=float, nargs="*", default=[])
    p.add_argument("--rest-b", type=float, nargs="*", default=[])
    p.set_defaults(func=cmd_fiedler)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if getattr(args, "jobs", None) is None and hasattr(args, "jobs"):
        args.jobs = default_workers()
    try:
        return args.func(args)
    except (GraphFormatError, ScanTooLargeError, _UsageError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
