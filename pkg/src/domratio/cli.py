"""Command-line entry point.

Exit codes: 0 success, 1 a mathematical check failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Any, Iterator, TextIO

from .construction import run_construction
from .errors import DomRatioError
from .graph import Graph, balanced_double_star, classify_forest, parse_edge_list
from .graph6 import encode_graph6, parse_graph6
from .harness import (
    SCHEMA_VERSION,
    VerificationReport,
    linegraph_check,
    merge_reports,
    verify,
)
from .solvers import ratio_report

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(obj: dict[str, Any], out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")
    out.flush()


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _graphs(text: str, fmt: str) -> Iterator[Graph]:
    if fmt == "edges":
        yield parse_edge_list(text)
        return
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            yield parse_graph6(line.strip())
        except DomRatioError as exc:
            raise type(exc)(f"line {lineno}: {exc}") from exc


def cmd_solve(args: argparse.Namespace, out: TextIO) -> int:
    for g in _graphs(_read(args.file), args.format):
        rep = ratio_report(g)
        _emit({"schema": SCHEMA_VERSION, "type": "ratio", "graph6": encode_graph6(g),
               **rep.to_dict()}, out)
    return EXIT_OK


def cmd_construct(args: argparse.Namespace, out: TextIO) -> int:
    code = EXIT_OK
    for g in _graphs(_read(args.file), args.format):
        if g.n == 0 or not classify_forest(g).is_tree:
            raise UsageError(f"input {encode_graph6(g)} is not a tree")
        cert = run_construction(g)
        _emit({"schema": SCHEMA_VERSION, "type": "certificate", "graph6": encode_graph6(g),
               **cert.to_dict()}, out)
        if not cert.passed:
            code = EXIT_VIOLATION
    return code


def cmd_verify(args: argparse.Namespace, out: TextIO) -> int:
    report = verify(args.n_max, n_min=args.n_min, shards=args.shards, shard_id=args.shard_id,
                    construct=args.construct, workers=args.workers,
                    on_record=lambda rec: _emit(rec, out), list_equality=args.list_equality)
    summary = report.to_dict()
    if not args.list_equality:
        summary["equality_cases"] = [c.graph6 for c in report.equality_cases]
    _emit(summary, out)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def cmd_merge(args: argparse.Namespace, out: TextIO) -> int:
    reports = []
    for path in args.files:
        summary = None
        for line in _read(path).splitlines():
            if line.strip():
                rec = json.loads(line)
                if rec.get("type") == "verification_summary":
                    summary = rec
        if summary is None:
            raise UsageError(f"{path}: no verification_summary record")
        if summary["equality_cases"] and isinstance(summary["equality_cases"][0], str):
            raise UsageError(f"{path}: shard was run without --list-equality")
        reports.append(VerificationReport.from_dict(summary))
    merged = merge_reports(reports)
    _emit(merged.to_dict(), out)
    return EXIT_OK if merged.ok else EXIT_VIOLATION


def cmd_linegraph_check(args: argparse.Namespace, out: TextIO) -> int:
    report = linegraph_check(args.n_max)
    for g6 in report.counterexamples:
        _emit({"schema": SCHEMA_VERSION, "type": "linegraph_counterexample", "graph6": g6}, out)
    _emit(report.to_dict(), out)
    return EXIT_OK if report.all_ratios_one else EXIT_VIOLATION


def cmd_gen(args: argparse.Namespace, out: TextIO) -> int:
    out.write(encode_graph6(balanced_double_star(args.s)) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domratio", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="report γ, i and the degree bound for each input graph")
    s.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    s.add_argument("file", nargs="?", default="-")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("construct", help="run the peeling construction on a tree")
    c.add_argument("--format", choices=("graph6", "edges"), default="graph6")
    c.add_argument("file", nargs="?", default="-")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="check the bound on every tree up to a given order")
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--shards", type=int, default=1)
    v.add_argument("--shard-id", type=int, default=0)
    v.add_argument("--list-equality", action="store_true",
                   help="stream equality cases and keep full reports in the summary")
    v.add_argument("--construct", action="store_true",
                   help="also run the peeling construction on every tree")
    v.add_argument("--workers", type=int, default=None,
                   help="worker processes (default: $DOMRATIO_WORKERS or 1)")
    v.set_defaults(func=cmd_verify)

    m = sub.add_parser("merge", help="merge verify outputs of all shards of one campaign")
    m.add_argument("files", nargs="+")
    m.set_defaults(func=cmd_merge)

    lg = sub.add_parser("linegraph-check", help="check i(L(T)) = γ(L(T)) over small trees")
    lg.add_argument("--n-max", type=int, required=True)
    lg.set_defaults(func=cmd_linegraph_check)

    gen = sub.add_parser("gen", help="emit a generated graph in graph6")
    gen.add_argument("kind", choices=("double-star",))
    gen.add_argument("--s", type=int, required=True)
    gen.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None, out: TextIO | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args, out or sys.stdout)
    except (DomRatioError, UsageError, OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        print(f"domratio {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
