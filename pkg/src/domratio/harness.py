"""Verification campaigns over enumerated trees and their JSON reports.

Reports are JSON objects tagged with ``schema`` and ``type``; campaigns write
one object per notable graph followed by a summary object. See
``docs/report-schema.md``.
"""

from __future__ import annotations

import logging
import os
import time
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import islice
from multiprocessing import Pool
from typing import Any, Callable, Iterable, Iterator

from .construction import run_construction
from .enumeration import MAX_ORDER, level_sequences, tree_from_levels
from .errors import DomainError
from .graph import is_balanced_double_star, line_graph
from .graph6 import encode_graph6, parse_graph6
from .solvers import RatioReport, gamma_brute, i_brute, ratio_report

log = logging.getLogger(__name__)

SCHEMA_VERSION = 1
WORKERS_ENV = "DOMRATIO_WORKERS"
CHUNK = 2000


def worker_count() -> int:
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise DomainError(f"{WORKERS_ENV} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class EqualityCase:
    graph6: str
    report: RatioReport
    balanced_double_star: bool
    certified: bool

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "report": self.report.to_dict(),
                "balanced_double_star": self.balanced_double_star,
                "certified": self.certified}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> EqualityCase:
        return cls(d["graph6"], RatioReport.from_dict(d["report"]),
                   d["balanced_double_star"], d["certified"])


@dataclass(frozen=True)
class Finding:
    """A graph that breaks the bound or a reading of the equality clause."""

    graph6: str
    report: RatioReport
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"graph6": self.graph6, "report": self.report.to_dict(), "detail": self.detail}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> Finding:
        return cls(d["graph6"], RatioReport.from_dict(d["report"]), d.get("detail", ""))


@dataclass(frozen=True)
class VerificationReport:
    n_range: tuple[int, int]
    trees_checked: int
    violations: tuple[Finding, ...]
    equality_cases: tuple[EqualityCase, ...]
    # Δ <= 2 trees with i != γ (the equality clause read for every such forest)
    low_degree_inequalities: tuple[Finding, ...] = ()
    construction_failures: tuple[Finding, ...] = ()
    constructions_run: int = 0
    shard: tuple[int, int] = (0, 1)
    runtime_ms: int = 0
    counts_by_order: tuple[int, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not (self.violations or self.low_degree_inequalities or self.construction_failures)

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "type": "verification_summary",
            "n_range": list(self.n_range),
            "trees_checked": self.trees_checked,
            "counts_by_order": list(self.counts_by_order),
            "violations": [f.to_dict() for f in self.violations],
            "equality_cases": [e.to_dict() for e in self.equality_cases],
            "low_degree_inequalities": [f.to_dict() for f in self.low_degree_inequalities],
            "construction_failures": [f.to_dict() for f in self.construction_failures],
            "constructions_run": self.constructions_run,
            "shard": list(self.shard),
            "runtime_ms": self.runtime_ms,
            "ok": self.ok,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> VerificationReport:
        return cls(
            n_range=tuple(d["n_range"]),
            trees_checked=d["trees_checked"],
            violations=tuple(Finding.from_dict(x) for x in d["violations"]),
            equality_cases=tuple(EqualityCase.from_dict(x) for x in d["equality_cases"]),
            low_degree_inequalities=tuple(Finding.from_dict(x) for x in d["low_degree_inequalities"]),
            construction_failures=tuple(Finding.from_dict(x) for x in d["construction_failures"]),
            constructions_run=d["constructions_run"],
            shard=tuple(d["shard"]),
            runtime_ms=d["runtime_ms"],
            counts_by_order=tuple(d["counts_by_order"]),
        )

    def without_timing(self) -> VerificationReport:
        return replace(self, runtime_ms=0)


@dataclass(frozen=True)
class LineGraphReport:
    n_range: tuple[int, int]
    trees_checked: int
    all_ratios_one: bool
    counterexamples: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"schema": SCHEMA_VERSION, "type": "linegraph_summary",
                "n_range": list(self.n_range), "trees_checked": self.trees_checked,
                "all_ratios_one": self.all_ratios_one,
                "counterexamples": list(self.counterexamples)}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> LineGraphReport:
        return cls(tuple(d["n_range"]), d["trees_checked"], d["all_ratios_one"],
                   tuple(d["counterexamples"]))


# ---------------------------------------------------------------------------
# per-tree work, run in worker processes
# ---------------------------------------------------------------------------

def _check_tree(levels: tuple[int, ...], construct: bool) -> tuple[str, ...] | None:
    g = tree_from_levels(levels)
    rep = ratio_report(g)
    notes = []
    if not rep.meets_bound:
        notes.append("violation")
    if rep.max_degree <= 2 and rep.gamma != rep.ind_dom:
        notes.append("low_degree")
    cert = None
    if construct or (rep.equality and rep.max_degree >= 3):
        cert = run_construction(g)
        if not cert.passed:
            notes.append("construction:" + ",".join(cert.failed_checks))
    if rep.equality and rep.max_degree >= 3:
        notes.append("equality")
        notes.append("certified" if cert is not None and cert.passed and cert.equality else "uncertified")
    if not notes:
        return None
    return (encode_graph6(g), *notes)


def _check_chunk(args: tuple[list[tuple[int, ...]], bool]) -> list[tuple[str, ...]]:
    chunk, construct = args
    out = []
    for levels in chunk:
        hit = _check_tree(levels, construct)
        if hit is not None:
            out.append(hit)
    return out


def _chunks(it: Iterable, size: int) -> Iterator[list]:
    it = iter(it)
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


def verify(n_max: int, *, n_min: int = 1, shards: int = 1, shard_id: int = 0,
           construct: bool = False, workers: int | None = None,
           on_record: Callable[[dict[str, Any]], None] | None = None,
           list_equality: bool = True) -> VerificationReport:
    """Check i/γ <= max(1, Δ/2) on every free tree with ``n_min <= n <= n_max``.

    ``on_record`` receives one JSON-ready record per notable tree as it is
    found. Equality cases with Δ >= 3 are always re-certified through the
    peeling construction; ``construct`` runs it on every tree.
    """
    if not 1 <= n_min <= n_max <= MAX_ORDER:
        raise DomainError(f"need 1 <= n_min <= n_max <= {MAX_ORDER}, got {n_min}..{n_max}")
    if shards < 1 or not 0 <= shard_id < shards:
        raise DomainError(f"invalid shard {shard_id} of {shards}")
    workers = worker_count() if workers is None else workers
    start = time.perf_counter()

    def mine() -> Iterator[tuple[int, ...]]:
        for n in range(n_min, n_max + 1):
            for idx, levels in enumerate(level_sequences(n)):
                if idx % shards == shard_id:
                    counts[n - n_min] += 1
                    yield levels

    counts = [0] * (n_max - n_min + 1)
    tasks = ((chunk, construct) for chunk in _chunks(mine(), CHUNK))
    violations, equality, low, failures = [], [], [], []

    def consume(results: Iterable[list[tuple[str, ...]]]) -> None:
        for hits in results:
            for g6, *notes in hits:
                rep = ratio_report(parse_graph6(g6))
                for note in notes:
                    if note == "violation":
                        violations.append(Finding(g6, rep, "ratio exceeds bound"))
                    elif note == "low_degree":
                        low.append(Finding(g6, rep, "max degree <= 2 but i != gamma"))
                    elif note.startswith("construction:"):
                        failures.append(Finding(g6, rep, note.split(":", 1)[1]))
                    elif note == "equality":
                        case = EqualityCase(g6, rep, is_balanced_double_star(parse_graph6(g6)),
                                            "certified" in notes)
                        equality.append(case)
                        if on_record and list_equality:
                            on_record({"schema": SCHEMA_VERSION, "type": "equality_case",
                                       **case.to_dict()})
                if on_record and any(nt == "violation" or nt == "low_degree"
                                     or nt.startswith("construction:") for nt in notes):
                    on_record({"schema": SCHEMA_VERSION, "type": "finding", "graph6": g6,
                               "notes": notes, "report": rep.to_dict()})

    if workers > 1:
        with Pool(workers) as pool:
            consume(pool.imap(_check_chunk, tasks))
    else:
        consume(map(_check_chunk, tasks))

    total = sum(counts)
    log.info("checked %d trees of order %d..%d", total, n_min, n_max)
    by_g6 = lambda item: item.graph6.encode("ascii")  # noqa: E731
    return VerificationReport(
        n_range=(n_min, n_max),
        trees_checked=total,
        violations=tuple(sorted(violations, key=by_g6)),
        equality_cases=tuple(sorted(equality, key=by_g6)),
        low_degree_inequalities=tuple(sorted(low, key=by_g6)),
        construction_failures=tuple(sorted(failures, key=by_g6)),
        constructions_run=total if construct else len(equality),
        shard=(shard_id, shards),
        runtime_ms=int((time.perf_counter() - start) * 1000),
        counts_by_order=tuple(counts),
    )


def merge_reports(reports: Iterable[VerificationReport]) -> VerificationReport:
    """Combine the shard reports of one campaign into a single-run report."""
    reports = list(reports)
    if not reports:
        raise DomainError("nothing to merge")
    n_range = reports[0].n_range
    shards = reports[0].shard[1]
    ids = sorted(r.shard[0] for r in reports)
    if any(r.n_range != n_range or r.shard[1] != shards for r in reports):
        raise DomainError("shard reports come from different campaigns")
    if ids != list(range(shards)):
        raise DomainError(f"shard ids {ids} do not cover 0..{shards - 1} exactly once")
    by_g6 = lambda item: item.graph6.encode("ascii")  # noqa: E731

    def gather(attr: str) -> tuple:
        return tuple(sorted((x for r in reports for x in getattr(r, attr)), key=by_g6))

    return VerificationReport(
        n_range=n_range,
        trees_checked=sum(r.trees_checked for r in reports),
        violations=gather("violations"),
        equality_cases=gather("equality_cases"),
        low_degree_inequalities=gather("low_degree_inequalities"),
        construction_failures=gather("construction_failures"),
        constructions_run=sum(r.constructions_run for r in reports),
        shard=(0, 1),
        runtime_ms=sum(r.runtime_ms for r in reports),
        counts_by_order=tuple(map(sum, zip(*(r.counts_by_order for r in reports)))),
    )


def linegraph_check(n_max: int) -> LineGraphReport:
    """Compare i(L(T)) with γ(L(T)) by subset search for every tree of order 2..n_max."""
    if not 2 <= n_max <= 12:
        raise DomainError(f"line-graph check needs 2 <= n_max <= 12, got {n_max}")
    checked = 0
    bad = []
    for n in range(2, n_max + 1):
        for levels in level_sequences(n):
            t = tree_from_levels(levels)
            lg = line_graph(t)
            checked += 1
            if Fraction(i_brute(lg)[0], gamma_brute(lg)[0]) != 1:
                bad.append(encode_graph6(t))
    return LineGraphReport((2, n_max), checked, not bad, tuple(bad))
