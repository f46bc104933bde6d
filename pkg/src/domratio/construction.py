"""Constructive certificate for i(T) <= max(1, Δ/2)·γ(T) on a tree.

Starting from a minimum dominating set D, the forest G[D] is peeled by
repeatedly removing the closed neighbourhood of a vertex of degree 0 or 1.
The removed centres form X, which is independent; a greedy extension I makes
X ∪ I an independent dominating set. Every counting step of the bound is
recomputed and stored as a named check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from .errors import PreconditionError
from .graph import Graph, VertexSet, classify_forest
from .solvers import (
    BRUTE_MAX_N,
    exact_i,
    gamma_brute,
    gamma_forest_dp,
    is_dominating,
    is_independent,
)


@dataclass(frozen=True)
class PeelingStep:
    index: int
    x: int
    deg: int
    block: VertexSet

    def to_dict(self) -> dict[str, Any]:
        return {"index": self.index, "x": self.x, "deg": self.deg, "block": self.block.to_list()}

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> PeelingStep:
        return cls(d["index"], d["x"], d["deg"], VertexSet.of(d["block"]))


@dataclass(frozen=True)
class PeelingTrace:
    dominating_set: VertexSet
    steps: tuple[PeelingStep, ...]

    @property
    def k(self) -> int:
        return len(self.steps)

    @property
    def X(self) -> VertexSet:
        return VertexSet.of(step.x for step in self.steps)

    def to_dict(self) -> dict[str, Any]:
        return {
            "dominating_set": self.dominating_set.to_list(),
            "k": self.k,
            "X": self.X.to_list(),
            "steps": [s.to_dict() for s in self.steps],
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> PeelingTrace:
        return cls(VertexSet.of(d["dominating_set"]),
                   tuple(PeelingStep.from_dict(s) for s in d["steps"]))


def peel(g: Graph, d: VertexSet, *, check_minimum: bool = True) -> PeelingTrace:
    """Peel G[D] into closed-neighbourhood blocks of degree-0/1 centres.

    At each step the centre is the lowest-index isolated vertex of the
    remaining forest, or failing that its lowest-index leaf.
    """
    if not classify_forest(g).is_tree:
        raise PreconditionError("peeling requires a tree")
    if not d.issubset(g.vertices()) or not is_dominating(g, d):
        raise PreconditionError(f"{d} is not a dominating set")
    if check_minimum:
        gamma = gamma_forest_dp(g)[0]
        if len(d) != gamma:
            raise PreconditionError(f"|D| = {len(d)} but γ(G) = {gamma}")

    opens = g.open_masks
    remaining = d.mask
    steps = []
    while remaining:
        pick = None
        for want in (0, 1):
            for v in VertexSet(remaining):
                if bin(opens[v] & remaining).count("1") == want:
                    pick = v
                    break
            if pick is not None:
                break
        if pick is None:
            # impossible in a forest: every non-empty forest has a vertex of degree <= 1
            raise PreconditionError("induced subgraph on D has no vertex of degree <= 1")
        block = (opens[pick] & remaining) | 1 << pick
        steps.append(PeelingStep(len(steps) + 1, pick, want, VertexSet(block)))
        remaining &= ~block
    return PeelingTrace(d, tuple(steps))


def extend_to_independent_dominating(g: Graph, x: VertexSet) -> VertexSet:
    """Greedy ascending extension of an independent set to a maximal one.

    Returns only the added vertices I; X ∪ I is independent and dominating.
    """
    if not is_independent(g, x):
        raise PreconditionError(f"{x} is not independent")
    closed = g.closed_masks
    dominated = 0
    for v in x:
        dominated |= closed[v]
    added = 0
    for v in range(g.n):
        if not dominated >> v & 1:
            added |= 1 << v
            dominated |= closed[v]
    return VertexSet(added)


@dataclass(frozen=True)
class BoundCertificate:
    delta: int
    gamma: int
    k: int
    degree_sum: int
    I: VertexSet
    i_upper: int
    eq1_rhs: int
    final_rhs: Fraction
    half_bound: Fraction
    i_exact: int
    equality: bool
    checks: tuple[tuple[str, bool], ...]
    trace: PeelingTrace

    @property
    def passed(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failed_checks(self) -> list[str]:
        return [name for name, ok in self.checks if not ok]

    def to_dict(self) -> dict[str, Any]:
        return {
            "delta": self.delta,
            "gamma": self.gamma,
            "k": self.k,
            "degree_sum": self.degree_sum,
            "I": self.I.to_list(),
            "i_upper": self.i_upper,
            "eq1_rhs": self.eq1_rhs,
            "final_rhs": f"{self.final_rhs.numerator}/{self.final_rhs.denominator}",
            "half_bound": f"{self.half_bound.numerator}/{self.half_bound.denominator}",
            "i_exact": self.i_exact,
            "equality": self.equality,
            "passed": self.passed,
            "checks": {name: ok for name, ok in self.checks},
            "trace": self.trace.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> BoundCertificate:
        return cls(
            delta=d["delta"],
            gamma=d["gamma"],
            k=d["k"],
            degree_sum=d["degree_sum"],
            I=VertexSet.of(d["I"]),
            i_upper=d["i_upper"],
            eq1_rhs=d["eq1_rhs"],
            final_rhs=Fraction(d["final_rhs"]),
            half_bound=Fraction(d["half_bound"]),
            i_exact=d["i_exact"],
            equality=d["equality"],
            checks=tuple(d["checks"].items()),
            trace=PeelingTrace.from_dict(d["trace"]),
        )


def certify(g: Graph, trace: PeelingTrace, i_set: VertexSet) -> BoundCertificate:
    """Recompute every quantity of the counting argument and check each step."""
    D = trace.dominating_set
    X = trace.X
    delta = g.max_degree
    gamma = len(D)
    k = trace.k
    degs = [s.deg for s in trace.steps]
    degree_sum = sum(degs)
    square_sum = sum(dd * dd for dd in degs)
    opens = g.open_masks
    checks: list[tuple[str, bool]] = []

    union = 0
    disjoint = True
    for s in trace.steps:
        disjoint &= not union & s.block.mask
        union |= s.block.mask
    checks.append(("blocks_partition_D", disjoint and union == D.mask))
    checks.append(("step_degree_0_or_1", all(
        dd in (0, 1) and s.x in s.block and len(s.block) == dd + 1
        for dd, s in zip(degs, trace.steps))))
    checks.append(("block_sizes_sum_to_gamma", sum(dd + 1 for dd in degs) == gamma))
    checks.append(("X_independent", is_independent(g, X)))
    checks.append(("I_disjoint_from_D", I_ok := i_set.isdisjoint(D)))
    XI = X | i_set
    checks.append(("X_union_I_independent", is_independent(g, XI)))
    checks.append(("X_union_I_dominating", is_dominating(g, XI)))

    # every vertex of I is dominated by D - X through some block neighbour
    covered = 0
    for v in D - X:
        covered |= opens[v]
    checks.append(("I_covered_by_D_minus_X", i_set.issubset(VertexSet(covered))))

    # per-vertex estimate |N(v) ∩ I| <= Δ - deg(x_i) for v in N_{G_i}(x_i)
    local = True
    for s in trace.steps:
        for v in s.block - VertexSet.of([s.x]):
            if bin(opens[v] & i_set.mask).count("1") > delta - s.deg:
                local = False
    checks.append(("neighbour_count_bound", local))

    eq1_rhs = (gamma - k) * delta - square_sum
    checks.append(("eq1_I_bound", len(i_set) <= eq1_rhs and I_ok))

    i_upper = k + len(i_set)
    final_rhs = Fraction(delta * gamma - sum(delta - 1 + dd * dd for dd in degs))
    checks.append(("chain_i_upper_le_final_rhs", i_upper <= final_rhs))

    half_bound = Fraction(delta * gamma, 2)
    if delta >= 2:
        sign = (1 - Fraction(delta, 2)) * (degree_sum - k)
        checks.append(("eq3_sign", sign >= 0))
        checks.append(("final_rhs_le_half_bound", final_rhs <= half_bound))
    else:
        checks.append(("eq3_sign", True))
        checks.append(("final_rhs_le_half_bound", True))

    i_exact = exact_i(g)
    limit = half_bound if delta >= 3 else Fraction(gamma)
    checks.append(("exact_i_le_i_upper", i_exact <= i_upper))
    checks.append(("theorem_bound", i_exact <= limit))
    equality = i_exact == limit

    return BoundCertificate(
        delta=delta,
        gamma=gamma,
        k=k,
        degree_sum=degree_sum,
        I=i_set,
        i_upper=i_upper,
        eq1_rhs=eq1_rhs,
        final_rhs=final_rhs,
        half_bound=half_bound,
        i_exact=i_exact,
        equality=equality,
        checks=tuple(checks),
        trace=trace,
    )


def run_construction(g: Graph, d: VertexSet | None = None) -> BoundCertificate:
    """Solver, peel, extend and certify in one call.

    Without ``d`` the lexicographically least minimum dominating set is used
    (from the subset search when n <= 20, otherwise the forest DP witness).
    """
    if not classify_forest(g).is_tree:
        raise PreconditionError("the construction requires a tree")
    if d is None:
        d = gamma_brute(g)[1] if g.n <= BRUTE_MAX_N else gamma_forest_dp(g)[1]
    trace = peel(g, d)
    i_set = extend_to_independent_dominating(g, trace.X)
    return certify(g, trace, i_set)
