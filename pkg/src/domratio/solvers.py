"""Exact domination number and independent domination number.

Two routes are provided: a subset-search oracle for any graph with at most
``BRUTE_MAX_N`` vertices, and linear-time dynamic programs for forests.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable

from .errors import DomainError, PreconditionError, SizeError
from .graph import Graph, VertexSet, classify_forest

BRUTE_MAX_N = 20
INF = float("inf")


def is_dominating(g: Graph, s: VertexSet) -> bool:
    closed = g.closed_masks
    acc = 0
    for v in s:
        acc |= closed[v]
    return acc == g.full_mask


def is_independent(g: Graph, s: VertexSet) -> bool:
    opens = g.open_masks
    return all(not opens[v] & s.mask for v in s)


def _check_nonempty(g: Graph) -> None:
    if g.n == 0:
        raise DomainError("domination parameters are undefined for the empty graph")


# ---------------------------------------------------------------------------
# subset-search oracle
# ---------------------------------------------------------------------------

def _least_set_of_size(g: Graph, size: int, independent: bool) -> int | None:
    """Lexicographically least ``size``-subset that dominates (and is independent).

    Depth-first over ascending vertex choices, i.e. combinations in
    lexicographic order. A branch is cut only when it provably contains no
    solution: the lowest undominated vertex ``u`` must receive a member of
    N[u], and every later pick is larger than the current one.
    """
    n = g.n
    full = g.full_mask
    closed = g.closed_masks
    opens = g.open_masks
    top = [max(g.adjacency[u][-1], u) if g.adjacency[u] else u for u in range(n)]

    def search(start: int, left: int, chosen: int, dominated: int) -> int | None:
        if dominated == full:
            return chosen if left == 0 else None
        if left == 0:
            return None
        rest = full & ~dominated
        u = (rest & -rest).bit_length() - 1
        last = min(n - left, top[u])
        for v in range(start, last + 1):
            if independent and opens[v] & chosen:
                continue
            found = search(v + 1, left - 1, chosen | 1 << v, dominated | closed[v])
            if found is not None:
                return found
        return None

    return search(0, size, 0, 0)


def _brute(g: Graph, independent: bool) -> tuple[int, VertexSet]:
    _check_nonempty(g)
    if g.n > BRUTE_MAX_N:
        raise SizeError(f"subset search is capped at n <= {BRUTE_MAX_N}, got {g.n}")
    for size in range(1, g.n + 1):
        found = _least_set_of_size(g, size, independent)
        if found is not None:
            return size, VertexSet(found)
    raise AssertionError("V(G) is always an admissible set")  # pragma: no cover


def gamma_brute(g: Graph) -> tuple[int, VertexSet]:
    """γ(G) with the lexicographically least minimum dominating set."""
    return _brute(g, independent=False)


def i_brute(g: Graph) -> tuple[int, VertexSet]:
    """i(G) with the lexicographically least minimum independent dominating set."""
    return _brute(g, independent=True)


# ---------------------------------------------------------------------------
# forest dynamic programming
# ---------------------------------------------------------------------------
#
# States per vertex v of a rooted subtree:
#   IN   v is in the set
#   DOM  v is outside and has a child in the set
#   NEED v is outside, no child in the set; v must be dominated by its parent
# The independent variant only forbids IN directly below IN.

IN, DOM, NEED = 0, 1, 2


def _bfs_order(g: Graph, root: int) -> tuple[list[int], list[int]]:
    parent = {root: -1}
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in g.adjacency[v]:
            if w not in parent:
                parent[w] = v
                order.append(w)
                queue.append(w)
    return order, [parent[v] for v in order]


def _forest_dp(g: Graph, independent: bool) -> tuple[int, VertexSet, list[int]]:
    _check_nonempty(g)
    info = classify_forest(g)
    if not info.is_forest:
        raise DomainError("forest dynamic program called on a graph with a cycle")
    n = g.n
    cost = [[0, 0, 0] for _ in range(n)]
    children: list[list[int]] = [[] for _ in range(n)]
    # child chosen to dominate v in state DOM
    pivot = [-1] * n
    chosen = 0
    per_component = []

    for comp in info.components:
        root = next(iter(comp))  # lowest index
        order, parents = _bfs_order(g, root)
        for v, p in zip(order, parents):
            if p >= 0:
                children[p].append(v)
        for v in reversed(order):
            kids = children[v]
            if independent:
                c_in = 1 + sum(min(cost[c][DOM], cost[c][NEED]) for c in kids)
            else:
                c_in = 1 + sum(min(cost[c]) for c in kids)
            c_need = sum(cost[c][DOM] for c in kids)
            if kids:
                base = sum(min(cost[c][IN], cost[c][DOM]) for c in kids)
                best, pick = INF, -1
                for c in kids:
                    extra = cost[c][IN] - min(cost[c][IN], cost[c][DOM])
                    if extra < best:
                        best, pick = extra, c
                c_dom = base + best
                pivot[v] = pick
            else:
                c_dom = INF
            cost[v] = [c_in, c_dom, c_need]

        root_state = IN if cost[root][IN] <= cost[root][DOM] else DOM
        per_component.append(int(cost[root][root_state]))
        stack = [(root, root_state)]
        while stack:
            v, state = stack.pop()
            if state == IN:
                chosen |= 1 << v
                for c in children[v]:
                    if independent:
                        c_state = DOM if cost[c][DOM] <= cost[c][NEED] else NEED
                    else:
                        c_state = min((IN, DOM, NEED), key=lambda st: cost[c][st])
                    stack.append((c, c_state))
            elif state == DOM:
                for c in children[v]:
                    if c == pivot[v]:
                        stack.append((c, IN))
                    else:
                        stack.append((c, IN if cost[c][IN] <= cost[c][DOM] else DOM))
            else:
                for c in children[v]:
                    stack.append((c, DOM))

    return sum(per_component), VertexSet(chosen), per_component


def gamma_forest_dp(g: Graph) -> tuple[int, VertexSet]:
    """γ(G) and a minimum dominating set of a forest in linear time."""
    total, witness, _ = _forest_dp(g, independent=False)
    return total, witness


def i_forest_dp(g: Graph) -> tuple[int, VertexSet]:
    """i(G) and a minimum independent dominating set of a forest in linear time."""
    total, witness, _ = _forest_dp(g, independent=True)
    return total, witness


def exact_i(g: Graph) -> int:
    """i(G) by whichever exact route applies."""
    if classify_forest(g).is_forest:
        return i_forest_dp(g)[0]
    return i_brute(g)[0]


# ---------------------------------------------------------------------------
# ratio reporting
# ---------------------------------------------------------------------------

def bound_for(max_degree: int) -> Fraction:
    """1 when Δ <= 2, Δ/2 otherwise."""
    return Fraction(1) if max_degree <= 2 else Fraction(max_degree, 2)


def mediant_within_bound(pairs: Iterable[tuple[int, int]], t: Fraction) -> bool:
    """Check that the mediant of ratios each bounded by ``t`` is bounded by ``t``.

    Raises PreconditionError naming the first pair that is not positive or
    already exceeds ``t``.
    """
    t = Fraction(t)
    num = den = 0
    for idx, (a, b) in enumerate(pairs):
        if a <= 0 or b <= 0:
            raise PreconditionError(f"pair {idx} ({a}, {b}) is not positive")
        if Fraction(a, b) > t:
            raise PreconditionError(f"pair {idx} ({a}, {b}) exceeds t = {t}")
        num += a
        den += b
    if den == 0:
        raise PreconditionError("no pairs given")
    return Fraction(num, den) <= t


def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s: str) -> Fraction:
    return Fraction(s)


@dataclass(frozen=True)
class RatioReport:
    n: int
    max_degree: int
    gamma: int
    ind_dom: int
    ratio: Fraction
    bound: Fraction
    meets_bound: bool
    equality: bool
    gamma_witness: VertexSet
    i_witness: VertexSet
    per_component: tuple[tuple[int, int], ...]
    solver: str = "forest_dp"

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "max_degree": self.max_degree,
            "gamma": self.gamma,
            "ind_dom": self.ind_dom,
            "ratio": _frac_str(self.ratio),
            "bound": _frac_str(self.bound),
            "meets_bound": self.meets_bound,
            "equality": self.equality,
            "gamma_witness": self.gamma_witness.to_list(),
            "i_witness": self.i_witness.to_list(),
            "per_component": [list(p) for p in self.per_component],
            "solver": self.solver,
        }

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> RatioReport:
        return cls(
            n=d["n"],
            max_degree=d["max_degree"],
            gamma=d["gamma"],
            ind_dom=d["ind_dom"],
            ratio=_parse_frac(d["ratio"]),
            bound=_parse_frac(d["bound"]),
            meets_bound=d["meets_bound"],
            equality=d["equality"],
            gamma_witness=VertexSet.of(d["gamma_witness"]),
            i_witness=VertexSet.of(d["i_witness"]),
            per_component=tuple((a, b) for a, b in d["per_component"]),
            solver=d.get("solver", "forest_dp"),
        )


def ratio_report(g: Graph) -> RatioReport:
    """γ, i, the ratio i/γ and the degree bound, aggregated over components."""
    _check_nonempty(g)
    info = classify_forest(g)
    if info.is_forest:
        gamma, gw, gamma_parts = _forest_dp(g, independent=False)
        ind, iw, i_parts = _forest_dp(g, independent=True)
        parts = tuple(zip(gamma_parts, i_parts))
        solver = "forest_dp"
    elif g.n <= BRUTE_MAX_N:
        gmask = imask = 0
        pairs = []
        for comp in info.components:
            sub = g.induced_subgraph(comp)
            back = sub.origin
            gc, gs = gamma_brute(sub)
            ic, is_ = i_brute(sub)
            for v in gs:
                gmask |= 1 << back[v]
            for v in is_:
                imask |= 1 << back[v]
            pairs.append((gc, ic))
        gw, iw = VertexSet(gmask), VertexSet(imask)
        parts = tuple(pairs)
        gamma = sum(p[0] for p in parts)
        ind = sum(p[1] for p in parts)
        solver = "brute"
    else:
        raise SizeError(f"non-forest with n={g.n} exceeds the subset-search cap {BRUTE_MAX_N}")

    delta = g.max_degree
    bound = bound_for(delta)
    ratio = Fraction(ind, gamma)
    meets = ratio <= bound
    if meets and len(parts) > 1 and all(Fraction(i, c) <= bound for c, i in parts):
        # aggregation of per-component bounds; cannot fail by the mediant lemma
        if not mediant_within_bound([(i, c) for c, i in parts], bound):
            raise AssertionError("mediant exceeded a common bound")  # pragma: no cover
    return RatioReport(
        n=g.n,
        max_degree=delta,
        gamma=gamma,
        ind_dom=ind,
        ratio=ratio,
        bound=bound,
        meets_bound=meets,
        equality=ratio == bound,
        gamma_witness=gw,
        i_witness=iw,
        per_component=parts,
        solver=solver,
    )
