"""Acceptance gate: one test per exit criterion, each reported PASS/FAIL.

Run alone with ``pytest tests/test_acceptance.py``; the per-criterion lines
are printed in the terminal summary.
"""

import random
import time
from fractions import Fraction

from domratio.construction import run_construction
from domratio.enumeration import count_trees, enumerate_trees
from domratio.graph import Graph, balanced_double_star, disjoint_union
from domratio.graph6 import encode_graph6, parse_graph6
from domratio.harness import linegraph_check, verify
from domratio.solvers import (
    gamma_brute,
    gamma_forest_dp,
    i_brute,
    i_forest_dp,
    is_dominating,
    is_independent,
    mediant_within_bound,
    ratio_report,
)
from oracles import free_tree_count, graph6_by_hand, prufer_tree_classes

FREE_TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320]


def test_c1_dp_matches_brute_force(criterion):
    start = time.perf_counter()
    mismatches = checked = 0
    for n in range(1, 14):
        for t in enumerate_trees(n):
            checked += 1
            gb, gbw = gamma_brute(t)
            ib, ibw = i_brute(t)
            gd, gdw = gamma_forest_dp(t)
            id_, idw = i_forest_dp(t)
            ok = (gb == gd and ib == id_
                  and len(gbw) == gb and is_dominating(t, gbw)
                  and len(gdw) == gd and is_dominating(t, gdw)
                  and len(ibw) == ib and is_dominating(t, ibw) and is_independent(t, ibw)
                  and len(idw) == id_ and is_dominating(t, idw) and is_independent(t, idw))
            mismatches += not ok
    elapsed = time.perf_counter() - start
    ok = criterion(1, f"DP = brute force on {checked} trees (n<=13), {mismatches} mismatches, "
                      f"{elapsed:.1f}s",
                   mismatches == 0 and checked == sum(FREE_TREES[:13]) and elapsed < 120)
    assert ok


def test_c2_exhaustive_bound_n18(criterion):
    rep = verify(18)
    expected = sum(free_tree_count(n) for n in range(1, 19))
    ok = criterion(2, f"verify --n-max 18: {rep.trees_checked} trees (expected {expected}), "
                      f"{len(rep.violations)} violations, {rep.runtime_ms / 1000:.0f}s",
                   not rep.violations and rep.trees_checked == expected
                   and rep.runtime_ms < 600_000)
    assert ok
    assert rep.low_degree_inequalities == ()
    assert all(c.certified for c in rep.equality_cases)


def test_c3_balanced_double_star_equality(criterion):
    failures = []
    for s in range(1, 21):
        g = balanced_double_star(s)
        r = ratio_report(g)
        if (r.gamma, r.ind_dom, r.max_degree) != (2, s + 1, s + 1):
            failures.append(("values", s))
        if s >= 2 and r.ratio != Fraction(s + 1, 2):
            failures.append(("ratio", s))
        if not r.equality:
            failures.append(("equality", s))
        if g.n <= 20 and (gamma_brute(g)[0], i_brute(g)[0]) != (2, s + 1):
            failures.append(("oracle", s))
        u = ratio_report(disjoint_union(g, g))
        if u.ratio != Fraction(u.max_degree, 2) or not u.equality or u.gamma != 4:
            failures.append(("union", s))
    ok = criterion(3, f"balanced double stars s=1..20 and their doubled unions attain "
                      f"Δ/2 exactly ({len(failures)} failures)", not failures)
    assert ok, failures


def test_c4_construction_certifies_all_trees(criterion):
    failures = []
    checked = 0
    for n in range(1, 15):
        for t in enumerate_trees(n):
            checked += 1
            c = run_construction(t)
            tr = c.trace
            eq1 = len(c.I) <= (c.gamma - c.k) * c.delta - sum(s.deg ** 2 for s in tr.steps)
            eq3 = c.delta < 2 or (1 - Fraction(c.delta, 2)) * (c.degree_sum - c.k) >= 0
            upper = len(tr.X | c.I) >= i_forest_dp(t)[0]
            if not (c.passed and eq1 and eq3 and upper):
                failures.append(encode_graph6(t))
    ok = criterion(4, f"construction certificates on {checked} trees (n<=14), "
                      f"{len(failures)} failures",
                   not failures and checked == sum(FREE_TREES[:14]))
    assert ok, failures[:5]


def test_c5_enumeration_counts(criterion):
    counts = [count_trees(n) for n in range(1, 17)]
    oracle = [len(prufer_tree_classes(n)) for n in range(1, 11)]
    ok = criterion(5, "tree counts n=1..16 match the free-tree sequence; n<=10 reproduced by "
                      "Prüfer+dedup",
                   counts == FREE_TREES and oracle == FREE_TREES[:10]
                   and counts == [free_tree_count(n) for n in range(1, 17)])
    assert ok, (counts, oracle)


def test_c6_line_graph_regression(criterion):
    start = time.perf_counter()
    rep = linegraph_check(9)
    elapsed = time.perf_counter() - start
    ok = criterion(6, f"i(L(T)) = γ(L(T)) on {rep.trees_checked} trees (n<=9), "
                      f"{len(rep.counterexamples)} counterexamples, {elapsed:.1f}s",
                   rep.all_ratios_one and not rep.counterexamples and elapsed < 30
                   and rep.trees_checked == sum(FREE_TREES[1:9]))
    assert ok


def test_c7_mediant_property(criterion):
    rng = random.Random(20161)
    failures = instances = 0
    while instances < 10_000:
        t = Fraction(rng.randint(1, 50), rng.randint(1, 50))
        pairs = []
        for _ in range(rng.randint(1, 8)):
            den = rng.randint(1, 10**4)
            top = t * den
            num = rng.randint(1, max(1, top.numerator // top.denominator))
            if Fraction(num, den) > t:
                continue
            pairs.append((num, den))
        if not pairs:
            continue
        instances += 1
        lhs = sum(a for a, _ in pairs) * t.denominator
        rhs = t.numerator * sum(b for _, b in pairs)
        if not (mediant_within_bound(pairs, t) and lhs <= rhs):
            failures += 1
    ok = criterion(7, f"mediant lemma on 10000 random instances, {failures} failures",
                   failures == 0)
    assert ok


def test_c8_graph6_codec(criterion):
    rng = random.Random(62)
    bad = 0
    for _ in range(10_000):
        n = rng.randint(0, 62)
        p = rng.random()
        g = Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < p])
        s = encode_graph6(g)
        if s != graph6_by_hand(n, set(g.edges())) or parse_graph6(s) != g \
                or encode_graph6(parse_graph6(s)) != s:
            bad += 1
    vectors = (parse_graph6("@") == Graph.from_edges(1, [])
               and parse_graph6("A_") == Graph.from_edges(2, [(0, 1)])
               and parse_graph6("C~") == Graph.from_edges(4, [(u, v) for v in range(4)
                                                              for u in range(v)]))
    ok = criterion(8, f"graph6 round trip on 10000 random graphs ({bad} failures), "
                      f"fixed vectors {'ok' if vectors else 'wrong'}", bad == 0 and vectors)
    assert ok
