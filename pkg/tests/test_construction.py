from fractions import Fraction

import pytest

from domratio.construction import (
    BoundCertificate,
    PeelingStep,
    PeelingTrace,
    certify,
    extend_to_independent_dominating,
    peel,
    run_construction,
)
from domratio.errors import PreconditionError
from domratio.graph import (
    Graph,
    VertexSet,
    balanced_double_star,
    complete_graph,
    path_graph,
    star_graph,
)
from domratio.solvers import is_dominating, is_independent
from oracles import all_min_dominating_sets, naive_min_set
from conftest import trees_up_to

V = VertexSet.of


def test_peel_balanced_double_star():
    tr = peel(balanced_double_star(3), V([0, 1]))
    assert tr.k == 1 and tr.X == V([0])
    assert tr.steps[0] == PeelingStep(1, 0, 1, V([0, 1]))


def test_peel_star():
    tr = peel(star_graph(5), V([0]))
    assert tr.k == 1 and tr.X == V([0]) and tr.steps[0].deg == 0


def test_peel_path_with_edgeless_d():
    g, d = path_graph(7), V([1, 4, 6])
    assert naive_min_set(g, False)[0] == 3 and is_dominating(g, d)
    tr = peel(g, d)
    assert tr.k == 3 and tr.X == d
    assert [s.deg for s in tr.steps] == [0, 0, 0]


def test_peel_prefers_isolated_vertices():
    # D = {1, 2, 5} on P_7: G[D] has edge 1-2 and isolated 5, so 5 goes first
    g = path_graph(7)
    d = V([1, 2, 5])
    assert naive_min_set(g, False)[0] == 3 and is_dominating(g, d)
    tr = peel(g, d)
    assert [(s.x, s.deg, s.block.to_list()) for s in tr.steps] == [(5, 0, [5]), (1, 1, [1, 2])]


def test_peel_preconditions():
    with pytest.raises(PreconditionError, match="dominating"):
        peel(path_graph(4), V([0]))
    with pytest.raises(PreconditionError, match="γ"):
        peel(path_graph(4), V([0, 1, 3]))
    with pytest.raises(PreconditionError, match="tree"):
        peel(complete_graph(3), V([0]))


def test_extend_examples():
    assert extend_to_independent_dominating(balanced_double_star(3), V([0])) == V([5, 6, 7])
    assert extend_to_independent_dominating(star_graph(5), V([0])) == V([])
    assert extend_to_independent_dominating(path_graph(4), V([1])) == V([3])
    with pytest.raises(PreconditionError):
        extend_to_independent_dominating(path_graph(4), V([1, 2]))


def test_certify_balanced_double_star():
    g = balanced_double_star(3)
    tr = peel(g, V([0, 1]))
    c = certify(g, tr, extend_to_independent_dominating(g, tr.X))
    assert (c.delta, c.gamma, c.k, c.degree_sum) == (4, 2, 1, 1)
    assert c.eq1_rhs == 3 and len(c.I) == 3
    assert c.i_upper == 4 and c.final_rhs == 4 and c.half_bound == 4
    assert c.passed and c.equality


def test_certify_star():
    g = star_graph(5)
    c = run_construction(g)
    assert (c.delta, c.gamma, c.k, c.degree_sum) == (5, 1, 1, 0)
    assert c.i_upper == 1 and c.final_rhs == 1 and c.passed


def test_certify_single_vertex():
    c = run_construction(Graph.from_edges(1, []))
    assert c.delta == 0 and c.i_upper == 1 and c.i_exact == 1 and c.gamma == 1
    assert c.passed and c.equality


@pytest.mark.parametrize("g, gamma, i_exact, equality", [
    (path_graph(4), 2, 2, True),
    (balanced_double_star(5), 2, 6, True),
    (star_graph(3), 1, 1, False),
])
def test_run_construction_examples(g, gamma, i_exact, equality):
    c = run_construction(g)
    assert c.passed
    assert c.gamma == gamma and c.i_exact == i_exact and c.i_upper >= i_exact
    assert c.equality == equality


def test_ratio_of_double_star_certificate():
    c = run_construction(balanced_double_star(5))
    assert Fraction(c.i_exact, c.gamma) == Fraction(c.delta, 2) == 3


def test_tampered_trace_fails_named_check():
    g = path_graph(4)
    d = V([1, 2])
    bad = PeelingTrace(d, (PeelingStep(1, 1, 0, V([1])), PeelingStep(2, 2, 0, V([2]))))
    c = certify(g, bad, extend_to_independent_dominating(g, bad.X) if is_independent(g, bad.X)
                else V([]))
    assert not c.passed
    assert "X_independent" in c.failed_checks


def test_every_minimum_dominating_set_certifies():
    for t in trees_up_to(9):
        for d in all_min_dominating_sets(t):
            c = run_construction(t, V(d))
            assert c.passed, (t.edges(), d, c.failed_checks)


def test_construction_invariants_small_trees():
    for t in trees_up_to(11):
        c = run_construction(t)
        tr = c.trace
        assert all(s.deg in (0, 1) and s.x in s.block for s in tr.steps)
        assert sum(s.deg + 1 for s in tr.steps) == c.gamma
        xi = tr.X | c.I
        assert is_independent(t, xi) and is_dominating(t, xi)
        assert len(c.I) <= (c.gamma - c.k) * c.delta - sum(s.deg ** 2 for s in tr.steps)
        if c.delta >= 2:
            assert (1 - Fraction(c.delta, 2)) * (c.degree_sum - c.k) >= 0


def test_certificate_json_round_trip():
    c = run_construction(balanced_double_star(2))
    assert BoundCertificate.from_dict(c.to_dict()) == c


def test_run_construction_requires_tree():
    with pytest.raises(PreconditionError):
        run_construction(complete_graph(3))
