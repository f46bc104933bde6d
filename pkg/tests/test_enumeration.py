import pytest

from domratio.enumeration import (
    count_trees,
    enumerate_trees,
    level_sequences,
    parents_from_levels,
)
from domratio.errors import DomainError
from domratio.graph import classify_forest, path_graph, star_graph
from domratio.graph6 import encode_graph6
from oracles import free_tree_count, prufer_tree_classes, tree_canonical_form


def _forms(n):
    return [tree_canonical_form(t.n, t.edges()) for t in enumerate_trees(n)]


def test_small_orders():
    assert len(list(enumerate_trees(1))) == 1
    assert count_trees(2) == 1
    trees = list(enumerate_trees(4))
    assert {tree_canonical_form(4, t.edges()) for t in trees} == {
        tree_canonical_form(4, path_graph(4).edges()),
        tree_canonical_form(4, star_graph(3).edges()),
    }
    assert count_trees(7) == 11
    assert count_trees(10) == 106


@pytest.mark.parametrize("n", range(1, 9))
def test_classes_match_prufer_oracle(n):
    forms = _forms(n)
    assert len(forms) == len(set(forms))
    assert set(forms) == prufer_tree_classes(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_restricted_prufer_covers_full_prufer(n):
    assert prufer_tree_classes(n, restricted=True) == prufer_tree_classes(n, restricted=False)


@pytest.mark.parametrize("n", range(9, 14))
def test_pairwise_non_isomorphic(n):
    forms = _forms(n)
    assert len(forms) == len(set(forms)) == free_tree_count(n)


def test_trees_are_valid_and_rooted_at_zero():
    for n in range(1, 12):
        for levels in level_sequences(n):
            assert levels[0] == 0 and all(h >= 1 for h in levels[1:])
            parents = parents_from_levels(levels)
            assert all(parents[v] < v for v in range(1, n))
        for t in enumerate_trees(n):
            assert t.n == n and t.num_edges == n - 1 and classify_forest(t).is_tree


def test_order_is_deterministic():
    assert [encode_graph6(t) for t in enumerate_trees(9)] == \
        [encode_graph6(t) for t in enumerate_trees(9)]


@pytest.mark.parametrize("shards", [2, 3, 7])
def test_shards_partition_the_stream(shards):
    whole = sorted(encode_graph6(t) for t in enumerate_trees(11))
    parts = []
    for sid in range(shards):
        parts.extend(encode_graph6(t) for t in enumerate_trees(11, shards, sid))
    assert sorted(parts) == whole


@pytest.mark.parametrize("bad", [0, 21, -1])
def test_order_range(bad):
    with pytest.raises(DomainError):
        count_trees(bad)
    with pytest.raises(DomainError):
        list(enumerate_trees(bad))


def test_bad_shard():
    with pytest.raises(DomainError):
        list(enumerate_trees(5, 2, 2))
