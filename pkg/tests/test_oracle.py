from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from simwidth.decomposition import BranchDecomposition, caterpillar_from_ordering, f_width
from simwidth.errors import PreconditionError, SizeLimitError
from simwidth.generators import gen_ktst
from simwidth.graph import Graph
from simwidth.oracle import exact_linear_width, exact_width, linear_decomposition_width, tree_count

from conftest import complete, cycle, graphs, path, random_graph

FUNCS = ("sim", "mim", "cutrk")


def all_trees(vs):
    """Every leaf-labelled subcubic tree on ``vs``, unpruned."""
    n = len(vs)

    def grow(k, edges):
        if k == n:
            yield edges
            return
        node = n + k - 2
        for i, (x, y) in enumerate(edges):
            yield from grow(k + 1, edges[:i] + edges[i + 1:] + [(x, node), (node, y), (node, k)])

    for edges in grow(2, [(0, 1)]):
        yield BranchDecomposition(edges, {v: i for i, v in enumerate(vs)})


def naive_width(g, f):
    return min(f_width(g, d, f).max for d in all_trees(list(g.vertices)))


def naive_linear(g, f):
    return min(linear_decomposition_width(g, f, p) for p in itertools.permutations(g.vertices))


def test_tree_counts():
    assert [tree_count(n) for n in range(2, 8)] == [1, 1, 3, 15, 105, 945]
    for n in range(2, 7):
        assert sum(1 for _ in all_trees(list(range(n)))) == tree_count(n)


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=7))
def test_exact_matches_unpruned_enumeration(g):
    for f in FUNCS:
        value, d = exact_width(g, f)
        assert value == naive_width(g, f)
        assert f_width(g, d, f).max == value


@settings(max_examples=30, deadline=None)
@given(graphs(min_n=2, max_n=6))
def test_linear_matches_permutations(g):
    for f in FUNCS:
        value, order = exact_linear_width(g, f)
        assert sorted(order) == sorted(g.vertices)
        assert linear_decomposition_width(g, f, order) == value
        assert value == naive_linear(g, f)
        assert value >= exact_width(g, f)[0]


def test_frozen_values():
    for f in FUNCS:
        assert exact_width(complete(5), f)[0] == 1
        assert exact_width(cycle(4), f)[0] == 1
        assert exact_width(path(6), f)[0] == 1
    assert exact_width(cycle(6), "mim")[0] == 2
    assert exact_width(cycle(6), "sim")[0] == 1
    assert exact_width(Graph.from_edges(4, []), "cutrk")[0] == 0
    assert exact_linear_width(gen_ktst(2), "sim")[0] <= 1
    assert exact_linear_width(cycle(5), "mim")[0] == 2


def test_larger_graphs_respect_chain():
    for seed in range(3):
        g = random_graph(9, 0.4, seed)
        s, m, r = (exact_width(g, f)[0] for f in FUNCS)
        assert s <= m <= r


def test_trivial_sizes():
    value, d = exact_width(Graph(["x"]), "mim")
    assert value == 0 and d.leaf_map == {"x": 0}
    assert exact_linear_width(Graph(["x"]), "mim") == (0, ["x"])
    assert exact_width(path(2), "mim")[0] == 1
    with pytest.raises(PreconditionError):
        exact_width(Graph([]), "mim")
    with pytest.raises(PreconditionError):
        exact_linear_width(Graph([]), "mim")


def test_size_refusal():
    with pytest.raises(SizeLimitError) as info:
        exact_width(path(10), "mim")
    assert info.value.required == tree_count(10)
    with pytest.raises(SizeLimitError) as info:
        exact_linear_width(path(11), "mim")
    assert info.value.required == 39916800
    assert exact_width(path(10), "mim", max_n=10)[0] == 1


def test_caterpillar_is_an_upper_bound():
    g = random_graph(8, 0.5, 11)
    for f in FUNCS:
        assert exact_width(g, f)[0] <= f_width(g, caterpillar_from_ordering(list(g.vertices)), f).max
