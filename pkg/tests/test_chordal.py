from __future__ import annotations

import itertools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simwidth.chordal import (CliqueTree, check_clique_tree, chordal_branch_decomposition, clique_tree,
                              one_sided_clique_certificate)
from simwidth.cuts import Cut
from simwidth.decomposition import cuts, f_width
from simwidth.errors import NotChordalError
from simwidth.generators import gen_hsu_clique_chain, gen_ktst, gen_random_chordal, gen_random_interval
from simwidth.graph import Graph
from simwidth.patterns import detect_ktst

from conftest import complete, cycle, path, to_nx


def test_complete_graph_has_one_bag():
    ct = clique_tree(complete(5))
    assert ct.bags == (frozenset(range(5)),) and ct.edges == ()


def test_tree_bags_are_edges():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    ct = clique_tree(g)
    assert sorted(sorted(b) for b in ct.bags) == sorted(sorted(e) for e in g.edges())
    assert check_clique_tree(g, ct) == []


def test_hsu_3x3_clique_tree():
    g = gen_hsu_clique_chain(3, 3)
    ct = clique_tree(g)
    assert check_clique_tree(g, ct) == []
    maximal = {frozenset(c) for c in nx.find_cliques(to_nx(g))}
    assert set(ct.bags) == maximal


def test_checker_flags_problems():
    g = path(3)
    assert check_clique_tree(g, CliqueTree(((0, 1),), (frozenset({0, 1}), frozenset({1, 2})))) == []
    assert check_clique_tree(g, CliqueTree((), (frozenset({0, 1}), frozenset({1, 2}))))
    assert check_clique_tree(g, CliqueTree(((0, 1),), (frozenset({0, 1, 2}), frozenset({1, 2}))))
    assert check_clique_tree(g, CliqueTree((), (frozenset({0, 1}),)))
    g3 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    bags = (frozenset({0, 1}), frozenset({2, 3}), frozenset({1, 2}))
    assert check_clique_tree(g3, CliqueTree(((0, 2), (1, 2)), bags)) == []
    # vertex 1 spans bags that are not connected in this tree
    assert check_clique_tree(g3, CliqueTree(((0, 1), (1, 2)), bags))


def test_non_chordal_rejected_with_cycle():
    for n in (4, 5, 7):
        with pytest.raises(NotChordalError) as info:
            chordal_branch_decomposition(cycle(n))
        cyc = info.value.cycle
        assert sorted(cyc) == list(range(n))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 25), st.floats(0, 1), st.integers(0, 10 ** 6))
def test_random_chordal_invariants(n, density, seed):
    g = gen_random_chordal(n, density, seed)
    assert nx.is_chordal(to_nx(g))
    ct = clique_tree(g)
    assert check_clique_tree(g, ct) == []
    assert set(ct.bags) == {frozenset(c) for c in nx.find_cliques(to_nx(g))}
    d = chordal_branch_decomposition(g)
    d.check_graph(g)
    if n >= 2:
        assert len(d.edges) == 2 * n - 3
        assert f_width(g, d, "sim").max <= 1
        for c in cuts(d, g):
            assert one_sided_clique_certificate(g, c).ok


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 16), st.integers(0, 10 ** 6))
def test_mim_bounded_when_ktst_free(n, seed):
    g = gen_random_chordal(n, 0.5, seed)
    d = chordal_branch_decomposition(g)
    mim = f_width(g, d, "mim").max
    for t in range(2, 6):
        if detect_ktst(g, t) is None:
            assert mim <= t - 1
            break


def test_interval_graphs_have_linear_structure():
    for seed in range(10):
        g = gen_random_interval(20, seed)
        assert f_width(g, chordal_branch_decomposition(g), "sim").max <= 1


def test_ktst3_decomposition():
    g = gen_ktst(3)
    d = chordal_branch_decomposition(g)
    assert f_width(g, d, "sim").max <= 1
    assert f_width(g, d, "mim").max <= 3


def test_certificate_examples():
    g = cycle(4)
    cert = one_sided_clique_certificate(g, Cut(g, frozenset({0, 2})))
    assert not cert.ok
    g = path(4)
    cert = one_sided_clique_certificate(g, Cut(g, frozenset({0, 1})))
    assert cert.ok and cert.a_boundary_clique and cert.b_boundary_clique


def test_small_and_disconnected_graphs():
    d = chordal_branch_decomposition(Graph([7]))
    assert d.leaf_map == {7: 0}
    g = Graph.from_edges(2, [])
    assert len(chordal_branch_decomposition(g).edges) == 1
    g = Graph.from_edges(7, [(0, 1), (1, 2), (3, 4)])
    d = chordal_branch_decomposition(g)
    d.check_graph(g)
    assert len(d.edges) == 11
    assert f_width(g, d, "sim").max <= 1


def test_every_subset_certificate_matches_definition():
    g = gen_hsu_clique_chain(2, 3)
    for r in range(1, g.n):
        for a in itertools.combinations(g.vertices, r):
            cut = Cut(g, frozenset(a))
            cert = one_sided_clique_certificate(g, cut)
            b = set(g.vertices) - set(a)
            a_bd = {x for x in a if g.neighbors(x) & b}
            b_bd = {y for y in b if g.neighbors(y) & set(a)}
            assert cert.a_boundary_clique == g.is_clique(a_bd)
            assert cert.b_boundary_clique == g.is_clique(b_bd)
