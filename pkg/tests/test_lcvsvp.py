from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simwidth.chordal import chordal_branch_decomposition
from simwidth.decomposition import BranchDecomposition, caterpillar_from_ordering
from simwidth.errors import DecompositionError, FormatError, GraphError
from simwidth.generators import gen_column_clique_grid, gen_hsu_clique_chain, gen_ktst
from simwidth.graph import Graph
from simwidth.lcvsvp import (NATURALS, POSITIVE, ZERO, DegreeConstraintMatrix, FinCofSet, Mode,
                             NeighborClassIndex, Objective, PartitionProblem, SigmaRhoProblem,
                             brute_dq, brute_sigma_rho, brute_solve, check_dq_partition, check_sigma_rho,
                             class_statistics, d_value, is_degenerate, parse_problem, solve,
                             solve_dq_partition, solve_sigma_rho)

from conftest import complete, cycle, graphs, path, random_decomposition

PROBLEMS = ["dominating-set", "independent-set", "total-dominating-set", "coloring:2", "coloring:3"]


# -- degree sets and matrices ---------------------------------------------------


def test_d_values():
    assert d_value(NATURALS) == 0
    assert d_value(POSITIVE) == 1
    assert d_value(ZERO) == 1
    assert d_value(FinCofSet.finite(0, 2, 4)) == 5
    assert d_value(FinCofSet.cofinite(1, 3)) == 4
    assert d_value(FinCofSet.finite()) == 0
    assert is_degenerate(FinCofSet.finite()) and not is_degenerate(ZERO)


def test_membership():
    assert 5 in NATURALS and 0 not in POSITIVE and 3 in POSITIVE
    even = FinCofSet.finite(0, 2)
    assert even.contains(2) and not even.contains(3)
    assert NATURALS.is_all and not POSITIVE.is_all
    with pytest.raises(GraphError):
        FinCofSet.finite(-1)


def test_fincof_parse_round_trip():
    for text in ("finite:0,2,4", "cofinite:0", "cofinite:", "finite:"):
        assert str(FinCofSet.parse(text)) == text
    assert FinCofSet.parse(" FINITE: 3 , 1 ") == FinCofSet.finite(1, 3)
    for bad in ("0,1", "weird:1", "finite:x", "finite:-2"):
        with pytest.raises(FormatError):
            FinCofSet.parse(bad)


def test_matrices():
    m = DegreeConstraintMatrix.coloring(3)
    assert m.q == 3 and m.d == 1 and m[0, 0] == ZERO and m[0, 1] == NATURALS
    m = DegreeConstraintMatrix.sigma_rho(FinCofSet.finite(0, 2), POSITIVE)
    assert m.q == 2 and m.d == 3 and m.column_d(0) == 3 and m.column_d(1) == 0
    with pytest.raises(GraphError):
        DegreeConstraintMatrix(((ZERO, NATURALS),))
    with pytest.raises(GraphError):
        DegreeConstraintMatrix.coloring(0)


def test_parse_problem():
    p = parse_problem("dominating-set")
    assert isinstance(p, SigmaRhoProblem) and p.objective is Objective.MIN and p.rho == POSITIVE
    assert parse_problem("independent-set").objective is Objective.MAX
    assert parse_problem("independent-set", "min").objective is Objective.MIN
    assert parse_problem("total-dominating-set").sigma == POSITIVE
    p = parse_problem("coloring:4")
    assert isinstance(p, PartitionProblem) and p.matrix.q == 4
    p = parse_problem("sigma=finite:1;rho=cofinite:0")
    assert p.sigma == FinCofSet.finite(1) and p.objective is Objective.MIN
    for bad in ("steiner", "coloring:x", "coloring:0", "sigma=finite:1", "sigma=finite:1;rho"):
        with pytest.raises(FormatError):
            parse_problem(bad)
    with pytest.raises(FormatError):
        Objective.parse("median")


# -- checkers -------------------------------------------------------------------


def test_sigma_rho_checker():
    g = path(4)
    ds = parse_problem("dominating-set")
    assert check_sigma_rho(g, {1, 2}, ds.sigma, ds.rho)
    assert check_sigma_rho(g, 0b0110, ds.sigma, ds.rho)
    assert not check_sigma_rho(g, {0}, ds.sigma, ds.rho)
    ind = parse_problem("independent-set")
    assert check_sigma_rho(g, {0, 2}, ind.sigma, ind.rho)
    assert not check_sigma_rho(g, {0, 1}, ind.sigma, ind.rho)


def test_partition_checker():
    g = cycle(4)
    m = DegreeConstraintMatrix.coloring(2)
    assert check_dq_partition(g, [{0, 2}, {1, 3}], m)
    assert not check_dq_partition(g, [{0, 1}, {2, 3}], m)
    with pytest.raises(GraphError):
        check_dq_partition(g, [{0, 2}, {1, 2, 3}], m)
    with pytest.raises(GraphError):
        check_dq_partition(g, [{0, 2}, {1}], m)
    with pytest.raises(GraphError):
        check_dq_partition(g, [{0, 1, 2, 3}], m)


def test_class_index():
    g = path(4)
    idx = NeighborClassIndex(g, 0b0011, 1)
    # only vertex 2 observes side {0, 1}; it sees vertex 1 or not
    assert len(idx) == 2
    assert idx.key(0b01) == idx.key(0) and idx.key(0b10) != idx.key(0)
    assert idx.class_of(0b11) == idx.class_of(0b10)
    assert len(NeighborClassIndex(g, 0b0011, 0)) == 1
    with pytest.raises(ValueError):
        idx.key(0b100)


# -- solving --------------------------------------------------------------------


def chordal_or_caterpillar(g):
    try:
        return chordal_branch_decomposition(g)
    except Exception:
        return caterpillar_from_ordering(list(g.vertices))


def test_colouring_examples():
    k3 = complete(3)
    d = chordal_branch_decomposition(k3)
    assert solve(k3, d, parse_problem("coloring:2")) is None
    cert = solve(k3, d, parse_problem("coloring:3"))
    assert cert.partition is not None and cert.objective == 0
    c4 = cycle(4)
    cert = solve(c4, caterpillar_from_ordering([0, 1, 2, 3]), parse_problem("coloring:2"))
    assert check_dq_partition(c4, cert.partition, DegreeConstraintMatrix.coloring(2))
    g, order = gen_column_clique_grid(3, 3)
    assert solve(g, caterpillar_from_ordering(order), parse_problem("coloring:3")) is not None
    assert solve(g, caterpillar_from_ordering(order), parse_problem("coloring:2")) is None


def test_frozen_optima():
    cases = [
        (gen_ktst(3), "dominating-set", 3),
        (gen_ktst(3), "independent-set", 3),
        (gen_ktst(3), "total-dominating-set", 3),
        (complete(6), "dominating-set", 1),
        (complete(6), "independent-set", 1),
        (cycle(4), "dominating-set", 2),
        (cycle(5), "independent-set", 2),
        (gen_hsu_clique_chain(3, 3), "dominating-set", 2),
        (gen_hsu_clique_chain(3, 3), "independent-set", 3),
        (gen_hsu_clique_chain(3, 3), "total-dominating-set", 2),
    ]
    for g, name, value in cases:
        cert = solve(g, chordal_or_caterpillar(g), parse_problem(name))
        assert cert.objective == value == len(cert.selected), (name, g)


def test_total_domination_infeasible_with_isolated_vertex():
    g = Graph.from_edges(3, [(0, 1)])
    assert solve(g, caterpillar_from_ordering([0, 1, 2]), parse_problem("total-dominating-set")) is None
    assert brute_solve(g, parse_problem("total-dominating-set")) is None


def test_weighted_domination():
    g = path(3)
    d = caterpillar_from_ordering([0, 1, 2])
    cert = solve(g, d, parse_problem("dominating-set"), weights={0: 1, 1: 5, 2: 1})
    assert cert.selected == {0, 2} and cert.objective == 2
    cert = solve(g, d, parse_problem("dominating-set"), weights={0: 1, 1: 1, 2: 1})
    assert cert.selected == {1} and cert.objective == 1
    unit = solve(g, d, parse_problem("independent-set"))
    assert unit.objective == 2
    cert = solve(g, d, parse_problem("independent-set"), weights={1: 9})
    assert cert.selected == {1} and cert.objective == 9
    with pytest.raises(GraphError):
        solve(g, d, parse_problem("dominating-set"), weights={7: 1})
    with pytest.raises(GraphError):
        solve(g, d, parse_problem("dominating-set"), weights={0: -1})


def test_decomposition_mismatch_rejected():
    d = caterpillar_from_ordering([0, 1, 2])
    with pytest.raises(DecompositionError):
        solve(path(4), d, parse_problem("dominating-set"))
    with pytest.raises(DecompositionError):
        solve(path(4), d, parse_problem("coloring:2"))


def test_single_vertex():
    g = Graph(["x"])
    d = BranchDecomposition([], {"x": 0})
    assert solve(g, d, parse_problem("dominating-set")).selected == {"x"}
    assert solve(g, d, parse_problem("independent-set")).objective == 1
    assert solve(g, d, parse_problem("total-dominating-set")) is None
    assert solve(g, d, parse_problem("coloring:1")).partition == (frozenset({"x"}),)


def test_instrumentation_respects_class_bound():
    g = gen_hsu_clique_chain(3, 3)
    d = chordal_branch_decomposition(g)
    cert = solve(g, d, parse_problem("dominating-set"), instrument=True)
    stats = cert.extra["classes"]
    assert len(stats) == len(d.edges)
    assert all(s["ok"] for s in stats)
    assert all(s["classes"] <= s["bound"] for s in stats)
    assert solve(g, d, parse_problem("dominating-set")).extra == {}


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=2, max_n=9), st.integers(0, 10 ** 6))
def test_class_counts_bounded(g, seed):
    d = random_decomposition(g, random.Random(seed))
    for dd in (1, 2):
        assert all(s["ok"] for s in class_statistics(g, d, dd))


@settings(max_examples=80, deadline=None)
@given(graphs(min_n=1, max_n=8), st.integers(0, 10 ** 6), st.sampled_from(PROBLEMS))
def test_dp_matches_brute_force(g, seed, name):
    d = random_decomposition(g, random.Random(seed))
    problem = parse_problem(name)
    got = solve(g, d, problem)
    want = brute_solve(g, problem)
    assert (got is None) == (want is None)
    if got is not None and isinstance(problem, SigmaRhoProblem):
        assert got.objective == want.objective


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7), st.integers(0, 10 ** 6), st.data())
def test_dp_matches_brute_force_on_random_constraints(g, seed, data):
    sets = st.builds(lambda mode, xs: FinCofSet(mode, frozenset(xs)),
                     st.sampled_from(list(Mode)), st.sets(st.integers(0, 3), max_size=2))
    sigma, rho = data.draw(sets), data.draw(sets)
    objective = data.draw(st.sampled_from(["min", "max"]))
    weights = data.draw(st.one_of(st.none(), st.fixed_dictionaries({v: st.integers(0, 5) for v in g.vertices})))
    d = random_decomposition(g, random.Random(seed))
    got = solve_sigma_rho(g, d, sigma, rho, objective, weights)
    want = brute_sigma_rho(g, sigma, rho, objective, weights)
    assert (got is None) == (want is None)
    if got is not None:
        assert got.objective == want.objective
    if g.n <= 6:
        entries = tuple(tuple(data.draw(sets) for _ in range(2)) for _ in range(2))
        m = DegreeConstraintMatrix(entries)
        got = solve_dq_partition(g, d, m)
        want = brute_dq(g, m)
        assert (got is None) == (want is None)
