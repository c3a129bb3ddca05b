from __future__ import annotations

import random
import sys

import networkx as nx
from hypothesis import strategies as st

from simwidth.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges())
    return h


def random_graph(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 9) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [e for e, keep in zip(pairs, mask) if keep])


def random_decomposition(g: Graph, rng: random.Random):
    """Uniform-ish random branch decomposition by random leaf insertion."""
    from simwidth.decomposition import BranchDecomposition

    vs = list(g.vertices)
    rng.shuffle(vs)
    n = len(vs)
    if n == 1:
        return BranchDecomposition([], {vs[0]: 0})
    edges = [(0, 1)]
    nxt = n
    for k in range(2, n):
        x, y = edges.pop(rng.randrange(len(edges)))
        edges += [(x, nxt), (nxt, y), (nxt, k)]
        nxt += 1
    return BranchDecomposition(edges, {v: i for i, v in enumerate(vs)})


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
