"""Constructors for the graph families used throughout the package.

All generated graphs have vertices ``0..n-1``.  Grid-like families number
their vertices so that the attached certificate (ordering or chord model)
can be checked against the same ids.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .errors import GraphError
from .graph import Graph


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def gen_ktkt(t: int) -> Graph:
    """Cliques ``0..t-1`` and ``t..2t-1``; ``i`` matched to ``t+i``."""
    _need(t >= 1, "t must be positive")
    edges = list(combinations(range(t), 2)) + list(combinations(range(t, 2 * t), 2))
    edges += [(i, t + i) for i in range(t)]
    return Graph.from_edges(2 * t, edges)


def gen_ktst(t: int) -> Graph:
    """Clique ``0..t-1``, independent set ``t..2t-1``; ``i`` matched to ``t+i``."""
    _need(t >= 1, "t must be positive")
    edges = list(combinations(range(t), 2)) + [(i, t + i) for i in range(t)]
    return Graph.from_edges(2 * t, edges)


def grid_vertex(p: int, i: int, j: int) -> int:
    """Id of ``v_{i,j}`` (1-based row ``i``, column ``j``) in a ``p``-row grid family."""
    return (j - 1) * p + (i - 1)


def gen_column_clique_grid(p: int, q: int) -> tuple[Graph, list[int]]:
    """Column cliques plus same-row edges between consecutive columns.

    Returns the graph with its column-major co-comparability ordering.
    """
    _need(p >= 1 and q >= 1, "p, q must be positive")
    edges = []
    for j in range(1, q + 1):
        col = [grid_vertex(p, i, j) for i in range(1, p + 1)]
        edges += combinations(col, 2)
        if j < q:
            edges += [(grid_vertex(p, i, j), grid_vertex(p, i, j + 1)) for i in range(1, p + 1)]
    return Graph.from_edges(p * q, edges), list(range(p * q))


def gen_hsu_clique_chain(p: int, q: int) -> Graph:
    """Column cliques; ``v_{i1,j} ~ v_{i2,j+1}`` iff ``i1 <= i2``."""
    _need(p >= 1 and q >= 1, "p, q must be positive")
    edges = []
    for j in range(1, q + 1):
        col = [grid_vertex(p, i, j) for i in range(1, p + 1)]
        edges += combinations(col, 2)
        if j < q:
            edges += [(grid_vertex(p, i1, j), grid_vertex(p, i2, j + 1))
                      for i1 in range(1, p + 1) for i2 in range(i1, p + 1)]
    return Graph.from_edges(p * q, edges)


def gen_split_lowerbound(m: int) -> Graph:
    """Clique ``0..m-1`` and independent vertices ``m-1+k`` for ``k = 1..2^m-1``.

    The independent vertex for ``k`` sees clique vertex ``i`` iff bit ``i`` of
    ``k`` is set, so all neighbourhoods are distinct and non-empty.
    """
    _need(m >= 2, "m must be at least 2")
    edges = list(combinations(range(m), 2))
    for k in range(1, 2 ** m):
        edges += [(i, m - 1 + k) for i in range(m) if k >> i & 1]
    return Graph.from_edges(m + 2 ** m - 1, edges)


# -- subdivided grid and its circle model -------------------------------------


def subdivided_grid_labels(k: int) -> list[tuple[str, int, int]]:
    """Labels by vertex id: ``('a', i, j)`` grid vertices, then ``('h', i, j)``
    horizontal and ``('v', i, j)`` vertical subdivision vertices (1-based)."""
    labels = [("a", i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    labels += [("h", i, j) for i in range(1, k + 1) for j in range(1, k)]
    labels += [("v", i, j) for i in range(1, k) for j in range(1, k + 1)]
    return labels


def gen_grid_subdivision(k: int) -> Graph:
    """1-subdivision of the ``k x k`` grid, ids as in :func:`subdivided_grid_labels`."""
    _need(k >= 2, "k must be at least 2")
    ids = {lab: n for n, lab in enumerate(subdivided_grid_labels(k))}
    edges = []
    for (kind, i, j), x in ids.items():
        if kind == "h":
            edges += [(ids["a", i, j], x), (x, ids["a", i, j + 1])]
        elif kind == "v":
            edges += [(ids["a", i, j], x), (x, ids["a", i + 1, j])]
    return Graph.from_edges(len(ids), edges)


@dataclass(frozen=True)
class ChordModel:
    """Chords between circle points ``1..num_points`` (clockwise)."""

    num_points: int
    chords: dict[int, tuple[int, int]]
    labels: dict[int, tuple] = field(default_factory=dict)


def circle_chords(k: int) -> dict[tuple[str, int, int], tuple[int, int]]:
    """Endpoints of every chord of the circle model, keyed by vertex label."""
    _need(k >= 2, "k must be at least 2")
    chords = {}
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            if i % 2:
                chords["a", i, j] = (6 * (i - 1) * k + 6 * j - 5, 6 * (i - 1) * k + 6 * j)
            else:
                chords["a", i, j] = (6 * i * k - 6 * j + 1, 6 * i * k - 6 * j + 6)
    for i in range(1, k + 1):
        for j in range(1, k):
            if i % 2:
                chords["h", i, j] = (6 * (i - 1) * k + 6 * j - 1, 6 * (i - 1) * k + 6 * j + 2)
            else:
                chords["h", i, j] = (6 * i * k - 6 * j + 2, 6 * i * k - 6 * j - 1)
    for i in range(1, k):
        for j in range(1, k + 1):
            if i % 2:
                chords["v", i, j] = (6 * (i - 1) * k + 6 * j - 2, 6 * i * k + 6 * (k - j) + 3)
            else:
                chords["v", i, j] = (6 * i * k - 6 * j + 4, 6 * i * k + 6 * j - 3)
    return chords


def chords_cross(c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    """Chords with distinct endpoints cross iff their endpoints interleave."""
    a, b = sorted(c1)
    return (a < c2[0] < b) != (a < c2[1] < b)


def circle_graph_from_chords(model: ChordModel) -> Graph:
    seen = set()
    for p in (p for c in model.chords.values() for p in c):
        if p in seen:
            raise GraphError(f"circle point {p} used twice")
        seen.add(p)
    verts = sorted(model.chords)
    edges = [(u, v) for u, v in combinations(verts, 2) if chords_cross(model.chords[u], model.chords[v])]
    return Graph(verts, edges)


def gen_circle_Gk(k: int) -> tuple[Graph, ChordModel]:
    """Triangle-free circle graph containing the subdivided ``k x k`` grid.

    Adjacency comes only from the chord geometry; vertex ids match
    :func:`gen_grid_subdivision`.
    """
    labels = subdivided_grid_labels(k)
    by_label = circle_chords(k)
    model = ChordModel(6 * k * k, {n: by_label[lab] for n, lab in enumerate(labels)},
                       dict(enumerate(labels)))
    return circle_graph_from_chords(model), model


# -- seeded random families ----------------------------------------------------


def gen_random_chordal(n: int, density: float, seed: int) -> Graph:
    """Random graph of the given edge density, filled in along a random
    elimination order (which becomes a perfect elimination ordering)."""
    _need(n >= 1, "n must be positive")
    rng = random.Random(seed)
    adj = [set() for _ in range(n)]
    for u, v in combinations(range(n), 2):
        if rng.random() < density:
            adj[u].add(v)
            adj[v].add(u)
    order = list(range(n))
    rng.shuffle(order)
    done = set()
    for v in order:
        later = sorted(adj[v] - done)
        for a, b in combinations(later, 2):
            adj[a].add(b)
            adj[b].add(a)
        done.add(v)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])


def gen_random_interval(n: int, seed: int, span: int | None = None) -> Graph:
    """Intersection graph of ``n`` random closed integer intervals."""
    _need(n >= 1, "n must be positive")
    rng = random.Random(seed)
    span = span or 3 * n
    intervals = []
    for _ in range(n):
        left = rng.randrange(span)
        intervals.append((left, left + rng.randint(0, max(1, span // 4))))
    edges = [(u, v) for u, v in combinations(range(n), 2)
             if intervals[u][0] <= intervals[v][1] and intervals[v][0] <= intervals[u][1]]
    return Graph.from_edges(n, edges)


def permutation_graph(perm: list[int]) -> Graph:
    """``i ~ j`` iff the pair is inverted by ``perm``; index order is a
    co-comparability ordering of the result."""
    n = len(perm)
    return Graph.from_edges(n, [(i, j) for i, j in combinations(range(n), 2) if perm[i] > perm[j]])


def gen_random_permutation(n: int, seed: int) -> Graph:
    _need(n >= 1, "n must be positive")
    rng = random.Random(seed)
    perm = list(range(n))
    rng.shuffle(perm)
    return permutation_graph(perm)
