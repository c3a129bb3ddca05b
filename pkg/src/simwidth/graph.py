"""Immutable simple graphs, induced-minor edits, GF(2) rank and chordality.

Vertices are opaque hashable identifiers kept in a fixed order; every vertex
also has a position (its *index*) and adjacency is stored as one Python int
bitmask per index.  All the width machinery works on those masks.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple, Sequence

from .errors import GraphError, PreconditionError

Vertex = Hashable


def bits(mask: int):
    """Yield the positions of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


class Graph:
    """A simple undirected graph; never mutated after construction."""

    __slots__ = ("_vertices", "_index", "_rows", "_contractions")

    def __init__(self, vertices: Iterable[Vertex], edges: Iterable[tuple[Vertex, Vertex]] = (),
                 contractions: dict | None = None):
        self._vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self._vertices)}
        if len(self._index) != len(self._vertices):
            raise GraphError("duplicate vertex identifier")
        rows = [0] * len(self._vertices)
        for u, v in edges:
            try:
                i, j = self._index[u], self._index[v]
            except KeyError as exc:
                raise GraphError(f"edge endpoint {exc.args[0]!r} is not a vertex") from None
            if i == j:
                raise GraphError(f"self-loop at {u!r}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        self._rows = tuple(rows)
        self._contractions = dict(contractions or {})

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Graph on vertices ``0..n-1``."""
        return cls(range(n), edges)

    @classmethod
    def _from_rows(cls, vertices: Sequence[Vertex], rows: Sequence[int], contractions=None) -> "Graph":
        g = cls.__new__(cls)
        g._vertices = tuple(vertices)
        g._index = {v: i for i, v in enumerate(g._vertices)}
        g._rows = tuple(rows)
        g._contractions = dict(contractions or {})
        return g

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return sum(popcount(r) for r in self._rows) // 2

    @property
    def rows(self) -> tuple[int, ...]:
        """Adjacency bitmask of every vertex, by index."""
        return self._rows

    @property
    def full_mask(self) -> int:
        return (1 << len(self._vertices)) - 1

    @property
    def contractions(self) -> dict:
        """Map from each vertex minted by :func:`contract_edge` to the pair it replaced."""
        return dict(self._contractions)

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._index

    def __iter__(self):
        return iter(self._vertices)

    def index(self, v: Vertex) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise GraphError(f"unknown vertex {v!r}") from None

    def mask(self, vs: Iterable[Vertex]) -> int:
        m = 0
        for v in vs:
            m |= 1 << self.index(v)
        return m

    def members(self, mask: int) -> list:
        return [self._vertices[i] for i in bits(mask)]

    def edges(self) -> list[tuple]:
        """Edges as ``(u, v)`` with ``index(u) < index(v)``, in index order."""
        out = []
        for i, row in enumerate(self._rows):
            for j in bits(row >> (i + 1)):
                out.append((self._vertices[i], self._vertices[i + 1 + j]))
        return out

    def neighbors(self, v: Vertex) -> frozenset:
        return frozenset(self.members(self._rows[self.index(v)]))

    def degree(self, v: Vertex) -> int:
        return popcount(self._rows[self.index(v)])

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return bool(self._rows[self.index(u)] >> self.index(v) & 1)

    def is_clique(self, vs: Iterable[Vertex]) -> bool:
        return self.is_clique_mask(self.mask(vs))

    def is_clique_mask(self, mask: int) -> bool:
        for i in bits(mask):
            if (mask & ~self._rows[i]) != 1 << i:
                return False
        return True

    def is_independent_mask(self, mask: int) -> bool:
        return all(not (self._rows[i] & mask) for i in bits(mask))

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if set(self._vertices) != set(other._vertices):
            return False
        return {frozenset(e) for e in self.edges()} == {frozenset(e) for e in other.edges()}

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), frozenset(frozenset(e) for e in self.edges())))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- editing operations ------------------------------------------------------


def induced_subgraph(g: Graph, xs: Iterable[Vertex]) -> Graph:
    """``G[X]``; vertex identifiers and their relative order are preserved."""
    keep_mask = g.mask(xs)
    keep = list(bits(keep_mask))
    pos = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        r = 0
        for j in bits(g.rows[old] & keep_mask):
            r |= 1 << pos[j]
        rows.append(r)
    return Graph._from_rows([g.vertices[i] for i in keep], rows, g.contractions)


def delete_vertex(g: Graph, v: Vertex) -> Graph:
    i = g.index(v)
    return induced_subgraph(g, g.members(g.full_mask & ~(1 << i)))


def _fresh_vertex(g: Graph, u, v):
    if all(isinstance(x, int) for x in g.vertices):
        return max(g.vertices) + 1
    return ("z", u, v)


def contract_edge(g: Graph, u: Vertex, v: Vertex) -> Graph:
    """``G/uv``.  The merged vertex gets a fresh identifier placed where ``u`` was.

    The new identifier is recorded in :attr:`Graph.contractions` of the result.
    """
    if not g.adjacent(u, v):
        raise GraphError(f"{u!r}{v!r} is not an edge")
    z = _fresh_vertex(g, u, v)
    iu, iv = g.index(u), g.index(v)
    nbrs = (g.rows[iu] | g.rows[iv]) & ~((1 << iu) | (1 << iv))
    vertices = [z if x == u else x for x in g.vertices if x != v]
    edges = [(a, b) for a, b in g.edges() if u not in (a, b) and v not in (a, b)]
    edges += [(z, w) for w in g.members(nbrs)]
    contractions = g.contractions
    contractions[z] = (u, v)
    return Graph(vertices, edges, contractions)


def smooth_vertex(g: Graph, v: Vertex) -> Graph:
    """Remove ``v`` of degree 2 and join its two non-adjacent neighbours."""
    nbrs = sorted(g.neighbors(v), key=g.index)
    if len(nbrs) != 2:
        raise PreconditionError(f"{v!r} has degree {len(nbrs)}, expected 2")
    a, b = nbrs
    if g.adjacent(a, b):
        raise PreconditionError(f"neighbours {a!r}, {b!r} of {v!r} are adjacent")
    vertices = [x for x in g.vertices if x != v]
    edges = [e for e in g.edges() if v not in e] + [(a, b)]
    return Graph(vertices, edges, g.contractions)


# -- GF(2) linear algebra ----------------------------------------------------


@dataclass(frozen=True)
class BitMatrix:
    """0/1 matrix over GF(2), one int bitmask per row (bit ``j`` is column ``j``)."""

    rows: tuple[int, ...]
    ncols: int

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]]) -> "BitMatrix":
        ncols = len(entries[0]) if entries else 0
        rows = []
        for row in entries:
            if len(row) != ncols:
                raise GraphError("ragged matrix")
            rows.append(sum(1 << j for j, x in enumerate(row) if x & 1))
        return cls(tuple(rows), ncols)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> int:
        return self.rows[i] >> j & 1

    def transpose(self) -> "BitMatrix":
        cols = []
        for j in range(self.ncols):
            cols.append(sum(1 << i for i, r in enumerate(self.rows) if r >> j & 1))
        return BitMatrix(tuple(cols), self.nrows)


def gf2_rank(matrix: BitMatrix | Sequence[int]) -> int:
    """Rank over GF(2) by Gaussian elimination on row bitmasks."""
    rows = matrix.rows if isinstance(matrix, BitMatrix) else matrix
    pivots: dict[int, int] = {}
    for r in rows:
        while r:
            top = r.bit_length() - 1
            if top not in pivots:
                pivots[top] = r
                break
            r ^= pivots[top]
    return len(pivots)


# -- chordality --------------------------------------------------------------


class ChordalityResult(NamedTuple):
    is_chordal: bool
    peo: list | None
    """Perfect elimination ordering, first element eliminated first."""
    witness_cycle: list | None
    """Induced cycle of length >= 4 when the graph is not chordal."""


def _mcs_order(g: Graph) -> list[int]:
    """Maximum cardinality search; returns indices in visiting order."""
    n = g.n
    weight = [0] * n
    unvisited = g.full_mask
    order = []
    for _ in range(n):
        best = max(bits(unvisited), key=lambda i: (weight[i], -i))
        order.append(best)
        unvisited &= ~(1 << best)
        for j in bits(g.rows[best] & unvisited):
            weight[j] += 1
    return order


def _shortest_path(g: Graph, src: int, dst: int, allowed: int) -> list[int] | None:
    prev = {src: None}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            path = []
            while x is not None:
                path.append(x)
                x = prev[x]
            return path[::-1]
        for y in bits(g.rows[x] & allowed):
            if y not in prev:
                prev[y] = x
                queue.append(y)
    return None


def _cycle_through(g: Graph, v: int, x: int, y: int) -> list[int] | None:
    """Induced cycle ``v, x, ..., y`` for non-adjacent neighbours ``x, y`` of ``v``."""
    blocked = g.rows[v] | (1 << v)
    allowed = (g.full_mask & ~blocked) | (1 << x) | (1 << y)
    path = _shortest_path(g, x, y, allowed)
    if path is None:
        return None
    return [v] + path


def chordality_check(g: Graph) -> ChordalityResult:
    """Maximum-cardinality-search recognition with an induced-cycle witness."""
    order = _mcs_order(g)
    peo = order[::-1]
    later = g.full_mask
    failure = None
    for v in peo:
        later &= ~(1 << v)
        higher = g.rows[v] & later
        if not g.is_clique_mask(higher):
            failure = (v, higher)
            break
    if failure is None:
        return ChordalityResult(True, [g.vertices[i] for i in peo], None)

    # The failing vertex usually yields the cycle directly; otherwise any
    # induced cycle passes through some vertex and two of its neighbours.
    v, higher = failure
    attempts = [(v, higher)] + [(u, g.rows[u]) for u in range(g.n)]
    for u, around in attempts:
        nb = list(bits(around))
        for a_pos, x in enumerate(nb):
            for y in nb[a_pos + 1:]:
                if g.rows[x] >> y & 1:
                    continue
                cycle = _cycle_through(g, u, x, y)
                if cycle is not None:
                    return ChordalityResult(False, None, [g.vertices[i] for i in cycle])
    raise AssertionError("non-simplicial vertex found but no induced cycle")


def is_perfect_elimination_ordering(g: Graph, order: Sequence[Vertex]) -> bool:
    remaining = g.full_mask
    for v in order:
        i = g.index(v)
        remaining &= ~(1 << i)
        if not g.is_clique_mask(g.rows[i] & remaining):
            return False
    return not remaining
