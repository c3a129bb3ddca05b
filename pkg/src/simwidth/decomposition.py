"""Branch decompositions, their cuts and widths, balanced cuts, and the
decomposition transform that follows an edge contraction."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cuts import Cut, CutFunction, cut_value
from .errors import DecompositionError, GraphError, PreconditionError
from .graph import Graph, Vertex, contract_edge

Edge = tuple[int, int]


def _edge(x: int, y: int) -> Edge:
    return (x, y) if x < y else (y, x)


class BranchDecomposition:
    """A subcubic tree plus a bijection from graph vertices to its leaves.

    Tree nodes are integers.  A one-vertex graph is represented by a
    single-node tree without edges.
    """

    __slots__ = ("_adj", "_leaf_map", "_leaf_of")

    def __init__(self, tree_edges: Iterable[tuple[int, int]], leaf_map: Mapping[Vertex, int],
                 nodes: Iterable[int] = ()):
        adj: dict[int, set[int]] = {x: set() for x in nodes}
        for x, y in tree_edges:
            if x == y:
                raise DecompositionError(f"tree loop at node {x}")
            adj.setdefault(x, set()).add(y)
            adj.setdefault(y, set()).add(x)
        for node in leaf_map.values():
            adj.setdefault(node, set())
        self._adj = {x: frozenset(ys) for x, ys in adj.items()}
        self._leaf_map = dict(leaf_map)
        self._leaf_of = {node: v for v, node in self._leaf_map.items()}
        self._validate()

    def _validate(self) -> None:
        nodes = self._adj
        n_edges = sum(len(ys) for ys in nodes.values()) // 2
        if nodes and n_edges != len(nodes) - 1:
            raise DecompositionError("tree must have exactly |nodes| - 1 edges")
        if nodes:
            start = next(iter(nodes))
            seen = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in nodes[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            if len(seen) != len(nodes):
                raise DecompositionError("tree is not connected")
        if len(self._leaf_of) != len(self._leaf_map):
            raise DecompositionError("two vertices share a leaf")
        leaves = {x for x, ys in nodes.items() if len(ys) <= 1}
        if leaves != set(self._leaf_of):
            raise DecompositionError("leaf map must be a bijection onto the leaves")
        for x, ys in nodes.items():
            if len(ys) not in (0, 1, 3):
                raise DecompositionError(f"internal node {x} has degree {len(ys)}, expected 3")

    # -- structure ---------------------------------------------------------

    @property
    def tree(self) -> dict[int, frozenset[int]]:
        return dict(self._adj)

    @property
    def nodes(self) -> list[int]:
        return sorted(self._adj)

    @property
    def edges(self) -> list[Edge]:
        return sorted({_edge(x, y) for x, ys in self._adj.items() for y in ys})

    @property
    def leaf_map(self) -> dict:
        return dict(self._leaf_map)

    def leaf(self, v: Vertex) -> int:
        return self._leaf_map[v]

    def vertex_at(self, node: int):
        return self._leaf_of.get(node)

    def neighbors(self, node: int) -> frozenset[int]:
        return self._adj[node]

    @property
    def is_linear(self) -> bool:
        """True iff the tree is a caterpillar."""
        for x, ys in self._adj.items():
            if len(ys) > 1 and sum(1 for y in ys if len(self._adj[y]) > 1) > 2:
                return False
        return True

    def __eq__(self, other) -> bool:
        if not isinstance(other, BranchDecomposition):
            return NotImplemented
        return self._adj == other._adj and self._leaf_map == other._leaf_map

    def __repr__(self) -> str:
        return f"BranchDecomposition(leaves={len(self._leaf_map)}, nodes={len(self._adj)})"

    def check_graph(self, g: Graph) -> None:
        if set(self._leaf_map) != set(g.vertices):
            raise DecompositionError("decomposition leaves do not match the graph's vertices")

    def relabel_nodes(self) -> "BranchDecomposition":
        """Same decomposition with nodes renumbered ``0..`` in sorted order."""
        new = {x: i for i, x in enumerate(sorted(self._adj))}
        return BranchDecomposition([(new[x], new[y]) for x, y in self.edges],
                                   {v: new[x] for v, x in self._leaf_map.items()},
                                   new.values())

    def edge_sides(self, g: Graph) -> dict[Edge, int]:
        """Bitmask (over ``g``'s vertex indices) of one side of every tree edge.

        The side is the component not containing the smallest node.
        """
        self.check_graph(g)
        if not self._adj:
            return {}
        root = min(self._adj)
        parent = {root: None}
        order = [root]
        for x in order:
            for y in self._adj[x]:
                if y not in parent:
                    parent[y] = x
                    order.append(y)
        below = {}
        for x in reversed(order):
            m = 0
            v = self._leaf_of.get(x)
            if v is not None:
                m |= 1 << g.index(v)
            for y in self._adj[x]:
                if y != parent[x]:
                    m |= below[y]
            below[x] = m
        return {_edge(x, parent[x]): below[x] for x in order[1:]}


def cuts(d: BranchDecomposition, g: Graph) -> list[Cut]:
    """One cut per tree edge, in sorted edge order."""
    sides = d.edge_sides(g)
    return [Cut(g, frozenset(g.members(sides[e]))) for e in sorted(sides)]


@dataclass
class WidthReport:
    per_edge: dict[Edge, int] = field(default_factory=dict)
    max: int = 0
    argmax_edge: Edge | None = None


def f_width(g: Graph, d: BranchDecomposition, f: CutFunction | str) -> WidthReport:
    """Evaluate ``f`` on every cut of ``d``; width 0 for graphs with at most one vertex."""
    f = CutFunction.parse(f)
    d.check_graph(g)
    if g.n <= 1:
        return WidthReport()
    full = g.full_mask
    per_edge = {}
    memo: dict[int, int] = {}
    for e, side in sorted(d.edge_sides(g).items()):
        key = min(side, full ^ side)
        if key not in memo:
            memo[key] = cut_value(f, g, side, full ^ side)
        per_edge[e] = memo[key]
    top = max(per_edge.values())
    best = next(e for e, val in per_edge.items() if val == top)
    return WidthReport(per_edge, top, best)


def balanced_cut(g: Graph, d: BranchDecomposition) -> Cut:
    """Cut of a tree edge with ``n/3 < |side| <= 2n/3`` on both sides.

    An edge is subdivided to create a root; the node farthest from the root
    whose subtree holds more than ``n/3`` leaves gives the edge to its parent.
    """
    d.check_graph(g)
    n = g.n
    if n < 3:
        raise PreconditionError("balanced cuts need at least 3 vertices")
    x0, y0 = d.edges[0]
    root = ("root",)
    children = {root: [x0, y0]}
    parent = {root: None, x0: root, y0: root}
    depth = {root: 0, x0: 1, y0: 1}
    order = [root, x0, y0]
    for x in order:
        if x == root:
            continue
        children[x] = []
        for y in sorted(d.neighbors(x)):
            if y not in parent and not (x in (x0, y0) and y in (x0, y0)):
                parent[y] = x
                depth[y] = depth[x] + 1
                children[x].append(y)
                order.append(y)
    count = {}
    for x in reversed(order):
        count[x] = (1 if x != root and d.vertex_at(x) is not None else 0) + sum(count[c] for c in children[x])
    heavy = [x for x in order if 3 * count[x] > n]
    chosen = max(heavy, key=lambda x: depth[x])
    # the subtree of the chosen node is the side; its parent edge is a tree edge
    # (the edge to the artificial root is the subdivided edge x0y0)
    side = []
    stack = [chosen]
    while stack:
        x = stack.pop()
        v = d.vertex_at(x)
        if v is not None:
            side.append(v)
        stack.extend(children[x])
    return Cut(g, frozenset(side))


def caterpillar_from_ordering(order: Sequence[Vertex]) -> BranchDecomposition:
    """Linear decomposition whose i-th spine edge separates the first ``i`` vertices.

    Leaf of ``order[i]`` is node ``i``; spine nodes are ``n .. 2n-3``.
    """
    order = list(order)
    n = len(order)
    if len(set(order)) != n:
        raise GraphError("ordering repeats a vertex")
    if n < 2:
        raise PreconditionError("need at least 2 vertices")
    leaf_map = {v: i for i, v in enumerate(order)}
    if n == 2:
        return BranchDecomposition([(0, 1)], leaf_map)
    spine = list(range(n, 2 * n - 2))
    edges = [(spine[k], spine[k + 1]) for k in range(len(spine) - 1)]
    edges.append((0, spine[0]))
    for i in range(1, n - 1):
        edges.append((i, spine[i - 1]))
    edges.append((n - 1, spine[-1]))
    return BranchDecomposition(edges, leaf_map)


def linear_order(d: BranchDecomposition) -> list:
    """Vertex order along the spine of a caterpillar decomposition."""
    if not d.is_linear:
        raise DecompositionError("decomposition is not linear")
    adj = d.tree
    leaves = [x for x, ys in adj.items() if len(ys) <= 1]
    if len(adj) <= 2:
        return [d.vertex_at(x) for x in sorted(leaves)]
    internal = {x for x, ys in adj.items() if len(ys) == 3}
    ends = [x for x in internal if sum(1 for y in adj[x] if y in internal) <= 1]
    start = min(ends)
    path, prev = [start], None
    while True:
        nxt = [y for y in adj[path[-1]] if y in internal and y != prev]
        if not nxt:
            break
        prev = path[-1]
        path.append(nxt[0])
    out = []
    for x in path:
        own = sorted(y for y in adj[x] if y not in internal)
        out.extend(d.vertex_at(y) for y in own)
    return out


def contract_decomposition(g: Graph, d: BranchDecomposition, u: Vertex, v: Vertex) -> BranchDecomposition:
    """Decomposition of ``contract_edge(g, u, v)``.

    The leaf of ``v`` is deleted and its tree neighbour smoothed; the merged
    vertex takes over the leaf of ``u``.  Surviving tree nodes keep their ids.
    """
    d.check_graph(g)
    if not g.adjacent(u, v):
        raise GraphError(f"{u!r}{v!r} is not an edge")
    if g.n < 3:
        raise PreconditionError("contraction transform needs at least 3 vertices")
    z = next(x for x in contract_edge(g, u, v).vertices if x not in g)
    leaf_v = d.leaf(v)
    (p,) = d.neighbors(leaf_v)
    others = sorted(d.neighbors(p) - {leaf_v})
    edges = [e for e in d.edges if leaf_v not in e and p not in e]
    edges.append(_edge(*others))
    leaf_map = {x: node for x, node in d.leaf_map.items() if x not in (u, v)}
    leaf_map[z] = d.leaf(u)
    return BranchDecomposition(edges, leaf_map)


def smoothed_edge(d: BranchDecomposition, v: Vertex) -> tuple[Edge, Edge, Edge]:
    """For the leaf of ``v``: the two tree edges merged by the contraction
    transform and the edge that replaces them."""
    leaf_v = d.leaf(v)
    (p,) = d.neighbors(leaf_v)
    a, b = sorted(d.neighbors(p) - {leaf_v})
    return _edge(a, p), _edge(b, p), _edge(a, b)
