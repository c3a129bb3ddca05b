"""Clique trees of chordal graphs and the branch decomposition built from them.

The decomposition has sim-width at most 1, and mim-width at most ``t - 1``
when the graph has no induced ``K_t`` matched to an independent ``t``-set.
Every one of its cuts has a side whose boundary is a clique.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .cuts import Cut
from .decomposition import BranchDecomposition
from .errors import NotChordalError, PreconditionError
from .graph import Graph, bits, chordality_check


@dataclass(frozen=True)
class CliqueTree:
    edges: tuple[tuple[int, int], ...]
    bags: tuple[frozenset, ...]

    @property
    def nodes(self) -> range:
        return range(len(self.bags))

    def adjacency(self) -> dict[int, list[int]]:
        adj = {t: [] for t in self.nodes}
        for x, y in self.edges:
            adj[x].append(y)
            adj[y].append(x)
        return {t: sorted(ys) for t, ys in adj.items()}


def _maximal_cliques_from_peo(g: Graph, peo: list) -> list[int]:
    later = g.full_mask
    candidates = []
    for v in peo:
        i = g.index(v)
        later &= ~(1 << i)
        candidates.append((g.rows[i] & later) | (1 << i))
    out = []
    for k, c in enumerate(candidates):
        contained = any(j != k and c & other == c and (other != c or j < k)
                        for j, other in enumerate(candidates))
        if not contained:
            out.append(c)
    return out


def clique_tree(g: Graph) -> CliqueTree:
    """Clique tree from a perfect elimination ordering.

    Bags are the maximal cliques; the tree is a maximum-weight spanning tree of
    the bag-intersection graph, with zero-weight links joining components.
    """
    result = chordality_check(g)
    if not result.is_chordal:
        raise NotChordalError(result.witness_cycle)
    if g.n == 0:
        return CliqueTree((), ())
    cliques = _maximal_cliques_from_peo(g, result.peo)[::-1]
    k = len(cliques)
    pairs = sorted(((bin(cliques[i] & cliques[j]).count("1"), i, j)
                    for i in range(k) for j in range(i + 1, k)),
                   key=lambda p: (-p[0], p[1], p[2]))
    root = list(range(k))

    def find(x):
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    edges = []
    for _, i, j in pairs:
        ri, rj = find(i), find(j)
        if ri != rj:
            root[ri] = rj
            edges.append((i, j))
            if len(edges) == k - 1:
                break
    return CliqueTree(tuple(edges), tuple(frozenset(g.members(c)) for c in cliques))


def check_clique_tree(g: Graph, ct: CliqueTree) -> list[str]:
    """Problems with ``ct`` as a clique tree of ``g``; empty when valid."""
    problems = []
    k = len(ct.bags)
    if len(ct.edges) != max(k - 1, 0):
        problems.append("wrong number of tree edges")
    adj = ct.adjacency()
    if k:
        seen, queue = {0}, deque([0])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        if len(seen) != k:
            problems.append("tree is not connected")
    masks = [g.mask(b) for b in ct.bags]
    for t, m in enumerate(masks):
        if not g.is_clique_mask(m):
            problems.append(f"bag {t} is not a clique")
            continue
        common = g.full_mask
        for i in bits(m):
            common &= g.rows[i]
        if common & ~m:
            problems.append(f"bag {t} is not a maximal clique")
    for u, v in g.edges():
        both = g.mask([u, v])
        if not any(m & both == both for m in masks):
            problems.append(f"edge {u}-{v} in no bag")
    for v in g.vertices:
        holding = {t for t, b in enumerate(ct.bags) if v in b}
        if not holding:
            problems.append(f"vertex {v} in no bag")
            continue
        start = min(holding)
        seen, queue = {start}, deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y in holding and y not in seen:
                    seen.add(y)
                    queue.append(y)
        if seen != holding:
            problems.append(f"bags containing {v} do not induce a subtree")
    return problems


def chordal_branch_decomposition(g: Graph) -> BranchDecomposition:
    """Branch decomposition of a chordal graph built from its clique tree.

    Each clique-tree edge from ``t`` to its parent is subdivided once per
    vertex of ``B_t - B_parent``, each subdivision node getting that vertex's
    leaf; each clique-tree node is replaced by a path with one node per child;
    finally all degree-2 nodes are smoothed.
    """
    if g.n == 0:
        raise PreconditionError("empty graph has no decomposition")
    if g.n == 1:
        chordality_check(g)
        return BranchDecomposition([], {g.vertices[0]: 0})
    ct = clique_tree(g)
    adj = ct.adjacency()
    root = 0
    parent = {root: None}
    order = [root]
    for t in order:
        for c in adj[t]:
            if c not in parent:
                parent[c] = t
                order.append(c)
    children = {t: [c for c in adj[t] if parent.get(c) == t] for t in ct.nodes}

    counter = iter(range(10 ** 9))
    tree: dict[int, set[int]] = {}
    leaf_map = {}

    def link(x, y):
        tree.setdefault(x, set()).add(y)
        tree.setdefault(y, set()).add(x)

    # subdivision paths v_1 .. v_k for every bag, v_1 on the child side
    path = {}
    for t in order:
        above = ct.bags[parent[t]] if parent[t] is not None else frozenset()
        diff = sorted(ct.bags[t] - above, key=g.index)
        nodes = []
        for v in diff:
            x, z = next(counter), next(counter)
            link(x, z)
            leaf_map[v] = z
            if nodes:
                link(nodes[-1], x)
            nodes.append(x)
        path[t] = nodes

    # replace each bag node by a path w_1 .. w_m over its children
    w_first = {}
    for t in reversed(order):
        kids = children[t]
        if kids:
            ws = [next(counter) for _ in kids]
            for a, b in zip(ws, ws[1:]):
                link(a, b)
            w_first[t] = ws[0]
            for w, c in zip(ws, kids):
                top = path[c][-1] if path[c] else w_first.get(c)
                if top is not None:
                    link(w, top)
        if path[t] and kids:
            link(w_first[t], path[t][0])
        elif not path[t] and not kids:
            w_first.pop(t, None)

    leaves = set(leaf_map.values())
    _normalise(tree, leaves)
    edges = [(x, y) for x, ys in tree.items() for y in ys if x < y]
    return BranchDecomposition(edges, leaf_map, tree.keys()).relabel_nodes()


def _normalise(tree: dict[int, set[int]], leaves: set[int]) -> None:
    """Prune dangling non-leaf nodes, then smooth every degree-2 node."""
    changed = True
    while changed:
        changed = False
        for x in sorted(tree):
            if x in leaves or x not in tree:
                continue
            ys = tree[x]
            if len(ys) <= 1:
                for y in ys:
                    tree[y].discard(x)
                del tree[x]
                changed = True
            elif len(ys) == 2:
                a, b = ys
                tree[a].discard(x)
                tree[b].discard(x)
                tree[a].add(b)
                tree[b].add(a)
                del tree[x]
                changed = True


@dataclass(frozen=True)
class CliqueCertificate:
    """Which cut boundaries are cliques.

    ``a_boundary`` is ``N(B) & A``; ``b_boundary`` is ``N(A) & B``.
    """

    a_boundary_clique: bool
    b_boundary_clique: bool

    @property
    def ok(self) -> bool:
        return self.a_boundary_clique or self.b_boundary_clique


def one_sided_clique_certificate(g: Graph, cut: Cut) -> CliqueCertificate:
    a, b = cut.mask_a, cut.mask_b
    rows = g.rows
    nb_a = 0
    for i in bits(a):
        nb_a |= rows[i]
    nb_b = 0
    for i in bits(b):
        nb_b |= rows[i]
    return CliqueCertificate(g.is_clique_mask(nb_b & a), g.is_clique_mask(nb_a & b))
