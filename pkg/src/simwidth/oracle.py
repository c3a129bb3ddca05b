"""Exact widths of tiny graphs by exhaustive search.

``exact_width`` walks the ``(2n-5)!!`` leaf-labelled subcubic trees by leaf
insertion: the tree on the first ``k`` vertices is extended by subdividing one
of its edges with the next leaf.  Each partial tree is a decomposition of the
subgraph induced by the placed vertices, and every cut function here can only
grow when vertices are added to either side, so the width of a partial tree
is a lower bound for all of its completions.  That bound prunes the search.
"""

from __future__ import annotations

from math import factorial

from .cuts import CutFunction, cut_value
from .decomposition import BranchDecomposition, caterpillar_from_ordering, f_width
from .errors import PreconditionError, SizeLimitError
from .graph import Graph, bits


def tree_count(n: int) -> int:
    """Number of leaf-labelled subcubic trees with ``n`` leaves."""
    out = 1
    for k in range(3, 2 * n - 4, 2):
        out *= k
    return out


def _single(g: Graph) -> BranchDecomposition:
    return BranchDecomposition([], {g.vertices[0]: 0})


def exact_width(g: Graph, f: CutFunction | str, max_n: int = 9) -> tuple[int, BranchDecomposition]:
    """Minimum ``f``-width over all branch decompositions, with an optimal one."""
    f = CutFunction.parse(f)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"exact width needs {tree_count(n)} trees for n={n} (max_n={max_n})",
                             required=tree_count(n))
    if n == 0:
        raise PreconditionError("empty graph has no decomposition")
    if n == 1:
        return 0, _single(g)

    # high-degree vertices first: their cuts are expensive early, which prunes
    order = sorted(range(n), key=lambda i: (-g.degree(g.vertices[i]), i))
    memo: dict[tuple[int, int], int] = {}

    def value(a: int, b: int) -> int:
        key = (a, b) if a < b else (b, a)
        got = memo.get(key)
        if got is None:
            got = memo[key] = cut_value(f, g, a, b)
        return got

    # Leaves are nodes 0..n-1 (node k holds order[k]); the k-th insertion
    # creates internal node n + k - 2.  Alongside each tree edge (x, y) we keep
    # the placed vertices on the side of x.
    best: list = [n + 1, None]

    def grow(k: int, placed: int, edges: list, sides: list, width: int) -> None:
        if k == n:
            best[0], best[1] = width, list(edges)
            return
        vbit = 1 << order[k]
        new_placed = placed | vbit
        node = n + k - 2
        for i, (x, y) in enumerate(edges):
            s = sides[i]
            rest = placed ^ s
            new_edges, new_sides = [], []
            for j, e in enumerate(edges):
                if j == i:
                    continue
                s2 = sides[j]
                # the new leaf joins the side of edge j that holds edge i
                if s & ~s2 == 0 or rest & ~s2 == 0:
                    s2 |= vbit
                new_edges.append(e)
                new_sides.append(s2)
            new_edges += [(x, node), (node, y), (node, k)]
            new_sides += [s, s | vbit, placed]
            w = width
            for side in new_sides:
                w = max(w, value(side, new_placed ^ side))
                if w >= best[0]:
                    break
            if w < best[0]:
                grow(k + 1, new_placed, new_edges, new_sides, w)

    a, b = 1 << order[0], 1 << order[1]
    grow(2, a | b, [(0, 1)], [a], value(a, b))
    leaf_map = {g.vertices[order[k]]: k for k in range(n)}
    return best[0], BranchDecomposition(best[1], leaf_map).relabel_nodes()


def exact_linear_width(g: Graph, f: CutFunction | str, max_n: int = 10) -> tuple[int, list]:
    """Minimum over vertex orderings of the largest prefix-cut value.

    Computed by a subset recursion: the best ordering of the first ``|S|``
    positions filled by ``S`` depends only on ``S``.
    """
    f = CutFunction.parse(f)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"exact linear width needs {factorial(n)} orderings for n={n} (max_n={max_n})",
                             required=factorial(n))
    if n == 0:
        raise PreconditionError("empty graph has no ordering")
    if n == 1:
        return 0, list(g.vertices)
    full = g.full_mask
    inf = n + 1
    best = [inf] * (1 << n)
    last = [-1] * (1 << n)
    best[0] = 0
    for s in range(1, 1 << n):
        cut = cut_value(f, g, s, full ^ s) if s != full else 0
        top, arg = inf, -1
        for v in bits(s):
            prev = best[s ^ (1 << v)]
            if prev < top:
                top, arg = prev, v
        best[s], last[s] = max(top, cut), arg
    order, s = [], full
    while s:
        v = last[s]
        order.append(g.vertices[v])
        s ^= 1 << v
    return best[full], order[::-1]


def linear_decomposition_width(g: Graph, f: CutFunction | str, order) -> int:
    """Width of the caterpillar built along ``order``."""
    return f_width(g, caterpillar_from_ordering(order), f).max
