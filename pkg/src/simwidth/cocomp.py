"""Co-comparability orderings and the linear decompositions built from them.

An ordering is a co-comparability ordering when for every ``i < j < k`` with
``v_i ~ v_k`` the middle vertex ``v_j`` is adjacent to ``v_i`` or ``v_k``.
The caterpillar along such an ordering has linear sim-width at most 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .decomposition import BranchDecomposition, caterpillar_from_ordering
from .errors import GraphError, InvalidOrderingError
from .graph import Graph, Vertex, bits, popcount


def _positions(g: Graph, order: Sequence[Vertex]) -> list[int]:
    idx = [g.index(v) for v in order]
    if len(idx) != g.n or len(set(idx)) != g.n:
        raise GraphError("ordering is not a permutation of the vertices")
    return idx


def find_cocomp_violation(g: Graph, order: Sequence[Vertex]):
    """First triple ``(v_i, v_j, v_k)`` breaking the ordering rule, or ``None``."""
    idx = _positions(g, order)
    n = len(idx)
    # rows re-expressed over positions
    pos_of = {v: p for p, v in enumerate(idx)}
    prow = [0] * n
    for p, v in enumerate(idx):
        for u in bits(g.rows[v]):
            prow[p] |= 1 << pos_of[u]
    for i in range(n):
        for k in bits(prow[i] >> (i + 2)):
            k += i + 2
            between = ((1 << k) - 1) & ~((1 << (i + 1)) - 1)
            missing = between & ~(prow[i] | prow[k])
            if missing:
                j = (missing & -missing).bit_length() - 1
                return (order[i], order[j], order[k])
    return None


def verify_cocomp_ordering(g: Graph, order: Sequence[Vertex]) -> bool:
    return find_cocomp_violation(g, order) is None


@dataclass(frozen=True)
class OrderingSearch:
    """Outcome of :func:`find_cocomp_ordering`.

    ``ordering`` is ``None`` either because the search was exhausted (no
    ordering exists) or because the budget ran out (``exhausted`` is False).
    """

    ordering: tuple | None
    exhausted: bool
    nodes: int

    @property
    def found(self) -> bool:
        return self.ordering is not None

    @property
    def indeterminate(self) -> bool:
        return self.ordering is None and not self.exhausted


def find_cocomp_ordering(g: Graph, budget: int = 2_000_000) -> OrderingSearch:
    """Backtracking search for a co-comparability ordering.

    The ordering is grown left to right.  Appending ``x`` is legal when for every
    placed neighbour ``u`` of ``x`` all vertices placed after ``u`` see ``u`` or
    ``x``.  A vertex that is already illegal stays illegal, so any such dead
    vertex prunes the branch.  ``budget`` caps the number of search nodes.
    """
    n = g.n
    rows = g.rows
    if n == 0:
        return OrderingSearch((), True, 0)
    nodes = 0

    def legal(x: int, placed: list[int], after: list[int]) -> bool:
        row = rows[x]
        for p, u in enumerate(placed):
            if row >> u & 1 and after[p] & ~(rows[u] | row):
                return False
        return True

    # after[p]: mask of vertices placed after position p
    placed: list[int] = []
    after: list[int] = []
    remaining = g.full_mask

    def extend() -> bool | None:
        nonlocal nodes, remaining
        nodes += 1
        if nodes > budget:
            return None
        if not remaining:
            return True
        options = [x for x in bits(remaining) if legal(x, placed, after)]
        if len(options) < popcount(remaining):
            # some unplaced vertex can never be placed any more
            return False
        for x in options:
            placed.append(x)
            after.append(0)
            for p in range(len(after) - 1):
                after[p] |= 1 << x
            remaining &= ~(1 << x)
            res = extend()
            if res is None or res:
                return res
            remaining |= 1 << x
            placed.pop()
            after.pop()
            for p in range(len(after)):
                after[p] &= ~(1 << x)
        return False

    res = extend()
    if res is None:
        return OrderingSearch(None, False, nodes)
    if res:
        return OrderingSearch(tuple(g.vertices[i] for i in placed), True, nodes)
    return OrderingSearch(None, True, nodes)


def cocomp_linear_decomposition(g: Graph, order: Sequence[Vertex]) -> BranchDecomposition:
    """Caterpillar along a verified co-comparability ordering."""
    witness = find_cocomp_violation(g, order)
    if witness is not None:
        raise InvalidOrderingError(witness)
    return caterpillar_from_ordering(order)


def prefix_cuts(g: Graph, order: Sequence[Vertex]) -> list[int]:
    """Masks of the prefixes ``v_1..v_i`` for ``i = 1..n-1``."""
    out, m = [], 0
    for v in list(order)[:-1]:
        m |= 1 << g.index(v)
        out.append(m)
    return out
