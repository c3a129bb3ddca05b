"""Exact evaluators for the symmetric cut functions cutrk, mim and sim.

A cut is a vertex bipartition ``(A, V - A)``.  ``mim`` is the largest induced
matching of the bipartite graph of crossing edges (edges inside a side are
ignored); ``sim`` is the largest induced matching of the whole graph all of
whose edges cross (edges inside a side count).  Both are found by a
branch-and-bound maximum independent set search over the crossing edges.

The ``*_mask`` functions take bitmasks of vertex indices and are what the
decomposition and oracle code call in their inner loops.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import GraphError
from .graph import Graph, bits, gf2_rank


class CutFunction(enum.Enum):
    CUTRK = "cutrk"
    MIM = "mim"
    SIM = "sim"

    @classmethod
    def parse(cls, name: str | "CutFunction") -> "CutFunction":
        if isinstance(name, cls):
            return name
        try:
            return cls(name.lower())
        except ValueError:
            raise GraphError(f"unknown cut function {name!r}; expected cutrk, mim or sim") from None


@dataclass(frozen=True)
class Cut:
    graph: Graph
    side_a: frozenset

    def __post_init__(self):
        object.__setattr__(self, "side_a", frozenset(self.side_a))
        self.graph.mask(self.side_a)

    @cached_property
    def mask_a(self) -> int:
        return self.graph.mask(self.side_a)

    @property
    def mask_b(self) -> int:
        return self.graph.full_mask & ~self.mask_a

    @property
    def side_b(self) -> frozenset:
        return frozenset(self.graph.members(self.mask_b))

    def complement(self) -> "Cut":
        return Cut(self.graph, self.side_b)


@dataclass(frozen=True)
class MatchingWitness:
    """Matching edges ``(a, b)`` with ``a`` on side A and ``b`` on side B."""

    pairs: tuple[tuple, ...]

    def __len__(self) -> int:
        return len(self.pairs)


def _check_sides(a_mask: int, b_mask: int) -> None:
    if not a_mask or not b_mask:
        raise GraphError("cut has an empty side")
    if a_mask & b_mask:
        raise GraphError("cut sides overlap")


# -- maximum independent set on a conflict graph ---------------------------


def _clique_cover_bound(cand: int, conflict: list[int]) -> int:
    count = 0
    while cand:
        low = cand & -cand
        i = low.bit_length() - 1
        cand ^= low
        pool = cand & conflict[i]
        while pool:
            lj = pool & -pool
            j = lj.bit_length() - 1
            cand ^= lj
            pool = (pool ^ lj) & conflict[j]
        count += 1
    return count


def max_independent_set(conflict: list[int], target: int | None = None) -> tuple[int, int]:
    """Maximum independent set of the graph whose rows are ``conflict``.

    Returns ``(size, mask)``.  Branching is include-first on the lowest index,
    and the incumbent is only replaced by strictly larger sets, so among all
    maximum sets the lexicographically least one (as a sorted index list) is
    returned.  With ``target`` the search stops once a set of that size exists.
    """
    n = len(conflict)
    best_size, best_mask = 0, 0
    stack = [((1 << n) - 1, 0, 0)]
    while stack:
        cand, chosen, size = stack.pop()
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
                if target is not None and best_size >= target:
                    break
            continue
        if size + _clique_cover_bound(cand, conflict) <= best_size:
            continue
        low = cand & -cand
        i = low.bit_length() - 1
        stack.append((cand ^ low, chosen, size))
        stack.append((cand & ~conflict[i] & ~low, chosen | low, size + 1))
    return best_size, best_mask


def crossing_edges(g: Graph, a_mask: int, b_mask: int) -> list[tuple[int, int]]:
    """Crossing edges as index pairs ``(a, b)``, sorted."""
    rows = g.rows
    return [(a, b) for a in bits(a_mask) for b in bits(rows[a] & b_mask)]


def _conflicts(g: Graph, edges: list[tuple[int, int]], a_mask: int, b_mask: int, within: bool) -> list[int]:
    rows = g.rows
    by_vertex: dict[int, int] = {}
    for k, (a, b) in enumerate(edges):
        by_vertex[a] = by_vertex.get(a, 0) | (1 << k)
        by_vertex[b] = by_vertex.get(b, 0) | (1 << k)
    out = []
    for k, (a, b) in enumerate(edges):
        if within:
            blocked = rows[a] | rows[b] | (1 << a) | (1 << b)
        else:
            # only crossing adjacencies matter in G[A, B]
            blocked = (1 << a) | (1 << b) | (rows[a] & b_mask) | (rows[b] & a_mask)
        c = 0
        for u in bits(blocked & (a_mask | b_mask)):
            c |= by_vertex.get(u, 0)
        out.append(c & ~(1 << k))
    return out


def _matching(g: Graph, a_mask: int, b_mask: int, within: bool, target=None) -> tuple[int, list]:
    _check_sides(a_mask, b_mask)
    edges = crossing_edges(g, a_mask, b_mask)
    if not edges:
        return 0, []
    conflict = _conflicts(g, edges, a_mask, b_mask, within)
    size, chosen = max_independent_set(conflict, target)
    return size, [edges[k] for k in bits(chosen)]


def cutrk_mask(g: Graph, a_mask: int, b_mask: int | None = None) -> int:
    if b_mask is None:
        b_mask = g.full_mask & ~a_mask
    _check_sides(a_mask, b_mask)
    rows = g.rows
    return gf2_rank([rows[a] & b_mask for a in bits(a_mask)])


def mim_mask(g: Graph, a_mask: int, b_mask: int | None = None) -> int:
    if b_mask is None:
        b_mask = g.full_mask & ~a_mask
    return _matching(g, a_mask, b_mask, within=False)[0]


def sim_mask(g: Graph, a_mask: int, b_mask: int | None = None) -> int:
    if b_mask is None:
        b_mask = g.full_mask & ~a_mask
    return _matching(g, a_mask, b_mask, within=True)[0]


_EVALUATORS = {CutFunction.CUTRK: cutrk_mask, CutFunction.MIM: mim_mask, CutFunction.SIM: sim_mask}


def cut_value(f: CutFunction | str, g: Graph, a_mask: int, b_mask: int | None = None) -> int:
    """Value of ``f`` on the cut ``(a_mask, b_mask)``; ``b_mask`` defaults to the complement.

    Passing a ``b_mask`` smaller than the complement evaluates the cut in the
    subgraph induced by ``a_mask | b_mask``.
    """
    return _EVALUATORS[CutFunction.parse(f)](g, a_mask, b_mask)


# -- public API on Cut objects -------------------------------------------------


def _witness(g: Graph, pairs) -> MatchingWitness:
    return MatchingWitness(tuple((g.vertices[a], g.vertices[b]) for a, b in pairs))


def cutrk(cut: Cut) -> int:
    return cutrk_mask(cut.graph, cut.mask_a, cut.mask_b)


def mimval(cut: Cut) -> tuple[int, MatchingWitness]:
    size, pairs = _matching(cut.graph, cut.mask_a, cut.mask_b, within=False)
    return size, _witness(cut.graph, pairs)


def simval(cut: Cut) -> tuple[int, MatchingWitness]:
    size, pairs = _matching(cut.graph, cut.mask_a, cut.mask_b, within=True)
    return size, _witness(cut.graph, pairs)


def evaluate(f: CutFunction | str, cut: Cut) -> int:
    return cut_value(f, cut.graph, cut.mask_a, cut.mask_b)


def has_crossing_induced_matching_of_two(g: Graph, a_mask: int, b_mask: int | None = None):
    """Return crossing edges ``((a1, b1), (a2, b2))`` forming an induced matching
    of ``G[A, B]``, or ``None`` when the mim-value of the cut is at most 1.

    Two such edges exist exactly when two vertices of A have incomparable
    neighbourhoods in B, which is what is searched for, with early exit.
    """
    if b_mask is None:
        b_mask = g.full_mask & ~a_mask
    rows = g.rows
    nbhd = [(a, rows[a] & b_mask) for a in bits(a_mask)]
    nbhd = [x for x in nbhd if x[1]]
    for k, (a1, n1) in enumerate(nbhd):
        for a2, n2 in nbhd[k + 1:]:
            only1 = n1 & ~n2
            if only1:
                only2 = n2 & ~n1
                if only2:
                    b1 = (only1 & -only1).bit_length() - 1
                    b2 = (only2 & -only2).bit_length() - 1
                    return (a1, b1), (a2, b2)
    return None


def validate_mim_witness(g: Graph, a_mask: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """Index pairs form an induced matching of the crossing bipartite graph."""
    pairs = list(pairs)
    rows = g.rows
    b_mask = g.full_mask & ~a_mask
    for a, b in pairs:
        if not (a_mask >> a & 1 and b_mask >> b & 1 and rows[a] >> b & 1):
            return False
    for k, (a, b) in enumerate(pairs):
        for a2, b2 in pairs[k + 1:]:
            if a == a2 or b == b2 or rows[a] >> b2 & 1 or rows[a2] >> b & 1:
                return False
    return True


def validate_sim_witness(g: Graph, a_mask: int, pairs: Iterable[tuple[int, int]]) -> bool:
    """Index pairs form an induced matching of ``G`` with every edge crossing."""
    pairs = list(pairs)
    if not validate_mim_witness(g, a_mask, pairs):
        return False
    rows = g.rows
    for k, (a, b) in enumerate(pairs):
        for a2, b2 in pairs[k + 1:]:
            if rows[a] >> a2 & 1 or rows[b] >> b2 & 1:
                return False
    return True
