"""Induced ``K_t`` matched to ``K_t`` / ``S_t`` detection, and the closed-form
mim-width bounds for graphs that exclude them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import GraphError
from .graph import Graph, bits


@dataclass(frozen=True)
class PatternWitness:
    """``clique_side[i]`` is matched to ``other_side[i]``."""

    clique_side: tuple
    other_side: tuple

    @property
    def matching(self) -> tuple[tuple, ...]:
        return tuple(zip(self.clique_side, self.other_side))

    @property
    def vertices(self) -> tuple:
        return self.clique_side + self.other_side


def _cliques(g: Graph, size: int):
    """All cliques of the given size as ascending index lists."""
    rows = g.rows

    def grow(chosen: list[int], cand: int):
        if len(chosen) == size:
            yield list(chosen)
            return
        while cand:
            low = cand & -cand
            i = low.bit_length() - 1
            cand ^= low
            chosen.append(i)
            yield from grow(chosen, cand & rows[i])
            chosen.pop()

    yield from grow([], g.full_mask)


def _detect(g: Graph, t: int, partners_clique: bool) -> PatternWitness | None:
    if t < 2:
        raise GraphError("pattern size t must be at least 2")
    rows = g.rows
    for clique in _cliques(g, t):
        cmask = sum(1 << c for c in clique)
        # vertices outside the clique seeing exactly one clique member c
        pools = []
        for c in clique:
            others = 0
            for c2 in clique:
                if c2 != c:
                    others |= rows[c2]
            pools.append(rows[c] & ~cmask & ~others)
        if not all(pools):
            continue
        picked: list[int] = []

        def choose(k: int) -> bool:
            if k == t:
                return True
            pool = pools[k]
            for p in picked:
                pool &= rows[p] if partners_clique else ~rows[p]
            for x in bits(pool):
                picked.append(x)
                if choose(k + 1):
                    return True
                picked.pop()
            return False

        if choose(0):
            return PatternWitness(tuple(g.vertices[c] for c in clique),
                                  tuple(g.vertices[x] for x in picked))
    return None


def detect_ktst(g: Graph, t: int) -> PatternWitness | None:
    """Induced ``K_t`` plus independent set joined by a perfect matching."""
    return _detect(g, t, partners_clique=False)


def detect_ktkt(g: Graph, t: int) -> PatternWitness | None:
    """Induced pair of ``t``-cliques joined by a perfect matching."""
    return _detect(g, t, partners_clique=True)


def mimw_bound_induced_minor(w: int, t: int) -> int:
    """Mim-width bound ``8(w+1)t^3 - 1`` for sim-width ``w`` graphs excluding both
    patterns as induced minors."""
    if w < 1 or t < 2:
        raise GraphError("need w >= 1 and t >= 2")
    return 8 * (w + 1) * t ** 3 - 1


def ramsey_upper_bound(k: int, l: int) -> int:
    """Binomial upper bound ``C(k+l-2, k-1)`` on the Ramsey number ``R(k, l)``."""
    if k < 1 or l < 1:
        raise GraphError("Ramsey arguments must be positive")
    return comb(k + l - 2, k - 1)


def mimw_bound_induced_subgraph(w: int, t: int) -> int:
    """Upper bound on ``R(R(w+1, t), R(t, t))`` with every Ramsey number replaced
    by its binomial upper bound.  This is an upper bound, not the exact value."""
    if w < 1 or t < 2:
        raise GraphError("need w >= 1 and t >= 2")
    return ramsey_upper_bound(ramsey_upper_bound(w + 1, t), ramsey_upper_bound(t, t))


def mimw_lb_degenerate(tw: int, d: int) -> Fraction:
    """Lower bound ``(tw+1) / (3(d+1))`` on the mim-width of a ``d``-degenerate graph."""
    if d < 0:
        raise GraphError("degeneracy must be non-negative")
    return Fraction(tw + 1, 3 * (d + 1))
