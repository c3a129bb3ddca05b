"""d-neighbourhood equivalence of vertex subsets across a cut.

Subsets ``X, X'`` of ``side`` are equivalent when every vertex outside sees
them the same way up to ``d``: ``min(d, |N(v) & X|) == min(d, |N(v) & X'|)``.
"""

from __future__ import annotations

from ..graph import Graph, bits, popcount


def signature(rows, observers: list[int], d: int, x: int) -> tuple[int, ...]:
    """Truncated neighbour counts of ``x`` seen by each observer."""
    if d == 0:
        return ()
    return tuple(min(d, popcount(rows[w] & x)) for w in observers)


class NeighborClassIndex:
    """Equivalence classes of the subsets of ``side`` (a vertex mask)."""

    def __init__(self, g: Graph, side: int, d: int):
        self.graph = g
        self.side = side
        self.d = d
        self._observers = list(bits(g.full_mask & ~side))
        self._reps: dict[tuple, int] | None = None

    def key(self, x: int) -> tuple[int, ...]:
        if x & ~self.side:
            raise ValueError("subset leaves the indexed side")
        return signature(self.graph.rows, self._observers, self.d, x)

    @property
    def representatives(self) -> dict[tuple, int]:
        """Class key to representative mask.

        Classes are closed under adding one vertex (the new key only depends on
        the old key), so they are enumerated by adding the side's vertices in
        index order; each class keeps the first subset that reached it.
        """
        if self._reps is None:
            rows, obs, d = self.graph.rows, self._observers, self.d
            reps = {signature(rows, obs, d, 0): 0}
            for a in bits(self.side):
                hit = [min(1, rows[w] >> a & 1) for w in obs]
                for key, rep in list(reps.items()):
                    new = tuple(min(d, k + h) for k, h in zip(key, hit)) if d else ()
                    if new not in reps:
                        reps[new] = rep | (1 << a)
            self._reps = reps
        return self._reps

    def __len__(self) -> int:
        return len(self.representatives)

    def class_of(self, x: int) -> int:
        return self.representatives[self.key(x)]
