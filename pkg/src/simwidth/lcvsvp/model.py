"""Finite/co-finite degree sets, constraint matrices, problems and checkers."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ..errors import FormatError, GraphError
from ..graph import Graph, Vertex, bits, popcount


class Mode(enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


@dataclass(frozen=True)
class FinCofSet:
    """``listed`` itself (FINITE) or the naturals minus ``listed`` (COFINITE)."""

    mode: Mode
    listed: frozenset[int] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "listed", frozenset(self.listed))
        if any(not isinstance(x, int) or x < 0 for x in self.listed):
            raise GraphError("degree sets hold natural numbers only")

    @classmethod
    def finite(cls, *xs: int) -> "FinCofSet":
        return cls(Mode.FINITE, frozenset(xs))

    @classmethod
    def cofinite(cls, *xs: int) -> "FinCofSet":
        return cls(Mode.COFINITE, frozenset(xs))

    @classmethod
    def parse(cls, text: str) -> "FinCofSet":
        """``finite:0,2,4``, ``cofinite:0`` or ``cofinite:`` (all naturals)."""
        mode_txt, sep, rest = text.strip().partition(":")
        if not sep:
            raise FormatError(f"degree set {text!r} lacks a mode prefix")
        try:
            mode = Mode(mode_txt.strip().lower())
        except ValueError:
            raise FormatError(f"unknown degree set mode {mode_txt!r}") from None
        try:
            xs = frozenset(int(x) for x in rest.split(",") if x.strip())
        except ValueError:
            raise FormatError(f"bad number in degree set {text!r}") from None
        if any(x < 0 for x in xs):
            raise FormatError(f"negative number in degree set {text!r}")
        return cls(mode, xs)

    def __contains__(self, k: int) -> bool:
        return (k in self.listed) == (self.mode is Mode.FINITE)

    def contains(self, k: int) -> bool:
        return k in self

    @property
    def is_all(self) -> bool:
        return self.mode is Mode.COFINITE and not self.listed

    def __str__(self) -> str:
        return f"{self.mode.value}:" + ",".join(map(str, sorted(self.listed)))


NATURALS = FinCofSet.cofinite()
POSITIVE = FinCofSet.cofinite(0)
ZERO = FinCofSet.finite(0)


def d_value(mu: FinCofSet) -> int:
    """Count resolution needed to decide membership in ``mu``.

    0 for all naturals; otherwise one more than the largest listed number.
    An empty finite set also gets 0 (nothing to resolve: no count is a member).
    """
    if not mu.listed:
        return 0
    return 1 + max(mu.listed)


def is_degenerate(mu: FinCofSet) -> bool:
    """The empty set, for which no vertex can ever be satisfied."""
    return mu.mode is Mode.FINITE and not mu.listed


@dataclass(frozen=True)
class DegreeConstraintMatrix:
    """``entries[i][j]``: allowed neighbour counts in part ``j`` for a vertex in part ``i``."""

    entries: tuple[tuple[FinCofSet, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        object.__setattr__(self, "entries", rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise GraphError("degree constraint matrix must be square with q >= 1")

    @property
    def q(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]) -> FinCofSet:
        i, j = ij
        return self.entries[i][j]

    @property
    def d(self) -> int:
        return max(d_value(mu) for row in self.entries for mu in row)

    def column_d(self, j: int) -> int:
        return max(d_value(row[j]) for row in self.entries)

    @classmethod
    def coloring(cls, q: int) -> "DegreeConstraintMatrix":
        if q < 1:
            raise GraphError("q must be positive")
        return cls(tuple(tuple(ZERO if i == j else NATURALS for j in range(q)) for i in range(q)))

    @classmethod
    def sigma_rho(cls, sigma: FinCofSet, rho: FinCofSet) -> "DegreeConstraintMatrix":
        """Two parts ``(S, V - S)`` with only the counts into ``S`` constrained."""
        return cls(((sigma, NATURALS), (rho, NATURALS)))


# -- problems ------------------------------------------------------------------


class Objective(enum.Enum):
    MIN = "min"
    MAX = "max"

    @classmethod
    def parse(cls, text: "str | Objective") -> "Objective":
        if isinstance(text, Objective):
            return text
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise FormatError(f"objective must be min or max, got {text!r}") from None


@dataclass(frozen=True)
class SigmaRhoProblem:
    sigma: FinCofSet
    rho: FinCofSet
    objective: Objective = Objective.MIN
    name: str = "sigma-rho"

    @property
    def d(self) -> int:
        return max(d_value(self.sigma), d_value(self.rho))


@dataclass(frozen=True)
class PartitionProblem:
    matrix: DegreeConstraintMatrix
    name: str = "partition"

    @property
    def d(self) -> int:
        return self.matrix.d


_NAMED = {
    "dominating-set": (NATURALS, POSITIVE, Objective.MIN),
    "independent-set": (ZERO, NATURALS, Objective.MAX),
    "total-dominating-set": (POSITIVE, POSITIVE, Objective.MIN),
}


def parse_problem(text: str, objective: "str | Objective | None" = None):
    """Problem from its name, ``coloring:q`` or ``sigma=...;rho=...``.

    ``objective`` overrides the default of a named subset problem; raw
    ``sigma/rho`` problems default to minimisation.
    """
    text = text.strip()
    obj = Objective.parse(objective) if objective is not None else None
    if text in _NAMED:
        sigma, rho, default = _NAMED[text]
        return SigmaRhoProblem(sigma, rho, obj or default, text)
    if text.startswith("coloring:"):
        try:
            q = int(text.split(":", 1)[1])
        except ValueError:
            raise FormatError(f"bad colour count in {text!r}") from None
        if q < 1:
            raise FormatError("colour count must be positive")
        return PartitionProblem(DegreeConstraintMatrix.coloring(q), text)
    if text.startswith("sigma="):
        fields = {}
        for part in text.split(";"):
            key, sep, val = part.partition("=")
            if not sep:
                raise FormatError(f"bad problem component {part!r}")
            fields[key.strip()] = FinCofSet.parse(val)
        if set(fields) != {"sigma", "rho"}:
            raise FormatError("raw problems need exactly sigma= and rho=")
        return SigmaRhoProblem(fields["sigma"], fields["rho"], obj or Objective.MIN, "sigma-rho")
    raise FormatError(f"unknown problem {text!r}")


# -- certificates and checkers -----------------------------------------------


@dataclass(frozen=True)
class SolutionCertificate:
    """``selected`` for subset problems, ``partition`` for partition problems.

    ``objective`` is the (weighted) size of ``selected``; partition problems are
    feasibility problems and report 0.
    """

    selected: frozenset | None = None
    partition: tuple[frozenset, ...] | None = None
    objective: int = 0
    extra: dict = field(default_factory=dict, compare=False)


def _mask(g: Graph, s: Iterable[Vertex] | int) -> int:
    return s if isinstance(s, int) else g.mask(s)


def check_sigma_rho(g: Graph, s: Iterable[Vertex] | int, sigma: FinCofSet, rho: FinCofSet) -> bool:
    """Every selected vertex has its count of selected neighbours in ``sigma``,
    every other vertex in ``rho``."""
    sm = _mask(g, s)
    rows = g.rows
    for v in range(g.n):
        k = popcount(rows[v] & sm)
        if k not in (sigma if sm >> v & 1 else rho):
            return False
    return True


def check_dq_partition(g: Graph, parts: Sequence[Iterable[Vertex] | int], matrix: DegreeConstraintMatrix) -> bool:
    masks = [_mask(g, p) for p in parts]
    if len(masks) != matrix.q:
        raise GraphError(f"expected {matrix.q} parts, got {len(masks)}")
    seen = 0
    for m in masks:
        if seen & m:
            raise GraphError("parts overlap")
        seen |= m
    if seen != g.full_mask:
        raise GraphError("parts do not cover the vertex set")
    rows = g.rows
    for i, m in enumerate(masks):
        for v in bits(m):
            for j, other in enumerate(masks):
                if popcount(rows[v] & other) not in matrix.entries[i][j]:
                    return False
    return True


def weight_of(g: Graph, mask: int, weights: Mapping[Vertex, int] | None) -> int:
    if weights is None:
        return popcount(mask)
    return sum(weights.get(g.vertices[i], 0) for i in bits(mask))


def check_weights(g: Graph, weights: Mapping[Vertex, int] | None) -> None:
    if weights is None:
        return
    for v, w in weights.items():
        if v not in g:
            raise GraphError(f"weight given for unknown vertex {v!r}")
        if not isinstance(w, int) or w < 0:
            raise GraphError("weights must be non-negative integers")
