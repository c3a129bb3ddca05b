"""Exhaustive reference solvers used to cross-check the dynamic program."""

from __future__ import annotations

from typing import Mapping

from ..errors import SizeLimitError
from ..graph import Graph, Vertex, bits, popcount
from .model import (DegreeConstraintMatrix, FinCofSet, Mode, Objective, PartitionProblem,
                    SigmaRhoProblem, SolutionCertificate, check_weights, weight_of)


def brute_sigma_rho(g: Graph, sigma: FinCofSet, rho: FinCofSet,
                    objective: Objective | str = Objective.MIN,
                    weights: Mapping[Vertex, int] | None = None,
                    max_n: int = 20) -> SolutionCertificate | None:
    """Optimum over all ``2^n`` subsets; ties go to the numerically smallest mask."""
    objective = Objective.parse(objective)
    check_weights(g, weights)
    n = g.n
    if n > max_n:
        raise SizeLimitError(f"brute force over 2^{n} subsets refused (max_n={max_n})", required=2 ** n)
    rows = g.rows
    best = None
    for s in range(1 << n):
        ok = True
        for v in range(n):
            if popcount(rows[v] & s) not in (sigma if s >> v & 1 else rho):
                ok = False
                break
        if not ok:
            continue
        w = weight_of(g, s, weights)
        if best is None or (w < best[0] if objective is Objective.MIN else w > best[0]):
            best = (w, s)
    if best is None:
        return None
    return SolutionCertificate(selected=frozenset(g.members(best[1])), objective=best[0])


def brute_dq(g: Graph, matrix: DegreeConstraintMatrix, max_assignments: int = 10 ** 7) -> SolutionCertificate | None:
    """First valid partition in lexicographic order of part labels, by
    backtracking; a vertex is checked once it and all its neighbours are placed.

    Partial counts also prune: a count already past a finite set's maximum can
    only grow.
    """
    q, n = matrix.q, g.n
    if q ** n > max_assignments:
        raise SizeLimitError(f"brute force over {q}^{n} assignments refused", required=q ** n)
    rows = g.rows
    entries = matrix.entries
    # largest admissible count of each finite entry (-1 for the empty set)
    caps = [[max(mu.listed, default=-1) if mu.mode is Mode.FINITE else None for mu in row]
            for row in entries]
    # vertex v is complete once all of N[v] is placed, i.e. after position last[v]
    last = [max([v] + list(bits(rows[v]))) for v in range(n)]
    complete_at: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        complete_at[last[v]].append(v)
    part = [-1] * n
    masks = [0] * q

    def satisfied(v: int) -> bool:
        i = part[v]
        return all(popcount(rows[v] & masks[j]) in entries[i][j] for j in range(q))

    def capped(v: int) -> bool:
        """Some placed neighbour of ``v`` now over-counts a finite cap."""
        for u in bits(rows[v] | (1 << v)):
            if part[u] < 0:
                continue
            i = part[u]
            for j in range(q):
                cap = caps[i][j]
                if cap is not None and popcount(rows[u] & masks[j]) > cap:
                    return True
        return False

    def place(v: int) -> bool:
        if v == n:
            return True
        for i in range(q):
            part[v] = i
            masks[i] |= 1 << v
            if not capped(v) and all(satisfied(u) for u in complete_at[v]) and place(v + 1):
                return True
            masks[i] &= ~(1 << v)
        part[v] = -1
        return False

    if not place(0):
        return None
    return SolutionCertificate(partition=tuple(frozenset(g.members(m)) for m in masks), objective=0)


def brute_solve(g: Graph, problem: SigmaRhoProblem | PartitionProblem,
                weights: Mapping[Vertex, int] | None = None) -> SolutionCertificate | None:
    if isinstance(problem, SigmaRhoProblem):
        return brute_sigma_rho(g, problem.sigma, problem.rho, problem.objective, weights)
    return brute_dq(g, problem.matrix)
