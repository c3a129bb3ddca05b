"""Dynamic programming for (sigma, rho)-domination and D_q-partitioning over a
branch decomposition.

Both problems are handled as ``q``-part partition problems: a (sigma, rho)
instance is the partition ``(S, V - S)`` with constraint matrix
``[[sigma, N], [rho, N]]`` and objective ``w(S)``.

The decomposition is rooted by subdividing one of its edges.  For a node ``t``
with leaf set ``A`` and complement ``B``:

* an *in-key* describes a partition ``(X_1..X_q)`` of ``A`` up to nbr-equivalence:
  for each part ``j`` the truncated counts ``min(d_j, |N(b) & X_j|)``, ``b`` in ``B``;
* an *out-key* describes a partition ``(Y_1..Y_q)`` of ``B`` the same way, seen
  from the vertices of ``A``.

``d_j`` is the largest ``d`` value in column ``j`` of the matrix.  Only keys
realised by actual partitions are ever generated: in-keys bottom-up (union of
the children's partitions), out-keys top-down (the sibling's partition joined
with the parent's outside).  The table of ``t`` maps ``(in-key, out-key)`` to
the best partial solution on ``A`` whose vertices are all satisfied given any
outside partition with that out-key.  Constraints are checked at the leaves,
where the out-key holds exactly the truncated neighbour counts of the leaf.
"""

from __future__ import annotations

import logging
from typing import Mapping

from ..cuts import mim_mask
from ..decomposition import BranchDecomposition
from ..errors import DecompositionError
from ..graph import Graph, Vertex, bits, popcount
from .classes import NeighborClassIndex, signature
from .model import (DegreeConstraintMatrix, FinCofSet, Objective, PartitionProblem,
                    SigmaRhoProblem, SolutionCertificate, check_dq_partition,
                    check_sigma_rho, check_weights, weight_of)

log = logging.getLogger(__name__)

ROOT = -1


def _rooted(g: Graph, dec: BranchDecomposition):
    """Children lists and leaf masks of ``dec`` rooted at a subdivided edge."""
    x0, y0 = dec.edges[0]
    children = {ROOT: [x0, y0]}
    parent = {ROOT: None, x0: ROOT, y0: ROOT}
    order = [ROOT, x0, y0]
    for x in order:
        if x == ROOT:
            continue
        children[x] = []
        for y in sorted(dec.neighbors(x)):
            if y not in parent and {x, y} != {x0, y0}:
                parent[y] = x
                children[x].append(y)
                order.append(y)
    below = {}
    for x in reversed(order):
        v = dec.vertex_at(x)
        m = (1 << g.index(v)) if v is not None and x != ROOT else 0
        for c in children[x]:
            m |= below[c]
        below[x] = m
    return order, children, below


def _better(objective: Objective | None, new: int, old: int) -> bool:
    if objective is Objective.MIN:
        return new < old
    if objective is Objective.MAX:
        return new > old
    return False


def class_statistics(g: Graph, dec: BranchDecomposition, d: int) -> list[dict]:
    """Per tree edge: class counts on both sides against ``(n+1)^(d * mim)``."""
    stats = []
    full = g.full_mask
    for edge, side in sorted(dec.edge_sides(g).items()):
        other = full & ~side
        mim = mim_mask(g, side, other)
        bound = (g.n + 1) ** (d * mim)
        c_in = len(NeighborClassIndex(g, side, d))
        c_out = len(NeighborClassIndex(g, other, d))
        stats.append({"edge": edge, "size": popcount(side), "mim": mim, "bound": bound,
                      "classes": c_in, "classes_other": c_out,
                      "ok": c_in <= bound and c_out <= bound})
    for s in stats:
        log.debug("edge %s |A|=%d mim=%d classes=%d/%d bound=%d", s["edge"], s["size"],
                  s["mim"], s["classes"], s["classes_other"], s["bound"])
    return stats


def solve_partition(g: Graph, dec: BranchDecomposition, matrix: DegreeConstraintMatrix,
                    objective: Objective | None = None, part_weights=None):
    """Best partition ``(value, masks)`` or ``None`` when infeasible.

    ``part_weights[v]`` is the gain of putting vertex index ``v`` in part 0;
    ``objective`` ``None`` means plain feasibility.
    """
    dec.check_graph(g)
    q = matrix.q
    rows = g.rows
    n = g.n
    dcol = [matrix.column_d(j) for j in range(q)]
    entries = matrix.entries
    gain = part_weights or [0] * n

    if n == 1:
        found = None
        for i in range(q):
            if all(0 in entries[i][j] for j in range(q)):
                val = gain[0] if i == 0 else 0
                if found is None or _better(objective, val, found[0]):
                    found = (val, tuple(1 if j == i else 0 for j in range(q)))
        return found

    order, children, below = _rooted(g, dec)
    full = g.full_mask
    obs_in = {t: list(bits(full & ~below[t])) for t in order}
    obs_out = {t: list(bits(below[t])) for t in order}

    def in_key(t, masks):
        obs = obs_in[t]
        return tuple(signature(rows, obs, dcol[j], masks[j]) for j in range(q))

    def out_key(t, masks):
        obs = obs_out[t]
        return tuple(signature(rows, obs, dcol[j], masks[j]) for j in range(q))

    def union(x, y):
        return tuple(a | b for a, b in zip(x, y))

    # pass 1: realisable in-keys with representative partitions
    ins: dict[int, dict[tuple, tuple]] = {}
    join_in: dict[int, dict[tuple, tuple]] = {}
    for t in reversed(order):
        kids = children[t]
        if not kids:
            v = below[t].bit_length() - 1
            table = {}
            for i in range(q):
                masks = tuple((1 << v) if j == i else 0 for j in range(q))
                table.setdefault(in_key(t, masks), masks)
            ins[t] = table
            continue
        a, b = kids
        table, joins = {}, {}
        for ka, xa in ins[a].items():
            for kb, xb in ins[b].items():
                masks = union(xa, xb)
                kp = in_key(t, masks)
                table.setdefault(kp, masks)
                joins[ka, kb] = kp
        ins[t], join_in[t] = table, joins

    # pass 2: realisable out-keys, top-down
    empty = (0,) * q
    outs: dict[int, dict[tuple, tuple]] = {ROOT: {out_key(ROOT, empty): empty}}
    join_out: dict[int, dict[tuple, tuple]] = {}
    for t in order:
        kids = children[t]
        if not kids:
            continue
        for c, sib in ((kids[0], kids[1]), (kids[1], kids[0])):
            table, joins = {}, {}
            for ks, xs in ins[sib].items():
                for kp, yp in outs[t].items():
                    masks = union(xs, yp)
                    kc = out_key(c, masks)
                    table.setdefault(kc, masks)
                    joins[ks, kp] = kc
            outs[c], join_out[c] = table, joins

    # pass 3: tables (in-key, out-key) -> (value, witness partition)
    tables: dict[int, dict[tuple, tuple[int, tuple]]] = {}
    for t in reversed(order):
        kids = children[t]
        table: dict[tuple, tuple[int, tuple]] = {}
        if not kids:
            v = below[t].bit_length() - 1
            row = rows[v]
            for i in range(q):
                masks = tuple((1 << v) if j == i else 0 for j in range(q))
                ki = in_key(t, masks)
                val = gain[v] if i == 0 else 0
                for ko, ys in outs[t].items():
                    if all(min(dcol[j], popcount(row & ys[j])) in entries[i][j] for j in range(q)):
                        cur = table.get((ki, ko))
                        if cur is None or _better(objective, val, cur[0]):
                            table[ki, ko] = (val, masks)
            tables[t] = table
            continue
        a, b = kids
        ta, tb = tables[a], tables[b]
        ja, jb = join_out[a], join_out[b]
        by_in_a: dict[tuple, list] = {}
        by_in_b: dict[tuple, list] = {}
        for (ki, ko), entry in ta.items():
            by_in_a.setdefault(ki, []).append((ko, entry))
        for (ki, ko), entry in tb.items():
            by_in_b.setdefault(ki, []).append((ko, entry))
        for (ka, kb), kp in join_in[t].items():
            if ka not in by_in_a or kb not in by_in_b:
                continue
            for kop in outs[t]:
                ea = ta.get((ka, ja[kb, kop]))
                if ea is None:
                    continue
                eb = tb.get((kb, jb[ka, kop]))
                if eb is None:
                    continue
                val = ea[0] + eb[0]
                cur = table.get((kp, kop))
                if cur is None or _better(objective, val, cur[0]):
                    table[kp, kop] = (val, union(ea[1], eb[1]))
        tables[t] = table
        # children tables are no longer needed
        del tables[a], tables[b]

    result = None
    for (_, ko), entry in tables[ROOT].items():
        if result is None or _better(objective, entry[0], result[0]):
            result = entry
    return result


def _gains(g: Graph, weights: Mapping[Vertex, int] | None) -> list[int]:
    if weights is None:
        return [1] * g.n
    return [weights.get(v, 0) for v in g.vertices]


def solve_sigma_rho(g: Graph, dec: BranchDecomposition, sigma: FinCofSet, rho: FinCofSet,
                    objective: Objective | str = Objective.MIN,
                    weights: Mapping[Vertex, int] | None = None,
                    instrument: bool = False) -> SolutionCertificate | None:
    """Minimum or maximum weight (sigma, rho)-dominating set, or ``None``."""
    objective = Objective.parse(objective)
    check_weights(g, weights)
    if set(dec.leaf_map) != set(g.vertices):
        raise DecompositionError("decomposition leaves do not match the graph's vertices")
    matrix = DegreeConstraintMatrix.sigma_rho(sigma, rho)
    extra = {}
    if instrument:
        extra["classes"] = class_statistics(g, dec, matrix.d)
    found = solve_partition(g, dec, matrix, objective, _gains(g, weights))
    if found is None:
        return None
    value, masks = found
    if not check_sigma_rho(g, masks[0], sigma, rho) or weight_of(g, masks[0], weights) != value:
        raise RuntimeError("solver produced a set that fails the (sigma, rho) check")
    return SolutionCertificate(selected=frozenset(g.members(masks[0])), objective=value, extra=extra)


def solve_dq_partition(g: Graph, dec: BranchDecomposition, matrix: DegreeConstraintMatrix,
                       instrument: bool = False) -> SolutionCertificate | None:
    """A partition satisfying ``matrix``, or ``None``."""
    if set(dec.leaf_map) != set(g.vertices):
        raise DecompositionError("decomposition leaves do not match the graph's vertices")
    extra = {}
    if instrument:
        extra["classes"] = class_statistics(g, dec, matrix.d)
    found = solve_partition(g, dec, matrix, None)
    if found is None:
        return None
    _, masks = found
    if not check_dq_partition(g, masks, matrix):
        raise RuntimeError("solver produced a partition that fails the matrix check")
    parts = tuple(frozenset(g.members(m)) for m in masks)
    return SolutionCertificate(partition=parts, objective=0, extra=extra)


def solve(g: Graph, dec: BranchDecomposition, problem: SigmaRhoProblem | PartitionProblem,
          weights: Mapping[Vertex, int] | None = None,
          instrument: bool = False) -> SolutionCertificate | None:
    if isinstance(problem, SigmaRhoProblem):
        return solve_sigma_rho(g, dec, problem.sigma, problem.rho, problem.objective, weights, instrument)
    return solve_dq_partition(g, dec, problem.matrix, instrument)
