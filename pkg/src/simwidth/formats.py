"""Line-oriented text formats for graphs, decompositions, orderings, chord
models and vertex weights.  Blank lines and ``#`` comments are ignored."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Sequence

from .decomposition import BranchDecomposition
from .errors import DecompositionError, FormatError
from .generators import ChordModel
from .graph import Graph


def _lines(text: str) -> list[list[str]]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line.split())
    return out


def _ints(fields: list[str], count: int | None, what: str) -> list[int]:
    if count is not None and len(fields) != count:
        raise FormatError(f"{what}: expected {count} fields, got {' '.join(fields)!r}")
    try:
        return [int(x) for x in fields]
    except ValueError:
        raise FormatError(f"{what}: non-integer field in {' '.join(fields)!r}") from None


# -- edge lists ----------------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    lines = _lines(text)
    if not lines:
        raise FormatError("edge list is empty")
    n, m = _ints(lines[0], 2, "header")
    if n < 0 or m < 0:
        raise FormatError("header counts must be non-negative")
    if len(lines) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(lines) - 1}")
    seen = set()
    edges = []
    for fields in lines[1:]:
        u, v = _ints(fields, 2, "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"edge {u} {v} uses a vertex outside 0..{n - 1}")
        if u == v:
            raise FormatError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"duplicate edge {u} {v}")
        seen.add(key)
        edges.append(key)
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph, header: Sequence[str] = ()) -> str:
    """Vertices are written by index; non-integer ids are relabelled ``0..n-1``."""
    out = [f"# {h}" for h in header]
    edges = [(g.index(u), g.index(v)) for u, v in g.edges()]
    out.append(f"{g.n} {len(edges)}")
    out += [f"{u} {v}" for u, v in sorted(edges)]
    return "\n".join(out) + "\n"


# -- decompositions ------------------------------------------------------------


def parse_decomposition(text: str) -> BranchDecomposition:
    lines = _lines(text)
    if not lines:
        raise FormatError("decomposition file is empty")
    t_nodes, t_edges, n = _ints(lines[0], 3, "header")
    if len(lines) - 1 != t_edges + n:
        raise FormatError(f"header promises {t_edges} edges and {n} leaves, found {len(lines) - 1} lines")
    edges = [tuple(_ints(f, 2, "tree edge")) for f in lines[1:1 + t_edges]]
    leaf_map = {}
    for fields in lines[1 + t_edges:]:
        node, v = _ints(fields, 2, "leaf")
        if v in leaf_map:
            raise FormatError(f"vertex {v} assigned to two leaves")
        leaf_map[v] = node
    nodes = {x for e in edges for x in e} | set(leaf_map.values())
    if len(nodes) != t_nodes:
        raise FormatError(f"header promises {t_nodes} nodes, found {len(nodes)}")
    try:
        return BranchDecomposition(edges, leaf_map)
    except DecompositionError as exc:
        raise FormatError(f"invalid decomposition: {exc}") from None


def format_decomposition(d: BranchDecomposition, g: Graph | None = None) -> str:
    """With ``g`` given, leaves are written with vertex indices of ``g``."""
    edges = d.edges
    lines = [f"{len(d.nodes)} {len(edges)} {len(d.leaf_map)}"]
    lines += [f"{x} {y}" for x, y in edges]
    label = (lambda v: g.index(v)) if g is not None else (lambda v: v)
    lines += [f"{node} {label(v)}" for v, node in sorted(d.leaf_map.items(), key=lambda kv: kv[1])]
    return "\n".join(lines) + "\n"


# -- orderings, chord models, weights --------------------------------------------


def parse_ordering(text: str) -> list[int]:
    lines = _lines(text)
    if len(lines) != 1:
        raise FormatError("ordering file must hold exactly one line")
    return _ints(lines[0], None, "ordering")


def format_ordering(order: Iterable) -> str:
    return " ".join(str(v) for v in order) + "\n"


def parse_chord_model(text: str) -> ChordModel:
    chords = {}
    for fields in _lines(text):
        v, p1, p2 = _ints(fields, 3, "chord")
        if v in chords:
            raise FormatError(f"vertex {v} has two chords")
        chords[v] = (p1, p2)
    points = max((p for c in chords.values() for p in c), default=0)
    return ChordModel(points, chords)


def format_chord_model(model: ChordModel) -> str:
    return "".join(f"{v} {p1} {p2}\n" for v, (p1, p2) in sorted(model.chords.items()))


def parse_weights(text: str) -> dict[int, int]:
    """``vertex weight`` lines."""
    out = {}
    for fields in _lines(text):
        v, w = _ints(fields, 2, "weight")
        if w < 0:
            raise FormatError("weights must be non-negative")
        out[v] = w
    return out


def read_text(path: str | Path) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
