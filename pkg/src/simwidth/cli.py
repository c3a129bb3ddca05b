"""Command-line front end.

Exit codes: 0 success, 2 input or precondition error, 3 infeasible problem.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import generators as gens
from .chordal import chordal_branch_decomposition
from .cocomp import cocomp_linear_decomposition, find_cocomp_ordering
from .cuts import CutFunction
from .decomposition import caterpillar_from_ordering, f_width
from .errors import (DecompositionError, FormatError, GraphError, InvalidOrderingError,
                     NotChordalError, PreconditionError, SizeLimitError)
from .formats import (format_chord_model, format_decomposition, format_edge_list, format_ordering,
                      parse_decomposition, parse_edge_list, parse_ordering, parse_weights, read_text)
from .graph import Graph
from .lcvsvp import PartitionProblem, parse_problem, solve
from .oracle import exact_linear_width, exact_width
from .patterns import detect_ktkt, detect_ktst

EXIT_OK, EXIT_INPUT, EXIT_INFEASIBLE = 0, 2, 3


class CliError(Exception):
    """Input problem reported to the user with exit code 2."""


# -- gen -------------------------------------------------------------------------

# family -> (parameter names, builder returning (graph, ordering | None, chord model | None))
FAMILIES = {
    "ktkt": (["t"], lambda p, s: (gens.gen_ktkt(p[0]), None, None)),
    "ktst": (["t"], lambda p, s: (gens.gen_ktst(p[0]), None, None)),
    "grid": (["p", "q"], lambda p, s: (*gens.gen_column_clique_grid(p[0], p[1]), None)),
    "hsu": (["p", "q"], lambda p, s: (gens.gen_hsu_clique_chain(p[0], p[1]), None, None)),
    "split": (["m"], lambda p, s: (gens.gen_split_lowerbound(p[0]), None, None)),
    "subgrid": (["k"], lambda p, s: (gens.gen_grid_subdivision(p[0]), None, None)),
    "circle": (["k"], lambda p, s: _circle(p[0])),
    "chordal": (["n", "density"], lambda p, s: (gens.gen_random_chordal(int(p[0]), p[1], s), None, None)),
    "interval": (["n"], lambda p, s: (gens.gen_random_interval(p[0], s), None, None)),
    "permutation": (["n"], lambda p, s: (gens.gen_random_permutation(p[0], s), list(range(p[0])), None)),
}


def _circle(k: int):
    g, model = gens.gen_circle_Gk(k)
    return g, None, model


def generate(family: str, params: list[str], seed: int = 0):
    """``(graph, ordering or None, chord model or None)`` for a family name."""
    if family not in FAMILIES:
        raise CliError(f"unknown family {family!r}; known: {', '.join(sorted(FAMILIES))}")
    names, build = FAMILIES[family]
    if len(params) != len(names):
        raise CliError(f"family {family} takes parameters: {' '.join(names)}")
    try:
        values = [float(x) if name == "density" else int(x) for name, x in zip(names, params)]
    except ValueError:
        raise CliError(f"bad parameter in {' '.join(params)!r}") from None
    return build(values, seed)


def cmd_gen(args) -> int:
    g, order, model = generate(args.family, args.params, args.seed)
    header = [f"family {args.family} {' '.join(args.params)} seed {args.seed}"]
    text = format_edge_list(g, header)
    if args.out is None:
        sys.stdout.write(text)
        return EXIT_OK
    out = Path(args.out)
    out.with_suffix(".el").write_text(text)
    written = [out.with_suffix(".el")]
    if order is not None:
        out.with_suffix(".ord").write_text(format_ordering(order))
        written.append(out.with_suffix(".ord"))
    if model is not None:
        out.with_suffix(".chords").write_text(format_chord_model(model))
        written.append(out.with_suffix(".chords"))
    for path in written:
        print(path)
    return EXIT_OK


# -- decompose / width -----------------------------------------------------------


def _graph(path) -> Graph:
    return parse_edge_list(read_text(path))


def cmd_decompose(args) -> int:
    g = _graph(args.graph)
    order = parse_ordering(read_text(args.ordering)) if args.ordering else None
    try:
        if args.method == "chordal":
            d = chordal_branch_decomposition(g)
        elif args.method == "cocomp":
            if order is None:
                search = find_cocomp_ordering(g)
                if not search.found:
                    reason = "none exists" if search.exhausted else "search budget exhausted"
                    raise CliError(f"no co-comparability ordering found ({reason})")
                order = list(search.ordering)
            d = cocomp_linear_decomposition(g, order)
        else:
            d = caterpillar_from_ordering(order if order is not None else list(g.vertices))
    except NotChordalError as exc:
        print("# not chordal; induced cycle:", file=sys.stderr)
        print("cycle " + " ".join(map(str, exc.cycle)), file=sys.stderr)
        return EXIT_INPUT
    except InvalidOrderingError as exc:
        print("# ordering violates the co-comparability rule at:", file=sys.stderr)
        print("violation " + " ".join(map(str, exc.witness)), file=sys.stderr)
        return EXIT_INPUT
    text = f"# {args.method} decomposition\n"
    if args.report:
        rep = f_width(g, d, args.report)
        text += f"# {args.report}-width of this decomposition: {rep.max}\n"
    text += format_decomposition(d, g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _load_pair(args):
    g = _graph(args.graph)
    d = parse_decomposition(read_text(args.decomposition))
    d.check_graph(g)
    return g, d


def cmd_width(args) -> int:
    g, d = _load_pair(args)
    rep = f_width(g, d, args.f)
    print(f"# {args.f}-width: maximum {args.f} value over the tree edges")
    for (x, y), val in rep.per_edge.items():
        print(f"edge {x} {y} {val}")
    print(f"max {rep.max}")
    return EXIT_OK


# -- solve / detect / oracle ------------------------------------------------------


def cmd_solve(args) -> int:
    g, d = _load_pair(args)
    problem = parse_problem(args.problem, args.objective)
    weights = parse_weights(read_text(args.weights)) if args.weights else None
    if isinstance(problem, PartitionProblem) and weights is not None:
        raise CliError("weights only apply to subset problems")
    cert = solve(g, d, problem, weights)
    print(f"# {problem.name} by dynamic programming over the decomposition")
    if cert is None:
        print("infeasible")
        return EXIT_INFEASIBLE
    if cert.partition is not None:
        print("feasible")
        for i, part in enumerate(cert.partition):
            print(f"part {i} " + " ".join(map(str, sorted(part))))
    else:
        print(f"objective {cert.objective}")
        print("set " + " ".join(map(str, sorted(cert.selected))))
    return EXIT_OK


def cmd_detect(args) -> int:
    g = _graph(args.graph)
    detect = detect_ktkt if args.pattern == "ktkt" else detect_ktst
    w = detect(g, args.t)
    print(f"# induced {args.pattern} with t={args.t}")
    if w is None:
        print("none")
    else:
        print("clique " + " ".join(map(str, w.clique_side)))
        print("partners " + " ".join(map(str, w.other_side)))
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _graph(args.graph)
    kind = "linear " if args.linear else ""
    print(f"# exact {kind}{args.f}-width by exhaustive search")
    if args.linear:
        value, order = exact_linear_width(g, args.f, args.max_n or 10)
        print(f"value {value}")
        print("ordering " + " ".join(map(str, order)))
    else:
        value, d = exact_width(g, args.f, args.max_n or 9)
        print(f"value {value}")
        sys.stdout.write(format_decomposition(d, g))
    return EXIT_OK


# -- entry point -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simwidth", description="Branch decompositions, widths and LC-VSVP solving.")
    sub = p.add_subparsers(dest="command", required=True)
    fs = [f.value for f in CutFunction]

    s = sub.add_parser("gen", help="generate a graph family")
    s.add_argument("family", help="one of: " + ", ".join(sorted(FAMILIES)))
    s.add_argument("params", nargs="*")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", help="output prefix; writes .el plus .ord/.chords side-cars")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("decompose", help="build a branch decomposition")
    s.add_argument("graph")
    s.add_argument("--method", choices=["chordal", "cocomp", "caterpillar"], default="chordal")
    s.add_argument("--ordering", help="ordering file for cocomp/caterpillar")
    s.add_argument("--report", choices=fs, help="also report this width of the result")
    s.add_argument("--out")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("width", help="evaluate a cut function on every tree edge")
    s.add_argument("graph")
    s.add_argument("decomposition")
    s.add_argument("--f", choices=fs, default="mim")
    s.set_defaults(func=cmd_width)

    s = sub.add_parser("solve", help="solve an LC-VSVP problem over a decomposition")
    s.add_argument("graph")
    s.add_argument("decomposition")
    s.add_argument("problem", help="dominating-set | independent-set | total-dominating-set | coloring:q | sigma=..;rho=..")
    s.add_argument("--objective", choices=["min", "max"])
    s.add_argument("--weights", help="file of 'vertex weight' lines")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("detect", help="find an induced KtKt / KtSt pattern")
    s.add_argument("graph")
    s.add_argument("pattern", choices=["ktkt", "ktst"])
    s.add_argument("t", type=int)
    s.set_defaults(func=cmd_detect)

    s = sub.add_parser("oracle", help="exact width by exhaustive search")
    s.add_argument("graph")
    s.add_argument("--f", choices=fs, default="mim")
    s.add_argument("--linear", action="store_true")
    s.add_argument("--max-n", type=int, dest="max_n")
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CliError, FormatError, GraphError, PreconditionError, DecompositionError, SizeLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
