"""Command line front end.

Exit codes: 0 success, 1 invalid or infeasible input, 2 a computed witness
failed re-verification, 3 an instance-size guard was exceeded.
"""

import argparse
import json
import sys

from . import generators, oracles
from .decomposition import (DecompositionError, coloring_from_decomposition, from_oct,
                            is_proper_coloring, validate)
from .dp import AnnotatedPartition, CertificateError, extract_certificate, run_dp
from .extint import is_finite, to_json_value
from .fileio import (InputError, format_decomposition, format_graph, read_decomposition,
                     read_graph, write_decomposition, write_graph)
from .graph import GraphError
from .guard import SizeGuardError
from .packing import PatternError, solve_packing_xp
from .problems import independent_set_value, make_plugin

OK, INVALID, VERIFY_FAILED, GUARD = 0, 1, 2, 3
PROBLEMS = ("vc", "is", "kt-cover", "oct", "maxcut")


class VerificationError(RuntimeError):
    pass


def _emit(args, payload, lines):
    if getattr(args, "json", False):
        print(json.dumps(payload))
    else:
        for line in lines:
            print(line)


def _result(problem, value, witness, width):
    return {"problem": problem, "value": to_json_value(value), "witness": witness,
            "width": width}


def _weights_for(plugin, g):
    if plugin.weight_kind == "vertex" and g.vertex_weights is not None:
        return list(g.vertex_weights)
    if plugin.weight_kind == "edge" and g.edge_weights is not None:
        return dict(g.edge_weights)
    return None


def _plugin_graph(plugin, g):
    """Drop weights a problem does not use so that unweighted problems accept
    files carrying weights for other purposes."""
    if plugin.weight_kind == "vertex":
        return g.with_weights(g.vertex_weights, None)
    if plugin.weight_kind == "edge":
        return g.with_weights(None, g.edge_weights)
    return g.unweighted()


# -- commands ---------------------------------------------------------------


def cmd_validate(args):
    g = read_graph(args.graph)
    d = read_decomposition(args.decomposition)
    report = validate(g, d)
    if args.json:
        print(json.dumps({"valid": not report, "width": d.width(),
                          "violations": [{"axiom": v.axiom, "witness": list(v.witness)}
                                         for v in report]}))
    elif report:
        for v in report:
            print(f"violation {v}")
    else:
        print(f"valid width {d.width()}")
    return OK if not report else INVALID


def _decomposition_for(args, g):
    if args.decomposition is not None:
        return read_decomposition(args.decomposition)
    if args.oct_bruteforce:
        return from_oct(g, oracles.oct_bruteforce(g))
    raise InputError("a decomposition file or --oct-bruteforce is required")


def cmd_solve(args):
    g = read_graph(args.graph)
    d = _decomposition_for(args, g)
    plugin = make_plugin(args.problem, args.t)
    g = _plugin_graph(plugin, g)
    weights = _weights_for(plugin, g)
    result = run_dp(g, d, plugin, weights=weights)
    value = result.value
    if not is_finite(value):
        _emit(args, _result(args.problem, value, [], d.width()), [f"value {to_json_value(value)}"])
        return INVALID
    witness = []
    if args.certificate:
        cert = extract_certificate(g, d, plugin, result, weights=weights)
        if plugin.evaluate(g, cert, weights) != value:
            raise VerificationError("certificate does not reach the optimum")
        witness = cert.to_json()
    if args.problem == "is":
        value = independent_set_value(g, value, weights)
    lines = [f"value {to_json_value(value)}"]
    if witness:
        lines += [f"part {i} {' '.join(map(str, part))}".rstrip() for i, part in enumerate(witness)]
    _emit(args, _result(args.problem, value, witness, d.width()), lines)
    return OK


def _parse_fixes(fixes, p):
    assignment = {}
    for item in fixes or ():
        try:
            v, part = item.split("=")
            v, part = int(v), int(part)
        except ValueError:
            raise InputError(f"--fix expects VERTEX=PART, got {item!r}") from None
        if not 0 <= part < p:
            raise InputError(f"part {part} out of range for a {p}-partition")
        assignment[v] = part
    return assignment


def cmd_oracle(args):
    g = read_graph(args.graph)
    plugin = make_plugin(args.problem, args.t)
    g = _plugin_graph(plugin, g)
    weights = _weights_for(plugin, g)
    fixed = _parse_fixes(args.fix, plugin.p)
    for v in fixed:
        if not 0 <= v < g.n:
            raise InputError(f"annotated vertex {v} out of range")
    value, witness = oracles.hat_p_bruteforce(plugin, g, AnnotatedPartition.from_dict(fixed, plugin.p),
                                              weights=weights)
    if not is_finite(value):
        _emit(args, _result(args.problem, value, [], None), [f"value {to_json_value(value)}"])
        return INVALID
    if args.problem == "is":
        value = independent_set_value(g, value, weights)
    parts = witness.to_json()
    lines = [f"value {to_json_value(value)}"]
    lines += [f"part {i} {' '.join(map(str, part))}".rstrip() for i, part in enumerate(parts)]
    _emit(args, _result(args.problem, value, parts, None), lines)
    return OK


def cmd_gen(args):
    fam, params = args.family, args.params
    need = {"clique": 1, "cycle": 1, "biclique": 2, "no-nice": 1, "subdivided-clique": 2,
            "random": 3}
    if len(params) != need[fam]:
        raise InputError(f"{fam} takes {need[fam]} parameter(s)")
    d = None
    try:
        if fam == "random":
            n, p, seed = int(params[0]), float(params[1]), int(params[2])
            g, d = generators.random_graph(n, p, seed, planted_oct=args.planted_oct)
        else:
            ints = [int(x) for x in params]
            if fam == "clique":
                g = generators.clique(*ints)
            elif fam == "cycle":
                g = generators.cycle(*ints)
            elif fam == "biclique":
                g = generators.biclique(*ints)
            elif fam == "subdivided-clique":
                g = generators.subdivided_clique(*ints)
            else:
                g, d = generators.no_nice(*ints)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    comment = f"{fam} {' '.join(params)}"
    if args.output:
        write_graph(args.output, g, comment)
    else:
        sys.stdout.write(format_graph(g, comment))
    if d is not None:
        target = args.decomposition or (args.output + ".decomp.json" if args.output else None)
        if target:
            write_decomposition(target, d)
        else:
            sys.stdout.write(format_decomposition(d))
    return OK


def cmd_color(args):
    g = read_graph(args.graph)
    d = read_decomposition(args.decomposition)
    colors = coloring_from_decomposition(g, d)
    if not is_proper_coloring(g, colors):
        raise VerificationError("colouring is not proper")
    count = len(set(colors))
    if args.json:
        print(json.dumps({"problem": "color", "value": count, "witness": colors,
                          "width": d.width()}))
    else:
        print(f"colors {count}")
        for v, c in enumerate(colors):
            print(f"{v} {c}")
    return OK


def cmd_pack(args):
    g = read_graph(args.graph)
    d = read_decomposition(args.decomposition)
    h = read_graph(args.pattern)
    size, copies = solve_packing_xp(g, d, h, args.mode, prune=not args.no_prune)
    lines = [f"value {size}"] + [" ".join(map(str, c)) for c in copies]
    _emit(args, _result(f"pack-{args.mode}", size, [list(c) for c in copies], d.width()), lines)
    return OK


# -- argument parsing -------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="biptw",
                                     description="Exact solvers over bipartite tree decompositions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a decomposition against a graph")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("solve", help="solve a problem by dynamic programming")
    p.add_argument("problem", choices=PROBLEMS)
    p.add_argument("graph")
    p.add_argument("decomposition", nargs="?")
    p.add_argument("--oct-bruteforce", action="store_true",
                   help="build a one-bag decomposition from a minimum odd cycle transversal")
    p.add_argument("--t", type=int, default=3, help="clique size for kt-cover")
    p.add_argument("--certificate", action="store_true", help="print a verified optimal partition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", help="solve a small instance by exhaustive search")
    p.add_argument("problem", choices=PROBLEMS)
    p.add_argument("graph")
    p.add_argument("--t", type=int, default=3)
    p.add_argument("--fix", action="append", metavar="VERTEX=PART",
                   help="pin a vertex to a part (repeatable)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a graph from a named family")
    p.add_argument("family", choices=("clique", "cycle", "biclique", "no-nice",
                                      "subdivided-clique", "random"))
    p.add_argument("params", nargs="*")
    p.add_argument("--planted-oct", type=int, default=None)
    p.add_argument("-o", "--output")
    p.add_argument("--decomposition", help="where to write the decomposition, if any")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("color", help="colour with at most width+2 colours")
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("pack", help="maximum packing of pattern copies")
    p.add_argument("mode", choices=("subgraph", "induced", "scattered"))
    p.add_argument("graph")
    p.add_argument("decomposition")
    p.add_argument("pattern")
    p.add_argument("--no-prune", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_pack)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SizeGuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return GUARD
    except (VerificationError, CertificateError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VERIFY_FAILED
    except (InputError, DecompositionError, GraphError, PatternError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


if __name__ == "__main__":
    sys.exit(main())
