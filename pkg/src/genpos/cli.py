"""Command-line interface: ``genpos <command> [options]``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import families as fam
from .checks import REGISTRY, Budget, reports_to_json, reports_to_markdown, run_checks
from .errors import GenposError, TooLarge
from .explore import PROBLEMS, Catalog, ExploreBudget, explore_conjecture, load_catalog
from .gp import clique_number, eta, gp_number, independence_number
from .graph import Graph
from .io import emit_graph, parse_graph
from .products import (
    RootedSpec,
    corona,
    direct_product,
    lexicographic_product,
    rooted_product,
    strong_product,
)
from .resolving import strong_resolving_graph

FORMATS = ("graph6", "edgelist")
DEFAULT_MAX_N = 40


def _max_n(args) -> int:
    if getattr(args, "max_n", None) is not None:
        return args.max_n
    return int(os.environ.get("GENPOS_MAX_N", DEFAULT_MAX_N))


def _guard(g: Graph, args) -> Graph:
    limit = _max_n(args)
    if g.n > limit:
        raise TooLarge(f"graph has {g.n} vertices, above the size guard {limit} (use --max-n or GENPOS_MAX_N)")
    return g


def _input_graph(args) -> Graph:
    if args.stdin:
        return parse_graph(sys.stdin.read(), args.format)
    if args.input:
        with open(args.input) as fh:
            return parse_graph(fh.read(), args.format)
    if args.family:
        return fam.from_spec(args.family, args.n)
    raise GenposError("no input graph: give --family, --stdin or --input")


def _write(text: str, args) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", help="family spec such as cycle:5, kbip:2,3 or petersen")
    p.add_argument("--n", type=int, help="order for single-parameter families")
    p.add_argument("--stdin", action="store_true", help="read the graph from standard input")
    p.add_argument("--input", metavar="FILE", help="read the graph from a file")
    p.add_argument("--format", choices=FORMATS, default="graph6", help="input/output graph format")
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="size guard override")


def _set_output(value: int, witness, args) -> None:
    if args.json:
        _write(json.dumps({"value": value, "witness": list(witness)}) + "\n", args)
    else:
        _write(f"{value}\nwitness: {' '.join(map(str, witness))}\n", args)


def cmd_gp(args) -> int:
    res = gp_number(_guard(_input_graph(args), args))
    _set_output(res.value, res.witness, args)
    return 0


def cmd_omega(args) -> int:
    res = clique_number(_guard(_input_graph(args), args))
    _set_output(res.value, res.witness, args)
    return 0


def cmd_alpha(args) -> int:
    res = independence_number(_guard(_input_graph(args), args))
    _set_output(res.value, res.witness, args)
    return 0


def cmd_eta(args) -> int:
    res = eta(_guard(_input_graph(args), args))
    _set_output(res.value, res.witness, args)
    return 0


def cmd_srg(args) -> int:
    sr = strong_resolving_graph(_guard(_input_graph(args), args))
    if args.emit:
        _write(emit_graph(sr, args.emit), args)
    else:
        _write("".join(f"{u} {v}\n" for u, v in sr.edges()), args)
    return 0


_BINARY = {"strong": strong_product, "direct": direct_product, "lexicographic": lexicographic_product}


def cmd_product(args) -> int:
    g, h = fam.from_spec(args.lhs), fam.from_spec(args.rhs)
    if args.op in _BINARY:
        prod, _ = _BINARY[args.op](g, h)
    elif args.op == "corona":
        prod, _ = corona(g, h)
    else:
        prod, _ = rooted_product(RootedSpec(g, h, args.root))
    _write(emit_graph(_guard(prod, args), args.format), args)
    return 0


def cmd_generate(args) -> int:
    if args.family == "connected":
        if args.n is None:
            raise GenposError("generate --family connected needs --n")
        graphs = list(fam.enumerate_connected_graphs(args.n))
    elif args.family.partition(":")[0] == "random-tree" and ":" not in args.family:
        if args.n is None:
            raise GenposError("random-tree needs --n")
        graphs = [fam.random_tree(args.n, args.seed)]
    else:
        graphs = [fam.from_spec(args.family, args.n)]
    _write("".join(emit_graph(g, args.format) for g in graphs), args)
    return 0


def cmd_convert(args) -> int:
    src = sys.stdin.read() if not args.input else open(args.input).read()
    _write(emit_graph(parse_graph(src, args.source), args.to), args)
    return 0


def cmd_verify(args) -> int:
    budget = Budget(exhaustive_n=args.exhaustive_n, factor_n=args.factor_n, seed=args.seed)
    reports = run_checks(args.claims or ["*"], budget, args.jobs)
    if args.md:
        text = reports_to_markdown(reports)
    elif args.json:
        text = json.dumps(reports_to_json(reports, args.timings), indent=2) + "\n"
    else:
        verdicts = {}
        for r in reports:
            verdicts[r.claim_id] = verdicts.get(r.claim_id, True) and r.passed
        lines = [f"{'PASS' if ok else 'FAIL'}  {cid}" for cid, ok in verdicts.items()]
        text = "\n".join(lines) + "\n"
    _write(text, args)
    return 0 if all(r.passed for r in reports) else 1


def cmd_explore(args) -> int:
    cat_g = load_catalog(args.catalog_g) if args.catalog_g else Catalog("empty", [])
    cat_h = load_catalog(args.catalog_h) if args.catalog_h else cat_g
    budget = ExploreBudget(max_pairs=args.max_pairs, max_order=args.max_order)
    rep = explore_conjecture(args.problem, cat_g, cat_h, budget, args.cursor)
    if args.json:
        _write(json.dumps(rep.to_dict(), indent=2) + "\n", args)
    else:
        counts = ", ".join(f"{k}={v}" for k, v in sorted(rep.counts.items()))
        status = "complete" if rep.complete else f"partial, resume with --cursor {rep.cursor}"
        _write(f"{rep.problem}: {rep.examined} pairs ({status}); {counts or 'no pairs'}; "
               f"violations={len(rep.violations)}\n", args)
    return 1 if rep.violations else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genpos", description="General position numbers and strong resolving graphs")
    parser.add_argument("--max-n", type=int, default=None, help="size guard (default $GENPOS_MAX_N or 40)")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (
        ("gp", cmd_gp, "general position number with a witness"),
        ("omega", cmd_omega, "clique number"),
        ("alpha", cmd_alpha, "independence number"),
        ("eta", cmd_eta, "largest vertex set inducing a union of >= 2 cliques"),
    ):
        p = sub.add_parser(name, help=helptext)
        _add_input(p)
        p.add_argument("--json", action="store_true")
        p.add_argument("--out")
        p.set_defaults(func=fn)

    p = sub.add_parser("srg", help="strong resolving graph")
    _add_input(p)
    p.add_argument("--emit", choices=FORMATS, help="emit the graph instead of listing MMD pairs")
    p.add_argument("--out")
    p.set_defaults(func=cmd_srg)

    p = sub.add_parser("product", help="build a product graph")
    p.add_argument("--op", required=True, choices=sorted(_BINARY) + ["corona", "rooted"])
    p.add_argument("--lhs", required=True, help="family spec of the first factor or base")
    p.add_argument("--rhs", required=True, help="family spec of the second factor or gadget")
    p.add_argument("--root", type=int, default=0, help="gadget root for --op rooted")
    p.add_argument("--max-n", type=int, default=argparse.SUPPRESS, help="size guard override")
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("generate", help="emit named graphs or all connected graphs of an order")
    p.add_argument("--family", required=True, help="family spec, or 'connected' with --n")
    p.add_argument("--n", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="graph6")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("convert", help="convert between graph6 and edge lists")
    p.add_argument("--from", dest="source", choices=FORMATS, required=True)
    p.add_argument("--to", choices=FORMATS, required=True)
    p.add_argument("--input")
    p.add_argument("--out")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("verify", help="run the claim registry")
    p.add_argument("claims", nargs="*", help="claim id patterns (fnmatch); default all")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-n", type=int, default=6)
    p.add_argument("--factor-n", type=int, default=4)
    p.add_argument("--json", action="store_true")
    p.add_argument("--md", action="store_true")
    p.add_argument("--timings", action="store_true", help="include runtime_ms in JSON output")
    p.add_argument("--list", action="store_true", help="list claim ids and exit")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("explore", help="sweep pairs of graphs for an open problem")
    p.add_argument("problem", choices=PROBLEMS)
    p.add_argument("--catalog-g", help="builtin catalog (e.g. connected:4, complete:3..5) or graph6 file")
    p.add_argument("--catalog-h", help="second catalog; defaults to the first")
    p.add_argument("--max-pairs", type=int)
    p.add_argument("--max-order", type=int, default=64)
    p.add_argument("--cursor", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Optional[list] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.list:
        sys.stdout.write("".join(f"{cid}\n" for cid in REGISTRY))
        return 0
    try:
        return args.func(args)
    except GenposError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
