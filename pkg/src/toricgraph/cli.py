"""Command-line front end: ``toricgraph <subcommand> GRAPH [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from typing import Any, Sequence

from . import chromatic, corpus, kmy, toric, verify
from . import graph as gr
from .algebra import AlgebraError, format_binomial, format_monomial, lex, parse_order, reference_order
from .gb import DEFAULT_GENERATOR_BUDGET, CapabilityError, set_generator_budget
from .graph import Graph

log = logging.getLogger("toricgraph")

EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _setup_logging() -> None:
    level = os.environ.get("TORICGRAPH_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def load_graph(spec: str, max_edges: int | None) -> Graph:
    """A graph file path, or ``@name`` for a built-in example."""
    if spec.startswith("@"):
        try:
            g = corpus.EXAMPLES[spec[1:]]
        except KeyError:
            raise UsageError(f"unknown example {spec!r}; known: {', '.join(sorted(corpus.EXAMPLES))}") from None
    else:
        try:
            with open(spec, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"{spec}: {exc.strerror}") from None
        try:
            g = gr.parse_graph(text)
        except gr.ParseError as exc:
            raise UsageError(f"{spec}: {exc}") from None
    if max_edges is not None and g.q > max_edges:
        raise UsageError(f"graph has {g.q} edges, above --max-edges {max_edges}")
    return g


def _order(args: argparse.Namespace, g: Graph, default=None):
    if getattr(args, "order", None):
        try:
            return parse_order(args.order, g.names, partial=args.partial)
        except AlgebraError as exc:
            raise UsageError(f"bad order: {exc}") from None
    return default if default is not None else reference_order(g.q)


def _edge(args: argparse.Namespace, g: Graph) -> int:
    raw = args.edge.strip().lstrip("e")
    if not raw.isdigit() or int(raw) not in g.labels:
        raise UsageError(f"no edge {args.edge!r} (graph has e1..e{g.q})")
    return int(raw)


def _emit(args: argparse.Namespace, data: dict[str, Any], human: Sequence[str]) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        for line in human:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_ideal(args, g: Graph) -> int:
    I = toric.toric_ideal(g)
    gens = [format_binomial(b, g.names) for b in I.generators]
    _emit(args, {"order": I.order.spec(g.names), "generators": gens, "zero": I.is_zero},
          gens or ["zero ideal"])
    return 0


def cmd_gb(args, g: Graph) -> int:
    order = _order(args, g)
    G = toric.toric_gb(g, order)
    gens = [format_binomial(b, g.names) for b in G.generators]
    _emit(args, {"order": order.spec(g.names), "generators": gens},
          G.serialize(g.names).splitlines())
    return 0


def cmd_init(args, g: Graph) -> int:
    order = _order(args, g)
    M = toric.initial_ideal(g, order, method=args.method)
    mons = [format_monomial(m, g.names) for m in M]
    _emit(args, {"order": order.spec(g.names), "generators": mons}, mons or ["zero ideal"])
    return 0


def cmd_kmy(args, g: Graph) -> int:
    label = _edge(args, g)
    y = g.position(label)
    order = _order(args, g, kmy.default_order(g.q, y))
    D = kmy.kmy_decompose_toric(g, label, order)
    data = D.to_dict(g.names)
    lines = [f"y = {data['y']}   order = {data['order']}", "Groebner basis (d | q | r):"]
    for row in data["gb"]:
        lines.append(f"  {row['element']:<28} d={row['d']}  q={row['q']}  r={row['r'] or '-'}")
    lines.append("C = <" + ", ".join(data["C"]) + ">")
    lines.append("N = <" + ", ".join(data["N"]) + ">")
    lines.append("degenerate: " + ("yes" if D.degenerate else "no"))
    _emit(args, data, lines)
    return 0


def cmd_height(args, g: Graph) -> int:
    formula, degen = toric.height_toric(g)
    edges = []
    for item in (args.edges.split(",") if args.edges else []):
        args.edge = item
        edges.append(_edge(args, g))
    steps = kmy.deletion_sequence(g, edges)
    nondeg = sum(1 for s in steps if not s.degenerate)
    data = {
        "formula": formula,
        "initial_ideal": degen,
        "deletion_sequence": [{"edge": f"e{s.edge}", "degenerate": s.degenerate} for s in steps],
        "nondegenerate_steps": nondeg,
    }
    lines = [f"height (formula)       {formula}", f"height (initial ideal) {degen}",
             "deletion sequence:      " + (" ".join(
                 f"e{s.edge}{'(degenerate)' if s.degenerate else ''}" for s in steps) or "(none)"),
             f"nondegenerate steps    {nondeg}"]
    _emit(args, data, lines)
    return 0 if formula == degen == nondeg else EXIT_FAIL


def cmd_chroma(args, g: Graph) -> int:
    if args.search:
        cert = chromatic.order_search(g, args.search, args.seed)
    else:
        cert = chromatic.chromatic_certificate(g, _order(args, g, lex(g.q)))
    data = cert.to_dict(g.names)
    short = chromatic.principal_shortcut(g)
    data["principal_shortcut"] = short
    lines = [
        f"order            {data['order']}",
        "init generators  " + (", ".join(data["init_generators"]) or "(none)"),
        "cover            {" + ", ".join(data["cover"]) + "}",
        f"bound |E|+3      {cert.bound}",
        f"exact chi        {cert.exact_chi}",
        f"Delta+1          {cert.delta_plus_one}",
    ]
    if short is not None:
        lines.append(f"principal bound  {short}")
    _emit(args, data, lines)
    return 0


def cmd_graver(args, g: Graph) -> int:
    G = toric.graver_basis(g, method=args.method)
    rows = []
    for w in G:
        row = {"binomial": format_binomial(w.binomial, g.names),
               "walk_edges": {f"e{k}": m for k, m in w.walk_edges}}
        if args.walks:
            row["walk"] = w.walk(g)
        rows.append(row)
    lines = []
    for r in rows:
        s = r["binomial"]
        if "walk" in r:
            s += "   walk " + "-".join(map(str, r["walk"]))
        lines.append(s)
    _emit(args, {"method": args.method, "elements": rows}, lines or ["(empty)"])
    return 0


def cmd_verify(args, g: Graph | None) -> int:
    if args.exhaustive:
        graphs = corpus.connected_graphs_upto(args.exhaustive)
    else:
        graphs = [g]
    tally = verify.Tally()
    for h in graphs:
        verify.check_graph(h, tally, orders=args.orders, seed=args.seed)
    rows = tally.rows()
    data = {
        "graphs": len(graphs),
        "properties": {p: {"checked": n, "failed": f} for p, n, f in rows},
        "failures": {p: v for p, v in tally.failures.items() if v},
        "ok": tally.ok,
    }
    lines = [f"{len(graphs)} graph(s)", f"{'property':<24}{'checked':>9}{'failed':>8}  result"]
    for p, n, f in rows:
        lines.append(f"{p:<24}{n:>9}{f:>8}  {'pass' if not f else 'FAIL'}")
    for p, v in tally.failures.items():
        for what in v[:5]:
            lines.append(f"  {p}: {what}")
    _emit(args, data, lines)
    return 0 if tally.ok else EXIT_FAIL


def cmd_export_m2(args, g: Graph) -> int:
    text = toric.export_m2(g)
    if args.format == "json":
        print(json.dumps({"m2": text}, indent=2))
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toricgraph", description="Toric ideals of graphs and what they certify.")
    ap.add_argument("--format", choices=("human", "json"), default="human")
    ap.add_argument("--seed", type=int, default=0, help="seed for random order streams")
    ap.add_argument("--max-edges", type=int, default=None, help="refuse graphs with more edges")
    ap.add_argument("--budget", type=int, default=DEFAULT_GENERATOR_BUDGET,
                    help="Groebner basis generator budget")
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_cmd(name: str, fn, help: str, order: bool = False) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("graph", help="graph file, or @name for a built-in example")
        if order:
            p.add_argument("--order", help="order spec, e.g. lex:e6,e3,... or ytop:e6+grevlex")
            p.add_argument("--partial", action="store_true",
                           help="complete a partial permutation by index order")
        p.set_defaults(func=fn)
        return p

    graph_cmd("ideal", cmd_ideal, "reduced Groebner basis of I_G under grevlex")
    graph_cmd("gb", cmd_gb, "reduced Groebner basis under a chosen order", order=True)
    p = graph_cmd("init", cmd_init, "minimal generators of the initial ideal", order=True)
    p.add_argument("--method", choices=("gb", "graver"), default="gb")
    p = graph_cmd("kmy", cmd_kmy, "KMY decomposition with respect to one edge", order=True)
    p.add_argument("--edge", required=True, help="edge id, e.g. e6")
    p = graph_cmd("height", cmd_height, "height two ways plus a deletion sequence")
    p.add_argument("--edges", help="comma-separated edges to delete first")
    p = graph_cmd("chroma", cmd_chroma, "chromatic-number certificate", order=True)
    p.add_argument("--search", type=int, default=0, metavar="N", help="search N lex orders")
    p = graph_cmd("graver", cmd_graver, "Graver basis (primitive binomials)")
    p.add_argument("--method", choices=("kernel", "lawrence"), default="kernel")
    p.add_argument("--walks", action="store_true", help="also print an explicit closed walk")
    graph_cmd("export-m2", cmd_export_m2, "Macaulay2 script for offline cross-checks")

    p = sub.add_parser("verify", help="run the property suite")
    p.add_argument("graph", nargs="?", help="graph file or @name")
    p.add_argument("--exhaustive", type=int, metavar="P", help="all connected graphs on <= P vertices")
    p.add_argument("--orders", type=int, default=5, help="lex orders per graph for the chromatic bound")
    p.set_defaults(func=cmd_verify)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    if args.budget < 1:
        print("toricgraph: error: --budget must be positive", file=sys.stderr)
        return EXIT_USAGE
    saved = set_generator_budget(args.budget)
    try:
        if args.command == "verify" and args.exhaustive:
            g = None
        elif args.command == "verify" and not args.graph:
            raise UsageError("verify needs a graph or --exhaustive P")
        else:
            g = load_graph(args.graph, args.max_edges)
        return args.func(args, g)
    except UsageError as exc:
        print(f"toricgraph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapabilityError, gr.CapabilityError) as exc:
        print(f"toricgraph: capability limit: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (AssertionError, ValueError) as exc:
        print(f"toricgraph: check failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        set_generator_budget(saved)


if __name__ == "__main__":
    sys.exit(main())
