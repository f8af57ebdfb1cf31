"""argparse front end: classify graph6 streams, dump matchings, compute
structural properties, generate small orders, run lift searches."""

from __future__ import annotations

import argparse
import os
import sys

from .canon import automorphisms, transitivity
from .connectivity import cyclic_edge_connectivity, edge_connectivity, is_essentially_4ec
from .constructions import NAMED_GRAPHS, named
from .generate import generate
from .graphs import (
    Graph6Error,
    GraphError,
    bipartition,
    Bipartition,
    girth,
    parse_graph6,
    write_graph6,
)
from .matchings import (
    Budget,
    classify,
    dump_matchings,
    report_tsv_line,
    summary_tsv_header,
)
from .voltage import base_of, enumerate_lifts, make_group, theta_graph

EXIT_OK = 0
EXIT_INPUT = 2  # unreadable input
EXIT_INVALID = 3  # invalid graph under --strict, or invalid parameters


def _default_workers() -> int:
    env = os.environ.get("CUBIC2F_WORKERS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _read_graphs(paths, strict):
    """Yield (lineno, Graph) from files or stdin; malformed lines are
    warnings unless strict (then Graph6Error propagates)."""
    streams = [(p, open(p)) for p in paths] if paths else [("<stdin>", sys.stdin)]
    for name, fh in streams:
        try:
            for i, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    yield f"{name}:{i}", parse_graph6(line)
                except (Graph6Error, GraphError) as e:
                    if strict:
                        raise
                    print(f"warning: {name}:{i}: skipped ({e})", file=sys.stderr)
        finally:
            if fh is not sys.stdin:
                fh.close()


def _graph_ok(g, args) -> str | None:
    """Filter reason, or None when the graph passes."""
    if not g.is_cubic:
        return "not cubic"
    if not g.is_connected():
        return "not connected"
    if args.min_girth and girth(g) < args.min_girth:
        return f"girth below {args.min_girth}"
    if args.require_bipartite and not isinstance(bipartition(g), Bipartition):
        return "not bipartite"
    if args.require_e4ec and not is_essentially_4ec(g):
        return "not essentially 4-edge-connected"
    return None


def cmd_classify(args) -> int:
    budget = Budget(max_seconds=args.max_seconds, max_matchings=args.max_matchings)
    if args.format == "tsv":
        print(summary_tsv_header())
    found_p2fi = []
    for where, g in _read_graphs(args.input, args.strict):
        reason = _graph_ok(g, args)
        if reason is not None:
            if args.strict:
                print(f"error: {where}: {reason}", file=sys.stderr)
                return EXIT_INVALID
            print(f"warning: {where}: skipped ({reason})", file=sys.stderr)
            continue
        r = classify(
            g,
            mode=args.mode,
            budget=budget,
            seed=args.seed,
            workers=args.workers,
            prune=not args.full_types,
        )
        if args.format == "json":
            print(r.to_json_line())
        else:
            print(report_tsv_line(g, r))
        if r.verdict_p2fi:
            found_p2fi.append((r.graph6, is_essentially_4ec(g)))
        if args.dump_matchings:
            n = dump_matchings(g, sys.stdout)
            print(f"# {n} perfect matchings for {r.graph6}", file=sys.stderr)
    for g6, e4ec in found_p2fi:
        tag = "essentially-4ec" if e4ec else "has nontrivial 3-cut"
        print(f"# p2fi: {g6} ({tag})", file=sys.stderr)
    print(f"# total p2fi graphs: {len(found_p2fi)}", file=sys.stderr)
    return EXIT_OK


def cmd_props(args) -> int:
    print(
        "\t".join(
            ["graph6", "n", "girth", "bipartite", "lambda", "cec", "e4ec", "aut", "vt", "et", "semisym"]
        )
    )
    for _where, g in _read_graphs(args.input, args.strict):
        gi = girth(g)
        cec = cyclic_edge_connectivity(g) if g.is_connected() else None
        info = automorphisms(g)
        tr = transitivity(g)
        print(
            "\t".join(
                [
                    write_graph6(g),
                    str(g.n),
                    str(int(gi)) if gi != float("inf") else "inf",
                    "1" if isinstance(bipartition(g), Bipartition) else "0",
                    str(edge_connectivity(g)) if g.n >= 2 else "-",
                    str(cec) if cec is not None else "undef",
                    "1" if g.is_cubic and g.is_connected() and is_essentially_4ec(g) else "0",
                    str(info.group_order),
                    "1" if tr["vertex_transitive"] else "0",
                    "1" if tr["edge_transitive"] else "0",
                    "1" if tr["semisymmetric"] else "0",
                ]
            )
        )
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.n % 2 == 1 or args.n < 6:
        print("error: n must be even and >= 6", file=sys.stderr)
        return EXIT_INVALID
    if args.count_only:
        print(generate(args.n))
    else:
        count = generate(args.n, lambda g: print(write_graph6(g)))
        print(f"# {count} graphs", file=sys.stderr)
    return EXIT_OK


def cmd_lift(args) -> int:
    if args.base == "theta":
        base = theta_graph()
    elif args.base in NAMED_GRAPHS:
        base = base_of(named(args.base))
    else:
        print(f"error: unknown base {args.base!r} (theta or {', '.join(NAMED_GRAPHS)})", file=sys.stderr)
        return EXIT_INVALID
    try:
        group = make_group(args.group)
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    results = enumerate_lifts(base, group, min_girth=args.min_girth, max_results=args.max_results)
    for g in results:
        print(write_graph6(g))
    print(f"# {len(results)} lifts", file=sys.stderr)
    return EXIT_OK


def cmd_named(args) -> int:
    try:
        print(write_graph6(named(args.name)))
    except GraphError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


def cmd_matchings(args) -> int:
    for _where, g in _read_graphs(args.input, args.strict):
        n = dump_matchings(g, sys.stdout)
        print(f"# {n} perfect matchings", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cubic2f", description=__doc__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    def add_input(p):
        p.add_argument("input", nargs="*", help="graph6 files (default: stdin)")
        p.add_argument("--strict", action="store_true", help="fail on malformed/filtered input")
        p.add_argument("--min-girth", type=int, default=0, dest="min_girth")
        p.add_argument("--require-bipartite", action="store_true", dest="require_bipartite")
        p.add_argument("--require-e4ec", action="store_true", dest="require_e4ec")

    p = sub.add_parser("classify", help="p2fi/2FI/2FH verdicts for graph6 input")
    add_input(p)
    p.add_argument("--mode", choices=["exhaustive", "heuristic", "hybrid"], default="hybrid")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-seconds", type=float, default=3600.0, dest="max_seconds")
    p.add_argument("--max-matchings", type=int, default=10**15, dest="max_matchings")
    p.add_argument("--format", choices=["json", "tsv"], default="json")
    p.add_argument("--full-types", action="store_true", dest="full_types",
                   help="keep enumerating after a parity refutation (full type multiset)")
    p.add_argument("--dump-matchings", action="store_true", dest="dump_matchings",
                   help="also write every perfect matching to stdout")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("props", help="structural properties per graph")
    add_input(p)
    p.set_defaults(func=cmd_props)

    p = sub.add_parser("gen", help="generate cubic bipartite graphs of girth >= 6")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--count-only", action="store_true", dest="count_only")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("lift", help="voltage lifts of a base graph")
    p.add_argument("--base", required=True, help="theta or a named graph")
    p.add_argument("--group", required=True, help='e.g. Z7, Z3^2, Z3xZ5, NA27, Heis3')
    p.add_argument("--min-girth", type=int, default=3, dest="min_girth")
    p.add_argument("--max-results", type=int, default=None, dest="max_results")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("named", help="emit a named graph as graph6")
    p.add_argument("name", choices=list(NAMED_GRAPHS))
    p.set_defaults(func=cmd_named)

    p = sub.add_parser("matchings", help="dump all perfect matchings")
    add_input(p)
    p.set_defaults(func=cmd_matchings)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (Graph6Error, GraphError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID
    except BrokenPipeError:
        return EXIT_OK
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
