"""Command-line front end.

Graphs are named with a small spec language: a family name with optional
comma-separated integer parameters after a colon ("path:4", "tadpole:3,1",
"bull"), "rook:m,n" for the product of two complete graphs, "SPEC*SPEC"
for an arbitrary product of two families, or "@file.json" to load a graph
serialized by `graph --format json`.

Divisors are comma-separated chip counts in vertex order ("2,0,-1,0").

Exit status: 0 on success (including negative mathematical answers like
"no sourceless orientation"), 1 when a verify suite fails, 2 on invalid
input, 3 when a search gives up on its candidate or time budget.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .brambles import BrambleFamily, classify, order, tree_product_bramble
from .divisor import Divisor, canonical_divisor
from .errors import BudgetExceededError, ValidationError
from .gonality import SearchOptions, gonality, product_report
from .multigraph import Multigraph, cartesian_product
from .orientations import divisor_from_orientation, find_sourceless_rep
from .rank import rank, riemann_roch_residual
from .reduction import dhar_burn, q_reduce
from .verify import SUITE_NAMES, run_all, run_suite

__all__ = ["main", "build_parser", "parse_graph", "parse_divisor"]


def parse_graph(text: str) -> Multigraph:
    """Resolve a graph spec (see module docstring) to a multigraph."""
    text = text.strip()
    if text.startswith("@") or text.endswith(".json"):
        path = text[1:] if text.startswith("@") else text
        try:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
            # accept both the bare serialization and our own `graph`
            # subcommand's summary, which nests it under "graph"
            if isinstance(obj, dict) and "graph" in obj and "n" not in obj:
                obj = obj["graph"]
            return Multigraph.from_json_obj(obj)
        except OSError as e:
            raise ValidationError(f"cannot read graph file: {e}") from None
        except (json.JSONDecodeError, KeyError, TypeError) as e:
            raise ValidationError(f"malformed graph file: {e}") from None
    if "*" in text:
        left, _, right = text.partition("*")
        return cartesian_product(parse_graph(left), parse_graph(right))
    spec = catalog.FamilySpec.parse(text)
    if spec.family == "rook":
        if len(spec.params) != 2:
            raise ValidationError("rook takes two parameters, e.g. rook:3,4")
        m, n = spec.params
        return cartesian_product(catalog.complete(m), catalog.complete(n))
    return catalog.make(spec)


def parse_divisor(text: str, g: Multigraph) -> Divisor:
    try:
        chips = tuple(int(c) for c in text.split(","))
    except ValueError:
        raise ValidationError(
            f"divisor {text!r} must be comma-separated integers"
        ) from None
    if len(chips) != g.n:
        raise ValidationError(
            f"divisor has {len(chips)} entries, graph has {g.n} vertices"
        )
    return Divisor(chips)


def _emit(obj: dict, text_lines: list[str], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _search_options(args) -> SearchOptions:
    return SearchOptions(
        degree_cap=args.degree_cap,
        threads=args.threads,
        time_budget_s=args.time_budget_s,
        max_candidates=args.max_candidates,
    )


def _graph_from(args) -> Multigraph:
    # one graph from whichever of the three spellings was used
    given = [s for s in (args.graph, args.graph_opt, args.family) if s]
    if not given:
        raise ValidationError("name a graph (positional, --graph, or --family)")
    if len(given) > 1:
        raise ValidationError("give the graph exactly once")
    return parse_graph(given[0])


# ---------------------------------------------------------------------
# subcommand bodies


def _cmd_graph(args) -> int:
    g = _graph_from(args)
    if args.dot:
        print(g.to_dot())
        return 0
    obj = {
        "vertices": g.n,
        "edges": g.num_edges(),
        "genus": g.genus(),
        "simple": g.is_simple(),
        "tree": g.is_tree(),
        "valences": [g.valence(v) for v in range(g.n)],
        "canonical_divisor": list(canonical_divisor(g).chips),
        "graph": g.to_json_obj(),
    }
    _emit(
        obj,
        [
            f"vertices {g.n}, edges {g.num_edges()}, genus {g.genus()}",
            f"simple {g.is_simple()}, tree {g.is_tree()}",
            f"valences {[g.valence(v) for v in range(g.n)]}",
            f"canonical divisor {list(canonical_divisor(g).chips)}",
        ],
        args.format,
    )
    return 0


def _cmd_product(args) -> int:
    a, b = parse_graph(args.left), parse_graph(args.right)
    report = product_report(a, b, _search_options(args))
    obj = report.to_json_obj()
    if report.is_exact():
        lines = [
            f"replication bound {report.expected}",
            f"gonality {report.actual}",
            f"genus bound floor((g+3)/2) = {report.conjecture_bound}",
            f"bound minus gonality {report.gap_expected_minus_actual}",
            f"meets genus bound {report.equality_with_conjecture}",
        ]
    else:
        lo, hi = report.actual
        lines = [
            f"replication bound {report.expected}",
            f"gonality in [{lo}, {hi}] (search gave up within budget)",
            f"genus bound floor((g+3)/2) = {report.conjecture_bound}",
        ]
    _emit(obj, lines, args.format)
    return 0


def _cmd_burn(args) -> int:
    g = _graph_from(args)
    d = parse_divisor(args.divisor, g)
    report = dhar_burn(g, d, args.source)
    obj = {
        "source": report.source,
        "burned": sorted(report.burned),
        "unburned": sorted(report.unburned),
        "everything_burned": report.everything_burned(),
        "ignition_order": [list(step) for step in report.ignition_order],
    }
    _emit(
        obj,
        [
            f"burned {sorted(report.burned)}",
            f"unburned {sorted(report.unburned)}",
            "everything burned" if report.everything_burned()
            else f"{len(report.unburned)} vertex(es) survive",
        ],
        args.format,
    )
    return 0


def _cmd_reduce(args) -> int:
    g = _graph_from(args)
    d = parse_divisor(args.divisor, g)
    reduced = q_reduce(g, d, args.base)
    obj = {
        "base": args.base,
        "input": list(d.chips),
        "reduced": list(reduced.chips),
        "effective": reduced[args.base] >= 0,
    }
    _emit(
        obj,
        [
            f"reduced at {args.base}: {list(reduced.chips)}",
            f"class is {'effective' if reduced[args.base] >= 0 else 'not effective'}",
        ],
        args.format,
    )
    return 0


def _cmd_rank(args) -> int:
    g = _graph_from(args)
    d = parse_divisor(args.divisor, g)
    result = rank(g, d)
    obj = {
        "rank": result.rank,
        "degree": d.degree(),
        "obstruction": list(result.obstruction.chips)
        if result.obstruction is not None
        else None,
        "riemann_roch_residual": riemann_roch_residual(g, d),
    }
    lines = [f"rank {result.rank} (degree {d.degree()})"]
    if result.obstruction is not None:
        lines.append(f"failing effective divisor {list(result.obstruction.chips)}")
    _emit(obj, lines, args.format)
    return 0


def _cmd_gonality(args) -> int:
    g = _graph_from(args)
    cert = gonality(g, _search_options(args))
    obj = cert.to_json_obj()
    _emit(
        obj,
        [
            f"gonality {cert.gonality}",
            f"witness {list(cert.witness.chips)}",
            f"classes examined {[list(c) for c in cert.classes_examined]}",
        ],
        args.format,
    )
    return 0


def _cmd_orient(args) -> int:
    g = _graph_from(args)
    d = parse_divisor(args.divisor, g)
    o = find_sourceless_rep(g, d, max_edges=args.max_edges)
    if o is None:
        _emit(
            {"found": False},
            ["no sourceless partial orientation realizes this class"],
            args.format,
        )
        return 0
    realized = divisor_from_orientation(g, o)
    obj = {
        "found": True,
        "orientation": o.to_json_obj(),
        "divisor": list(realized.chips),
    }
    lines = ["sourceless partial orientation found:"]
    for u, v, fwd, back, flat in o.rows:
        lines.append(
            f"  {u}-{v}: {fwd} forward, {back} backward, {flat} unoriented"
        )
    lines.append(f"realizes divisor {list(realized.chips)}")
    _emit(obj, lines, args.format)
    return 0


def _cmd_bramble(args) -> int:
    if args.trees:
        t1, t2 = (parse_graph(s) for s in args.trees)
        g = cartesian_product(t1, t2)
        family = tree_product_bramble(t1, t2)
    else:
        if not args.element or args.graph is None:
            raise ValidationError("give a graph with -e elements, or --trees")
        g = parse_graph(args.graph)
        family = BrambleFamily.from_lists(
            [_parse_vertex_list(e) for e in args.element]
        )
    kind = classify(g, family)
    obj = {"classification": kind, "elements": len(family.elements)}
    lines = [f"classification: {kind}", f"elements: {len(family.elements)}"]
    if kind != "not_bramble":
        k = order(g, family)
        obj["order"] = k
        lines.append(f"order: {k}")
    _emit(obj, lines, args.format)
    return 0


def _parse_vertex_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",")]
    except ValueError:
        raise ValidationError(
            f"element {text!r} must be comma-separated vertex ids"
        ) from None


def _cmd_verify(args) -> int:
    if args.suite:
        reports = [
            run_suite(name, seed=args.seed, slow=args.slow,
                      threads=args.threads, time_budget_s=args.time_budget_s)
            for name in args.suite
        ]
    else:
        reports = run_all(seed=args.seed, slow=args.slow, threads=args.threads,
                          time_budget_s=args.time_budget_s)
    if args.format == "json":
        print(json.dumps([r.to_json_obj() for r in reports], sort_keys=True,
                         indent=2))
    else:
        for r in reports:
            print(r.to_text())
    return 0 if all(r.passed for r in reports) else 1


# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chipfire",
        description="chip-firing toolkit: burning, reduction, rank, "
        "gonality, orientations, brambles",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, graph=True, divisor=False, search=False):
        if graph:
            p.add_argument("graph", nargs="?", default=None,
                           help="graph spec, e.g. rook:3,4 or path:5")
            p.add_argument("--graph", dest="graph_opt", default=None,
                           help="graph spec or JSON file path")
            p.add_argument("--family", default=None,
                           help="alias for a catalog spec like chain:4")
        if divisor:
            p.add_argument("-D", "--divisor", required=True,
                           help="chip counts, e.g. 2,0,-1")
        if search:
            p.add_argument("--threads", type=int, default=1)
            p.add_argument("--degree-cap", type=int, default=None)
            p.add_argument("--time-budget-s", type=float, default=None)
            p.add_argument("--max-candidates", type=int, default=3_000_000)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("graph", help="summarize a graph spec")
    common(p)
    p.add_argument("--dot", action="store_true", help="emit graphviz instead")
    p.set_defaults(func=_cmd_graph)

    p = sub.add_parser("product", help="gonality report for a product")
    p.add_argument("left")
    p.add_argument("right")
    common(p, graph=False, search=True)
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("burn", help="run the burning pass from a source")
    common(p, divisor=True)
    p.add_argument("-q", "--source", type=int, required=True)
    p.set_defaults(func=_cmd_burn)

    p = sub.add_parser("reduce", help="reduced form of a divisor class")
    common(p, divisor=True)
    p.add_argument("-q", "--base", type=int, default=0)
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("rank", help="divisor rank with failing certificate")
    common(p, divisor=True)
    p.set_defaults(func=_cmd_rank)

    p = sub.add_parser("gonality", help="exhaustive gonality search")
    common(p, search=True)
    p.set_defaults(func=_cmd_gonality)

    p = sub.add_parser("orient", help="sourceless partial orientation search")
    common(p, divisor=True)
    p.add_argument("--max-edges", type=int, default=14)
    p.set_defaults(func=_cmd_orient)

    p = sub.add_parser("bramble", help="classify a family and take its order")
    p.add_argument("graph", nargs="?", default=None,
                   help="graph spec (omit with --trees)")
    p.add_argument("-e", "--element", action="append", default=[],
                   help="one element as comma-separated vertices; repeatable")
    p.add_argument("--trees", nargs=2, metavar=("T1", "T2"),
                   help="build the cross family on a product of two trees")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_bramble)

    p = sub.add_parser("verify", help="run named verification suites")
    p.add_argument("suite", nargs="*", metavar="SUITE",
                   help=f"any of: {', '.join(SUITE_NAMES)}; default is all")
    p.add_argument("--seed", type=int, default=20240901)
    p.add_argument("--slow", action="store_true",
                   help="include the long-running cases")
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--time-budget-s", type=float, default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=sys.stderr)
        if e.lower is not None and e.upper is not None:
            print(f"answer lies in [{e.lower}, {e.upper}]", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
