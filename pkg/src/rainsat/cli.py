"""Command-line surface: every capability behind one JSON-reporting tool.

Exit codes: 0 for expected/positive verdicts, 1 for negative verdicts
(e.g. a saturation miss or no coloring found), 2 for usage errors, 3 for
budget exhaustion. Reports go to standard output as a single JSON object;
with a fixed seed they are byte-identical across runs apart from the
timestamp and timing fields.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import constructions as cons
from .cache import ENV_VAR, cache_lookup_or_run, cache_path_from_env
from .coloring import find_rainbow_copy, is_proper
from .formats import (
    FormatError,
    decode_coloring,
    encode_bitflip_edges,
    decode_edge_list,
    decode_graph6,
    encode_coloring,
    encode_edge_list,
    encode_graph6,
    to_dot,
)
from .graph import Graph
from .hypercube import bitflip_coloring, build_folded_hypercube, extend_tbfrc, find_tbfrc, verify_unique_coloring
from .patterns import Pattern
from .saturation import INCONCLUSIVE, MISSED_EDGE, NOT_COLORABLE, SATURATED, audit_structure, check_saturation, rsat_exact
from .solver import (
    BUDGET_EXCEEDED,
    FOUND,
    NONE_EXISTS,
    Budget,
    enumerate_rainbow_free_colorings,
    find_rainbow_free_coloring,
)

USAGE_ERROR = 2
BUDGET_ERROR = 3


class UsageError(ValueError):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainsat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, graph: bool = True, pattern: bool = True) -> None:
        if graph:
            p.add_argument("--graph", help="graph file (graph6 line or edge-list text)")
            p.add_argument("--construct", help='construction spec, e.g. "k4:n=10"')
        if pattern:
            p.add_argument("--pattern", help="K<r>, P<k>, C<k>, or a graph file")
        p.add_argument("--budget-ms", type=float, default=None)
        p.add_argument("--budget-nodes", type=int, default=None)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cache", default=None, help=f"JSON-lines cache path (env {ENV_VAR})")
        p.add_argument("--format", default="json", choices=["g6", "edges", "dot", "json"])
        p.add_argument("--output", default=None, help="also write the formatted graph to this file")

    p = sub.add_parser("construct", help="build a family instance")
    p.add_argument("--family", choices=["k4", "kr", "path", "p5", "cycle"])
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--spec", help='construction spec, e.g. "kr:r=4,n=31"')
    common(p, graph=False, pattern=False)

    for name in ("check-coloring", "find-coloring", "enumerate-colorings", "check-saturation", "audit"):
        p = sub.add_parser(name)
        common(p)
        if name == "check-coloring":
            p.add_argument("--coloring", required=True, help='coloring file ("u v color" lines)')
        if name == "enumerate-colorings":
            p.add_argument("--collect-limit", type=int, default=64)
        if name == "audit":
            p.add_argument("--extension", action="store_true", help="run the join-extension audit")
            p.add_argument("--r", type=int, help="clique size for the extension audit")
            p.add_argument("--trials", type=int, default=100)

    p = sub.add_parser("rsat")
    p.add_argument("--n", type=int, required=True)
    common(p, graph=False)
    p.add_argument("--allow-large", action="store_true")

    p = sub.add_parser("hypercube-unique")
    p.add_argument("--w", type=int, required=True)
    common(p, graph=False, pattern=False)

    p = sub.add_parser("tbfrc")
    p.add_argument("--w", type=int, required=True)
    common(p, graph=False, pattern=False)

    p = sub.add_parser("greedy-cycle")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, default=1)
    common(p, graph=False, pattern=False)

    p = sub.add_parser("closed-form")
    p.add_argument("--query", required=True)
    common(p, graph=False, pattern=False)
    return parser


def _load_graph_file(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("n="):
        return decode_edge_list(text)
    return decode_graph6(stripped.splitlines()[0])


def _resolve_graph(args) -> tuple[Graph, tuple[int, ...] | None, dict | None]:
    if getattr(args, "construct", None):
        built = cons.ConstructionSpec.parse(args.construct).build()
        return built.graph, built.coloring, built.labels
    if getattr(args, "graph", None):
        return _load_graph_file(args.graph), None, None
    raise UsageError("one of --graph or --construct is required")


def _resolve_pattern(args) -> Pattern:
    text = getattr(args, "pattern", None)
    if not text:
        raise UsageError("--pattern is required")
    try:
        return Pattern.parse(text)
    except ValueError:
        if os.path.exists(text):
            return Pattern.general(_load_graph_file(text))
        raise UsageError(f"cannot parse pattern {text!r} and no such file exists")


def _budget(args) -> Budget | None:
    if args.budget_ms is None and args.budget_nodes is None:
        return None
    if (args.budget_ms is not None and args.budget_ms <= 0) or (
        args.budget_nodes is not None and args.budget_nodes <= 0
    ):
        raise UsageError("budgets must be positive")
    return Budget(max_nodes=args.budget_nodes, max_ms=args.budget_ms)


def _config_block(args) -> dict:
    return {
        "seed": getattr(args, "seed", 0),
        "rng": "random.Random (Mersenne Twister)",
        "budget": {"max_nodes": getattr(args, "budget_nodes", None), "max_ms": getattr(args, "budget_ms", None)},
        "jobs": getattr(args, "jobs", 1),
    }


def _graph_payload(g: Graph, fmt: str, coloring=None) -> dict:
    payload = {"n": g.n, "m": g.m}
    if fmt in ("g6", "json"):
        payload["graph6"] = encode_graph6(g)
    if fmt == "edges":
        payload["edge_list"] = encode_edge_list(g)
    if fmt == "dot":
        payload["dot"] = to_dot(g, coloring)
    return payload


def _formatted_text(g: Graph, fmt: str, coloring=None) -> str:
    if fmt == "g6":
        return encode_graph6(g) + "\n"
    if fmt == "edges":
        return encode_edge_list(g)
    if fmt == "dot":
        return to_dot(g, coloring)
    return json.dumps(_graph_payload(g, "json")) + "\n"


def run_command(argv: list[str]) -> tuple[int, dict]:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit:
        return USAGE_ERROR, {"error": "usage", "argv": argv}
    try:
        return _dispatch(args)
    except (UsageError, FormatError, ValueError) as exc:
        return USAGE_ERROR, {"error": str(exc)}


def _dispatch(args) -> tuple[int, dict]:
    report: dict = {"command": args.command, "config": _config_block(args), "timestamp": time.time()}
    cache_path = getattr(args, "cache", None) or cache_path_from_env()

    if args.command == "construct":
        spec = cons.ConstructionSpec.parse(args.spec) if args.spec else _spec_from_flags(args)
        built = spec.build()
        fmt = args.format
        report.update(
            {
                "spec": str(spec),
                "edge_count": built.graph.m,
                "closed_form_edge_count": spec.edge_count(),
                "labels": _label_json(built.labels),
                **_graph_payload(built.graph, fmt, built.coloring),
            }
        )
        if built.coloring is not None:
            report["coloring"] = encode_coloring(built.graph, built.coloring)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(_formatted_text(built.graph, fmt, built.coloring))
        return 0, report

    if args.command == "check-coloring":
        g, attached, _ = _resolve_graph(args)
        pat = _resolve_pattern(args)
        if args.coloring == "attached":
            if attached is None:
                raise UsageError("construction carries no attached coloring")
            colors = attached
        else:
            with open(args.coloring, "r", encoding="utf-8") as fh:
                colors = decode_coloring(g, fh.read())
        proper = is_proper(g, colors)
        copy = find_rainbow_copy(g, colors, pat) if proper else None
        report.update(
            {
                "proper": proper,
                "rainbow_copy": list(copy.vertices) if copy else None,
                "rainbow_free": proper and copy is None,
            }
        )
        return (0 if proper and copy is None else 1), report

    if args.command == "find-coloring":
        g, _, _ = _resolve_graph(args)
        pat = _resolve_pattern(args)
        budget = _budget(args)

        def runner():
            out = find_rainbow_free_coloring(g, pat, budget)
            report["search"] = out.to_json()
            return out.verdict, out.coloring

        verdict, witness, hit = cache_lookup_or_run(cache_path, g, pat, "find-coloring", budget, runner)
        report.update({"verdict": verdict, "cache_hit": hit})
        if witness is not None:
            report["coloring"] = encode_coloring(g, witness)
        code = {FOUND: 0, NONE_EXISTS: 1, BUDGET_EXCEEDED: BUDGET_ERROR}[verdict]
        return code, report

    if args.command == "enumerate-colorings":
        g, _, _ = _resolve_graph(args)
        pat = _resolve_pattern(args)
        res = enumerate_rainbow_free_colorings(g, pat, _budget(args), collect_limit=args.collect_limit)
        report.update(res.to_json())
        return (0 if res.exhaustive else BUDGET_ERROR), report

    if args.command == "check-saturation":
        g, _, _ = _resolve_graph(args)
        pat = _resolve_pattern(args)
        budget = _budget(args)

        def runner():
            rep = check_saturation(g, pat, budget, jobs=args.jobs)
            report["saturation"] = rep.to_json()
            witness = rep.condition1.coloring if rep.verdict == SATURATED else None
            return rep.verdict, witness

        verdict, _, hit = cache_lookup_or_run(cache_path, g, pat, "check-saturation", budget, runner)
        report.update({"verdict": verdict, "cache_hit": hit})
        code = {SATURATED: 0, NOT_COLORABLE: 1, MISSED_EDGE: 1, INCONCLUSIVE: BUDGET_ERROR}[verdict]
        return code, report

    if args.command == "rsat":
        pat = _resolve_pattern(args)
        res = rsat_exact(args.n, pat, _budget(args), allow_large=args.allow_large, jobs=args.jobs)
        report.update(res.to_json())
        return (0 if res.value is not None and res.exhaustive else BUDGET_ERROR), report

    if args.command == "audit":
        if args.extension:
            if not args.r:
                raise UsageError("--extension needs --r")
            ok = cons.audit_clique_extension(args.r, args.trials, args.seed)
            report.update({"extension_audit": ok, "r": args.r, "trials": args.trials})
            return (0 if ok else 1), report
        g, _, _ = _resolve_graph(args)
        pat = _resolve_pattern(args)
        violations = audit_structure(g, pat)
        report["violations"] = [v.to_json() for v in violations]
        return (0 if not violations else 1), report

    if args.command == "hypercube-unique":
        res = verify_unique_coloring(args.w, _budget(args))
        report.update(res.to_json())
        if not res.exhaustive:
            return BUDGET_ERROR, report
        return (0 if res.count == 1 else 1), report

    if args.command == "tbfrc":
        f = build_folded_hypercube(args.w)
        colors = bitflip_coloring(f)
        t = find_tbfrc(f, colors)
        if t is None:
            report["tbfrc"] = None
            return 1, report
        report["tbfrc"] = {"vertices": list(t.vertices), "bits": list(t.bits), "colors": list(t.colors)}
        report["bitflip_edges"] = encode_bitflip_edges(f.graph, f.bitflip)
        if args.w >= 5:
            ext = extend_tbfrc(f, t)
            report["extension_matches_bitflip"] = _same_up_to_relabel(ext, colors)
        return 0, report

    if args.command == "greedy-cycle":
        built = cons.construct_cycle_family(args.k, args.n)
        g = built.graph
        rng = random.Random(args.seed)
        failures = 0
        last = None
        for _ in range(args.trials):
            y1, y2 = built.labels["y_labels"][0], built.labels["y_labels"][1]
            gp = g.with_edge(y1, y2)
            colors = cons.random_proper_coloring(gp, rng)
            cyc = cons.greedy_rainbow_cycle(gp, colors, args.k, built.labels["x_labels"], built.labels["y_labels"])
            if cyc is None:
                failures += 1
            last = cyc
        report.update({"trials": args.trials, "failures": failures, "cycle": list(last) if last else None})
        return (0 if failures == 0 else 1), report

    if args.command == "closed-form":
        value = cons.closed_forms(args.query)
        report.update(
            {
                "query": args.query,
                "value": {"numerator": value.numerator, "denominator": value.denominator},
                "value_str": str(value),
            }
        )
        return 0, report

    raise UsageError(f"unknown command {args.command!r}")


def _spec_from_flags(args) -> cons.ConstructionSpec:
    if not args.family:
        raise UsageError("construct needs --spec or --family")
    p: dict[str, int] = {}
    for key in ("n", "r", "k"):
        val = getattr(args, key)
        if val is not None:
            p[key] = val
    want = cons.ConstructionSpec._FAMILIES[args.family]
    if tuple(sorted(p)) != tuple(sorted(want)):
        raise UsageError(f"family {args.family!r} takes parameters {want}")
    return cons.ConstructionSpec(args.family, p)


def _label_json(labels: dict) -> dict:
    out = {}
    for k, v in labels.items():
        if isinstance(v, tuple):
            out[k] = [list(x) if isinstance(x, tuple) else x for x in v]
        else:
            out[k] = v
    return out


def _same_up_to_relabel(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    from .coloring import canonicalize_colors

    return canonicalize_colors(a) == canonicalize_colors(b)


def main() -> None:
    code, report = run_command(sys.argv[1:])
    print(json.dumps(report, indent=2, sort_keys=True))
    sys.exit(code)


if __name__ == "__main__":
    main()
