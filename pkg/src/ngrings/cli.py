"""Command-line front end.

Exit status: 0 when a classification completed (whatever the verdict),
2 on malformed input, 3 when a search hit a size cap or its bound.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import edge_ring, hibi
from .errors import InputError, ResourceError
from .graphs import Graph, is_perfect, load_graph
from .stable_set import ORACLE_CAP, classify_stab, default_q_bound, trace_oracle_stab

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _emit(data: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=True, indent=2) + "\n")
        return
    for key in sorted(data):
        val = data[key]
        if isinstance(val, (dict, list)):
            val = json.dumps(val, sort_keys=True)
        out.write(f"{key:<20} {val}\n")


def _emit_rows(columns: list[str], rows: list[dict], fmt: str, out, extra: dict | None = None) -> None:
    if fmt == "json":
        payload = {"columns": columns, "rows": rows}
        if extra:
            payload.update(extra)
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
        return
    widths = {c: max(len(c), *(len(str(r[c])) for r in rows)) if rows else len(c) for c in columns}
    out.write("  ".join(c.ljust(widths[c]) for c in columns).rstrip() + "\n")
    for r in rows:
        out.write("  ".join(str(r[c]).ljust(widths[c]) for c in columns).rstrip() + "\n")
    if extra:
        for key in sorted(extra):
            out.write(f"# {key}: {json.dumps(extra[key], sort_keys=True)}\n")


def cmd_edge_classify(args, out) -> int:
    t = edge_ring.MultipartiteType.parse(args.type)
    _emit(edge_ring.classify_nearly_gorenstein(t).to_json(), args.format, out)
    return EXIT_OK


def cmd_edge_oracle(args, out) -> int:
    t = edge_ring.MultipartiteType.parse(args.type)
    verdict = edge_ring.oracle_verdict(t, args.degree_bound)
    data = verdict.to_json()
    if t.n >= 3:
        data["trace_empty"] = not verdict.certificate["covered"]
    closed = edge_ring.classify_nearly_gorenstein(t)
    data["closed_form_agrees"] = closed.nearly_gorenstein == verdict.nearly_gorenstein
    _emit(data, args.format, out)
    return EXIT_OK


def cmd_stab_classify(args, out) -> int:
    g = load_graph(args.graph)
    _emit(classify_stab(g, assume_perfect=args.assume_perfect).to_json(), args.format, out)
    return EXIT_OK


def cmd_stab_oracle(args, out) -> int:
    g = load_graph(args.graph)
    verdict = classify_stab(g, assume_perfect=args.assume_perfect)
    result = trace_oracle_stab(g, args.degree_bound)
    data = verdict.to_json()
    data["certificate"] = result.certificate()
    data["oracle_nearly_gorenstein"] = result.contains_m
    data["closed_form_agrees"] = result.contains_m == verdict.nearly_gorenstein
    data["bounds"] = {"q_bound": result.bound, "frontier_window": 2, "frontier_stable": result.frontier_stable}
    _emit(data, args.format, out)
    return EXIT_OK


def cmd_hibi_check(args, out) -> int:
    p = hibi.load_poset(args.poset)
    comps = []
    for c in hibi.components(p):
        pure, rank = hibi.is_pure_component(c)
        comps.append({"elements": list(c.elements), "pure": pure, "rank": rank})
    data = {
        "size": p.size,
        "components": comps,
        "gorenstein": hibi.hibi_gorenstein(p),
        "nearly_gorenstein": hibi.hibi_nearly_gorenstein(p),
    }
    _emit(data, args.format, out)
    return EXIT_OK


def edge_sweep_rows(max_d: int, degree_bound: int | None = None) -> tuple[list[dict], dict]:
    rows, disagreements = [], {}
    for t in edge_ring.multipartite_types(max_d):
        closed = edge_ring.classify_nearly_gorenstein(t)
        oracle = edge_ring.oracle_verdict(t, degree_bound)
        agree = closed.nearly_gorenstein == oracle.nearly_gorenstein and closed.gorenstein == oracle.gorenstein
        stable = True if t.n == 2 else oracle.bounds["frontier_stable"]
        rows.append(
            {
                "type": t.label(),
                "gorenstein": closed.gorenstein,
                "nearly_gorenstein": closed.nearly_gorenstein,
                "rule": closed.rule,
                "oracle_gorenstein": oracle.gorenstein,
                "oracle_nearly_gorenstein": oracle.nearly_gorenstein,
                "route": oracle.certificate["route"],
                "trace_empty": "-" if t.n == 2 else not oracle.certificate["covered"],
                "frontier_stable": stable,
                "agreement": "agree" if agree else "disagree",
            }
        )
        if not agree:
            disagreements[t.label()] = {"closed_form": closed.to_json(), "oracle": oracle.to_json()}
    return rows, disagreements


def stab_sweep_graphs(max_n: int):
    """One graph per isomorphism class, 1 <= n <= max_n (graph atlas order)."""
    import networkx as nx

    for h in nx.graph_atlas_g():
        if 1 <= h.number_of_nodes() <= max_n:
            yield Graph.on(h.number_of_nodes(), [(u + 1, v + 1) for u, v in h.edges()])


def stab_sweep_rows(max_n: int, q_bound: int | None = None) -> tuple[list[dict], dict]:
    if max_n > ORACLE_CAP:
        raise ResourceError(f"the stable-set oracle sweep is capped at {ORACLE_CAP} vertices", cap=ORACLE_CAP)
    rows, disagreements = [], {}
    for g in stab_sweep_graphs(max_n):
        if not is_perfect(g):
            continue
        verdict = classify_stab(g)
        result = trace_oracle_stab(g, q_bound)
        agree = verdict.nearly_gorenstein == result.contains_m
        rows.append(
            {
                "n": g.n,
                "edges": " ".join(f"{i}-{j}" for i, j in sorted(g.edges)) or "-",
                "deltas": ",".join(str(c.delta) for c in verdict.components),
                "gorenstein": verdict.gorenstein,
                "nearly_gorenstein": verdict.nearly_gorenstein,
                "oracle_nearly_gorenstein": result.contains_m,
                "q_bound": result.bound,
                "frontier_stable": result.frontier_stable,
                "agreement": "agree" if agree else "disagree",
            }
        )
        if not agree:
            disagreements[rows[-1]["edges"] + f" (n={g.n})"] = {
                "closed_form": verdict.to_json(),
                "oracle": result.certificate(),
            }
    return rows, disagreements


def cmd_sweep(args, out) -> int:
    if args.stab:
        rows, dis = stab_sweep_rows(args.max_n, args.degree_bound)
    else:
        rows, dis = edge_sweep_rows(args.max_d, args.degree_bound)
    columns = list(rows[0]) if rows else ["agreement"]
    extra = {"disagreements": dis} if dis else None
    _emit_rows(columns, rows, args.format, out, extra)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ngrings",
        description="Gorenstein and nearly Gorenstein tests for complete multipartite edge rings "
        "and stable set rings of perfect graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        g = p.add_mutually_exclusive_group()
        g.add_argument("--json", dest="format", action="store_const", const="json")
        g.add_argument("--table", dest="format", action="store_const", const="table")

    def positive(text: str) -> int:
        val = int(text)
        if val <= 0:
            raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
        return val

    p = sub.add_parser("edge-classify", help="closed-form verdict for K_{r_1,...,r_n}")
    p.add_argument("type", help="comma-separated part sizes, e.g. 2,2,3")
    fmt(p)
    p.set_defaults(func=cmd_edge_classify, default_format="json")

    p = sub.add_parser("edge-oracle", help="brute-force trace verdict for K_{r_1,...,r_n}")
    p.add_argument("type")
    p.add_argument("--degree-bound", type=positive, default=None, help="default 2d+4")
    fmt(p)
    p.set_defaults(func=cmd_edge_oracle, default_format="json")

    for name, func, help_ in (
        ("stab-classify", cmd_stab_classify, "closed-form verdict for the stable set ring of a graph file"),
        ("stab-oracle", cmd_stab_oracle, "brute-force trace verdict for the stable set ring"),
    ):
        p = sub.add_parser(name, help=help_)
        p.add_argument("graph", help="edge-list text file or JSON {n, edges}")
        p.add_argument("--assume-perfect", action="store_true")
        if name == "stab-oracle":
            p.add_argument("--degree-bound", type=positive, default=None, help="t-degree bound, default 2*delta+4")
        fmt(p)
        p.set_defaults(func=func, default_format="json")

    p = sub.add_parser("hibi-check", help="nearly Gorenstein criterion for the Hibi ring of a poset file")
    p.add_argument("poset", help='JSON {"size": int, "relations": [[a, b], ...]}')
    fmt(p)
    p.set_defaults(func=cmd_hibi_check, default_format="json")

    p = sub.add_parser("sweep", help="closed form vs oracle over all small cases")
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--edge", action="store_true", help="all multipartite types with d <= --max-d (default)")
    kind.add_argument("--stab", action="store_true", help="all perfect graphs with n <= --max-n, up to isomorphism")
    p.add_argument("--max-d", type=positive, default=7)
    p.add_argument("--max-n", type=positive, default=5)
    p.add_argument("--degree-bound", type=positive, default=None)
    fmt(p)
    p.set_defaults(func=cmd_sweep, default_format="table")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = args.default_format
    try:
        return args.func(args, out)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceError as exc:
        print(f"resource error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
