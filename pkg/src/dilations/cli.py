"""Command-line interface.

Subcommands: gen, dilate, power, invariant, keg, classify, berge, enumerate,
derive-nb, verify. Every run echoes its effective configuration; text and csv
output carry it as '#' comment lines, json embeds it in the document. Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 search budget
exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .berge import BergeWitness, search_berge_witness, verify_berge_witness
from .dilation import (DilationSpec, RankDeficitWarning, classify_dilation,
                       check_dilation_properties, dilate, generalized_power)
from .errors import SearchBudgetExceeded
from .families import (derive_g2nb_candidates, extremal_class_gamma1,
                       in_family_g1, in_family_g2b, in_family_g2nb,
                       is_generalized_corona, load_g2nb_candidates,
                       union_family_member)
from .graphs import (Graph, graph_from_family_string, parse_edge_list,
                     parse_graph6, to_edge_list, to_graph6)
from .harness import SUITES
from .hypergraphs import (Hypergraph, builtin_hypergraph, parse_hypergraph,
                          to_hypergraph_text)
from .invariants import (DEFAULT_NODE_CAP, domination_number, is_keg,
                         matching_number, transversal_number)
from .isomorphism import canonical_form, enumerate_connected

_INVARIANT_FNS = {"gamma": domination_number, "nu": matching_number,
                  "tau": transversal_number}


class _Output:
    def __init__(self, args):
        self.fmt = args.format
        self.no_timestamp = args.no_timestamp
        self.path = args.out
        self.lines: list[str] = []

    def header(self, command: str, config: dict):
        if self.fmt in ("text", "csv"):
            self.lines.append(f"# dilations {command} | config: "
                              + json.dumps(config, sort_keys=True))
            if not self.no_timestamp:
                self.lines.append("# generated: "
                                  + datetime.now(timezone.utc).isoformat())

    def emit(self, text: str):
        self.lines.append(text.rstrip("\n"))

    def emit_json(self, command: str, config: dict, result: dict):
        doc = {"command": command, "config": config, "result": result}
        self.lines.append(json.dumps(doc, indent=2, sort_keys=True))

    def flush(self):
        text = "\n".join(self.lines) + "\n"
        if self.path:
            Path(self.path).write_text(text)
        else:
            sys.stdout.write(text)


def _graph_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges()], "graph6": to_graph6(g)}


def _hypergraph_json(h: Hypergraph) -> dict:
    return {"m": h.m, "edges": h.edge_sets(), "rank": h.rank}


def _load_graph(args) -> Graph:
    if getattr(args, "family", None):
        return graph_from_family_string(args.family)
    if getattr(args, "graph", None):
        text = Path(args.graph).read_text()
        fmt = args.graph_format
        if fmt == "auto":
            stripped = next((ln for ln in text.splitlines()
                             if ln.strip() and not ln.lstrip().startswith("#")), "")
            fmt = "edge_list" if len(stripped.split()) == 2 else "graph6"
        return parse_graph6(text) if fmt == "graph6" else parse_edge_list(text)
    raise SystemExit2("one of --family or --graph is required")


def _load_hypergraph(spec: str) -> Hypergraph:
    if spec == "fano":
        return builtin_hypergraph("fano")
    return parse_hypergraph(Path(spec).read_text())


class SystemExit2(Exception):
    """Usage error carrying exit code 2."""


def _int_list(text: str) -> tuple[int, ...]:
    return tuple(int(p) for p in text.split(",") if p.strip())


def _build_spec(args, g: Graph) -> DilationSpec:
    if args.s_uniform is not None:
        s = (args.s_uniform,) * g.n
    elif args.s is not None:
        s = _int_list(args.s)
    else:
        raise SystemExit2("provide --s or --s-uniform")
    if args.a_uniform is not None:
        a = (args.a_uniform,) * g.edge_count
    elif args.a is not None:
        a = _int_list(args.a)
    else:
        raise SystemExit2("provide --a or --a-uniform")
    return DilationSpec(args.k, s, a)


def _add_graph_args(p):
    p.add_argument("--family", help="family spec string, e.g. 'cycle:5' or 'corona:cycle:3'")
    p.add_argument("--graph", help="path to a graph6 or edge-list file")
    p.add_argument("--graph-format", choices=["auto", "graph6", "edge_list"], default="auto")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dilations",
        description="Exact dilation constructions, domination/matching/transversal "
                    "certificates, family classification, and identity verification.")
    parser.add_argument("--version", action="version", version=f"dilations {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common.add_argument("--no-timestamp", action="store_true")
    common.add_argument("--out", help="write output to this path instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="emit a graph from a family spec")
    _add_graph_args(p)
    p.add_argument("--encoding", choices=["graph6", "edge_list"], default="graph6")

    p = sub.add_parser("dilate", parents=[common], help="build a dilation with its witness")
    _add_graph_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", help="comma-separated copy-block sizes per vertex")
    p.add_argument("--s-uniform", type=int)
    p.add_argument("--a", help="comma-separated additional-block sizes per edge")
    p.add_argument("--a-uniform", type=int)

    p = sub.add_parser("power", parents=[common], help="build the generalized power G^(k,s)")
    _add_graph_args(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--s", type=int, required=True)

    p = sub.add_parser("invariant", parents=[common],
                       help="compute gamma, nu, or tau with a certificate")
    _add_graph_args(p)
    p.add_argument("--hypergraph", help="hypergraph file path, or builtin name 'fano'")
    p.add_argument("--param", choices=["gamma", "nu", "tau"], required=True)
    p.add_argument("--mode", choices=["branch_and_bound", "exhaustive"],
                   default="branch_and_bound")

    p = sub.add_parser("keg", parents=[common],
                       help="test tau = nu with both certificates")
    _add_graph_args(p)

    p = sub.add_parser("classify", parents=[common],
                       help="classify a dilation, or a graph against the families")
    _add_graph_args(p)
    p.add_argument("--what", choices=["dilation", "families"], default="families")
    p.add_argument("--k", type=int)
    p.add_argument("--s", help="comma-separated copy-block sizes per vertex")
    p.add_argument("--s-uniform", type=int)
    p.add_argument("--a", help="comma-separated additional-block sizes per edge")
    p.add_argument("--a-uniform", type=int)

    p = sub.add_parser("berge", parents=[common], help="verify or search Berge witnesses")
    p.add_argument("action", choices=["verify", "search"])
    _add_graph_args(p)
    p.add_argument("--hypergraph", required=True,
                   help="hypergraph file path, or builtin name 'fano'")
    p.add_argument("--witness", help="witness JSON file (for verify)")

    p = sub.add_parser("enumerate", parents=[common],
                       help="list connected graphs up to isomorphism")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-degree", type=int)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--bipartite", action="store_true")
    grp.add_argument("--non-bipartite", action="store_true")

    p = sub.add_parser("derive-nb", parents=[common],
                       help="derive the non-bipartite min-degree-2 candidates")
    p.add_argument("--max-n", type=int, default=8)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    p.add_argument("--max-n", type=int)
    p.add_argument("--samples", type=int, default=1)
    return parser


def _cmd_gen(args, out: _Output):
    g = _load_graph(args)
    config = {"family": args.family, "graph": args.graph, "encoding": args.encoding}
    if args.format == "json":
        out.emit_json("gen", config, _graph_json(g))
        return 0
    out.header("gen", config)
    out.emit(to_graph6(g) if args.encoding == "graph6" else to_edge_list(g))
    return 0


def _dilation_result(g, h, w):
    report = check_dilation_properties(g, h, w)
    return {
        "hypergraph": _hypergraph_json(h),
        "witness": w.to_json(),
        "class": classify_dilation(h, w).value,
        "rank": h.rank,
        "declared_rank": w.declared_rank,
        "rank_attained": h.rank == w.declared_rank,
        "property_checks": {
            "two_supports_per_edge": report.two_supports_per_edge,
            "adjacency_preserved": report.adjacency_preserved,
            "disjointness_preserved": report.disjointness_preserved,
            "connectivity_preserved": report.connectivity_preserved,
        },
    }


def _cmd_dilate(args, out: _Output):
    g = _load_graph(args)
    spec = _build_spec(args, g)
    config = {"family": args.family, "graph": args.graph, "k": spec.k,
              "s": list(spec.s), "a": list(spec.a)}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficitWarning)
        h, w = dilate(g, spec)
    if args.format == "json":
        out.emit_json("dilate", config, _dilation_result(g, h, w))
        return 0
    out.header("dilate", config)
    out.emit(f"# class: {classify_dilation(h, w).value}, rank {h.rank} of declared {spec.k}")
    out.emit(to_hypergraph_text(h))
    return 0


def _cmd_power(args, out: _Output):
    g = _load_graph(args)
    config = {"family": args.family, "graph": args.graph, "k": args.k, "s": args.s}
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RankDeficitWarning)
        h, w = generalized_power(g, args.k, args.s)
    if args.format == "json":
        out.emit_json("power", config, _dilation_result(g, h, w))
        return 0
    out.header("power", config)
    out.emit(f"# class: {classify_dilation(h, w).value}, rank {h.rank}")
    out.emit(to_hypergraph_text(h))
    return 0


def _cmd_invariant(args, out: _Output):
    if args.hypergraph:
        target = _load_hypergraph(args.hypergraph)
        source = {"hypergraph": args.hypergraph}
    else:
        target = _load_graph(args)
        source = {"family": args.family, "graph": args.graph}
    config = {**source, "param": args.param, "mode": args.mode, "node_cap": args.node_cap}
    cert = _INVARIANT_FNS[args.param](target, mode=args.mode, node_cap=args.node_cap)
    if args.format == "json":
        out.emit_json("invariant", config, cert.to_json())
        return 0
    out.header("invariant", config)
    out.emit(f"{cert.parameter} = {cert.value}")
    return 0


def _cmd_keg(args, out: _Output):
    g = _load_graph(args)
    config = {"family": args.family, "graph": args.graph, "node_cap": args.node_cap}
    verdict = is_keg(g, node_cap=args.node_cap)
    if args.format == "json":
        out.emit_json("keg", config, verdict.to_json())
        return 0
    out.header("keg", config)
    out.emit(f"keg = {str(verdict.keg).lower()}"
             f" (tau = {verdict.tau.value}, nu = {verdict.nu.value})")
    return 0


def _cmd_classify(args, out: _Output):
    g = _load_graph(args)
    if args.what == "dilation":
        if args.k is None:
            raise SystemExit2("classify --what dilation requires --k and block sizes")
        spec = _build_spec(args, g)
        config = {"family": args.family, "graph": args.graph, "what": "dilation",
                  "k": spec.k, "s": list(spec.s), "a": list(spec.a)}
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RankDeficitWarning)
            h, w = dilate(g, spec)
        cls = classify_dilation(h, w).value
        if args.format == "json":
            out.emit_json("classify", config, {"class": cls})
            return 0
        out.header("classify", config)
        out.emit(f"class = {cls}")
        return 0
    config = {"family": args.family, "graph": args.graph, "what": "families"}
    nb_list = load_g2nb_candidates()
    extremal = extremal_class_gamma1(g) if g.is_connected() and g.edge_count else None
    result = {
        "g2b": in_family_g2b(g).to_json(),
        "g2nb": in_family_g2nb(g, nb_list).to_json(),
        "g1": in_family_g1(g, nb_list).to_json(),
        "generalized_corona": is_generalized_corona(g).to_json(),
        "union_member": union_family_member(g, nb_list).to_json()
        if g.is_connected() else None,
        "extremal_gamma1": extremal.to_json() if extremal else None,
    }
    if args.format == "json":
        out.emit_json("classify", config, result)
        return 0
    out.header("classify", config)
    for name in ("g2b", "g2nb", "g1", "generalized_corona"):
        out.emit(f"{name}: member = {str(result[name]['member']).lower()}")
    if extremal:
        out.emit(f"extremal_gamma1: {extremal.kind} (gamma = {extremal.realized_gamma})")
    return 0


def _cmd_berge(args, out: _Output):
    g = _load_graph(args)
    h = _load_hypergraph(args.hypergraph)
    config = {"family": args.family, "graph": args.graph,
              "hypergraph": args.hypergraph, "action": args.action}
    if args.action == "verify":
        if not args.witness:
            raise SystemExit2("berge verify requires --witness")
        w = BergeWitness.from_json(json.loads(Path(args.witness).read_text()))
        valid = verify_berge_witness(g, h, w)
        if args.format == "json":
            out.emit_json("berge", config, {"valid": valid, "witness": w.to_json()})
            return 0
        out.header("berge", config)
        out.emit(f"valid = {str(valid).lower()}")
        return 0
    witness = search_berge_witness(g, h, node_cap=args.node_cap)
    result = {"found": witness is not None,
              "witness": witness.to_json() if witness else None}
    if args.format == "json":
        out.emit_json("berge", config, result)
        return 0
    out.header("berge", config)
    if witness is None:
        out.emit("NotBerge")
    else:
        out.emit("witness found")
        out.emit(json.dumps(witness.to_json(), sort_keys=True))
    return 0


def _cmd_enumerate(args, out: _Output):
    bipartite = True if args.bipartite else (False if args.non_bipartite else None)
    config = {"n": args.n, "min_degree": args.min_degree, "bipartite": bipartite}
    graphs = list(enumerate_connected(args.n, min_degree=args.min_degree,
                                      bipartite=bipartite))
    if args.format == "json":
        out.emit_json("enumerate", config,
                      {"count": len(graphs), "graphs": [to_graph6(g) for g in graphs]})
        return 0
    out.header("enumerate", config)
    for g in graphs:
        out.emit(to_graph6(g))
    return 0


def _cmd_derive_nb(args, out: _Output):
    config = {"max_n": args.max_n}
    graphs = derive_g2nb_candidates(args.max_n)
    codes = [canonical_form(g) for g in graphs]
    if args.format == "json":
        out.emit_json("derive-nb", config,
                      {"cap": args.max_n, "count": len(codes), "graphs": codes})
        return 0
    out.header("derive-nb", config)
    for code in codes:
        out.emit(code)
    return 0


_SUITE_CAPS = {"hereditary": 7, "extremal-gamma1": 7, "extremal-gamma0": 8,
               "nonextremal": 6, "counterexample": 5}


def _cmd_verify(args, out: _Output):
    run_all = args.suite == "all"
    names = sorted(SUITES) if run_all else [args.suite]
    exit_code = 0
    reports = []
    for name in names:
        fn = SUITES[name]
        scale = args.max_n
        if scale is not None and run_all:
            scale = min(scale, _SUITE_CAPS[name])  # suites have different caps
        kwargs = {"node_cap": args.node_cap, "jobs": args.jobs}
        if name == "hereditary":
            kwargs.update(max_n=scale or 5, samples_per_graph=args.samples,
                          seed=args.seed)
        elif name in ("extremal-gamma1", "extremal-gamma0"):
            kwargs.update(max_n=scale or 6)
        else:
            kwargs.update(n_max=scale or 4)
        report = fn(**kwargs)
        reports.append(report)
        if not report.ok:
            exit_code = 1
    config = {"suites": names, "max_n": args.max_n, "samples": args.samples,
              "seed": args.seed}
    if args.format == "json":
        out.emit_json("verify", config,
                      {"reports": [r.to_json_dict() for r in reports],
                       "ok": exit_code == 0})
        return exit_code
    out.header("verify", config)
    for report in reports:
        out.emit(report.to_csv() if args.format == "csv" else report.to_text())
    return exit_code


_COMMANDS = {
    "gen": _cmd_gen, "dilate": _cmd_dilate, "power": _cmd_power,
    "invariant": _cmd_invariant, "keg": _cmd_keg, "classify": _cmd_classify,
    "berge": _cmd_berge, "enumerate": _cmd_enumerate,
    "derive-nb": _cmd_derive_nb, "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    out = _Output(args)
    try:
        code = _COMMANDS[args.command](args, out)
    except SystemExit2 as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except SearchBudgetExceeded as exc:
        sys.stderr.write(f"timeout: {exc} (nodes: {exc.node_count})\n")
        return 3
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
