"""Command-line front end.

Every subcommand prints a plain-text report, or with ``--json`` a single
JSON document::

    {"command": ..., "version": ..., "inputs": [...], "result": {...}}

Exit codes: 0 success, 1 audit disagreement, 2 invalid input, 3 resource
cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .clique import delta_density, enumerate_delta_components, max_clique
from .embedding import embed, embed_ring, enumerate_cycles, girth
from .errors import DisconnectedGraphError, ResourceLimitError, TopoError, ValidationError
from .faults import is_fault_tolerant, worst_case_density
from .graph import Graph, from_edge_list, generate_topology, to_edge_list
from .model import DelayModel, Directive, TaskVolumes, max_feasible_parallelism
from .projection import (build_projection, diameter, distances_from, eccentricity,
                         is_edge_complete, surplus_bound, to_bracket,
                         vertex_complete_level)
from .reachability import compress
from . import oracles

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID, EXIT_RESOURCE = 0, 1, 2, 3


class _Out:
    """Collects the text report and the JSON payload side by side."""

    def __init__(self):
        self.lines: list[str] = []
        self.result: dict = {}

    def line(self, s=""):
        self.lines.append(str(s))


def _load(path: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read graph file {path}: {exc.strerror}") from None
    return from_edge_list(text)


def _fp(path, g):
    return {"path": path, "order": g.order, "size": g.size}


def _vs(vs):
    return " ".join(map(str, vs)) if vs else "-"


# --- subcommands -------------------------------------------------------------

def cmd_gen(args, out, inputs):
    g = generate_topology(args.kind, *args.params)
    text = to_edge_list(g)
    out.result = {"kind": args.kind, "params": list(args.params), "order": g.order,
                  "size": g.size, "edges": [list(e) for e in g.edges]}
    if text:
        out.lines.extend(text.split("\n"))


def cmd_project(args, out, inputs):
    g = inputs[0][1]
    p = build_projection(g, args.root, args.depth, args.mode)
    kc = vertex_complete_level(p, g)
    out.result = {
        "root": args.root, "depth": p.depth, "mode": p.mode,
        "bracket": to_bracket(p), "nodes": len(p),
        "level_counts": list(p.level_counts),
        "level_sets": [sorted(s) for s in p.level_sets],
        "vertex_complete_level": kc,
        "edge_complete": is_edge_complete(p, g),
        "surplus_bound": surplus_bound(p),
    }
    out.line(to_bracket(p))


def _degree_range(g):
    degs = [g.degree(v) for v in g.vertices]
    return [min(degs), max(degs)] if degs else [0, 0]


def cmd_metrics(args, out, inputs):
    g = inputs[0][1]
    ecc = {v: eccentricity(g, v) for v in g.vertices}
    gi = girth(g)
    out.result = {
        "order": g.order, "size": g.size, "degree_range": _degree_range(g),
        "eccentricity": {str(v): e for v, e in ecc.items()},
        "diameter": max(ecc.values()), "radius": min(ecc.values()),
        "girth": gi,
    }
    out.line(f"order\t{g.order}")
    out.line(f"size\t{g.size}")
    out.line("degree\t{}..{}".format(*_degree_range(g)))
    out.line(f"diameter\t{max(ecc.values())}")
    out.line(f"radius\t{min(ecc.values())}")
    out.line(f"girth\t{'acyclic' if gi is None else gi}")
    out.line("vertex\teccentricity")
    for v, e in ecc.items():
        out.line(f"{v}\t{e}")


def cmd_reach(args, out, inputs):
    g = inputs[0][1]
    rg = compress(g, args.delta)
    out.result = {"delta": args.delta, "order": rg.derived.order, "size": rg.derived.size,
                  "edges": [list(e) for e in rg.derived.edges]}
    text = to_edge_list(rg.derived)
    if text:
        out.lines.extend(text.split("\n"))


def cmd_clique(args, out, inputs):
    g = inputs[0][1]
    res = max_clique(g)
    tr = res.trace
    out.result = {
        "clique": list(res.vertices), "size": res.size, "delta": 1,
        "seed": list(tr.seed),
        "eliminated": [[[v, b] for v, b in ps] for ps in tr.passes],
    }
    out.line(f"size\t{res.size}")
    out.line(f"clique\t{_vs(res.vertices)}")
    out.line(f"seed\t{_vs(tr.seed)}")
    for i, ps in enumerate(tr.passes, 1):
        out.line(f"pass {i}\t" + " ".join(f"{v}(bound={b})" for v, b in ps))


def cmd_density(args, out, inputs):
    g = inputs[0][1]
    res = delta_density(g, args.delta)
    out.result = {"delta": args.delta, "phi": res.size, "clique": list(res.vertices)}
    out.line(f"phi_{args.delta}\t{res.size}")
    out.line(f"clique\t{_vs(res.vertices)}")


def cmd_components(args, out, inputs):
    g = inputs[0][1]
    comps = enumerate_delta_components(g, args.delta, args.min_size)
    out.result = {"delta": args.delta, "min_size": args.min_size,
                  "components": [list(c) for c in comps]}
    for c in comps:
        out.line(_vs(c))


def _directive(args):
    if args.speedup is not None:
        return Directive("speedup", args.speedup)
    return Directive("efficiency", args.efficiency)


def _plan(g, args):
    return max_feasible_parallelism(g, TaskVolumes(args.W, args.Q),
                                    DelayModel(args.alpha, args.beta), _directive(args))


def cmd_plan(args, out, inputs):
    plan = _plan(inputs[0][1], args)
    out.result = plan.to_dict()
    out.result["scan"] = [{"p": s.p, "L": s.L, "delta": s.delta, "phi": s.density,
                           "feasible": s.feasible} for s in plan.scan]
    d = plan.directive
    out.line(f"directive\t{d.kind}={d.target:g}")
    if plan.feasible:
        out.line(f"p*\t{plan.p}")
        out.line(f"L\t{plan.L:.6g}")
        out.line(f"delta\t{plan.delta}")
        out.line(f"witness\t{_vs(plan.witness_clique)}")
    else:
        out.line("verdict\tinfeasible")
    out.line("p\tL\tdelta\tphi\tfeasible")
    for s in plan.scan:
        L = "-" if s.L is None else f"{s.L:.6g}"
        out.line(f"{s.p}\t{L}\t{s.delta or '-'}\t{s.density or '-'}\t"
                 f"{'yes' if s.feasible else 'no'}")


def cmd_embed(args, out, inputs):
    g = inputs[0][1]
    task = _load(args.task)
    inputs.append((args.task, task))
    e = embed(task, g, args.delta)
    out.result = {"delta": args.delta, "embedded": e is not None,
                  "mapping": None if e is None else [list(pr) for pr in e.pairs()]}
    out.line("none" if e is None else str(e))


def cmd_cycles(args, out, inputs):
    g = inputs[0][1]
    if args.delta > 1:
        g = compress(g, args.delta).derived
    if args.first:
        e = embed_ring(inputs[0][1], args.length, args.delta)
        cycles = [] if e is None else [tuple(b for _, b in e.pairs())]
    else:
        cycles = enumerate_cycles(g, args.length)
    out.result = {"length": args.length, "delta": args.delta, "count": len(cycles),
                  "cycles": [list(c) for c in cycles]}
    for c in cycles:
        out.line(_vs(c))


def cmd_girth(args, out, inputs):
    gi = girth(inputs[0][1])
    out.result = {"girth": gi, "acyclic": gi is None}
    out.line("acyclic" if gi is None else gi)


def cmd_faults(args, out, inputs):
    g = inputs[0][1]
    rep = worst_case_density(g, args.delta, args.f)
    out.result = rep.to_dict()
    out.line(f"delta\t{rep.delta}")
    out.line(f"f\t{rep.f}")
    out.line(f"min_density\t{rep.min_density}")
    out.line(f"witness\t{_vs(rep.witness)}")
    out.line(f"examined\t{rep.examined}")
    out.line("distances\tmeasured in G - F")
    if args.p is not None:
        v = is_fault_tolerant(g, args.delta, args.p, args.f)
        out.result["p"] = args.p
        out.result["tolerant"] = v.tolerant
        out.result["counterexample"] = None if v.tolerant else list(v.counterexample)
        out.line(f"tolerant(p={args.p})\t{'yes' if v.tolerant else 'no'}")
        if not v.tolerant:
            out.line(f"counterexample\t{_vs(v.counterexample)}")


def _compare_row(path, g, args):
    row = {"graph": path, "n": g.order, "size": g.size, "degree_range": _degree_range(g)}
    try:
        diam = diameter(g)
    except DisconnectedGraphError:
        diam = None
    row["diameter"] = diam
    row["girth"] = girth(g)
    top = diam if diam is not None else 1
    row["phi"] = {str(d): delta_density(g, d).size for d in range(1, max(top, 1) + 1)}
    if args.W is not None:
        plan = _plan(g, args)
        row["plan"] = plan.to_dict()
    return row


def cmd_compare(args, out, inputs):
    rows = [_compare_row(path, g, args) for path, g in inputs]
    out.result = {"graphs": rows}
    head = ["graph", "n", "edges", "degree", "diameter", "girth", "phi"]
    if args.W is not None:
        head += ["p*", "delta"]
    out.line("\t".join(head))
    for r in rows:
        cells = [r["graph"], r["n"], r["size"], "{}..{}".format(*r["degree_range"]),
                 "-" if r["diameter"] is None else r["diameter"],
                 "acyclic" if r["girth"] is None else r["girth"],
                 ",".join(f"{d}:{v}" for d, v in r["phi"].items())]
        if args.W is not None:
            pl = r["plan"]
            cells += [pl["p"] if pl["feasible"] else "infeasible",
                      pl["delta"] if pl["feasible"] else "-"]
        out.line("\t".join(map(str, cells)))


def cmd_audit(args, out, inputs):
    g = inputs[0][1]
    checks = {}
    d = oracles.oracle_distances(g)
    fast = {}
    for v in g.vertices:
        dv = distances_from(g, v)
        for u in g.vertices:
            fast[v, u] = dv.get(u, float("inf"))
    checks["distances"] = fast == d
    finite = [x for x in d.values() if x != float("inf")]
    top = int(max(finite)) if finite else 1
    checks["compress"] = all(
        set(compress(g, k).derived.edges)
        == {(a, b) for (a, b), x in d.items() if a < b and 1 <= x <= k}
        for k in range(1, max(top, 1) + 1))
    checks["max_clique"] = max_clique(g).vertices == oracles.oracle_max_clique(g)
    if args.task:
        task = _load(args.task)
        inputs.append((args.task, task))
        fast_e = embed(task, g, args.delta)
        checks["embed"] = (fast_e is None) == (oracles.oracle_embed(task, g, args.delta) is None)
    agree = all(checks.values())
    out.result = {"checks": checks, "agree": agree}
    for k, ok in checks.items():
        out.line(f"{k}\t{'agree' if ok else 'MISMATCH'}")
    return EXIT_OK if agree else EXIT_MISMATCH


COMMANDS = {
    "gen": cmd_gen, "project": cmd_project, "metrics": cmd_metrics, "reach": cmd_reach,
    "clique": cmd_clique, "density": cmd_density, "components": cmd_components,
    "plan": cmd_plan, "embed": cmd_embed, "cycles": cmd_cycles, "girth": cmd_girth,
    "faults": cmd_faults, "compare": cmd_compare, "audit": cmd_audit,
}


def _positive_int(s):
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="topopar", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"topopar {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--out", help="write the report to this file")
    sub = ap.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help, graph=True, delta=False):
        p = sub.add_parser(name, help=help, parents=[common])
        if graph:
            p.add_argument("--graph", required=True, help="edge-list file")
        if delta:
            p.add_argument("--delta", type=_positive_int, default=1,
                           help="reachability budget (default 1)")
        return p

    p = add("gen", "generate a standard topology as an edge list", graph=False)
    p.add_argument("kind", choices=["ring", "complete", "hypercube", "torus", "mesh",
                                    "path", "star"])
    p.add_argument("params", type=int, nargs="+")

    p = add("project", "print a projection in bracket form")
    p.add_argument("--root", type=int, required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--mode", default="full",
                   choices=["full", "shortest", "full-chains", "shortest-only"])

    add("metrics", "eccentricities, diameter, radius, girth")
    add("reach", "reachability graph as an edge list", delta=True)
    add("clique", "maximum clique with elimination trace")
    add("density", "density: maximum clique of the reachability graph", delta=True)
    p = add("components", "maximal cliques of the reachability graph", delta=True)
    p.add_argument("--min-size", type=_positive_int, default=1)

    def plan_flags(p, required):
        p.add_argument("--W", type=float, required=required, help="computation volume")
        p.add_argument("--Q", type=float, default=0.0, help="exchange volume (bytes)")
        p.add_argument("--alpha", type=float, default=0.0, help="per-hop latency")
        p.add_argument("--beta", type=float, default=0.0, help="per-byte hop cost")
        grp = p.add_mutually_exclusive_group(required=required)
        grp.add_argument("--speedup", type=float)
        grp.add_argument("--efficiency", type=float)

    plan_flags(add("plan", "largest feasible processor count for a directive"), True)

    p = add("embed", "embed a task graph under limited reachability", delta=True)
    p.add_argument("--task", required=True, help="task graph edge-list file")
    p = add("cycles", "enumerate cycles of a given length", delta=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--first", action="store_true", help="stop at the first cycle")
    add("girth", "shortest cycle length")
    p = add("faults", "worst-case density under vertex faults", delta=True)
    p.add_argument("--f", type=int, required=True, help="fault multiplicity")
    p.add_argument("--p", type=int, help="required parallelism for a verdict")

    p = sub.add_parser("compare", help="side-by-side topology comparison", parents=[common])
    p.add_argument("--graph", action="append", required=True)
    plan_flags(p, False)

    p = add("audit", "check fast paths against brute-force oracles", delta=True)
    p.add_argument("--task", help="also audit embedding of this task graph")
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    out = _Out()
    try:
        if args.command == "compare" and args.W is not None \
                and args.speedup is None and args.efficiency is None:
            ap.error("compare: --W needs --speedup or --efficiency")
        paths = getattr(args, "graph", None) or []
        if isinstance(paths, str):
            paths = [paths]
        inputs = [(p, _load(p)) for p in paths]
        code = COMMANDS[args.command](args, out, inputs) or EXIT_OK
    except ResourceLimitError as exc:
        print(f"topopar: resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (TopoError, ValueError) as exc:
        print(f"topopar: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        doc = {"command": args.command, "version": __version__,
               "inputs": [_fp(p, g) for p, g in inputs], "result": out.result}
        text = json.dumps(doc, indent=2, sort_keys=True)
    else:
        text = "\n".join(out.lines)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding="utf-8")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
