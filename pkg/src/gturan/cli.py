"""Command-line front door.

Subcommands: construct | count | verify-free | bounds | localize |
search | reproduce-examples | verify.  Output is a human-readable table
by default; ``--json`` switches stdout to the JSON envelope and ``--out``
writes the envelope (with run manifest) to a file.  Vertex sets in JSON
are 0-indexed; text output is 1-indexed.
"""

from __future__ import annotations

import argparse
import re
import sys
from fractions import Fraction

from . import __version__
from .graphs import (
    Graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph6_decode,
    graph6_encode,
    join,
    mask_of,
    path_graph,
    read_g6,
    set_of,
)
from .families import (
    ParamTriple,
    candidate_extremal_union,
    colex_turan,
    complete_split,
    lower_bound_family,
    lower_bound_graph,
    turan,
)
from .counting import count_cliques, count_copies_rooted, count_subgraph_copies
from .freeness import ConstraintSet, check_constraints
from .bounds import bounds_report, star_problem_bounds
from .localization import default_threshold, localized_report
from .search import brute_extremal, brute_extremal_u
from .acceptance import DEFAULT_SEED, run_acceptance
from .reports import dump_json, envelope, make_manifest

_ATOM = re.compile(r"^([KIPC])(\d+)$")
_CALL = re.compile(r"^(\w+)\(([\d,\s]*)\)$")

_FAMILIES = {
    "turan": (2, lambda r, n: turan(r, n)),
    "colex": (2, lambda r, m: colex_turan(r, m)),
    "colexdm": (2, lambda r, m: colex_turan(r, m, degree_minimal=True)),
    "split": (2, lambda u, s: complete_split(u, s)),
    "lb": (3, lambda u, d, w: lower_bound_graph(ParamTriple(u, d, w))),
    "lbfam": (4, lambda u, d, w, p: lower_bound_family(ParamTriple(u, d, w), p)),
    "candidate": (4, lambda u, d, w, s: candidate_extremal_union(u, d, w, s)),
}


def parse_graph_spec(spec: str) -> Graph:
    """Parse a graph description: named atom (K5, I3, P4, C6), joins of
    atoms with 'v' (K2vI2), family calls (turan(4,6), colex(4,17),
    colexdm(4,17), split(2,3), lb(1,5,4), lbfam(1,5,4,10)), @file.g6, or a
    raw graph6 string."""
    spec = spec.strip()
    if spec.startswith("@"):
        graphs = read_g6(spec[1:])
        if len(graphs) != 1:
            raise ValueError(f"{spec[1:]} holds {len(graphs)} graphs, expected 1")
        return graphs[0]
    call = _CALL.match(spec)
    if call:
        name, args = call.group(1).lower(), call.group(2)
        if name not in _FAMILIES:
            raise ValueError(f"unknown family {name!r}")
        arity, builder = _FAMILIES[name]
        values = [int(x) for x in args.split(",")] if args.strip() else []
        if len(values) != arity:
            raise ValueError(f"family {name} takes {arity} integers")
        return builder(*values)
    if "v" in spec and all(_ATOM.match(part) for part in spec.split("v")):
        parts = [_parse_atom(p) for p in spec.split("v")]
        out = parts[0]
        for p in parts[1:]:
            out = join(out, p)
        return out
    atom = _ATOM.match(spec)
    if atom:
        return _parse_atom(spec)
    return graph6_decode(spec)


def _parse_atom(spec: str) -> Graph:
    m = _ATOM.match(spec)
    assert m
    kind, size = m.group(1), int(m.group(2))
    if kind == "K":
        return complete_graph(size)
    if kind == "I":
        return empty_graph(size)
    if kind == "P":
        return path_graph(size)
    return cycle_graph(size)


def _fmt_rational(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _vertices_1based(mask: int) -> str:
    return "{" + ", ".join(str(v + 1) for v in set_of(mask)) + "}"


def _emit(args, kind: str, data, text_lines: list[str]) -> None:
    doc = envelope(kind, data)
    if args.out:
        manifest = make_manifest(["gturan"] + args._argv, vars_public(args), {})
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(dump_json(envelope(kind, data, manifest)) + "\n")
    if args.json:
        print(dump_json(doc))
    else:
        for line in text_lines:
            print(line)


def vars_public(args) -> dict:
    return {k: v for k, v in vars(args).items() if not k.startswith("_") and k != "func"}


def cmd_construct(args) -> int:
    g = parse_graph_spec(args.family)
    data = {
        "family": args.family,
        "n": g.n,
        "m": g.edge_count,
        "graph6": graph6_encode(g),
    }
    _emit(args, "construct", data, [
        f"family   {args.family}",
        f"vertices {g.n}",
        f"edges    {g.edge_count}",
        f"graph6   {data['graph6']}",
    ])
    return 0


def cmd_count(args) -> int:
    g = parse_graph_spec(args.graph)
    if args.cliques is not None:
        value = count_cliques(g, args.cliques)
        what = f"k^{args.cliques}"
    elif args.pattern is not None:
        h = parse_graph_spec(args.pattern)
        if args.rooted:
            root = mask_of(int(x) for x in args.rooted.split(","))
            value = count_copies_rooted(h, g, root, root.bit_count())
            what = f"rooted copies at {_vertices_1based(root)}"
        else:
            value = count_subgraph_copies(h, g)
            what = "copies"
    else:
        raise SystemExit("count: need --pattern or --cliques")
    data = {"pattern": args.pattern, "graph": args.graph, "count": value}
    _emit(args, "count", data, [f"{what} in {args.graph}: {value}"])
    return 0


def cmd_verify_free(args) -> int:
    g = parse_graph_spec(args.graph)
    cs = ConstraintSet(u=args.u, delta=args.delta, omega=args.omega)
    rep = check_constraints(g, cs)
    data = {
        "graph": args.graph,
        "constraints": cs,
        "clique_number": rep.clique_number,
        "max_degree": rep.max_degree,
        "max_common_neighborhood_by_u": rep.max_common_neighborhood_by_u,
        "passes": rep.passes,
        "violations": [
            {"kind": v.kind, "vertices": list(v.vertex_list())} for v in rep.violations
        ],
    }
    lines = [
        f"graph            {args.graph}",
        f"clique number    {rep.clique_number}",
        f"max degree       {rep.max_degree}",
        f"result           {'free' if rep.passes else 'NOT free'}",
    ]
    for v in rep.violations:
        lines.append(f"violation        {v.kind}: {_vertices_1based(v.vertices)}")
    _emit(args, "freeness", data, lines)
    return 0 if rep.passes else 1


def cmd_bounds(args) -> int:
    h = parse_graph_spec(args.pattern)
    if args.star_problem:
        sp = star_problem_bounds(h, args.u, args.delta, args.omega)
        data = {
            "pattern": args.pattern,
            "u": args.u, "delta": args.delta, "omega": args.omega,
            "conjectural": True,
            "lower": sp.lower, "upper": sp.upper,
        }
        _emit(args, "bounds", data, [
            "star-forbidden variant (conjectural, nothing asserted):",
            f"  lower {_fmt_rational(sp.lower)}   upper {_fmt_rational(sp.upper)}",
        ])
        return 0
    reports = []
    deltas = range(args.omega, args.delta + 1) if args.grid else [args.delta]
    for d in deltas:
        reports.append(bounds_report(h, ParamTriple(args.u, d, args.omega)))
    data = [
        {
            "u": r.params.u, "delta": r.params.delta, "omega": r.params.omega,
            "a": r.params.a, "b": r.params.b,
            "lower": r.lower, "upper": r.upper,
            "divisible": r.divisible, "equal": r.equal, "ratio": r.ratio,
            "lower_bound_graph": r.lb_graph,
        }
        for r in reports
    ]
    lines = ["   u  delta  omega  lower      upper      equal"]
    for r in reports:
        lines.append(
            f"  {r.params.u:2d}  {r.params.delta:5d}  {r.params.omega:5d}  "
            f"{_fmt_rational(r.lower):9s}  {_fmt_rational(r.upper):9s}  {r.equal}"
        )
    _emit(args, "bounds-grid" if args.grid else "bounds", data, lines)
    return 0


def cmd_localize(args) -> int:
    g = parse_graph_spec(args.graph)
    h = parse_graph_spec(args.pattern)
    threshold = args.omega0 if args.omega0 is not None else default_threshold(h)
    rep = localized_report(g, h, args.u, threshold)
    data = {
        "graph": args.graph, "pattern": args.pattern, "u": args.u,
        "threshold": threshold,
        "copies": len(rep.per_copy),
        "weighted_sum": rep.weighted_sum, "bound": rep.bound,
        "holds": rep.holds, "equality": rep.equality,
        "hypothesis_ok": rep.hypothesis_ok,
        "exempt_cliques": [list(set_of(c)) for c in rep.exempt_cliques],
    }
    if args.per_copy:
        data["per_copy"] = [
            {
                "vertices": list(set_of(cw.verts)),
                "clique_size": cw.clique_size,
                "codegree": cw.codegree,
                "weight": cw.weight,
            }
            for cw in rep.per_copy
        ]
    lines = [
        f"copies           {len(rep.per_copy)}",
        f"weighted sum     {_fmt_rational(rep.weighted_sum)}",
        f"bound            {_fmt_rational(rep.bound)}",
        f"holds            {rep.holds}" + ("  (equality)" if rep.equality else ""),
        f"hypothesis ok    {rep.hypothesis_ok}",
        f"exempt cliques   {len(rep.exempt_cliques)}",
    ]
    if args.per_copy:
        lines.append("  copy                          clique_size codegree weight")
        for cw in rep.per_copy:
            lines.append(
                f"  {_vertices_1based(cw.verts):28s}  {cw.clique_size:11d} "
                f"{cw.codegree:8d} {_fmt_rational(cw.weight)}"
            )
    _emit(args, "localize", data, lines)
    return 0


def cmd_search(args) -> int:
    h = parse_graph_spec(args.pattern)
    cs = ConstraintSet(u=args.u, delta=args.delta, omega=args.omega)
    if args.p is not None:
        out = brute_extremal_u(args.p, args.u, h, cs, n_cap=args.ncap)
    else:
        if args.n is None:
            raise SystemExit("search: need --n (vertices) or --p (u-clique count)")
        out = brute_extremal(args.n, h, cs)
    if args.dump_g6:
        with open(args.dump_g6, "w", encoding="ascii") as fh:
            for s in out.argmax:
                fh.write(s + "\n")
    data = {
        "objective": out.objective,
        "argmax": list(out.argmax),
        "search_space_size": out.search_space_size,
        "constraints": cs,
        "fixed": out.fixed,
        "notes": list(out.notes),
    }
    lines = [
        f"objective        {out.objective}",
        f"optima (up to isomorphism): {len(out.argmax)}",
    ] + [f"  {s}" for s in out.argmax] + [f"note: {n}" for n in out.notes]
    _emit(args, "search", data, lines)
    return 0


def reproduce_examples() -> dict:
    """Build the two 42-vertex demo graphs, verify freeness and the
    strict crossover of their triangle and K_4 counts, and return all
    four exact integers.  Raises AssertionError with a diff on failure."""
    from .graphs import disjoint_union

    block = colex_turan(4, 17, degree_minimal=True)
    g_colex = disjoint_union([(block, 6)])
    g_turan = disjoint_union([(turan(4, 6), 7)])
    cs = ConstraintSet(u=1, delta=5, omega=4)
    problems = []
    if g_colex.n != 42 or g_turan.n != 42:
        problems.append(f"vertex counts {g_colex.n}, {g_turan.n} != 42")
    for name, g in (("colex blocks", g_colex), ("turan blocks", g_turan)):
        rep = check_constraints(g, cs)
        if not rep.passes:
            problems.append(f"{name} not free: {rep.violations}")
    counts = {
        "k3_colex_blocks": count_cliques(g_colex, 3),
        "k3_turan_blocks": count_cliques(g_turan, 3),
        "k4_colex_blocks": count_cliques(g_colex, 4),
        "k4_turan_blocks": count_cliques(g_turan, 4),
    }
    if not counts["k3_colex_blocks"] > counts["k3_turan_blocks"]:
        problems.append(f"k3 crossover failed: {counts}")
    if not counts["k4_turan_blocks"] > counts["k4_colex_blocks"]:
        problems.append(f"k4 crossover failed: {counts}")
    if problems:
        raise AssertionError("reproduce-examples failed:\n" + "\n".join(problems))
    return {
        **counts,
        "colex_block": graph6_encode(block),
        "graph6_colex": graph6_encode(g_colex),
        "graph6_turan": graph6_encode(g_turan),
    }


def cmd_reproduce(args) -> int:
    data = reproduce_examples()
    _emit(args, "reproduce-examples", data, [
        "42-vertex crossover:",
        f"  triangles: 6 colex blocks {data['k3_colex_blocks']} > {data['k3_turan_blocks']} 7 Turán blocks",
        f"  K4 copies: 7 Turán blocks {data['k4_turan_blocks']} > {data['k4_colex_blocks']} 6 colex blocks",
    ])
    return 0


def cmd_verify(args) -> int:
    results = run_acceptance(args.level, args.seed)
    data = [
        {
            "criterion": r.cid,
            "description": r.description,
            "passed": r.passed,
            "elapsed_s": round(r.elapsed, 2),
        }
        for r in results
    ]
    lines = []
    for r in results:
        lines.append(
            f"criterion {r.cid:2d} {'PASS' if r.passed else 'FAIL'}  "
            f"({r.elapsed:6.1f}s)  {r.description}"
        )
    ok = all(r.passed for r in results)
    lines.append(f"{'all criteria passed' if ok else 'FAILURES PRESENT'}")
    _emit(args, "verify", data, lines)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="gturan",
        description="exact extremal subgraph-density computations",
    )
    top.add_argument("--version", action="version", version=__version__)
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="JSON to stdout")
        p.add_argument("--out", help="write JSON report (with manifest) to a file")
        p.add_argument("--threads", type=int, default=1,
                       help="accepted for compatibility; execution is single-process")

    p = sub.add_parser("construct", help="build a named graph family member")
    p.add_argument("--family", required=True, help="e.g. turan(4,6), colex(4,17), split(2,3)")
    common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("count", help="count cliques or pattern copies")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern")
    p.add_argument("--cliques", type=int, help="count cliques of this size")
    p.add_argument("--rooted", help="comma list of root vertices (0-indexed)")
    common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify-free", help="check forbidden-subgraph constraints")
    p.add_argument("--graph", required=True)
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--delta", type=int)
    p.add_argument("--omega", type=int)
    common(p)
    p.set_defaults(func=cmd_verify_free)

    p = sub.add_parser("bounds", help="exact density sandwich")
    p.add_argument("--pattern", "--H", dest="pattern", required=True)
    p.add_argument("--u", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--omega", type=int, required=True)
    p.add_argument("--grid", action="store_true", help="sweep delta from omega upward")
    p.add_argument("--star-problem", action="store_true",
                   help="emit the conjectural star-forbidden sandwich instead")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("localize", help="localized weight inequality report")
    p.add_argument("--graph", required=True)
    p.add_argument("--pattern", "--H", dest="pattern", required=True)
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--omega0", type=int, help="clique threshold (default: pattern-derived)")
    p.add_argument("--per-copy", action="store_true")
    common(p)
    p.set_defaults(func=cmd_localize)

    p = sub.add_parser("search", help="brute-force extremal search")
    p.add_argument("--pattern", "--H", dest="pattern", required=True)
    p.add_argument("--n", type=int, help="fixed vertex count")
    p.add_argument("--p", type=int, help="fixed u-clique count")
    p.add_argument("--u", type=int, default=1)
    p.add_argument("--delta", type=int)
    p.add_argument("--omega", type=int)
    p.add_argument("--ncap", type=int)
    p.add_argument("--dump-g6", help="write all optima to a .g6 file")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("reproduce-examples", help="42-vertex crossover demo")
    common(p)
    p.set_defaults(func=cmd_reproduce)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--level", choices=["quick", "full"], default="quick")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common(p)
    p.set_defaults(func=cmd_verify)

    return top


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    args._argv = argv
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
