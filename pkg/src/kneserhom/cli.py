"""Command-line interface.

Every subcommand prints one JSON document to stdout. Exit codes: 0 computed
(and any requested check passed), 1 a requested check failed, 2 invalid
input, 3 a size cap or search budget was hit.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

from . import balls, certificates, g0, graph as gr, hom, io, kfold, kneser, repro, words
from .errors import (
    BadParams,
    DegreeTooHigh,
    Infeasible,
    NotFound,
    NotReduced,
    PaletteTooSmall,
    ResourceLimit,
    ShortOddCycle,
)

EXIT_OK, EXIT_FAILED, EXIT_BAD_INPUT, EXIT_LIMIT = 0, 1, 2, 3


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    raise TypeError(f"cannot serialise {type(value).__name__}")


def _emit(payload: dict) -> None:
    print(json.dumps(payload, default=_jsonable, indent=2))


def _read(path: str) -> gr.Graph:
    try:
        return io.read_graph(path)
    except (OSError, json.JSONDecodeError) as exc:
        raise BadParams(f"cannot read graph {path}: {exc}") from exc


def cmd_gen(args) -> int:
    build = kneser.kneser_graph if args.family == "kneser" else kneser.schrijver_graph
    sg = build(args.n, args.k)
    names = ["{" + ",".join(map(str, s)) + "}" for s in sg.subsets]
    if args.out:
        io.write_graph(sg.graph, args.out, vertex_names=names)
    out = {"family": args.family, "n": args.n, "k": args.k, "vertices": sg.graph.n, "edges": sg.graph.num_edges}
    if args.out:
        out["out"] = args.out
    else:
        out["graph"] = io.graph_to_dict(sg.graph)
        out["subsets"] = [list(s) for s in sg.subsets]
    _emit(out)
    return EXIT_OK


FORMULAS = {
    "odd-girth": kneser.kneser_odd_girth_formula,
    "chi": kneser.kneser_chromatic_formula,
    "chi-frac": kneser.fractional_chromatic_formula_kneser,
    "schrijver-count": kneser.schrijver_vertex_count,
}


def cmd_formula(args) -> int:
    _emit({"what": args.what, "n": args.n, "k": args.k, "value": FORMULAS[args.what](args.n, args.k)})
    return EXIT_OK


def cmd_hom(args) -> int:
    source, target = _read(args.source), _read(args.target)
    mapping = hom.find_homomorphism(source, target, budget=args.budget)
    if mapping is None:
        _emit({"value": None, "certificate": "exhaustive search found no homomorphism"})
    else:
        _emit({"value": mapping, "certificate": "every edge checked against the target"})
    return EXIT_OK


def _invariant(G: gr.Graph, what: str):
    if what == "chi":
        col = hom.optimal_coloring(G)
        return col.num_colors, {"coloring": list(col.colors)}
    if what == "chi-frac":
        lp = hom.fractional_chromatic_lp(G)
        fold = lp.fold_coloring
        return lp.value, {
            "independent_sets": [[sorted(s), str(w)] for s, w in lp.support()],
            "dual": [str(y) for y in lp.clique_weights],
            "fold_coloring": {"n": fold.n, "k": fold.k, "assignment": [sorted(a) for a in fold.assignment]},
        }
    if what == "alpha":
        best = gr.maximum_independent_set(G)
        return len(best), {"independent_set": sorted(best)}
    if what == "odd-girth":
        return gr.odd_girth(G), None
    return gr.girth(G), None


def cmd_invariant(args) -> int:
    G = _read(args.graph)
    value, cert = _invariant(G, args.what)
    out = {"what": args.what, "value": value, "certificate": cert}
    code = EXIT_OK
    if args.expect is not None:
        expected = math.inf if args.expect == "inf" else Fraction(args.expect)
        out["expected"] = args.expect
        out["matches"] = value == expected
        code = EXIT_OK if out["matches"] else EXIT_FAILED
    _emit(out)
    return code


def cmd_ball_graph(args) -> int:
    H = balls.ball_labeling_graph(args.d, args.g, args.N)
    if args.out:
        names = [str(v.form) for v in H.vertices]
        io.write_graph(H.graph, args.out, vertex_names=names)
    og = gr.odd_girth(H.graph)
    _emit({
        "d": args.d, "g": args.g, "N": H.N,
        "vertices": H.graph.n, "edges": H.graph.num_edges,
        "odd_girth": og, "odd_girth_is_2g_plus_1": og == 2 * args.g + 1,
        "four_cycle": gr.find_four_cycle(H.graph),
        "out": args.out,
    })
    return EXIT_OK


def cmd_tree_hom(args) -> int:
    res = balls.tree_to_ball_hom(args.d, args.g, args.depth, args.N)
    _emit({
        "tree_vertices": res.tree.graph.n,
        "interior": len(res.tree.interior),
        "interior_edges": res.interior_edges,
        "ball_graph_vertices": res.ball_graph.graph.n,
        "valid": res.valid,
    })
    return EXIT_OK if res.valid else EXIT_FAILED


def cmd_kfold(args) -> int:
    G = _read(args.graph)
    fold = kfold.kfold_color_pipeline(G, args.d, args.k)
    _emit({"n": fold.n, "k": fold.k, "assignment": [sorted(a) for a in fold.assignment], "valid": fold.is_valid(G)})
    return EXIT_OK


def cmd_sphere(args) -> int:
    s = words.sphere(args.d, args.l)
    expected = args.d * (args.d - 1) ** args.l
    out = {"d": args.d, "l": args.l, "size": len(s.words), "expected": expected}
    if args.list:
        out["words"] = [words.format_word(w) for w in s.words]
    _emit(out)
    return EXIT_OK if len(s.words) == expected else EXIT_FAILED


def cmd_sigma(args) -> int:
    tau = words.parse_word(args.tau)
    sigma = words.sigma_word(tau)
    chain = words.sigma_circuit(tau)
    ok = words.is_reduced(sigma) and len(sigma) == 2 * len(tau) - 1 and words.is_cayley_path(chain)
    _emit({
        "tau": words.format_word(tau),
        "sigma": words.format_word(sigma),
        "length": len(sigma),
        "chain": [words.format_word(w) for w in chain],
        "valid": ok,
    })
    return EXIT_OK if ok else EXIT_FAILED


def cmd_g0(args) -> int:
    fam = g0.build_dense_family(args.L, args.d, args.seed)
    out = {"L": args.L, "d": args.d, "seed": args.seed, "depth": fam.depth, "check": args.check}
    if args.check == "involution":
        out["failures"] = g0.check_involution(fam, args.m_max)
        ok = out["failures"] == 0
    elif args.check == "prefix":
        out["failures"] = g0.check_prefix_determination(fam, args.m_max)
        ok = out["failures"] == 0
    else:
        out.update(g0.check_labels(fam))
        ok = not (out["asymmetric"] or out["mislabelled"] or out["missing_labels"])
    out["passed"] = ok
    _emit(out)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_witness(args) -> int:
    G = _read(args.graph)
    _emit(certificates.hyperfinite_witness_check(G, args.d, graph_id=Path(args.graph).name).as_dict())
    return EXIT_OK


def cmd_witness_search(args) -> int:
    try:
        res = certificates.corollary_witness_search(args.d, args.m, args.kmax)
    except NotFound as exc:
        _emit({"d": args.d, "m": args.m, "k_max": args.kmax, "found": False, "reason": str(exc)})
        return EXIT_FAILED
    out = res.as_dict()
    out["found"] = True
    out["mpmath"] = certificates.reverify_with_mpmath(args.d, args.m, res.k_min)
    _emit(out)
    return EXIT_OK


def cmd_arith_check(args) -> int:
    checks = certificates.corollary14_arithmetic()
    _emit({"checks": [c.as_dict() for c in checks]})
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def cmd_repro(args) -> int:
    report = repro.run_reproduction_suite(args.profile, explore=args.explore)
    if args.json:
        Path(args.json).write_text(json.dumps(report, default=_jsonable, indent=2) + "\n")
    print(repro.format_table(report))
    return EXIT_OK if all(c["status"] == "pass" for c in report["checks"]) else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kneserhom", description="Kneser graph and homomorphism toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a Kneser or Schrijver graph")
    p.add_argument("--family", choices=["kneser", "schrijver"], default="kneser")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", help="write to FILE.json or FILE.dot")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("formula", help="closed-form invariants of K(n,k)")
    p.add_argument("--what", choices=sorted(FORMULAS), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("hom", help="search for a homomorphism between two graphs")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_hom)

    p = sub.add_parser("invariant", help="compute a graph invariant with a certificate")
    p.add_argument("--graph", required=True)
    p.add_argument("--what", choices=["chi", "chi-frac", "alpha", "odd-girth", "girth"], required=True)
    p.add_argument("--expect", help="exit 1 unless the value equals this (integer, fraction or inf)")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("ball-graph", help="build the ball labeling graph H(d,g)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--N", type=int, help="label count (default d^(2g))")
    p.add_argument("--out")
    p.set_defaults(func=cmd_ball_graph)

    p = sub.add_parser("tree-hom", help="map a truncated tree into H(d,g)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--N", type=int)
    p.set_defaults(func=cmd_tree_hom)

    p = sub.add_parser("kfold", help="k-fold (dk+1)-colouring of a max-degree-d graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_kfold)

    p = sub.add_parser("sphere", help="reduced words of length l+1")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--list", action="store_true", help="include the words")
    p.set_defaults(func=cmd_sphere)

    p = sub.add_parser("sigma", help="conjugate word of tau and its suffix chain")
    p.add_argument("--tau", required=True, help="comma-separated generator indices")
    p.set_defaults(func=cmd_sigma)

    p = sub.add_parser("g0", help="exhaustive checks on the finite bit-flip graph")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--check", choices=["involution", "prefix", "labels"], required=True)
    p.add_argument("--m-max", type=int, default=3)
    p.set_defaults(func=cmd_g0)

    p = sub.add_parser("witness", help="size/odd-girth witness check for a graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("witness-search", help="least k making K'(2k+m,k) a witness")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_witness_search)

    p = sub.add_parser("arith-check", help="exact rational comparisons")
    p.set_defaults(func=cmd_arith_check)

    p = sub.add_parser("repro", help="run the reproduction battery")
    p.add_argument("--profile", choices=list(repro.PROFILES), default="quick")
    p.add_argument("--json", help="write the JSON report here")
    p.add_argument("--explore", action="store_true", help="add the exploratory tree to K(6,2) run")
    p.set_defaults(func=cmd_repro)
    return parser


BAD_INPUT = (BadParams, NotReduced, ShortOddCycle, DegreeTooHigh, Infeasible, PaletteTooSmall, ValueError)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except BAD_INPUT as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
