"""Reproduction battery: one check per reproducible claim, in a fixed order.

``quick`` trims parameter ranges so the whole run takes a few seconds;
``full`` uses the complete ranges.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from math import comb
from typing import Callable

from .balls import ball_labeling_count, ball_labeling_graph, tree_to_ball_hom, truncated_tree
from .certificates import (
    Check,
    corollary14_arithmetic,
    corollary_witness_search,
    hyperfinite_witness_check,
    reverify_with_mpmath,
    schrijver_witness_values,
)
from .errors import BudgetExhausted
from .g0 import build_dense_family, check_involution, check_prefix_determination
from .graph import complete_graph, cycle_graph, find_four_cycle, odd_girth, validate_homomorphism
from .hom import chromatic_number, check_fractional_bound, find_homomorphism, fractional_chromatic_lp
from .kfold import kfold_color_pipeline
from .kneser import (
    canonical_kneser_coloring,
    kneser_graph,
    kneser_odd_girth_formula,
    schrijver_graph,
    schrijver_vertex_count,
    transitivity_certificate,
)
from .samples import random_forest, random_graph_with_odd_girth
from .words import is_cayley_path, is_reduced, sigma_circuit, sigma_word, sphere, _words_of_length

PROFILES = ("quick", "full")


def _kneser_pairs(n_max: int, k_max: int):
    for n in range(3, n_max + 1):
        for k in range(1, k_max + 1):
            if 2 * k < n:
                yield n, k


def check_odd_girth(profile: str) -> Check:
    n_max = 12 if profile == "full" else 9
    bad = []
    count = 0
    for n, k in _kneser_pairs(n_max, 5):
        count += 1
        got = odd_girth(kneser_graph(n, k).graph)
        if got != kneser_odd_girth_formula(n, k):
            bad.append([n, k, got])
    return Check("odd girth formula", not bad, {"pairs": count, "mismatches": bad})


def check_chromatic(profile: str) -> Check:
    expected = {(5, 2): 3, (6, 2): 4, (7, 2): 5, (7, 3): 3, (8, 3): 4}
    got = {f"{n},{k}": chromatic_number(kneser_graph(n, k).graph) for n, k in expected}
    exact_ok = all(got[f"{n},{k}"] == v for (n, k), v in expected.items())
    n_max, k_max = (14, 6) if profile == "full" else (10, 4)
    improper = []
    for n, k in _kneser_pairs(n_max, k_max):
        kg = kneser_graph(n, k)
        col = canonical_kneser_coloring(n, k, kg)
        if not col.is_proper(kg.graph) or col.num_colors != n - 2 * k + 2:
            improper.append([n, k])
    return Check("chromatic formula", exact_ok and not improper, {"exact": got, "canonical_failures": improper})


def check_schrijver(profile: str) -> Check:
    n_max = 20 if profile == "full" else 14
    miscount = []
    for n, k in _kneser_pairs(n_max, 8):
        got = schrijver_graph(n, k).graph.n
        if got != schrijver_vertex_count(n, k):
            miscount.append([n, k, got])
    not_cycle = []
    for k in range(1, 9):
        G = schrijver_graph(2 * k + 1, k).graph
        if not (G.n == 2 * k + 1 and all(G.degree(v) == 2 for v in range(G.n)) and odd_girth(G) == 2 * k + 1):
            not_cycle.append(k)
    chi = {}
    for n, k in [(5, 2), (6, 2), (7, 2), (8, 3)]:
        chi[f"{n},{k}"] = [chromatic_number(schrijver_graph(n, k).graph), chromatic_number(kneser_graph(n, k).graph)]
    ok = not miscount and not not_cycle and all(a == b for a, b in chi.values())
    return Check("schrijver graphs", ok, {"miscounts": miscount, "non_cycles": not_cycle, "chi": chi})


def fractional_corpus(profile: str):
    """(name, graph, automorphisms or None) triples."""
    rng = random.Random(7)
    out = []
    for n, k in _kneser_pairs(12, 5):
        if comb(n, k) <= (40 if profile == "full" else 21):
            kg = kneser_graph(n, k)
            out.append((f"K({n},{k})", kg.graph, transitivity_certificate(kg)))
    for m in range(3, 10):
        rot = [[(i + 1) % m for i in range(m)], [(-i) % m for i in range(m)]]
        out.append((f"C{m}", cycle_graph(m), rot))
    for n, k in [(5, 2), (7, 2), (7, 3)]:
        out.append((f"K'({n},{k})", schrijver_graph(n, k).graph, None))
    for t in range(6 if profile == "full" else 3):
        out.append((f"random{t}", random_graph_with_odd_girth(12, 3, 3, rng), None))
    return out


def check_fractional(profile: str) -> Check:
    petersen = fractional_chromatic_lp(kneser_graph(5, 2).graph).value
    wrong = []
    for n, k in _kneser_pairs(12, 5):
        if comb(n, k) <= (40 if profile == "full" else 21):
            val = fractional_chromatic_lp(kneser_graph(n, k).graph).value
            if val != Fraction(n, k):
                wrong.append([n, k, str(val)])
    failures = []
    for name, G, autos in fractional_corpus(profile):
        report = check_fractional_bound(G, autos)
        if not report.ok:
            failures.append([name, report.as_dict()])
    ok = petersen == Fraction(5, 2) and not wrong and not failures
    return Check("fractional chromatic", ok, {"petersen": str(petersen), "kneser_mismatches": wrong, "bound_failures": failures})


def check_ball_graph(profile: str) -> Check:
    details = {}
    ok = True
    for d, depth in [(2, 4), (3, 6)]:
        H = ball_labeling_graph(d, 1)
        hom = tree_to_ball_hom(d, 1, depth, ball_graph=H)
        info = {
            "vertices": H.graph.n,
            "expected": ball_labeling_count(d, 1),
            "odd_girth": odd_girth(H.graph),
            "four_cycle": find_four_cycle(H.graph) is not None,
            "tree_hom_valid": hom.valid,
            "interior_edges": hom.interior_edges,
        }
        details[f"H({d},1)"] = info
        ok &= info["vertices"] == {2: 12, 3: 504}[d] == info["expected"]
        ok &= info["odd_girth"] == 3 and info["four_cycle"] and hom.valid
    return Check("ball labeling graph", bool(ok), details)


def check_kfold(profile: str) -> Check:
    rng = random.Random(2024)
    n_forests, n_graphs = (200, 50) if profile == "full" else (40, 10)
    failures = []
    for t in range(n_forests):
        G = random_forest(rng.randrange(1, 40), 3, rng)
        k = 1 + t % 3
        if not kfold_color_pipeline(G, 3, k).is_valid(G):
            failures.append(["forest", t])
    for t in range(n_graphs):
        d, k = 3 + t % 2, 1 + (t // 2) % 3
        G = random_graph_with_odd_girth(rng.randrange(10, 50), d, 2 * k + 1, rng)
        fold = kfold_color_pipeline(G, d, k)
        if not fold.is_valid(G) or fold.n != d * k + 1:
            failures.append(["graph", t])
    return Check("k-fold pipeline", not failures, {"forests": n_forests, "graphs": n_graphs, "failures": failures})


def check_words(profile: str) -> Check:
    l_max = 8 if profile == "full" else 5
    bad_sizes = []
    for d in range(2, 6):
        for l in range(l_max + 1):
            if d == 5 and l > 6 and profile != "full":
                continue
            s = sphere(d, l, cap=10**6)
            if len(s.words) != d * (d - 1) ** l:
                bad_sizes.append([d, l])
    bad_sigma = 0
    total = 0
    for d in range(2, 5):
        for l in range((5 if profile == "full" else 3) + 1):
            for tau in _words_of_length(d, l + 1):
                total += 1
                s = sigma_word(tau)
                chain = sigma_circuit(tau)
                if not (is_reduced(s) and len(s) == 2 * l + 1 and len(chain) == 2 * l + 2 and is_cayley_path(chain)):
                    bad_sigma += 1
    return Check("word combinatorics", not bad_sizes and not bad_sigma,
                 {"sphere_failures": bad_sizes, "sigma_checked": total, "sigma_failures": bad_sigma})


def check_g0(profile: str) -> Check:
    L = 16 if profile == "full" else 12
    fam = build_dense_family(L, 3, seed=0)
    details = {
        "L": L,
        "involution_failures": check_involution(fam, 3),
        "prefix_failures": check_prefix_determination(fam, 3),
    }
    return Check("bit-flip involutions", not any(details[k] for k in details if k != "L"), details)


def check_witnesses(profile: str) -> Check:
    kd = {d: hyperfinite_witness_check(complete_graph(d), d).as_dict() for d in range(3, 9)}
    kd_ok = all(r["verdict"] and r["best_l"] == 0 for r in kd.values())
    res = corollary_witness_search(3, 2, 64)
    again = reverify_with_mpmath(3, 2, res.k_min)
    before = reverify_with_mpmath(3, 2, res.k_min - 2)
    exact_before = schrijver_witness_values(3, 2, res.k_min - 2)
    ok = kd_ok and again["size_ok"] and again["girth_ok"] and not before["size_ok"] and not exact_before["size_ok"]
    return Check("witness certificates", ok, {"k_min": res.k_min, "certificate": res.certificate,
                                              "mpmath": again, "previous_k": before})


def check_arithmetic(profile: str) -> Check:
    checks = corollary14_arithmetic()
    return Check("rational arithmetic", all(c.passed for c in checks), {c.name: c.passed for c in checks})


def explore_tree_to_k62(profile: str, budget: int = 20_000) -> Check:
    """Exploration only: map truncated 3-regular trees into K(6,2)."""
    target = kneser_graph(6, 2).graph
    results = {}
    for depth in range(1, (6 if profile == "full" else 4) + 1):
        tree = truncated_tree(3, depth).graph
        try:
            found = find_homomorphism(tree, target, budget=budget)
            results[depth] = found is not None and validate_homomorphism(tree, target, found)
        except BudgetExhausted:
            results[depth] = "budget"
    return Check("explore: trees to K(6,2)", True, {"depths": results, "asserted": False})


CRITERIA: list[Callable[[str], Check]] = [
    check_odd_girth,
    check_chromatic,
    check_schrijver,
    check_fractional,
    check_ball_graph,
    check_kfold,
    check_words,
    check_g0,
    check_witnesses,
    check_arithmetic,
]


def run_reproduction_suite(profile: str = "quick", explore: bool = False) -> dict:
    if profile not in PROFILES:
        raise ValueError(f"profile must be one of {PROFILES}, got {profile!r}")
    checks = []
    for fn in CRITERIA + ([explore_tree_to_k62] if explore else []):
        start = time.perf_counter()
        try:
            result = fn(profile).as_dict()
        except Exception as exc:  # a crash is a failed check, reported like one
            result = {"name": fn.__name__, "status": "fail", "details": {"error": repr(exc)}}
        result["details"]["seconds"] = round(time.perf_counter() - start, 3)
        checks.append(result)
    return {"profile": profile, "checks": checks}


def format_table(report: dict) -> str:
    width = max(len(c["name"]) for c in report["checks"])
    lines = [f"{'check':<{width}}  status  seconds"]
    for c in report["checks"]:
        lines.append(f"{c['name']:<{width}}  {c['status']:<6}  {c['details'].get('seconds', 0):>7.2f}")
    return "\n".join(lines)
