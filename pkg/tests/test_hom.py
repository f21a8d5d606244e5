from fractions import Fraction

import networkx as nx
import pytest
from hypothesis import given, settings

from kneserhom.errors import BudgetExhausted, CapExceeded, CertificateInvalid, SizeLimit
from kneserhom.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph, validate_homomorphism
from kneserhom.hom import (
    FoldColoring,
    FractionalResult,
    check_fractional_bound,
    chromatic_number,
    enumerate_maximal_independent_sets,
    find_homomorphism,
    fractional_chromatic_lp,
    independence_ratio,
    kfold_from_lp,
    optimal_coloring,
    verify_transitivity,
)
from kneserhom.kneser import kneser_graph, schrijver_graph, transitivity_certificate

from oracles import (
    brute_chromatic,
    brute_homomorphism_exists,
    brute_maximal_independent_sets,
    float_fractional_chromatic,
    graphs,
)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), graphs(min_n=1, max_n=4))
def test_homomorphism_search_matches_brute_force(source, target):
    found = find_homomorphism(source, target)
    assert (found is not None) == brute_homomorphism_exists(source, target)
    if found is not None:
        assert validate_homomorphism(source, target, found)


def test_odd_cycles_into_odd_cycles():
    for m in range(3, 12, 2):
        for q in range(3, 12, 2):
            assert (find_homomorphism(cycle_graph(m), cycle_graph(q)) is not None) == (m >= q)


def test_partial_assignment_is_respected():
    f = find_homomorphism(path_graph(3), complete_graph(3), partial={0: 2, 2: 1})
    assert f[0] == 2 and f[2] == 1 and f[1] == 0


def test_budget_exhausted_is_not_a_verdict():
    with pytest.raises(BudgetExhausted):
        find_homomorphism(kneser_graph(7, 2).graph, complete_graph(4), budget=5)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=7))
def test_chromatic_number_matches_brute_force(G):
    col = optimal_coloring(G)
    assert col.is_proper(G)
    assert col.num_colors == brute_chromatic(G)


def test_kneser_chromatic_numbers():
    expected = {(5, 2): 3, (6, 2): 4, (7, 2): 5, (7, 3): 3, (8, 3): 4}
    for (n, k), chi in expected.items():
        assert chromatic_number(kneser_graph(n, k).graph) == chi
        assert chromatic_number(schrijver_graph(n, k).graph) == chi


def test_petersen_not_two_colourable_independently():
    # oracle: networkx odd cycle detection
    P = kneser_graph(5, 2).graph
    H = nx.Graph(P.edges())
    assert not nx.is_bipartite(H)
    assert find_homomorphism(P, complete_graph(2)) is None


def test_chromatic_size_limit():
    with pytest.raises(SizeLimit):
        chromatic_number(empty_graph(10), limit=5)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=8))
def test_maximal_independent_sets_match_brute_force(G):
    assert enumerate_maximal_independent_sets(G) == brute_maximal_independent_sets(G)


def test_maximal_independent_sets_cap():
    with pytest.raises(CapExceeded):
        enumerate_maximal_independent_sets(Graph.from_edges(12, [(2 * i, 2 * i + 1) for i in range(6)]), cap=10)


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=7))
def test_fractional_lp_matches_float_solver(G):
    lp = fractional_chromatic_lp(G)
    assert abs(float(lp.value) - float_fractional_chromatic(G)) < 1e-9
    fold = lp.fold_coloring
    assert fold.is_valid(G)
    assert Fraction(fold.n, fold.k) == lp.value


def test_petersen_fractional():
    P = kneser_graph(5, 2).graph
    lp = fractional_chromatic_lp(P)
    assert lp.value == Fraction(5, 2)
    assert lp.fold_coloring.is_valid(P)
    assert Fraction(lp.fold_coloring.n, lp.fold_coloring.k) == Fraction(5, 2)


def test_fractional_kneser_small():
    for n, k in [(5, 1), (6, 2), (7, 2), (7, 3)]:
        G = kneser_graph(n, k).graph
        assert fractional_chromatic_lp(G).value == Fraction(n, k)


def test_fractional_bound_and_transitive_equality():
    kg = kneser_graph(6, 2)
    report = check_fractional_bound(kg.graph, transitivity_certificate(kg))
    assert report.ok and report.equality_holds and report.chi_frac == Fraction(3)
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    report = check_fractional_bound(star)
    assert report.bound_holds and report.chi_frac == 2 and report.inverse_alpha == Fraction(4, 3)


def test_transitivity_certificate_is_checked():
    G = path_graph(3)
    assert not verify_transitivity(G, [[2, 1, 0]])
    with pytest.raises(CertificateInvalid):
        check_fractional_bound(G, [[2, 1, 0]])


def test_independence_ratio():
    assert independence_ratio(cycle_graph(5)) == Fraction(2, 5)
    with pytest.raises(ValueError):
        independence_ratio(empty_graph(0))


def test_fold_colouring_violations():
    G = path_graph(2)
    bad = FoldColoring(3, 2, (frozenset({0, 1}), frozenset({1, 2})))
    assert bad.violations(G) == ["edge (0, 1) shares colours"]
    short = FoldColoring(3, 2, (frozenset({0}), frozenset({1, 2})))
    assert not short.is_valid(G)


def test_kfold_from_tampered_lp():
    G = cycle_graph(5)
    lp = fractional_chromatic_lp(G)
    weights = tuple(Fraction(1, 4) for _ in lp.weights)
    tampered = FractionalResult(lp.value, lp.independent_sets, weights, lp.clique_weights)
    with pytest.raises(CertificateInvalid):
        kfold_from_lp(G, tampered)


def test_fold_colouring_as_kneser_map():
    kg = kneser_graph(5, 2)
    lp = fractional_chromatic_lp(kg.graph)
    target = kneser_graph(lp.fold_coloring.n, lp.fold_coloring.k)
    mapping = lp.fold_coloring.as_kneser_map(target)
    assert validate_homomorphism(kg.graph, target.graph, mapping)
