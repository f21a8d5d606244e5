import random
import pytest

from kneserhom.balls import (
    BallLabeling,
    automorphism_count,
    ball_labeling_count,
    ball_labeling_graph,
    enumerate_ball_labelings,
    full_ball_vertices,
    graph_to_ball_hom,
    labelings_adjacent,
    tree_to_ball_hom,
    truncated_tree,
)
from kneserhom.errors import BadParams, CapExceeded
from kneserhom.graph import cycle_graph, find_four_cycle, girth, odd_girth
from kneserhom.kneser import kneser_graph


@pytest.fixture(scope="module")
def H21():
    return ball_labeling_graph(2, 1)


@pytest.fixture(scope="module")
def H31():
    return ball_labeling_graph(3, 1)


def test_truncated_tree_examples():
    t = truncated_tree(2, 3, 1)
    assert t.graph.n == 7 and len(t.interior) == 5
    t = truncated_tree(3, 2, 1)
    assert t.graph.n == 10 and t.interior == frozenset({0, 1, 2, 3})
    t = truncated_tree(3, 6, 1)
    assert t.graph.n == 190 and girth(t.graph) == float("inf")
    assert t.graph.degree(0) == 3
    assert all(t.graph.degree(v) in (1, 3) for v in range(t.graph.n))
    with pytest.raises(BadParams):
        truncated_tree(3, 1, 2)
    with pytest.raises(CapExceeded):
        truncated_tree(3, 20, 1, cap=1000)


def test_counts():
    assert automorphism_count(3, 1) == 6
    assert ball_labeling_count(2, 1) == 12
    assert ball_labeling_count(3, 1) == 504
    # leaf set is unordered below a free root label
    assert ball_labeling_count(3, 1) == 9 * 56


def test_enumeration_is_canonical():
    labs = enumerate_ball_labelings(2, 1)
    assert len(labs) == 12 and len(set(labs)) == 12
    assert labs == sorted(labs)
    with pytest.raises(CapExceeded):
        enumerate_ball_labelings(3, 1, cap=100)


def test_from_form_validation():
    BallLabeling.from_form(2, 1, 4, (0, ((2, ()), (1, ()))))
    with pytest.raises(BadParams):
        BallLabeling.from_form(2, 1, 4, (0, ((0, ()), (1, ()))))
    with pytest.raises(BadParams):
        BallLabeling.from_form(2, 1, 4, (0, ((5, ()), (1, ()))))


def test_h21(H21):
    assert H21.graph.n == 12
    assert odd_girth(H21.graph) == 3
    assert find_four_cycle(H21.graph) is not None


def test_h31(H31):
    assert H31.graph.n == 504
    assert odd_girth(H31.graph) == 3
    assert find_four_cycle(H31.graph) is not None


def test_h21_adjacency_matches_pairwise_oracle(H21):
    vs = H21.vertices
    for i, a in enumerate(vs):
        for j, b in enumerate(vs):
            if i != j:
                assert H21.graph.has_edge(i, j) == labelings_adjacent(a, b)


def test_h31_adjacency_sampled_against_oracle(H31):
    rng = random.Random(3)
    vs = H31.vertices
    for _ in range(3000):
        i, j = rng.randrange(504), rng.randrange(504)
        if i != j:
            assert H31.graph.has_edge(i, j) == labelings_adjacent(vs[i], vs[j])


def test_h21_by_explicit_path_labelings(H21):
    # an edge v0 v1 inside a path labelled by a length-4 window: balls are the
    # two overlapping triples
    # labels need only be injective on each radius-1 ball
    expected = set()
    for x in range(4):
        for y in range(4):
            for z in range(4):
                for w in range(4):
                    if len({x, y, z}) == 3 and len({y, z, w}) == 3:
                        f0 = BallLabeling.from_form(2, 1, 4, (y, ((x, ()), (z, ()))))
                        f1 = BallLabeling.from_form(2, 1, 4, (z, ((y, ()), (w, ()))))
                        expected.add(frozenset({H21.index(f0), H21.index(f1)}))
    assert expected == {frozenset(e) for e in H21.graph.edges()}


def test_tree_homomorphisms(H21, H31):
    res = tree_to_ball_hom(3, 1, 6, ball_graph=H31)
    assert res.valid and res.tree.graph.n == 190 and res.interior_edges == len(res.tree.interior) - 1
    assert tree_to_ball_hom(2, 1, 4, ball_graph=H21).valid
    for depth in range(1, 8):
        assert tree_to_ball_hom(2, 1, depth, ball_graph=H21).valid
    for depth in range(1, 6):
        assert tree_to_ball_hom(3, 1, depth, ball_graph=H31).valid
    degenerate = tree_to_ball_hom(3, 1, 1, ball_graph=H31)
    assert degenerate.interior_edges == 0 and list(degenerate.mapping) == [0]


def test_ball_of_coloured_tree_is_injective(H31):
    res = tree_to_ball_hom(3, 1, 5, ball_graph=H31)
    for x in res.tree.interior:
        labels = [res.coloring.colors[v] for v in [x] + res.tree.graph.neighbors(x)]
        assert len(set(labels)) == len(labels)


def test_graph_to_ball_hom():
    H = ball_labeling_graph(3, 1, N=10)
    P = kneser_graph(5, 2).graph
    mapping = graph_to_ball_hom(P, 3, 1, ball_graph=H)
    assert sorted(mapping) == list(range(10))
    assert full_ball_vertices(cycle_graph(4), 2, 2) == []
    assert full_ball_vertices(cycle_graph(5), 2, 2) == [0, 1, 2, 3, 4]
