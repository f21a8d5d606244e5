import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserhom.errors import Infeasible
from kneserhom.g0 import (
    alpha,
    bits_to_int,
    build_dense_family,
    check_density,
    check_involution,
    check_labels,
    check_prefix_determination,
    flip_map,
    g0_edges_at_depth,
    int_to_bits,
    witnesses,
)


def test_family_examples():
    fam = build_dense_family(4, 1)
    assert set(fam.labels) == {0} and check_density(fam)
    fam = build_dense_family(16, 3, seed=0)
    assert fam.depth == 2 and check_density(fam)
    assert all(s >> n == 0 for n, s in enumerate(fam.strings))
    with pytest.raises(Infeasible):
        build_dense_family(2, 3)
    with pytest.raises(Infeasible):
        build_dense_family(16, 3, depth=3)


def test_family_is_seed_deterministic():
    assert build_dense_family(14, 2, seed=5) == build_dense_family(14, 2, seed=5)


def test_bit_strings():
    assert bits_to_int("0110") == 6
    assert int_to_bits(6, 4) == "0110"


def test_edges_and_flips():
    fam = build_dense_family(10, 2, seed=1)
    x = 0b1011001110
    edges = g0_edges_at_depth(fam, x)
    assert edges and edges[0].position == 0
    for e in edges:
        assert e.x ^ e.y == 1 << e.position and alpha(fam, e.x, e.y) == e.label
    for i in range(2):
        wit = witnesses(fam, i, x)
        assert flip_map(fam, i, len(wit), x) is None
        for m, n in enumerate(wit):
            assert flip_map(fam, i, m, x) == x ^ (1 << n)


def test_label_scan_at_twelve():
    fam = build_dense_family(12, 3, seed=0)
    assert check_labels(fam) == {"asymmetric": 0, "mislabelled": 0, "missing_labels": []}


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 2**32), st.integers(1, 3))
def test_involution_for_any_seed(seed, d):
    fam = build_dense_family(10, d, seed=seed)
    assert check_density(fam)
    assert check_involution(fam) == 0
    assert check_prefix_determination(fam) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**24 - 1), st.integers(0, 2), st.integers(0, 6))
def test_involution_sampled_at_24(x, i, m):
    fam = build_dense_family(24, 3, seed=9)
    y = flip_map(fam, i, m, x)
    if y is not None:
        assert flip_map(fam, i, m, y) == x
