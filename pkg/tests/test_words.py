import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kneserhom.errors import BadParams, CapExceeded, NotReduced
from kneserhom.graph import girth
from kneserhom.words import (
    cayley_ball,
    format_word,
    inverse,
    is_cayley_path,
    is_reduced,
    multiply,
    parse_word,
    reduce,
    sigma_circuit,
    sigma_word,
    sphere,
)

letters = st.lists(st.integers(0, 3), max_size=12)


def test_reduce_examples():
    assert reduce([0, 0]) == ()
    assert reduce([0, 1, 1, 0]) == ()
    assert reduce([0, 1, 0]) == (0, 1, 0)


@given(letters)
def test_reduce_idempotent_and_shorter(word):
    r = reduce(word)
    assert is_reduced(r) and reduce(r) == r and len(r) <= len(word)
    assert (len(word) - len(r)) % 2 == 0


@given(letters, letters)
def test_group_laws(a, b):
    a, b = reduce(a), reduce(b)
    assert multiply(a, inverse(a)) == ()
    assert inverse(multiply(a, b)) == multiply(inverse(b), inverse(a))


def test_parse_and_format():
    assert parse_word("2,0") == (2, 0)
    assert parse_word("") == ()
    assert format_word((2, 0)) == "a_2 a_0"
    with pytest.raises(BadParams):
        parse_word("a,b")


def test_sphere_examples():
    assert sphere(3, 0).words == ((0,), (1,), (2,))
    assert len(sphere(3, 1).words) == 6
    assert len(sphere(4, 3).words) == 108
    with pytest.raises(CapExceeded):
        sphere(5, 12, cap=1000)


@pytest.mark.parametrize("d", [2, 3, 4, 5])
def test_sphere_sizes(d):
    for l in range(7):
        s = sphere(d, l, cap=10**6)
        assert len(s.words) == d * (d - 1) ** l == len(set(s.words))
        assert all(is_reduced(w) and len(w) == l + 1 for w in s.words)


def test_cayley_ball_examples():
    star = cayley_ball(3, 1)
    assert star.graph.n == 4 and sorted(star.graph.edge_labels.values()) == [0, 1, 2]
    line = cayley_ball(2, 3)
    assert line.graph.n == 7 and line.graph.num_edges == 6 and line.graph.max_degree() == 2
    assert cayley_ball(3, 2).graph.n == 10
    assert girth(cayley_ball(3, 4).graph) == float("inf")


def test_cayley_edges_are_right_multiplication():
    cb = cayley_ball(3, 3)
    for u, v in cb.graph.edges():
        a, b = cb.words[u], cb.words[v]
        assert multiply(a, (cb.graph.label(u, v),)) == b


def test_sigma_examples():
    assert sigma_word((2,)) == (2,)
    assert sigma_circuit((2,)) == [(), (2,)]
    assert sigma_word((2, 0)) == (2, 0, 2)
    assert sigma_circuit((2, 0)) == [(), (2,), (0, 2), (2, 0, 2)]
    with pytest.raises(NotReduced):
        sigma_word((1, 1))


@settings(max_examples=200)
@given(st.integers(2, 4).flatmap(lambda d: st.lists(st.integers(0, d - 1), min_size=1, max_size=6)))
def test_sigma_properties(word):
    tau = reduce(word)
    if not tau:
        return
    s = sigma_word(tau)
    chain = sigma_circuit(tau)
    assert is_reduced(s) and len(s) == 2 * len(tau) - 1
    assert len(chain) == len(s) + 1 and chain[0] == () and chain[-1] == s
    assert is_cayley_path(chain)
    assert is_cayley_path([inverse(w) for w in chain], side="right")


def test_cayley_path_rejects_jumps():
    assert not is_cayley_path([(), (0, 1)])
