"""Reduced words in the free product of d copies of Z/2.

A word is a tuple of generator indices; ``(2, 0)`` stands for a_2 a_0. Every
generator is an involution, so a word is reduced iff no two adjacent letters
are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .errors import BadParams, CapExceeded, NotReduced
from .graph import Graph

DEFAULT_WORD_CAP = 1_000_000

Word = tuple[int, ...]


def reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent equal letters until none remain (a stack pass is enough)."""
    out: list[int] = []
    for a in letters:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def is_reduced(word: Sequence[int]) -> bool:
    return all(a != b for a, b in zip(word, word[1:]))


def inverse(word: Sequence[int]) -> Word:
    return tuple(reversed(word))


def multiply(*words: Sequence[int]) -> Word:
    return reduce(a for w in words for a in w)


def parse_word(text: str) -> Word:
    """Parse the CLI syntax: comma-separated generator indices, e.g. ``"2,0"``."""
    text = text.strip()
    if not text:
        return ()
    try:
        word = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise BadParams(f"word must be comma-separated integers, got {text!r}") from None
    if any(x < 0 for x in word):
        raise BadParams(f"generator indices must be nonnegative, got {text!r}")
    return word


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"a_{a}" for a in word) if word else "1"


def _words_of_length(d: int, length: int):
    if length == 0:
        yield ()
        return
    for first in range(d):
        for rest in product(range(d - 1), repeat=length - 1):
            word = [first]
            for r in rest:
                # skip the previous letter
                word.append(r if r < word[-1] else r + 1)
            yield tuple(word)


def sphere_size(d: int, length: int) -> int:
    return 1 if length == 0 else d * (d - 1) ** (length - 1)


@dataclass(frozen=True)
class SphereSet:
    d: int
    l: int
    words: tuple[Word, ...]


def sphere(d: int, l: int, cap: int = DEFAULT_WORD_CAP) -> SphereSet:
    """All reduced words of length exactly ``l + 1``; there are d (d-1)^l of them."""
    if d < 1 or l < 0:
        raise BadParams(f"need d >= 1 and l >= 0, got d={d}, l={l}")
    size = sphere_size(d, l + 1)
    if size > cap:
        raise CapExceeded(f"sphere has {size} words, cap is {cap}")
    words = tuple(_words_of_length(d, l + 1))
    assert len(words) == size
    return SphereSet(d, l, words)


@dataclass(frozen=True)
class CayleyBall:
    graph: Graph
    words: tuple[Word, ...]

    def index(self, word: Sequence[int]) -> int:
        return self.words.index(tuple(word))


def cayley_ball(d: int, r: int, cap: int = DEFAULT_WORD_CAP) -> CayleyBall:
    """Ball of radius ``r`` in the Cayley graph, edges ``w -- w a_i`` labelled ``i``."""
    if d < 2 or r < 0:
        raise BadParams(f"need d >= 2 and r >= 0, got d={d}, r={r}")
    total = sum(sphere_size(d, j) for j in range(r + 1))
    if total > cap:
        raise CapExceeded(f"ball has {total} words, cap is {cap}")
    words = [w for j in range(r + 1) for w in _words_of_length(d, j)]
    index = {w: i for i, w in enumerate(words)}
    edges = []
    labels = {}
    for w, i in index.items():
        if w:
            parent = index[w[:-1]]
            edges.append((parent, i))
            labels[(min(parent, i), max(parent, i))] = w[-1]
    return CayleyBall(Graph.from_edges(len(words), edges, labels), tuple(words))


def sigma_word(tau: Sequence[int]) -> Word:
    """The reduced form of tau a_{i_l} tau^{-1}, where i_l is tau's last letter."""
    tau = tuple(tau)
    if not tau:
        raise BadParams("tau must be nonempty")
    if not is_reduced(tau):
        raise NotReduced(f"{tau} is not reduced")
    return multiply(tau, (tau[-1],), inverse(tau))


def sigma_circuit(tau: Sequence[int]) -> list[Word]:
    """Suffix chain sigma_0 = 1, ..., sigma_{2l+1} = sigma of the conjugate word.

    ``sigma_j`` is the word of the ``j`` rightmost letters of sigma, so
    ``sigma_{j+1} = a sigma_j`` for one generator ``a``: the chain walks the
    left-multiplication Cayley graph, and its inverses walk the usual
    right-multiplication one.
    """
    sigma = sigma_word(tau)
    return [sigma[len(sigma) - j:] if j else () for j in range(len(sigma) + 1)]


def is_cayley_path(words: Sequence[Sequence[int]], side: str = "left") -> bool:
    """True iff consecutive words differ by one generator on the given side."""
    for a, b in zip(words, words[1:]):
        a, b = tuple(a), tuple(b)
        if not (is_reduced(a) and is_reduced(b)):
            return False
        if side == "left":
            ok = (len(b) == len(a) + 1 and b[1:] == a) or (len(a) == len(b) + 1 and a[1:] == b)
        else:
            ok = (len(b) == len(a) + 1 and b[:-1] == a) or (len(a) == len(b) + 1 and a[:-1] == b)
        if not ok:
            return False
    return True
