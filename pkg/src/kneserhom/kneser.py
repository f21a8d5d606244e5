"""Kneser graphs K(n,k), Schrijver graphs K'(n,k), and their closed forms.

Vertices are k-subsets of ``{0..n-1}`` listed in colexicographic order, so
vertex ``i`` of ``kneser_graph(n, k)`` is the subset of combinadic rank ``i``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import BadParams, CapExceeded
from .graph import Coloring, Graph, iter_bits

DEFAULT_VERTEX_CAP = 100_000


def vertex_cap() -> int:
    return int(os.environ.get("KNESERHOM_VERTEX_CAP", DEFAULT_VERTEX_CAP))


def rank_subset(members: Iterable[int]) -> int:
    """Colex rank of a subset: sum of C(c_i, i+1) over its sorted elements."""
    return sum(comb(c, i + 1) for i, c in enumerate(sorted(members)))


def unrank_subset(rank: int, n: int, k: int) -> tuple[int, ...]:
    if not 0 <= rank < comb(n, k):
        raise BadParams(f"rank {rank} out of range for C({n},{k})")
    out = []
    c = n - 1
    for i in range(k, 0, -1):
        while comb(c, i) > rank:
            c -= 1
        out.append(c)
        rank -= comb(c, i)
        c -= 1
    return tuple(reversed(out))


@dataclass(frozen=True, order=True)
class KSubset:
    n: int
    k: int
    members: tuple[int, ...]

    def __post_init__(self):
        if len(self.members) != self.k or len(set(self.members)) != self.k:
            raise BadParams(f"{self.members} is not a {self.k}-subset")
        if any(not 0 <= x < self.n for x in self.members):
            raise BadParams(f"{self.members} not inside 0..{self.n - 1}")
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @classmethod
    def from_rank(cls, rank: int, n: int, k: int) -> "KSubset":
        return cls(n, k, unrank_subset(rank, n, k))

    @property
    def rank(self) -> int:
        return rank_subset(self.members)

    @property
    def mask(self) -> int:
        return sum(1 << x for x in self.members)

    def is_stable(self) -> bool:
        return is_cyclically_stable(self.members, self.n)


def is_cyclically_stable(members: Sequence[int], n: int) -> bool:
    s = set(members)
    return not any((x + 1) % n in s for x in s) if n > 1 else True


@dataclass(frozen=True)
class SubsetGraph:
    """A graph whose vertex ``i`` is the subset ``subsets[i]``."""

    graph: Graph
    n: int
    k: int
    subsets: tuple[tuple[int, ...], ...]

    def index(self, members: Iterable[int]) -> int:
        key = tuple(sorted(members))
        try:
            return self._index[key]
        except AttributeError:
            object.__setattr__(self, "_index", {s: i for i, s in enumerate(self.subsets)})
            return self._index[key]

    def subset(self, v: int) -> KSubset:
        return KSubset(self.n, self.k, self.subsets[v])


def _check_params(n: int, k: int, allow_degenerate: bool = False) -> None:
    if k < 1 or n < 1:
        raise BadParams(f"need n, k >= 1, got n={n}, k={k}")
    if n < 2 * k and not (allow_degenerate and k <= n):
        raise BadParams(f"need n >= 2k, got n={n}, k={k}")


def kneser_graph(n: int, k: int, cap: int | None = None, allow_degenerate: bool = False) -> SubsetGraph:
    """K(n,k): k-subsets of ``{0..n-1}``, adjacent iff disjoint.

    With ``allow_degenerate`` the edgeless graph for ``k <= n < 2k`` is returned
    instead of raising.
    """
    _check_params(n, k, allow_degenerate)
    cap = vertex_cap() if cap is None else cap
    size = comb(n, k)
    if size > cap:
        raise CapExceeded(f"K({n},{k}) has {size} vertices, cap is {cap}")
    subsets = [unrank_subset(r, n, k) for r in range(size)]
    adj = [0] * size
    if n >= 2 * k:
        for r, members in enumerate(subsets):
            rest = [x for x in range(n) if x not in members]
            row = 0
            for other in combinations(rest, k):
                row |= 1 << rank_subset(other)
            adj[r] = row
    return SubsetGraph(Graph(size, adj), n, k, tuple(subsets))


def _stable_subsets(n: int, k: int) -> list[tuple[int, ...]]:
    out = []

    def extend(prefix: list[int], nxt: int) -> None:
        if len(prefix) == k:
            if not (k > 1 and prefix[0] == 0 and prefix[-1] == n - 1):
                out.append(tuple(prefix))
            return
        for x in range(nxt, n - 2 * (k - len(prefix) - 1)):
            prefix.append(x)
            extend(prefix, x + 2)
            prefix.pop()

    extend([], 0)
    out.sort(key=rank_subset)
    return out


def schrijver_graph(n: int, k: int, cap: int | None = None) -> SubsetGraph:
    """K'(n,k): the induced subgraph of K(n,k) on cyclically stable sets."""
    _check_params(n, k)
    cap = vertex_cap() if cap is None else cap
    subsets = _stable_subsets(n, k)
    if len(subsets) > cap:
        raise CapExceeded(f"K'({n},{k}) has {len(subsets)} vertices, cap is {cap}")
    masks = [sum(1 << x for x in s) for s in subsets]
    adj = [0] * len(masks)
    for i, a in enumerate(masks):
        for j in range(i + 1, len(masks)):
            if not a & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return SubsetGraph(Graph(len(masks), adj), n, k, tuple(subsets))


def schrijver_vertex_count(n: int, k: int) -> int:
    """|V(K'(n,k))| = (n/k) C(n-k-1, k-1) for n > 2k; 2 when n = 2k."""
    _check_params(n, k)
    if n == 2 * k:
        return 2
    num = n * comb(n - k - 1, k - 1)
    assert num % k == 0
    return num // k


def kneser_odd_girth_formula(n: int, k: int) -> int:
    if k < 1 or n <= 2 * k:
        raise BadParams(f"odd girth formula needs n > 2k, got n={n}, k={k}")
    return 1 + 2 * -(-k // (n - 2 * k))


def kneser_chromatic_formula(n: int, k: int) -> int:
    _check_params(n, k)
    return n - 2 * k + 2


def fractional_chromatic_formula_kneser(n: int, k: int) -> Fraction:
    _check_params(n, k)
    return Fraction(n, k)


def canonical_kneser_coloring(n: int, k: int, kg: SubsetGraph | None = None) -> Coloring:
    """Colour A by ``min(min(A), n-2k+1)`` using n-2k+2 colours.

    The last class collects the sets inside the top 2k-1 points, which pairwise
    intersect.
    """
    _check_params(n, k)
    kg = kneser_graph(n, k) if kg is None else kg
    top = n - 2 * k + 1
    return Coloring(tuple(min(s[0], top) for s in kg.subsets), top + 1)


def permutation_action(kg: SubsetGraph, perm: Sequence[int]) -> list[int]:
    """Vertex map induced on subsets by a permutation of the ground set."""
    return [kg.index(perm[x] for x in s) for s in kg.subsets]


def symmetric_group_generators(n: int) -> list[list[int]]:
    """The transposition (0 1) and the n-cycle, which generate S_n."""
    gens = [[(i + 1) % n for i in range(n)]]
    if n > 1:
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        gens.append(swap)
    return gens


def orbit(vertex_maps: Sequence[Sequence[int]], start: int) -> frozenset[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for m in vertex_maps:
            w = m[v]
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def is_automorphism(graph: Graph, mapping: Sequence[int]) -> bool:
    if sorted(mapping) != list(range(graph.n)):
        return False
    return all(graph.has_edge(mapping[u], mapping[v]) for u, v in graph.edges())


def transitivity_certificate(kg: SubsetGraph) -> list[list[int]]:
    """Automorphisms from the symmetric-group action; their orbit of 0 is everything.

    Raises ``ValueError`` when the supplied family does not act transitively,
    e.g. on Schrijver graphs.
    """
    try:
        maps = [permutation_action(kg, g) for g in symmetric_group_generators(kg.n)]
    except KeyError:
        raise ValueError("family is not closed under the symmetric group") from None
    if not all(is_automorphism(kg.graph, m) for m in maps):
        raise ValueError("generator does not induce an automorphism")
    if len(orbit(maps, 0)) != kg.graph.n:
        raise ValueError("action is not vertex-transitive")
    return maps


def members_of(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))
