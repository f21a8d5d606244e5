"""Finite simple graphs with bitmask adjacency rows, plus the baseline exact
algorithms the rest of the package is built on.

Vertex sets are plain Python ints used as bitmasks internally; public
functions return ``frozenset`` objects so callers never have to care.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import PaletteTooSmall, SizeLimit

INFINITE = math.inf

DEFAULT_SEARCH_LIMIT = 64


def iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable undirected simple graph on vertices ``0..n-1``.

    ``adj[v]`` is an int whose set bits are the neighbours of ``v``.
    ``edge_labels`` maps ``(u, v)`` with ``u < v`` to a small int.
    """

    __slots__ = ("_n", "_adj", "_labels")

    def __init__(self, n: int, adj: Sequence[int], edge_labels: Mapping | None = None):
        if n < 0 or len(adj) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
        adj = tuple(int(row) for row in adj)
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"row {v} references a vertex outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at {v}")
            for u in iter_bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        labels = {}
        for (u, v), lab in dict(edge_labels or {}).items():
            key = _edge_key(int(u), int(v))
            if not (0 <= key[0] < n and key[1] < n and adj[key[0]] >> key[1] & 1):
                raise ValueError(f"label on non-edge {key}")
            labels[key] = int(lab)
        object.__setattr__(self, "_n", n)
        object.__setattr__(self, "_adj", adj)
        object.__setattr__(self, "_labels", MappingProxyType(labels))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], labels: Mapping | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        return self._adj

    @property
    def edge_labels(self) -> Mapping[tuple[int, int], int]:
        return self._labels

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj and dict(self._labels) == dict(other._labels)

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self.num_edges})"

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self._adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return popcount(self._adj[v])

    def max_degree(self) -> int:
        return max((popcount(row) for row in self._adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u, row in enumerate(self._adj):
            for v in iter_bits(row >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(popcount(row) for row in self._adj) // 2

    def label(self, u: int, v: int) -> int | None:
        return self._labels.get(_edge_key(u, v))

    def induced_subgraph(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Return the induced subgraph and the list mapping new index -> old vertex."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        mask = to_mask(keep)
        adj = []
        for v in keep:
            adj.append(to_mask(index[u] for u in iter_bits(self._adj[v] & mask)))
        labels = {
            (index[u], index[v]): lab
            for (u, v), lab in self._labels.items()
            if u in index and v in index
        }
        return Graph(len(keep), adj, labels), keep


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges())
        offset += g.n
    return Graph.from_edges(offset, edges)


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    palette_size: int

    def is_proper(self, graph: Graph) -> bool:
        if len(self.colors) != graph.n:
            return False
        if any(not 0 <= c < self.palette_size for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in graph.edges())

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> list[frozenset[int]]:
        buckets: list[set[int]] = [set() for _ in range(self.palette_size)]
        for v, c in enumerate(self.colors):
            buckets[c].add(v)
        return [frozenset(b) for b in buckets]


def _layers(graph: Graph, root: int, max_depth: float = INFINITE):
    """Yield BFS layers (as bitmasks) from ``root``."""
    adj = graph.adj
    layer = 1 << root
    seen = layer
    depth = 0
    while layer:
        yield layer
        if depth >= max_depth:
            return
        nxt = 0
        for u in iter_bits(layer):
            nxt |= adj[u]
        nxt &= ~seen
        seen |= nxt
        layer = nxt
        depth += 1


def odd_girth(graph: Graph) -> float | int:
    """Length of a shortest odd cycle, or ``INFINITE`` for bipartite graphs.

    From each root, the first BFS layer containing an internal edge closes an
    odd walk of length ``2 t + 1``; the minimum over roots is the odd girth.
    """
    adj = graph.adj
    best = INFINITE
    for root in range(graph.n):
        for t, layer in enumerate(_layers(graph, root)):
            if 2 * t + 1 >= best:
                break
            if any(adj[u] & layer for u in iter_bits(layer)):
                best = 2 * t + 1
                break
        if best == 3:
            break
    return best


def girth(graph: Graph) -> float | int:
    adj = graph.adj
    best = INFINITE
    for root in range(graph.n):
        prev = 0
        for t, layer in enumerate(_layers(graph, root)):
            if 2 * t >= best:
                break
            # two shortest paths from root meet at w
            if t > 0 and any(popcount(adj[w] & prev) >= 2 for w in iter_bits(layer)):
                best = 2 * t
                break
            if 2 * t + 1 < best and any(adj[u] & layer for u in iter_bits(layer)):
                best = 2 * t + 1
                break
            prev = layer
        if best == 3:
            break
    return best


def is_bipartite(graph: Graph) -> bool:
    side = [-1] * graph.n
    for s in range(graph.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in iter_bits(graph.adj[u]):
                if side[w] < 0:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return False
    return True


def distances_from(graph: Graph, root: int) -> list[float]:
    dist = [INFINITE] * graph.n
    for t, layer in enumerate(_layers(graph, root)):
        for v in iter_bits(layer):
            dist[v] = t
    return dist


def ball(graph: Graph, v: int, radius: int) -> int:
    """Bitmask of vertices within ``radius`` of ``v``."""
    out = 0
    for layer in _layers(graph, v, radius):
        out |= layer
    return out


def power_graph(graph: Graph, r: int) -> Graph:
    if r < 1:
        raise ValueError("radius must be positive")
    adj = [ball(graph, v, r) & ~(1 << v) for v in range(graph.n)]
    return Graph(graph.n, adj)


def greedy_coloring(graph: Graph, order: Sequence[int] | None = None, palette: int | None = None) -> Coloring:
    """First-fit colouring along ``order`` using colours ``0..palette-1``.

    ``palette`` defaults to ``max_degree + 1``, which always suffices. A smaller
    palette is allowed; :class:`PaletteTooSmall` is raised only if first-fit
    actually runs out.
    """
    if palette is None:
        palette = graph.max_degree() + 1
    order = range(graph.n) if order is None else order
    _check_permutation(order, graph.n)
    colors = [-1] * graph.n
    for v in order:
        used = {colors[u] for u in iter_bits(graph.adj[v])}
        c = 0
        while c in used:
            c += 1
        if c >= palette:
            raise PaletteTooSmall(f"vertex {v} needs colour {c} but palette is {palette}")
        colors[v] = c
    return Coloring(tuple(colors), max(palette, 1 if graph.n else 0))


def _check_permutation(order: Sequence[int], n: int) -> None:
    if sorted(order) != list(range(n)):
        raise ValueError("order must be a permutation of the vertices")


def maximal_independent_set(
    graph: Graph, active: Iterable[int] | int | None = None, order: Sequence[int] | None = None
) -> frozenset[int]:
    """Greedy inclusion-maximal independent subset of ``active`` (all vertices by default)."""
    active = (1 << graph.n) - 1 if active is None else to_mask(active)
    order = range(graph.n) if order is None else order
    chosen = 0
    blocked = ~active
    for v in order:
        if blocked >> v & 1:
            continue
        chosen |= 1 << v
        blocked |= graph.adj[v] | (1 << v)
    return frozenset(iter_bits(chosen))


def maximum_independent_set(graph: Graph, limit: int = DEFAULT_SEARCH_LIMIT) -> frozenset[int]:
    """Exact maximum independent set by branch and bound over bitmasks."""
    if graph.n > limit:
        raise SizeLimit(f"exact independence search limited to {limit} vertices, got {graph.n}")
    adj = graph.adj
    best = [0, 0]  # size, mask

    def search(cand: int, chosen: int, size: int) -> None:
        # vertices of degree <= 1 inside cand can always be taken
        while True:
            forced = 0
            for v in iter_bits(cand):
                if popcount(adj[v] & cand) <= 1:
                    forced = v
                    break
            else:
                break
            chosen |= 1 << forced
            size += 1
            cand &= ~(adj[forced] | (1 << forced))
        if not cand:
            if size > best[0]:
                best[0], best[1] = size, chosen
            return
        if size + _greedy_clique_cover_bound(adj, cand) <= best[0]:
            return
        pivot = max(iter_bits(cand), key=lambda v: popcount(adj[v] & cand))
        search(cand & ~(adj[pivot] | (1 << pivot)), chosen | (1 << pivot), size + 1)
        search(cand & ~(1 << pivot), chosen, size)

    search((1 << graph.n) - 1, 0, 0)
    return frozenset(iter_bits(best[1]))


def _greedy_clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    """Number of cliques in a greedy clique cover of ``cand``; bounds alpha from above."""
    count = 0
    rest = cand
    while rest:
        v = (rest & -rest).bit_length() - 1
        clique = 1 << v
        common = adj[v] & rest
        while common:
            u = (common & -common).bit_length() - 1
            clique |= 1 << u
            common &= adj[u]
        rest &= ~clique
        count += 1
    return count


def independence_number(graph: Graph, limit: int = DEFAULT_SEARCH_LIMIT) -> int:
    return len(maximum_independent_set(graph, limit))


def validate_homomorphism(source: Graph, target: Graph, mapping: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff ``mapping`` sends every edge of ``source`` to an edge of ``target``."""
    try:
        for u, v in source.edges():
            if not target.has_edge(mapping[u], mapping[v]):
                return False
    except (IndexError, KeyError):
        return False
    return True


def connected_components(graph: Graph) -> list[frozenset[int]]:
    seen = 0
    comps = []
    for v in range(graph.n):
        if seen >> v & 1:
            continue
        comp = 0
        for layer in _layers(graph, v):
            comp |= layer
        seen |= comp
        comps.append(frozenset(iter_bits(comp)))
    return comps


def find_four_cycle(graph: Graph) -> tuple[int, int, int, int] | None:
    """A 4-cycle ``(u, a, w, b)`` if one exists (not necessarily induced)."""
    adj = graph.adj
    for u in range(graph.n):
        for w in range(u + 1, graph.n):
            common = adj[u] & adj[w]
            if common & (common - 1):
                a = (common & -common).bit_length() - 1
                common &= common - 1
                b = (common & -common).bit_length() - 1
                return (u, a, w, b)
    return None
