"""Seeded random graph families used by the test batteries."""

from __future__ import annotations

import random
from collections import deque

from .errors import BadParams
from .graph import Graph


def random_forest(n: int, max_degree: int, rng: random.Random, edge_prob: float = 0.85) -> Graph:
    """Random forest: each vertex joins an earlier one with room, or starts a tree."""
    if max_degree < 1:
        raise BadParams("max_degree must be positive")
    deg = [0] * n
    edges = []
    for v in range(1, n):
        if rng.random() > edge_prob:
            continue
        room = [u for u in range(v) if deg[u] < max_degree]
        if room:
            u = rng.choice(room)
            edges.append((u, v))
            deg[u] += 1
            deg[v] += 1
    return Graph.from_edges(n, edges)


def _even_distance(adj: list[set[int]], u: int, v: int, limit: int) -> float:
    """Length of the shortest even u-v walk, searched up to ``limit``."""
    seen = {(u, 0)}
    queue = deque([(u, 0, 0)])
    while queue:
        w, parity, dist = queue.popleft()
        if w == v and parity == 0:
            return dist
        if dist >= limit:
            continue
        for x in adj[w]:
            state = (x, parity ^ 1)
            if state not in seen:
                seen.add(state)
                queue.append((x, parity ^ 1, dist + 1))
    return float("inf")


def random_graph_with_odd_girth(n: int, d: int, min_odd_girth: int, rng: random.Random, attempts: int | None = None) -> Graph:
    """Random graph with maximum degree ``d`` whose odd cycles have length at
    least ``min_odd_girth``.

    An edge uv is accepted only if every closed walk through it is long enough
    when odd, i.e. the shortest even u-v walk has length >= min_odd_girth - 1.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    attempts = 4 * n * d if attempts is None else attempts
    for _ in range(attempts):
        u, v = rng.randrange(n), rng.randrange(n)
        if u == v or v in adj[u] or len(adj[u]) >= d or len(adj[v]) >= d:
            continue
        if _even_distance(adj, u, v, min_odd_girth - 2) < min_odd_girth - 1:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in adj[u] if u < v])
