"""k-fold (dk+1)-colourings of graphs with maximum degree d.

Pipeline:

1. peel off d-2 greedy maximal independent sets, scalar colours 0..d-3;
2. what is left has maximum degree 2; its paths get scalars d-2, d-1;
3. scalar ``i`` becomes the colour block ``{ik, ..., ik+k-1}``;
4. each leftover cycle is mapped onto C_{2k+1}, realised inside K(2k+1, k) by
   the stable sets ``{j, j+2, ..., j+2(k-1)} mod 2k+1``, shifted up by (d-2)k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import BadParams, DegreeTooHigh, NoHomomorphism, ShortOddCycle
from .graph import Graph, iter_bits, maximal_independent_set, popcount
from .hom import FoldColoring


def cycle_to_odd_cycle_hom(m: int, q: int) -> list[int]:
    """Homomorphism C_m -> C_q (q odd) as a list of target vertices.

    Even cycles alternate between two adjacent targets. An odd cycle with
    m >= q wraps once around C_q and spends the surplus m - q (even) steps
    bouncing on the last edge.
    """
    if q < 3 or q % 2 == 0:
        raise BadParams(f"target must be an odd cycle, got C_{q}")
    if m < 3:
        raise BadParams(f"source must be a cycle, got C_{m}")
    if m % 2 == 0:
        return [i % 2 for i in range(m)]
    if m < q:
        raise NoHomomorphism(f"C_{m} has no homomorphism to C_{q}")
    return list(range(q)) + [q - 2 if t % 2 == 0 else q - 1 for t in range(m - q)]


def stable_block(j: int, k: int) -> frozenset[int]:
    """The stable k-set ``{j, j+2, ..., j+2(k-1)}`` modulo 2k+1."""
    q = 2 * k + 1
    return frozenset((j + 2 * t) % q for t in range(k))


@dataclass(frozen=True)
class PipelineStages:
    d: int
    k: int
    scalar: tuple[int | None, ...]  # None for vertices on residual cycles
    residual: frozenset[int]
    paths: tuple[tuple[int, ...], ...]
    cycles: tuple[tuple[int, ...], ...]


def _walk(graph: Graph, mask: int, start: int, first: int | None) -> list[int]:
    seq = [start]
    prev, cur = start, first
    while cur is not None and cur != start:
        seq.append(cur)
        nxt = [w for w in iter_bits(graph.adj[cur] & mask) if w != prev]
        prev, cur = cur, (nxt[0] if nxt else None)
    return seq


def pipeline_stages(graph: Graph, d: int, k: int, order: Sequence[int] | None = None) -> PipelineStages:
    if d < 2 or k < 1:
        raise BadParams(f"need d >= 2 and k >= 1, got d={d}, k={k}")
    if graph.max_degree() > d:
        raise DegreeTooHigh(f"maximum degree {graph.max_degree()} exceeds d={d}")
    scalar: list[int | None] = [None] * graph.n
    active = (1 << graph.n) - 1
    for i in range(d - 2):
        for v in maximal_independent_set(graph, active, order):
            scalar[v] = i
            active &= ~(1 << v)
    # every remaining vertex has a neighbour in each removed maximal set
    assert all(popcount(graph.adj[v] & active) <= 2 for v in iter_bits(active))

    paths, cycles = [], []
    seen = 0
    for v in iter_bits(active):
        if seen >> v & 1:
            continue
        comp = 0
        frontier = 1 << v
        while frontier:
            comp |= frontier
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= graph.adj[u] & active
            frontier = nxt & ~comp
        seen |= comp
        ends = [u for u in iter_bits(comp) if popcount(graph.adj[u] & active) < 2]
        if ends:
            start = min(ends)
            nbrs = list(iter_bits(graph.adj[start] & active))
            path = _walk(graph, active, start, nbrs[0] if nbrs else None)
            for pos, u in enumerate(path):
                scalar[u] = d - 2 + pos % 2
            paths.append(tuple(path))
        else:
            start = min(iter_bits(comp))
            first = min(iter_bits(graph.adj[start] & active))
            cycles.append(tuple(_walk(graph, active, start, first)))
    return PipelineStages(d, k, tuple(scalar), frozenset(iter_bits(active)), tuple(paths), tuple(cycles))


def kfold_color_pipeline(graph: Graph, d: int, k: int, order: Sequence[int] | None = None) -> FoldColoring:
    """A k-fold (dk+1)-colouring of ``graph``, i.e. a homomorphism to K(dk+1, k).

    Raises :class:`ShortOddCycle` when a cycle left after peeling is odd and
    shorter than 2k+1, the one finite obstruction.
    """
    stages = pipeline_stages(graph, d, k, order)
    assignment: list[frozenset[int]] = [frozenset()] * graph.n
    for v, s in enumerate(stages.scalar):
        if s is not None:
            assignment[v] = frozenset(range(s * k, s * k + k))
    q = 2 * k + 1
    base = (d - 2) * k
    for cyc in stages.cycles:
        try:
            h = cycle_to_odd_cycle_hom(len(cyc), q)
        except NoHomomorphism:
            raise ShortOddCycle(len(cyc), k) from None
        for v, j in zip(cyc, h):
            assignment[v] = frozenset(base + c for c in stable_block(j, k))
    fold = FoldColoring(d * k + 1, k, tuple(assignment))
    problems = fold.violations(graph)
    if problems:
        raise AssertionError("pipeline produced an invalid colouring: " + "; ".join(problems[:3]))
    return fold
