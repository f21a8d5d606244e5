"""Exact homomorphism search, chromatic and fractional chromatic numbers.

All values that get certified (chromatic numbers, LP optima, independence
ratios) are exact integers or ``Fraction`` objects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .errors import BudgetExhausted, CapExceeded, CertificateInvalid, SizeLimit
from .graph import (
    DEFAULT_SEARCH_LIMIT,
    Coloring,
    Graph,
    complete_graph,
    greedy_coloring,
    independence_number,
    iter_bits,
    popcount,
    validate_homomorphism,
)
from .kneser import is_automorphism, orbit
from .simplex import CoveringSolution, solve_covering_lp

DEFAULT_MIS_CAP = 10**6
DEFAULT_CHROMATIC_LIMIT = 128


def _propagate(source: Graph, target: Graph, domains: list[int], queue: list[int]) -> bool:
    """Arc consistency on bitmask domains. Returns False on a wipe-out."""
    sadj, tadj = source.adj, target.adj
    pending = set(queue)
    while queue:
        v = queue.pop()
        pending.discard(v)
        dv = domains[v]
        support = 0
        for a in iter_bits(dv):
            support |= tadj[a]
        for w in iter_bits(sadj[v]):
            dw = domains[w]
            new = dw & support
            if new != dw:
                if not new:
                    return False
                domains[w] = new
                if w not in pending:
                    pending.add(w)
                    queue.append(w)
    return True


def find_homomorphism(
    source: Graph,
    target: Graph,
    partial: Mapping[int, int] | None = None,
    budget: int | None = None,
    value_symmetry: bool = False,
) -> list[int] | None:
    """Backtracking search for a homomorphism ``source -> target``.

    Returns the mapping as a list, or ``None`` once the whole search space is
    exhausted. Raises :class:`BudgetExhausted` if more than ``budget`` search
    nodes are expanded; that outcome says nothing about existence.

    ``value_symmetry`` may only be set when every permutation of the target's
    vertices is an automorphism (a complete graph); unused target vertices
    are then interchangeable and only the first one is tried.
    """
    if source.n == 0:
        return []
    if target.n == 0:
        return None
    full = (1 << target.n) - 1
    domains = [full] * source.n
    for v, a in (partial or {}).items():
        domains[v] = 1 << a
    if not _propagate(source, target, domains, list(range(source.n))):
        return None
    nodes = 0

    def solve(domains: list[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExhausted(f"search exceeded {budget} nodes")
        var, size = -1, 0
        for v, d in enumerate(domains):
            c = popcount(d)
            if c > 1 and (var < 0 or c < size):
                var, size = v, c
        if var < 0:
            return [d.bit_length() - 1 for d in domains]
        values = domains[var]
        if value_symmetry:
            used = 0
            for d in domains:
                if d & (d - 1) == 0:
                    used |= d
            fresh = values & ~used
            if fresh:
                values = (values & used) | (fresh & -fresh)
        for a in iter_bits(values):
            trial = list(domains)
            trial[var] = 1 << a
            if _propagate(source, target, trial, [var]):
                found = solve(trial)
                if found is not None:
                    return found
        return None

    result = solve(domains)
    if result is not None and not validate_homomorphism(source, target, result):
        raise AssertionError("search produced an invalid homomorphism")
    return result


def _greedy_clique(graph: Graph) -> int:
    best = 0
    for v in sorted(range(graph.n), key=graph.degree, reverse=True):
        clique = 1 << v
        cand = graph.adj[v]
        while cand:
            u = max(iter_bits(cand), key=lambda x: popcount(graph.adj[x] & cand))
            clique |= 1 << u
            cand &= graph.adj[u]
        best = max(best, popcount(clique))
    return best


def _dsatur_order(graph: Graph) -> list[int]:
    """Vertex order of the DSATUR heuristic, used only for the upper bound."""
    colors = [-1] * graph.n
    order = []
    sat = [set() for _ in range(graph.n)]
    for _ in range(graph.n):
        v = max(
            (u for u in range(graph.n) if colors[u] < 0),
            key=lambda u: (len(sat[u]), graph.degree(u), -u),
        )
        c = 0
        while c in sat[v]:
            c += 1
        colors[v] = c
        order.append(v)
        for w in iter_bits(graph.adj[v]):
            sat[w].add(c)
    return order


def optimal_coloring(graph: Graph, limit: int = DEFAULT_CHROMATIC_LIMIT) -> Coloring:
    """A proper colouring with the minimum number of colours."""
    if graph.n > limit:
        raise SizeLimit(f"exact colouring limited to {limit} vertices, got {graph.n}")
    if graph.n == 0:
        return Coloring((), 0)
    best = greedy_coloring(graph, _dsatur_order(graph))
    upper = best.num_colors
    lower = max(1, _greedy_clique(graph))
    for c in range(lower, upper):
        mapping = find_homomorphism(graph, complete_graph(c), value_symmetry=True)
        if mapping is not None:
            return Coloring(tuple(mapping), c)
    return Coloring(best.colors, upper)


def chromatic_number(graph: Graph, limit: int = DEFAULT_CHROMATIC_LIMIT) -> int:
    return optimal_coloring(graph, limit).palette_size


def enumerate_maximal_independent_sets(graph: Graph, cap: int = DEFAULT_MIS_CAP) -> list[frozenset[int]]:
    """All inclusion-maximal independent sets (Bron-Kerbosch with pivoting on
    the complement), sorted by their sorted member tuples."""
    n = graph.n
    full = (1 << n) - 1
    nonadj = [full & ~graph.adj[v] & ~(1 << v) for v in range(n)]
    found: list[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            if len(found) > cap:
                raise CapExceeded(f"more than {cap} maximal independent sets")
            return
        pivot = max(iter_bits(p | x), key=lambda u: popcount(p & nonadj[u]))
        for v in iter_bits(p & ~nonadj[pivot]):
            expand(r | (1 << v), p & nonadj[v], x & nonadj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if not n:
        return [frozenset()]
    expand(0, full, 0)
    sets = [tuple(iter_bits(m)) for m in found]
    sets.sort()
    return [frozenset(s) for s in sets]


@dataclass(frozen=True)
class FoldColoring:
    """A k-fold n-colouring: each vertex gets k of the colours ``0..n-1``."""

    n: int
    k: int
    assignment: tuple[frozenset[int], ...]

    def violations(self, graph: Graph) -> list[str]:
        problems = []
        if len(self.assignment) != graph.n:
            problems.append(f"assignment covers {len(self.assignment)} of {graph.n} vertices")
            return problems
        for v, colors in enumerate(self.assignment):
            if len(colors) != self.k:
                problems.append(f"vertex {v} has {len(colors)} colours, expected {self.k}")
            if any(not 0 <= c < self.n for c in colors):
                problems.append(f"vertex {v} uses a colour outside 0..{self.n - 1}")
        for u, v in graph.edges():
            if self.assignment[u] & self.assignment[v]:
                problems.append(f"edge ({u}, {v}) shares colours")
        return problems

    def is_valid(self, graph: Graph) -> bool:
        return not self.violations(graph)

    def as_kneser_map(self, kneser) -> list[int]:
        """Vertex map into a ``SubsetGraph`` for K(n,k)."""
        return [kneser.index(sorted(c)) for c in self.assignment]


@dataclass(frozen=True)
class FractionalResult:
    value: Fraction
    independent_sets: tuple[frozenset[int], ...]
    weights: tuple[Fraction, ...]
    clique_weights: tuple[Fraction, ...]
    fold_coloring: FoldColoring | None = field(default=None, compare=False)

    def support(self) -> list[tuple[frozenset[int], Fraction]]:
        return [(s, w) for s, w in zip(self.independent_sets, self.weights) if w]


def fractional_chromatic_lp(graph: Graph, cap: int = DEFAULT_MIS_CAP) -> FractionalResult:
    """Exact fractional chromatic number via the independent-set covering LP.

    Only maximal independent sets are used as columns: any covering can move
    the weight of a set onto a maximal superset without losing coverage or
    changing the objective.
    """
    if graph.n == 0:
        return FractionalResult(Fraction(0), (), (), (), FoldColoring(0, 0, ()))
    sets = enumerate_maximal_independent_sets(graph, cap)
    sol: CoveringSolution = solve_covering_lp(graph.n, [sorted(s) for s in sets])
    result = FractionalResult(sol.value, tuple(sets), sol.weights, sol.duals)
    return FractionalResult(
        result.value, result.independent_sets, result.weights, result.clique_weights,
        kfold_from_lp(graph, result),
    )


def kfold_from_lp(graph: Graph, lp: FractionalResult) -> FoldColoring:
    """Scale rational LP weights to a common denominator ``D`` and read off a
    D-fold (value * D)-colouring, one colour class per unit of weight."""
    support = lp.support()
    if any(w < 0 for w in lp.weights):
        raise CertificateInvalid("negative weight")
    for s, _ in support:
        if any(graph.adj[v] & sum(1 << u for u in s) for v in s):
            raise CertificateInvalid(f"{sorted(s)} is not independent")
    if graph.n == 0:
        return FoldColoring(0, 0, ())
    denom = lcm(*(w.denominator for _, w in support)) if support else 1
    classes: list[frozenset[int]] = []
    for s, w in support:
        classes.extend([s] * int(w * denom))
    if sum(lp.weights, Fraction(0)) != lp.value or len(classes) != lp.value * denom:
        raise CertificateInvalid("weights do not sum to the claimed value")
    assignment: list[set[int]] = [set() for _ in range(graph.n)]
    for color, s in enumerate(classes):
        for v in s:
            if len(assignment[v]) < denom:
                assignment[v].add(color)
    if any(len(a) < denom for a in assignment):
        raise CertificateInvalid("weights do not cover every vertex")
    fold = FoldColoring(len(classes), denom, tuple(frozenset(a) for a in assignment))
    if not fold.is_valid(graph):
        raise CertificateInvalid("; ".join(fold.violations(graph)))
    return fold


def independence_ratio(graph: Graph, limit: int = DEFAULT_SEARCH_LIMIT) -> Fraction:
    if graph.n == 0:
        raise ValueError("independence ratio of the empty graph is undefined")
    return Fraction(independence_number(graph, limit), graph.n)


def verify_transitivity(graph: Graph, automorphisms: Sequence[Sequence[int]]) -> bool:
    """True iff every map is an automorphism and together they move vertex 0 everywhere."""
    if graph.n == 0:
        return True
    if not all(is_automorphism(graph, a) for a in automorphisms):
        return False
    return len(orbit(automorphisms, 0)) == graph.n


@dataclass(frozen=True)
class FractionalBoundReport:
    chi_frac: Fraction
    alpha: Fraction
    inverse_alpha: Fraction
    bound_holds: bool
    transitive: bool | None
    equality_holds: bool | None

    @property
    def ok(self) -> bool:
        return self.bound_holds and self.equality_holds is not False

    def as_dict(self) -> dict:
        return {
            "chi_frac": str(self.chi_frac),
            "alpha": str(self.alpha),
            "inverse_alpha": str(self.inverse_alpha),
            "bound_holds": self.bound_holds,
            "transitive": self.transitive,
            "equality_holds": self.equality_holds,
        }


def check_fractional_bound(graph: Graph, automorphisms: Sequence[Sequence[int]] | None = None) -> FractionalBoundReport:
    """Compare chi* against 1/alpha; with a transitivity certificate, demand equality."""
    chi = fractional_chromatic_lp(graph).value
    alpha = independence_ratio(graph)
    inv = 1 / alpha
    transitive = None
    equality = None
    if automorphisms is not None:
        transitive = verify_transitivity(graph, automorphisms)
        if not transitive:
            raise CertificateInvalid("supplied maps do not certify vertex-transitivity")
        equality = chi == inv
    return FractionalBoundReport(chi, alpha, inv, chi >= inv, transitive, equality)
