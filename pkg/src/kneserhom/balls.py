"""Ball labelings of the d-regular tree and the graph H(d, g) they form.

A labeling of the radius-``g`` ball is stored as a nested tuple
``(label, (child, child, ...))`` with children sorted, which is a canonical
form modulo rooted tree automorphisms because labels are injective.

Two labelings are adjacent when they can sit on the two ends of a tree edge
and agree on the overlap of the two balls. Outside the overlap the labels are
unconstrained, so the union need not be injective.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from math import factorial, perm
from typing import Sequence

from .errors import BadParams, CapExceeded
from .graph import Coloring, Graph, greedy_coloring, iter_bits, power_graph

DEFAULT_BALL_CAP = 100_000
DEFAULT_TREE_CAP = 1_000_000

Form = tuple  # (label, tuple[Form, ...])


@dataclass(frozen=True)
class TruncatedTree:
    d: int
    depth: int
    g: int
    graph: Graph
    depths: tuple[int, ...]
    interior: frozenset[int]
    root: int = 0


def tree_size(d: int, depth: int) -> int:
    return 1 + sum(d * (d - 1) ** (j - 1) for j in range(1, depth + 1))


def truncated_tree(d: int, depth: int, g: int = 0, cap: int = DEFAULT_TREE_CAP) -> TruncatedTree:
    """Depth-``depth`` ball of T_d around vertex 0, numbered in BFS order.

    ``interior`` holds the vertices whose radius-``g`` ball lies inside the tree.
    """
    if d < 2 or depth < 0 or g < 0 or depth < g:
        raise BadParams(f"need d >= 2 and depth >= g >= 0, got d={d}, depth={depth}, g={g}")
    size = tree_size(d, depth)
    if size > cap:
        raise CapExceeded(f"tree has {size} vertices, cap is {cap}")
    edges = []
    depths = [0]
    frontier = [0]
    for level in range(1, depth + 1):
        nxt = []
        for v in frontier:
            for _ in range(d if v == 0 else d - 1):
                w = len(depths)
                depths.append(level)
                edges.append((v, w))
                nxt.append(w)
        frontier = nxt
    graph = Graph.from_edges(len(depths), edges)
    interior = frozenset(v for v, t in enumerate(depths) if t <= depth - g)
    return TruncatedTree(d, depth, g, graph, tuple(depths), interior)


def canonical(form: Form) -> Form:
    label, children = form
    return (label, tuple(sorted(canonical(c) for c in children)))


def ball_form(tree: Graph, center: int, g: int, labels: Sequence[int]) -> Form:
    """Labelled radius-``g`` ball around ``center`` in a tree, canonicalised."""

    def build(v: int, parent: int, depth: int) -> Form:
        if depth == g:
            return (labels[v], ())
        kids = [build(w, v, depth + 1) for w in iter_bits(tree.adj[v]) if w != parent]
        return (labels[v], tuple(sorted(kids)))

    return build(center, -1, 0)


def form_labels(form: Form) -> list[int]:
    """Labels in preorder; for a canonical form this is the least label sequence."""
    out = [form[0]]
    for c in form[1]:
        out.extend(form_labels(c))
    return out


def _truncate(form: Form, depth: int) -> Form:
    if depth == 0:
        return (form[0], ())
    return (form[0], tuple(_truncate(c, depth - 1) for c in form[1]))


def _grow(form: Form, depth: int, arity: int) -> Form:
    """Append ``arity`` placeholder children (label ``None``) below every node at ``depth``."""
    if depth == 0:
        return (form[0], tuple((None, ()) for _ in range(arity)))
    return (form[0], tuple(_grow(c, depth - 1, arity) for c in form[1]))


def _fill(form: Form, labels: list[int]) -> Form:
    """Replace placeholders in preorder, consuming ``labels`` from the front."""
    label = form[0]
    if label is None:
        label = labels.pop(0)
    return (label, tuple(_fill(c, labels) for c in form[1]))


def overlap_pair(form: Form, child: int, g: int) -> tuple[Form, Form]:
    """The overlap of B(v0, g) and B(v1, g) seen from ``form``'s root v0 and its
    ``child``-th neighbour v1, as two canonical half-balls of radius ``g - 1``."""
    label, children = form
    v1 = children[child]
    rest = children[:child] + children[child + 1:]
    near = canonical(_truncate((label, rest), g - 1))
    far = canonical(_truncate(v1, g - 1))
    return near, far


def reroot_partial(form: Form, child: int, g: int, d: int) -> Form:
    """Ball around the ``child``-th neighbour, with ``None`` for unseen labels."""
    label, children = form
    v1 = children[child]
    rest = children[:child] + children[child + 1:]
    back = _truncate((label, rest), g - 1) if g > 1 else (label, ())
    forward = _grow(v1, g - 1, d - 1)
    return (forward[0], (back,) + forward[1])


@dataclass(frozen=True, order=True)
class BallLabeling:
    d: int
    g: int
    N: int
    form: Form = field(compare=True)

    @classmethod
    def from_form(cls, d: int, g: int, N: int, form: Form) -> "BallLabeling":
        form = canonical(form)
        labels = form_labels(form)
        if len(set(labels)) != len(labels):
            raise BadParams("ball labeling must be injective")
        if any(not 0 <= x < N for x in labels):
            raise BadParams(f"labels must lie in 0..{N - 1}")
        if len(labels) != tree_size(d, g):
            raise BadParams("form does not have the shape of a radius-g ball")
        return cls(d, g, N, form)

    @property
    def labels(self) -> list[int]:
        return form_labels(self.form)

    def neighbors(self) -> set["BallLabeling"]:
        """All labelings that can sit at the other end of an edge from the root."""
        out = set()
        present_size = None
        for j in range(self.d):
            partial = reroot_partial(self.form, j, self.g, self.d)
            used = {x for x in form_labels(partial) if x is not None}
            if present_size is None:
                present_size = len(form_labels(partial)) - len(used)
            free = [x for x in range(self.N) if x not in used]
            for choice in permutations(free, present_size):
                out.add(BallLabeling(self.d, self.g, self.N, canonical(_fill(partial, list(choice)))))
        return out


def labelings_adjacent(f0: BallLabeling, f1: BallLabeling) -> bool:
    """Pairwise edge test: some alignment of f1 one step from f0 agrees on the overlap."""
    if (f0.d, f0.g, f0.N) != (f1.d, f1.g, f1.N):
        return False
    g = f0.g
    for j in range(f0.d):
        near0, far0 = overlap_pair(f0.form, j, g)
        for j1 in range(f1.d):
            near1, far1 = overlap_pair(f1.form, j1, g)
            # f1's root is f0's neighbour, so f1's near side is f0's far side
            if near0 == far1 and far0 == near1:
                return True
    return False


def automorphism_count(d: int, g: int) -> int:
    """Size of the rooted automorphism group of the radius-g ball of T_d."""
    if g == 0:
        return 1
    inner = sum(d * (d - 1) ** (j - 1) for j in range(1, g))
    return factorial(d) * factorial(d - 1) ** inner


def ball_labeling_count(d: int, g: int, N: int | None = None) -> int:
    N = d ** (2 * g) if N is None else N
    return perm(N, tree_size(d, g)) // automorphism_count(d, g)


def _template_form(d: int, g: int) -> Form:
    counter = iter(range(tree_size(d, g)))

    def build(depth: int, arity: int) -> Form:
        label = next(counter)
        if depth == g:
            return (label, ())
        return (label, tuple(build(depth + 1, d - 1) for _ in range(arity)))

    return build(0, d)


def _relabel(form: Form, values: Sequence[int]) -> Form:
    return (values[form[0]], tuple(_relabel(c, values) for c in form[1]))


def enumerate_ball_labelings(d: int, g: int, N: int | None = None, cap: int = DEFAULT_BALL_CAP) -> list[BallLabeling]:
    """All injective labelings of B(o, g) by ``0..N-1`` up to automorphism, sorted."""
    if d < 2 or g < 1:
        raise BadParams(f"need d >= 2 and g >= 1, got d={d}, g={g}")
    N = d ** (2 * g) if N is None else N
    count = ball_labeling_count(d, g, N)
    if count > cap:
        raise CapExceeded(f"H({d},{g}) has {count} vertices, cap is {cap}")
    template = _template_form(d, g)
    size = tree_size(d, g)
    forms = {canonical(_relabel(template, values)) for values in permutations(range(N), size)}
    assert len(forms) == count
    return [BallLabeling(d, g, N, f) for f in sorted(forms)]


@dataclass(frozen=True)
class BallGraph:
    d: int
    g: int
    N: int
    graph: Graph
    vertices: tuple[BallLabeling, ...]

    def index(self, labeling: BallLabeling) -> int:
        try:
            lookup = self._lookup
        except AttributeError:
            lookup = {v: i for i, v in enumerate(self.vertices)}
            object.__setattr__(self, "_lookup", lookup)
        return lookup[labeling]


def ball_labeling_graph(d: int, g: int, N: int | None = None, cap: int = DEFAULT_BALL_CAP) -> BallGraph:
    """H(d, g): canonical ball labelings with N = d^(2g) labels (overridable)."""
    vertices = enumerate_ball_labelings(d, g, N, cap)
    N = vertices[0].N
    index = {v: i for i, v in enumerate(vertices)}
    adj = [0] * len(vertices)
    for i, v in enumerate(vertices):
        for w in v.neighbors():
            j = index[w]
            if j != i:
                adj[i] |= 1 << j
    out = BallGraph(d, g, N, Graph(len(vertices), adj), tuple(vertices))
    object.__setattr__(out, "_lookup", index)
    return out


@dataclass(frozen=True)
class TreeHomResult:
    tree: TruncatedTree
    ball_graph: BallGraph
    coloring: Coloring
    mapping: dict[int, int]  # interior tree vertex -> H vertex
    interior_edges: int
    valid: bool


def tree_to_ball_hom(d: int, g: int, depth: int, N: int | None = None, ball_graph: BallGraph | None = None) -> TreeHomResult:
    """Map each interior vertex of a truncated tree to the labeled ball around it.

    Labels come from a first-fit colouring of the distance-``2g`` power graph
    with ``N`` colours, which makes every radius-``g`` ball injective.
    """
    tree = truncated_tree(d, depth, g)
    H = ball_labeling_graph(d, g, N) if ball_graph is None else ball_graph
    coloring = greedy_coloring(power_graph(tree.graph, 2 * g), palette=H.N)
    mapping = {}
    for x in sorted(tree.interior):
        form = ball_form(tree.graph, x, g, coloring.colors)
        mapping[x] = H.index(BallLabeling(d, g, H.N, form))
    edges = [(u, v) for u, v in tree.graph.edges() if u in tree.interior and v in tree.interior]
    valid = all(H.graph.has_edge(mapping[u], mapping[v]) for u, v in edges)
    return TreeHomResult(tree, H, coloring, mapping, len(edges), valid)


def full_ball_vertices(graph: Graph, d: int, g: int) -> list[int]:
    """Vertices whose radius-``g`` ball looks exactly like the ball in T_d."""
    want = tree_size(d, g)
    out = []
    for v in range(graph.n):
        dist = {v: 0}
        frontier = [v]
        ok = True
        for level in range(g):
            nxt = []
            for u in frontier:
                if graph.degree(u) != d:
                    ok = False
                    break
                for w in iter_bits(graph.adj[u]):
                    if w not in dist:
                        dist[w] = level + 1
                        nxt.append(w)
            if not ok:
                break
            frontier = nxt
        if ok and len(dist) == want:
            out.append(v)
    return out


def graph_to_ball_hom(graph: Graph, d: int, g: int, N: int | None = None, ball_graph: BallGraph | None = None) -> dict[int, int]:
    """Map every vertex with a full tree-like g-ball to its labeled ball in H(d, g).

    Raises AssertionError if the map fails on an edge between mapped vertices.
    """
    if graph.max_degree() > d:
        raise BadParams(f"maximum degree {graph.max_degree()} exceeds d={d}")
    H = ball_labeling_graph(d, g, N) if ball_graph is None else ball_graph
    coloring = greedy_coloring(power_graph(graph, 2 * g), palette=H.N)
    mapping = {
        x: H.index(BallLabeling(d, g, H.N, ball_form(graph, x, g, coloring.colors)))
        for x in full_ball_vertices(graph, d, g)
    }
    for u, v in graph.edges():
        if u in mapping and v in mapping:
            assert H.graph.has_edge(mapping[u], mapping[v]), (u, v)
    return mapping
