"""scikit-learn style wrappers around the colouring and homomorphism solvers.

Each estimator takes a graph as ``X`` (anything :func:`check_graph` accepts),
learns a colouring or map in ``fit`` and returns it as an array from
``transform``. Graphs are not samples, so ``transform`` only accepts the graph
the estimator was fitted on.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .balls import graph_to_ball_hom, ball_labeling_graph
from .errors import BadParams
from .graph import Graph, greedy_coloring
from .hom import FoldColoring, fractional_chromatic_lp, optimal_coloring
from .io import graph_from_dict
from .kfold import kfold_color_pipeline


def check_graph(X) -> Graph:
    """Coerce ``X`` into a :class:`Graph`.

    Accepts a Graph, any object with a ``.graph`` Graph attribute, a square
    symmetric 0/1 adjacency matrix, a networkx-style object with integer nodes
    ``0..n-1``, or a dict in the JSON exchange format.
    """
    if isinstance(X, Graph):
        return X
    inner = getattr(X, "graph", None)
    if isinstance(inner, Graph):
        return inner
    if isinstance(X, dict):
        return graph_from_dict(X)
    if hasattr(X, "nodes") and hasattr(X, "edges"):
        nodes = sorted(X.nodes)
        if nodes != list(range(len(nodes))):
            raise BadParams("networkx-style graphs must use nodes 0..n-1")
        return Graph.from_edges(len(nodes), list(X.edges))
    A = np.asarray(X)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise BadParams(f"adjacency matrix must be square, got shape {A.shape}")
    if not np.array_equal(A, A.T):
        raise BadParams("adjacency matrix must be symmetric")
    if np.any(np.diag(A)):
        raise BadParams("adjacency matrix has self-loops")
    if not np.isin(A, (0, 1)).all():
        raise BadParams("adjacency matrix must be 0/1")
    rows, cols = np.nonzero(np.triu(A, 1))
    return Graph.from_edges(A.shape[0], zip(rows.tolist(), cols.tolist()))


def fold_indicator(fold: FoldColoring) -> np.ndarray:
    """Vertex-by-colour boolean matrix of a k-fold colouring."""
    out = np.zeros((len(fold.assignment), fold.n), dtype=bool)
    for v, colors in enumerate(fold.assignment):
        out[v, list(colors)] = True
    return out


class _GraphTransformer(TransformerMixin, BaseEstimator):
    _fitted_attr = "graph_"

    def _check_same(self, X) -> Graph:
        check_is_fitted(self, self._fitted_attr)
        G = check_graph(X)
        if G != self.graph_:
            raise BadParams("transform expects the graph passed to fit")
        return G


class GreedyColoring(_GraphTransformer):
    """First-fit colouring along ``order`` with at most ``palette`` colours."""

    def __init__(self, order=None, palette=None):
        self.order = order
        self.palette = palette

    def fit(self, X, y=None):
        G = check_graph(X)
        col = greedy_coloring(G, self.order, self.palette)
        self.graph_ = G
        self.colors_ = np.array(col.colors, dtype=int)
        self.n_colors_ = col.num_colors
        return self

    def transform(self, X):
        self._check_same(X)
        return self.colors_.copy()


class ExactColoring(_GraphTransformer):
    """Optimal colouring; ``chromatic_number_`` is certified by the search."""

    def __init__(self, limit=128):
        self.limit = limit

    def fit(self, X, y=None):
        G = check_graph(X)
        col = optimal_coloring(G, self.limit)
        self.graph_ = G
        self.colors_ = np.array(col.colors, dtype=int)
        self.chromatic_number_ = col.num_colors
        return self

    def transform(self, X):
        self._check_same(X)
        return self.colors_.copy()


class FractionalColoring(_GraphTransformer):
    """Exact fractional chromatic number plus the k-fold colouring it yields.

    ``transform`` returns the vertex-by-colour indicator matrix.
    """

    def __init__(self, cap=10**6):
        self.cap = cap

    def fit(self, X, y=None):
        G = check_graph(X)
        lp = fractional_chromatic_lp(G, self.cap)
        self.graph_ = G
        self.value_ = lp.value
        self.support_ = lp.support()
        self.fold_coloring_ = lp.fold_coloring
        return self

    def transform(self, X):
        self._check_same(X)
        return fold_indicator(self.fold_coloring_)


class KFoldColoring(_GraphTransformer):
    """k-fold (dk+1)-colouring of a graph with maximum degree ``d``."""

    def __init__(self, d=3, k=1, order=None):
        self.d = d
        self.k = k
        self.order = order

    def fit(self, X, y=None):
        G = check_graph(X)
        self.graph_ = G
        self.fold_coloring_ = kfold_color_pipeline(G, self.d, self.k, self.order)
        return self

    def transform(self, X):
        self._check_same(X)
        return fold_indicator(self.fold_coloring_)


class BallLabelingHom(_GraphTransformer):
    """Map vertices with a full tree-like ``g``-ball to vertices of H(d, g).

    ``transform`` gives the H vertex index per vertex, -1 where the ball is
    not tree-like or not full.
    """

    def __init__(self, d=3, g=1, N=None):
        self.d = d
        self.g = g
        self.N = N

    def fit(self, X, y=None):
        G = check_graph(X)
        H = ball_labeling_graph(self.d, self.g, self.N)
        mapping = graph_to_ball_hom(G, self.d, self.g, ball_graph=H)
        self.graph_ = G
        self.ball_graph_ = H
        self.mapping_ = np.array([mapping.get(v, -1) for v in range(G.n)], dtype=int)
        return self

    def transform(self, X):
        self._check_same(X)
        return self.mapping_.copy()
