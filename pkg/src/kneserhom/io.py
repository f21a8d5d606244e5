"""JSON and DOT serialisation for :class:`~kneserhom.graph.Graph`.

JSON layout::

    {"n": 5, "edges": [[0, 1], ...], "labels": {"0,1": 2, ...}}

``labels`` is optional; vertices are 0-based and every pair has ``u < v``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .graph import Graph


def graph_to_dict(graph: Graph) -> dict:
    out = {"n": graph.n, "edges": [list(e) for e in graph.edges()]}
    if graph.edge_labels:
        out["labels"] = {f"{u},{v}": lab for (u, v), lab in sorted(graph.edge_labels.items())}
    return out


def graph_from_dict(data: dict) -> Graph:
    try:
        n = int(data["n"])
        edges = [(int(u), int(v)) for u, v in data["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed graph JSON: {exc}") from exc
    labels = {}
    for key, lab in (data.get("labels") or {}).items():
        u, v = (int(part) for part in key.split(","))
        labels[(u, v)] = int(lab)
    return Graph.from_edges(n, edges, labels)


def to_json(graph: Graph) -> str:
    return json.dumps(graph_to_dict(graph))


def from_json(text: str) -> Graph:
    return graph_from_dict(json.loads(text))


def to_dot(graph: Graph, name: str = "G", vertex_names=None) -> str:
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        if vertex_names is not None:
            lines.append(f'  {v} [label="{vertex_names[v]}"];')
        else:
            lines.append(f"  {v};")
    for u, v in graph.edges():
        lab = graph.label(u, v)
        if lab is None:
            lines.append(f"  {u} -- {v};")
        else:
            lines.append(f'  {u} -- {v} [label="{lab}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_graph(path) -> Graph:
    return from_json(Path(path).read_text())


def write_graph(graph: Graph, path, vertex_names=None) -> None:
    """Write ``graph`` as DOT when ``path`` ends in ``.dot``, JSON otherwise."""
    path = Path(path)
    if path.suffix == ".dot":
        path.write_text(to_dot(graph, vertex_names=vertex_names))
    else:
        path.write_text(to_json(graph) + "\n")
