import json

import pytest
from hypothesis import given, settings

from kneserhom.graph import Graph
from kneserhom.io import from_json, graph_from_dict, read_graph, to_dot, to_json, write_graph
from kneserhom.words import cayley_ball

from oracles import graphs


@settings(max_examples=100)
@given(graphs(max_n=10))
def test_json_roundtrip(G):
    assert from_json(to_json(G)) == G


def test_labels_survive_roundtrip():
    G = cayley_ball(3, 2).graph
    H = from_json(to_json(G))
    assert H == G and H.edge_labels == G.edge_labels


def test_malformed_json():
    with pytest.raises(ValueError):
        graph_from_dict({"n": 2})
    with pytest.raises(ValueError):
        graph_from_dict({"n": 2, "edges": [[0, 5]]})


def test_dot_output():
    G = Graph.from_edges(3, [(0, 1), (1, 2)], {(0, 1): 7})
    dot = to_dot(G, vertex_names=["a", "b", "c"])
    lines = dot.splitlines()
    assert lines[0] == "graph G {" and lines[-1] == "}"
    assert '  0 -- 1 [label="7"];' in lines and "  1 -- 2;" in lines
    assert '  2 [label="c"];' in lines


def test_write_and_read(tmp_path):
    G = Graph.from_edges(4, [(0, 1), (2, 3)])
    write_graph(G, tmp_path / "g.json")
    assert read_graph(tmp_path / "g.json") == G
    assert json.loads((tmp_path / "g.json").read_text())["n"] == 4
    write_graph(G, tmp_path / "g.dot")
    assert (tmp_path / "g.dot").read_text().startswith("graph G {")
