import json
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from tss.cycles import CycleBudget
from tss.errors import FormatError
from tss.export import export_graph, export_histogram, export_metrics, graph_from_json, vertex_label
from tss.expr import evaluate, parse
from tss.graph import TssGraph, build_tss, node_tss
from tss.matrix import ComplexMatrix
from tss.metrics import compute_metrics, out_degree_histogram


def tss(expr):
    return build_tss(evaluate(parse(expr)))


def test_dot_px():
    assert export_graph(tss("px"), "dot", "decimal") == "digraph tss {\n  0 -> 1;\n  1 -> 0;\n}\n"


def test_dot_identity_binary():
    out = export_graph(build_tss(ComplexMatrix.identity(2)), "dot", "binary")
    assert out == "digraph tss {\n  0 -> 0;\n  1 -> 1;\n}\n"


def test_dot_px4_binary_complement_pairs():
    expected = "digraph tss {\n" + "".join(f"  {j:04b} -> {15 - j:04b};\n" for j in range(16)) + "}\n"
    out = export_graph(tss("px ^(x) 4"), "dot", "binary")
    assert out == expected
    assert "  0000 -> 1111;\n" in out


def test_dot_isolated_vertices_declared():
    g = TssGraph.from_edges(3, [(0, 1)])
    assert export_graph(g) == "digraph tss {\n  2;\n  0 -> 1;\n}\n"


def test_binary_labels_only_for_powers_of_two():
    assert vertex_label(5, 8, "binary") == "101"
    assert vertex_label(5, 6, "binary") == "5"
    assert vertex_label(0, 1, "binary") == "0"
    with pytest.raises(FormatError):
        vertex_label(0, 2, "hex")


def test_node_level_export():
    star = node_tss(tss("gr4"), 1)
    assert export_graph(star, "dot") == "digraph tss {\n  1 -> 0;\n  1 -> 1;\n  1 -> 2;\n  1 -> 3;\n}\n"
    doc = json.loads(export_graph(star, "json"))
    assert doc["node"] == 1 and doc["edges"] == [[1, 0], [1, 1], [1, 2], [1, 3]]


def test_graphml():
    out = export_graph(tss("px ^(x) 2"), "graphml", "binary")
    root = ET.fromstring(out)
    ns = {"g": "http://graphml.graphdrawing.org/xmlns"}
    graph = root.find("g:graph", ns)
    assert graph.get("edgedefault") == "directed"
    nodes = graph.findall("g:node", ns)
    assert [n.get("id") for n in nodes] == ["0", "1", "2", "3"]
    assert [n.find("g:data", ns).text for n in nodes] == ["00", "01", "10", "11"]
    edges = [(e.get("source"), e.get("target")) for e in graph.findall("g:edge", ns)]
    assert edges == [("0", "3"), ("1", "2"), ("2", "1"), ("3", "0")]


def test_json_graph():
    doc = json.loads(export_graph(tss("px"), "json"))
    assert doc == {"n": 2, "threshold": 1e-12, "edges": [[0, 1], [1, 0]]}


graphs = st.integers(1, 8).flatmap(
    lambda n: st.lists(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n).map(
        lambda edges: TssGraph.from_edges(n, edges)
    )
)


@given(graphs)
def test_json_round_trip(g):
    assert graph_from_json(export_graph(g, "json")) == g


@given(graphs)
def test_edge_count_in_every_format(g):
    assert export_graph(g, "dot").count(" -> ") == g.num_edges
    assert export_graph(g, "graphml").count("<edge ") == g.num_edges
    assert len(json.loads(export_graph(g, "json"))["edges"]) == g.num_edges


@given(graphs)
def test_dot_deterministic(g):
    copy = TssGraph(g.n, tuple(tuple(s) for s in g.successors), g.threshold)
    assert export_graph(g, "dot", "binary") == export_graph(copy, "dot", "binary")


@pytest.mark.parametrize("fmt", ["csv", "png"])
def test_graph_format_errors(fmt):
    with pytest.raises(FormatError):
        export_graph(tss("px"), fmt)


def test_metrics_csv_bb():
    r = compute_metrics(tss("berkeley (x) berkeley"), name="bb")
    lines = export_metrics(r, "csv").splitlines()
    assert lines[0] == "name,sinks,sources,sink_source_ratio,self_loops,loops,loops_capped,multiplicity,islands"
    assert lines[1] == "bb,16,16,1,16,96,false,4,4"


def test_metrics_csv_saneg():
    row = export_metrics(compute_metrics(tss("saneg12"), name="saneg"), "csv").splitlines()[1]
    assert ",4,5,false,1.5," in row
    assert row == "saneg,4,4,1,4,5,false,1.5,3"


def test_metrics_csv_had16_capped():
    row = export_metrics(compute_metrics(tss("had16"), CycleBudget(1_000_001), name="had16"), "csv")
    assert row.splitlines()[1] == "had16,16,16,1,16,1000001,true,16,1"


def test_metrics_csv_quotes_names_with_commas():
    row = export_metrics(compute_metrics(tss("kron(px, pz)"), name="kron(px, pz)"), "csv").splitlines()[1]
    assert row.startswith('"kron(px, pz)",')


def test_metrics_six_significant_digits():
    g = TssGraph.from_edges(3, [(0, 0), (1, 1), (2, 2), (0, 1)])
    row = export_metrics(compute_metrics(g, name="x"), "csv").splitlines()[1]
    assert row.split(",")[7] == "1.33333"


def test_metrics_json():
    doc = json.loads(export_metrics(compute_metrics(tss("kron(pz, gr4)"), name="pzgr4"), "json"))
    assert doc["loops"] == 48 and doc["loops_capped"] is False
    assert doc["islands"] == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert doc["out_degree_histogram"] == {str(v): 4 for v in range(8)}


def test_metrics_format_errors():
    r = compute_metrics(tss("px"))
    for fmt in ("dot", "graphml"):
        with pytest.raises(FormatError):
            export_metrics(r, fmt)
    with pytest.raises(FormatError):
        export_histogram({0: 1}, "dot")


def test_histogram_csv():
    assert export_histogram(out_degree_histogram(build_tss(ComplexMatrix.identity(2))), "csv") == (
        "vertex,out_degree\n0,1\n1,1\n"
    )
    rows = export_histogram(out_degree_histogram(tss("berkeley (x) berkeley")), "csv").splitlines()[1:]
    assert rows == [f"{v},4" for v in range(16)]


def test_histogram_csv_is_sorted():
    assert export_histogram({2: 1, 0: 3, 1: 2}, "csv") == "vertex,out_degree\n0,3\n1,2\n2,1\n"
    assert json.loads(export_histogram({2: 1, 0: 3}, "json")) == {"0": 3, "2": 1}


def test_berkeley_sapos12_histogram_shape():
    rows = export_histogram(out_degree_histogram(tss("berkeley (x) sapos12")), "csv").splitlines()[1:]
    degrees = [int(r.split(",")[1]) for r in rows]
    assert len(set(degrees)) > 1
    assert np.array_equal(degrees, [2, 4, 4, 2] * 4)
