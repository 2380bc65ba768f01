"""Serialisation of graphs, metrics and histograms to DOT, GraphML, JSON and CSV.

All output is deterministic: vertices and edges are emitted in ascending order
and no timestamps are written.
"""
from __future__ import annotations

import csv
import io
import json
import math
from enum import Enum
from typing import Union

from .errors import FormatError
from .graph import NodeLevelTss, TssGraph
from .metrics import MetricsReport


class ExportFormat(str, Enum):
    DOT = "dot"
    GRAPHML = "graphml"
    JSON = "json"
    CSV = "csv"


GRAPH_FORMATS = (ExportFormat.DOT, ExportFormat.GRAPHML, ExportFormat.JSON)
TABLE_FORMATS = (ExportFormat.CSV, ExportFormat.JSON)

METRICS_HEADER = (
    "name",
    "sinks",
    "sources",
    "sink_source_ratio",
    "self_loops",
    "loops",
    "loops_capped",
    "multiplicity",
    "islands",
)


def _format(value, allowed, what):
    try:
        fmt = ExportFormat(value)
    except ValueError:
        raise FormatError(f"unknown format {value!r}") from None
    if fmt not in allowed:
        names = ", ".join(f.value for f in allowed)
        raise FormatError(f"format {fmt.value!r} not valid for {what}; use one of: {names}")
    return fmt


def vertex_label(v: int, n: int, label_mode: str = "decimal") -> str:
    """Decimal index, or zero-padded binary ket digits when ``n`` is a power of two."""
    if label_mode == "binary" and n > 1 and n & (n - 1) == 0:
        return format(v, f"0{n.bit_length() - 1}b")
    if label_mode not in ("decimal", "binary"):
        raise FormatError(f"unknown label mode {label_mode!r}")
    return str(v)


def _graph_parts(g):
    """(graph, vertex list, node index or None) for a full graph or a star."""
    if isinstance(g, NodeLevelTss):
        vertices = sorted({g.source, *g.targets})
        return g.as_graph(), vertices, g.source
    if isinstance(g, TssGraph):
        return g, list(range(g.n)), None
    raise FormatError(f"cannot export {type(g).__name__} as a graph")


def export_graph(g: Union[TssGraph, NodeLevelTss], format="dot", label_mode="decimal") -> str:
    fmt = _format(format, GRAPH_FORMATS, "graphs")
    graph, vertices, node = _graph_parts(g)
    label = lambda v: vertex_label(v, graph.n, label_mode)  # noqa: E731
    edges = graph.edges()

    if fmt is ExportFormat.DOT:
        lines = ["digraph tss {"]
        touched = {v for e in edges for v in e}
        lines += [f"  {label(v)};" for v in vertices if v not in touched]
        lines += [f"  {label(j)} -> {label(i)};" for j, i in edges]
        lines.append("}")
        return "\n".join(lines) + "\n"

    if fmt is ExportFormat.GRAPHML:
        out = [
            '<?xml version="1.0" encoding="UTF-8"?>',
            '<graphml xmlns="http://graphml.graphdrawing.org/xmlns">',
            '  <key id="label" for="node" attr.name="label" attr.type="string"/>',
            '  <graph id="tss" edgedefault="directed">',
        ]
        out += [f'    <node id="{v}"><data key="label">{label(v)}</data></node>' for v in vertices]
        out += [f'    <edge source="{j}" target="{i}"/>' for j, i in edges]
        out += ["  </graph>", "</graphml>"]
        return "\n".join(out) + "\n"

    doc = {"n": graph.n, "threshold": graph.threshold, "edges": [[j, i] for j, i in edges]}
    if node is not None:
        doc["node"] = node
    if label_mode == "binary":
        doc["labels"] = [label(v) for v in vertices]
    return json.dumps(doc) + "\n"


def graph_from_json(text: str) -> TssGraph:
    doc = json.loads(text)
    return TssGraph.from_edges(doc["n"], [tuple(e) for e in doc["edges"]], doc["threshold"])


def format_number(x) -> str:
    """Integers bare, reals with up to 6 significant digits."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, int):
        return str(x)
    if math.isnan(x):
        return "nan"
    if float(x).is_integer():
        return str(int(x))
    return f"{x:.6g}"


def metrics_row(r: MetricsReport) -> list[str]:
    return [
        r.name,
        format_number(r.num_sinks),
        format_number(r.num_sources),
        format_number(r.sink_source_ratio),
        format_number(r.num_self_loops),
        format_number(r.num_cycles),
        format_number(r.cycles_capped),
        format_number(r.multiplicity),
        format_number(r.num_islands),
    ]


def _csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def export_metrics(r: MetricsReport, format="csv") -> str:
    fmt = _format(format, TABLE_FORMATS, "metrics")
    if fmt is ExportFormat.CSV:
        return _csv([METRICS_HEADER, metrics_row(r)])
    doc = {
        "name": r.name,
        "n": r.n,
        "sinks": r.num_sinks,
        "sources": r.num_sources,
        "sink_source_ratio": r.sink_source_ratio,
        "self_loops": r.num_self_loops,
        "loops": r.num_cycles,
        "loops_capped": r.cycles_capped,
        "multiplicity": r.multiplicity,
        "islands": [list(c) for c in r.islands],
        "out_degree_histogram": {str(k): v for k, v in sorted(r.out_degree_histogram.items())},
    }
    return json.dumps(doc) + "\n"


def export_histogram(h: dict[int, int], format="csv") -> str:
    fmt = _format(format, TABLE_FORMATS, "histograms")
    items = sorted(h.items())
    if fmt is ExportFormat.CSV:
        return _csv([("vertex", "out_degree"), *items])
    return json.dumps({str(k): v for k, v in items}) + "\n"
