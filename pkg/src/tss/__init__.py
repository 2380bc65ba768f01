"""Support-graph (TSS) analysis of unitary matrices.

A matrix ``U`` is mapped to the directed graph with an edge ``j -> i`` for
every entry ``|U[i, j]|`` above a small threshold. The package builds gate
matrices, parses Kronecker-product expressions, extracts those graphs and
computes their structural metrics.
"""
from .cycles import BACKEND, CycleBudget, count_simple_cycles, strongly_connected_components
from .errors import (
    ArityError,
    CatalogError,
    DimensionLimitError,
    EvaluationError,
    FormatError,
    MatrixParseError,
    ParseError,
    ShapeError,
    TssError,
)
from .export import ExportFormat, export_graph, export_histogram, export_metrics, graph_from_json
from .expr import GateRef, Kron, KronPower, MatrixFile, evaluate, format_expr, parse
from .gates import REGISTRY, GateSpec, build_gate
from .graph import NodeLevelTss, TssGraph, build_tss, node_patterns_isomorphic, node_tss
from .matrix import (
    ComplexMatrix,
    UnitarityReport,
    check_unitarity,
    kron,
    matrix_from_file,
    matrix_to_file,
)
from .metrics import MetricsReport, compute_metrics, islands, out_degree_histogram

__version__ = "0.1.0"
