"""Structural metrics of support graphs.

Definitions used throughout:

* sink: a vertex with in-degree >= 1; source: a vertex with out-degree >= 1.
* loops: every simple directed cycle, self loops included.
* multiplicity: mean in-degree, i.e. ``edges / n``.
* islands: weakly connected components.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cycles import CycleBudget, count_simple_cycles
from .graph import TssGraph


@dataclass(frozen=True)
class MetricsReport:
    n: int
    num_sinks: int
    num_sources: int
    sink_source_ratio: float
    num_self_loops: int
    num_cycles: int
    cycles_capped: bool
    multiplicity: float
    out_degree_histogram: dict[int, int] = field(compare=False)
    num_islands: int
    islands: tuple[tuple[int, ...], ...] = ()
    name: str = ""


def out_degree_histogram(g: TssGraph) -> dict[int, int]:
    return {j: len(succ) for j, succ in enumerate(g.successors)}


def islands(g: TssGraph) -> list[tuple[int, ...]]:
    """Weakly connected components, each sorted, ordered by smallest member."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j, i in g.edges():
        a, b = find(j), find(i)
        if a != b:
            parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), []).append(v)
    return sorted(tuple(members) for members in groups.values())


def compute_metrics(g: TssGraph, budget: CycleBudget = CycleBudget(), name: str = "") -> MetricsReport:
    sinks = sum(1 for v in range(g.n) if g.in_degree(v) > 0)
    sources = sum(1 for v in range(g.n) if g.out_degree(v) > 0)
    ratio = sinks / sources if sources else float("nan")
    self_loops = sum(1 for v in range(g.n) if g.has_edge(v, v))
    cycles, capped = count_simple_cycles(g, budget)
    comps = islands(g)
    return MetricsReport(
        n=g.n,
        num_sinks=sinks,
        num_sources=sources,
        sink_source_ratio=ratio,
        num_self_loops=self_loops,
        num_cycles=cycles,
        cycles_capped=capped,
        multiplicity=g.num_edges / g.n,
        out_degree_histogram=out_degree_histogram(g),
        num_islands=len(comps),
        islands=tuple(comps),
        name=name,
    )
