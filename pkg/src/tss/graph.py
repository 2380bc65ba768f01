"""Support graphs of matrices.

Vertex ``j`` is the basis state ``|j>``; there is an edge ``j -> i`` whenever
``|U[i, j]| > threshold``, so the out-edges of ``j`` are read from column ``j``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .matrix import ComplexMatrix

DEFAULT_THRESHOLD = 1e-12


@dataclass(frozen=True)
class TssGraph:
    """Directed graph on ``0..n-1`` with sorted, duplicate-free successor tuples."""

    n: int
    successors: tuple[tuple[int, ...], ...]
    threshold: float = DEFAULT_THRESHOLD

    def __post_init__(self):
        if len(self.successors) != self.n:
            raise ValueError("successor table must have one entry per vertex")
        for succ in self.successors:
            if any(not 0 <= v < self.n for v in succ):
                raise ValueError("successor index out of range")
            if any(a >= b for a, b in zip(succ, succ[1:])):
                raise ValueError("successors must be strictly increasing")

    @classmethod
    def from_edges(cls, n, edges, threshold=DEFAULT_THRESHOLD):
        succ = [set() for _ in range(n)]
        for j, i in edges:
            succ[j].add(i)
        return cls(n, tuple(tuple(sorted(s)) for s in succ), threshold)

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self.successors)

    def edges(self):
        """All edges ``(j, i)`` in ascending order."""
        return [(j, i) for j, succ in enumerate(self.successors) for i in succ]

    def has_edge(self, j, i) -> bool:
        return bool(self.bitsets[j] >> i & 1)

    @cached_property
    def bitsets(self) -> tuple[int, ...]:
        """Per-vertex successor sets as integer bit masks."""
        rows = []
        for succ in self.successors:
            mask = 0
            for i in succ:
                mask |= 1 << i
            rows.append(mask)
        return tuple(rows)

    @cached_property
    def predecessors(self) -> tuple[tuple[int, ...], ...]:
        pred = [[] for _ in range(self.n)]
        for j, succ in enumerate(self.successors):
            for i in succ:
                pred[i].append(j)
        return tuple(tuple(p) for p in pred)

    def out_degree(self, j) -> int:
        return len(self.successors[j])

    def in_degree(self, i) -> int:
        return len(self.predecessors[i])

    def reversed(self) -> "TssGraph":
        return TssGraph(self.n, self.predecessors, self.threshold)


@dataclass(frozen=True)
class NodeLevelTss:
    """Star view of one vertex's out-edges.

    ``n`` and ``threshold`` are carried over from the full graph so the star
    can be exported with consistent labels.
    """

    source: int
    targets: tuple[int, ...]
    has_self_loop: bool
    n: int
    threshold: float = DEFAULT_THRESHOLD

    def as_graph(self) -> TssGraph:
        succ = [()] * self.n
        succ[self.source] = self.targets
        return TssGraph(self.n, tuple(succ), self.threshold)


def build_tss(m: ComplexMatrix, threshold: float = DEFAULT_THRESHOLD) -> TssGraph:
    if threshold < 0:
        raise ValueError("threshold must be >= 0")
    support = np.abs(m.data) > threshold
    # column j holds the amplitudes of U|j>
    successors = tuple(tuple(int(i) for i in np.flatnonzero(support[:, j])) for j in range(m.dim))
    return TssGraph(m.dim, successors, threshold)


def node_tss(g: TssGraph, j: int) -> NodeLevelTss:
    if not 0 <= j < g.n:
        raise IndexError(f"vertex {j} out of range for graph with {g.n} vertices")
    targets = g.successors[j]
    return NodeLevelTss(j, targets, j in targets, g.n, g.threshold)


def node_patterns_isomorphic(a: NodeLevelTss, b: NodeLevelTss) -> bool:
    """Two stars are isomorphic iff they have equal size and equal self-loop flags."""
    return len(a.targets) == len(b.targets) and a.has_self_loop == b.has_self_loop
