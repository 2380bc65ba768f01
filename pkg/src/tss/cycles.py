"""Strongly connected components and capped simple-cycle counting.

The inner cycle search runs in a compiled extension when it is available and
falls back to pure Python otherwise. Set ``TSS_PURE_PYTHON=1`` to force the
fallback.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _cycles_py
from .graph import TssGraph

DEFAULT_CYCLE_CAP = 1_000_001

try:
    if os.environ.get("TSS_PURE_PYTHON"):
        raise ImportError("pure-Python backend requested")
    from . import _cycles_ext as _kernel

    BACKEND = "cython"
except ImportError:
    _kernel = _cycles_py
    BACKEND = "python"

KERNELS = {"python": _cycles_py.count_cycles}
if BACKEND == "cython":
    KERNELS["cython"] = _kernel.count_cycles


@dataclass(frozen=True)
class CycleBudget:
    max_cycles: int = DEFAULT_CYCLE_CAP
    max_length: Optional[int] = None

    def __post_init__(self):
        if self.max_cycles < 1:
            raise ValueError("max_cycles must be >= 1")
        if self.max_length is not None and self.max_length < 1:
            raise ValueError("max_length must be >= 1")


def strongly_connected_components(g: TssGraph) -> list[tuple[int, ...]]:
    """Tarjan's algorithm, iterative.

    Components are returned as sorted tuples, ordered by smallest member.
    """
    index = [-1] * g.n
    low = [0] * g.n
    on_stack = [False] * g.n
    stack = []
    components = []
    counter = 0
    for root in range(g.n):
        if index[root] >= 0:
            continue
        work = [(root, 0)]
        while work:
            v, k = work[-1]
            if k == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            succ = g.successors[v]
            while k < len(succ):
                w = succ[k]
                k += 1
                if index[w] < 0:
                    work[-1] = (v, k)
                    work.append((w, 0))
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            else:
                work.pop()
                if work:
                    parent = work[-1][0]
                    low[parent] = min(low[parent], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    components.append(tuple(sorted(comp)))
    components.sort()
    return components


def _component_csr(g: TssGraph, comp):
    local = {v: k for k, v in enumerate(comp)}
    indptr = [0]
    indices = []
    for v in comp:
        for w in g.successors[v]:
            if w != v and w in local:
                indices.append(local[w])
        indptr.append(len(indices))
    return np.asarray(indptr, dtype=np.int64), np.asarray(indices, dtype=np.int64)


def count_simple_cycles(
    g: TssGraph, budget: CycleBudget = CycleBudget(), backend: Optional[str] = None
) -> tuple[int, bool]:
    """Count simple directed cycles, self loops included.

    Returns ``(count, capped)``. Counting stops as soon as the running total
    reaches ``budget.max_cycles``; ``capped`` then means "at least this many".
    ``backend`` selects a kernel from :data:`KERNELS` (default: fastest).
    """
    kernel = KERNELS[backend] if backend else _kernel.count_cycles
    cap = budget.max_cycles
    max_length = budget.max_length or 0
    total = sum(1 for v in range(g.n) if g.has_edge(v, v))
    if total >= cap:
        return cap, True
    if max_length == 1:
        return total, False
    for comp in strongly_connected_components(g):
        if len(comp) < 2:
            continue
        indptr, indices = _component_csr(g, comp)
        total += kernel(indptr, indices, cap - total, max_length)
        if total >= cap:
            return cap, True
    return total, False
