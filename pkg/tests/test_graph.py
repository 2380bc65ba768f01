import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import product_edges, support_edges
from tss.expr import evaluate, parse
from tss.gates import build_gate
from tss.graph import TssGraph, build_tss, node_patterns_isomorphic, node_tss
from tss.matrix import ComplexMatrix, kron


def tss(expr):
    return build_tss(evaluate(parse(expr)))


def test_px_two_cycle():
    g = build_tss(build_gate("px"), 1e-12)
    assert g.edges() == [(0, 1), (1, 0)]


def test_identity_self_loops_only():
    g = build_tss(ComplexMatrix.identity(4), 1e-12)
    assert g.edges() == [(v, v) for v in range(4)]


def test_px4_complement_pairs():
    g = tss("px (x) px (x) px (x) px")
    assert g.successors == tuple((15 - j,) for j in range(16))


def test_normalised_and_raw_had16_same_graph():
    assert build_tss(build_gate("had16")).successors == build_tss(build_gate("raw_had16")).successors


def test_column_defines_out_edges():
    # U|0> = |1> only: the single edge leaves vertex 0
    m = ComplexMatrix([[1, 0], [1, 0]])
    assert build_tss(m).edges() == [(0, 0), (0, 1)]


def test_threshold_recorded_and_applied():
    m = ComplexMatrix([[1, 1e-13], [0, 1]])
    assert build_tss(m, 0).edges() == [(0, 0), (1, 0), (1, 1)]
    g = build_tss(m, 1e-12)
    assert g.edges() == [(0, 0), (1, 1)]
    assert g.threshold == 1e-12
    with pytest.raises(ValueError):
        build_tss(m, -1)


def test_berkeley_products_are_not_truncated():
    # cos(3pi/8) * sin(pi/8) sized products must survive the default threshold
    g = tss("berkeley (x) berkeley (x) berkeley")
    assert all(len(s) == 8 for s in g.successors)


def test_node_tss_gr4():
    star = node_tss(tss("gr4"), 0)
    assert star.targets == (0, 1, 2, 3)
    assert star.has_self_loop


def test_node_tss_identity():
    assert node_tss(build_tss(ComplexMatrix.identity(2)), 0).targets == (0,)


def test_node_tss_out_of_range():
    with pytest.raises(IndexError):
        node_tss(tss("px"), 2)


def test_bb_nodes_have_four_targets():
    g = tss("berkeley (x) berkeley")
    for j in range(16):
        star = node_tss(g, j)
        assert len(star.targets) == 4 and star.has_self_loop


def test_isomorphism():
    bb = tss("berkeley (x) berkeley")
    assert all(node_patterns_isomorphic(node_tss(bb, a), node_tss(bb, b)) for a in range(16) for b in range(16))
    bp = tss("berkeley (x) px")
    assert all(node_patterns_isomorphic(node_tss(bp, a), node_tss(bp, b)) for a in range(8) for b in range(8))
    i2 = build_tss(ComplexMatrix.identity(2))
    assert not node_patterns_isomorphic(node_tss(i2, 0), node_tss(tss("px"), 0))


def test_star_as_graph():
    star = node_tss(tss("gr4"), 2)
    assert star.as_graph().edges() == [(2, 0), (2, 1), (2, 2), (2, 3)]


def test_graph_validation():
    with pytest.raises(ValueError):
        TssGraph(2, ((1,),))
    with pytest.raises(ValueError):
        TssGraph(2, ((2,), ()))
    with pytest.raises(ValueError):
        TssGraph(2, ((1, 0), ()))


# --- properties ----------------------------------------------------------------

support_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.sampled_from([0, 0, 1, -0.5, 1j]), min_size=n * n, max_size=n * n).map(
        lambda xs: ComplexMatrix(np.array(xs, dtype=complex).reshape(n, n))
    )
)


@given(support_matrices)
def test_transpose_duality(m):
    assert build_tss(m).reversed().successors == build_tss(m.transpose()).successors


@given(support_matrices)
def test_edge_count_equals_support_size(m):
    g = build_tss(m)
    assert g.num_edges == int(np.count_nonzero(np.abs(m.data) > 1e-12))
    assert g.edges() == support_edges(m.data.tolist())
    assert all(list(s) == sorted(set(s)) for s in g.successors)


def _all_support_matrices(n):
    for bits in itertools.product((0, 1), repeat=n * n):
        yield ComplexMatrix(np.array(bits, dtype=complex).reshape(n, n))


def test_kron_support_product_law_exhaustive():
    # every 2x2 support against every 2x2 support, plus a sample of 3x3 and 4x4 shapes
    twos = list(_all_support_matrices(2))
    rng = np.random.default_rng(7)
    others = [ComplexMatrix((rng.random((n, n)) < 0.5).astype(complex)) for n in (3, 4) for _ in range(12)]
    for a in twos + others:
        ga = build_tss(a)
        for b in twos + others[:6]:
            if a.dim * b.dim > 16:
                continue
            gb = build_tss(b)
            gab = build_tss(kron(a, b))
            assert gab.edges() == product_edges(ga.edges(), b.dim, gb.edges())


@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_unitary_graphs_have_no_isolated_vertices(seed, n):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    g = build_tss(ComplexMatrix(q))
    assert all(g.out_degree(v) >= 1 and g.in_degree(v) >= 1 for v in range(n))


@given(st.permutations(list(range(6))))
def test_permutation_matrices_are_one_regular(perm):
    m = np.zeros((6, 6))
    for j, i in enumerate(perm):
        m[i, j] = 1
    g = build_tss(ComplexMatrix(m))
    assert all(g.out_degree(v) == 1 and g.in_degree(v) == 1 for v in range(6))
    assert g.successors == tuple((i,) for i in perm)
