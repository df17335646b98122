import math

import numpy as np
import pytest

from graphent.graph import DisconnectedGraphError, Graph, complete, cycle, star
from graphent.laplacian import positive_symmetric, symmetric
from graphent.linalg import jacobi_eigen, outer, partial_trace
from graphent.qstate import (
    PureState,
    psi,
    purification_survey,
    reductions,
    rho_E,
    rho_V,
    verify_purification,
)

from conftest import random_connected

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])


def test_two_vertex_state_amplitudes():
    state = psi(complete(2))
    raw = np.zeros(8)
    r2 = 1 / math.sqrt(2)
    raw[1], raw[2], raw[5], raw[6] = r2, -r2, -r2, r2
    np.testing.assert_allclose(state.amplitudes, raw, atol=1e-15)
    # normalized amplitudes are +-1/2 on the four supported indices
    np.testing.assert_allclose(sorted(state.ket()[state.ket() != 0]), [-0.5, -0.5, 0.5, 0.5])


def test_state_support_restricted_to_arcs(rng):
    for _ in range(10):
        g = random_connected(rng, int(rng.integers(2, 7)))
        state = psi(g)
        n = g.n
        arcs = {(i, j) for i, j in g.edges} | {(j, i) for i, j in g.edges}
        support = np.flatnonzero(state.amplitudes)
        for idx in support:
            arc = (idx % (n * n)) // n, idx % n
            assert arc in arcs


def test_state_norm_squared_is_vertex_count(rng):
    for g in (complete(2), P3, cycle(5), star(6)):
        state = psi(g)
        assert abs(state.norm**2 - g.n) < 1e-12
        assert abs(np.linalg.norm(state.ket()) - 1.0) < 1e-12
    for _ in range(5):
        g = random_connected(rng, int(rng.integers(2, 8)))
        assert abs(psi(g).norm ** 2 - g.n) < 1e-12


def test_triangle_state_support_count():
    # 4 supported composite indices per edge, disjoint across the 3 edges
    state = psi(complete(3))
    assert np.count_nonzero(state.amplitudes) == 12


def test_state_preconditions():
    with pytest.raises(DisconnectedGraphError):
        psi(Graph(3, frozenset({(0, 1)})))
    with pytest.raises(ValueError):
        psi(Graph(1, frozenset()))


def test_rho_v_small():
    np.testing.assert_allclose(rho_V(complete(2)), [[0.5, -0.5], [-0.5, 0.5]])
    np.testing.assert_allclose(jacobi_eigen(rho_V(complete(2))), [1.0, 0.0], atol=1e-14)
    np.testing.assert_allclose(jacobi_eigen(rho_V(P3)), [2 / 3, 1 / 3, 0.0], atol=1e-12)


def test_rho_v_complete_uniform_nonzero_spectrum():
    for n in (3, 5, 8):
        lam = jacobi_eigen(rho_V(complete(n)))
        np.testing.assert_allclose(lam[: n - 1], np.full(n - 1, 1 / (n - 1)), atol=1e-12)
        assert abs(lam[-1]) < 1e-12


def test_rho_e_small():
    np.testing.assert_allclose(rho_E(complete(2)), [[0.5, 0.5], [0.5, 0.5]])
    np.testing.assert_allclose(
        jacobi_eigen(rho_E(complete(3))), [2 / 3, 1 / 6, 1 / 6], atol=1e-12
    )


def test_density_pair_complements(rng):
    for _ in range(8):
        g = random_connected(rng, int(rng.integers(2, 9)))
        np.testing.assert_array_equal(rho_V(g) + rho_E(g), (2 / g.n) * np.eye(g.n))
        for rho in (rho_V(g), rho_E(g)):
            assert abs(np.trace(rho) - 1.0) < 1e-12
            assert jacobi_eigen(rho).min() > -1e-10


def test_density_preconditions():
    with pytest.raises(DisconnectedGraphError):
        rho_V(Graph(2, frozenset()))


def test_reductions_against_dense_route(rng):
    # direct contraction of the state vector agrees with tracing the
    # explicitly formed rank-1 density matrix
    for _ in range(5):
        g = random_connected(rng, int(rng.integers(2, 5)))
        state = psi(g)
        vertex_red, arc_red = reductions(state)
        dims = (g.n, g.n * g.n)
        dense = outer(state.amplitudes, state.amplitudes)
        np.testing.assert_allclose(vertex_red, partial_trace(dense, dims, "first"), atol=1e-12)
        np.testing.assert_allclose(arc_red, partial_trace(dense, dims, "second"), atol=1e-12)


def test_vertex_reduction_is_normalized_laplacian(rng):
    for _ in range(10):
        g = random_connected(rng, int(rng.integers(2, 8)))
        vertex_red, _ = reductions(psi(g))
        assert np.abs(vertex_red - symmetric(g)).max() < 1e-12


def test_schmidt_entropy_equality(rng):
    for _ in range(5):
        g = random_connected(rng, int(rng.integers(2, 7)))
        state = psi(g)
        vertex_red, arc_red = reductions(state)
        lam_v = jacobi_eigen(vertex_red / g.n)
        lam_a = jacobi_eigen(arc_red / g.n)
        h = lambda lam: -sum(x * math.log(x) for x in lam if x > 1e-12)
        assert abs(h(lam_v) - h(lam_a)) < 1e-9


def test_verify_two_vertex():
    rep = verify_purification(complete(2))
    assert rep.vertex_trace_matches
    assert rep.vertex_trace_residual < 1e-12
    assert rep.arc_trace_isospectral and rep.bipartite


def test_verify_path_bipartite():
    rep = verify_purification(P3)
    assert rep.vertex_trace_matches
    assert rep.arc_trace_isospectral
    # arc reduction carries the signless spectrum {2, 1, 0-block}
    nz = rep.arc_trace_spectrum[rep.arc_trace_spectrum > 1e-9]
    sig = jacobi_eigen(positive_symmetric(P3))
    np.testing.assert_allclose(nz, sig[sig > 1e-9], atol=1e-9)


def test_verify_triangle_not_isospectral():
    rep = verify_purification(complete(3))
    assert rep.vertex_trace_matches
    assert not rep.bipartite
    assert not rep.arc_trace_isospectral


def test_verify_dimension_guard():
    with pytest.raises(ValueError, match="n <= 7"):
        verify_purification(complete(8))


def test_survey_small():
    rows = purification_survey(3)
    assert [r["n"] for r in rows] == [2, 3]
    assert rows[0] == {"n": 2, "graphs": 1, "bipartite": 1, "isospectral": 1, "mismatches": []}
    assert rows[1]["graphs"] == 4
    # the three labeled paths are bipartite, the triangle is not
    assert rows[1]["bipartite"] == 3
    assert rows[1]["isospectral"] == 3
    assert rows[1]["mismatches"] == []


def test_pure_state_is_frozen():
    state = psi(complete(2))
    assert isinstance(state, PureState)
    with pytest.raises(AttributeError):
        state.n = 5
