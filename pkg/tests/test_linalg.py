import numpy as np
import pytest

from graphent.linalg import (
    ConvergenceError,
    clamp_spectrum,
    jacobi_eigen,
    kron,
    outer,
    partial_trace,
    partial_trace_pure,
)


def test_rank_one_shift():
    vals = jacobi_eigen(np.array([[1.0, -1.0], [-1.0, 1.0]]))
    np.testing.assert_allclose(vals, [2.0, 0.0], atol=1e-14)


def test_triangle_laplacian_spectrum():
    # normalized Laplacian of the triangle; eigenvalues 3/2, 3/2, 0 from
    # the characteristic polynomial (I - A/2 with A eigenvalues 2, -1, -1)
    lap = np.array([[1.0, -0.5, -0.5], [-0.5, 1.0, -0.5], [-0.5, -0.5, 1.0]])
    np.testing.assert_allclose(jacobi_eigen(lap), [1.5, 1.5, 0.0], atol=1e-13)


def test_identity():
    np.testing.assert_array_equal(jacobi_eigen(np.eye(5)), np.ones(5))


def test_zero_matrix():
    np.testing.assert_array_equal(jacobi_eigen(np.zeros((4, 4))), np.zeros(4))


def test_round_trip_recovers_diagonal(rng):
    for n in (3, 6, 12):
        q, _ = np.linalg.qr(rng.standard_normal((n, n)))
        d = np.sort(rng.uniform(-3, 3, n))[::-1]
        a = q @ np.diag(d) @ q.T
        a = (a + a.T) / 2
        np.testing.assert_allclose(jacobi_eigen(a), d, atol=1e-9)


def test_matches_numpy_oracle(rng):
    for n in (2, 5, 9, 17):
        a = rng.standard_normal((n, n))
        a = (a + a.T) / 2
        expected = np.sort(np.linalg.eigvalsh(a))[::-1]
        np.testing.assert_allclose(jacobi_eigen(a), expected, atol=1e-10)


def test_trace_preserved(rng):
    for _ in range(10):
        n = int(rng.integers(2, 10))
        a = rng.uniform(-1, 1, (n, n))
        a = (a + a.T) / 2
        assert abs(jacobi_eigen(a).sum() - np.trace(a)) < 1e-10


def test_input_not_mutated():
    a = np.array([[2.0, 1.0], [1.0, 2.0]])
    before = a.copy()
    jacobi_eigen(a)
    np.testing.assert_array_equal(a, before)


def test_input_validation():
    with pytest.raises(ValueError, match="square"):
        jacobi_eigen(np.ones((2, 3)))
    with pytest.raises(ValueError, match="symmetric"):
        jacobi_eigen(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError, match="tolerance"):
        jacobi_eigen(np.eye(2), tol=0.0)


def test_sweep_cap_reports_sweeps_and_residual(rng, monkeypatch):
    import graphent.linalg as linalg

    monkeypatch.setattr(linalg, "SWEEP_CAP", 1)
    a = rng.standard_normal((8, 8))
    a = (a + a.T) / 2
    with pytest.raises(ConvergenceError) as info:
        jacobi_eigen(a, tol=1e-15)
    assert info.value.sweeps == 1
    assert info.value.residual > info.value.target > 0


def test_clamp_spectrum():
    out = clamp_spectrum(np.array([1.0, 1e-12, -5e-11]))
    np.testing.assert_array_equal(out, [1.0, 1e-12, 0.0])
    with pytest.raises(ValueError, match="clamp"):
        clamp_spectrum(np.array([1.0, -1e-9]))


def test_partial_trace_bell_state():
    bell = np.zeros(4)
    bell[0] = bell[3] = 1 / np.sqrt(2)
    rho = np.outer(bell, bell)
    for keep in ("first", "second"):
        np.testing.assert_allclose(
            partial_trace(rho, (2, 2), keep), np.eye(2) / 2, atol=1e-15
        )


def test_partial_trace_product_state(rng):
    a = rng.uniform(0, 1, (3, 3))
    a = (a + a.T) / 2
    b = rng.uniform(0, 1, (2, 2))
    b = (b + b.T) / 2
    b /= np.trace(b)
    np.testing.assert_allclose(partial_trace(np.kron(a, b), (3, 2), "first"), a, atol=1e-14)
    a /= np.trace(a)
    np.testing.assert_allclose(partial_trace(np.kron(a, b), (3, 2), "second"), b, atol=1e-14)


def test_partial_trace_preserves_trace(rng):
    rho = rng.standard_normal((6, 6))
    rho = (rho + rho.T) / 2
    for keep, d in (("first", 2), ("second", 3)):
        assert abs(np.trace(partial_trace(rho, (2, 3), keep)) - np.trace(rho)) < 1e-12


def test_partial_trace_validation():
    with pytest.raises(ValueError, match="incompatible"):
        partial_trace(np.eye(5), (2, 2), "first")
    with pytest.raises(ValueError, match="keep"):
        partial_trace(np.eye(4), (2, 2), "both")


def test_pure_trace_of_two_vertex_graph_state():
    # state of the single-edge graph, written out longhand: the edge
    # contributes (e0 - e1) x (arc 01 - arc 10) / sqrt(2)
    psi = np.zeros(8)
    psi[1] = psi[6] = 1 / np.sqrt(2)
    psi[2] = psi[5] = -1 / np.sqrt(2)
    psi /= np.linalg.norm(psi)
    half_lap = np.array([[0.5, -0.5], [-0.5, 0.5]])
    np.testing.assert_allclose(
        partial_trace_pure(psi, (2, 4), "first"), half_lap, atol=1e-15
    )


def test_pure_trace_cross_validates_dense_route(rng):
    for d1, d2 in ((2, 4), (3, 9), (4, 5)):
        psi = rng.standard_normal(d1 * d2)
        psi /= np.linalg.norm(psi)
        rho = np.outer(psi, psi)
        for keep in ("first", "second"):
            np.testing.assert_allclose(
                partial_trace_pure(psi, (d1, d2), keep),
                partial_trace(rho, (d1, d2), keep),
                atol=1e-13,
            )


def test_pure_trace_schmidt_property(rng):
    for d1, d2 in ((2, 4), (4, 9), (5, 25)):
        psi = rng.standard_normal(d1 * d2)
        psi /= np.linalg.norm(psi)
        first = jacobi_eigen(partial_trace_pure(psi, (d1, d2), "first"))
        second = jacobi_eigen(partial_trace_pure(psi, (d1, d2), "second"))
        k = min(d1, d2)
        np.testing.assert_allclose(first[:k], second[:k], atol=1e-9)
        assert np.abs(second[k:]).max(initial=0.0) < 1e-9


def test_kron_outer_conventions():
    e0 = np.array([1.0, 0.0])
    e1 = np.array([0.0, 1.0])
    composite = kron(e0, e1)
    assert composite[1] == 1.0 and composite.sum() == 1.0
    np.testing.assert_array_equal(kron(np.eye(2), np.eye(3)), np.eye(6))
    v = np.array([0.6, 0.8])
    p = outer(v, v)
    np.testing.assert_allclose(p @ p, p, atol=1e-15)
    assert abs(np.trace(p) - 1.0) < 1e-15
