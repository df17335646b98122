"""Dense real symmetric linear algebra: cyclic Jacobi eigensolver,
tensor products, and partial traces over a bipartite factorization.

Composite index convention everywhere: a vector in the d1 x d2 product
space stores component (i, k) at flat index i*d2 + k.
"""
from __future__ import annotations

import numpy as np
from numba import njit

from numpy import kron, outer  # standard Kronecker/outer semantics

EIG_CLAMP_EPS = 1e-10
RANK_EPS = 1e-9
DEFAULT_TOL = 1e-12
SWEEP_CAP = 100


class ConvergenceError(RuntimeError):
    """Jacobi sweep cap reached before the off-diagonal norm target."""

    def __init__(self, sweeps: int, residual: float, target: float):
        self.sweeps = sweeps
        self.residual = residual
        self.target = target
        super().__init__(
            f"no convergence after {sweeps} sweeps: "
            f"off-diagonal norm {residual:.3e} > target {target:.3e}"
        )


@njit(cache=True, nogil=True)
def _off_norm(a):
    n = a.shape[0]
    s = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            s += a[i, j] * a[i, j]
    return np.sqrt(2.0 * s)


@njit(cache=True, nogil=True)
def _jacobi_kernel(a, threshold, max_sweeps):
    """Cyclic Jacobi, row-major upper-triangle sweep order, in place.

    Returns (sweeps, final off-diagonal norm); eigenvalues are left on
    the diagonal once the norm drops to the threshold.
    """
    n = a.shape[0]
    sweeps = 0
    off = _off_norm(a)
    while off > threshold and sweeps < max_sweeps:
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for k in range(n):
                    if k == p or k == q:
                        continue
                    akp = a[k, p]
                    akq = a[k, q]
                    a[k, p] = c * akp - s * akq
                    a[p, k] = a[k, p]
                    a[k, q] = s * akp + c * akq
                    a[q, k] = a[k, q]
        sweeps += 1
        off = _off_norm(a)
    return sweeps, off


def jacobi_eigen(a: np.ndarray, tol: float = DEFAULT_TOL) -> np.ndarray:
    """Eigenvalues of a symmetric matrix, sorted non-increasing.

    Rotates until the off-diagonal Frobenius norm falls below tol times
    the Frobenius norm of the input. Deterministic for a fixed input.
    """
    a = np.asarray(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix is not symmetric as stored")
    if tol <= 0:
        raise ValueError(f"tolerance must be positive, got {tol}")
    work = a.copy()
    fro = np.linalg.norm(work)
    if fro == 0.0:
        return np.zeros(work.shape[0])
    threshold = tol * fro
    sweeps, off = _jacobi_kernel(work, threshold, SWEEP_CAP)
    if off > threshold:
        raise ConvergenceError(sweeps, off, threshold)
    return np.sort(np.diag(work))[::-1]


def clamp_spectrum(values: np.ndarray, eps: float = EIG_CLAMP_EPS) -> np.ndarray:
    """Zero out rounding-level negative eigenvalues; reject genuine ones."""
    values = np.asarray(values, dtype=float)
    low = values.min(initial=0.0)
    if low < -eps:
        raise ValueError(f"eigenvalue {low} below the -{eps} clamp window")
    return np.where(values < 0.0, 0.0, values)


def partial_trace(rho: np.ndarray, dims: tuple[int, int], keep: str) -> np.ndarray:
    """Trace out one factor of a (d1*d2) x (d1*d2) operator.

    keep="first" contracts the second factor: out[i, j] = sum_k
    rho[i*d2+k, j*d2+k]; keep="second" contracts the first.
    """
    d1, d2 = dims
    rho = np.asarray(rho, dtype=float)
    if rho.shape != (d1 * d2, d1 * d2):
        raise ValueError(f"operator shape {rho.shape} incompatible with dims {dims}")
    t = rho.reshape(d1, d2, d1, d2)
    if keep == "first":
        return np.einsum("ikjk->ij", t)
    if keep == "second":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def partial_trace_pure(psi: np.ndarray, dims: tuple[int, int], keep: str) -> np.ndarray:
    """Partial trace of the rank-1 operator psi psi^T without forming it.

    Contracting the reshaped d1 x d2 coefficient matrix costs
    d1*d2*max(d1, d2) instead of (d1*d2)^2.
    """
    d1, d2 = dims
    psi = np.asarray(psi, dtype=float)
    if psi.shape != (d1 * d2,):
        raise ValueError(f"state shape {psi.shape} incompatible with dims {dims}")
    y = psi.reshape(d1, d2)
    if keep == "first":
        out = y @ y.T
    elif keep == "second":
        out = y.T @ y
    else:
        raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")
    # BLAS does not promise bit-identical (i,j)/(j,i) accumulation; the
    # eigensolver requires exact stored symmetry.
    return (out + out.T) / 2.0
