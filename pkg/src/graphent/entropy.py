"""Spectral entropy functionals and closed forms for named graph families.

All values are in nats; callers wanting bits divide by log 2. Inputs may
be a spectrum (1-d, any order) or a density matrix (2-d, eigensolved
here); either way the eigenvalues must form a probability vector after
rounding-noise clamping.
"""
from __future__ import annotations

import math

import numpy as np

from .graph import Graph
from .linalg import RANK_EPS, clamp_spectrum, jacobi_eigen
from .qstate import rho_V

LOG2 = math.log(2.0)
TRACE_TOL = 1e-10


def _probabilities(spec) -> np.ndarray:
    spec = np.asarray(spec, dtype=float)
    if spec.ndim == 2:
        spec = jacobi_eigen(spec)
    elif spec.ndim != 1:
        raise ValueError(f"expected a spectrum or a density matrix, got ndim={spec.ndim}")
    probs = clamp_spectrum(spec)
    total = probs.sum()
    if abs(total - 1.0) > TRACE_TOL:
        raise ValueError(f"eigenvalues sum to {total}, not a unit-trace spectrum")
    return probs


def von_neumann(spec) -> float:
    """-sum lam log lam over the eigenvalues, with 0 log 0 = 0."""
    probs = _probabilities(spec)
    nz = probs[probs > 0.0]
    return float(-(nz * np.log(nz)).sum())


def renyi(spec, p: float, rank_eps: float = RANK_EPS) -> float:
    """Order-p entropy log(sum lam^p)/(1-p).

    p=1 is the Von Neumann limit; p=0 counts the eigenvalues above the
    rank threshold. Non-increasing in p.
    """
    if p < 0:
        raise ValueError(f"order must be >= 0, got {p}")
    probs = _probabilities(spec)
    if p == 0:
        return float(math.log(int((probs > rank_eps).sum())))
    if p == 1:
        nz = probs[probs > 0.0]
        return float(-(nz * np.log(nz)).sum())
    return float(math.log((probs**p).sum()) / (1.0 - p))


def structural(g: Graph) -> float:
    """Gap between the Von Neumann and order-2 entropies of the graph's
    density matrix; non-negative and at most (log 2)/2 for connected
    graphs."""
    probs = jacobi_eigen(rho_V(g))
    return von_neumann(probs) - renyi(probs, 2.0)


def complete_vn(n: int) -> float:
    """Entropy of the complete graph: log(n-1), the maximum over
    connected graphs on n vertices."""
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2, got {n}")
    return math.log(n - 1)


def regular_renyi2(n: int, k: int) -> float:
    """Order-2 entropy of a k-regular graph on n vertices:
    log(n / (1 + 1/k)). Minimized over k by the cycle (k=2)."""
    if not 1 <= k < n:
        raise ValueError(f"regular graph needs 1 <= k < n, got k={k}, n={n}")
    return math.log(n / (1.0 + 1.0 / k))


def bipartite_vn(n: int) -> float:
    """Entropy of any complete bipartite graph on n vertices:
    log n - (2/n) log 2, independent of the part split."""
    if n < 2:
        raise ValueError(f"complete bipartite graph needs n >= 2, got {n}")
    return math.log(n) - (2.0 / n) * LOG2


def bipartite_renyi2(n: int) -> float:
    """Order-2 entropy of any complete bipartite graph on n vertices:
    -log((n+2)/n^2), independent of the part split."""
    if n < 2:
        raise ValueError(f"complete bipartite graph needs n >= 2, got {n}")
    return -math.log((n + 2) / n**2)


CLOSED_FORMS = {
    "complete_vn": complete_vn,
    "regular_renyi2": regular_renyi2,
    "bipartite_vn": bipartite_vn,
    "bipartite_renyi2": bipartite_renyi2,
}


def closed_form(family: str, *params: int) -> float:
    try:
        fn = CLOSED_FORMS[family]
    except KeyError:
        raise ValueError(f"unknown closed form {family!r}") from None
    return fn(*params)


def majorizes(a, b) -> bool:
    """True when probability vector a is majorized by b: every prefix sum
    of the sorted a is dominated by the corresponding prefix of b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"need equal-length vectors, got shapes {a.shape} and {b.shape}")
    for v in (a, b):
        if v.min(initial=0.0) < -TRACE_TOL or abs(v.sum() - 1.0) > TRACE_TOL:
            raise ValueError("inputs must be probability vectors")
    pa = np.cumsum(np.sort(a)[::-1])
    pb = np.cumsum(np.sort(b)[::-1])
    return bool((pa <= pb + TRACE_TOL).all())
