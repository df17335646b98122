"""Graph Laplacians and incidence factorizations.

Four matrices per graph: the combinatorial Laplacian D - A, its signless
counterpart D + A, and both degree-normalized forms. The normalized pair
sums to twice the identity, so one spectrum determines the other.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import Graph

IDENTITY_TOL = 1e-14


class IsolatedVertexError(ValueError):
    """Degree-normalized forms are undefined when some degree is zero."""


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    for i, j in g.edges:
        a[i, j] = 1.0
        a[j, i] = 1.0
    return a


def combinatorial(g: Graph) -> np.ndarray:
    """Degree matrix minus adjacency; rows sum to zero."""
    lap = -adjacency(g)
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def positive(g: Graph) -> np.ndarray:
    """Degree matrix plus adjacency (signless Laplacian)."""
    lap = adjacency(g)
    lap[np.diag_indices(g.n)] = g.degrees()
    return lap


def _inv_sqrt_degrees(g: Graph) -> np.ndarray:
    deg = g.degrees()
    for i, d in enumerate(deg):
        if d == 0:
            raise IsolatedVertexError(f"vertex {i} is isolated")
    return 1.0 / np.sqrt(np.asarray(deg, dtype=float))


def symmetric(g: Graph) -> np.ndarray:
    """Degree-normalized Laplacian: unit diagonal, -1/sqrt(d_i d_j) between
    neighbors.

    Built entrywise; cross-checked on every call against the congruence
    route D^{-1/2} (D - A) D^{-1/2}, which must agree to 1e-14.
    """
    s = _inv_sqrt_degrees(g)
    lap = np.eye(g.n)
    for i, j in g.edges:
        lap[i, j] = -s[i] * s[j]
        lap[j, i] = lap[i, j]
    congruence = (combinatorial(g) * s[:, None]) * s[None, :]
    if np.abs(lap - congruence).max() > IDENTITY_TOL:
        raise RuntimeError("normalized Laplacian construction routes disagree")
    return lap


def positive_symmetric(g: Graph) -> np.ndarray:
    """Degree-normalized signless Laplacian; equals 2I minus the normalized
    Laplacian, so its spectrum is {2 - lam}."""
    s = _inv_sqrt_degrees(g)
    lap = np.eye(g.n)
    for i, j in g.edges:
        lap[i, j] = s[i] * s[j]
        lap[j, i] = lap[i, j]
    return lap


@dataclass(frozen=True)
class OrientedIncidence:
    """Vertex-by-edge incidence matrix with its recorded orientation.

    Column k has +1 at the source and -1 at the sink of edge k (edges in
    lexicographic order). The product M M^T is the combinatorial
    Laplacian for every orientation.
    """

    matrix: np.ndarray
    orientation: tuple[tuple[int, int], ...]


def incidence(g: Graph, sources: list[int] | None = None) -> OrientedIncidence:
    """Oriented incidence matrix; default source is the smaller endpoint."""
    edges = g.sorted_edges()
    if sources is None:
        sources = [i for i, _ in edges]
    if len(sources) != len(edges):
        raise ValueError(f"need one source per edge, got {len(sources)} for m={len(edges)}")
    mat = np.zeros((g.n, len(edges)))
    orient = []
    for k, ((i, j), src) in enumerate(zip(edges, sources)):
        if src == i:
            snk = j
        elif src == j:
            snk = i
        else:
            raise ValueError(f"source {src} is not an endpoint of edge ({i}, {j})")
        mat[src, k] = 1.0
        mat[snk, k] = -1.0
        orient.append((src, snk))
    return OrientedIncidence(mat, tuple(orient))


def normalized_incidence(g: Graph, sources: list[int] | None = None) -> np.ndarray:
    """Row-rescaled incidence S with S S^T equal to the normalized
    Laplacian, independent of the orientation."""
    s = _inv_sqrt_degrees(g)
    return incidence(g, sources).matrix * s[:, None]


def doubled_incidence(g: Graph) -> np.ndarray:
    """Orientation-free incidence over the doubled (arc) edge space.

    Columns are all forward arcs (i, j), i < j, in lexicographic order,
    then all reverse arcs in the same order. Satisfies
    doubled_incidence(g) @ doubled_incidence(g).T == 2 * symmetric(g).
    """
    s = _inv_sqrt_degrees(g)
    edges = g.sorted_edges()
    m = len(edges)
    mat = np.zeros((g.n, 2 * m))
    for k, (i, j) in enumerate(edges):
        mat[i, k] = s[i]
        mat[j, k] = -s[j]
        mat[i, m + k] = -s[i]
        mat[j, m + k] = s[j]
    return mat
