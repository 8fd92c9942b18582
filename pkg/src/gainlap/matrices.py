"""Dense matrices attached to a gain graph.

All builders return ``complex128`` numpy arrays that have been checked to be
Hermitian. Vertex order is the graph's vertex order.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatchError, IsolatedVertexError, NonRealFormError, NotHermitianError
from .graph import GainGraph

HERMITIAN_TOL = 1e-12
FORM_IMAG_TOL = 1e-10


def check_hermitian(m, tol: float = HERMITIAN_TOL) -> np.ndarray:
    """Return ``m`` as a complex square array, raising NotHermitianError otherwise."""
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitianError(f"expected a square matrix, got shape {m.shape}")
    if m.size and np.max(np.abs(m - m.conj().T)) > tol:
        raise NotHermitianError("matrix is not Hermitian")
    return m


def adjacency(g: GainGraph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=complex)
    for u, v, z in g.edges:
        a[u, v] = z
        a[v, u] = z.conjugate()
    return check_hermitian(a)


def degree_matrix(g: GainGraph) -> np.ndarray:
    return np.diag(np.asarray(g.degrees, dtype=float)).astype(complex)


def laplacian(g: GainGraph) -> np.ndarray:
    return check_hermitian(degree_matrix(g) - adjacency(g))


def _inv_sqrt_degrees(g: GainGraph, allow_isolated: bool) -> np.ndarray:
    d = np.asarray(g.degrees, dtype=float)
    if not allow_isolated and np.any(d == 0):
        bad = [int(i) for i in np.flatnonzero(d == 0)]
        raise IsolatedVertexError(f"isolated vertices {bad}: normalized matrices undefined")
    out = np.zeros_like(d)
    nz = d > 0
    out[nz] = 1.0 / np.sqrt(d[nz])
    return out


def norm_adjacency(g: GainGraph, allow_isolated: bool = False) -> np.ndarray:
    """D^-1/2 A(Phi) D^-1/2."""
    s = _inv_sqrt_degrees(g, allow_isolated)
    return check_hermitian(s[:, None] * adjacency(g) * s[None, :])


def norm_laplacian(g: GainGraph, allow_isolated: bool = False) -> np.ndarray:
    """Normalized Laplacian I - D^-1/2 A(Phi) D^-1/2.

    Off-diagonal entry (i, j) is ``-phi(i->j) / sqrt(d_i d_j)``. With
    ``allow_isolated`` an isolated vertex gets an all-zero row and column
    (diagonal 0), which contributes an extra zero eigenvalue; otherwise
    isolated vertices raise IsolatedVertexError.
    """
    s = _inv_sqrt_degrees(g, allow_isolated)
    out = -(s[:, None] * adjacency(g) * s[None, :])
    out[np.diag_indices(g.n)] = (s > 0).astype(float)
    return check_hermitian(out)


def quadratic_form(m, x) -> float:
    """x* M x for Hermitian ``m``; the result must be real to within 1e-10."""
    m = np.asarray(m, dtype=complex)
    x = np.asarray(x, dtype=complex)
    if x.ndim != 1 or m.shape != (x.shape[0], x.shape[0]):
        raise DimensionMismatchError(f"matrix {m.shape} vs vector {x.shape}")
    val = np.vdot(x, m @ x)
    scale = max(1.0, abs(val))
    if abs(val.imag) > FORM_IMAG_TOL * scale:
        raise NonRealFormError(f"quadratic form has imaginary part {val.imag!r}")
    return float(val.real)


def matrix_by_name(g: GainGraph, name: str) -> np.ndarray:
    """Look up a builder by its CLI name: A, D, L, NA, NL."""
    builders = {
        "A": adjacency,
        "D": degree_matrix,
        "L": laplacian,
        "NA": norm_adjacency,
        "NL": norm_laplacian,
    }
    try:
        return builders[name](g)
    except KeyError:
        raise ValueError(f"unknown matrix {name!r}; expected one of {sorted(builders)}") from None
