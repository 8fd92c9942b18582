"""Hermitian eigenvalues by cyclic complex Jacobi rotations, and spectrum predicates."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatchError, NoConvergenceError
from .matrices import check_hermitian

SPECTRUM_TOL = 1e-8
OFF_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues sorted ascending, with the tolerance used to compare them."""

    values: np.ndarray
    tol: float = SPECTRUM_TOL

    def __post_init__(self):
        vals = np.sort(np.asarray(self.values, dtype=float))
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __repr__(self) -> str:
        return f"Spectrum({np.array2string(self.values, precision=12)})"

    @property
    def trace(self) -> float:
        return float(self.values.sum())

    def reflected(self) -> "Spectrum":
        """The multiset {2 - lambda}."""
        return Spectrum(2.0 - self.values, self.tol)


def jacobi_eigh(m, off_tol: float = OFF_TOL, max_sweeps: int = MAX_SWEEPS):
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Each pivot (p, q) is made real by a diagonal phase on column q, then
    annihilated by a real plane rotation. Sweeps stop once the off-diagonal
    Frobenius norm is below ``off_tol * ||M||_F``.

    Returns (eigenvalues unsorted, eigenvectors as columns, sweeps used).
    """
    a = np.array(check_hermitian(m), dtype=complex, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    if n <= 1:
        return np.real(np.diag(a)).copy(), v, 0
    norm = np.linalg.norm(a)
    if norm == 0.0:
        return np.zeros(n), v, 0
    target = off_tol * norm
    # pivots below this are already negligible relative to the target
    skip = target / n
    iu = np.triu_indices(n, 1)

    for sweep in range(max_sweeps + 1):
        off = math.sqrt(2.0) * np.linalg.norm(a[iu])
        if off < target:
            return np.real(np.diag(a)).copy(), v, sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                r = abs(apq)
                if r <= skip:
                    continue
                phase = apq / r
                app = a[p, p].real
                aqq = a[q, q].real
                theta = 0.5 * math.atan2(2.0 * r, aqq - app)
                c = math.cos(theta)
                s = math.sin(theta)
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g00, g01 = c, s
                g10, g11 = -s * phase.conjugate(), c * phase.conjugate()

                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = col_p * g00 + col_q * g10
                a[:, q] = col_p * g01 + col_q * g11
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = row_p * g00 + row_q * np.conj(g10)
                a[q, :] = row_p * g01 + row_q * np.conj(g11)
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real

                vp = v[:, p].copy()
                vq = v[:, q]
                v[:, p] = vp * g00 + vq * g10
                v[:, q] = vp * g01 + vq * g11
    raise NoConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3e})")


def eigenvalues(m, tol: float = SPECTRUM_TOL) -> Spectrum:
    vals, _, _ = jacobi_eigh(m)
    return Spectrum(vals, tol)


def residuals(m, vals=None, vecs=None) -> np.ndarray:
    """Column norms of M V - V diag(vals); computed from Jacobi when not given."""
    m = check_hermitian(m)
    if vals is None or vecs is None:
        vals, vecs, _ = jacobi_eigh(m)
    return np.linalg.norm(m @ vecs - vecs * vals[None, :], axis=0)


def spectral_radius(m) -> float:
    vals = eigenvalues(m).values
    if len(vals) == 0:
        return 0.0
    return float(np.max(np.abs(vals)))


def spectra_equal(s1: Spectrum, s2: Spectrum, tol: float | None = None) -> bool:
    if len(s1) != len(s2):
        raise LengthMismatchError(f"spectra of length {len(s1)} and {len(s2)}")
    if tol is None:
        tol = max(s1.tol, s2.tol)
    return bool(np.all(np.abs(s1.values - s2.values) <= tol))


def multiplicity(s: Spectrum, value: float, tol: float | None = None) -> int:
    tol = s.tol if tol is None else tol
    return int(np.count_nonzero(np.abs(s.values - value) <= tol))


def min_eig(s: Spectrum) -> float:
    return float(s.values[0])


def max_eig(s: Spectrum) -> float:
    return float(s.values[-1])


def is_symmetric_about_one(s: Spectrum, tol: float | None = None) -> bool:
    """True when the multiset is invariant under lambda -> 2 - lambda."""
    return spectra_equal(s, s.reflected(), tol)
