"""Dense symmetric linear algebra at desk scale.

Everything in this module operates on small (n <= ~20) dense symmetric
matrices stored as float64 numpy arrays. Symmetric input is enforced by
:func:`as_symmetric`, which either symmetrizes (within a relative
tolerance) or rejects. The generalized eigenproblem of a symmetric pair
(A, B) with B positive definite is reduced to an ordinary symmetric
problem through the Cholesky congruence B = L L^T, C = L^-1 A L^-T.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np
import scipy.linalg

from .errors import NonConvergence, NotPositiveDefinite

__all__ = [
    "EigenDecomposition",
    "as_symmetric",
    "cholesky",
    "generalized_eig",
    "inf_norm",
    "sym_eig",
]


class EigenDecomposition(NamedTuple):
    """Eigenvalues sorted ascending with column eigenvectors.

    ``vectors[:, k]`` belongs to ``values[k]``. For a plain symmetric
    matrix the columns are orthonormal; for a matrix pair they are
    normalized against the right matrix (x^T B x = 1) instead. Repeated
    eigenvalues come with an arbitrary orthonormal basis of their
    eigenspace, so callers must not rely on vector uniqueness.
    """

    values: np.ndarray
    vectors: np.ndarray


def as_symmetric(m, rtol: float = 1e-12) -> np.ndarray:
    """Validate and exactly symmetrize a square matrix.

    Rejects input whose asymmetry exceeds ``rtol`` relative to the
    largest entry magnitude; otherwise returns 0.5 * (M + M^T), which is
    elementwise exactly symmetric in floating point.
    """
    arr = np.asarray(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    scale = max(1.0, float(np.abs(arr).max()))
    asym = float(np.abs(arr - arr.T).max())
    if asym > rtol * scale:
        raise ValueError(
            f"matrix is asymmetric beyond tolerance (|M - M^T| = {asym:.3e})"
        )
    return 0.5 * (arr + arr.T)


def inf_norm(m) -> float:
    """Infinity norm: max absolute row sum for matrices, max |x_i| for vectors."""
    arr = np.asarray(m, dtype=float)
    if arr.ndim == 1:
        return float(np.abs(arr).max()) if arr.size else 0.0
    return float(np.abs(arr).sum(axis=1).max())


def cholesky(m) -> np.ndarray:
    """Lower-triangular L with M = L L^T for symmetric positive definite M.

    Raises NotPositiveDefinite as soon as a pivot falls at or below
    pivot_tol = 1e-12 * (1 + max diagonal entry), so well-scaled PD
    matrices are never misclassified. All returned diagonal entries are
    strictly positive.
    """
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    pivot_tol = 1e-12 * (1.0 + float(np.diag(a).max()))
    lower = np.zeros_like(a)
    for j in range(n):
        d = a[j, j] - lower[j, :j] @ lower[j, :j]
        if d <= pivot_tol:
            raise NotPositiveDefinite(
                f"pivot {d:.3e} at position {j} is at or below tolerance {pivot_tol:.3e}"
            )
        lower[j, j] = math.sqrt(d)
        if j + 1 < n:
            lower[j + 1 :, j] = (a[j + 1 :, j] - lower[j + 1 :, :j] @ lower[j, :j]) / lower[j, j]
    return lower


def sym_eig(m) -> EigenDecomposition:
    """Full eigendecomposition of a symmetric matrix, values ascending."""
    a = np.asarray(m, dtype=float)
    try:
        values, vectors = np.linalg.eigh(a)
    except np.linalg.LinAlgError as exc:
        raise NonConvergence(f"symmetric eigensolver did not converge: {exc}") from exc
    return EigenDecomposition(values, vectors)


def generalized_eig(a, b) -> EigenDecomposition:
    """Generalized eigenpairs A x = mu B x for symmetric A and PD B.

    Reduces via the Cholesky factor of B: with B = L L^T the matrix
    C = L^-1 A L^-T is symmetric and shares the generalized eigenvalues;
    eigenvectors map back as x = L^-T y. Values are ascending and the
    vectors satisfy x^T B x = 1.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch: {a.shape} vs {b.shape}")
    lower = cholesky(b)
    c = scipy.linalg.solve_triangular(lower, a, lower=True)
    c = scipy.linalg.solve_triangular(lower, c.T, lower=True).T
    c = 0.5 * (c + c.T)
    values, y = sym_eig(c)
    vectors = scipy.linalg.solve_triangular(lower.T, y, lower=False)
    return EigenDecomposition(values, vectors)
