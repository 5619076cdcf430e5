"""Certification of the matrix classes the localization sets require.

A matrix pair (A, B) is only admitted to the hypothesis-gated operations
after its class certificates are computed: strict diagonal dominance and
positive definiteness for B, copositivity for A. Copositivity is decided
by sufficient conditions (entrywise nonnegative, or positive definite)
and otherwise by exact minimization of x^T M x over the unit simplex,
which is exponential in n and therefore capped at ``max_exact_n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    NegativeShift,
    NotPositiveDefinite,
)
from .linalg import as_symmetric, cholesky, generalized_eig, inf_norm

__all__ = [
    "ClassCertificate",
    "CopositivityResult",
    "MatrixPair",
    "check_copositive",
    "check_pd",
    "check_sdd",
    "certify_matrix",
    "make_pair",
    "shift_pair",
    "simplex_minimum",
    "suggest_shift",
]

COPOSITIVE_NONNEGATIVE = "nonnegative"
COPOSITIVE_PD = "positive_definite"
COPOSITIVE_SIMPLEX = "simplex_minimum"


@dataclass(frozen=True)
class CopositivityResult:
    """Verdict on x^T M x >= 0 over the nonnegative orthant.

    ``method`` records how the verdict was reached: a sufficient
    condition ('nonnegative' or 'positive_definite') or the exact
    simplex minimization ('simplex_minimum'). When the exact path ran,
    ``minimum`` is the simplex minimum of x^T M x; a NotCopositive
    verdict additionally carries a ``witness`` x >= 0 on the simplex
    with x^T M x < 0.
    """

    copositive: bool
    method: str
    minimum: float | None = None
    witness: np.ndarray | None = field(default=None, compare=False)


@dataclass(frozen=True)
class ClassCertificate:
    is_sdd: bool
    is_dd: bool
    is_pd: bool
    copositivity: CopositivityResult


def check_sdd(m) -> tuple[bool, bool]:
    """(strictly diagonally dominant, diagonally dominant) flags.

    Strictness is decided by exact floating comparison: a tie reports
    is_dd=True, is_sdd=False.
    """
    a = np.asarray(m, dtype=float)
    diag = np.abs(np.diag(a))
    off = np.abs(a).sum(axis=1) - diag
    return bool(np.all(diag > off)), bool(np.all(diag >= off))


def check_pd(m) -> bool:
    """True iff the Cholesky factorization succeeds."""
    try:
        cholesky(m)
    except NotPositiveDefinite:
        return False
    return True


def simplex_minimum(m) -> tuple[float, np.ndarray]:
    """Exact minimum of x^T M x over the unit simplex, with a minimizer.

    The minimum of a quadratic over the simplex is attained at a vertex
    or at a stationary point in the relative interior of a face. Faces
    are scanned by support S: the stationarity system M_SS x_S = mu e,
    e^T x_S = 1 is solved for each support, solutions with x_S >= -tol
    kept (clamped to the simplex and re-evaluated exactly), and all
    vertices e_i are evaluated unconditionally. Cost is exponential in n.
    """
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    best_val = float(a[0, 0])
    best_x = np.zeros(n)
    best_x[0] = 1.0
    for i in range(n):
        val = float(a[i, i])
        if val < best_val:
            best_val = val
            best_x = np.zeros(n)
            best_x[i] = 1.0
    for size in range(2, n + 1):
        for support in itertools.combinations(range(n), size):
            idx = list(support)
            sub = a[np.ix_(idx, idx)]
            system = np.zeros((size + 1, size + 1))
            system[:size, :size] = sub
            system[:size, size] = -1.0
            system[size, :size] = 1.0
            rhs = np.zeros(size + 1)
            rhs[size] = 1.0
            try:
                sol = np.linalg.solve(system, rhs)
            except np.linalg.LinAlgError:
                continue
            xs = sol[:size]
            if xs.min() < -1e-9:
                continue
            xs = np.clip(xs, 0.0, None)
            total = xs.sum()
            if total <= 0.0:
                continue
            xs = xs / total
            val = float(xs @ sub @ xs)
            if val < best_val:
                best_val = val
                best_x = np.zeros(n)
                best_x[idx] = xs
    return best_val, best_x


def check_copositive(m, max_exact_n: int = 12) -> CopositivityResult:
    """Copositivity verdict with fast sufficient conditions.

    Entrywise nonnegative and positive definite matrices are copositive
    without further work. Otherwise the exact simplex minimization runs,
    but only for n <= max_exact_n; beyond that DimensionTooLarge is
    raised rather than returning an unreliable verdict.
    """
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    if np.all(a >= 0.0):
        return CopositivityResult(True, COPOSITIVE_NONNEGATIVE)
    if check_pd(a):
        return CopositivityResult(True, COPOSITIVE_PD)
    if n > max_exact_n:
        raise DimensionTooLarge(
            f"exact copositivity check needs n <= {max_exact_n}, got n = {n}; "
            "raise max_exact_n or accept sufficient conditions only"
        )
    minimum, x = simplex_minimum(a)
    cop_tol = 1e-10 * (1.0 + inf_norm(a))
    if minimum >= -cop_tol:
        return CopositivityResult(True, COPOSITIVE_SIMPLEX, minimum=minimum)
    return CopositivityResult(False, COPOSITIVE_SIMPLEX, minimum=minimum, witness=x)


def certify_matrix(m, max_exact_n: int = 12) -> ClassCertificate:
    is_sdd, is_dd = check_sdd(m)
    return ClassCertificate(
        is_sdd=is_sdd,
        is_dd=is_dd,
        is_pd=check_pd(m),
        copositivity=check_copositive(m, max_exact_n),
    )


@dataclass(frozen=True)
class MatrixPair:
    """A validated symmetric pair (A, B) with cached class certificates.

    The stored arrays are exactly symmetric and marked read-only, so a
    pair can be shared freely across threads.
    """

    A: np.ndarray
    B: np.ndarray
    cert_A: ClassCertificate
    cert_B: ClassCertificate
    max_exact_n: int = 12

    @property
    def n(self) -> int:
        return self.A.shape[0]


def make_pair(a, b=None, *, max_exact_n: int = 12, sym_rtol: float = 1e-12) -> MatrixPair:
    """Build a MatrixPair, defaulting B to the identity (the Pareto case)."""
    a = as_symmetric(a, rtol=sym_rtol)
    if b is None:
        b = np.eye(a.shape[0])
    else:
        b = as_symmetric(b, rtol=sym_rtol)
    if a.shape != b.shape:
        raise DimensionMismatch(f"A is {a.shape[0]}x{a.shape[0]} but B is {b.shape[0]}x{b.shape[0]}")
    a.setflags(write=False)
    b.setflags(write=False)
    return MatrixPair(
        A=a,
        B=b,
        cert_A=certify_matrix(a, max_exact_n),
        cert_B=certify_matrix(b, max_exact_n),
        max_exact_n=max_exact_n,
    )


def shift_pair(pair: MatrixPair, mu: float) -> MatrixPair:
    """Replace (A, B) by (A + mu B, B), recomputing certificates.

    Any complementarity eigenvalue of the original pair moves up by
    exactly mu (same eigenvector), so localization done on the shifted
    pair can be translated back.
    """
    if mu < 0:
        raise NegativeShift(f"shift must be nonnegative, got {mu}")
    return make_pair(pair.A + mu * pair.B, pair.B, max_exact_n=pair.max_exact_n)


def suggest_shift(pair: MatrixPair) -> float:
    """A shift mu >= 0 making A + mu B positive definite, hence copositive.

    Takes mu = max(0, -mu_min(A, B)) plus a small safety margin
    eps = 1e-6 * (1 + |mu_min|). Sufficiency only: the returned shift is
    not minimal, and can be positive even when A is already copositive.
    """
    mu_min = float(generalized_eig(pair.A, pair.B).values[0])
    eps = 1e-6 * (1.0 + abs(mu_min))
    return max(0.0, -mu_min) + eps
