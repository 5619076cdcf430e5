"""Exact enumeration of the complementarity spectrum by support scanning.

A complementarity eigenpair of (A, B) consists of lambda and a nonzero
x >= 0 (normalized to sum 1) with w = (A - lambda B) x >= 0 and
x^T w = 0. Whenever x is strictly positive on its support S, (lambda,
x_S) is a classical generalized eigenpair of the principal submatrices
(A_SS, B_SS), so the whole spectrum of a small instance can be produced
by scanning every nonempty support, solving the submatrix pair, and
keeping the candidates that satisfy the off-support inequalities. There
are at most 2^n - 1 distinct eigenvalues, which is what limits this
procedure to small n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .certify import MatrixPair
from .errors import DimensionTooLarge, NotPositiveDefinite
from .intervals import Interval
from .linalg import generalized_eig, inf_norm
from .localize import LocalizationReport, localization_report

__all__ = [
    "EicpSolution",
    "SolutionCheck",
    "Spectrum",
    "SpectrumReport",
    "enumerate_spectrum",
    "spectrum_report",
    "verify_solution",
]

DEFAULT_N_MAX = 15
DEFAULT_SUPPORT_TOL = 1e-9
DEFAULT_SIGN_TOL = 1e-9
DEFAULT_DEDUP_RTOL = 1e-7


@dataclass(frozen=True)
class EicpSolution:
    """One complementarity eigenpair: eigenvalue, unit-sum eigenvector,
    strict support, and the residual vector w = (A - lambda B) x."""

    lam: float
    x: np.ndarray = field(compare=False)
    support: tuple[int, ...]
    w: np.ndarray = field(compare=False)


@dataclass(frozen=True)
class Spectrum:
    """All accepted eigenpairs plus the deduplicated sorted eigenvalues.

    Distinct eigenvectors sharing an eigenvalue stay as separate
    solutions but contribute one entry to ``values``.
    ``degenerate_supports`` lists supports whose submatrix pair had a
    repeated generalized eigenvalue; nonnegative combinations inside
    such eigenspaces are not searched, only the returned basis vectors.
    """

    solutions: tuple[EicpSolution, ...]
    values: np.ndarray = field(compare=False)
    degenerate_supports: tuple[tuple[int, ...], ...] = ()


@dataclass(frozen=True)
class SolutionCheck:
    """Per-condition verdicts for one candidate eigenpair."""

    ok: bool
    residual_nonneg: bool
    x_nonneg: bool
    orthogonal: bool
    normalized: bool
    failed: tuple[str, ...]
    w: np.ndarray = field(compare=False)


def verify_solution(pair: MatrixPair, x, lam: float,
                    feas_tol: float = 1e-8) -> SolutionCheck:
    """Check the four defining conditions of a complementarity eigenpair.

    With w = (A - lam B) x the conditions are: w >= -feas_tol
    componentwise, x >= -feas_tol componentwise, |x^T w| below feas_tol
    scaled by the matrix magnitudes, and |sum(x) - 1| <= feas_tol.
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (pair.n,):
        raise ValueError(f"x must have shape ({pair.n},), got {x.shape}")
    w = (pair.A - lam * pair.B) @ x
    scale = 1.0 + inf_norm(pair.A) + inf_norm(pair.B)
    residual_nonneg = bool(w.min() >= -feas_tol)
    x_nonneg = bool(x.min() >= -feas_tol)
    orthogonal = bool(abs(float(x @ w)) <= feas_tol * scale)
    normalized = bool(abs(float(x.sum()) - 1.0) <= feas_tol)
    failed = tuple(
        name
        for name, good in (
            ("residual_nonneg", residual_nonneg),
            ("x_nonneg", x_nonneg),
            ("orthogonal", orthogonal),
            ("normalized", normalized),
        )
        if not good
    )
    return SolutionCheck(
        ok=not failed,
        residual_nonneg=residual_nonneg,
        x_nonneg=x_nonneg,
        orthogonal=orthogonal,
        normalized=normalized,
        failed=failed,
        w=w,
    )


def _support_candidates(pair, support, sign_tol, support_tol, degenerate):
    """Strictly positive submatrix eigenvectors for one support.

    Yields (lam, x_sub) with x_sub > 0 and sum 1. Mixed-sign
    eigenvectors are dropped; vectors with an effectively-zero entry are
    dropped too, because that solution belongs to the smaller support.
    """
    a_sub = pair.A[np.ix_(support, support)]
    b_sub = pair.B[np.ix_(support, support)]
    if len(support) == 1:
        yield float(a_sub[0, 0]) / float(b_sub[0, 0]), np.ones(1)
        return
    dec = generalized_eig(a_sub, b_sub)
    gaps = np.diff(dec.values)
    if np.any(gaps <= 1e-9 * (1.0 + np.abs(dec.values[1:]))):
        degenerate.append(tuple(support))
    for k in range(len(support)):
        y = dec.vectors[:, k]
        ymax = float(np.abs(y).max())
        has_pos = bool(np.any(y > sign_tol * ymax))
        has_neg = bool(np.any(y < -sign_tol * ymax))
        if has_pos and has_neg:
            continue
        if float(y.sum()) < 0.0:
            y = -y
        if not np.all(y > support_tol * ymax):
            continue
        yield float(dec.values[k]), y / y.sum()


def enumerate_spectrum(pair: MatrixPair, *, n_max: int = DEFAULT_N_MAX,
                       support_tol: float = DEFAULT_SUPPORT_TOL,
                       sign_tol: float = DEFAULT_SIGN_TOL,
                       feas_tol: float | None = None,
                       dedup_rtol: float = DEFAULT_DEDUP_RTOL) -> Spectrum:
    """Enumerate every complementarity eigenpair of a small pair.

    Scans all 2^n - 1 supports; for each, the generalized eigenpairs of
    the principal submatrices provide the candidates, which are accepted
    when the off-support rows satisfy (A_iS - lam B_iS) x_S >= -feas_tol.
    The default feas_tol is 1e-8 * (1 + |A| + |B|) in the infinity norm.
    Eigenvalues are deduplicated at relative tolerance ``dedup_rtol``.
    """
    if pair.n > n_max:
        raise DimensionTooLarge(
            f"support enumeration is exponential; n = {pair.n} exceeds n_max = {n_max}"
        )
    if not pair.cert_B.is_pd:
        raise NotPositiveDefinite("right matrix must be positive definite to enumerate")
    if feas_tol is None:
        feas_tol = 1e-8 * (1.0 + inf_norm(pair.A) + inf_norm(pair.B))
    indices = range(pair.n)
    solutions = []
    degenerate: list[tuple[int, ...]] = []
    for size in range(1, pair.n + 1):
        for support in itertools.combinations(indices, size):
            sup = list(support)
            off = [i for i in indices if i not in support]
            for lam, x_sub in _support_candidates(
                pair, sup, sign_tol, support_tol, degenerate
            ):
                if off:
                    w_off = (pair.A[np.ix_(off, sup)] - lam * pair.B[np.ix_(off, sup)]) @ x_sub
                    if w_off.min() < -feas_tol:
                        continue
                x = np.zeros(pair.n)
                x[sup] = x_sub
                w = (pair.A - lam * pair.B) @ x
                solutions.append(EicpSolution(lam=lam, x=x, support=tuple(support), w=w))
    solutions.sort(key=lambda s: (s.lam, s.support))
    values: list[float] = []
    for sol in solutions:
        if not values or sol.lam - values[-1] > dedup_rtol * (1.0 + abs(sol.lam)):
            values.append(sol.lam)
    return Spectrum(
        solutions=tuple(solutions),
        values=np.array(values),
        degenerate_supports=tuple(degenerate),
    )


@dataclass(frozen=True)
class SpectrumReport:
    """Localization sets, the enumerated spectrum, and containment verdicts.

    Verdicts gated on copositivity of A are None when that certificate
    is absent. Membership of eigenvalues in the sets is tested at
    tolerance 1e-7 (and the generalized-eigenvalue interval is widened
    by the same amount).

    ``k2_in_k1_cop`` asserts the provable nesting: the two-row interval
    of every row pair {i, j} lies inside the hull of the refined
    one-row intervals of rows i and j. It does NOT claim the two-row
    set is a pointwise subset of the refined one-row set; that stronger
    claim is false in general, because a two-row interval always
    contains both diagonal ratios a_ii/b_ii and a_jj/b_jj and therefore
    bridges the gap between the two one-row intervals whenever they are
    disjoint.
    """

    localization: LocalizationReport
    spectrum: Spectrum
    pi_in_k1: bool
    pi_in_k1_cop: bool | None
    pi_in_k2: bool | None
    pi_in_gamma: bool
    k2_in_k1_cop: bool | None
    k1_cop_in_k1: bool | None

    MEMBERSHIP_TOL = 1e-7
    NESTING_TOL = 1e-9

    def all_verdicts(self) -> dict[str, bool | None]:
        return {
            "pi_in_k1": self.pi_in_k1,
            "pi_in_k1_cop": self.pi_in_k1_cop,
            "pi_in_k2": self.pi_in_k2,
            "pi_in_gamma": self.pi_in_gamma,
            "k2_in_k1_cop": self.k2_in_k1_cop,
            "k1_cop_in_k1": self.k1_cop_in_k1,
        }


def _pair_hull(rows, i: int, j: int) -> Interval:
    return Interval(min(rows[i].lo, rows[j].lo), max(rows[i].hi, rows[j].hi))


def spectrum_report(pair: MatrixPair, *, n_max: int = DEFAULT_N_MAX,
                    **enum_kwargs) -> SpectrumReport:
    """Bundle localization sets, the exact spectrum, and all verdicts."""
    loc = localization_report(pair)
    spec = enumerate_spectrum(pair, n_max=n_max, **enum_kwargs)
    tol = SpectrumReport.MEMBERSHIP_TOL
    nest = SpectrumReport.NESTING_TOL
    values = [float(v) for v in spec.values]
    pi_in_k1 = all(loc.k1.contains(v, tol) for v in values)
    pi_in_gamma = all(loc.gamma.contains(v, tol) for v in values)
    pi_in_k1_cop = pi_in_k2 = k2_in_k1_cop = k1_cop_in_k1 = None
    if loc.k1_cop is not None:
        pi_in_k1_cop = all(loc.k1_cop.contains(v, tol) for v in values)
        k1_cop_in_k1 = all(
            k1_row.contains_interval(cop_row, nest)
            for k1_row, cop_row in zip(loc.k1_rows, loc.k1_cop_rows)
        )
    if loc.k2 is not None:
        pi_in_k2 = all(loc.k2.contains(v, tol) for v in values)
        k2_in_k1_cop = all(
            _pair_hull(loc.k1_cop_rows, i, j).contains_interval(pair_iv, nest)
            for (i, j), pair_iv in zip(loc.k2_pairs, loc.k2_pair_intervals)
        )
    return SpectrumReport(
        localization=loc,
        spectrum=spec,
        pi_in_k1=pi_in_k1,
        pi_in_k1_cop=pi_in_k1_cop,
        pi_in_k2=pi_in_k2,
        pi_in_gamma=pi_in_gamma,
        k2_in_k1_cop=k2_in_k1_cop,
        k1_cop_in_k1=k1_cop_in_k1,
    )
