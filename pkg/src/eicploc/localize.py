"""Interval localization sets for complementarity eigenvalues.

Three enclosures of increasing tightness are computed from row sums
alone, plus one from the classical generalized spectrum:

* ``k1_set``: one interval per row, needs B positive definite and
  strictly diagonally dominant.
* ``k1_cop_set``: the one-row set refined under copositivity of A; the
  lower endpoints are clamped at zero.
* ``k2_set``: one interval per unordered row pair, delimited by the
  extreme roots of two strictly convex quadratics; tighter than both
  one-row sets under the same hypotheses.
* ``gamma_interval``: the span of the generalized eigenvalues, needs
  only B positive definite, and is not comparable with the row-sum sets.

``multi_row_polys`` extends the pair quadratics to products over an
arbitrary row subset. For three or more rows the resulting root interval
is NOT a valid localization set (a 3x3 instance with an eigenvalue on
each side exists); it is exposed for experimentation only.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .certify import MatrixPair
from .errors import HypothesisViolation, NegativeDiscriminant, NoRealRoot
from .intervals import Interval, IntervalUnion
from .linalg import generalized_eig
from .rowstats import pair_stats, row_stats

__all__ = [
    "Assumptions",
    "LocalizationReport",
    "QuadraticPoly",
    "build_quadratics",
    "gamma_interval",
    "hull_bounds_k1",
    "hull_bounds_k2",
    "k1_cop_intervals",
    "k1_cop_set",
    "k1_intervals",
    "k1_set",
    "k2_intervals",
    "k2_set",
    "localization_report",
    "multi_row_polys",
    "multi_row_roots",
    "pair_vertex_and_caps",
    "quad_roots",
]


def _require_one_row(pair: MatrixPair) -> None:
    if not pair.cert_B.is_pd:
        raise HypothesisViolation("right matrix must be certified positive definite")
    if not pair.cert_B.is_sdd:
        raise HypothesisViolation("right matrix must be certified strictly diagonally dominant")


def _require_two_row(pair: MatrixPair) -> None:
    _require_one_row(pair)
    if not pair.cert_A.copositivity.copositive:
        raise HypothesisViolation("left matrix must be certified copositive")


def k1_intervals(pair: MatrixPair) -> tuple[Interval, ...]:
    """Raw one-row interval for every row, index-aligned, unnormalized."""
    _require_one_row(pair)
    ra = row_stats(pair.A)
    rb = row_stats(pair.B)
    out = []
    for i in range(pair.n):
        lo = min(ra.m_minus[i] / rb.m_minus[i], ra.m_minus[i] / rb.m_plus[i])
        hi = max(ra.m_plus[i] / rb.m_minus[i], ra.m_plus[i] / rb.m_plus[i])
        out.append(Interval(lo, hi))
    return tuple(out)


def k1_set(pair: MatrixPair) -> IntervalUnion:
    """One-row localization set, normalized."""
    return IntervalUnion.of(k1_intervals(pair)).normalize()


def k1_cop_intervals(pair: MatrixPair) -> tuple[Interval, ...]:
    """Raw copositivity-refined one-row interval per row (lower clamped at 0)."""
    _require_two_row(pair)
    ra = row_stats(pair.A)
    rb = row_stats(pair.B)
    return tuple(
        Interval(max(0.0, ra.m_minus[i] / rb.m_plus[i]), ra.m_plus[i] / rb.m_minus[i])
        for i in range(pair.n)
    )


def k1_cop_set(pair: MatrixPair) -> IntervalUnion:
    """Copositivity-refined one-row localization set, normalized."""
    return IntervalUnion.of(k1_cop_intervals(pair)).normalize()


@dataclass(frozen=True)
class QuadraticPoly:
    """Quadratic a2 y^2 - a1 y + a0; a1 holds the positive s-coefficient."""

    a2: float
    a1: float
    a0: float

    def __call__(self, y: float) -> float:
        return (self.a2 * y - self.a1) * y + self.a0

    @property
    def discriminant(self) -> float:
        return self.a1 * self.a1 - 4.0 * self.a2 * self.a0


def quad_roots(p: QuadraticPoly) -> tuple[float, float]:
    """Both real roots of a strictly convex localization quadratic.

    The discriminant is clamped to zero when it dips into
    [-disc_tol, 0) with disc_tol = 1e-9 * (1 + a1^2), since the
    hypotheses guarantee it is nonnegative in exact arithmetic; a value
    below -disc_tol raises NegativeDiscriminant, signaling a violated
    hypothesis upstream. The larger-magnitude root is computed first and
    the other recovered from the product of roots, avoiding cancellation.
    """
    if not p.a2 > 0.0:
        raise ValueError(f"leading coefficient must be positive, got {p.a2}")
    disc = p.discriminant
    disc_tol = 1e-9 * (1.0 + p.a1 * p.a1)
    if disc < -disc_tol:
        raise NegativeDiscriminant(
            f"discriminant {disc:.6e} below -{disc_tol:.3e}"
        )
    if disc <= 0.0:
        vertex = p.a1 / (2.0 * p.a2)
        return vertex, vertex
    root = math.sqrt(disc)
    if p.a1 >= 0.0:
        big = (p.a1 + root) / (2.0 * p.a2)
    else:
        big = (p.a1 - root) / (2.0 * p.a2)
    if big == 0.0:
        return 0.0, 0.0
    other = p.a0 / (p.a2 * big)
    return (other, big) if other <= big else (big, other)


def build_quadratics(pair: MatrixPair, i: int, j: int) -> tuple[QuadraticPoly, QuadraticPoly]:
    """(P_low, P_up) for the row pair {i, j}.

    P_up(y)  = bb_minus y^2 - s_plus y + aa_plus
    P_low(y) = bb_plus  y^2 - s_minus y + aa_minus

    Both are strictly convex with real roots under the two-row
    hypotheses. The coefficient assembly is cross-checked against the
    equivalent product form at five sample points before returning.
    """
    _require_two_row(pair)
    if i == j:
        raise ValueError("row pair requires two distinct rows")
    return _quadratics_from_stats(pair_stats(pair.A, pair.B), i, j)


def _product_form(st, i: int, j: int, y: float) -> tuple[float, float]:
    """(P_low(y), P_up(y)) evaluated from the per-row factor form."""
    ra, rb = st.rows_a, st.rows_b
    x = (y * st.diag_b[i] - st.diag_a[i]) * (y * st.diag_b[j] - st.diag_a[j])
    up = x - (ra.r_plus[i] + y * rb.r_minus[i]) * (ra.r_plus[j] + y * rb.r_minus[j])
    low = x - (ra.r_minus[i] + y * rb.r_plus[i]) * (ra.r_minus[j] + y * rb.r_plus[j])
    return low, up


def _quadratics_from_stats(st, i: int, j: int) -> tuple[QuadraticPoly, QuadraticPoly]:
    p_low = QuadraticPoly(st.bb_plus[i, j], st.s_minus[i, j], st.aa_minus[i, j])
    p_up = QuadraticPoly(st.bb_minus[i, j], st.s_plus[i, j], st.aa_plus[i, j])
    samples = [0.0, 1.0, -1.0]
    if p_up.a2 > 0.0:
        samples.append(p_up.a1 / (2.0 * p_up.a2))
    if p_low.a2 > 0.0:
        samples.append(p_low.a1 / (2.0 * p_low.a2))
    for y in samples:
        low_ref, up_ref = _product_form(st, i, j, y)
        for got, ref, p in ((p_low(y), low_ref, p_low), (p_up(y), up_ref, p_up)):
            scale = abs(p.a2) * y * y + abs(p.a1) * abs(y) + abs(p.a0) + 1.0
            if abs(got - ref) > 1e-9 * scale:
                raise ArithmeticError(
                    f"quadratic forms disagree at y={y}: {got} vs {ref}"
                )
    return p_low, p_up


def k2_intervals(pair: MatrixPair) -> dict[tuple[int, int], Interval]:
    """Raw two-row interval for every unordered row pair i < j."""
    _require_two_row(pair)
    st = pair_stats(pair.A, pair.B)
    out: dict[tuple[int, int], Interval] = {}
    for i in range(pair.n - 1):
        for j in range(i + 1, pair.n):
            p_low, p_up = _quadratics_from_stats(st, i, j)
            lo = max(0.0, quad_roots(p_low)[0])
            hi = quad_roots(p_up)[1]
            out[(i, j)] = Interval(lo, hi)
    return out


def k2_set(pair: MatrixPair) -> IntervalUnion:
    """Two-row localization set, normalized."""
    return IntervalUnion.of(k2_intervals(pair).values()).normalize()


class PairVertexCaps(NamedTuple):
    y_star_up: float
    y_star_low: float
    c_up: float
    c_low: float


def pair_vertex_and_caps(pair: MatrixPair, i: int, j: int) -> PairVertexCaps:
    """Vertices of the two quadratics and the one-row endpoint caps.

    The vertex of P_up never exceeds c_up = max of the two rows' upper
    one-row endpoints, and the vertex of P_low never falls below
    c_low = min of the two rows' lower endpoints. As a consequence each
    two-row interval nests inside the hull of the refined one-row
    intervals of its two rows.
    """
    _require_two_row(pair)
    if i == j:
        raise ValueError("row pair requires two distinct rows")
    st = pair_stats(pair.A, pair.B)
    ra, rb = st.rows_a, st.rows_b
    return PairVertexCaps(
        y_star_up=st.s_plus[i, j] / (2.0 * st.bb_minus[i, j]),
        y_star_low=st.s_minus[i, j] / (2.0 * st.bb_plus[i, j]),
        c_up=max(ra.m_plus[i] / rb.m_minus[i], ra.m_plus[j] / rb.m_minus[j]),
        c_low=min(ra.m_minus[i] / rb.m_plus[i], ra.m_minus[j] / rb.m_plus[j]),
    )


def hull_bounds_k1(pair: MatrixPair) -> Interval:
    """Smallest single interval containing the one-row set."""
    return IntervalUnion.of(k1_intervals(pair)).hull()


def hull_bounds_k2(pair: MatrixPair) -> Interval:
    """Smallest single interval containing the two-row set."""
    return IntervalUnion.of(k2_intervals(pair).values()).hull()


def gamma_interval(pair: MatrixPair) -> Interval:
    """[mu_min, mu_max] of the generalized eigenvalues of the pair."""
    values = generalized_eig(pair.A, pair.B).values
    return Interval(float(values[0]), float(values[-1]))


def _validate_rows(pair: MatrixPair, rows: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(rows)
    if len(idx) < 1:
        raise ValueError("row subset must be nonempty")
    if len(set(idx)) != len(idx):
        raise ValueError(f"row subset has repeated indices: {idx}")
    if any(i < 0 or i >= pair.n for i in idx):
        raise ValueError(f"row indices out of range for n={pair.n}: {idx}")
    return idx


def _multi_row_evaluators(pair: MatrixPair, idx: tuple[int, ...]):
    """(P_low, P_up) as vectorized callables with row factors precomputed."""
    ra = row_stats(pair.A)
    rb = row_stats(pair.B)
    sub = list(idx)
    a_diag = pair.A[sub, sub]
    b_diag = pair.B[sub, sub]
    rpa, rma = ra.r_plus[sub], ra.r_minus[sub]
    rpb, rmb = rb.r_plus[sub], rb.r_minus[sub]

    def low_poly(y):
        ys = np.asarray(y, dtype=float)[..., np.newaxis]
        out = np.prod(a_diag - b_diag * ys, axis=-1) - np.prod(rma + rpb * ys, axis=-1)
        return out if out.ndim else float(out)

    def up_poly(y):
        ys = np.asarray(y, dtype=float)[..., np.newaxis]
        out = np.prod(b_diag * ys - a_diag, axis=-1) - np.prod(rpa + rmb * ys, axis=-1)
        return out if out.ndim else float(out)

    return low_poly, up_poly


def multi_row_polys(pair: MatrixPair, rows: Sequence[int], y: float) -> tuple[float, float]:
    """(P_low(y), P_up(y)) for the product polynomials over a row subset.

    P_up(y)  = prod_i (b_ii y - a_ii) - prod_i (r_i^+(A) + y r_i^-(B))
    P_low(y) = prod_i (a_ii - b_ii y) - prod_i (r_i^-(A) + y r_i^+(B))

    For one and two rows these reproduce the one-row endpoints and the
    pair quadratics. For three or more rows the extreme roots do NOT
    bound the spectrum; treat the values as experimental.
    """
    _require_two_row(pair)
    idx = _validate_rows(pair, rows)
    low_poly, up_poly = _multi_row_evaluators(pair, idx)
    return low_poly(y), up_poly(y)


def multi_row_roots(pair: MatrixPair, rows: Sequence[int],
                    grid: int = 8192) -> tuple[float, float]:
    """(smallest real root of P_low, largest real root of P_up).

    Roots are located by scanning a uniform grid over [-M, M] with
    M = 1 + 10 * (largest one-row hull endpoint magnitude) and bisecting
    every sign change down to 1e-12 absolute width. Raises NoRealRoot
    when a polynomial has no sign change in the bracket (tangential
    roots are not detected).
    """
    _require_two_row(pair)
    idx = _validate_rows(pair, rows)
    hull = hull_bounds_k1(pair)
    bound = 1.0 + 10.0 * max(abs(hull.lo), abs(hull.hi))
    low_poly, up_poly = _multi_row_evaluators(pair, idx)
    low_roots = _bracketed_roots(low_poly, -bound, bound, grid)
    up_roots = _bracketed_roots(up_poly, -bound, bound, grid)
    if not low_roots:
        raise NoRealRoot(f"no sign change of the lower polynomial in [-{bound}, {bound}]")
    if not up_roots:
        raise NoRealRoot(f"no sign change of the upper polynomial in [-{bound}, {bound}]")
    return min(low_roots), max(up_roots)


def _bracketed_roots(f, lo: float, hi: float, grid: int) -> list[float]:
    xs = np.linspace(lo, hi, grid + 1)
    vals = f(xs)
    roots = [float(x) for x in xs[vals == 0.0]]
    sign_change = np.nonzero(vals[:-1] * vals[1:] < 0.0)[0]
    for k in sign_change:
        roots.append(_bisect(f, float(xs[k]), float(xs[k + 1]), float(vals[k])))
    return sorted(roots)


def _bisect(f, a: float, b: float, fa: float, tol: float = 1e-12) -> float:
    for _ in range(200):
        if b - a <= tol:
            break
        mid = 0.5 * (a + b)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fa < 0.0) == (fm < 0.0):
            a, fa = mid, fm
        else:
            b = mid
    return 0.5 * (a + b)


@dataclass(frozen=True)
class Assumptions:
    b_pd: bool
    b_sdd: bool
    a_copositive: bool


@dataclass(frozen=True)
class LocalizationReport:
    """All localization sets computable for a pair, raw and normalized.

    The copositivity-gated sets are None when A is not certified
    copositive; their hulls follow suit.
    """

    k1: IntervalUnion
    k1_rows: tuple[Interval, ...]
    k1_cop: IntervalUnion | None
    k1_cop_rows: tuple[Interval, ...] | None
    k2: IntervalUnion | None
    k2_pairs: tuple[tuple[int, int], ...] | None
    k2_pair_intervals: tuple[Interval, ...] | None
    gamma: Interval
    hull_k1: Interval
    hull_k2: Interval | None
    assumptions: Assumptions


def localization_report(pair: MatrixPair) -> LocalizationReport:
    """Bundle every localization set whose hypotheses are certified.

    Needs B positive definite and strictly diagonally dominant; the
    copositivity-gated sets are included when A's certificate allows.
    """
    _require_one_row(pair)
    assumptions = Assumptions(
        b_pd=pair.cert_B.is_pd,
        b_sdd=pair.cert_B.is_sdd,
        a_copositive=pair.cert_A.copositivity.copositive,
    )
    rows1 = k1_intervals(pair)
    k1_cop = k1_cop_rows = None
    k2 = k2_pairs = k2_pair_intervals = hull_k2 = None
    if assumptions.a_copositive:
        k1_cop_rows = k1_cop_intervals(pair)
        k1_cop = IntervalUnion.of(k1_cop_rows).normalize()
        if pair.n >= 2:
            by_pair = k2_intervals(pair)
            k2_pairs = tuple(by_pair.keys())
            k2_pair_intervals = tuple(by_pair.values())
            k2 = IntervalUnion.of(k2_pair_intervals).normalize()
            hull_k2 = IntervalUnion.of(k2_pair_intervals).hull()
    return LocalizationReport(
        k1=IntervalUnion.of(rows1).normalize(),
        k1_rows=rows1,
        k1_cop=k1_cop,
        k1_cop_rows=k1_cop_rows,
        k2=k2,
        k2_pairs=k2_pairs,
        k2_pair_intervals=k2_pair_intervals,
        gamma=gamma_interval(pair),
        hull_k1=IntervalUnion.of(rows1).hull(),
        hull_k2=hull_k2,
        assumptions=assumptions,
    )
