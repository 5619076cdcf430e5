"""Row-sum statistics driving every localization formula.

For each row i of a matrix M, ``r_plus[i]`` sums the positive
off-diagonal entries and ``r_minus[i]`` the magnitudes of the negative
ones; ``m_plus / m_minus`` shift the diagonal out/in by those sums.
Entries exactly zero contribute to neither sum. The two-row quantities
combine these per-row sums across a pair of rows (and across a pair of
matrices for the s-coefficients of the localization quadratics).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch

__all__ = ["PairStats", "RowStats", "pair_stats", "row_stats"]


@dataclass(frozen=True)
class RowStats:
    r_plus: np.ndarray
    r_minus: np.ndarray
    m_plus: np.ndarray   # diag + r_plus
    m_minus: np.ndarray  # diag - r_minus


@dataclass(frozen=True)
class PairStats:
    """Two-row products for a pair (A, B), full symmetric n x n arrays.

    Entry [i, j] holds the quantity for the unordered row pair {i, j};
    all arrays are symmetric, so [j, i] mirrors [i, j]. Diagonal entries
    are filled by the same formulas but carry no meaning (row pairs
    require i != j).
    """

    rows_a: RowStats
    rows_b: RowStats
    diag_a: np.ndarray
    diag_b: np.ndarray
    aa_plus: np.ndarray    # a_ii a_jj - r_i^+(A) r_j^+(A)
    aa_minus: np.ndarray   # a_ii a_jj - r_i^-(A) r_j^-(A)
    bb_plus: np.ndarray    # b_ii b_jj - r_i^+(B) r_j^+(B)
    bb_minus: np.ndarray   # b_ii b_jj - r_i^-(B) r_j^-(B)
    s_plus: np.ndarray     # a_ii b_jj + a_jj b_ii + r_i^+(A) r_j^-(B) + r_j^+(A) r_i^-(B)
    s_minus: np.ndarray    # a_ii b_jj + a_jj b_ii + r_i^-(A) r_j^+(B) + r_j^-(A) r_i^+(B)


def row_stats(m) -> RowStats:
    """Positive/negative off-diagonal row sums and diagonal shifts."""
    a = np.asarray(m, dtype=float)
    diag = np.diag(a).copy()
    off = a - np.diag(diag)
    r_plus = np.maximum(off, 0.0).sum(axis=1) + 0.0
    r_minus = -np.minimum(off, 0.0).sum(axis=1) + 0.0
    return RowStats(r_plus, r_minus, diag + r_plus, diag - r_minus)


def pair_stats(a, b) -> PairStats:
    """All two-row quantities of a pair (A, B), for every row pair."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionMismatch(f"A is {a.shape} but B is {b.shape}")
    if a.shape[0] < 2:
        raise DimensionMismatch("two-row statistics need n >= 2")
    ra = row_stats(a)
    rb = row_stats(b)
    da = np.diag(a)
    db = np.diag(b)
    cross = np.outer(da, db)  # a_ii b_jj at [i, j]
    s_base = cross + cross.T
    up = np.outer(ra.r_plus, rb.r_minus)   # r_i^+(A) r_j^-(B) at [i, j]
    low = np.outer(ra.r_minus, rb.r_plus)  # r_i^-(A) r_j^+(B) at [i, j]
    return PairStats(
        rows_a=ra,
        rows_b=rb,
        diag_a=da,
        diag_b=db,
        aa_plus=np.outer(da, da) - np.outer(ra.r_plus, ra.r_plus),
        aa_minus=np.outer(da, da) - np.outer(ra.r_minus, ra.r_minus),
        bb_plus=np.outer(db, db) - np.outer(rb.r_plus, rb.r_plus),
        bb_minus=np.outer(db, db) - np.outer(rb.r_minus, rb.r_minus),
        s_plus=s_base + (up + up.T),
        s_minus=s_base + (low + low.T),
    )
