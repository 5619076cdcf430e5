"""Closed-form instance families with known localization sets.

Two parametric constructions bracket the relationship between the
row-sum enclosures and the generalized spectrum:

* ``prop4_instance``: A = E + eps*I against B = (n-1+eps)*I - E (E the
  all-ones matrix). Every one-row and two-row interval coincides, and
  the common interval is strictly tighter from below than the
  generalized-eigenvalue interval.
* ``prop5_instance``: B = beta*I + rho*(E - I) with rho = R/(n-1), and
  A = c*B. The generalized spectrum collapses to the point {c} while
  the row-sum sets stay a fat interval around it.

Both generators return the expected hulls in closed form so tests can
compare computed against expected without re-deriving anything.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .certify import MatrixPair, make_pair
from .errors import NotCommuting, ParamOutOfRange
from .intervals import Interval
from .linalg import generalized_eig, inf_norm, sym_eig

__all__ = [
    "FamilyInstance",
    "commuting_ratio_check",
    "prop4_instance",
    "prop5_instance",
]


@dataclass(frozen=True)
class FamilyInstance:
    pair: MatrixPair
    expected_hull_k1: Interval
    expected_hull_k2: Interval
    expected_gamma: Interval
    params: dict


def prop4_instance(n: int, eps: float) -> FamilyInstance:
    """All-ones family where the row-sum sets beat the generalized spectrum."""
    if n < 2:
        raise ParamOutOfRange(f"n must be >= 2, got {n}")
    if not eps > 1.0:
        raise ParamOutOfRange(f"eps must be > 1, got {eps}")
    ones = np.ones((n, n))
    a = ones + eps * np.eye(n)
    b = (n - 1 + eps) * np.eye(n) - ones
    hull = Interval((1.0 + eps) / (n - 2 + eps), (n + eps) / (eps - 1.0))
    gamma = Interval(eps / (n - 1 + eps), (n + eps) / (eps - 1.0))
    return FamilyInstance(
        pair=make_pair(a, b),
        expected_hull_k1=hull,
        expected_hull_k2=hull,
        expected_gamma=gamma,
        params={"n": n, "eps": eps},
    )


def prop5_instance(n: int, beta: float, big_r: float, c: float) -> FamilyInstance:
    """Proportional family where the generalized spectrum is the point {c}."""
    if n < 2:
        raise ParamOutOfRange(f"n must be >= 2, got {n}")
    if not (beta > big_r > 0.0):
        raise ParamOutOfRange(f"requires beta > R > 0, got beta={beta}, R={big_r}")
    if not c > 0.0:
        raise ParamOutOfRange(f"c must be > 0, got {c}")
    rho = big_r / (n - 1)
    ones = np.ones((n, n))
    b = beta * np.eye(n) + rho * (ones - np.eye(n))
    a = c * b
    hull = Interval(c * beta / (beta + big_r), c * (beta + big_r) / beta)
    return FamilyInstance(
        pair=make_pair(a, b),
        expected_hull_k1=hull,
        expected_hull_k2=hull,
        expected_gamma=Interval(c, c),
        params={"n": n, "beta": beta, "R": big_r, "c": c},
    )


def commuting_ratio_check(a, b, *, match_tol: float = 1e-7) -> bool:
    """For a commuting pair, generalized eigenvalues are eigenvalue ratios.

    Simultaneously diagonalizes A and B on a common orthonormal basis
    (eigendecompose B, then rediagonalize A inside each of B's
    eigenspaces) and compares the multiset of ratios mu_i(A)/mu_i(B)
    with the generalized eigenvalues of the pair, sorted, at tolerance
    ``match_tol``. Raises NotCommuting if |AB - BA| is beyond tolerance,
    and propagates NotPositiveDefinite when B is not PD.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    comm = inf_norm(a @ b - b @ a)
    if comm > 1e-9 * (1.0 + inf_norm(a) * inf_norm(b)):
        raise NotCommuting(f"|AB - BA| = {comm:.3e} beyond tolerance")
    gen = generalized_eig(a, b).values
    b_vals, b_vecs = sym_eig(b)
    group_tol = 1e-8 * (1.0 + inf_norm(b))
    ratios = []
    start = 0
    for k in range(1, len(b_vals) + 1):
        if k < len(b_vals) and b_vals[k] - b_vals[k - 1] <= group_tol:
            continue
        basis = b_vecs[:, start:k]
        block = basis.T @ a @ basis
        a_vals = sym_eig(0.5 * (block + block.T)).values
        mu_b = float(b_vals[start:k].mean())
        ratios.extend(float(v) / mu_b for v in a_vals)
        start = k
    ratios.sort()
    return all(
        abs(r - float(g)) <= match_tol * (1.0 + abs(float(g)))
        for r, g in zip(ratios, gen)
    )
