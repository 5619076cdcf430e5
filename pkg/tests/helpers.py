"""Shared generators and the worked 3x3 instance used across the suite."""

from __future__ import annotations

import numpy as np

import eicploc as el

# 3x3 instance with closed-form enclosures, used as the golden case:
# spectrum {0.822..., 7/3, 2.3467..., 2.3492..., 2.3518...},
# one-row hull [3/4, 8/3], two-row hull [(31-sqrt(127))/24, (109+sqrt(1081))/60].
EXAMPLE_A = np.array([[14.0, 1.0, 1.0], [1.0, 11.0, -2.0], [1.0, -2.0, 13.0]])
EXAMPLE_B = np.array([[6.0, 0.0, 0.0], [0.0, 10.0, 2.0], [0.0, 2.0, 10.0]])


def example_pair() -> el.MatrixPair:
    return el.make_pair(EXAMPLE_A, EXAMPLE_B)


def random_symmetric(rng, n, scale=2.0):
    m = rng.uniform(-scale, scale, (n, n))
    return 0.5 * (m + m.T)


def random_sdd_symmetric(rng, n, scale=2.0):
    """Random symmetric strictly diagonally dominant with positive diagonal."""
    m = random_symmetric(rng, n, scale)
    np.fill_diagonal(m, 0.0)
    slack = rng.uniform(0.1, scale, n)
    return m + np.diag(np.abs(m).sum(axis=1) + slack)


def random_pd_shifted(rng, n, scale=2.0):
    """Random symmetric matrix shifted along the identity until PD."""
    a = random_symmetric(rng, n, scale)
    lam_min = np.linalg.eigvalsh(a)[0]
    return a + (max(0.0, -lam_min) + rng.uniform(0.05, 1.0)) * np.eye(n)


def random_certified_pair(rng, n, scale=2.0) -> el.MatrixPair:
    """A pair satisfying every localization hypothesis: A PD (hence
    copositive), B SDD with positive diagonal (hence PD)."""
    return el.make_pair(
        random_pd_shifted(rng, n, scale), random_sdd_symmetric(rng, n, scale)
    )


def random_commuting_pair(rng, n, scale=2.0):
    """(A, B) sharing a random orthonormal eigenbasis, B PD."""
    q, _ = np.linalg.qr(rng.normal(size=(n, n)))
    a_vals = rng.uniform(-scale, scale, n)
    b_vals = rng.uniform(0.2, scale + 0.2, n)
    a = q @ np.diag(a_vals) @ q.T
    b = q @ np.diag(b_vals) @ q.T
    return 0.5 * (a + a.T), 0.5 * (b + b.T), a_vals, b_vals
