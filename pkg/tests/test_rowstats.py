import numpy as np
import pytest

import eicploc as el
from helpers import EXAMPLE_A, EXAMPLE_B, random_sdd_symmetric, random_symmetric

RNG = np.random.default_rng(23)


def test_golden_row_two():
    st = el.row_stats(EXAMPLE_A)
    assert st.r_plus[1] == 1.0
    assert st.r_minus[1] == 2.0
    assert st.m_plus[1] == 12.0
    assert st.m_minus[1] == 9.0


def test_diagonal_matrix_has_no_off_sums():
    st = el.row_stats(np.diag([3.0, -1.0, 7.0]))
    assert np.array_equal(st.r_plus, np.zeros(3))
    assert np.array_equal(st.r_minus, np.zeros(3))
    assert np.array_equal(st.m_plus, [3.0, -1.0, 7.0])
    assert np.array_equal(st.m_minus, [3.0, -1.0, 7.0])


def test_all_ones_plus_identity():
    n, eps = 5, 2.0
    st = el.row_stats(np.ones((n, n)) + eps * np.eye(n))
    assert np.array_equal(st.r_plus, np.full(n, n - 1.0))
    assert np.array_equal(st.r_minus, np.zeros(n))


def test_row_sums_split_absolute_sum():
    for _ in range(100):
        n = int(RNG.integers(1, 10))
        m = random_symmetric(RNG, n)
        st = el.row_stats(m)
        off = np.abs(m - np.diag(np.diag(m))).sum(axis=1)
        assert np.all(st.r_plus >= 0.0)
        assert np.all(st.r_minus >= 0.0)
        assert np.abs(st.r_plus + st.r_minus - off).max() <= 1e-12 * (1.0 + off.max())


def test_pair_stats_golden_feed_the_quadratics():
    st = el.pair_stats(EXAMPLE_A, EXAMPLE_B)
    assert st.bb_plus[1, 2] == 96.0
    assert st.s_minus[1, 2] == 248.0
    assert st.aa_minus[1, 2] == 139.0
    assert st.bb_minus[0, 2] == 60.0
    assert st.s_plus[0, 2] == 218.0
    assert st.aa_plus[0, 2] == 180.0


def test_pair_stats_symmetric_in_row_swap():
    for _ in range(20):
        n = int(RNG.integers(2, 8))
        st = el.pair_stats(random_symmetric(RNG, n), random_symmetric(RNG, n))
        for arr in (st.aa_plus, st.aa_minus, st.bb_plus, st.bb_minus, st.s_plus, st.s_minus):
            assert np.array_equal(arr, arr.T)


def test_pair_stats_diagonal_pair():
    a = np.diag([2.0, 3.0])
    b = np.diag([4.0, 5.0])
    st = el.pair_stats(a, b)
    assert st.aa_plus[0, 1] == 6.0
    assert st.aa_minus[0, 1] == 6.0
    assert st.bb_plus[0, 1] == 20.0
    assert st.s_plus[0, 1] == 2.0 * 5.0 + 3.0 * 4.0
    assert st.s_minus[0, 1] == 22.0


def test_pair_stats_rejects_bad_dims():
    with pytest.raises(el.DimensionMismatch):
        el.pair_stats(np.eye(2), np.eye(3))
    with pytest.raises(el.DimensionMismatch):
        el.pair_stats(np.eye(1), np.eye(1))


def test_sdd_pd_leading_coefficients_positive():
    for _ in range(50):
        n = int(RNG.integers(2, 8))
        b = random_sdd_symmetric(RNG, n)
        st = el.pair_stats(np.eye(n), b)
        mask = ~np.eye(n, dtype=bool)
        assert np.all(st.bb_plus[mask] > 0.0)
        assert np.all(st.bb_minus[mask] > 0.0)


def test_single_row_bound_at_largest_component():
    for _ in range(300):
        n = int(RNG.integers(1, 9))
        m = random_symmetric(RNG, n)
        x = RNG.uniform(0.0, 1.0, n)
        p = int(np.argmax(x))
        st = el.row_stats(m)
        row_dot = float(m[p] @ x)
        slack = 1e-9 * (1.0 + abs(row_dot))
        assert st.m_minus[p] * x[p] <= row_dot + slack
        assert row_dot <= st.m_plus[p] * x[p] + slack


def test_sdd_nonnegative_diagonal_shift_chain():
    for _ in range(300):
        n = int(RNG.integers(1, 9))
        st = el.row_stats(random_sdd_symmetric(RNG, n))
        assert np.all(st.m_plus >= st.m_minus)
        assert np.all(st.m_minus > 0.0)


def test_two_row_bound_at_two_largest_components():
    for _ in range(300):
        n = int(RNG.integers(2, 9))
        m = random_symmetric(RNG, n)
        x = RNG.uniform(0.0, 1.0, n)
        x = x / x.sum()
        order = np.argsort(-x)
        p, q = int(order[0]), int(order[1])
        st = el.row_stats(m)
        for i in (p, q):
            coupling = float(sum(m[i, j] * x[i] * x[j] for j in range(n) if j != i))
            cap = x[p] * x[q]
            slack = 1e-9 * (1.0 + abs(coupling))
            assert -st.r_minus[i] * cap - slack <= coupling <= st.r_plus[i] * cap + slack
