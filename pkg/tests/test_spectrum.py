import math

import numpy as np
import pytest

import eicploc as el
from helpers import (
    example_pair,
    random_sdd_symmetric,
    random_pd_shifted,
)

RNG = np.random.default_rng(59)

GOLDEN_VALUES = {
    (0,): 14.0 / 6.0,
    (0, 1): (206.0 + math.sqrt(5716.0)) / 120.0,
    (0, 2): (218.0 + math.sqrt(4084.0)) / 120.0,
    (1, 2): (31.0 - math.sqrt(127.0)) / 24.0,
}


def _feas_tol(pair):
    return 1e-8 * (1.0 + el.linalg.inf_norm(pair.A) + el.linalg.inf_norm(pair.B))


def test_verify_singleton_support():
    pair = example_pair()
    check = el.verify_solution(pair, np.array([1.0, 0.0, 0.0]), 14.0 / 6.0)
    assert check.ok
    assert check.failed == ()


def test_verify_wrong_eigenvalue_fails_residual():
    pair = example_pair()
    lam = 14.0 / 6.0 + 1.0
    check = el.verify_solution(pair, np.array([1.0, 0.0, 0.0]), lam)
    assert not check.ok
    assert "residual_nonneg" in check.failed
    assert check.w[0] == pytest.approx(-6.0)


def test_verify_zero_vector_fails_normalization():
    check = el.verify_solution(example_pair(), np.zeros(3), 1.0)
    assert not check.ok
    assert check.failed == ("normalized",)


def test_verify_negative_component():
    check = el.verify_solution(example_pair(), np.array([1.5, -0.5, 0.0]), 1.0)
    assert not check.x_nonneg


def test_enumerate_golden_spectrum():
    pair = example_pair()
    spec = el.enumerate_spectrum(pair)
    assert len(spec.values) == 5
    supports = {s.support for s in spec.solutions}
    assert supports == {(0,), (0, 1), (0, 2), (1, 2), (0, 1, 2)}
    for support, lam in GOLDEN_VALUES.items():
        got = next(s.lam for s in spec.solutions if s.support == support)
        assert abs(got - lam) <= 1e-9
    full = next(s.lam for s in spec.solutions if s.support == (0, 1, 2))
    assert abs(full - el.gamma_interval(pair).hi) <= 1e-9
    assert spec.degenerate_supports == ()


def test_enumerated_solutions_verify_and_satisfy_rayleigh():
    pair = example_pair()
    spec = el.enumerate_spectrum(pair)
    tol = _feas_tol(pair)
    for sol in spec.solutions:
        assert el.verify_solution(pair, sol.x, sol.lam, tol).ok
        rayleigh = float(sol.x @ pair.A @ sol.x) / float(sol.x @ pair.B @ sol.x)
        assert abs(sol.lam - rayleigh) <= 1e-7 * (1.0 + abs(sol.lam))
        assert np.all(sol.x * sol.w <= tol)
        assert abs(sol.x.sum() - 1.0) <= 1e-10


def test_enumerate_diagonal_pair():
    a = np.diag([2.0, 6.0, 3.0])
    b = np.diag([4.0, 3.0, 1.0])
    spec = el.enumerate_spectrum(el.make_pair(a, b))
    assert np.allclose(spec.values, [0.5, 2.0, 3.0], atol=1e-12)
    assert all(len(s.support) == 1 for s in spec.solutions)


def test_enumerate_dedupes_shared_eigenvalue():
    # two singleton supports share the eigenvalue 2: one value, two solutions
    spec = el.enumerate_spectrum(el.make_pair(np.diag([2.0, 2.0])))
    assert spec.values.tolist() == [2.0]
    assert {s.support for s in spec.solutions} >= {(0,), (1,)}
    gaps = np.diff(spec.values)
    assert np.all(gaps > 0.0)


def test_values_sorted_with_gaps_above_dedup_tolerance():
    rng = np.random.default_rng(2025)
    for _ in range(20):
        n = int(rng.integers(2, 6))
        pair = el.make_pair(random_pd_shifted(rng, n), random_sdd_symmetric(rng, n))
        spec = el.enumerate_spectrum(pair)
        vals = spec.values
        for prev, nxt in zip(vals, vals[1:]):
            assert nxt - prev > 1e-7 * (1.0 + abs(nxt))


def test_enumerate_gate_on_size():
    with pytest.raises(el.DimensionTooLarge):
        el.enumerate_spectrum(example_pair(), n_max=2)


def test_enumerate_needs_pd_right():
    pair = el.make_pair(np.eye(2), np.diag([1.0, -1.0]))
    with pytest.raises(el.NotPositiveDefinite):
        el.enumerate_spectrum(pair)


def test_enumerate_cardinality_bound():
    for _ in range(20):
        n = int(RNG.integers(2, 6))
        pair = el.make_pair(
            el.as_symmetric(RNG.uniform(-2, 2, (n, n)), rtol=np.inf),
            random_sdd_symmetric(RNG, n),
        )
        spec = el.enumerate_spectrum(pair)
        assert len(spec.values) <= 2**n - 1


def test_full_support_solutions_are_classical():
    for _ in range(30):
        n = int(RNG.integers(2, 7))
        pair = el.make_pair(random_pd_shifted(RNG, n), random_sdd_symmetric(RNG, n))
        spec = el.enumerate_spectrum(pair)
        gen = el.generalized_eig(pair.A, pair.B).values
        for sol in spec.solutions:
            if sol.support == tuple(range(n)):
                assert np.min(np.abs(gen - sol.lam)) <= 1e-7 * (1.0 + abs(sol.lam))


def test_degenerate_submatrix_flagged():
    pair = el.make_pair(np.eye(2), np.eye(2))
    spec = el.enumerate_spectrum(pair)
    # repeated unit eigenvalue on the full support; the axis-aligned
    # basis vectors have zero entries, so only the singletons survive
    assert (0, 1) in spec.degenerate_supports
    assert np.allclose(spec.values, [1.0])
    assert {s.support for s in spec.solutions} == {(0,), (1,)}


def test_spectrum_report_golden_all_verdicts_true():
    rep = el.spectrum_report(example_pair())
    verdicts = rep.all_verdicts()
    assert all(v is True for v in verdicts.values())
    assert len(rep.spectrum.values) == 5


def test_spectrum_report_prop4_gamma_strictly_wider_below():
    inst = el.prop4_instance(4, 2.0)
    rep = el.spectrum_report(inst.pair)
    assert all(v is True for v in rep.all_verdicts().values())
    loc = rep.localization
    assert abs(loc.hull_k1.lo - loc.hull_k2.lo) <= 1e-9
    assert abs(loc.hull_k1.hi - loc.hull_k2.hi) <= 1e-9
    assert loc.gamma.lo < loc.hull_k1.lo - 1e-9
    assert abs(loc.gamma.hi - loc.hull_k1.hi) <= 1e-9


def test_spectrum_report_prop5_gamma_point_strictly_inside():
    inst = el.prop5_instance(3, 2.0, 1.0, 1.0)
    rep = el.spectrum_report(inst.pair)
    assert all(v is True for v in rep.all_verdicts().values())
    loc = rep.localization
    assert abs(loc.gamma.lo - 1.0) <= 1e-9
    assert abs(loc.gamma.hi - 1.0) <= 1e-9
    assert loc.hull_k1.lo < loc.gamma.lo - 1e-6
    assert loc.hull_k1.hi > loc.gamma.hi + 1e-6


def test_spectrum_report_without_copositive_a():
    pair = el.make_pair(np.array([[1.0, -2.0], [-2.0, 1.0]]))
    rep = el.spectrum_report(pair)
    assert rep.pi_in_k1 is True
    assert rep.pi_in_gamma is True
    assert rep.pi_in_k2 is None
    assert rep.k2_in_k1_cop is None


def test_prop5_members_stay_inside_two_row_set():
    for beta, big_r, c in ((2.0, 1.0, 1.0), (5.0, 2.0, 0.5), (3.0, 2.9, 4.0)):
        inst = el.prop5_instance(4, beta, big_r, c)
        spec = el.enumerate_spectrum(inst.pair)
        union = el.k2_set(inst.pair)
        for lam in spec.values:
            assert union.contains(float(lam), 1e-7)
            assert inst.expected_hull_k2.contains(float(lam), 1e-7)
