import math

import numpy as np
import pytest

from eicploc import Interval, IntervalUnion

RNG = np.random.default_rng(31)


def test_interval_rejects_inverted():
    with pytest.raises(ValueError):
        Interval(2.0, 1.0)


def test_interval_rejects_nan():
    with pytest.raises(ValueError):
        Interval(math.nan, 1.0)


def test_interval_membership_with_tolerance():
    iv = Interval(1.0, 2.0)
    assert iv.contains(1.0)
    assert iv.contains(2.0)
    assert not iv.contains(2.0000001)
    assert iv.contains(2.0000001, tol=1e-6)
    assert iv.contains_interval(Interval(1.25, 1.75))
    assert not iv.contains_interval(Interval(0.5, 1.5))


def test_degenerate_interval_is_a_point():
    iv = Interval(1.5, 1.5)
    assert iv.width == 0.0
    assert iv.contains(1.5)


def test_normalize_merges_and_sorts():
    union = IntervalUnion.of([Interval(3.0, 4.0), Interval(1.0, 2.0), Interval(1.5, 2.5)])
    norm = union.normalize()
    assert norm.normalized
    assert norm.intervals == (Interval(1.0, 2.5), Interval(3.0, 4.0))


def test_normalize_merges_touching_within_tolerance():
    gap = 1e-14
    norm = IntervalUnion.of([Interval(0.0, 1.0), Interval(1.0 + gap, 2.0)]).normalize()
    assert len(norm) == 1
    assert norm.intervals[0] == Interval(0.0, 2.0)


def test_normalize_keeps_separated_intervals():
    norm = IntervalUnion.of([Interval(0.0, 1.0), Interval(1.5, 2.0)]).normalize()
    assert len(norm) == 2


def test_normalize_keeps_degenerate_points():
    norm = IntervalUnion.of([Interval(2.0, 2.0), Interval(0.0, 1.0)]).normalize()
    assert norm.intervals == (Interval(0.0, 1.0), Interval(2.0, 2.0))


def test_normalize_idempotent():
    union = IntervalUnion.of([Interval(0.0, 1.0), Interval(0.5, 3.0)]).normalize()
    assert union.normalize() is not None
    assert union.normalize().intervals == union.intervals


def test_normalization_preserves_membership():
    for _ in range(100):
        n = int(RNG.integers(1, 8))
        ivs = []
        for _ in range(n):
            lo = float(RNG.uniform(-5, 5))
            ivs.append(Interval(lo, lo + float(RNG.uniform(0, 3))))
        union = IntervalUnion.of(ivs)
        norm = union.normalize()
        assert all(np.diff([iv.lo for iv in norm.intervals]) > 0)
        for last, nxt in zip(norm.intervals, norm.intervals[1:]):
            assert nxt.lo > last.hi
        for x in RNG.uniform(-6, 6, 50):
            if union.contains(float(x)):
                assert norm.contains(float(x))


def test_hull_spans_extremes():
    union = IntervalUnion.of([Interval(1.0, 2.0), Interval(-1.0, 0.0), Interval(5.0, 6.0)])
    assert union.hull() == Interval(-1.0, 6.0)
    assert union.hull().lo == min(iv.lo for iv in union.intervals)
    assert union.hull().hi == max(iv.hi for iv in union.intervals)


def test_hull_of_empty_union_raises():
    with pytest.raises(ValueError):
        IntervalUnion.of([]).hull()
