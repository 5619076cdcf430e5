"""Closed real intervals and normalized finite unions."""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = ["Interval", "IntervalUnion"]


@dataclass(frozen=True, order=True)
class Interval:
    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise ValueError("interval endpoints must not be NaN")
        if self.lo > self.hi:
            raise ValueError(f"inverted interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return self.lo - tol <= x <= self.hi + tol

    def contains_interval(self, other: "Interval", tol: float = 0.0) -> bool:
        return self.lo - tol <= other.lo and other.hi <= self.hi + tol


@dataclass(frozen=True)
class IntervalUnion:
    """A finite union of closed intervals, optionally normalized.

    Normalization sorts by lower endpoint and merges intervals whose gap
    is at most merge_tol = 1e-12 * (1 + largest endpoint magnitude); the
    result is sorted and pairwise disjoint, and membership of any point
    of the original union is preserved.
    """

    intervals: tuple[Interval, ...]
    normalized: bool = False

    @classmethod
    def of(cls, intervals) -> "IntervalUnion":
        return cls(tuple(intervals), normalized=False)

    def __len__(self) -> int:
        return len(self.intervals)

    def endpoints(self) -> list[float]:
        return [e for iv in self.intervals for e in (iv.lo, iv.hi)]

    def normalize(self) -> "IntervalUnion":
        if self.normalized or not self.intervals:
            return IntervalUnion(self.intervals, normalized=True)
        pts = self.endpoints()
        merge_tol = 1e-12 * (1.0 + max(abs(p) for p in pts))
        ordered = sorted(self.intervals)
        merged = [ordered[0]]
        for iv in ordered[1:]:
            last = merged[-1]
            if iv.lo <= last.hi + merge_tol:
                if iv.hi > last.hi:
                    merged[-1] = Interval(last.lo, iv.hi)
            else:
                merged.append(iv)
        return IntervalUnion(tuple(merged), normalized=True)

    def hull(self) -> Interval:
        if not self.intervals:
            raise ValueError("hull of an empty union")
        return Interval(
            min(iv.lo for iv in self.intervals),
            max(iv.hi for iv in self.intervals),
        )

    def contains(self, x: float, tol: float = 0.0) -> bool:
        return any(iv.contains(x, tol) for iv in self.intervals)
