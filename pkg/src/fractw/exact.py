"""Exact rationals and finite unions of half-open rational intervals.

``Rational`` is :class:`fractions.Fraction`. A :class:`ColorSet` is a canonical
union of disjoint half-open intervals ``[lo, hi)``; it is what Alice hands to
each vertex, and its measure is an exact ``Fraction``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InsufficientMeasure

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted as exact rationals")
    return Fraction(x)


def rational_to_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def rational_from_json(pair) -> Fraction:
    num, den = pair
    return Fraction(int(num), int(den))


def fmt(x: Fraction) -> str:
    """``p/q`` string, or ``p`` when the denominator is 1."""
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def _canonical(pairs: Iterable[tuple]) -> tuple[tuple[Fraction, Fraction], ...]:
    items = []
    for lo, hi in pairs:
        lo, hi = as_rational(lo), as_rational(hi)
        if hi < lo:
            raise ValueError(f"interval [{lo}, {hi}) has hi < lo")
        if hi > lo:
            items.append((lo, hi))
    items.sort()
    out: list[list[Fraction]] = []
    for lo, hi in items:
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return tuple((lo, hi) for lo, hi in out)


@dataclass(frozen=True)
class ColorSet:
    """Finite union of half-open intervals with rational endpoints.

    Always stored canonically: sorted, pairwise disjoint, non-adjacent, each
    interval non-empty. Build instances with :meth:`of` or :meth:`cells`
    rather than the raw constructor.
    """

    intervals: tuple[tuple[Fraction, Fraction], ...] = ()

    @classmethod
    def of(cls, *pairs) -> "ColorSet":
        return cls(_canonical(pairs))

    @classmethod
    def from_pairs(cls, pairs: Iterable) -> "ColorSet":
        return cls(_canonical(pairs))

    @classmethod
    def cells(cls, indices: Iterable[int], t: int) -> "ColorSet":
        """Union of the cells ``[(i-1)/t, i/t)`` for 1-based ``i``."""
        idx = sorted(set(indices))
        out = []
        start = prev = None
        for i in idx:
            if prev is not None and i == prev + 1:
                prev = i
                continue
            if start is not None:
                out.append((Fraction(start - 1, t), Fraction(prev, t)))
            start = prev = i
        if start is not None:
            out.append((Fraction(start - 1, t), Fraction(prev, t)))
        return cls(tuple(out))

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), ZERO)

    def __bool__(self) -> bool:
        return bool(self.intervals)

    def __or__(self, other: "ColorSet") -> "ColorSet":
        return cs_union(self, other)

    def __and__(self, other: "ColorSet") -> "ColorSet":
        return cs_intersect(self, other)

    def __sub__(self, other: "ColorSet") -> "ColorSet":
        return cs_subtract(self, other)

    def issubset(self, other: "ColorSet") -> bool:
        return not cs_subtract(self, other)

    def isdisjoint(self, other: "ColorSet") -> bool:
        A, B = self.intervals, other.intervals
        i = j = 0
        while i < len(A) and j < len(B):
            a_lo, a_hi = A[i]
            b_lo, b_hi = B[j]
            if a_lo < b_hi and b_lo < a_hi:
                return False
            if a_hi <= b_hi:
                i += 1
            else:
                j += 1
        return True

    def sup(self) -> Fraction:
        return self.intervals[-1][1] if self.intervals else ZERO

    def to_json(self) -> list[list[int]]:
        return [[lo.numerator, lo.denominator, hi.numerator, hi.denominator]
                for lo, hi in self.intervals]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[int]]) -> "ColorSet":
        return cls.from_pairs((Fraction(a, b), Fraction(c, d)) for a, b, c, d in data)

    def __str__(self) -> str:
        if not self.intervals:
            return "{}"
        return " u ".join(f"[{fmt(lo)},{fmt(hi)})" for lo, hi in self.intervals)


EMPTY = ColorSet()


def cs_union(a: ColorSet, b: ColorSet) -> ColorSet:
    if not a.intervals:
        return b
    if not b.intervals:
        return a
    A, B = a.intervals, b.intervals
    out: list[list[Fraction]] = []
    i = j = 0
    while i < len(A) or j < len(B):
        if j == len(B) or (i < len(A) and A[i][0] <= B[j][0]):
            lo, hi = A[i]
            i += 1
        else:
            lo, hi = B[j]
            j += 1
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return ColorSet(tuple((lo, hi) for lo, hi in out))


def cs_union_all(sets: Iterable[ColorSet]) -> ColorSet:
    pairs = [iv for s in sets for iv in s.intervals]
    return ColorSet(_canonical(pairs))


def cs_intersect(a: ColorSet, b: ColorSet) -> ColorSet:
    out = []
    i = j = 0
    A, B = a.intervals, b.intervals
    while i < len(A) and j < len(B):
        a_lo, a_hi = A[i]
        b_lo, b_hi = B[j]
        lo = a_lo if a_lo > b_lo else b_lo
        hi = a_hi if a_hi < b_hi else b_hi
        if lo < hi:
            out.append((lo, hi))
        if a_hi < b_hi:
            i += 1
        else:
            j += 1
    # pieces of two canonical sets are already sorted and non-adjacent
    return ColorSet(tuple(out))


def cs_subtract(a: ColorSet, b: ColorSet) -> ColorSet:
    out = []
    B = b.intervals
    j = 0
    for lo, hi in a.intervals:
        while j < len(B) and B[j][1] <= lo:
            j += 1
        cur = lo
        k = j
        while k < len(B) and B[k][0] < hi:
            if B[k][0] > cur:
                out.append((cur, B[k][0]))
            cur = max(cur, B[k][1])
            if cur >= hi:
                break
            k += 1
        if cur < hi:
            out.append((cur, hi))
    return ColorSet(_canonical(out))


def cs_measure(a: ColorSet) -> Fraction:
    return a.measure


def cs_take_leftmost(a: ColorSet, amount) -> ColorSet:
    """The subset of ``a`` of measure ``amount`` made of its smallest points."""
    amount = as_rational(amount)
    if amount < 0:
        raise ValueError("amount must be non-negative")
    if a.measure < amount:
        raise InsufficientMeasure(f"set of measure {fmt(a.measure)} cannot supply {fmt(amount)}")
    out = []
    left = amount
    for lo, hi in a.intervals:
        if left == 0:
            break
        take = min(hi - lo, left)
        out.append((lo, lo + take))
        left -= take
    return ColorSet(_canonical(out))


def max_depth(sets: Sequence[ColorSet]) -> tuple[int, Fraction | None]:
    """Largest number of sets covering a common point, plus one such point."""
    events = []
    for s in sets:
        for lo, hi in s.intervals:
            events.append((lo, 1))
            events.append((hi, -1))
    # closing events sort before opening ones at the same coordinate
    events.sort(key=lambda e: (e[0], e[1]))
    depth = best = 0
    where = None
    for x, d in events:
        depth += d
        if depth > best:
            best, where = depth, x
    return best, where
