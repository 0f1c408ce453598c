"""Closed-form and recursive bounds on f(t, omega), the largest fractional
chromatic number among graphs of treewidth t and clique number <= omega.

Everything is an exact Fraction except the asymptotic main terms, which are
floats and named ``*_approx`` wherever they are reported.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping

from .errors import BadRange, MissingBase

Base = Mapping[tuple[int, int], Fraction] | Callable[[int, int], Fraction]


def ub_theorem1(t: int, omega: int) -> Fraction:
    if not 2 <= omega <= t:
        raise BadRange(f"need 2 <= omega <= t, got t={t}, omega={omega}")
    return t + Fraction(omega - 1, t)


def _check_recursion_range(t: int, omega: int) -> None:
    if not (1 <= omega <= t and 2 * omega >= t + 1):
        raise BadRange(f"need (t+1)/2 <= omega <= t, got t={t}, omega={omega}")


def lb_corollary1(t: int, omega: int) -> Fraction:
    _check_recursion_range(t, omega)
    return t + 1 - sum((Fraction(1, omega - i + 1) for i in range(1, t - omega + 2)), Fraction(0))


def trivial_base(t: int, omega: int) -> Fraction:
    """f(t, omega) >= omega, from the clique K_omega (treewidth omega - 1 <= t)."""
    return Fraction(omega)


def registry_base(registry) -> Callable[[int, int], Fraction]:
    """max(omega', best certified gadget fitting width t' and clique omega')."""
    def base(t: int, omega: int) -> Fraction:
        vals = [g.chif_lb for g in registry if g.width <= t and g.clique_no <= omega]
        return max([Fraction(omega), *vals])
    return base


def _lookup(base: Base, t: int, omega: int) -> Fraction:
    if callable(base):
        return Fraction(base(t, omega))
    try:
        return Fraction(base[(t, omega)])
    except KeyError:
        raise MissingBase(f"no base value for f({t}, {omega})") from None


def lb_theorem3(t: int, omega: int, base: Base = trivial_base, depth: int = 1) -> Fraction:
    """t + 1 - sum_i 1/f(t-2i+1, omega-i+1) with f read from ``base``.

    With ``depth > 1`` every sub-pair that is itself in range also uses the
    recursion one level down, taking the larger of that and its base value.
    """
    _check_recursion_range(t, omega)
    memo: dict[tuple[int, int, int], Fraction] = {}

    def f(tt: int, ww: int, d: int) -> Fraction:
        key = (tt, ww, d)
        if key in memo:
            return memo[key]
        val = _lookup(base, tt, ww)
        if d > 0 and 1 <= ww <= tt and 2 * ww >= tt + 1:
            val = max(val, g(tt, ww, d))
        memo[key] = val
        return val

    def g(tt: int, ww: int, d: int) -> Fraction:
        total = Fraction(0)
        for i in range(1, tt - ww + 2):
            total += 1 / f(tt - 2 * i + 1, ww - i + 1, d - 1)
        return tt + 1 - total

    return g(t, omega, depth)


def eq1_lower(t) -> float:
    """t - ln t (approximate real)."""
    if t < 2:
        raise BadRange("need t >= 2")
    return t - math.log(t)


@dataclass(frozen=True)
class Cor2Value:
    t: int
    c: Fraction
    omega: int
    main_term_approx: float
    exact_finite: Fraction

    @property
    def gap_approx(self) -> float:
        return float(self.exact_finite) - self.main_term_approx


def cor2_lower(t: int, c) -> Cor2Value:
    """Main term t + 1 + ln(1 - 2c)/2 beside the exact harmonic lower bound at
    omega = floor((1 - c) t)."""
    c = Fraction(str(c)) if isinstance(c, float) else Fraction(c)
    if not 0 < c < Fraction(1, 2):
        raise BadRange("need 0 < c < 1/2")
    omega = math.floor((1 - c) * t)
    main = t + 1 + 0.5 * math.log(1 - 2 * float(c))
    return Cor2Value(t, c, omega, main, lb_corollary1(t, omega))


@dataclass(frozen=True)
class BoundRow:
    t: int
    omega: int
    ub_thm1: Fraction
    lb_cor1: Fraction | None
    lb_thm3: Fraction | None
    eq1_approx: float | None


def bound_table(t_max: int, base: Base = trivial_base, t_min: int = 2) -> list[BoundRow]:
    rows = []
    for t in range(t_min, t_max + 1):
        for omega in range(2, t + 1):
            in_range = 2 * omega >= t + 1
            rows.append(BoundRow(
                t, omega, ub_theorem1(t, omega),
                lb_corollary1(t, omega) if in_range else None,
                lb_theorem3(t, omega, base) if in_range else None,
                eq1_lower(t),
            ))
    return rows
