"""Exact Gamma values, polygamma values and Taylor series at points of (1/2)Z.

Two independent routes to the Taylor coefficients at 1 are provided:
:func:`taylor` exponentiates the log-Gamma series,

    Gamma(q + t) = Gamma(q) * exp(sum_{k>=1} psi^(k-1)(q) t^k / k!),

while :func:`taylor_via_recursion` iterates the classical recursion for
``Gamma^(n)(1)`` in terms of gamma and zeta values.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from .constants import GAMMA, LOG2, ONE, SQRT_PI, ConstExpr, from_zeta
from .exact import HalfInteger, PoleError, factorial
from .series import Series

__all__ = [
    "GammaTaylor",
    "gamma_value",
    "polygamma",
    "taylor",
    "taylor_via_recursion",
]

HalfLike = Union[HalfInteger, int, Fraction, str]


def _point(q: HalfLike) -> HalfInteger:
    q = HalfInteger.of(q)
    if q.is_pole():
        raise PoleError(f"Gamma has a pole at {q}")
    return q


def gamma_value(q: HalfLike) -> ConstExpr:
    """Gamma(q): ``(q-1)!`` for integers, a rational multiple of sqrt(pi) otherwise."""
    q = _point(q)
    xi, m = q.decompose()
    val = ONE if xi.is_integer() else SQRT_PI
    x = xi.value
    if m >= 0:
        for i in range(m):
            val = val * (x + i)
    else:
        for i in range(m, 0):
            val = val / (x + i)
    return val


@lru_cache(maxsize=None)
def _anchor(xi_twice: int, k: int) -> ConstExpr:
    # psi^(k) at 1 (xi_twice == 2) or 1/2 (xi_twice == 1)
    if k == 0:
        return -GAMMA if xi_twice == 2 else -GAMMA - 2 * LOG2
    c = (-1) ** (k + 1) * factorial(k)
    if xi_twice == 1:
        c *= 2 ** (k + 1) - 1
    return from_zeta(k + 1) * c


@lru_cache(maxsize=None)
def _polygamma(q: HalfInteger, k: int) -> ConstExpr:
    xi, m = q.decompose()
    step = (-1) ** k * factorial(k)
    x = xi.value
    shift = Fraction(0)
    # psi^(k)(z + 1) = psi^(k)(z) + (-1)^k k! z^-(k+1)
    if m >= 0:
        for i in range(m):
            shift += Fraction(step) / (x + i) ** (k + 1)
    else:
        for i in range(m, 0):
            shift -= Fraction(step) / (x + i) ** (k + 1)
    return _anchor(xi.twice, k) + shift


def polygamma(q: HalfLike, k: int) -> ConstExpr:
    """``psi^(k)(q)`` exactly; ``k = 0`` is the digamma function."""
    if k < 0:
        raise ValueError("polygamma order must be non-negative")
    return _polygamma(_point(q), k)


@dataclass(frozen=True)
class GammaTaylor:
    """Taylor series of ``Gamma(q + t)`` to order ``order``; coefficients are ``Gamma^(n)(q)/n!``."""

    q: HalfInteger
    order: int
    series: Series

    def derivative(self, n: int) -> ConstExpr:
        """``Gamma^(n)(q)``."""
        return self.series[n] * factorial(n)

    def derivatives(self) -> list[ConstExpr]:
        return [self.derivative(n) for n in range(self.order + 1)]


def taylor(q: HalfLike, order: int) -> GammaTaylor:
    q = _point(q)
    if order < 0:
        raise ValueError("order must be non-negative")
    log_series = [ConstExpr()] + [polygamma(q, k - 1) / factorial(k) for k in range(1, order + 1)]
    ser = Series(log_series).exp().scale(gamma_value(q))
    return GammaTaylor(q, order, ser)


def taylor_via_recursion(order: int) -> GammaTaylor:
    """Taylor series at 1 from

        Gamma^(n)(1) = -gamma Gamma^(n-1)(1)
                       + sum_{k=1}^{n-1} (-1)^(k+1) (n-1)!/(n-k-1)! zeta(k+1) Gamma^(n-k-1)(1).
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    derivs = [ONE]
    for n in range(1, order + 1):
        acc = -GAMMA * derivs[n - 1]
        for k in range(1, n):
            c = (-1) ** (k + 1) * (factorial(n - 1) // factorial(n - k - 1))
            acc = acc + from_zeta(k + 1) * derivs[n - k - 1] * c
        derivs.append(acc)
    ser = Series(d / factorial(n) for n, d in enumerate(derivs))
    return GammaTaylor(HalfInteger(2), order, ser)
