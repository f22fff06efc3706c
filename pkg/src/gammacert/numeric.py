"""Arbitrary-precision numerics for Gamma-function Taylor coefficients.

Floats are ``mpmath.mpf``. Every public function takes an explicit precision
in bits and is evaluated twice, at ``prec`` and ``prec + GUARD`` (each with a
few extra working bits); the two results must agree to ``prec - 8`` bits or
:class:`PrecisionError` is raised. The returned value is the more precise
one rounded to ``prec``.

Hurwitz zeta, digamma and log-Gamma use Euler-Maclaurin / Stirling after
shifting the argument up to ``a = q + M >= wp/4 + s`` where ``wp`` is the
working precision; asymptotic terms are summed until they fall below
``2^-(wp+16)`` of the running value.
"""
from __future__ import annotations

import math
import threading
from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterator, Union

import mpmath
from mpmath import mp, mpf

from .exact import PoleError, bernoulli, factorial
from .series import Series

__all__ = [
    "BigFloat",
    "GUARD",
    "PrecisionError",
    "NumericTaylor",
    "working_precision",
    "const_pi",
    "const_gamma",
    "const_ln2",
    "const_zeta",
    "hurwitz_zeta",
    "log_gamma",
    "gamma",
    "polygamma_numeric",
    "gamma_taylor_numeric",
    "to_decimal",
    "to_hex",
    "agree_bits",
]

BigFloat = mpf
GUARD = 64
EXTRA = 32  # working bits added on top of the requested precision
MIN_PREC = 32

Number = Union[int, Fraction]

# mpmath keeps its precision in a process-global context, so numeric work
# is serialized behind this lock.
_prec_lock = threading.RLock()


class PrecisionError(ArithmeticError):
    """Evaluations at ``prec`` and ``prec + GUARD`` disagree; raise the precision."""


@contextmanager
def working_precision(prec: int) -> Iterator[None]:
    with _prec_lock:
        with mp.workprec(prec):
            yield


def _check_prec(prec: int) -> None:
    if prec < MIN_PREC:
        raise ValueError(f"precision must be at least {MIN_PREC} bits, got {prec}")


def _to_mpf(q: Number) -> mpf:
    q = Fraction(q)
    return mpf(q.numerator) / q.denominator


def agree_bits(a: mpf, b: mpf) -> float:
    """Number of leading bits on which ``a`` and ``b`` agree (relative), inf when equal."""
    if a == b:
        return math.inf
    diff = mpmath.fsub(a, b, exact=True)
    scale = max(abs(a), abs(b))
    return -float(mpmath.log(abs(diff), 2) - mpmath.log(scale, 2))


def _guarded(raw: Callable[..., object], prec: int, *args):
    _check_prec(prec)
    with working_precision(prec + EXTRA):
        lo = raw(*args)
    with working_precision(prec + GUARD + EXTRA):
        hi = raw(*args)
    single = not isinstance(hi, (list, tuple))
    los = [lo] if single else lo
    his = [hi] if single else hi
    for i, (x, y) in enumerate(zip(los, his)):
        if agree_bits(x, y) < prec - 8:
            where = "" if single else f" (component {i})"
            raise PrecisionError(
                f"{getattr(raw, '__name__', 'value')}{args}{where}: results at {prec} and "
                f"{prec + GUARD} bits agree to only {agree_bits(x, y):.1f} bits"
            )
    with working_precision(prec):
        out = [+y for y in his]
    return out[0] if single else out


# -- raw evaluators: work at the current mp.prec ---------------------------

def _pi() -> mpf:
    return +mp.pi


def _euler_gamma() -> mpf:
    return +mp.euler


def _ln2() -> mpf:
    return +mp.ln2


def _shift_count(q: Fraction, s: int) -> int:
    target = mp.prec / 4 + s
    return max(0, math.ceil(target - q))


def _hurwitz(s: int, q: Fraction) -> mpf:
    if s < 2:
        raise ValueError("Hurwitz zeta is only implemented for integer s >= 2")
    if q <= 0:
        raise ValueError("Hurwitz zeta needs q > 0")
    M = _shift_count(q, s)
    qf = _to_mpf(q)
    head = mpmath.fsum((qf + n) ** (-s) for n in range(M))
    a = qf + M
    total = head + a ** (1 - s) / (s - 1) + a ** (-s) / 2
    eps = mpf(2) ** (-(mp.prec + 16))
    a2 = a * a
    power = a ** (-(s + 1))  # a^{-(s+2k-1)} for k = 1
    rising = s  # s (s+1) ... (s+2k-2)
    prev = None
    for k in range(1, 10 * mp.prec):
        coeff = bernoulli(2 * k) * Fraction(rising, factorial(2 * k))
        term = _to_mpf(coeff) * power
        total += term
        mag = abs(term)
        if mag < eps * abs(total):
            return total
        if prev is not None and mag > prev:
            raise PrecisionError(f"Euler-Maclaurin tail diverged for zeta({s}, {q})")
        prev = mag
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power /= a2
    raise PrecisionError(f"Euler-Maclaurin tail did not converge for zeta({s}, {q})")


def _digamma(q: Fraction) -> mpf:
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise PoleError(f"digamma has a pole at {q}")
    M = _shift_count(q, 1)
    qf = _to_mpf(q)
    head = mpmath.fsum(1 / (qf + n) for n in range(M))
    a = qf + M
    total = mpmath.log(a) - 1 / (2 * a)
    eps = mpf(2) ** (-(mp.prec + 16))
    a2 = a * a
    power = 1 / a2
    prev = None
    for k in range(1, 10 * mp.prec):
        term = _to_mpf(bernoulli(2 * k) / (2 * k)) * power
        total -= term
        mag = abs(term)
        if mag < eps * abs(total):
            return total - head
        if prev is not None and mag > prev:
            raise PrecisionError(f"Stirling tail diverged for digamma({q})")
        prev = mag
        power /= a2
    raise PrecisionError(f"Stirling tail did not converge for digamma({q})")


def _log_gamma(q: Fraction) -> mpf:
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log_gamma needs q > 0")
    if q in (1, 2):
        return mpf(0)
    M = _shift_count(q, 1)
    qf = _to_mpf(q)
    head = mpmath.fsum(mpmath.log(qf + n) for n in range(M))
    a = qf + M
    total = (a - mpf(1) / 2) * mpmath.log(a) - a + mpmath.log(2 * _pi()) / 2
    eps = mpf(2) ** (-(mp.prec + 16))
    a2 = a * a
    power = 1 / a
    prev = None
    for k in range(1, 10 * mp.prec):
        term = _to_mpf(bernoulli(2 * k) / (2 * k * (2 * k - 1))) * power
        total += term
        mag = abs(term)
        if mag < eps * max(abs(total), 1):
            return total - head
        if prev is not None and mag > prev:
            raise PrecisionError(f"Stirling tail diverged for log_gamma({q})")
        prev = mag
        power /= a2
    raise PrecisionError(f"Stirling tail did not converge for log_gamma({q})")


def _upshift(q: Fraction) -> int:
    """Smallest shift ``s`` with ``q + s > 0``; zero when ``q`` is already positive."""
    return 0 if q > 0 else math.ceil(-q) + 1


def _gamma(q: Fraction) -> mpf:
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise PoleError(f"Gamma has a pole at {q}")
    s = _upshift(q)
    val = mpmath.exp(_log_gamma(q + s))
    for i in range(s):
        val /= _to_mpf(q + i)
    return val


def _polygamma(q: Fraction, k: int) -> mpf:
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise PoleError(f"polygamma has a pole at {q}")
    if k < 0:
        raise ValueError("polygamma order must be non-negative")
    s = _upshift(q)
    up = q + s
    if k == 0:
        val = _digamma(up)
    else:
        sign = 1 if k % 2 else -1
        val = sign * factorial(k) * _hurwitz(k + 1, up)
    # psi^(k)(z) = psi^(k)(z+1) - (-1)^k k! z^{-(k+1)}
    step = (-1) ** k * factorial(k)
    for i in range(s):
        val -= step / _to_mpf(q + i) ** (k + 1)
    return val


def _gamma_taylor(q: Fraction, order: int) -> list[mpf]:
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise PoleError(f"Gamma has a pole at {q}")
    s = _upshift(q)
    up = q + s
    zero = mpf(0)
    log_series = [zero] + [_polygamma(up, k - 1) / factorial(k) for k in range(1, order + 1)]
    ser = Series(log_series).exp().scale(mpmath.exp(_log_gamma(up)))
    if s:
        # Gamma(q+t) = Gamma(q+s+t) / prod_{i<s} (q+i+t)
        denom = Series.one(order, zero)
        for i in range(s):
            lin = Series([_to_mpf(q + i), mpf(1)] + [zero] * (order - 1)) if order else Series([_to_mpf(q + i)])
            denom = denom * lin
        ser = ser * denom.reciprocal()
    return list(ser)


# -- public, guard-checked API ---------------------------------------------

def const_pi(prec: int) -> mpf:
    return _guarded(_pi, prec)


def const_gamma(prec: int) -> mpf:
    """Euler-Mascheroni constant."""
    return _guarded(_euler_gamma, prec)


def const_ln2(prec: int) -> mpf:
    return _guarded(_ln2, prec)


def const_zeta(k: int, prec: int) -> mpf:
    """Riemann zeta at an integer ``k >= 2``."""
    if k < 2:
        raise ValueError("const_zeta needs k >= 2")
    return _guarded(_hurwitz, prec, k, Fraction(1))


def hurwitz_zeta(s: int, q: Number, prec: int) -> mpf:
    """``sum_{n>=0} (n+q)^-s`` for integer ``s >= 2`` and rational ``q > 0``."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("hurwitz_zeta needs q > 0")
    return _guarded(_hurwitz, prec, s, q)


def log_gamma(q: Number, prec: int) -> mpf:
    q = Fraction(q)
    if q <= 0 and q.denominator == 1:
        raise PoleError(f"Gamma has a pole at {q}")
    if q <= 0:
        raise ValueError("log_gamma needs q > 0")
    return _guarded(_log_gamma, prec, q)


def gamma(q: Number, prec: int) -> mpf:
    return _guarded(_gamma, prec, Fraction(q))


def polygamma_numeric(q: Number, k: int, prec: int) -> mpf:
    """``psi^(k)(q)``; ``k = 0`` is the digamma function."""
    return _guarded(_polygamma, prec, Fraction(q), k)


@dataclass(frozen=True)
class NumericTaylor:
    """Coefficients ``Gamma^(n)(q)/n!`` for ``n <= order`` at ``prec`` bits."""

    q: Fraction
    order: int
    coeffs: tuple
    prec: int

    def derivative(self, n: int) -> mpf:
        with working_precision(self.prec):
            return self.coeffs[n] * factorial(n)

    def series(self) -> Series:
        return Series(self.coeffs)


def gamma_taylor_numeric(q: Number, order: int, prec: int) -> NumericTaylor:
    q = Fraction(q)
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = _guarded(_gamma_taylor, prec, q, order)
    return NumericTaylor(q, order, tuple(coeffs), prec)


def to_decimal(x: mpf, digits: int = 30) -> str:
    """Decimal rendering with exactly ``digits`` significant digits."""
    return mpmath.nstr(x, digits, strip_zeros=False)


def to_hex(x: mpf) -> str:
    """Exact hex-float rendering ``[-]0x<mantissa>p<exponent>``."""
    sign, man, exp, _ = x._mpf_
    if not man:
        return "0x0p+0"
    return f"{'-' if sign else ''}0x{man:x}p{exp:+d}"

