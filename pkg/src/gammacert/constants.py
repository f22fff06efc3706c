"""The constant ring Q[gamma, ln 2, pi^(1/2), zeta(3), zeta(5), ...].

Every Gamma-derivative at an integer or half-integer lives here exactly.
Even zeta values never appear as symbols: :func:`from_zeta` rewrites
``zeta(2m)`` as a rational multiple of ``pi^(2m)`` on construction.

Text rendering uses ``g`` (gamma), ``l`` (ln 2), ``p`` (pi) and ``zK``
(zeta(K)), e.g. ``-1*g^3 - 1/2*p^2*g - 2*z3``; half-integral pi powers are
written ``p^{1/2}``, ``p^{3/2}``.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Any, Iterable, Mapping, NamedTuple, Union

import mpmath

from . import numeric
from .exact import bernoulli, factorial

__all__ = [
    "Monomial",
    "ConstExpr",
    "PiVector",
    "NotPureInPi",
    "GAMMA",
    "LOG2",
    "SQRT_PI",
    "PI",
    "ONE",
    "ZERO",
    "from_zeta",
    "pi_power",
    "as_pi_vector",
    "evaluate",
]

# Packed monomial layout: 16-bit fields; field 0 = pi half-exponent,
# 1 = gamma, 2 = ln 2, 3 + i = zeta(2i + 3). Exponents stay below 2^15, so a
# product overflowing a field shows up as bit 15 of that field.
_BITS = 16
_FIELD = (1 << _BITS) - 1
_MAX_EXP = 1 << (_BITS - 1)
_PI, _GAMMA, _LOG2, _ZETA0 = 0, 1, 2, 3


@lru_cache(maxsize=None)
def _overflow_mask(fields: int) -> int:
    return sum(1 << (_BITS * f + _BITS - 1) for f in range(fields))


def _check_overflow(keys: Iterable[int]) -> None:
    for k in keys:
        if k & _overflow_mask(k.bit_length() // _BITS + 1):
            raise OverflowError("monomial exponent exceeds the packed range")


class Monomial(NamedTuple):
    """``gamma^g * ln2^l * pi^(pi_half/2) * prod zeta(k)^e``; ``zeta_exps`` is sorted by k."""

    gamma_exp: int = 0
    log2_exp: int = 0
    pi_half_exp: int = 0
    zeta_exps: tuple = ()

    def pack(self) -> int:
        key = self.pi_half_exp | self.gamma_exp << _BITS | self.log2_exp << (2 * _BITS)
        exps = [self.pi_half_exp, self.gamma_exp, self.log2_exp]
        for k, e in self.zeta_exps:
            if k < 3 or k % 2 == 0:
                raise ValueError(f"zeta({k}) is not an odd zeta value >= 3")
            key |= e << (_BITS * (_ZETA0 + (k - 3) // 2))
            exps.append(e)
        if any(not 0 <= e < _MAX_EXP for e in exps):
            raise ValueError(f"exponent out of range in {self}")
        return key

    @classmethod
    def unpack(cls, key: int) -> "Monomial":
        pi_half = key & _FIELD
        g = (key >> _BITS) & _FIELD
        l = (key >> (2 * _BITS)) & _FIELD
        zetas = []
        rest = key >> (3 * _BITS)
        k = 3
        while rest:
            e = rest & _FIELD
            if e:
                zetas.append((k, e))
            rest >>= _BITS
            k += 2
        return cls(g, l, pi_half, tuple(zetas))

    @property
    def weight(self) -> Fraction:
        return self.gamma_exp + self.log2_exp + Fraction(self.pi_half_exp, 2) + sum(k * e for k, e in self.zeta_exps)

    def is_pure_pi(self) -> bool:
        return self.gamma_exp == 0 and self.log2_exp == 0 and not self.zeta_exps

    def sort_key(self) -> tuple:
        return (
            -self.weight,
            -self.gamma_exp,
            -self.log2_exp,
            -self.pi_half_exp,
            tuple((-k, -e) for k, e in reversed(self.zeta_exps)),
        )

    def render(self) -> str:
        parts = []
        if self.pi_half_exp:
            h = self.pi_half_exp
            if h == 2:
                parts.append("p")
            elif h % 2 == 0:
                parts.append(f"p^{h // 2}")
            else:
                parts.append(f"p^{{{h}/2}}")
        for sym, e in (("g", self.gamma_exp), ("l", self.log2_exp)):
            if e:
                parts.append(sym if e == 1 else f"{sym}^{e}")
        for k, e in self.zeta_exps:
            parts.append(f"z{k}" if e == 1 else f"z{k}^{e}")
        return "*".join(parts)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


class NotPureInPi(ValueError):
    """A constant expected to be a combination of pi powers contains other monomials."""

    def __init__(self, expr: "ConstExpr", offending: list[Monomial]):
        self.expr = expr
        self.offending = offending
        shown = ", ".join(m.render() or "1" for m in offending[:8])
        more = "" if len(offending) <= 8 else f" (+{len(offending) - 8} more)"
        super().__init__(f"not a combination of pi powers; offending monomials: {shown}{more}")


Scalar = Union[int, Fraction]


class ConstExpr:
    """Immutable element of the constant ring with exact rational coefficients."""

    __slots__ = ("_t", "_int")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        t: dict[int, Fraction] = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                key = Monomial(*mono).pack() if not isinstance(mono, int) else mono
                c = t.get(key, 0) + c
                if c:
                    t[key] = c
                else:
                    t.pop(key, None)
        self._t = t
        self._int = None

    @classmethod
    def _raw(cls, t: dict[int, Fraction]) -> "ConstExpr":
        obj = cls.__new__(cls)
        obj._t = t
        obj._int = None
        return obj

    @classmethod
    def const(cls, c: Scalar) -> "ConstExpr":
        c = Fraction(c)
        return cls._raw({0: c} if c else {})

    @classmethod
    def monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "ConstExpr":
        return cls({mono: coeff})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        """Monomial -> coefficient in canonical order."""
        items = [(Monomial.unpack(k), c) for k, c in self._t.items()]
        items.sort(key=lambda mc: mc[0].sort_key())
        return dict(items)

    def __len__(self) -> int:
        return len(self._t)

    def is_zero(self) -> bool:
        return not self._t

    def is_rational(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._t.get(0, Fraction(0))

    def monomials(self) -> list[Monomial]:
        return list(self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._t.get(Monomial(*mono).pack(), Fraction(0))

    # -- arithmetic ----------------------------------------------------------

    @staticmethod
    def _coerce(x: Any) -> "ConstExpr":
        if isinstance(x, ConstExpr):
            return x
        if isinstance(x, (int, Fraction)):
            return ConstExpr.const(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if len(other._t) > len(self._t):
            small, big = self._t, other._t
        else:
            small, big = other._t, self._t
        t = dict(big)
        for k, c in small.items():
            s = t.get(k, 0) + c
            if s:
                t[k] = s
            else:
                del t[k]
        return ConstExpr._raw(t)

    __radd__ = __add__

    def __neg__(self):
        return ConstExpr._raw({k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def _scale(self, c: Fraction) -> "ConstExpr":
        if not c:
            return ConstExpr._raw({})
        return ConstExpr._raw({k: v * c for k, v in self._t.items()})

    def _int_form(self) -> tuple[int, list[tuple[int, int]]]:
        # (common denominator D, [(key, numerator * ... / D)]) for integer-only products
        if self._int is None:
            den = 1
            for c in self._t.values():
                den = den * c.denominator // math.gcd(den, c.denominator)
            self._int = (den, [(k, c.numerator * (den // c.denominator)) for k, c in self._t.items()])
        return self._int

    @classmethod
    def dot(cls, xs, ys) -> "ConstExpr":
        """``sum(x * y for x, y in zip(xs, ys))`` with a single accumulation pass."""
        pairs = []
        for x, y in zip(xs, ys):
            x, y = cls._coerce(x), cls._coerce(y)
            if x._t and y._t:
                if len(x._t) > len(y._t):
                    x, y = y, x
                pairs.append((x._int_form(), y._int_form()))
        if not pairs:
            return cls._raw({})
        lcm = 1
        for (dx, _), (dy, _) in pairs:
            d = dx * dy
            lcm = lcm * d // math.gcd(lcm, d)
        acc: dict[int, int] = {}
        get = acc.get
        for (dx, tx), (dy, ty) in pairs:
            f = lcm // (dx * dy)
            for kx, nx in tx:
                cx = nx * f
                for ky, ny in ty:
                    k = kx + ky
                    acc[k] = get(k, 0) + cx * ny
        _check_overflow(acc)
        return cls._raw({k: Fraction(n, lcm) for k, n in acc.items() if n})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self._scale(Fraction(other))
        if not isinstance(other, ConstExpr):
            return NotImplemented
        return ConstExpr.dot((self,), (other,))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ConstExpr):
            if not other.is_rational():
                return self * other._inverse()
            other = other.rational_value()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return self._scale(1 / Fraction(other))
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self._inverse()

    def _inverse(self) -> "ConstExpr":
        if self.is_rational() and self._t:
            return ConstExpr.const(1 / self.rational_value())
        raise ArithmeticError(f"{self} is not invertible in the constant ring")

    def __pow__(self, n: int) -> "ConstExpr":
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._t == other._t

    def __hash__(self):
        return hash(frozenset(self._t.items()))

    # -- rendering -----------------------------------------------------------

    def render(self) -> str:
        if not self._t:
            return "0"
        out = []
        for i, (mono, c) in enumerate(self.terms.items()):
            body = mono.render()
            if i == 0:
                if not body:
                    out.append(_frac_str(c))
                elif c == 1:
                    out.append(body)
                else:
                    out.append(f"{_frac_str(c)}*{body}")
            else:
                sign = " - " if c < 0 else " + "
                a = abs(c)
                if not body:
                    out.append(sign + _frac_str(a))
                elif a == 1:
                    out.append(sign + body)
                else:
                    out.append(f"{sign}{_frac_str(a)}*{body}")
        return "".join(out)

    __str__ = render

    def __repr__(self):
        return f"ConstExpr({self.render()!r})"

    def to_json(self) -> list[dict]:
        return [
            {
                "coeff": _frac_str(c),
                "gamma": m.gamma_exp,
                "log2": m.log2_exp,
                "pi_half": m.pi_half_exp,
                "zeta": {str(k): e for k, e in m.zeta_exps},
            }
            for m, c in self.terms.items()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "ConstExpr":
        terms = {}
        for d in data:
            zetas = tuple(sorted((int(k), int(e)) for k, e in d.get("zeta", {}).items()))
            mono = Monomial(int(d["gamma"]), int(d["log2"]), int(d["pi_half"]), zetas)
            terms[mono] = Fraction(d["coeff"])
        return cls(terms)

    def evaluate(self, prec: int):
        return evaluate(self, prec)


ZERO = ConstExpr()
ONE = ConstExpr.const(1)
GAMMA = ConstExpr.monomial(Monomial(gamma_exp=1))
LOG2 = ConstExpr.monomial(Monomial(log2_exp=1))
SQRT_PI = ConstExpr.monomial(Monomial(pi_half_exp=1))
PI = ConstExpr.monomial(Monomial(pi_half_exp=2))


def pi_power(half_exp: int, coeff: Scalar = 1) -> ConstExpr:
    """``coeff * pi^(half_exp/2)``."""
    return ConstExpr.monomial(Monomial(pi_half_exp=half_exp), coeff)


def from_zeta(k: int) -> ConstExpr:
    """zeta(k): a symbol for odd k, ``(-1)^(m+1) B_2m (2 pi)^2m / (2 (2m)!)`` for k = 2m."""
    if k < 2:
        raise ValueError(f"zeta({k}) is outside the ring (k >= 2 required)")
    if k % 2:
        return ConstExpr.monomial(Monomial(zeta_exps=((k, 1),)))
    m = k // 2
    c = (-1) ** (m + 1) * bernoulli(k) * 2**k / (2 * factorial(k))
    return pi_power(2 * k, c)


class PiVector:
    """Finite combination ``sum c_e pi^e`` with rational ``c_e`` and exponents in (1/2)Z."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Scalar, Scalar] | None = None):
        clean = {}
        for e, c in (entries or {}).items():
            e, c = Fraction(e), Fraction(c)
            if (2 * e).denominator != 1:
                raise ValueError(f"pi exponent {e} is not in (1/2)Z")
            if c:
                clean[e] = clean.get(e, 0) + c
        self.entries = {e: clean[e] for e in sorted(clean) if clean[e]}

    def __eq__(self, other):
        if not isinstance(other, PiVector):
            return NotImplemented
        return self.entries == other.entries

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self):
        return "PiVector({" + ", ".join(f"{_frac_str(e)}: {_frac_str(c)}" for e, c in self.entries.items()) + "})"

    def __bool__(self):
        return bool(self.entries)

    def leading(self) -> tuple[Fraction, Fraction]:
        """Highest pi exponent and its coefficient."""
        if not self.entries:
            raise ValueError("the zero vector has no leading term")
        e = max(self.entries)
        return e, self.entries[e]

    def to_const(self) -> ConstExpr:
        return ConstExpr({Monomial(pi_half_exp=int(2 * e)): c for e, c in self.entries.items()})

    def to_json(self) -> dict[str, str]:
        return {_frac_str(e): _frac_str(c) for e, c in self.entries.items()}


def as_pi_vector(a: ConstExpr) -> PiVector:
    """Read ``a`` as a combination of pi powers; raises :class:`NotPureInPi` otherwise."""
    terms = a.terms
    bad = [m for m in terms if not m.is_pure_pi()]
    if bad:
        raise NotPureInPi(a, bad)
    return PiVector({Fraction(m.pi_half_exp, 2): c for m, c in terms.items()})


def evaluate(a: ConstExpr, prec: int):
    """Numeric value of ``a`` at ``prec`` bits (generators taken ``GUARD`` bits deeper)."""
    if prec < numeric.MIN_PREC:
        raise ValueError(f"precision must be at least {numeric.MIN_PREC} bits")
    wp = prec + numeric.GUARD
    terms = a.terms
    zetas = sorted({k for m in terms for k, _ in m.zeta_exps})
    values = {
        "g": numeric.const_gamma(wp),
        "l": numeric.const_ln2(wp),
        "p": numeric.const_pi(wp),
    }
    zeta_vals = {k: numeric.const_zeta(k, wp) for k in zetas}
    with numeric.working_precision(wp):
        sqrt_pi = mpmath.sqrt(values["p"])
        parts = []
        for m, c in terms.items():
            v = mpmath.mpf(c.numerator) / c.denominator
            if m.pi_half_exp:
                v *= sqrt_pi ** m.pi_half_exp
            if m.gamma_exp:
                v *= values["g"] ** m.gamma_exp
            if m.log2_exp:
                v *= values["l"] ** m.log2_exp
            for k, e in m.zeta_exps:
                v *= zeta_vals[k] ** e
            parts.append(v)
        total = mpmath.fsum(parts)
    with numeric.working_precision(prec):
        return +total
