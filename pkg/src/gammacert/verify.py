"""Coefficient identities behind the two transcendence statements.

Integer and half-integer points (exact, zero tolerance)
-------------------------------------------------------
For ``q = xi + m`` with ``xi`` in {1, 1/2}, the functional equation gives

    Gamma(q+t) Gamma(q-t) = R_q(t^2) Gamma(xi+t) Gamma(xi-t)

and the reflection formula gives ``Gamma(xi+t)Gamma(xi-t)`` as
``pi t / sin(pi t)`` or ``pi / cos(pi t)``. The coefficient ``c_j`` of
``t^(2j)`` is computed twice:

* :func:`c_via_pi` convolves the rational coefficients of ``R_q`` with the
  Bernoulli / Euler coefficient families, giving an explicit combination of
  pi powers;
* :func:`c_via_cauchy` multiplies the symbolic Taylor series of
  ``Gamma(q+t)`` by its ``t -> -t`` image, so gamma, ln 2 and odd zeta values
  have to cancel.

:func:`verify_theorem1` checks the two agree exactly and that row ``j`` has
top pi exponent ``2(j+1-xi)`` with non-zero coefficient ``b_0 a_j``
(a triangular certificate of linear independence over pi powers).

Other rational points (numeric)
-------------------------------
:func:`verify_theorem2` compares the Taylor coefficients of
``pi / sin(pi(q+t))`` with the Cauchy product of the numeric Taylor series
of ``Gamma(q+t)`` and ``Gamma(1-q-t)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

import mpmath

from . import numeric
from .constants import ConstExpr, NotPureInPi, PiVector, as_pi_vector
from .exact import HalfInteger, PoleError, bernoulli, euler_number, factorial, parse_fraction
from .gamma import taylor
from .series import Series

__all__ = [
    "RqSeries",
    "CauchyRows",
    "CertificateReport",
    "Theorem2Report",
    "VerificationError",
    "rq_coefficients",
    "xi_product_coeffs",
    "c_via_pi",
    "c_via_cauchy",
    "verify_theorem1",
    "reflection_coeffs_numeric",
    "verify_theorem2",
    "SCHEMA_VERSION",
]

SCHEMA_VERSION = 1

HalfLike = Union[HalfInteger, int, Fraction, str]


class VerificationError(AssertionError):
    """An identity that must hold exactly failed; ``details`` is JSON-able."""

    def __init__(self, message: str, details: dict[str, Any]):
        super().__init__(message)
        self.details = details


def _frac(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _half_point(q: HalfLike) -> HalfInteger:
    q = HalfInteger.of(q)
    if q.is_pole():
        raise PoleError(f"Gamma has a pole at {q}")
    return q


@dataclass(frozen=True)
class RqSeries:
    """Coefficients ``b[k]`` of ``R_q(u)``, ``u = t^2``, truncated at ``u^J``."""

    q: HalfInteger
    xi: HalfInteger
    m: int
    b: tuple

    @property
    def order(self) -> int:
        return len(self.b) - 1


def rq_coefficients(q: HalfLike, J: int) -> RqSeries:
    """``R_q = prod_{i<m} ((xi+i)^2 - u)`` for ``m >= 0``, its reciprocal counterpart for ``m < 0``."""
    q = _half_point(q)
    if J < 0:
        raise ValueError("J must be non-negative")
    xi, m = q.decompose()
    x = xi.value
    poly = Series.one(J, Fraction(0))
    factors = range(m) if m >= 0 else range(m, 0)
    for i in factors:
        lin = [Fraction(x + i) ** 2, Fraction(-1)] + [Fraction(0)] * (J - 1)
        poly = poly * Series(lin[: J + 1])
    if m < 0:
        poly = poly.reciprocal()
    return RqSeries(q, xi, m, tuple(poly))


def _sin_over_x(J: int) -> Series:
    # sin(x)/x in u = x^2
    return Series(Fraction((-1) ** j, factorial(2 * j + 1)) for j in range(J + 1))


def _cos(J: int) -> Series:
    return Series(Fraction((-1) ** j, factorial(2 * j)) for j in range(J + 1))


def xi_product_coeffs(xi: HalfLike, J: int, method: str = "closed") -> list[tuple[Fraction, int]]:
    """``(a_j, pi exponent)`` pairs with ``Gamma(xi+t)Gamma(xi-t) = sum a_j pi^(2(j+1-xi)) t^(2j)``.

    ``method="closed"`` uses Bernoulli (``xi = 1``) or Euler (``xi = 1/2``)
    numbers; ``method="reciprocal"`` inverts the sine or cosine series.
    """
    xi = HalfInteger.of(xi)
    if xi not in (HalfInteger(2), HalfInteger(1)):
        raise ValueError("xi must be 1 or 1/2")
    if J < 0:
        raise ValueError("J must be non-negative")
    if method not in ("closed", "reciprocal"):
        raise ValueError(f"unknown method {method!r}")
    if xi == HalfInteger(2):
        if method == "closed":
            # x/sin x = sum (-1)^(j+1) (2^(2j) - 2) B_2j x^2j / (2j)!
            a = [(-1) ** (j + 1) * (4**j - 2) * bernoulli(2 * j) / factorial(2 * j) for j in range(J + 1)]
        else:
            a = list(_sin_over_x(J).reciprocal())
        return [(Fraction(a[j]), 2 * j) for j in range(J + 1)]
    if method == "closed":
        a = [Fraction(abs(euler_number(2 * j)), factorial(2 * j)) for j in range(J + 1)]
    else:
        a = list(_cos(J).reciprocal())
    return [(Fraction(a[j]), 2 * j + 1) for j in range(J + 1)]


def c_via_pi(q: HalfLike, J: int) -> list[PiVector]:
    """Rows ``c_j = sum_k b_k a_{j-k} pi^(2(j-k+1-xi))`` for ``j <= J``."""
    rq = rq_coefficients(q, J)
    a = xi_product_coeffs(rq.xi, J)
    rows = []
    for j in range(J + 1):
        entries: dict[int, Fraction] = {}
        for k in range(j + 1):
            coeff, e = a[j - k]
            entries[e] = entries.get(e, 0) + rq.b[k] * coeff
        rows.append(PiVector(entries))
    return rows


@dataclass(frozen=True)
class CauchyRows:
    """Even coefficients of ``Gamma(q+t)Gamma(q-t)`` and the odd-coefficient parity check."""

    q: HalfInteger
    rows: tuple
    odd_all_zero: bool


def c_via_cauchy(q: HalfLike, J: int) -> CauchyRows:
    """Rows ``c_j = sum_{i<=2j} (-1)^i Gamma^(i)(q) Gamma^(2j-i)(q) / (i!(2j-i)!)``."""
    q = _half_point(q)
    ser = taylor(q, 2 * J).series
    prod = ser * ser.compose_scale(-1)
    even, odd_zero = prod.even_part()
    if not odd_zero:
        bad = prod.odd_nonzero()
        raise VerificationError(
            f"odd coefficients of Gamma({q}+t)Gamma({q}-t) do not vanish",
            {"q": str(q), "odd_nonzero_powers": bad, "values": {str(n): prod[n].to_json() for n in bad}},
        )
    return CauchyRows(q, tuple(even), odd_zero)


@dataclass
class CertificateReport:
    q: HalfInteger
    xi: HalfInteger
    J: int
    rows: list[PiVector]
    leading_entries: list[tuple[Fraction, Fraction]]
    all_leading_nonzero: bool
    triangular: bool
    rows_equal: bool
    odd_all_zero: bool
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.rows_equal and self.triangular and self.all_leading_nonzero and self.odd_all_zero

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "theorem1_certificate",
            "q": str(self.q),
            "xi": str(self.xi),
            "j_range": [0, self.J],
            "passed": self.passed,
            "rows_equal": self.rows_equal,
            "odd_all_zero": self.odd_all_zero,
            "triangular": self.triangular,
            "all_leading_nonzero": self.all_leading_nonzero,
            "rows": [
                {
                    "j": j,
                    "eq5": row.to_json(),
                    "eq6_matches_eq5": not any(f["j"] == j for f in self.failures),
                    "leading": {"pi_exp": _frac(e), "coeff": _frac(c)},
                }
                for j, (row, (e, c)) in enumerate(zip(self.rows, self.leading_entries))
            ],
            "failures": self.failures,
        }


def verify_theorem1(q: HalfLike, J: int) -> CertificateReport:
    """Check both computations of ``c_j`` agree exactly and form a triangular certificate."""
    q = _half_point(q)
    rq = rq_coefficients(q, J)
    a = xi_product_coeffs(rq.xi, J)
    pi_rows = c_via_pi(q, J)
    failures: list[dict] = []
    try:
        cauchy = c_via_cauchy(q, J)
        odd_zero = True
        sym_rows = list(cauchy.rows)
    except VerificationError as exc:
        failures.append({"j": None, "reason": "odd_coefficients", **exc.details})
        odd_zero = False
        sym_rows = []

    for j, row in enumerate(sym_rows):
        try:
            vec = as_pi_vector(row)
        except NotPureInPi as exc:
            failures.append(
                {
                    "j": j,
                    "reason": "no_cancellation",
                    "offending": [m.render() for m in exc.offending],
                    "eq6": row.to_json(),
                    "eq5": pi_rows[j].to_json(),
                }
            )
            continue
        if vec != pi_rows[j]:
            failures.append({"j": j, "reason": "mismatch", "eq6": vec.to_json(), "eq5": pi_rows[j].to_json()})

    triangular = True
    leading = []
    for j, row in enumerate(pi_rows):
        expected_exp = 2 * (j + 1 - rq.xi.value)
        expected_coeff = rq.b[0] * a[j][0]
        if not row:
            leading.append((Fraction(expected_exp), Fraction(0)))
            triangular = False
            continue
        e, c = row.leading()
        leading.append((e, c))
        if e != expected_exp or c != expected_coeff:
            triangular = False
            failures.append({"j": j, "reason": "not_triangular", "leading_exp": _frac(e), "expected_exp": _frac(Fraction(expected_exp))})

    return CertificateReport(
        q=q,
        xi=rq.xi,
        J=J,
        rows=pi_rows,
        leading_entries=leading,
        all_leading_nonzero=all(c != 0 for _, c in leading),
        triangular=triangular,
        rows_equal=odd_zero and not any(f["reason"] in ("no_cancellation", "mismatch") for f in failures),
        odd_all_zero=odd_zero,
        failures=failures,
    )


# -- numeric side ------------------------------------------------------------

def _generic_point(q: Union[Fraction, int, str]) -> Fraction:
    q = parse_fraction(q) if isinstance(q, str) else Fraction(q)
    if (2 * q).denominator == 1:
        raise ValueError(f"q = {q} lies in (1/2)Z; the reflection check needs q outside (1/2)Z")
    return q


def _reflection_raw(q: Fraction, J: int) -> list:
    pi = +mpmath.mp.pi
    x = pi * q.numerator / q.denominator
    s, c = mpmath.sin(x), mpmath.cos(x)
    # sin(pi(q+t)) = sin(pi q) cos(pi t) + cos(pi q) sin(pi t)
    coeffs = []
    p = mpmath.mpf(1)
    for n in range(J + 1):
        base = s if n % 2 == 0 else c
        sign = -1 if (n // 2) % 2 else 1
        coeffs.append(sign * base * p / factorial(n))
        p *= pi
    return list(Series(coeffs).reciprocal().scale(pi))


def reflection_coeffs_numeric(q: Union[Fraction, int, str], J: int, prec: int) -> list:
    """Taylor coefficients ``d_j pi^(j+1)`` of ``pi / sin(pi (q + t))`` for ``j <= J``."""
    q = _generic_point(q)
    return numeric._guarded(_reflection_raw, prec, q, J)


@dataclass
class Theorem2Report:
    q: Fraction
    J: int
    prec: int
    tolerance_bits: int
    rows: list[dict]

    @property
    def all_agree(self) -> bool:
        return all(r["agree"] for r in self.rows)

    @property
    def nonzero_count(self) -> int:
        return sum(r["d_nonzero"] for r in self.rows)

    passed = all_agree

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "kind": "theorem2_reflection",
            "q": _frac(self.q),
            "J": self.J,
            "prec": self.prec,
            "tolerance_bits": self.tolerance_bits,
            "passed": self.all_agree,
            "nonzero_d_count": self.nonzero_count,
            "rows": self.rows,
            "note": "non-vanishing of d_j is sampled for j <= J only; infinitude is not computed",
        }


def verify_theorem2(q: Union[Fraction, int, str], J: int, prec: int = 256) -> Theorem2Report:
    """Compare ``pi / sin(pi(q+t))`` with ``Gamma(q+t) Gamma(1-q-t)`` coefficient by coefficient.

    Rows agree when their relative difference is at most ``2^-(prec - GUARD)``;
    ``d_j`` counts as non-zero when ``|d_j| > 2^-(prec/2)``.
    """
    q = _generic_point(q)
    if J < 0:
        raise ValueError("J must be non-negative")
    lhs = reflection_coeffs_numeric(q, J, prec)
    left = numeric.gamma_taylor_numeric(q, J, prec).series()
    right = numeric.gamma_taylor_numeric(1 - q, J, prec).series()
    pi = numeric.const_pi(prec + numeric.GUARD)
    tol_bits = prec - numeric.GUARD
    rows = []
    with numeric.working_precision(prec + numeric.EXTRA):
        rhs = list(left * right.compose_scale(-1))
        tol = mpmath.mpf(2) ** (-tol_bits)
        small = mpmath.mpf(2) ** (-(prec // 2))
        for j in range(J + 1):
            l, r = lhs[j], rhs[j]
            scale = max(abs(l), abs(r))
            rel = abs(l - r) / scale if scale else mpmath.mpf(0)
            d = l / pi ** (j + 1)
            rows.append(
                {
                    "j": j,
                    "eq": "eq7",
                    "lhs": numeric.to_decimal(l, 40),
                    "rhs": numeric.to_decimal(r, 40),
                    "rel_err": numeric.to_decimal(rel, 6),
                    "rel_err_log2": None if rel == 0 else round(float(mpmath.log(rel, 2)), 2),
                    "agree": bool(rel <= tol),
                    "d": numeric.to_decimal(d, 30),
                    "d_nonzero": bool(abs(d) > small),
                }
            )
    return Theorem2Report(q, J, prec, tol_bits, rows)
