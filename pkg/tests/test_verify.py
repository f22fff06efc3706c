from fractions import Fraction

import mpmath
import pytest

import gammacert.verify as verify_mod
from gammacert.constants import PiVector, SQRT_PI, pi_power
from gammacert.exact import HalfInteger, PoleError, euler_number, factorial
from gammacert.series import Series
from gammacert.verify import (
    VerificationError,
    c_via_cauchy,
    c_via_pi,
    reflection_coeffs_numeric,
    rq_coefficients,
    verify_theorem1,
    verify_theorem2,
    xi_product_coeffs,
)

F = Fraction


def test_rq_examples():
    assert rq_coefficients(1, 3).b == (1, 0, 0, 0)
    assert rq_coefficients("5/2", 4).b == (F(9, 16), F(-5, 2), 1, 0, 0)
    assert rq_coefficients("-1/2", 5).b == tuple(F(4 ** (k + 1)) for k in range(6))
    rq = rq_coefficients("-3/2", 2)
    assert (rq.xi, rq.m) == (HalfInteger(1), -2)
    # 1/((1/4 - u)(9/4 - u)) = (16/9)(1 + 4u + ...)(1 + 4u/9 + ...) = 16/9 + 640/81 u + ...
    assert rq.b[:2] == (F(16, 9), F(640, 81))
    with pytest.raises(PoleError):
        rq_coefficients(-3, 2)


def test_rq_polynomial_degree():
    rq = rq_coefficients(5, 8)
    assert rq.m == 4
    assert rq.b[4] != 0 and all(b == 0 for b in rq.b[5:])
    # R_5(0) = (1*2*3*4)^2
    assert rq.b[0] == 576


def test_xi_product_examples():
    a1 = xi_product_coeffs(1, 3)
    assert a1[0] == (1, 0)
    assert a1[1] == (F(1, 6), 2)
    ah = xi_product_coeffs("1/2", 3)
    assert ah[2] == (F(5, 24), 5)
    assert ah[0] == (1, 1)


def test_xi_product_methods_agree():
    for xi in (1, "1/2"):
        assert xi_product_coeffs(xi, 25, "closed") == xi_product_coeffs(xi, 25, "reciprocal")
    with pytest.raises(ValueError):
        xi_product_coeffs("3/2", 2)


def test_xi_product_against_mpmath_series():
    with mpmath.workprec(160):
        ref = mpmath.taylor(lambda x: x / mpmath.sin(x) if x else mpmath.mpf(1), 0, 12)
        for j, (a, _) in enumerate(xi_product_coeffs(1, 6)):
            assert abs(ref[2 * j] - mpmath.mpf(a.numerator) / a.denominator) < mpmath.mpf(10) ** -30
        ref = mpmath.taylor(mpmath.sec, 0, 12)
        for j, (a, _) in enumerate(xi_product_coeffs("1/2", 6)):
            assert abs(ref[2 * j] - mpmath.mpf(a.numerator) / a.denominator) < mpmath.mpf(10) ** -30


def test_c_via_pi_examples():
    assert c_via_pi(1, 1) == [PiVector({0: 1}), PiVector({2: F(1, 6)})]
    assert c_via_pi("1/2", 0) == [PiVector({1: 1})]
    assert c_via_pi("5/2", 1)[1] == PiVector({1: F(-5, 2), 3: F(9, 32)})


def test_c_via_cauchy_examples():
    rows = c_via_cauchy(1, 2)
    assert rows.odd_all_zero
    assert rows.rows[0] == 1
    assert rows.rows[1] == pi_power(4, F(1, 6))
    assert c_via_cauchy("1/2", 0).rows[0] == SQRT_PI * SQRT_PI


def test_c_via_cauchy_rejects_broken_reflection(monkeypatch):
    # s(t) s(-t) is even for every s, so only a faulty t -> -t substitution can trip the check
    monkeypatch.setattr(Series, "compose_scale", lambda self, factor: self)
    with pytest.raises(VerificationError) as exc:
        c_via_cauchy(1, 2)
    assert exc.value.details["odd_nonzero_powers"] == [1, 3]
    rep = verify_theorem1(1, 2)
    assert not rep.passed and not rep.odd_all_zero
    assert rep.failures[0]["reason"] == "odd_coefficients"


@pytest.mark.parametrize("q,J", [("1", 4), ("5/2", 3), ("-3/2", 3)])
def test_verify_theorem1_examples(q, J):
    rep = verify_theorem1(q, J)
    assert rep.passed, rep.failures
    assert rep.triangular and rep.all_leading_nonzero and rep.rows_equal
    xi = HalfInteger.of(q).decompose()[0].value
    for j, (e, c) in enumerate(rep.leading_entries):
        assert e == 2 * (j + 1 - xi)
    if q == "5/2":
        for j, (e, c) in enumerate(rep.leading_entries):
            assert c == F(9, 16) * F(abs(euler_number(2 * j)), factorial(2 * j))
    if q == "1":
        assert rep.leading_entries[1] == (2, F(1, 6))


def test_verify_theorem1_reports_mismatch(monkeypatch):
    real = verify_mod.xi_product_coeffs

    def wrong(xi, J, method="closed"):
        out = real(xi, J, method)
        out[2] = (out[2][0] + 1, out[2][1])
        return out

    monkeypatch.setattr(verify_mod, "xi_product_coeffs", wrong)
    rep = verify_theorem1(2, 3)
    assert not rep.passed
    assert rep.failures[0]["j"] == 2 and rep.failures[0]["reason"] == "mismatch"
    assert rep.to_json()["passed"] is False


def test_report_json_shape():
    data = verify_theorem1("3/2", 2).to_json()
    assert data["kind"] == "theorem1_certificate"
    assert data["rows"][0] == {"j": 0, "eq5": {"1": "1/4"}, "eq6_matches_eq5": True, "leading": {"pi_exp": "1", "coeff": "1/4"}}


def test_reflection_examples():
    with mpmath.workprec(128):
        d = reflection_coeffs_numeric("1/4", 1, 96)
        assert abs(d[0] - mpmath.pi * mpmath.sqrt(2)) < mpmath.mpf(2) ** -90
        assert abs(d[1] + mpmath.sqrt(2) * mpmath.pi**2) < mpmath.mpf(2) ** -88
        d = reflection_coeffs_numeric("1/3", 0, 96)
        assert abs(d[0] - 2 * mpmath.pi / mpmath.sqrt(3)) < mpmath.mpf(2) ** -90


@pytest.mark.parametrize("q", ["2/7", "-5/3", "13/4"])
def test_reflection_against_mpmath_taylor(q):
    qq = Fraction(q)
    with mpmath.workprec(200):
        x0 = mpmath.mpf(qq.numerator) / qq.denominator
        ref = mpmath.taylor(lambda t: mpmath.pi / mpmath.sinpi(x0 + t), 0, 6)
        got = reflection_coeffs_numeric(q, 6, 160)
        for r, g in zip(ref, got):
            assert abs(r - g) <= abs(r) * mpmath.mpf(2) ** -120


def test_reflection_domain():
    with pytest.raises(ValueError):
        reflection_coeffs_numeric("1/2", 3, 64)
    with pytest.raises(ValueError):
        verify_theorem2(3, 3, 64)


def test_verify_theorem2_examples():
    rep = verify_theorem2("1/3", 0, 128)
    assert rep.all_agree
    assert rep.rows[0]["lhs"].startswith("3.6275987")
    assert rep.rows[0]["rhs"].startswith("3.6275987")
    rep = verify_theorem2("2/5", 8, 192)
    assert rep.all_agree
    assert rep.nonzero_count == 9
    data = rep.to_json()
    assert data["nonzero_d_count"] == 9 and all(r["eq"] == "eq7" for r in data["rows"])


def test_verify_theorem2_negative_q():
    rep = verify_theorem2("-7/3", 6, 128)
    assert rep.all_agree
