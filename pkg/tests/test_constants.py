from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from gammacert.constants import (
    GAMMA,
    LOG2,
    ONE,
    PI,
    SQRT_PI,
    ConstExpr,
    Monomial,
    NotPureInPi,
    PiVector,
    as_pi_vector,
    evaluate,
    from_zeta,
    pi_power,
)
from gammacert.gamma import taylor
from gammacert.numeric import hurwitz_zeta

F = Fraction


def close(x, y, bits):
    with mpmath.workprec(bits + 64):
        return abs(x - y) <= mpmath.mpf(2) ** (-bits) * max(abs(y), 1)


def test_from_zeta_examples():
    assert from_zeta(2) == pi_power(4, F(1, 6))
    assert from_zeta(3) == ConstExpr.monomial(Monomial(zeta_exps=((3, 1),)))
    assert from_zeta(4) == pi_power(8, F(1, 90))
    with mpmath.workprec(128):
        assert close(evaluate(from_zeta(4), 64), mpmath.mpf("1.0823232337111381915"), 60)
    with pytest.raises(ValueError):
        from_zeta(1)


@pytest.mark.parametrize("m", range(1, 11))
def test_even_zeta_matches_hurwitz(m):
    with mpmath.workprec(192):
        assert close(evaluate(from_zeta(2 * m), 192), hurwitz_zeta(2 * m, 1, 192), 185)


def test_ring_examples():
    assert SQRT_PI * SQRT_PI == PI
    assert (GAMMA + PI) * (GAMMA - PI) == GAMMA**2 - PI**2
    assert (-GAMMA) * (-GAMMA) + from_zeta(2) == GAMMA**2 + pi_power(4, F(1, 6))
    assert (GAMMA - GAMMA).is_zero()
    assert GAMMA * 0 == 0
    assert ONE == 1
    assert (3 * GAMMA) / 3 == GAMMA


def test_division_only_by_rationals():
    assert 1 / ConstExpr.const(F(2, 3)) == F(3, 2)
    with pytest.raises(ArithmeticError):
        1 / GAMMA
    with pytest.raises(ZeroDivisionError):
        GAMMA / 0


def test_rendering():
    expr = -(GAMMA**3) - 3 * from_zeta(2) * GAMMA - 2 * from_zeta(3)
    assert expr.render() == "-1*g^3 - 1/2*p^2*g - 2*z3"
    assert (GAMMA**2 + from_zeta(2)).render() == "g^2 + 1/6*p^2"
    assert SQRT_PI.render() == "p^{1/2}"
    assert (pi_power(3) * 2 - LOG2).render() == "2*p^{3/2} - l"
    assert ConstExpr().render() == "0"
    assert ConstExpr.const(F(-5, 7)).render() == "-5/7"


def test_json_roundtrip_and_order():
    expr = GAMMA**2 * from_zeta(5) + from_zeta(3) ** 2 * F(-1, 3) + SQRT_PI * LOG2 + 7
    data = expr.to_json()
    assert ConstExpr.from_json(data) == expr
    assert data[-1] == {"coeff": "7", "gamma": 0, "log2": 0, "pi_half": 0, "zeta": {}}
    assert expr.to_json() == ConstExpr.from_json(data).to_json()


def test_as_pi_vector():
    with pytest.raises(NotPureInPi) as exc:
        as_pi_vector(GAMMA**2 + from_zeta(2))
    assert exc.value.offending == [Monomial(gamma_exp=2)]
    assert as_pi_vector(1 - from_zeta(2)) == PiVector({0: 1, 2: F(-1, 6)})
    # c_1 at q = 1 from the product formula: Gamma''(1) - Gamma'(1)^2 = zeta(2)
    t = taylor(1, 2)
    c1 = 2 * t.series[2] - t.series[1] ** 2
    assert as_pi_vector(c1) == PiVector({2: F(1, 6)})


def test_pi_vector_roundtrip_and_leading():
    v = PiVector({1: F(16, 9), 3: F(8, 9), F(1, 2): 5})
    assert as_pi_vector(v.to_const()) == v
    assert v.leading() == (3, F(8, 9))
    assert PiVector({2: 0}) == PiVector()
    with pytest.raises(ValueError):
        PiVector({F(1, 3): 1})


def test_evaluate_examples():
    with mpmath.workprec(192):
        assert close(evaluate(GAMMA, 128), mpmath.mpf("0.57721566490153286060651209008240243104"), 125)
        assert close(evaluate(PI**2, 64), mpmath.mpf("9.8696044010893586188"), 60)
    g3 = -(GAMMA**3) - 3 * from_zeta(2) * GAMMA - 2 * from_zeta(3)
    with mpmath.workprec(128):
        oracle = mpmath.diff(mpmath.gamma, 1, 3)
    assert close(evaluate(g3, 128), oracle, 100)
    assert abs(evaluate(g3, 64) + mpmath.mpf("5.44487")) < 1e-5


@pytest.mark.parametrize("n", range(13))
def test_gamma_derivatives_at_one_have_paper_shape(n):
    for mono in taylor(1, 12).derivative(n).monomials():
        assert mono.log2_exp == 0
        assert mono.pi_half_exp % 4 == 0  # only even powers of pi
        assert mono.weight == n


def test_exponent_overflow_is_detected():
    big = ConstExpr.monomial(Monomial(gamma_exp=2**14 + 1))
    with pytest.raises(OverflowError):
        big * big
    with pytest.raises(ValueError):
        Monomial(gamma_exp=2**15).pack()


generators = [ONE, GAMMA, LOG2, SQRT_PI, from_zeta(3), from_zeta(5)]


@st.composite
def const_exprs(draw):
    n = draw(st.integers(0, 4))
    out = ConstExpr()
    for _ in range(n):
        c = draw(st.fractions(min_value=-10, max_value=10, max_denominator=9))
        term = ONE
        for _ in range(draw(st.integers(0, 3))):
            term = term * draw(st.sampled_from(generators))
        out = out + term * c
    return out


@settings(max_examples=60, deadline=None)
@given(const_exprs(), const_exprs(), const_exprs())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * ONE == a
    assert ConstExpr.dot([a, b], [b, c]) == a * b + b * c
