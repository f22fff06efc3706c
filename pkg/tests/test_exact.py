import threading
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from gammacert.exact import (
    HalfInteger,
    bernoulli,
    bernoulli_table,
    binomial,
    euler_number,
    euler_table,
    factorial,
    load_tables,
    parse_fraction,
)


def test_bernoulli_small_values():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(3) == 0
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)


def test_bernoulli_recurrence_up_to_200():
    b = bernoulli_table(201)
    for n in range(1, 201):
        assert sum(binomial(n + 1, k) * b[k] for k in range(n + 1)) == 0, n


def test_odd_bernoulli_vanish():
    assert all(bernoulli(2 * k + 1) == 0 for k in range(1, 100))


@pytest.mark.parametrize("n", [2, 10, 30, 58, 100])
def test_bernoulli_matches_sympy(n):
    ref = sympy.bernoulli(n)
    assert bernoulli(n) == Fraction(int(ref.p), int(ref.q))


def test_euler_small_values():
    assert euler_number(0) == 1
    assert euler_number(1) == 0
    assert euler_number(2) == -1
    assert euler_number(4) == 5
    assert euler_number(6) == -61
    assert euler_number(10) == -50521


@pytest.mark.parametrize("n", [8, 20, 40, 80])
def test_euler_matches_sympy(n):
    assert euler_number(n) == int(sympy.euler(n))


def test_secant_times_cosine_is_one():
    # sum (-1)^k E_2k x^2k/(2k)! = sec x; times cos x must truncate to 1
    N = 40
    sec = [Fraction((-1) ** k * euler_number(2 * k), factorial(2 * k)) for k in range(N + 1)]
    cos = [Fraction((-1) ** k, factorial(2 * k)) for k in range(N + 1)]
    prod = [sum(sec[i] * cos[n - i] for i in range(n + 1)) for n in range(N + 1)]
    assert prod == [1] + [0] * N


def test_factorial_binomial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert binomial(4, 2) == 6
    with pytest.raises(ValueError):
        binomial(2, 3)
    with pytest.raises(ValueError):
        factorial(-1)
    with pytest.raises(ValueError):
        bernoulli(-1)


def test_memo_tables_are_consistent_across_threads():
    results = {}

    def work(i):
        results[i] = (bernoulli(2 * (50 + 7 * i)), euler_number(2 * (40 + 5 * i)))

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    for i, (b, e) in results.items():
        ref_b = sympy.bernoulli(2 * (50 + 7 * i))
        assert b == Fraction(int(ref_b.p), int(ref_b.q))
        assert e == int(sympy.euler(2 * (40 + 5 * i)))


def test_load_tables_rejects_corrupt_values():
    b = bernoulli_table(10)
    b[4] = Fraction(1, 31)
    with pytest.raises(ValueError):
        load_tables(b, euler_table(10))
    e = euler_table(10)
    e[4] = 6
    with pytest.raises(ValueError):
        load_tables(bernoulli_table(10), e)


rationals = st.fractions(max_denominator=10**6).filter(lambda x: abs(x.numerator) < 10**12)


@given(rationals, rationals, rationals)
def test_rational_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b).denominator > 0


class TestHalfInteger:
    def test_parse_and_decompose(self):
        assert HalfInteger.of("5/2").decompose() == (HalfInteger(1), 2)
        assert HalfInteger.of(1).decompose() == (HalfInteger(2), 0)
        assert HalfInteger.of(3).decompose() == (HalfInteger(2), 2)
        assert HalfInteger.of("-3/2").decompose() == (HalfInteger(1), -2)
        assert HalfInteger.of("-1/2").decompose() == (HalfInteger(1), -1)

    def test_poles(self):
        assert HalfInteger.of(0).is_pole()
        assert HalfInteger.of(-4).is_pole()
        assert not HalfInteger.of("-1/2").is_pole()

    def test_rejects_thirds(self):
        with pytest.raises(ValueError):
            HalfInteger.of(Fraction(1, 3))

    @given(st.integers(-1000, 1000), st.integers(-1000, 1000))
    def test_closed_under_addition(self, a, b):
        x, y = HalfInteger(a), HalfInteger(b)
        assert (x + y).value == x.value + y.value
        assert (-x).value == -x.value
        xi, m = x.decompose()
        assert xi.value + m == x.value


def test_parse_fraction():
    assert parse_fraction("1/2") == Fraction(1, 2)
    assert parse_fraction("-3/2") == Fraction(-3, 2)
    assert parse_fraction("7") == 7
    for bad in ("0.5", "1e3", "1/0", "a/b", ""):
        with pytest.raises(ValueError):
            parse_fraction(bad)
