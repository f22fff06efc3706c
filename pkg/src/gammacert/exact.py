"""Exact rational arithmetic and the classical integer sequences.

Rationals are :class:`fractions.Fraction`; they are always stored reduced
with a positive denominator, which is all the package needs.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "Rational",
    "HalfInteger",
    "PoleError",
    "bernoulli",
    "bernoulli_table",
    "euler_number",
    "euler_table",
    "factorial",
    "binomial",
    "load_tables",
    "parse_fraction",
]

Rational = Fraction


class PoleError(ValueError):
    """Raised when a Gamma-related quantity is requested at a non-positive integer."""


def parse_fraction(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` exactly; decimal notation is rejected."""
    s = text.strip()
    if any(c in s for c in ".eE"):
        raise ValueError(f"{text!r} is not an exact fraction; write e.g. '1/2' instead of '0.5'")
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        r = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"{text!r} is not a fraction of the form p/q") from None
    if r == 0:
        raise ValueError("zero denominator")
    return Fraction(p, r)


@dataclass(frozen=True, order=True)
class HalfInteger:
    """An element of (1/2)Z stored as twice its value."""

    twice: int

    @classmethod
    def of(cls, value: Union[int, Fraction, str, "HalfInteger"]) -> "HalfInteger":
        if isinstance(value, HalfInteger):
            return value
        if isinstance(value, str):
            value = parse_fraction(value)
        v = Fraction(value)
        if (2 * v).denominator != 1:
            raise ValueError(f"{v} is not in (1/2)Z")
        return cls(int(2 * v))

    @property
    def value(self) -> Fraction:
        return Fraction(self.twice, 2)

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def is_pole(self) -> bool:
        return self.twice <= 0 and self.is_integer()

    def decompose(self) -> tuple["HalfInteger", int]:
        """Return ``(xi, m)`` with ``xi`` in {1, 1/2} and ``self = xi + m``."""
        if self.is_integer():
            return HalfInteger(2), self.twice // 2 - 1
        return HalfInteger(1), (self.twice - 1) // 2

    def __add__(self, other):
        if isinstance(other, HalfInteger):
            return HalfInteger(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInteger(self.twice + 2 * other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return HalfInteger(-self.twice)

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        v = self.value
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    if not 0 <= k <= n:
        raise ValueError(f"binomial({n}, {k}) requires 0 <= k <= n")
    return math.comb(n, k)


# Memo tables only ever grow; readers take a snapshot reference, writers
# serialize on the lock and publish a new list.
_lock = threading.Lock()
_bernoulli_even: list[Fraction] = [Fraction(1)]  # B_0, B_2, B_4, ...
_secant: list[int] = [1]  # |E_0|, |E_2|, |E_4|, ...


def _tangent_numbers(n: int) -> list[int]:
    # T_1..T_n by the in-place recurrence of Brent and Harvey; T[0] unused.
    t = [0] * (n + 1)
    if n >= 1:
        t[1] = 1
    for k in range(2, n + 1):
        t[k] = (k - 1) * t[k - 1]
    for k in range(2, n + 1):
        for j in range(k, n + 1):
            t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j]
    return t


def _extend_bernoulli(m: int) -> None:
    global _bernoulli_even
    with _lock:
        if len(_bernoulli_even) > m:
            return
        n = max(m, 2 * len(_bernoulli_even))
        t = _tangent_numbers(n)
        table = [Fraction(1)]
        for k in range(1, n + 1):
            four_k = 4**k
            sign = 1 if k % 2 else -1
            table.append(Fraction(sign * 2 * k * t[k], four_k * (four_k - 1)))
        _bernoulli_even = table


def _extend_secant(m: int) -> None:
    global _secant
    with _lock:
        if len(_secant) > m:
            return
        n = max(m, 2 * len(_secant))
        # Seidel boustrophedon: the last entry of row k is the zigzag number A_k,
        # and A_{2k} = |E_{2k}|.
        row = [1]
        table = [1]
        for k in range(1, 2 * n + 1):
            new = [0]
            for x in reversed(row):
                new.append(new[-1] + x)
            row = new
            if k % 2 == 0:
                table.append(row[-1])
        _secant = table


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    if n < 0:
        raise ValueError("bernoulli index must be non-negative")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2:
        return Fraction(0)
    table = _bernoulli_even
    if len(table) <= n // 2:
        _extend_bernoulli(n // 2)
        table = _bernoulli_even
    return table[n // 2]


def euler_number(n: int) -> int:
    """Signed Euler number E_n (E_2 = -1, E_4 = 5); zero for odd n."""
    if n < 0:
        raise ValueError("euler index must be non-negative")
    if n % 2:
        return 0
    table = _secant
    if len(table) <= n // 2:
        _extend_secant(n // 2)
        table = _secant
    a = table[n // 2]
    return -a if (n // 2) % 2 else a


def bernoulli_table(n: int) -> list[Fraction]:
    """B_0..B_n."""
    return [bernoulli(k) for k in range(n + 1)]


def euler_table(n: int) -> list[int]:
    """E_0..E_n."""
    return [euler_number(k) for k in range(n + 1)]


def load_tables(bernoulli_values: list[Fraction], euler_values: list[int]) -> None:
    """Seed the memo tables from full lists B_0..B_n and E_0..E_n (e.g. from a cache file).

    Values are checked against the defining recurrences before being accepted.
    """
    global _bernoulli_even, _secant
    b_even = bernoulli_values[0::2]
    for n in range(1, len(bernoulli_values) - 1):
        if sum(binomial(n + 1, k) * bernoulli_values[k] for k in range(n + 1)) != 0:
            raise ValueError(f"Bernoulli table fails the recurrence at n={n}")
    if bernoulli_values and bernoulli_values[0] != 1:
        raise ValueError("Bernoulli table must start with B_0 = 1")
    e_even = euler_values[0::2]
    for k in range(1, len(e_even)):
        if sum(binomial(2 * k, 2 * i) * e_even[i] for i in range(k + 1)) != 0:
            raise ValueError(f"Euler table fails the recurrence at 2k={2 * k}")
    if euler_values and euler_values[0] != 1:
        raise ValueError("Euler table must start with E_0 = 1")
    with _lock:
        if len(b_even) > len(_bernoulli_even):
            _bernoulli_even = [Fraction(b) for b in b_even]
        if len(e_even) > len(_secant):
            _secant = [abs(int(e)) for e in e_even]
