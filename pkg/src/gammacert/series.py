"""Truncated power series over a generic coefficient ring.

Coefficients may be anything supporting ``+ - *``, mixing with Python ints,
and division by non-zero integers: :class:`fractions.Fraction`,
:class:`gammacert.constants.ConstExpr` and ``mpmath.mpf`` are all used.
A coefficient type can provide a classmethod ``dot(xs, ys)`` returning
``sum(x*y)``; :meth:`Series.__mul__` uses it when present.
"""
from __future__ import annotations

from typing import Any, Callable, Iterable, Sequence

__all__ = ["Series", "OrderMismatch"]


class OrderMismatch(ValueError):
    """Binary operation on series truncated at different orders."""


def _dot(xs: Sequence[Any], ys: Sequence[Any]) -> Any:
    dot = getattr(type(xs[0]), "dot", None)
    if dot is not None:
        return dot(xs, ys)
    acc = xs[0] * ys[0]
    for x, y in zip(xs[1:], ys[1:]):
        acc = acc + x * y
    return acc


class Series:
    """Power series ``sum_{n<=N} coeffs[n] t^n`` modulo ``t^(N+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any]):
        self.coeffs = tuple(coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, order: int, like: Any = 0) -> "Series":
        zero = like * 0
        return cls([zero + 1] + [zero] * order)

    @classmethod
    def zero(cls, order: int, like: Any = 0) -> "Series":
        return cls([like * 0] * (order + 1))

    @classmethod
    def variable(cls, order: int, like: Any = 0) -> "Series":
        """The series ``t`` itself."""
        zero = like * 0
        return cls([zero] + [zero + 1] + [zero] * (order - 1)) if order else cls([zero])

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n]

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self, other))

    __hash__ = None  # type: ignore[assignment]

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected a Series, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"truncation orders differ: {self.order} vs {other.order}")

    def map(self, f: Callable[[Any], Any]) -> "Series":
        return Series(f(c) for c in self.coeffs)

    def __add__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(a + b for a, b in zip(self, other))

    def __sub__(self, other: "Series") -> "Series":
        self._check(other)
        return Series(a - b for a, b in zip(self, other))

    def __neg__(self) -> "Series":
        return Series(-a for a in self)

    def scale(self, s: Any) -> "Series":
        return Series(a * s for a in self)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return self.scale(other)
        self._check(other)
        a, b = self.coeffs, other.coeffs
        return Series(_dot(a[: n + 1], b[n::-1]) for n in range(len(a)))

    def __rmul__(self, other):
        return self.scale(other)

    def reciprocal(self) -> "Series":
        """``1/self`` by the triangular recurrence; needs an invertible constant term."""
        a = self.coeffs
        try:
            inv0 = 1 / a[0]
        except ArithmeticError:
            raise ValueError("constant term is not invertible") from None
        out = [inv0]
        for n in range(1, len(a)):
            s = _dot(a[1 : n + 1], out[::-1])
            out.append(-s * inv0)
        return Series(out)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.reciprocal()
        return Series(a / other for a in self)

    def exp(self) -> "Series":
        """Formal exponential; the constant term must be exactly zero.

        Uses ``n e_n = sum_{k=1}^n k a_k e_{n-k}``, from ``E' = A' E``.
        """
        a = self.coeffs
        if a[0] != 0:
            raise ValueError("exp needs a series with zero constant term")
        e = [a[0] * 0 + 1]
        for n in range(1, len(a)):
            ka = [k * a[k] for k in range(1, n + 1)]
            e.append(_dot(ka, e[n - 1 :: -1]) / n)
        return Series(e)

    def log(self) -> "Series":
        """Formal logarithm; the constant term must be exactly one."""
        a = self.coeffs
        if a[0] != 1:
            raise ValueError("log needs a series with constant term 1")
        out = [a[0] * 0]
        # n l_n = n a_n - sum_{k=1}^{n-1} k l_k a_{n-k}
        for n in range(1, len(a)):
            acc = n * a[n]
            if n > 1:
                kl = [k * out[k] for k in range(1, n)]
                acc = acc - _dot(kl, a[n - 1 : 0 : -1])
            out.append(acc / n)
        return Series(out)

    def compose_scale(self, factor: Any) -> "Series":
        """Substitute ``t -> factor * t``."""
        out = []
        p = factor * 0 + 1
        for c in self.coeffs:
            out.append(c * p)
            p = p * factor
        return Series(out)

    def even_part(self) -> tuple[list[Any], bool]:
        """Coefficients of ``t^0, t^2, ...`` and whether every odd coefficient is exactly zero."""
        odd_zero = all(c == 0 for c in self.coeffs[1::2])
        return list(self.coeffs[0::2]), odd_zero

    def odd_nonzero(self) -> list[int]:
        return [n for n in range(1, len(self.coeffs), 2) if self.coeffs[n] != 0]

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise OrderMismatch(f"cannot raise truncation order {self.order} to {order}")
        return Series(self.coeffs[: order + 1])

    @classmethod
    def from_even(cls, coeffs: Sequence[Any]) -> "Series":
        """Spread coefficients of ``u = t^2`` into a series in ``t`` of order ``2*(len-1)``."""
        zero = coeffs[0] * 0
        out = []
        for i, c in enumerate(coeffs):
            if i:
                out.append(zero)
            out.append(c)
        return cls(out)
