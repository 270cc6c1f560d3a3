"""Truncated formal power series in one variable over exact rationals."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import RationalLike, as_rational, binomial_general

__all__ = [
    "OrderMismatch",
    "TruncatedSeries",
    "add",
    "mul",
    "inverse",
    "exp_linear",
    "binomial_power",
    "dilate",
    "pow_int",
    "coefficient",
]


class OrderMismatch(ValueError):
    """Raised when combining series truncated at different orders."""


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{m=0}^{order} coefficients[m] x^m``; higher terms are unknown, not zero."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.coefficients:
            raise ValueError("a series needs at least a constant term")

    @classmethod
    def from_coefficients(cls, coeffs: Iterable[RationalLike], order: int) -> "TruncatedSeries":
        """Pad with zeros (or cut) to exactly ``order + 1`` terms."""
        if order < 0:
            raise ValueError("order must be >= 0")
        values = [as_rational(c) for c in coeffs][: order + 1]
        values.extend([Fraction(0)] * (order + 1 - len(values)))
        return cls(tuple(values))

    @classmethod
    def constant(cls, value: RationalLike, order: int) -> "TruncatedSeries":
        return cls.from_coefficients([value], order)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, m: int) -> Fraction:
        return coefficient(self, m)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other.scale(-1))

    def __neg__(self) -> "TruncatedSeries":
        return self.scale(-1)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __pow__(self, e: int) -> "TruncatedSeries":
        return pow_int(self, e)

    def scale(self, c: RationalLike) -> "TruncatedSeries":
        c = as_rational(c)
        return TruncatedSeries(tuple(c * a for a in self.coefficients))

    def shift_down(self) -> "TruncatedSeries":
        """Divide by x; requires zero constant term. The order drops by one."""
        if self.coefficients[0] != 0:
            raise ValueError("cannot divide by x: constant term is nonzero")
        if self.order == 0:
            raise ValueError("cannot divide an order-0 series by x")
        return TruncatedSeries(self.coefficients[1:])

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coefficients[: order + 1])

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coefficients)
        return f"TruncatedSeries([{terms}], order={self.order})"


def _check_orders(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.order != t.order:
        raise OrderMismatch(f"series orders differ: {s.order} != {t.order}")


def add(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check_orders(s, t)
    return TruncatedSeries(tuple(a + b for a, b in zip(s.coefficients, t.coefficients)))


def _scaled_integers(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    # Common-denominator form: coeffs[i] == ints[i] / denom.
    denom = math.lcm(*(c.denominator for c in coeffs))
    return [c.numerator * (denom // c.denominator) for c in coeffs], denom


def mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order.

    Convolves integer numerators over a common denominator, so each output
    coefficient is reduced once rather than once per term.
    """
    _check_orders(s, t)
    a, da = _scaled_integers(s.coefficients)
    b, db = _scaled_integers(t.coefficients)
    order = s.order
    out = [0] * (order + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(order - i + 1):
            out[i + j] += ai * b[j]
    denom = da * db
    return TruncatedSeries(tuple(Fraction(c, denom) for c in out))


def inverse(s: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse.

    With ``s = c / D`` for integers ``c_i`` and ``g = c_0``, the reciprocal of
    ``c`` is ``B_m / g^{m+1}`` where ``B_0 = 1`` and
    ``B_m = -sum_{i=1}^m c_i B_{m-i} g^{i-1}``; everything stays integral.
    """
    if s.coefficients[0] == 0:
        raise ZeroDivisionError("series with zero constant term is not invertible")
    c, denom = _scaled_integers(s.coefficients)
    g = c[0]
    g_powers = [1]
    for _ in range(s.order + 1):
        g_powers.append(g_powers[-1] * g)
    big = [1]
    for m in range(1, s.order + 1):
        big.append(-sum(c[i] * big[m - i] * g_powers[i - 1] for i in range(1, m + 1) if c[i]))
    return TruncatedSeries(tuple(Fraction(denom * big[m], g_powers[m + 1]) for m in range(s.order + 1)))


def exp_linear(a: RationalLike, order: int) -> TruncatedSeries:
    """``exp(a x)`` to the given order."""
    if order < 0:
        raise ValueError("order must be >= 0")
    a = as_rational(a)
    coeffs = [Fraction(1)]
    for m in range(1, order + 1):
        coeffs.append(coeffs[-1] * a / m)
    return TruncatedSeries(tuple(coeffs))


def binomial_power(a: RationalLike, order: int) -> TruncatedSeries:
    """``(1 + x)^a`` for rational ``a``."""
    if order < 0:
        raise ValueError("order must be >= 0")
    return TruncatedSeries(tuple(binomial_general(a, m) for m in range(order + 1)))


def dilate(s: TruncatedSeries, d: RationalLike) -> TruncatedSeries:
    """Substitute ``x -> d x``."""
    d = as_rational(d)
    p, q = d.numerator, d.denominator
    out = []
    for m, c in enumerate(s.coefficients):
        out.append(Fraction(c.numerator * p**m, c.denominator * q**m) if c else c)
    return TruncatedSeries(tuple(out))


def pow_int(s: TruncatedSeries, e: int) -> TruncatedSeries:
    if e < 0:
        return pow_int(inverse(s), -e)
    result = TruncatedSeries.constant(1, s.order)
    base = s
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def coefficient(s: TruncatedSeries, m: int) -> Fraction:
    if not 0 <= m <= s.order:
        raise IndexError(f"coefficient index {m} outside 0..{s.order}")
    return s.coefficients[m]


def polynomial(coeffs: Sequence[RationalLike], order: int) -> TruncatedSeries:
    """Convenience constructor for a polynomial viewed as a series of the given order."""
    return TruncatedSeries.from_coefficients(coeffs, order)
