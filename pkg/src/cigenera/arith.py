"""Exact rational scalars and generalized binomial coefficients."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = ["Rational", "as_rational", "binomial_general", "binomial_reflect_check", "format_rational"]

Rational = Fraction
RationalLike = Union[int, Fraction]


def as_rational(value: RationalLike | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@lru_cache(maxsize=None)
def _factorial(k: int) -> int:
    # lru_cache is thread-safe for reads/inserts; worst case a value is computed twice.
    return math.factorial(k)


def binomial_general(a: RationalLike, k: int) -> Fraction:
    """Return ``a (a-1) ... (a-k+1) / k!`` for rational ``a``.

    By convention the value is 0 for ``k < 0`` and 1 for ``k == 0``.
    """
    if k < 0:
        return Fraction(0)
    if k == 0:
        return Fraction(1)
    a = as_rational(a)
    if a.denominator == 1:
        top = a.numerator
        if top >= 0:
            return Fraction(math.comb(top, k))
        # C(-m, k) = (-1)^k C(m+k-1, k)
        value = math.comb(k - 1 - top, k)
        return Fraction(-value if k % 2 else value)
    p, q = a.numerator, a.denominator
    num = 1
    for i in range(k):
        num *= p - i * q
    return Fraction(num, q**k * _factorial(k))


def binomial_reflect_check(a: RationalLike, k: int) -> bool:
    """Self-test of the reflection identity ``(-1)^k C(a, k) == C(k-1-a, k)``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    a = as_rational(a)
    lhs = (-1) ** k * _falling_product(a, k)
    rhs = _falling_product(k - 1 - a, k)
    return lhs == rhs


def _falling_product(a: Fraction, k: int) -> Fraction:
    # Deliberately the plain product, independent of the integer fast path above.
    out = Fraction(1)
    for i in range(k):
        out *= a - i
    return out / _factorial(k)


def format_rational(value: Fraction) -> str:
    """Render as a bare integer when integral, otherwise ``p/q``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"
