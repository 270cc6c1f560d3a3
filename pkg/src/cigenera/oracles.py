"""Independent routes to the same genera.

* Chern-root evaluation: ``deg(X) * [x^n] Q(x)^{n+r+1} prod_i Q(d_i x)^{-1}``.
* Generating functions in ``z`` whose ``z^{n+r}`` coefficient is the genus.
* The chi_y polynomial, recovered by evaluating its generating function at
  rational sample points and interpolating.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .arith import RationalLike, as_rational
from .ci import CompleteIntersection, total_degree
from .series import (
    TruncatedSeries,
    binomial_power,
    coefficient,
    dilate,
    exp_linear,
    inverse,
    mul,
    pow_int,
)

__all__ = [
    "GenusLabel",
    "CharacteristicSeries",
    "ChiYPolynomial",
    "build_q_series",
    "genus_chern_root",
    "todd_genfun",
    "chi_twist_genfun",
    "ak_genfun",
    "chi_y_value",
    "chi_y_polynomial",
    "interpolate",
    "euler_characteristic",
    "signature",
]


@dataclass(frozen=True)
class GenusLabel:
    kind: str  # "todd" | "ak" | "ahat" | "levelN"
    k: int = 0
    N: int = 1

    def __post_init__(self) -> None:
        if self.kind not in ("todd", "ak", "ahat", "levelN"):
            raise ValueError(f"unknown genus kind {self.kind!r}")
        if self.kind == "ak" and self.k < 1:
            raise ValueError("A_k needs k >= 1")
        if self.kind == "levelN" and not (self.N >= 1 and 0 <= self.k <= self.N):
            raise ValueError(f"need 0 <= k <= N and N >= 1, got k={self.k}, N={self.N}")

    @classmethod
    def todd(cls) -> "GenusLabel":
        return cls("todd")

    @classmethod
    def ahat(cls) -> "GenusLabel":
        return cls("ahat")

    @classmethod
    def ak(cls, k: int) -> "GenusLabel":
        return cls("ak", k=k)

    @classmethod
    def level(cls, k: int, N: int) -> "GenusLabel":
        return cls("levelN", k=k, N=N)

    def __str__(self) -> str:
        if self.kind == "ak":
            return f"A_{self.k}"
        if self.kind == "levelN":
            return f"chi(K^{self.k}/{self.N})"
        return self.kind


@dataclass(frozen=True)
class CharacteristicSeries:
    label: GenusLabel
    q_series: TruncatedSeries

    def __post_init__(self) -> None:
        if self.q_series.coefficients[0] != 1:
            raise ValueError("characteristic series must have constant term 1")


def _todd_q(order: int) -> TruncatedSeries:
    # x / (1 - e^{-x}) as the inverse of (1 - e^{-x}) / x
    one_minus_exp = TruncatedSeries.constant(1, order + 1) - exp_linear(-1, order + 1)
    return inverse(one_minus_exp.shift_down())


def _ahat_q(order: int) -> TruncatedSeries:
    # (x/2) / sinh(x/2) as the inverse of sinh(x/2) / (x/2)
    sinh_half = (exp_linear(Fraction(1, 2), order + 1) - exp_linear(Fraction(-1, 2), order + 1)).scale(
        Fraction(1, 2)
    )
    return inverse(sinh_half.shift_down().scale(2))


@lru_cache(maxsize=256)
def build_q_series(label: GenusLabel, order: int) -> CharacteristicSeries:
    if order < 0:
        raise ValueError("order must be >= 0")
    if label.kind == "todd":
        q = _todd_q(order)
    elif label.kind == "ahat":
        q = _ahat_q(order)
    elif label.kind == "ak":
        # k x e^x / (e^{kx} - 1) = [k x / (1 - e^{-kx})] * e^{-(k-1) x}
        q = mul(dilate(_todd_q(order), label.k), exp_linear(-(label.k - 1), order))
    else:
        q = mul(exp_linear(Fraction(-label.k, label.N), order), _todd_q(order))
    return CharacteristicSeries(label, q)


@lru_cache(maxsize=4096)
def _q_power(label: GenusLabel, order: int, e: int) -> TruncatedSeries:
    return pow_int(build_q_series(label, order).q_series, e)


@lru_cache(maxsize=4096)
def _inverse_dilated_q(label: GenusLabel, order: int, d: int) -> TruncatedSeries:
    return inverse(dilate(build_q_series(label, order).q_series, d))


def genus_chern_root(ci: CompleteIntersection, cs: CharacteristicSeries) -> Fraction:
    """Evaluate prod Q(x_i)[X] from the total Chern class (1+x)^{n+r+1} prod (1+d_i x)^{-1}."""
    n = ci.n
    if cs.q_series.order < n:
        raise ValueError(f"characteristic series has order {cs.q_series.order}, need >= {n}")
    if cs == build_q_series(cs.label, cs.q_series.order):
        product = _q_power(cs.label, n, n + ci.r + 1)
        factors = [_inverse_dilated_q(cs.label, n, d) for d in ci.degrees]
    else:
        q = cs.q_series.truncate(n)
        product = pow_int(q, n + ci.r + 1)
        factors = [inverse(dilate(q, d)) for d in ci.degrees]
    for factor in factors:
        product = mul(product, factor)
    return coefficient(product, n) * total_degree(ci)


def _one_minus_z_pow(e: int, order: int) -> TruncatedSeries:
    return dilate(binomial_power(e, order), -1)


def _hypersurface_product(degrees: Sequence[int], order: int) -> TruncatedSeries:
    # prod_i (1 - (1-z)^{d_i})
    product = TruncatedSeries.constant(1, order)
    one = TruncatedSeries.constant(1, order)
    for d in degrees:
        product = mul(product, one - _one_minus_z_pow(d, order))
    return product


def todd_genfun(ci: CompleteIntersection) -> Fraction:
    """Coefficient of z^{n+r} in (1-z)^{-1} prod (1 - (1-z)^{d_i})."""
    order = ci.n + ci.r
    minus_z = TruncatedSeries.from_coefficients([1, -1], order)
    series = mul(inverse(minus_z), _hypersurface_product(ci.degrees, order))
    return coefficient(series, order)


def chi_twist_genfun(ci: CompleteIntersection, m: int) -> Fraction:
    """chi(X, gamma^m): coefficient of z^{n+r} in (1-z)^{-(m+1)} prod (1 - (1-z)^{d_i})."""
    order = ci.n + ci.r
    minus_z = TruncatedSeries.from_coefficients([1, -1], order)
    series = mul(pow_int(minus_z, -(m + 1)), _hypersurface_product(ci.degrees, order))
    return coefficient(series, order)


def ak_genfun(ci: CompleteIntersection, k: int) -> Fraction:
    """A_k as the z^{n+r} coefficient of k^n (1+z)^{c1/k - 1} prod ((1+z)^{d_i} - 1)."""
    if k < 1:
        raise ValueError(f"A_k needs k >= 1, got {k}")
    order = ci.n + ci.r
    series = binomial_power(Fraction(ci.c1, k) - 1, order)
    one = TruncatedSeries.constant(1, order)
    for d in ci.degrees:
        series = mul(series, binomial_power(d, order) - one)
    return k**ci.n * coefficient(series, order)


def chi_y_value(ci: CompleteIntersection, twist: int, y: RationalLike) -> Fraction:
    """chi_y(X, gamma^twist) at a single rational y != -1, straight from the generating function.

    Each hypersurface factor has numerator z * (series) and a unit denominator, so the
    z^r from the numerators is stripped and the coefficient of z^n is read off.
    """
    y = as_rational(y)
    if y == -1:
        raise ValueError("the generating function is singular at y = -1; evaluate the polynomial instead")
    n = ci.n
    series = mul(
        dilate(binomial_power(twist - 1, n), y),  # (1 + z y)^{twist-1}
        _one_minus_z_pow(-(twist + 1), n),  # (1 - z)^{-(twist+1)}
    )
    for d in ci.degrees:
        plus = dilate(binomial_power(d, n + 1), y)
        minus = _one_minus_z_pow(d, n + 1)
        numerator = (plus - minus).shift_down()
        denominator = plus.truncate(n) + minus.truncate(n).scale(y)
        series = mul(series, mul(numerator, inverse(denominator)))
    return coefficient(series, n)


def interpolate(points: Sequence[tuple[Fraction, Fraction]]) -> list[Fraction]:
    """Monomial coefficients of the unique polynomial of degree < len(points) through ``points``."""
    xs = [as_rational(p[0]) for p in points]
    table = [as_rational(p[1]) for p in points]
    count = len(xs)
    if len(set(xs)) != count:
        raise ValueError("interpolation nodes must be distinct")
    # Newton divided differences, then expand the nested form.
    for level in range(1, count):
        for i in range(count - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (xs[i] - xs[i - level])
    coeffs = [Fraction(0)] * count
    for i in range(count - 1, -1, -1):
        # coeffs <- coeffs * (y - xs[i]) + table[i]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[i] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += table[i]
    return coeffs


@dataclass(frozen=True)
class ChiYPolynomial:
    """``sum_p chi^p y^p`` with ``coefficients[p] = chi^p``."""

    coefficients: tuple[Fraction, ...]

    @property
    def n(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, y: RationalLike) -> Fraction:
        y = as_rational(y)
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * y + c
        return acc

    def is_palindromic(self) -> bool:
        sign = -1 if self.n % 2 else 1
        c = self.coefficients
        return all(c[p] == sign * c[self.n - p] for p in range(self.n + 1))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients)


def chi_y_polynomial(ci: CompleteIntersection, twist: int = 0) -> ChiYPolynomial:
    n = ci.n
    nodes = [Fraction(y) for y in range(n + 2)]
    points = [(y, chi_y_value(ci, twist, y)) for y in nodes]
    coeffs = interpolate(points)
    if coeffs[-1] != 0:
        raise ArithmeticError(f"chi_y samples for {ci} do not fit a polynomial of degree <= {n}")
    return ChiYPolynomial(tuple(coeffs[:-1]))


def euler_characteristic(ci: CompleteIntersection) -> Fraction:
    return chi_y_polynomial(ci, 0)(-1)


def signature(ci: CompleteIntersection) -> Fraction:
    return chi_y_polynomial(ci, 0)(1)
