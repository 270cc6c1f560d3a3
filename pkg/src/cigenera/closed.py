"""Closed-form genus formulas: alternating sums of generalized binomial coefficients
over subsets of the multidegree."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .arith import RationalLike, as_rational, binomial_general
from .ci import CompleteIntersection, TwistedGenusQuery

__all__ = [
    "MAX_CODIMENSION",
    "subset_sums",
    "todd_closed",
    "chi_K_closed",
    "chi_K_fraction",
    "ahat_closed",
    "ak_closed",
    "todd_recurrence",
    "ak_from_todd",
    "todd_at_dimension",
]

MAX_CODIMENSION = 20


def subset_sums(degrees: Sequence[int]) -> list[tuple[int, int]]:
    """All ``(|S|, sum(S))`` for subsets ``S`` of ``degrees``, enumerated by bitmask."""
    r = len(degrees)
    if r > MAX_CODIMENSION:
        raise ValueError(f"at most {MAX_CODIMENSION} degrees supported, got {r}")
    out = []
    for mask in range(1 << r):
        size = total = 0
        for i, d in enumerate(degrees):
            if mask >> i & 1:
                size += 1
                total += d
        out.append((size, total))
    return out


def _alternating_sum(n: int, degrees: tuple[int, ...], shift: Fraction) -> Fraction:
    # sum_S (-1)^{n+r+|S|} C(shift - 1 + sum(S), n + r); valid for any n >= 0.
    r = len(degrees)
    top = n + r
    total = Fraction(0)
    for size, dsum in subset_sums(degrees):
        term = binomial_general(shift - 1 + dsum, top)
        total += term if (n + r + size) % 2 == 0 else -term
    return total


def todd_at_dimension(n: int, degrees: Sequence[int]) -> Fraction:
    """Todd genus of X_n(degrees) for any n >= 0 (n = 0 counts points)."""
    if n < 0:
        raise ValueError("dimension must be >= 0")
    return _alternating_sum(n, tuple(degrees), Fraction(0))


def todd_closed(ci: CompleteIntersection) -> Fraction:
    return _alternating_sum(ci.n, ci.degrees, Fraction(0))


def chi_K_closed(q: TwistedGenusQuery) -> Fraction:
    """chi(X, K^{k/N}); non-integral twists ``(k/N) c1`` give the formal rational value."""
    return _alternating_sum(q.ci.n, q.ci.degrees, q.fraction * q.ci.c1)


def chi_K_fraction(ci: CompleteIntersection, t: RationalLike) -> Fraction:
    """chi(X, K^t) for an arbitrary rational exponent ``t``."""
    return _alternating_sum(ci.n, ci.degrees, as_rational(t) * ci.c1)


def ahat_closed(ci: CompleteIntersection) -> Fraction:
    return chi_K_closed(TwistedGenusQuery(ci, 1, 2))


def ak_closed(ci: CompleteIntersection, k: int) -> Fraction:
    """A_k genus as ``k^n sum_S (-1)^{r-|S|} C(c1/k - 1 + sum(S), n + r)``; k = 1 is Todd."""
    if k < 1:
        raise ValueError(f"A_k needs k >= 1, got {k}")
    if k == 1:
        return todd_closed(ci)
    n, r = ci.n, ci.r
    shift = Fraction(ci.c1, k)
    total = Fraction(0)
    for size, dsum in subset_sums(ci.degrees):
        term = binomial_general(shift - 1 + dsum, n + r)
        total += term if (r - size) % 2 == 0 else -term
    return k**n * total


@lru_cache(maxsize=None)
def _todd_by_recurrence(n: int, degrees: tuple[int, ...]) -> Fraction:
    if not degrees:
        return Fraction(1)
    head, last = degrees[:-1], degrees[-1]
    total = Fraction(0)
    for l in range(n + 1):
        term = binomial_general(last, n - l + 1) * _todd_by_recurrence(l, head)
        total += term if (n - l) % 2 == 0 else -term
    return total


def todd_recurrence(ci: CompleteIntersection) -> Fraction:
    """Todd genus by peeling off the smallest degree, down to projective spaces."""
    if ci.r == 0:
        raise ValueError("todd_recurrence needs at least one degree")
    return _todd_by_recurrence(ci.n, ci.degrees)


def ak_from_todd(ci: CompleteIntersection, k: int) -> Fraction:
    """A_k via ``k^n sum_l C(c1/k, n-l) (-1)^l Td(X_l(d))`` with c1 taken from X_n."""
    if k < 1:
        raise ValueError(f"A_k needs k >= 1, got {k}")
    n = ci.n
    shift = Fraction(ci.c1, k)
    total = Fraction(0)
    for l in range(n + 1):
        term = binomial_general(shift, n - l) * todd_at_dimension(l, ci.degrees)
        total += term if l % 2 == 0 else -term
    return k**n * total
