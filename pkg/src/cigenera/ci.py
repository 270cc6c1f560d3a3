"""Complete intersections X_n(d_1, ..., d_r) and their basic invariants."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

__all__ = [
    "CompleteIntersection",
    "TwistedGenusQuery",
    "normalize",
    "first_chern_coefficient",
    "total_degree",
    "parse_ci",
]


@dataclass(frozen=True, order=True)
class CompleteIntersection:
    """Dimension ``n`` plus degrees >= 2 sorted descending. ``degrees == ()`` is CP^n.

    Build instances with :func:`normalize`; the constructor only validates.
    """

    n: int
    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"dimension must be >= 1, got {self.n}")
        if any(d < 2 for d in self.degrees):
            raise ValueError(f"stored degrees must be >= 2, got {self.degrees}")
        if list(self.degrees) != sorted(self.degrees, reverse=True):
            raise ValueError(f"degrees must be sorted descending, got {self.degrees}")

    @property
    def r(self) -> int:
        return len(self.degrees)

    @property
    def c1(self) -> int:
        return first_chern_coefficient(self)

    @property
    def total_degree(self) -> int:
        return total_degree(self)

    def sort_key(self) -> tuple:
        return (self.n, self.r, self.degrees)

    def __str__(self) -> str:
        return f"X{self.n}({','.join(map(str, self.degrees))})"


@dataclass(frozen=True)
class TwistedGenusQuery:
    """Request for chi(X, K^{k/N})."""

    ci: CompleteIntersection
    k: int
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise ValueError(f"level N must be >= 1, got {self.N}")
        if not 0 <= self.k <= self.N:
            raise ValueError(f"need 0 <= k <= N, got k={self.k}, N={self.N}")

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.k, self.N)


def normalize(n: int, raw_degrees: Iterable[int]) -> CompleteIntersection:
    """Drop degree-1 hypersurfaces and sort the remaining degrees descending."""
    raw = list(raw_degrees)
    if n <= 0:
        raise ValueError(f"dimension must be positive, got {n}")
    bad = [d for d in raw if d <= 0]
    if bad:
        raise ValueError(f"degrees must be positive, got {bad}")
    return CompleteIntersection(n, tuple(sorted((d for d in raw if d != 1), reverse=True)))


def first_chern_coefficient(ci: CompleteIntersection) -> int:
    return ci.n + ci.r + 1 - sum(ci.degrees)


def total_degree(ci: CompleteIntersection) -> int:
    return math.prod(ci.degrees)


_COMPACT = re.compile(r"^\s*X\s*_?\s*(-?\d+)\s*\(\s*([-\d,\s]*)\)\s*$", re.IGNORECASE)
_CP = re.compile(r"^\s*CP\s*\^?\s*(-?\d+)\s*$", re.IGNORECASE)
_KEYED = re.compile(r"^\s*n\s*=\s*(-?\d+)(?:\s+d\s*=\s*([-\d,\s]*))?\s*$")


def _int_list(text: str | None) -> list[int]:
    if not text or not text.strip():
        return []
    return [int(tok) for tok in text.split(",") if tok.strip()]


def parse_ci(text: str) -> CompleteIntersection:
    """Parse ``X3(5,2,2)``, ``CP4`` or ``n=3 d=5,2,2`` into a normalized instance."""
    for pattern in (_COMPACT, _KEYED):
        m = pattern.match(text)
        if m:
            return normalize(int(m.group(1)), _int_list(m.group(2)))
    m = _CP.match(text)
    if m:
        return normalize(int(m.group(1)), [])
    raise ValueError(f"cannot parse complete intersection from {text!r}; "
                     "expected e.g. 'X3(5,2,2)' or 'n=3 d=5,2,2'")
