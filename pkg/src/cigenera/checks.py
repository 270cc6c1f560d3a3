"""Theorem-verification sweeps over ranges of complete intersections.

Every ``check_*`` function walks its range, compares exact values and returns a
:class:`SweepReport`. Violations are collected as data, never raised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .arith import binomial_general, binomial_reflect_check, format_rational
from .ci import CompleteIntersection, TwistedGenusQuery, normalize
from .closed import (
    ahat_closed,
    ak_closed,
    ak_from_todd,
    chi_K_closed,
    todd_closed,
    todd_recurrence,
)
from .oracles import (
    GenusLabel,
    ak_genfun,
    build_q_series,
    chi_twist_genfun,
    chi_y_polynomial,
    chi_y_value,
    genus_chern_root,
    todd_genfun,
)

__all__ = [
    "CHECK_IDS",
    "SweepConfig",
    "ViolationRecord",
    "SweepReport",
    "enumerate_cis",
    "check_theorem_todd",
    "check_theorem_chiK",
    "check_theorem_ak",
    "check_four_term_identity",
    "check_binomial_inequality",
    "check_oracle_agreement",
    "check_golden_values",
    "run_checks",
]

CHECK_IDS = ("oracle", "todd", "chi-k", "ak", "four-term", "binomial", "golden")


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 1
    n_max: int = 8
    r_max: int = 3
    d_max: int = 6
    levels: tuple[int, ...] = (2, 3, 4, 5, 6)
    ak_ks: tuple[int, ...] = (2, 3, 4)
    checks: tuple[str, ...] = CHECK_IDS
    four_term_samples: int = 200
    seed: int = 0
    a_range: tuple[int, int] = (-10, 15)
    b_range: tuple[int, int] = (-10, 15)
    binom_n_range: tuple[int, int] = (1, 12)

    def __post_init__(self) -> None:
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError(f"empty dimension range [{self.n_min}, {self.n_max}]")
        if self.r_max < 0:
            raise ValueError("r_max must be >= 0")
        if self.d_max < 2:
            raise ValueError("d_max must be >= 2")
        if any(N < 1 for N in self.levels):
            raise ValueError("levels must be positive")
        if any(k < 2 for k in self.ak_ks):
            raise ValueError("A_k checks need k >= 2")
        unknown = set(self.checks) - set(CHECK_IDS)
        if unknown:
            raise ValueError(f"unknown check ids: {sorted(unknown)}")

    def as_dict(self) -> dict:
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "r_max": self.r_max,
            "d_max": self.d_max,
            "levels": list(self.levels),
            "ak_ks": list(self.ak_ks),
            "checks": list(self.checks),
            "four_term_samples": self.four_term_samples,
            "seed": self.seed,
            "a_range": list(self.a_range),
            "b_range": list(self.b_range),
            "binom_n_range": list(self.binom_n_range),
        }


@dataclass(frozen=True)
class ViolationRecord:
    check: str
    ci: str
    params: tuple[tuple[str, int], ...]
    relation: str
    lhs: str
    rhs: str

    def sort_key(self) -> tuple:
        return (self.check, self.ci, self.params, self.relation)

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "ci": self.ci,
            "params": dict(self.params),
            "relation": self.relation,
            "lhs": self.lhs,
            "rhs": self.rhs,
        }


@dataclass
class SweepReport:
    check: str
    instances: int = 0
    assertions: int = 0
    violations: list[ViolationRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def as_dict(self) -> dict:
        return {
            "check": self.check,
            "instances": self.instances,
            "assertions": self.assertions,
            "violations": [v.as_dict() for v in sorted(self.violations, key=ViolationRecord.sort_key)],
        }


class _Recorder:
    """Tallies assertions for one report."""

    def __init__(self, report: SweepReport) -> None:
        self.report = report

    def compare(self, op: str, lhs: Fraction, rhs: Fraction, relation: str,
                ci: object = "", **params: int) -> bool:
        self.report.assertions += 1
        ok = {"==": lhs == rhs, ">=": lhs >= rhs}[op]
        if not ok:
            self.report.violations.append(
                ViolationRecord(
                    check=self.report.check,
                    ci=str(ci),
                    params=tuple(sorted(params.items())),
                    relation=relation,
                    lhs=format_rational(lhs),
                    rhs=format_rational(rhs),
                )
            )
        return ok

    def eq(self, lhs, rhs, relation, ci="", **params) -> bool:
        return self.compare("==", Fraction(lhs), Fraction(rhs), relation, ci, **params)

    def ge(self, lhs, rhs, relation, ci="", **params) -> bool:
        return self.compare(">=", Fraction(lhs), Fraction(rhs), relation, ci, **params)

    def true(self, flag: bool, relation, ci="", **params) -> bool:
        return self.eq(int(flag), 1, relation, ci, **params)


def _non_increasing(length: int, hi: int, lo: int = 2) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for first in range(hi, lo - 1, -1):
        for rest in _non_increasing(length - 1, first, lo):
            yield (first,) + rest


def enumerate_cis(cfg: SweepConfig, min_r: int = 0) -> list[CompleteIntersection]:
    """Canonical (descending-degree) instances ordered by (n, r, degrees)."""
    out = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for r in range(min_r, cfg.r_max + 1):
            for degrees in sorted(_non_increasing(r, cfg.d_max)):
                out.append(CompleteIntersection(n, degrees))
    return out


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _twisted_bound(n: int, c1: int, t: Fraction) -> Fraction:
    # C(n+1 - t c1, n+1) + (-1)^n C(n+1 - (1-t) c1, n+1)
    return binomial_general(n + 1 - t * c1, n + 1) + _sign(n) * binomial_general(n + 1 - (1 - t) * c1, n + 1)


def check_theorem_todd(cfg: SweepConfig) -> SweepReport:
    report = SweepReport("todd")
    rec = _Recorder(report)
    for ci in enumerate_cis(cfg, min_r=1):
        report.instances += 1
        n, c1 = ci.n, ci.c1
        td = todd_closed(ci)
        if c1 > 0:
            rec.eq(td, 1, "c1>0 => Td = 1", ci)
        elif c1 == 0:
            rec.eq(td, 1 + _sign(n), "c1=0 => Td = 1+(-1)^n", ci)
        else:
            signed = _sign(n) * td
            rec.ge(signed, n + ci.r, "c1<0 => (-1)^n Td >= n+r", ci)
            rec.ge(signed, binomial_general(n + 1 - c1, n + 1) + _sign(n),
                   "c1<0 => (-1)^n Td >= C(n+1-c1, n+1) + (-1)^n", ci)
    return report


def check_theorem_chiK(cfg: SweepConfig) -> SweepReport:
    report = SweepReport("chi-k")
    rec = _Recorder(report)
    half = Fraction(1, 2)
    for ci in enumerate_cis(cfg, min_r=1):
        n, c1 = ci.n, ci.c1
        for N in cfg.levels:
            values = {k: chi_K_closed(TwistedGenusQuery(ci, k, N)) for k in range(N + 1)}
            for k in range(N + 1):
                rec.eq(values[k], _sign(n) * values[N - k], "chi(K^{k/N}) = (-1)^n chi(K^{(N-k)/N})", ci, k=k, N=N)
            rec.eq(values[0], todd_closed(ci), "chi(K^0) = Td", ci, N=N)
            rec.eq(values[N], _sign(n) * todd_closed(ci), "chi(K) = (-1)^n Td", ci, N=N)
            if c1 % N:
                continue
            report.instances += 1
            for k, value in values.items():
                t = Fraction(k, N)
                rec.true(value.denominator == 1, "N | c1 => chi(K^{k/N}) integral", ci, k=k, N=N)
                if c1 > 0:
                    expected = 1 if k == 0 else (_sign(n) if k == N else 0)
                    rec.eq(value, expected, "c1>0 => chi(K^{k/N}) in {1, 0, (-1)^n}", ci, k=k, N=N)
                elif c1 == 0:
                    rec.eq(value, 1 + _sign(n), "c1=0 => chi(K^{k/N}) = 1+(-1)^n", ci, k=k, N=N)
                else:
                    if t >= half:
                        rec.ge(value, _twisted_bound(n, c1, t),
                               "c1<0, k/N>=1/2 => chi >= C(n+1-(k/N)c1,n+1) + (-1)^n C(n+1-((N-k)/N)c1,n+1)",
                               ci, k=k, N=N)
                    if t <= half:
                        rec.ge(_sign(n) * value, _twisted_bound(n, c1, 1 - t),
                               "c1<0, k/N<=1/2 => (-1)^n chi >= C(n+1-((N-k)/N)c1,n+1) + (-1)^n C(n+1-(k/N)c1,n+1)",
                               ci, k=k, N=N)
                    if t == half and n % 2:
                        rec.eq(value, 0, "c1<0, k/N=1/2, n odd => chi = 0", ci, k=k, N=N)
    return report


def check_theorem_ak(cfg: SweepConfig) -> SweepReport:
    report = SweepReport("ak")
    rec = _Recorder(report)
    for ci in enumerate_cis(cfg, min_r=1):
        n, c1 = ci.n, ci.c1
        rec.eq(ak_closed(ci, 1), todd_closed(ci), "A_1 = Td", ci)
        rec.eq(ak_closed(ci, 2), 2**n * ahat_closed(ci), "A_2 = 2^n Ahat", ci)
        for k in cfg.ak_ks:
            value = ak_closed(ci, k)
            rec.eq(value, k**n * chi_K_closed(TwistedGenusQuery(ci, k - 1, k)),
                   "A_k = k^n chi(K^{(k-1)/k})", ci, ak_k=k)
            if c1 % k:
                continue
            report.instances += 1
            if c1 > 0:
                rec.eq(value, 0, "c1>0, k|c1 => A_k = 0", ci, ak_k=k)
            elif c1 == 0:
                rec.eq(value, k**n * (1 + _sign(n)), "c1=0 => A_k = k^n (1+(-1)^n)", ci, ak_k=k)
            else:
                rec.ge(value, k**n * _twisted_bound(n, c1, Fraction(k - 1, k)),
                       "c1<0, k|c1 => A_k >= k^n [C(n+1-((k-1)/k)c1,n+1) + (-1)^n C(n+1-c1/k,n+1)]",
                       ci, ak_k=k)
    return report


def four_term_sides(n: int, degrees: Sequence[int], k: int, N: int) -> tuple[Fraction, Fraction]:
    """Both sides of the degree-exchange identity; ``degrees[1] >= 2`` and len >= 3."""
    d1, d2, d3, *rest = degrees

    def chi(raw: Iterable[int]) -> Fraction:
        return chi_K_closed(TwistedGenusQuery(normalize(n, list(raw)), k, N))

    lhs = chi([d1, d2, d3, *rest]) - chi([d1 + 1, d2 - 1, d3, *rest])
    rhs = chi([d1, d2 - 1 + d3, *rest]) - chi([d2 - 1, d1 + d3, *rest])
    return lhs, rhs


FOUR_TERM_FIXED = ((3, (3, 2, 2), 1, 2), (4, (4, 3, 2), 2, 3), (2, (5, 2, 3), 1, 3))


def check_four_term_identity(cfg: SweepConfig) -> SweepReport:
    report = SweepReport("four-term")
    rec = _Recorder(report)
    rng = random.Random(cfg.seed)
    cases = list(FOUR_TERM_FIXED)
    levels = cfg.levels or (2,)
    for _ in range(cfg.four_term_samples):
        n = rng.randint(cfg.n_min, cfg.n_max)
        r = rng.choice((3, 4))
        degrees = tuple(rng.randint(2, max(cfg.d_max, 2)) for _ in range(r))
        N = rng.choice(levels)
        k = rng.randint(0, N)
        cases.append((n, degrees, k, N))
    for n, degrees, k, N in cases:
        report.instances += 1
        lhs, rhs = four_term_sides(n, degrees, k, N)
        label = f"X{n}({','.join(map(str, degrees))})"
        rec.eq(lhs, rhs, "chi(d1,d2,d3,..) - chi(d1+1,d2-1,d3,..) = chi(d1,d2-1+d3,..) - chi(d2-1,d1+d3,..)",
               label, k=k, N=N)
    return report


def check_binomial_inequality(a_range: tuple[int, int], b_range: tuple[int, int],
                              n_range: tuple[int, int]) -> SweepReport:
    """C(a+1,n) + C(b-1,n) >= C(a,n) + C(b,n) for integers a >= b, a+b >= n-1, n > 0."""
    report = SweepReport("binomial")
    rec = _Recorder(report)
    for n in range(max(n_range[0], 1), n_range[1] + 1):
        for a in range(a_range[0], a_range[1] + 1):
            for b in range(b_range[0], min(a, b_range[1]) + 1):
                if a + b < n - 1:
                    continue
                report.instances += 1
                left = binomial_general(a + 1, n) + binomial_general(b - 1, n)
                right = binomial_general(a, n) + binomial_general(b, n)
                tag = f"a={a},b={b},n={n}"
                rec.ge(left, right, "C(a+1,n) + C(b-1,n) >= C(a,n) + C(b,n)", tag, a=a, b=b, n=n)
                if a + b == n - 1 and n % 2:
                    rec.eq(left, right, "a+b=n-1, n odd => equality", tag, a=a, b=b, n=n)
    return report


def check_oracle_agreement(cfg: SweepConfig) -> SweepReport:
    report = SweepReport("oracle")
    rec = _Recorder(report)
    for ci in enumerate_cis(cfg):
        report.instances += 1
        n, c1 = ci.n, ci.c1
        td = todd_closed(ci)
        rec.eq(todd_genfun(ci), td, "Td: generating function = closed form", ci)
        rec.eq(genus_chern_root(ci, build_q_series(GenusLabel.todd(), n)), td, "Td: Chern roots = closed form", ci)
        if ci.r:
            rec.eq(todd_recurrence(ci), td, "Td: degree recurrence = closed form", ci)
        rec.eq(chi_twist_genfun(ci, 0), td, "chi(gamma^0) = Td", ci)

        for N in cfg.levels:
            for k in range(N + 1):
                closed = chi_K_closed(TwistedGenusQuery(ci, k, N))
                rec.eq(genus_chern_root(ci, build_q_series(GenusLabel.level(k, N), n)), closed,
                       "chi(K^{k/N}): Chern roots = closed form", ci, k=k, N=N)
                if (c1 * k) % N == 0:
                    rec.eq(chi_twist_genfun(ci, -c1 * k // N), closed,
                           "chi(K^{k/N}): twisted generating function = closed form", ci, k=k, N=N)

        for k in cfg.ak_ks:
            closed = ak_closed(ci, k)
            rec.eq(genus_chern_root(ci, build_q_series(GenusLabel.ak(k), n)), closed,
                   "A_k: Chern roots = closed form", ci, ak_k=k)
            rec.eq(ak_genfun(ci, k), closed, "A_k: generating function = closed form", ci, ak_k=k)
            rec.eq(ak_from_todd(ci, k), closed, "A_k: Todd relation = closed form", ci, ak_k=k)

        ahat_root = genus_chern_root(ci, build_q_series(GenusLabel.ahat(), n))
        rec.eq(ahat_root, ahat_closed(ci), "Ahat: Chern roots = closed form", ci)
        if n % 2:
            rec.eq(ahat_root, 0, "Ahat vanishes in odd dimension", ci)

        poly = chi_y_polynomial(ci)
        rec.true(poly.is_integral(), "chi_y coefficients integral", ci)
        rec.true(poly.is_palindromic(), "chi^p = (-1)^n chi^{n-p}", ci)
        rec.eq(poly(0), td, "chi_y at y=0 = Td", ci)
        rec.eq(poly(n + 2), chi_y_value(ci, 0, n + 2), "interpolated chi_y at held-out y=n+2", ci)
        if ci.total_degree > 2:
            rec.ge(_sign(n) * poly(-1), 0, "(-1)^n Euler >= 0 for total degree > 2", ci)
    return report


def check_golden_values(cfg: SweepConfig | None = None) -> SweepReport:
    """Fixed values quoted for specific complete intersections."""
    from .oracles import euler_characteristic, signature

    report = SweepReport("golden")
    rec = _Recorder(report)
    cases = [
        ("Td", normalize(2, [4]), todd_closed, 2),
        ("Td", normalize(3, [5]), todd_closed, 0),
        ("Td", normalize(2, [2, 2]), todd_closed, 1),
        ("Ahat", normalize(2, [4]), ahat_closed, 2),
        ("sign", normalize(2, [2, 2]), signature, -4),
        ("sign", normalize(2, [2]), signature, 0),
        ("sign", normalize(4, [2]), signature, 2),
        ("euler", normalize(1, [3]), euler_characteristic, 0),
        ("euler", normalize(2, []), euler_characteristic, 3),
        ("A_5", normalize(3, [5]), lambda ci: ak_closed(ci, 5), 0),
        ("A_2", normalize(2, [4]), lambda ci: ak_closed(ci, 2), 8),
        ("chi(K^1/2)", normalize(2, [6]), lambda ci: chi_K_closed(TwistedGenusQuery(ci, 1, 2)), 8),
    ]
    cases += [("sign", normalize(2 * m, []), signature, 1) for m in (1, 2, 3)]
    cases += [("euler", normalize(n, [2, 2]), euler_characteristic, 0) for n in (1, 3, 5, 7)]
    for label, ci, fn, expected in cases:
        report.instances += 1
        rec.eq(fn(ci), expected, f"{label} = {expected}", ci)
    for a, k in ((Fraction(-1), 4), (Fraction(5), 3), (Fraction(7, 2), 2)):
        rec.true(binomial_reflect_check(a, k), "(-1)^k C(a,k) = C(k-1-a,k)", f"a={a}", k=k)
    ci = normalize(2, [6])
    rec.eq(chi_K_closed(TwistedGenusQuery(ci, 1, 2)), _twisted_bound(2, ci.c1, Fraction(1, 2)),
           "X2(6), k/N=1/2 saturates the lower bound", ci)
    return report


_RUNNERS = {
    "oracle": check_oracle_agreement,
    "todd": check_theorem_todd,
    "chi-k": check_theorem_chiK,
    "ak": check_theorem_ak,
    "four-term": check_four_term_identity,
    "binomial": lambda cfg: check_binomial_inequality(cfg.a_range, cfg.b_range, cfg.binom_n_range),
    "golden": check_golden_values,
}


def run_checks(cfg: SweepConfig) -> list[SweepReport]:
    """Run the configured checks in the fixed order of ``CHECK_IDS``."""
    return [_RUNNERS[check](cfg) for check in CHECK_IDS if check in cfg.checks]
