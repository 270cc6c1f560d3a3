"""Exit criteria. Each test prints one PASS/FAIL line; all comparisons are exact."""

import random
import time
from fractions import Fraction

import pytest

from cigenera.arith import binomial_general
from cigenera.checks import (
    SweepConfig,
    check_binomial_inequality,
    check_four_term_identity,
    check_theorem_ak,
    check_theorem_chiK,
    check_theorem_todd,
    enumerate_cis,
)
from cigenera.ci import TwistedGenusQuery, normalize
from cigenera.cli import main
from cigenera.closed import ahat_closed, chi_K_closed, todd_closed, todd_recurrence
from cigenera.oracles import (
    GenusLabel,
    build_q_series,
    chi_twist_genfun,
    chi_y_polynomial,
    euler_characteristic,
    genus_chern_root,
    signature,
    todd_genfun,
)
from cigenera.series import TruncatedSeries, binomial_power, exp_linear, mul

DESK = SweepConfig(n_min=1, n_max=8, r_max=3, d_max=6, levels=(2, 3, 4, 5, 6))


@pytest.fixture
def verdict(capsys):
    def emit(criterion, ok, detail):
        with capsys.disabled():
            print(f"\n[acceptance {criterion:>2}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail

    return emit


def test_01_todd_four_way_agreement(verdict):
    start = time.perf_counter()
    bad = []
    cis = enumerate_cis(DESK)
    for ci in cis:
        closed = todd_closed(ci)
        routes = [todd_genfun(ci), genus_chern_root(ci, build_q_series(GenusLabel.todd(), ci.n))]
        if ci.r:
            routes.append(todd_recurrence(ci))
        if any(v != closed for v in routes):
            bad.append((str(ci), closed, routes))
    elapsed = time.perf_counter() - start
    verdict(1, not bad and elapsed < 30,
            f"Todd closed = genfun = Chern roots = recurrence on {len(cis)} instances, "
            f"{len(bad)} disagreements, {elapsed:.1f}s (< 30s)")


def test_02_level_n_cusp_values(verdict):
    start = time.perf_counter()
    bad = []
    checked = 0
    for ci in enumerate_cis(DESK):
        for N in DESK.levels:
            if ci.c1 % N:
                continue
            values = {}
            for k in range(N + 1):
                closed = chi_K_closed(TwistedGenusQuery(ci, k, N))
                genfun = chi_twist_genfun(ci, -ci.c1 * k // N)
                root = genus_chern_root(ci, build_q_series(GenusLabel.level(k, N), ci.n))
                values[k] = closed
                checked += 1
                if not (closed == genfun == root and closed.denominator == 1):
                    bad.append((str(ci), k, N, closed, genfun, root))
            for k in range(N + 1):
                if values[k] != (-1) ** ci.n * values[N - k]:
                    bad.append((str(ci), k, N, "symmetry"))
    elapsed = time.perf_counter() - start
    verdict(2, not bad and elapsed < 60,
            f"chi(K^k/N) closed = genfun = Chern roots, integral, symmetric: {checked} values, "
            f"{len(bad)} violations, {elapsed:.1f}s (< 60s)")


def test_03_todd_theorem_sweep(verdict):
    report = check_theorem_todd(DESK)
    verdict(3, report.passed,
            f"Todd trichotomy and both c1<0 bounds: {report.assertions} assertions, "
            f"{len(report.violations)} violations")


def test_04_twisted_theorem_sweep(verdict):
    report = check_theorem_chiK(DESK)
    ci = normalize(2, [6])
    value = chi_K_closed(TwistedGenusQuery(ci, 1, 2))
    bound = binomial_general(3 - Fraction(1, 2) * ci.c1, 3) + binomial_general(3 - Fraction(1, 2) * ci.c1, 3)
    ok = report.passed and value == 8 == bound
    verdict(4, ok, f"chi(K^k/N) cases, half-interval bounds, odd-n vanishing: {report.assertions} assertions, "
                   f"{len(report.violations)} violations; X2(6) k/N=1/2 -> {value} (bound {bound})")


def test_05_ak_theorem_sweep(verdict):
    report = check_theorem_ak(SweepConfig(n_min=1, n_max=8, r_max=3, d_max=6, ak_ks=(2, 3, 4)))
    verdict(5, report.passed,
            f"A_k cases for k in 2,3,4 plus A_k/chi, A_2/A-hat and A_1/Td bridges: {report.assertions} "
            f"assertions, {len(report.violations)} violations")


def test_06_golden_values(verdict):
    X = lambda n, *d: normalize(n, list(d))  # noqa: E731
    checks = {
        "Td(X2(4)) = 2": todd_closed(X(2, 4)) == 2,
        "Td(X3(5)) = 0": todd_closed(X(3, 5)) == 0,
        "Ahat(X2(4)) = 2": ahat_closed(X(2, 4)) == 2,
        "sign(X2(2,2)) = -4": signature(X(2, 2, 2)) == -4,
        "sign(CP^2m) = 1, m <= 3": all(signature(X(2 * m)) == 1 for m in (1, 2, 3)),
        "sign(X2(2)) = 0": signature(X(2, 2)) == 0,
        "Euler(X1(3)) = 0": euler_characteristic(X(1, 3)) == 0,
    }
    positivity = [ci for ci in enumerate_cis(DESK) if ci.total_degree > 2
                  and (-1) ** ci.n * chi_y_polynomial(ci)(-1) < 0]
    checks["(-1)^n Euler >= 0 when total degree > 2"] = not positivity
    failed = [name for name, ok in checks.items() if not ok]
    verdict(6, not failed, f"{len(checks) - len(failed)}/{len(checks)} golden checks exact; failed: {failed}")


def test_07_four_term_identity(verdict):
    report = check_four_term_identity(SweepConfig(n_min=1, n_max=8, d_max=6, levels=(2, 3, 4, 5, 6),
                                                  four_term_samples=200, seed=7))
    verdict(7, report.passed and report.instances >= 100,
            f"degree-exchange identity on {report.instances} sampled instances (r in 3,4), "
            f"{len(report.violations)} failures")


def test_08_binomial_claim(verdict):
    report = check_binomial_inequality((-10, 15), (-10, 15), (1, 12))
    equality_cases = sum(1 for a in range(-10, 16) for b in range(-10, a + 1) for n in range(1, 13, 2)
                         if a + b == n - 1 and b <= 15)
    detail = "; ".join(f"{v.ci}: {v.lhs} vs {v.rhs}" for v in report.violations[:5])
    verdict(8, report.passed,
            f"C(a+1,n)+C(b-1,n) >= C(a,n)+C(b,n) on {report.instances} triples incl. {equality_cases} "
            f"equality cases, {len(report.violations)} counterexamples {detail}")


def test_09_property_suites(verdict):
    rng = random.Random(2024)
    failures = []
    for _ in range(10_000):
        a = Fraction(rng.randint(-60, 60), rng.randint(1, 9))
        k = rng.randint(0, 14)
        if k >= 1 and binomial_general(a, k) != binomial_general(a - 1, k) + binomial_general(a - 1, k - 1):
            failures.append(("pascal", a, k))
        if (-1) ** k * binomial_general(a, k) != binomial_general(k - 1 - a, k):
            failures.append(("reflection", a, k))

    def rand_series(order):
        return TruncatedSeries.from_coefficients(
            [Fraction(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(order + 1)], order)

    for _ in range(300):
        order = rng.randint(0, 12)
        s, t, u = rand_series(order), rand_series(order), rand_series(order)
        if mul(mul(s, t), u) != mul(s, mul(t, u)) or mul(s, t + u) != mul(s, t) + mul(s, u) \
                or mul(s, t) != mul(t, s):
            failures.append(("ring", order))
        a, b = Fraction(rng.randint(-7, 7), rng.randint(1, 5)), Fraction(rng.randint(-7, 7), rng.randint(1, 5))
        if mul(exp_linear(a, order), exp_linear(b, order)) != exp_linear(a + b, order):
            failures.append(("exp", a, b))
        if mul(binomial_power(a, order), binomial_power(b, order)) != binomial_power(a + b, order):
            failures.append(("binomial_power", a, b))

    palindromes = 0
    for ci in enumerate_cis(DESK):
        palindromes += 1
        if not chi_y_polynomial(ci).is_palindromic():
            failures.append(("palindrome", str(ci)))
        padded = normalize(ci.n, list(ci.degrees) + [1, 1])
        if (todd_closed(padded), chi_K_closed(TwistedGenusQuery(padded, 1, 3))) != \
                (todd_closed(ci), chi_K_closed(TwistedGenusQuery(ci, 1, 3))):
            failures.append(("normalization", str(ci)))
    verdict(9, not failures,
            f"10^4 Pascal/reflection cases, 300 series ring/homomorphism cases, {palindromes} chi_y "
            f"palindromes and degree-1 invariance: {len(failures)} failures")


def test_10_determinism(verdict, tmp_path):
    paths = [tmp_path / "a.json", tmp_path / "b.json"]
    codes = [main(["sweep", "--format", "json", "--out", str(p)]) for p in paths]
    same = paths[0].read_bytes() == paths[1].read_bytes()
    verdict(10, same and codes == [0, 0],
            f"two full default sweeps: exit codes {codes}, byte-identical JSON: {same}")
