"""Exit criteria for the package; each test prints one PASS/FAIL line in the summary."""
import random
import time
from fractions import Fraction as Fr
from math import factorial

import pytest

from metallic_sums.cli import cmd_closed_form
from metallic_sums.closedform import (
    IntegralityError,
    MetallicParams,
    build_closed_form,
    check_induction_identities,
    closed_sum,
    metallic_terms,
    oracle_sum,
)
from metallic_sums.families import FamilyCache, check_fequald, triangle_rows
from metallic_sums.patterns import check_patterns
from metallic_sums.polycore import Polynomial, poly_eval, poly_scale, shift

from .paper_tables import TABLES

M_RANGE = range(1, 9)
P_RANGE = range(1, 9)
N_RANGE = range(0, 61)


def _kv_poly(kv, name, p):
    return Polynomial([Fr(int(kv[f"{name}.{k}.num"]), int(kv[f"{name}.{k}.den"])) for k in range(p + 1)])


def _closed_form_from_cli(m, p):
    out, code = cmd_closed_form(m, p, "kv")
    assert code == 0
    kv = dict(line.split("=", 1) for line in out.splitlines())
    t0 = Fr(int(kv["T0.num"]), int(kv["T0.den"]))
    return _kv_poly(kv, "F", p), _kv_poly(kv, "T", p), t0


@pytest.mark.acceptance(1, "Fibonacci squares: F = n^2-2n+5, T = n^2-4n+8, T0 = 8")
def test_fibonacci_squares():
    start = time.perf_counter()
    F, T, t0 = _closed_form_from_cli(1, 2)
    text, _ = cmd_closed_form(1, 2)
    elapsed = time.perf_counter() - start
    assert F == Polynomial([5, -2, 1])
    assert T == Polynomial([8, -4, 1])
    assert t0 == 8
    assert "F(n) = n^2 - 2n + 5" in text and "T(n) = n^2 - 4n + 8" in text
    assert elapsed < 1.0


@pytest.mark.acceptance(2, "Pell cubes: F = (n^3+3n-3)/2, T = (n^3-3n^2+6n-7)/2, -T0 = 7/2")
def test_pell_cubes():
    start = time.perf_counter()
    F, T, t0 = _closed_form_from_cli(2, 3)
    elapsed = time.perf_counter() - start
    assert F == poly_scale(Polynomial([-3, 3, 0, 1]), Fr(1, 2))
    assert T == poly_scale(Polynomial([-7, 6, -3, 1]), Fr(1, 2))
    assert -t0 == Fr(7, 2)
    assert elapsed < 1.0


@pytest.mark.acceptance(3, "Tables 1-4 reproduced entry for entry")
def test_table_fidelity():
    start = time.perf_counter()
    tabs = {k: triangle_rows(k, len(rows) - 1) for k, rows in TABLES.items()}
    elapsed = time.perf_counter() - start
    assert {k: len(v) for k, v in TABLES.items()} == {"f": 8, "t": 8, "d": 7, "s": 7}
    for kind, printed in TABLES.items():
        assert [list(r) for r in tabs[kind].rows] == printed, kind
    assert tabs["f"].entry(6, 4) == 728
    assert tabs["d"].entry(5, 4) == 242
    assert elapsed < 1.0


@pytest.mark.acceptance(4, "closed_sum == oracle_sum for m<=8, p<=8, n<=60")
def test_oracle_equivalence():
    start = time.perf_counter()
    cache = FamilyCache()
    cells = 0
    mismatches = []
    for m in M_RANGE:
        seq = metallic_terms(m, N_RANGE[-1])
        for p in P_RANGE:
            cf = build_closed_form(MetallicParams(m, p), cache)
            for n in N_RANGE:
                cells += 1
                if closed_sum(cf, n, seq) != oracle_sum(m, p, n):
                    mismatches.append((m, p, n))
    elapsed = time.perf_counter() - start
    assert cells == len(M_RANGE) * len(P_RANGE) * len(N_RANGE)
    assert mismatches == []
    assert elapsed < 10.0


@pytest.mark.acceptance(5, "F == bar(D) + X^p, T == bar(F) for m<=8, p<=12; f_i == sum C(i,j) X^(i-j) d_j for i<=40")
def test_proof_identities():
    start = time.perf_counter()
    cache = FamilyCache()
    bad = [(m, p) for m in range(1, 9) for p in range(1, 13)
           if not check_induction_identities(MetallicParams(m, p), cache)]
    cache.extend(40)
    bad_i = [i for i in range(1, 41) if not check_fequald(cache, i)]
    elapsed = time.perf_counter() - start
    assert bad == []
    assert bad_i == []
    assert elapsed < 10.0


@pytest.mark.acceptance(6, "every triangle pattern holds through row 30")
def test_pattern_suite():
    start = time.perf_counter()
    report = check_patterns(30)
    elapsed = time.perf_counter() - start
    failed = [(r.pattern_id, str(r.counterexample)) for r in report.results if not r.passed]
    assert failed == []
    assert {r.pattern_id.split(".")[0] for r in report.results} == {f"b{k}" for k in range(1, 7)}
    col0 = triangle_rows("f", 30).entry(30, 0)
    assert col0 == 2 ** 30 * factorial(30)
    assert elapsed < 5.0


def _random_poly(rng):
    deg = rng.randint(0, 12)
    return Polynomial([Fr(rng.randint(-10**6, 10**6), rng.randint(1, 1000)) for _ in range(deg + 1)])


@pytest.mark.acceptance(7, "shift properties on 1000 random rational polynomials")
def test_shift_properties():
    rng = random.Random(20261014)
    start = time.perf_counter()
    for _ in range(1000):
        a, b = _random_poly(rng), _random_poly(rng)
        delta = rng.choice([-1, 1, rng.randint(-7, 7)])
        x = Fr(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        c = Fr(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
        sa = shift(a, delta)
        assert poly_eval(sa, x) == poly_eval(a, x + delta)
        assert shift(a + b, delta) == sa + shift(b, delta)
        assert shift(poly_scale(a, c), delta) == poly_scale(sa, c)
        assert shift(shift(a, -1), 1) == a
        assert shift(sa, -delta) == a
        assert sa.degree() == a.degree() and sa.leading() == a.leading()
    elapsed = time.perf_counter() - start
    assert elapsed < 5.0


@pytest.mark.acceptance(8, "closed_sum stays integral across the grid and is 0 at n = 0")
def test_integrality_and_base_case():
    cache = FamilyCache()
    errors = []
    nonzero_base = []
    for m in M_RANGE:
        seq = metallic_terms(m, N_RANGE[-1])
        for p in P_RANGE:
            cf = build_closed_form(MetallicParams(m, p), cache)
            if closed_sum(cf, 0, seq) != 0:
                nonzero_base.append((m, p))
            for n in N_RANGE:
                try:
                    closed_sum(cf, n, seq)
                except IntegralityError as exc:
                    errors.append(str(exc))
    assert errors == []
    assert nonzero_base == []
