"""Closed forms for S(n, m, p) = sum_{k<=n} k^p G_k over a metallic sequence.

The closed form is ``F(n) G_n + T(n) G_{n+1} - T_0``, where

    F(n) = sum_i f_i(m) / m^(i+1) * (-1)^i C(p,i) n^(p-i)

and T, D are built the same way from t_i(m) and d_i(m).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .families import FamilyCache, FamilyKind, check_fequald
from .polycore import Polynomial, bar, binomial, poly_eval


class IntegralityError(ArithmeticError):
    """The closed form evaluated to a non-integer; the identity is broken."""


@dataclass(frozen=True)
class MetallicParams:
    m: int
    p: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ValueError(f"metallicity m must be an integer >= 1, got {self.m!r}")
        if not isinstance(self.p, int) or self.p < 1:
            raise ValueError(f"power p must be an integer >= 1, got {self.p!r}")


@dataclass(frozen=True)
class MetallicSequence:
    m: int
    terms: tuple[int, ...]

    def __getitem__(self, k: int) -> int:
        return self.terms[k]

    def __len__(self) -> int:
        return len(self.terms)


def metallic_terms(m: int, n_max: int) -> MetallicSequence:
    """G_0..G_{n_max+1} for G_0 = 0, G_1 = 1, G_k = m G_{k-1} + G_{k-2}."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"metallicity m must be an integer >= 1, got {m!r}")
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    terms = [0, 1]
    while len(terms) < n_max + 2:
        terms.append(m * terms[-1] + terms[-2])
    return MetallicSequence(m, tuple(terms))


@dataclass(frozen=True)
class ClosedForm:
    params: MetallicParams
    F: Polynomial
    T: Polynomial
    D: Polynomial

    @property
    def T0(self) -> Fraction:
        return self.T.coeff(0)


def _assemble(values: list[Fraction], m: int, p: int) -> Polynomial:
    coeffs = [Fraction(0)] * (p + 1)
    for i, v in enumerate(values):
        coeffs[p - i] = (-1) ** i * binomial(p, i) * v / m ** (i + 1)
    return Polynomial(coeffs)


def build_closed_form(params: MetallicParams, cache: FamilyCache | None = None) -> ClosedForm:
    m, p = params.m, params.p
    cache = (cache or FamilyCache()).extend(p)

    def at_m(kind: FamilyKind) -> list[Fraction]:
        return [poly_eval(cache.get(kind, i), m) for i in range(p + 1)]

    return ClosedForm(
        params,
        F=_assemble(at_m(FamilyKind.F), m, p),
        T=_assemble(at_m(FamilyKind.T), m, p),
        D=_assemble(at_m(FamilyKind.D), m, p),
    )


def closed_sum(cf: ClosedForm, n: int, seq: MetallicSequence) -> int:
    if seq.m != cf.params.m:
        raise ValueError(f"sequence has m={seq.m}, closed form has m={cf.params.m}")
    if n < 0 or n + 1 >= len(seq):
        raise ValueError(f"sequence does not cover index {n + 1}")
    value = poly_eval(cf.F, n) * seq[n] + poly_eval(cf.T, n) * seq[n + 1] - cf.T0
    if value.denominator != 1:
        raise IntegralityError(
            f"closed form for m={cf.params.m}, p={cf.params.p} gave {value} at n={n}"
        )
    return value.numerator


def oracle_sum(m: int, p: int, n: int) -> int:
    """sum_{k=1..n} k^p G_k by direct recursion and summation."""
    if m < 1 or p < 1:
        raise ValueError(f"need m >= 1 and p >= 1, got m={m}, p={p}")
    total = 0
    g_prev, g = 0, 1  # G_0, G_1
    for k in range(1, n + 1):
        total += k ** p * g
        g_prev, g = g, m * g + g_prev
    return total


def check_induction_identities(params: MetallicParams, cache: FamilyCache | None = None) -> bool:
    """F == bar(D) + X^p and T == bar(F), as exact polynomials."""
    cf = build_closed_form(params, cache)
    x_p = Polynomial.monomial(params.p)
    return cf.F == bar(cf.D) + x_p and cf.T == bar(cf.F)


@dataclass(frozen=True)
class CellResult:
    m: int
    p: int
    sums_ok: bool
    identities_ok: bool
    fequald_ok: bool
    first_bad_n: int | None = None
    error: str | None = None

    @property
    def passed(self) -> bool:
        return self.sums_ok and self.identities_ok and self.fequald_ok


@dataclass
class VerificationReport:
    m_values: tuple[int, ...]
    p_values: tuple[int, ...]
    n_values: tuple[int, ...]
    cells: list[CellResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cells)

    @property
    def failures(self) -> list[CellResult]:
        return [c for c in self.cells if not c.passed]


def _verify_cell(m: int, p: int, n_values: tuple[int, ...],
                 cache: FamilyCache | None = None) -> CellResult:
    cache = (cache or FamilyCache()).extend(p)
    params = MetallicParams(m, p)
    cf = build_closed_form(params, cache)
    seq = metallic_terms(m, max(n_values))
    first_bad = None
    error = None
    for n in n_values:
        try:
            ok = closed_sum(cf, n, seq) == oracle_sum(m, p, n)
        except IntegralityError as exc:
            ok, error = False, str(exc)
        if not ok:
            first_bad = n
            break
    return CellResult(
        m, p,
        sums_ok=first_bad is None,
        identities_ok=check_induction_identities(params, cache),
        fequald_ok=all(check_fequald(cache, i) for i in range(1, p + 1)),
        first_bad_n=first_bad,
        error=error,
    )


def _verify_cell_star(args) -> CellResult:
    return _verify_cell(*args)


def verify_grid(m_range: Iterable[int], p_range: Iterable[int], n_range: Iterable[int],
                workers: int = 1) -> VerificationReport:
    """Check closed form against brute force over every (m, p) cell.

    Failures are recorded in the report rather than raised. Cells come back
    ordered by (m, p) whatever ``workers`` is.
    """
    m_values, p_values, n_values = tuple(m_range), tuple(p_range), tuple(n_range)
    if not (m_values and p_values and n_values):
        raise ValueError("grid ranges must be nonempty")
    for m, p in itertools.product(m_values, p_values):
        MetallicParams(m, p)
    if min(n_values) < 0:
        raise ValueError("n values must be >= 0")

    report = VerificationReport(m_values, p_values, n_values)
    grid = sorted(itertools.product(m_values, p_values))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.cells = list(pool.map(_verify_cell_star, [(m, p, n_values) for m, p in grid]))
    else:
        cache = FamilyCache()
        report.cells = [_verify_cell(m, p, n_values, cache) for m, p in grid]
    return report
