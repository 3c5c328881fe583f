"""Exact dense polynomials over the rationals.

Coefficients are stored in ascending powers (index ``i`` holds the
coefficient of ``X**i``) as :class:`fractions.Fraction`, with trailing
zeros trimmed so the zero polynomial is the empty tuple.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Number = Union[int, Fraction]

# degree of the zero polynomial; compares below every int
NEG_INF = float("-inf")


def _as_fraction(c: Number) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational required, got {type(c).__name__}")


class Polynomial:
    """Immutable univariate polynomial with exact rational coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff: Number = 1) -> Polynomial:
        if power < 0:
            raise ValueError("negative power")
        return cls([0] * power + [coeff])

    @classmethod
    def constant(cls, c: Number) -> Polynomial:
        return cls([c])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def degree(self) -> Union[int, float]:
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self._coeffs) - 1 if self._coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def int_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError(f"non-integer coefficients in {self!r}")
        return [c.numerator for c in self._coeffs]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return poly_scale(self, -1)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, poly_scale(other, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return poly_scale(self, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __call__(self, x: Number) -> Fraction:
        return poly_eval(self, x)


ZERO = Polynomial()
ONE = Polynomial([1])
X = Polynomial([0, 1])


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    ca, cb = a.coeffs, b.coeffs
    if len(ca) < len(cb):
        ca, cb = cb, ca
    out = list(ca)
    for i, c in enumerate(cb):
        out[i] += c
    return Polynomial(out)


def poly_scale(a: Polynomial, c: Number) -> Polynomial:
    c = _as_fraction(c)
    if c == 0:
        return ZERO
    return Polynomial([x * c for x in a.coeffs])


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    ca, cb = a.coeffs, b.coeffs
    if not ca or not cb:
        return ZERO
    out = [Fraction(0)] * (len(ca) + len(cb) - 1)
    for i, x in enumerate(ca):
        if x == 0:
            continue
        for j, y in enumerate(cb):
            if y:
                out[i + j] += x * y
    return Polynomial(out)


def poly_eval(a: Polynomial, x: Number) -> Fraction:
    """Horner evaluation; the constant term always contributes (0**0 == 1)."""
    x = _as_fraction(x)
    acc = Fraction(0)
    for c in reversed(a.coeffs):
        acc = acc * x + c
    return acc


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def check_trinomial_identity(p: int, i: int, j: int) -> bool:
    """C(p,i)*C(i,j) == C(p-j,i-j)*C(p,j) for 0 <= j <= i <= p."""
    if not 0 <= j <= i <= p:
        raise ValueError(f"need 0 <= j <= i <= p, got p={p}, i={i}, j={j}")
    return binomial(p, i) * binomial(i, j) == binomial(p - j, i - j) * binomial(p, j)


def shift(a: Polynomial, delta: int) -> Polynomial:
    """Return the polynomial ``a(X + delta)``.

    ``shift(R, -1)`` is the polynomial R-bar with R-bar(X + 1) = R(X).
    Computed by binomial re-expansion of each power ``(X + delta)**k``,
    in integers over a common denominator.
    """
    if not isinstance(delta, int):
        raise TypeError(f"shift amount must be an integer, got {type(delta).__name__}")
    cs = a.coeffs
    if not cs:
        return ZERO
    den = math.lcm(*(c.denominator for c in cs))
    nums = [c.numerator * (den // c.denominator) for c in cs]
    out = [0] * len(nums)
    for k, c in enumerate(nums):
        if c == 0:
            continue
        # (X + delta)^k = sum_j C(k, j) delta^(k-j) X^j
        dp = 1
        for j in range(k, -1, -1):
            out[j] += c * math.comb(k, j) * dp
            dp *= delta
    return Polynomial(Fraction(n, den) for n in out)


def bar(a: Polynomial) -> Polynomial:
    return shift(a, -1)
