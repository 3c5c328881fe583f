"""Column, diagonal and sign patterns of the four coefficient triangles.

Each claim is checked over rows 0..i_max and reported under a stable id.
The id prefix ``b<k>`` names the group of claims it belongs to.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Iterator

from .families import FamilyCache, FamilyKind, TriangleTable, triangle_rows


@dataclass(frozen=True)
class Counterexample:
    table: str
    row: int
    col: int
    value: int
    expected: str

    def __str__(self) -> str:
        return f"T^({self.table})[{self.row},{self.col}] = {self.value}, expected {self.expected}"


@dataclass(frozen=True)
class PatternResult:
    pattern_id: str
    description: str
    passed: bool
    cells_checked: int
    counterexample: Counterexample | None = None


@dataclass(frozen=True)
class PatternReport:
    checked_rows: int
    results: tuple[PatternResult, ...]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)


@dataclass(frozen=True)
class _Tables:
    f: TriangleTable
    t: TriangleTable
    d: TriangleTable
    s: TriangleTable

    @property
    def i_max(self) -> int:
        return self.f.i_max


# A check yields (table, row, col, value, expected-or-None); None means the cell is fine.
_Check = Callable[[_Tables], Iterator[tuple[str, int, int, int, str | None]]]


def _sign(table_name: str) -> _Check:
    def check(tb: _Tables):
        tab: TriangleTable = getattr(tb, table_name)
        for i, row in enumerate(tab.rows):
            for j, v in enumerate(row):
                want = 1 if j % 2 == 0 else -1
                ok = v != 0 and (v > 0) == (want > 0)
                yield table_name, i, j, v, None if ok else f"sign {want:+d}"
    return check


def _t_nonnegative(tb: _Tables):
    for i, row in enumerate(tb.t.rows):
        for j, v in enumerate(row):
            ok = v >= 0 and (j % 2 == 0 or v == 0)
            yield "t", i, j, v, None if ok else ">= 0, and 0 at odd powers"


def _eq(table: str, i: int, j: int, value: int, expected: int):
    return table, i, j, value, None if value == expected else str(expected)


def _f_diag(tb: _Tables):
    for i in range(tb.i_max + 1):
        yield _eq("f", i, i, tb.f.entry(i, i), (-1) ** i)


def _top(table_name: str) -> _Check:
    def check(tb: _Tables):
        tab = getattr(tb, table_name)
        for i in range(tb.i_max + 1):
            yield _eq(table_name, i, i + 1, tab.entry(i, i + 1), (-1) ** (i + 1))
    return check


def _t_odd_zero(tb: _Tables):
    for i in range(tb.i_max + 1):
        for j in range(1, i + 1, 2):
            yield _eq("t", i, j, tb.t.entry(i, j), 0)


def _t_sub(tb: _Tables):
    for i in range(0, (tb.i_max - 1) // 2 + 1):
        yield _eq("t", 2 * i + 1, 2 * i, tb.t.entry(2 * i + 1, 2 * i), 2)


def _t_subsub(tb: _Tables):
    for i in range(0, (tb.i_max - 2) // 2 + 1):
        yield _eq("t", 2 * i + 2, 2 * i, tb.t.entry(2 * i + 2, 2 * i), 2 ** (2 * i + 3))


def _column0(tb: _Tables):
    for i in range(tb.i_max + 1):
        want = 2 ** i * factorial(i)
        yield _eq("f", i, 0, tb.f.entry(i, 0), want)
        yield _eq("t", i, 0, tb.t.entry(i, 0), want)
        yield _eq("d", i, 0, tb.d.entry(i, 0), want)
        yield _eq("d", i, 1, tb.d.entry(i, 1), -want)
        yield _eq("s", i, 0, tb.s.entry(i, 0), 2 * want)


def _f_column1(tb: _Tables):
    # magnitude only; the sign claim is covered by b1.sign-f
    for i in range(1, tb.i_max + 1):
        v = tb.f.entry(i, 1)
        want = 2 ** (i - 1) * factorial(i)
        yield "f", i, 1, v, None if abs(v) == want else f"|.| = {want}"


def _s_column1(tb: _Tables):
    for i in range(1, tb.i_max + 1):
        yield _eq("s", i, 1, tb.s.entry(i, 1), -3 * factorial(i) * 2 ** (i - 1))


def _d_diag(tb: _Tables):
    for i in range(tb.i_max + 1):
        yield _eq("d", i, i, tb.d.entry(i, i), (-1) ** i * 2 ** i)


def _f_subdiag(tb: _Tables):
    for i in range(tb.i_max):
        yield _eq("f", i + 1, i, tb.f.entry(i + 1, i), (-1) ** i * 2 ** (i + 1))


def _s_diag(tb: _Tables):
    for i in range(tb.i_max + 1):
        yield _eq("s", i, i, tb.s.entry(i, i), (-1) ** i * (2 ** i + 1))


PATTERNS: tuple[tuple[str, str, _Check], ...] = (
    ("b1.sign-f", "sign T^(f)[i,j] = (-1)^j", _sign("f")),
    ("b1.sign-d", "sign T^(d)[i,j] = (-1)^j", _sign("d")),
    ("b1.sign-s", "sign T^(s)[i,j] = (-1)^j", _sign("s")),
    ("b1.sign-t", "T^(t)[i,j] >= 0, zero at odd j", _t_nonnegative),
    ("b2.diag-f", "T^(f)[i,i] = (-1)^i", _f_diag),
    ("b2.top-d", "T^(d)[i,i+1] = (-1)^(i+1)", _top("d")),
    ("b2.top-s", "T^(s)[i,i+1] = (-1)^(i+1)", _top("s")),
    ("b2.odd-t", "T^(t)[i,2j+1] = 0", _t_odd_zero),
    ("b3.sub-t", "T^(t)[2i+1,2i] = 2", _t_sub),
    ("b3.subsub-t", "T^(t)[2i+2,2i] = 2^(2i+3)", _t_subsub),
    ("b4.column0", "T^(f)[i,0] = T^(t)[i,0] = T^(d)[i,0] = -T^(d)[i,1] = T^(s)[i,0]/2 = 2^i i!",
     _column0),
    ("b5.column1-f", "|T^(f)[i,1]| = 2^(i-1) i!, i >= 1", _f_column1),
    ("b5.column1-s", "T^(s)[i,1] = -3 i! 2^(i-1), i >= 1", _s_column1),
    ("b6.diag-d", "T^(d)[i,i] = (-1)^i 2^i", _d_diag),
    ("b6.subdiag-f", "T^(f)[i+1,i] = (-1)^i 2^(i+1)", _f_subdiag),
    ("b6.diag-s", "T^(s)[i,i] = (-1)^i (2^i + 1)", _s_diag),
)


def check_patterns(i_max: int, cache: FamilyCache | None = None) -> PatternReport:
    if i_max < 0:
        raise ValueError(f"i_max must be >= 0, got {i_max}")
    cache = (cache or FamilyCache()).extend(i_max)
    tables = _Tables(*(triangle_rows(k, i_max, cache) for k in FamilyKind))
    results = []
    for pid, desc, check in PATTERNS:
        n = 0
        bad = None
        for table, i, j, v, expected in check(tables):
            n += 1
            if expected is not None:
                bad = Counterexample(table, i, j, v, expected)
                break
        results.append(PatternResult(pid, desc, bad is None, n, bad))
    return PatternReport(i_max, tuple(results))
