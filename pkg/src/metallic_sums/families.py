"""The four simultaneous polynomial families f, t, d, s.

They are defined by

    f_0 = 1
    t_i = sum_{j=0..i}   C(i,j) X^(i-j)   f_j
    d_i = t_i - X f_i
    s_i = f_i + d_i
    f_i = sum_{j=0..i-1} C(i,j) X^(i-1-j) s_j      (i >= 1)

and are computed together in index order, since f_i needs s_0..s_{i-1}.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .polycore import ONE, X, Polynomial, binomial


class FamilyKind(enum.Enum):
    F = "f"
    T = "t"
    D = "d"
    S = "s"

    @classmethod
    def parse(cls, name: str | FamilyKind) -> FamilyKind:
        if isinstance(name, cls):
            return name
        try:
            return cls(str(name).lower())
        except ValueError:
            raise ValueError(f"unknown family {name!r}; expected one of f, t, d, s") from None


@dataclass
class FamilyCache:
    """Memoized family members for indices 0..max_index.

    Extension is single-writer; concurrent readers of already computed
    entries are fine.
    """

    f_list: list[Polynomial] = field(default_factory=list)
    t_list: list[Polynomial] = field(default_factory=list)
    d_list: list[Polynomial] = field(default_factory=list)
    s_list: list[Polynomial] = field(default_factory=list)

    @property
    def max_index(self) -> int:
        return len(self.s_list) - 1

    def extend(self, i_max: int) -> FamilyCache:
        if i_max < 0:
            raise ValueError(f"i_max must be >= 0, got {i_max}")
        for i in range(len(self.s_list), i_max + 1):
            if i == 0:
                f_i = ONE
            else:
                f_i = Polynomial()
                for j in range(i):
                    f_i = f_i + Polynomial.monomial(i - 1 - j, binomial(i, j)) * self.s_list[j]
            self.f_list.append(f_i)
            t_i = Polynomial()
            for j in range(i + 1):
                t_i = t_i + Polynomial.monomial(i - j, binomial(i, j)) * self.f_list[j]
            d_i = t_i - X * f_i
            self.t_list.append(t_i)
            self.d_list.append(d_i)
            self.s_list.append(f_i + d_i)
        return self

    def get(self, kind: FamilyKind | str, i: int) -> Polynomial:
        kind = FamilyKind.parse(kind)
        if not 0 <= i <= self.max_index:
            raise IndexError(
                f"{kind.value}_{i} not cached (max_index={self.max_index}); extend the cache first"
            )
        return self._list(kind)[i]

    def _list(self, kind: FamilyKind) -> list[Polynomial]:
        return {
            FamilyKind.F: self.f_list,
            FamilyKind.T: self.t_list,
            FamilyKind.D: self.d_list,
            FamilyKind.S: self.s_list,
        }[kind]


def extend_cache(cache: FamilyCache, i_max: int) -> FamilyCache:
    return cache.extend(i_max)


def family_poly(cache: FamilyCache, kind: FamilyKind | str, i: int) -> Polynomial:
    return cache.get(kind, i)


@dataclass(frozen=True)
class TriangleTable:
    """Integer coefficient rows of one family, ascending powers of X.

    Rows are trimmed at the last nonzero coefficient; interior zeros
    (the odd powers of the t-family) are kept as explicit 0 entries.
    """

    kind: FamilyKind
    rows: tuple[tuple[int, ...], ...]

    @property
    def i_max(self) -> int:
        return len(self.rows) - 1

    def entry(self, i: int, j: int) -> int:
        """T_{i,j}; cells beyond a row's end read as 0."""
        row = self.rows[i]
        return row[j] if 0 <= j < len(row) else 0

    def flatten(self) -> list[int]:
        return [v for row in self.rows for v in row]


def triangle_rows(kind: FamilyKind | str, i_max: int,
                  cache: FamilyCache | None = None) -> TriangleTable:
    kind = FamilyKind.parse(kind)
    if i_max < 0:
        raise ValueError(f"i_max must be >= 0, got {i_max}")
    cache = (cache or FamilyCache()).extend(i_max)
    rows = tuple(tuple(cache.get(kind, i).int_coeffs()) for i in range(i_max + 1))
    return TriangleTable(kind, rows)


def check_fequald(cache: FamilyCache, i: int) -> bool:
    """Whether f_i == sum_{j=0..i} C(i,j) X^(i-j) d_j holds exactly (i >= 1)."""
    if i < 1:
        raise ValueError(f"identity is stated for i >= 1, got {i}")
    rhs = Polynomial()
    for j in range(i + 1):
        rhs = rhs + Polynomial.monomial(i - j, binomial(i, j)) * cache.get(FamilyKind.D, j)
    return rhs == cache.get(FamilyKind.F, i)
