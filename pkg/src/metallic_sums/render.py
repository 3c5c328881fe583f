"""Text renderings of closed forms and triangles, plus the b-file format.

A b-file flattens a triangle row-major under one running index starting
at 0: one ``"<index> <value>"`` pair per line, newline-terminated.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .closedform import ClosedForm
from .families import TriangleTable
from .polycore import Polynomial


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly_descending(poly: Polynomial, var: str = "n") -> str:
    """E.g. ``n^2 - 2n + 5`` or ``(1/2)n^3 - (3/2)n^2 + 3n - 7/2``."""
    terms = []
    for k in range(len(poly) - 1, -1, -1):
        c = poly.coeff(k)
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            if mag == 1:
                body = power
            elif mag.denominator == 1:
                body = f"{mag.numerator}{power}"
            else:
                body = f"({format_rational(mag)}){power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def closed_form_table(cf: ClosedForm) -> str:
    m, p = cf.params.m, cf.params.p
    t0 = cf.T0
    if t0 == 0:
        tail = ""
    else:
        tail = f" {'-' if t0 > 0 else '+'} {format_rational(abs(t0))}"
    return "\n".join([
        f"m = {m}, p = {p}",
        f"F(n) = {format_poly_descending(cf.F)}",
        f"T(n) = {format_poly_descending(cf.T)}",
        f"D(n) = {format_poly_descending(cf.D)}",
        f"T0 = {format_rational(t0)}",
        f"sum_{{k=0..n}} k^{p} G_k = F(n) G_n + T(n) G_(n+1){tail}",
    ]) + "\n"


def closed_form_kv(cf: ClosedForm) -> str:
    lines = [f"m={cf.params.m}", f"p={cf.params.p}"]
    for name in ("F", "T", "D"):
        poly: Polynomial = getattr(cf, name)
        lines.append(f"{name}.degree={poly.degree()}")
        for k in range(cf.params.p + 1):
            c = poly.coeff(k)
            lines.append(f"{name}.{k}.num={c.numerator}")
            lines.append(f"{name}.{k}.den={c.denominator}")
    lines.append(f"T0.num={cf.T0.numerator}")
    lines.append(f"T0.den={cf.T0.denominator}")
    return "\n".join(lines) + "\n"


def closed_form_csv(cf: ClosedForm) -> str:
    # ascending coefficients, one polynomial per line
    lines = []
    for name in ("F", "T", "D"):
        poly: Polynomial = getattr(cf, name)
        lines.append(",".join([name] + [format_rational(poly.coeff(k)) for k in range(cf.params.p + 1)]))
    lines.append(f"T0,{format_rational(cf.T0)}")
    return "\n".join(lines) + "\n"


def triangle_table(tab: TriangleTable) -> str:
    """Aligned grid in the paper's orientation; absent cells are blank."""
    name = tab.kind.value
    width = max((len(r) for r in tab.rows), default=0)
    header = [""] + [f"X^{j}" for j in range(width)]
    body = [[f"{name}_{i}(X)"] + [str(v) for v in row] + [""] * (width - len(row))
            for i, row in enumerate(tab.rows)]
    grid = [header] + body
    widths = [max(len(r[c]) for r in grid) for c in range(width + 1)]
    lines = []
    for r in grid:
        cells = [r[0].ljust(widths[0])] + [r[c].rjust(widths[c]) for c in range(1, width + 1)]
        lines.append(" | ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def triangle_csv(tab: TriangleTable) -> str:
    return "".join(",".join(str(v) for v in row) + "\n" for row in tab.rows)


def triangle_kv(tab: TriangleTable) -> str:
    name = tab.kind.value
    return "".join(f"{name}.{i}={','.join(str(v) for v in row)}\n"
                   for i, row in enumerate(tab.rows))


def triangle_bfile(tab: TriangleTable) -> str:
    return "".join(f"{k} {v}\n" for k, v in enumerate(tab.flatten()))


def parse_bfile(text: str) -> list[int]:
    """Values of a b-file, checking the index runs 0, 1, 2, ... without gaps."""
    values = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {line!r}")
        idx, val = int(parts[0]), int(parts[1])
        if idx != len(values):
            raise ValueError(f"line {lineno}: index {idx} out of sequence, expected {len(values)}")
        values.append(val)
    return values


def rechunk(values: Sequence[int], row_lengths: Sequence[int]) -> list[list[int]]:
    if sum(row_lengths) != len(values):
        raise ValueError(f"{len(values)} values cannot fill rows of total length {sum(row_lengths)}")
    rows, pos = [], 0
    for n in row_lengths:
        rows.append(list(values[pos:pos + n]))
        pos += n
    return rows
