"""Command line entry point.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 for usage errors.
"""
from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence

from . import render
from .closedform import MetallicParams, build_closed_form, verify_grid
from .families import FamilyKind, triangle_rows
from .patterns import check_patterns

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FORMATS = ("table", "csv", "bfile", "kv")


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metallic-sums",
        description="Closed forms for sum_{k<=n} k^p G_k over metallic sequences, "
                    "the f/t/d/s coefficient triangles, and their verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cf = sub.add_parser("closed-form", help="print F(n), T(n), D(n) and T0 for given m, p")
    cf.add_argument("--m", type=_positive, default=1, help="metallicity (default 1)")
    cf.add_argument("--p", type=_positive, default=2, help="power (default 2)")
    cf.add_argument("--format", choices=("table", "csv", "kv"), default="table")

    tri = sub.add_parser(
        "triangle", help="print a coefficient triangle",
        description="Rows i = 0..i-max of the chosen family, ascending powers of X. "
                    "The bfile format numbers cells row-major from index 0.",
    )
    tri.add_argument("--kind", choices=[k.value for k in FamilyKind], default="f")
    tri.add_argument("--i-max", type=_nonneg, default=30)
    tri.add_argument("--format", choices=FORMATS, default="table")

    ver = sub.add_parser("verify", help="check closed forms against brute force on a grid")
    ver.add_argument("--m-max", type=_positive, default=8)
    ver.add_argument("--p-max", type=_positive, default=8)
    ver.add_argument("--n-max", type=_nonneg, default=60)
    ver.add_argument("--workers", type=_positive, default=1)
    ver.add_argument("--timing", action="store_true", help="append elapsed time to the summary")

    pat = sub.add_parser("patterns", help="check the triangle patterns up to a row bound")
    pat.add_argument("--i-max", type=_nonneg, default=30)
    pat.add_argument("--timing", action="store_true", help="append elapsed time to the summary")
    return parser


def cmd_closed_form(m: int, p: int, fmt: str = "table") -> tuple[str, int]:
    try:
        params = MetallicParams(m, p)
    except ValueError as exc:
        return f"error: {exc}\n", EXIT_USAGE
    cf = build_closed_form(params)
    renderers = {
        "table": render.closed_form_table,
        "csv": render.closed_form_csv,
        "kv": render.closed_form_kv,
    }
    if fmt not in renderers:
        return f"error: format {fmt!r} not available for closed-form\n", EXIT_USAGE
    return renderers[fmt](cf), EXIT_OK


def cmd_triangle(kind: str, i_max: int, fmt: str = "table") -> tuple[str, int]:
    try:
        tab = triangle_rows(FamilyKind.parse(kind), i_max)
    except ValueError as exc:
        return f"error: {exc}\n", EXIT_USAGE
    renderers = {
        "table": render.triangle_table,
        "csv": render.triangle_csv,
        "bfile": render.triangle_bfile,
        "kv": render.triangle_kv,
    }
    if fmt not in renderers:
        return f"error: unknown format {fmt!r}\n", EXIT_USAGE
    return renderers[fmt](tab), EXIT_OK


def cmd_verify(m_max: int, p_max: int, n_max: int, workers: int = 1,
               timing: bool = False) -> tuple[str, int]:
    if m_max < 1 or p_max < 1 or n_max < 0:
        return "error: need m_max >= 1, p_max >= 1, n_max >= 0\n", EXIT_USAGE
    start = time.perf_counter()
    report = verify_grid(range(1, m_max + 1), range(1, p_max + 1), range(n_max + 1),
                         workers=workers)
    elapsed = time.perf_counter() - start
    lines = []
    for c in report.cells:
        status = "PASS" if c.passed else "FAIL"
        detail = f"sums={'ok' if c.sums_ok else f'bad at n={c.first_bad_n}'} " \
                 f"identities={'ok' if c.identities_ok else 'bad'} " \
                 f"fequald={'ok' if c.fequald_ok else 'bad'}"
        if c.error:
            detail += f" ({c.error})"
        lines.append(f"{status} m={c.m} p={c.p} {detail}")
    n_cells = len(report.cells)
    if report.passed:
        summary = f"all {n_cells} cells passed (n = 0..{n_max})"
    else:
        summary = f"{len(report.failures)} of {n_cells} cells FAILED (n = 0..{n_max})"
    if timing:
        summary += f" in {elapsed:.2f}s"
    lines.append(summary)
    return "\n".join(lines) + "\n", EXIT_OK if report.passed else EXIT_FAIL


def cmd_patterns(i_max: int, timing: bool = False) -> tuple[str, int]:
    if i_max < 0:
        return f"error: i_max must be >= 0, got {i_max}\n", EXIT_USAGE
    start = time.perf_counter()
    report = check_patterns(i_max)
    elapsed = time.perf_counter() - start
    lines = []
    for r in report.results:
        line = f"{'PASS' if r.passed else 'FAIL'} {r.pattern_id}: {r.description} [{r.cells_checked} cells]"
        if r.counterexample:
            line += f" first counterexample: {r.counterexample}"
        lines.append(line)
    n_pass = sum(r.passed for r in report.results)
    summary = f"{n_pass}/{len(report.results)} patterns passed for rows 0..{i_max}"
    if timing:
        summary += f" in {elapsed:.2f}s"
    lines.append(summary)
    return "\n".join(lines) + "\n", EXIT_OK if report.passed else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "closed-form":
        out, code = cmd_closed_form(args.m, args.p, args.format)
    elif args.command == "triangle":
        out, code = cmd_triangle(args.kind, args.i_max, args.format)
    elif args.command == "verify":
        out, code = cmd_verify(args.m_max, args.p_max, args.n_max, args.workers, args.timing)
    else:
        out, code = cmd_patterns(args.i_max, args.timing)
    (sys.stderr if code == EXIT_USAGE else sys.stdout).write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
