"""Batch command line: factorize a matrix file, write F, V and a report.

All indices the command line prints or writes (rows, columns, nodes) are
1-based so they match how the input file reads; the library API underneath
is 0-based.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from .errors import FactorizationError, IntermediateDimensionError
from .factorize import Classification, Factorization, factorize
from .linalg import Tolerances
from .matio import (
    CSV_FORMAT,
    MM_FORMAT,
    MatrixParseError,
    detect_format,
    read_matrix,
    write_matrix,
)

_STATUS = {
    Classification.TRIVIAL: "trivial factorization",
    Classification.RANK_TWO: "rank factorization: the rows generate a two-dimensional lattice-subspace",
    Classification.SUBLATTICE_RANK: "rank factorization: the rows of the matrix generate a sublattice",
    Classification.LATTICE_RANK: "rank factorization: the rows of the matrix generate a lattice-subspace",
    Classification.MINIMAL_LATTICE: "exact factorization through a minimal lattice-subspace",
}

_TOL_FLAGS = {
    "tol_rank": ("rank", "pivot threshold for rank decisions (default 1e-9)"),
    "tol_node": ("node", "zero threshold for node detection (default 1e-6)"),
    "tol_dedup": ("dedup", "equality threshold for merging column shares (default 1e-9)"),
    "tol_feas": ("feas", "feasibility threshold for the expansion solver (default 1e-9)"),
    "tol_recon": ("recon", "reconstruction residual bound (default 1e-8)"),
}


@dataclass
class RunReport:
    """What the batch run writes next to F and V (indices 1-based)."""

    classification: str
    p: int
    r: int
    mu: int
    basic_rows: list[int]
    nodes: list[int]
    vertex_source_columns: list[int]
    residual_inf: float
    dropped_zero_columns: list[int]
    warnings: list[str]
    timings_ms: dict[str, float]


def build_report(result: Factorization) -> RunReport:
    return RunReport(
        classification=result.classification.value,
        p=result.p,
        r=result.r,
        mu=result.mu,
        basic_rows=[i + 1 for i in result.basic_rows],
        nodes=[j + 1 for j in result.nodes],
        vertex_source_columns=[j + 1 for j in result.vertex_source_columns],
        residual_inf=result.residual_inf,
        dropped_zero_columns=[j + 1 for j in result.mask.dropped_columns],
        warnings=list(result.warnings),
        timings_ms={k: round(v, 3) for k, v in result.timings_ms.items()},
    )


def render_text_report(report: RunReport) -> str:
    lines = []
    for key, value in asdict(report).items():
        if key == "timings_ms":
            value = " ".join(f"{k}={v}" for k, v in value.items())
        elif isinstance(value, list):
            value = " ".join(str(v) for v in value) if value else "-"
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticenmf",
        description="Exact nonnegative factorization of a matrix file; writes F, V and a run report.",
    )
    parser.add_argument("input", help="matrix file (CSV rows or MatrixMarket array)")
    parser.add_argument(
        "--out-dir",
        default=".",
        help="directory for F, V and the report (default: current directory)",
    )
    parser.add_argument(
        "--format",
        choices=[CSV_FORMAT, MM_FORMAT],
        help="matrix format for input and outputs (default: inferred from the input extension)",
    )
    parser.add_argument(
        "--report",
        choices=["json", "text"],
        default="json",
        help="report style (default: json)",
    )
    parser.add_argument(
        "--strict",
        action="store_true",
        help="abort instead of warning when the factorization cannot reduce dimension",
    )
    for flag, (_, help_text) in _TOL_FLAGS.items():
        parser.add_argument(f"--{flag.replace('_', '-')}", type=float, default=None, help=help_text)
    return parser


def _tolerances_from(args: argparse.Namespace) -> Tolerances:
    overrides = {}
    for flag, (field, _) in _TOL_FLAGS.items():
        value = getattr(args, flag)
        if value is not None:
            overrides[field] = value
    return Tolerances(**overrides)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1

    path = Path(args.input)
    try:
        fmt = args.format or detect_format(path)
        a = read_matrix(path, fmt)
    except MatrixParseError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except OSError as err:
        print(f"error: cannot read {path}: {err}", file=sys.stderr)
        return 1

    bad = np.argwhere(~np.isfinite(a))
    if bad.size:
        i, j = bad[0]
        print(f"error: non-finite entry at row {i + 1}, column {j + 1}", file=sys.stderr)
        return 1
    bad = np.argwhere(a < 0.0)
    if bad.size:
        i, j = bad[0]
        print(
            f"error: negative entry {a[i, j]:g} at row {i + 1}, column {j + 1}",
            file=sys.stderr,
        )
        return 1

    try:
        tolerances = _tolerances_from(args)
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    try:
        result = factorize(a, tolerances, strict=args.strict)
    except IntermediateDimensionError as err:
        print(f"aborted: {err}", file=sys.stderr)
        return 3
    except FactorizationError as err:
        stage = f" [{err.stage}]" if err.stage else ""
        print(f"numerical failure{stage}: {err}", file=sys.stderr)
        return 2
    except ValueError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1

    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    extension = "csv" if fmt == CSV_FORMAT else "mtx"
    write_matrix(out_dir / f"F.{extension}", result.F, fmt)
    write_matrix(out_dir / f"V.{extension}", result.V, fmt)

    report = build_report(result)
    if args.report == "json":
        (out_dir / "report.json").write_text(
            json.dumps(asdict(report), indent=2) + "\n", encoding="utf-8"
        )
    else:
        (out_dir / "report.txt").write_text(render_text_report(report), encoding="utf-8")

    print(_STATUS[result.classification])
    print(f"p={result.p} r={result.r} mu={result.mu} residual_inf={result.residual_inf:.3e}")
    for warning in result.warnings:
        print(f"warning: {warning}")
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
