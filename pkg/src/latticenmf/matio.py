"""Dense matrix files: CSV rows and the MatrixMarket array format."""

from __future__ import annotations

from pathlib import Path

import numpy as np

CSV_FORMAT = "csv"
MM_FORMAT = "mtx"
_MM_HEADER = "%%MatrixMarket matrix array real general"


class MatrixParseError(ValueError):
    """The input file cannot be parsed into a rectangular real matrix."""


def detect_format(path) -> str:
    suffix = Path(path).suffix.lower()
    if suffix in (".mtx", ".mm"):
        return MM_FORMAT
    if suffix in (".csv", ".txt"):
        return CSV_FORMAT
    raise MatrixParseError(f"cannot infer matrix format from {path}; pass --format")


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def read_matrix(path, fmt: str | None = None) -> np.ndarray:
    fmt = fmt or detect_format(path)
    if fmt == CSV_FORMAT:
        return _read_csv(path)
    if fmt == MM_FORMAT:
        return _read_mm(path)
    raise MatrixParseError(f"unknown matrix format {fmt!r}")


def write_matrix(path, a, fmt: str | None = None) -> None:
    a = np.asarray(a, dtype=float)
    fmt = fmt or detect_format(path)
    if fmt == CSV_FORMAT:
        _write_csv(path, a)
    elif fmt == MM_FORMAT:
        _write_mm(path, a)
    else:
        raise MatrixParseError(f"unknown matrix format {fmt!r}")


def _read_csv(path) -> np.ndarray:
    rows: list[list[float]] = []
    width: int | None = None
    with open(path, encoding="utf-8") as fh:
        for line_no, line in enumerate(fh, start=1):
            text = line.strip()
            if not text:
                continue
            values = []
            for token in text.split(","):
                try:
                    values.append(float(token))
                except ValueError:
                    raise MatrixParseError(
                        f"{path}: line {line_no}: invalid number {token.strip()!r}"
                    ) from None
            if width is None:
                width = len(values)
            elif len(values) != width:
                raise MatrixParseError(
                    f"{path}: line {line_no}: expected {width} values, found {len(values)}"
                )
            rows.append(values)
    if not rows:
        raise MatrixParseError(f"{path}: no matrix rows found")
    return np.array(rows, dtype=float)


def _write_csv(path, a: np.ndarray) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for row in a:
            fh.write(",".join(_fmt(x) for x in row) + "\n")


def _read_mm(path) -> np.ndarray:
    with open(path, encoding="utf-8") as fh:
        lines = fh.readlines()
    if not lines:
        raise MatrixParseError(f"{path}: empty file")
    header = lines[0].split()
    expected = _MM_HEADER.split()
    if len(header) != 5 or header[0] != expected[0]:
        raise MatrixParseError(f"{path}: line 1: not a MatrixMarket header")
    kind = [token.lower() for token in header[1:]]
    if kind[0] != "matrix" or kind[1] != "array" or kind[3] != "general":
        raise MatrixParseError(f"{path}: line 1: need 'matrix array ... general', got {lines[0].strip()!r}")
    if kind[2] not in ("real", "integer", "double"):
        raise MatrixParseError(f"{path}: line 1: unsupported field {header[3]!r}")

    shape: tuple[int, int] | None = None
    values: list[float] = []
    for line_no, line in enumerate(lines[1:], start=2):
        text = line.strip()
        if not text or text.startswith("%"):
            continue
        if shape is None:
            parts = text.split()
            if len(parts) != 2:
                raise MatrixParseError(f"{path}: line {line_no}: expected 'rows cols'")
            try:
                shape = (int(parts[0]), int(parts[1]))
            except ValueError:
                raise MatrixParseError(
                    f"{path}: line {line_no}: invalid dimensions {text!r}"
                ) from None
            if shape[0] <= 0 or shape[1] <= 0:
                raise MatrixParseError(f"{path}: line {line_no}: dimensions must be positive")
            continue
        for token in text.split():
            try:
                values.append(float(token))
            except ValueError:
                raise MatrixParseError(
                    f"{path}: line {line_no}: invalid number {token!r}"
                ) from None
    if shape is None:
        raise MatrixParseError(f"{path}: missing dimension line")
    n, m = shape
    if len(values) != n * m:
        raise MatrixParseError(f"{path}: expected {n * m} values, found {len(values)}")
    # The array body is stored column-major.
    return np.array(values, dtype=float).reshape((n, m), order="F")


def _write_mm(path, a: np.ndarray) -> None:
    n, m = a.shape
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(_MM_HEADER + "\n")
        fh.write(f"{n} {m}\n")
        for j in range(m):
            for i in range(n):
                fh.write(_fmt(a[i, j]) + "\n")
