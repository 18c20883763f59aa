"""QMAT v1 text files.

::

    # optional comment lines
    QMAT 2 2
    1 0.5i-2k
    j 0

Entries use the scalar syntax of :func:`qlinalg.quaternion.parse_quaternion`
and are written with 17 significant digits, so a write/read cycle is exact.
A stream may hold several matrices back to back.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .errors import ParseError
from .qmat import QuatMatrix
from .quaternion import Quaternion, format_quaternion, parse_quaternion


def format_qmat(a: QuatMatrix, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend("# " + c for c in comment.splitlines())
    lines.append(f"QMAT {a.rows} {a.cols}")
    for row in a.data:
        lines.append(" ".join(format_quaternion(Quaternion(*e)) for e in row))
    return "\n".join(lines) + "\n"


def format_complex_qmat(z: np.ndarray, comment: str | None = None) -> str:
    """Write a complex matrix as QMAT with entries ``a+bi``."""
    z = np.atleast_2d(z)
    arr = np.zeros(z.shape + (4,))
    arr[..., 0] = z.real
    arr[..., 1] = z.imag
    return format_qmat(QuatMatrix(arr), comment)


def parse_qmat_stream(text: str) -> list[QuatMatrix]:
    lines = [
        (no, line.strip())
        for no, line in enumerate(text.splitlines(), start=1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    out = []
    pos = 0
    while pos < len(lines):
        no, header = lines[pos]
        fields = header.split()
        if len(fields) != 3 or fields[0] != "QMAT":
            raise ParseError(f"line {no}: expected 'QMAT <rows> <cols>', got {header!r}")
        try:
            rows, cols = int(fields[1]), int(fields[2])
        except ValueError:
            raise ParseError(f"line {no}: bad dimensions in {header!r}") from None
        if rows < 1 or cols < 1:
            raise ParseError(f"line {no}: dimensions must be positive")
        if pos + rows > len(lines) - 1:
            raise ParseError(f"line {no}: expected {rows} rows, file ends early")
        data = np.empty((rows, cols, 4))
        for m in range(rows):
            rno, row = lines[pos + 1 + m]
            tokens = row.split()
            if len(tokens) != cols:
                raise ParseError(f"line {rno}: expected {cols} entries, found {len(tokens)}")
            for n, tok in enumerate(tokens):
                try:
                    data[m, n] = parse_quaternion(tok).components
                except ParseError as exc:
                    raise ParseError(f"line {rno}: {exc}") from None
        out.append(QuatMatrix(data))
        pos += rows + 1
    return out


def parse_qmat(text: str) -> QuatMatrix:
    mats = parse_qmat_stream(text)
    if len(mats) != 1:
        raise ParseError(f"expected exactly one matrix, found {len(mats)}")
    return mats[0]


def load_qmat(path) -> QuatMatrix:
    return parse_qmat(Path(path).read_text(encoding="utf-8"))


def save_qmat(path, a: QuatMatrix, comment: str | None = None) -> None:
    Path(path).write_text(format_qmat(a, comment), encoding="utf-8")
