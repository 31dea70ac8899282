"""Text formats: pencils, point sets, quadrics, subspaces.

All formats are newline-delimited; a ``#`` starts a comment running to the
end of the line. Printing is canonical (canonical scalars, single spaces,
no trailing whitespace), so print -> parse -> print is byte-identical.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .canonical import QuadraticForm, n_pairs
from .errors import FormatError, PencilError
from .field import FieldSpec
from .linalg import Matrix, Subspace
from .pencil import MatrixPencil
from .projective import ProjectivePoint, sort_points


def _lines(text: str) -> list[tuple[int, str]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if raw.lstrip().startswith("#"):
            continue
        out.append((no, body))
    return out


class _Reader:
    def __init__(self, text: str):
        self.lines = _lines(text)
        self.pos = 0

    def next_nonblank(self, what: str) -> tuple[int, str]:
        while self.pos < len(self.lines):
            no, body = self.lines[self.pos]
            self.pos += 1
            if body:
                return no, body
        last = self.lines[-1][0] if self.lines else 0
        raise FormatError(f"unexpected end of input, expected {what}", last + 1)

    def trailing(self):
        while self.pos < len(self.lines):
            no, body = self.lines[self.pos]
            self.pos += 1
            if body:
                raise FormatError(f"unexpected trailing content {body!r}", no)


def _header(reader: _Reader, keyword: str, nfields: int) -> tuple[int, list[str]]:
    no, body = reader.next_nonblank(f"'{keyword}' header")
    parts = body.split()
    if parts[0] != keyword or len(parts) != nfields + 1:
        raise FormatError(f"expected '{keyword}' header with {nfields} fields, got {body!r}", no)
    return no, parts[1:]


def _count(token: str, no: int, what: str) -> int:
    try:
        val = int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", no) from None
    if val < 0:
        raise FormatError(f"{what} must be nonnegative", no)
    return val


def _field(token: str, no: int) -> FieldSpec:
    try:
        return FieldSpec.parse(token)
    except FormatError as exc:
        raise FormatError(str(exc), no) from None


def _row(body: str, width: int, field: FieldSpec, no: int) -> list:
    toks = body.split()
    if len(toks) != width:
        raise FormatError(f"expected {width} scalars, got {len(toks)}", no)
    try:
        return [field.parse_scalar(t) for t in toks]
    except (FormatError, PencilError) as exc:
        raise FormatError(str(exc), no) from None


def _fmt_row(values: Iterable, field: FieldSpec) -> str:
    return " ".join(field.format_scalar(x) for x in values)


# ---------------------------------------------------------------------------
# pencils


def format_pencil(p: MatrixPencil) -> str:
    f = p.field
    lines = [f"pencil {p.n} {p.a} {p.b} {f}"]
    for i, m in enumerate(p.alphas, start=1):
        lines.append(f"matrix {i}")
        for row in m.data:
            lines.append(_fmt_row(row, f))
    return "\n".join(lines) + "\n"


def parse_pencil(text: str) -> MatrixPencil:
    rd = _Reader(text)
    no, (n_s, a_s, b_s, f_s) = _header(rd, "pencil", 4)
    n, a, b = (_count(t, no, w) for t, w in ((n_s, "n"), (a_s, "a"), (b_s, "b")))
    if n < 1:
        raise FormatError("a pencil needs n >= 1", no)
    f = _field(f_s, no)
    mats = []
    for i in range(1, n + 1):
        no, body = rd.next_nonblank(f"'matrix {i}'")
        if body.split() != ["matrix", str(i)]:
            raise FormatError(f"expected 'matrix {i}', got {body!r}", no)
        rows = []
        for _ in range(b if a > 0 else 0):
            no, body = rd.next_nonblank(f"row of matrix {i}")
            rows.append(_row(body, a, f, no))
        arr = f.array(rows) if rows else f.zeros((b, a))
        mats.append(Matrix(arr.reshape(b, a), f, canonical=True))
    rd.trailing()
    return MatrixPencil(mats, a, b, f)


# ---------------------------------------------------------------------------
# point sets


def format_points(points: Sequence[ProjectivePoint], m: int, field: FieldSpec) -> str:
    pts = sort_points(points)
    lines = [f"points {m} {len(pts)} {field}"]
    lines += [_fmt_row(pt.coords, field) for pt in pts]
    return "\n".join(lines) + "\n"


def parse_points(text: str) -> tuple[int, FieldSpec, list[ProjectivePoint]]:
    rd = _Reader(text)
    no, (m_s, c_s, f_s) = _header(rd, "points", 3)
    m, count = _count(m_s, no, "m"), _count(c_s, no, "count")
    f = _field(f_s, no)
    pts = []
    for _ in range(count):
        no, body = rd.next_nonblank("point")
        try:
            pts.append(ProjectivePoint(_row(body, m, f, no), f))
        except PencilError as exc:
            raise FormatError(str(exc), no) from None
    rd.trailing()
    return m, f, pts


# ---------------------------------------------------------------------------
# quadrics


def format_quadrics(quadrics: Sequence[QuadraticForm], n: int, field: FieldSpec) -> str:
    lines = [f"quadrics {n} {len(quadrics)} {field}"]
    lines += [_fmt_row(q.coeffs, field) for q in quadrics]
    return "\n".join(lines) + "\n"


def parse_quadrics(text: str) -> tuple[int, FieldSpec, list[QuadraticForm]]:
    rd = _Reader(text)
    no, (n_s, m_s, f_s) = _header(rd, "quadrics", 3)
    n, m = _count(n_s, no, "n"), _count(m_s, no, "m")
    if n < 1:
        raise FormatError("quadrics need n >= 1", no)
    f = _field(f_s, no)
    out = []
    for _ in range(m):
        no, body = rd.next_nonblank("quadric coefficients")
        out.append(QuadraticForm(n, tuple(_row(body, n_pairs(n), f, no)), f))
    rd.trailing()
    return n, f, out


# ---------------------------------------------------------------------------
# subspaces


def format_subspace(U: Subspace) -> str:
    lines = [f"subspace {U.ambient_dim} {U.dim} {U.field}"]
    lines += [_fmt_row(row, U.field) for row in U.basis.data]
    return "\n".join(lines) + "\n"


def parse_subspace(text: str) -> Subspace:
    rd = _Reader(text)
    no, (m_s, d_s, f_s) = _header(rd, "subspace", 3)
    m, d = _count(m_s, no, "ambient"), _count(d_s, no, "dim")
    f = _field(f_s, no)
    rows = []
    for _ in range(d):
        no, body = rd.next_nonblank("basis row")
        rows.append(_row(body, m, f, no))
    rd.trailing()
    return Subspace.span(np.array(rows, dtype=object) if rows else [], f, m)
