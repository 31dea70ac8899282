"""Reflection functors, preprojectives and the E_0 saturation harness."""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

import numpy as np

from .eigen import has_sufficiently_many
from .errors import EnumerationUnsupportedError, UnsupportedParameterError
from .field import FieldSpec
from .linalg import Matrix, Subspace, kernel_basis
from .pencil import DimensionVector, MatrixPencil, reduced_decomposition, simple
from .projective import ProjectivePoint, e_vector


@dataclass(frozen=True)
class E0Set:
    n: int
    points: tuple[ProjectivePoint, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)


def e0_set(n: int, field: FieldSpec) -> E0Set:
    """<e_{n-1}>, <e_n>, <e_i + e_{i+1}> for i < n, then <e_1 + e_n>."""
    if n < 3:
        raise UnsupportedParameterError(f"E_0 needs n >= 3 (its points collide for n={n})")
    pts = [e_vector(n, [n - 2], field), e_vector(n, [n - 1], field)]
    pts += [e_vector(n, [i, i + 1], field) for i in range(n - 1)]
    pts.append(e_vector(n, [0, n - 1], field))
    return E0Set(n, tuple(pts))


def sigma(p: MatrixPencil) -> MatrixPencil:
    """Sink reflection plus relabel: (a, b; alpha) -> (z, a; omega).

    U is the kernel of (u_1..u_n) -> sum alpha_i u_i on (k^a)^n; omega_i is
    the i-th k^a block of U's echelon basis, as an a x z matrix.
    """
    f, a, n = p.field, p.a, p.n
    U = kernel_basis(p.combined())
    z = U.dim
    B = U.basis.data
    mats = [Matrix(np.ascontiguousarray(B[:, i * a : (i + 1) * a].T), f, canonical=True) for i in range(n)]
    if z == 0 or a == 0:
        mats = [Matrix.zeros(a, z, f) for _ in range(n)]
    return MatrixPencil(mats, z, a, f)


def sigma_minus(p: MatrixPencil) -> MatrixPencil:
    """Source reflection plus relabel: (a, b; alpha) -> (b, nb - r; omega).

    V is the cokernel of v -> (alpha_1 v, ..., alpha_n v) in (k^b)^n,
    presented on the standard coordinates complementary to the echelon
    pivots of the image; omega_i is block inclusion followed by the quotient.
    """
    f, b, n = p.field, p.b, p.n
    total = n * b
    image = Subspace.span(p.stacked().T.data, f, total) if p.a else Subspace.zero(total, f)
    comp = image.complement_coordinates()
    # quotient x -> (x - sum_k x[piv_k] u_k) restricted to comp
    Q = f.zeros((len(comp), total))
    for r, c in enumerate(comp):
        Q[r, c] = f.one()
    for u, pc in zip(image.basis.data, image.pivots):
        Q[:, pc] = -u[comp] if comp else Q[:, pc]
    if f.p is not None:
        Q %= f.p
    mats = [Matrix(np.ascontiguousarray(Q[:, i * b : (i + 1) * b]), f, canonical=True) for i in range(n)]
    return MatrixPencil(mats, b, len(comp), f)


def coxeter_dim(dim: tuple[int, int], n: int) -> DimensionVector:
    """Dimension of sigma^2 under the surjectivity side conditions."""
    a, b = dim
    return DimensionVector((n * n - 1) * a - n * b, n * a - b)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OrbitRecord:
    t: int
    dim: DimensionVector
    e0: bool | None = None
    full: bool | None = None
    stripped: int = 0  # S(1) summands removed before the E_0 test


@dataclass
class OrbitReport:
    records: list[OrbitRecord] = dc_field(default_factory=list)

    @property
    def first_sufficient_t(self) -> int | None:
        return next((r.t for r in self.records if r.e0), None)

    def format(self) -> str:
        lines = []
        for r in self.records:
            flag = "skipped" if r.e0 is None else ("yes" if r.e0 else "no")
            lines.append(f"t={r.t} dim=({r.dim.a},{r.dim.b}) e0={flag}")
            if r.stripped:
                lines.append(f"# t={r.t} tested on the reduced part after splitting off S(1)^{r.stripped}")
        first = self.first_sufficient_t
        lines.append(f"first_sufficient_t={'none' if first is None else first}")
        return "\n".join(lines) + "\n"


def _e0_sufficient(p: MatrixPencil, e0: E0Set, threads: int = 1) -> tuple[bool, int]:
    dec = reduced_decomposition(p)
    return has_sufficiently_many(dec.reduced, list(e0.points), threads), dec.s


def sigma_iterate(p: MatrixPencil, t: int, inverse: bool = False, e0_track: bool = False,
                  full_track: bool = False, max_dim: int | None = None,
                  threads: int = 1) -> tuple[MatrixPencil, OrbitReport]:
    """Apply sigma (or sigma_minus) ``t`` times, stopping early at the zero pencil.

    With ``e0_track``, each iterate whose dimensions stay within ``max_dim``
    is tested for E_0-sufficiency on its reduced part (prime fields, n >= 3).
    """
    if t < 0:
        raise UnsupportedParameterError("t must be >= 0")
    step = sigma_minus if inverse else sigma
    track = e0_track and p.field.p is not None and p.n >= 3
    e0 = e0_set(p.n, p.field) if track else None
    report = OrbitReport()
    cur = p
    for i in range(t + 1):
        if i > 0:
            cur = step(cur)
        flag = full = None
        stripped = 0
        if track and (max_dim is None or max(cur.a, cur.b) <= max_dim):
            flag, stripped = _e0_sufficient(cur, e0, threads)
            if full_track:
                full = has_sufficiently_many(reduced_decomposition(cur).reduced, None, threads)
        report.records.append(OrbitRecord(i, cur.dim, flag, full, stripped))
        if cur.a == 0 and cur.b == 0:
            break
    return cur, report


def theorem2_harness(p: MatrixPencil, t_max: int, max_dim: int | None = 4000,
                     stop_at_first: bool = False, threads: int = 1) -> OrbitReport:
    """E_0-sufficiency of sigma^t p for t = 0..t_max.

    Non-reduced iterates are tested on their maximal reduced part. Iterates
    larger than ``max_dim`` are recorded as skipped.
    """
    if p.n < 3:
        raise UnsupportedParameterError(f"E_0-sufficiency is only asserted for n >= 3, got n={p.n}")
    if p.field.p is None:
        raise EnumerationUnsupportedError("the harness runs over prime fields only")
    e0 = e0_set(p.n, p.field)
    report = OrbitReport()
    cur = p
    for t in range(t_max + 1):
        if t > 0:
            cur = sigma(cur)
        if max_dim is not None and max(cur.a, cur.b) > max_dim:
            report.records.append(OrbitRecord(t, cur.dim, None))
            continue
        ok, stripped = _e0_sufficient(cur, e0, threads)
        report.records.append(OrbitRecord(t, cur.dim, ok, None, stripped))
        if ok and stop_at_first:
            break
    return report


# ---------------------------------------------------------------------------
# preprojectives


def preprojective_dimvecs(n: int, count: int) -> list[DimensionVector]:
    """(0,1), (1,n), then (a, b) -> (b, nb - a)."""
    if n < 2:
        raise UnsupportedParameterError("preprojective series needs n >= 2")
    out: list[DimensionVector] = []
    a, b = 0, 1
    for _ in range(count):
        out.append(DimensionVector(a, b))
        a, b = b, n * b - a
    return out


def build_preprojectives(n: int, count: int, field: FieldSpec) -> list[MatrixPencil]:
    """S(2), sigma_minus S(2), sigma_minus^2 S(2), ..."""
    if n < 2:
        raise UnsupportedParameterError("preprojective series needs n >= 2")
    out: list[MatrixPencil] = []
    cur = simple(2, n, field)
    for _ in range(count):
        out.append(cur)
        cur = sigma_minus(cur)
    return out


def tits_form(dim: tuple[int, int], n: int) -> int:
    a, b = dim
    return a * a + b * b - n * a * b
