"""Eigenvectors, eigenvalues and eigenvector varieties of reduced pencils.

A nonzero v is an eigenvector when alpha_1 v, ..., alpha_n v span a line;
writing alpha_i v = lambda_i w, its eigenvalue is (lambda_1 : ... : lambda_n).

Two independent routes exist over GF(q). The primary one walks the
eigenvalues lambda in P(F_q^n) and solves one small system per lambda; the
oracle scans every point of P(F_q^a) and tests the rank directly.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import kernels
from .errors import (
    EnumerationTooLargeError,
    EnumerationUnsupportedError,
    ExplicitEigenvaluesRequiredError,
    NotAnEigenvectorError,
    ReducednessRequiredError,
)
from .linalg import Matrix, Subspace, hstack, kernel_basis, subspace_sum, vstack
from .pencil import MatrixPencil, is_reduced
from .projective import (
    ProjectivePoint,
    all_points,
    enum_budget,
    point_count,
    points_from_rows,
    sort_points,
    subspace_points,
)

EigenvalueSource = Sequence[ProjectivePoint] | None


@dataclass(frozen=True)
class EigenReport:
    eigenvalue: ProjectivePoint
    eigenspace: Subspace


def require_reduced(p: MatrixPencil) -> None:
    if not is_reduced(p):
        raise ReducednessRequiredError(f"pencil with dim {p.dim} is not reduced")


def _chunked(total: int, threads: int, fn: Callable[[int, int], object]) -> list:
    """Run ``fn(lo, hi)`` over a partition of ``range(total)``; results stay in order."""
    threads = max(1, int(threads))
    if threads == 1 or total < 2:
        return [fn(0, total)]
    step = -(-total // threads)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda b: fn(*b), bounds))


# ---------------------------------------------------------------------------
# single vectors


def is_eigenvector(p: MatrixPencil, v) -> bool:
    require_reduced(p)
    return p.images(v).rank() == 1


def eigenvalue_of(p: MatrixPencil, v) -> ProjectivePoint:
    require_reduced(p)
    X = p.images(v)
    if X.rank() != 1:
        raise NotAnEigenvectorError("vector is not an eigenvector of the pencil")
    f = p.field
    data = X.data
    # X = w lambda^T has rank one, so any nonzero row is proportional to lambda
    r0 = int(np.flatnonzero(np.any(data != 0, axis=1))[0])
    inv = f.inv(data[r0, np.flatnonzero(data[r0] != 0)[0]])
    return ProjectivePoint([f.coerce(x * inv) for x in data[r0]], f)


# ---------------------------------------------------------------------------
# eigenspaces


def eigenvector_space(p: MatrixPencil, lam: ProjectivePoint | Sequence) -> Subspace:
    """All v admitting w with alpha_i v = lambda_i w, as a subspace of k^a.

    Solved as the kernel of the nb x (a+b) system [alpha_i | -lambda_i I_b]
    and projected onto the v coordinates; reducedness makes the projection
    injective.
    """
    require_reduced(p)
    f = p.field
    if not isinstance(lam, ProjectivePoint):
        lam = ProjectivePoint(lam, f)
    if len(lam) != p.n:
        raise ValueError(f"eigenvalue has {len(lam)} coordinates, pencil has n={p.n}")
    if p.a == 0:
        return Subspace.zero(0, f)
    ident = Matrix.identity(p.b, f)
    blocks = [hstack([m, ident.scale(-x)], rows=p.b, field=f) for m, x in zip(p.alphas, lam.coords)]
    system = vstack(blocks, cols=p.a + p.b, field=f)
    K = kernel_basis(system)
    proj = K.basis.data[:, : p.a]
    return Subspace.span(proj, f, p.a)


def eigenspaces(p: MatrixPencil, lams: Sequence[ProjectivePoint], threads: int = 1) -> list[Subspace]:
    """Eigenvector spaces for many eigenvalues at once (batched kernel over GF(q))."""
    require_reduced(p)
    f = p.field
    lams = list(lams)
    if f.p is None or not lams:
        return [eigenvector_space(p, lam) for lam in lams]
    alphas = p.as_array()
    lam_arr = np.array([lam.coords for lam in lams], dtype=np.int64).reshape(len(lams), p.n)

    def work(lo, hi):
        return kernels.eigenspaces(alphas, np.ascontiguousarray(lam_arr[lo:hi]), f.p)

    out = []
    for bases, dims in _chunked(len(lams), threads, work):
        for B, d in zip(bases, dims):
            out.append(Subspace._from_rows(np.ascontiguousarray(B[: int(d)]), f, p.a))
    return out


def _resolve_source(p: MatrixPencil, e_prime: EigenvalueSource, for_variety: bool = False):
    if e_prime is not None:
        return [lam if isinstance(lam, ProjectivePoint) else ProjectivePoint(lam, p.field) for lam in e_prime]
    if p.field.p is None:
        if for_variety:
            raise EnumerationUnsupportedError("eigenvector varieties are enumerated over prime fields only")
        raise ExplicitEigenvaluesRequiredError("over Q an explicit eigenvalue list is required")
    return all_points(p.field, p.n)


def eigen_reports(p: MatrixPencil, e_prime: EigenvalueSource = None, threads: int = 1) -> list[EigenReport]:
    """Nonzero eigenspaces, one report per eigenvalue, in eigenvalue order."""
    lams = _resolve_source(p, e_prime)
    spaces = eigenspaces(p, lams, threads)
    reports = [EigenReport(lam, U) for lam, U in zip(lams, spaces) if U.dim > 0]
    return sorted(reports, key=lambda r: r.eigenvalue.sort_key())


def eigenvalues(p: MatrixPencil, e_prime: EigenvalueSource = None, threads: int = 1) -> list[ProjectivePoint]:
    return [r.eigenvalue for r in eigen_reports(p, e_prime, threads)]


# ---------------------------------------------------------------------------
# varieties


def eigenvector_variety(p: MatrixPencil, threads: int = 1) -> list[ProjectivePoint]:
    """epsilon(P) over GF(q), via one eigenspace per eigenvalue."""
    require_reduced(p)
    if p.field.p is None:
        raise EnumerationUnsupportedError("eigenvector varieties are enumerated over prime fields only")
    rows = [subspace_points(r.eigenspace.basis.data, p.field) for r in eigen_reports(p, None, threads)]
    if not rows:
        return []
    return sort_points(points_from_rows(np.concatenate(rows, axis=0), p.field))


def eigenvector_variety_oracle(p: MatrixPencil, budget: int | None = None, threads: int = 1) -> list[ProjectivePoint]:
    """epsilon(P) by testing every point of P(F_q^a)."""
    require_reduced(p)
    f = p.field
    if f.p is None:
        raise EnumerationUnsupportedError("the oracle scan needs a prime field")
    budget = enum_budget() if budget is None else budget
    total = point_count(f.p, p.a)
    if total > budget:
        raise EnumerationTooLargeError(f"P(F_{f.p}^{p.a}) has {total} points, over the budget of {budget}")
    if total == 0 or p.b == 0:
        return []
    alphas = p.as_array()

    def work(lo, hi):
        mask = kernels.eigen_mask(alphas, f.p, lo, hi)
        return kernels.decode_indices(f.p, p.a, np.flatnonzero(mask) + lo)

    rows = np.concatenate(_chunked(total, threads, work), axis=0)
    return points_from_rows(rows, f)


# ---------------------------------------------------------------------------
# spans of eigenvectors


def bristle_sum_submodule(p: MatrixPencil, e_prime: EigenvalueSource = None,
                          threads: int = 1) -> tuple[Subspace, Subspace]:
    """(U1, U2): U1 = sum of eigenspaces over the source, U2 = sum of alpha_i(U1)."""
    f = p.field
    U1 = Subspace.zero(p.a, f)
    for r in eigen_reports(p, e_prime, threads):
        U1 = subspace_sum(U1, r.eigenspace)
    if U1.dim == 0:
        return U1, Subspace.zero(p.b, f)
    images = [(m @ U1.basis.T).data.T for m in p.alphas]
    U2 = Subspace.span(np.concatenate(images, axis=0), f, p.b)
    return U1, U2


def has_sufficiently_many(p: MatrixPencil, e_prime: EigenvalueSource = None, threads: int = 1) -> bool:
    """True iff the eigenvectors with eigenvalue in the source span k^a."""
    require_reduced(p)
    if p.a == 0:
        return True
    U1 = Subspace.zero(p.a, p.field)
    for r in eigen_reports(p, e_prime, threads):
        U1 = subspace_sum(U1, r.eigenspace)
        if U1.dim == p.a:
            return True
    return False
