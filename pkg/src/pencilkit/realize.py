"""Quadrics -> reduced pencil whose eigenvalues are the quadrics' common zeros.

Given forms q_1..q_m in n variables, M is the submodule of the canonical
module C with M_1 the common kernel of the functionals q'_i on C_1 and
M_2 = C_2. Since q(c) = q'(d(c)), c is a common zero exactly when the
bristle generated by d(c) lies in M, so the eigenvalue set of M is the
zero set of the quadrics.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Sequence

import numpy as np

from .canonical import CanonicalModule, QuadraticForm, build_canonical, eval_quadrics_on_points, n_pairs
from .eigen import bristle_sum_submodule, eigen_reports, eigenspaces, require_reduced
from .errors import (
    DimensionMismatchError,
    EnumerationUnsupportedError,
    InvariantViolationError,
    UnsupportedParameterError,
)
from .field import FieldSpec
from .linalg import Matrix, Subspace, kernel_basis, matmul, subspace_sum
from .pencil import MatrixPencil, direct_sum, is_reduced
from .projective import ProjectivePoint, all_points, point_array, points_from_rows, sort_points


@dataclass(frozen=True)
class RealizationResult:
    pencil: MatrixPencil
    inclusion: Subspace
    n: int
    quadrics: tuple[QuadraticForm, ...]
    canonical: CanonicalModule = dc_field(repr=False)

    @property
    def field(self) -> FieldSpec:
        return self.pencil.field


def coefficient_matrix(quadrics: Sequence[QuadraticForm], n: int, field: FieldSpec) -> Matrix:
    if not quadrics:
        return Matrix.zeros(0, n_pairs(n), field)
    return Matrix(np.stack([q.vector() for q in quadrics]), field, canonical=True)


def realize_variety(quadrics: Sequence[QuadraticForm], field: FieldSpec | None = None,
                    n: int | None = None) -> RealizationResult:
    quadrics = tuple(quadrics)
    if quadrics:
        ns = {q.n for q in quadrics}
        if len(ns) != 1:
            raise DimensionMismatchError(f"quadrics use different variable counts: {sorted(ns)}")
        n_q = ns.pop()
        if n is not None and n != n_q:
            raise DimensionMismatchError(f"n={n} but quadrics have n={n_q}")
        n = n_q
        field = field or quadrics[0].field
        if any(q.field != field for q in quadrics):
            raise DimensionMismatchError("quadrics over different fields")
    if n is None or field is None:
        raise UnsupportedParameterError("an empty quadric list needs explicit n and field")
    if n < 1:
        raise UnsupportedParameterError(f"n must be >= 1, got {n}")

    C = build_canonical(n, field)
    M1 = kernel_basis(coefficient_matrix(quadrics, n, field))
    incl = M1.basis.T
    mats = [matmul(al, incl) for al in C.pencil.alphas]
    pencil = MatrixPencil(mats, M1.dim, n, field)
    if not is_reduced(pencil):
        raise InvariantViolationError("submodule of the canonical module is not reduced")
    return RealizationResult(pencil, M1, n, quadrics, C)


@dataclass(frozen=True)
class VerificationReport:
    eigenvalue_set: list[ProjectivePoint]
    point_set: list[ProjectivePoint]
    max_eigenspace_dim: int
    passed: bool

    def summary(self) -> str:
        verdict = "pass" if self.passed else "FAIL"
        return (
            f"eigenvalues={len(self.eigenvalue_set)} points={len(self.point_set)} "
            f"max_eigenspace_dim={self.max_eigenspace_dim} result={verdict}"
        )


def zero_set(quadrics: Sequence[QuadraticForm], n: int, field: FieldSpec) -> list[ProjectivePoint]:
    """Rational points of V(q_1..q_m) by scanning P(F_q^n)."""
    pts = point_array(field, n)
    if quadrics:
        vals = eval_quadrics_on_points(quadrics, pts, field)
        pts = pts[~np.any(vals != 0, axis=1)]
    return points_from_rows(pts, field)


def verify_realization(r: RealizationResult, threads: int = 1) -> VerificationReport:
    f = r.field
    if f.p is None:
        raise EnumerationUnsupportedError("realization checks enumerate points; need a prime field")
    lams = all_points(f, r.n)
    spaces = eigenspaces(r.pencil, lams, threads)
    max_dim = max((U.dim for U in spaces), default=0)
    eig = sort_points(lam for lam, U in zip(lams, spaces) if U.dim > 0)
    pts = sort_points(zero_set(r.quadrics, r.n, f))
    return VerificationReport(eig, pts, max_dim, eig == pts and max_dim <= 1)


# ---------------------------------------------------------------------------
# square pencils


def squareize(p: MatrixPencil, e_prime: Sequence[ProjectivePoint] | None = None,
              threads: int = 1) -> MatrixPencil:
    """Bristle-generated part M' of p, padded with S(2)^(a'-b') to a square pencil."""
    require_reduced(p)
    U1, U2 = bristle_sum_submodule(p, e_prime, threads)
    if U1.dim < U2.dim:
        raise InvariantViolationError(f"bristle sum has dim ({U1.dim},{U2.dim}) with a' < b'")
    M_prime = p.restrict(U1, U2)
    pad = MatrixPencil.zero(p.n, p.field, a=0, b=U1.dim - U2.dim)
    return direct_sum(M_prime, pad)


def select_generating_bristles(p: MatrixPencil, e_prime: Sequence[ProjectivePoint] | None = None,
                               threads: int = 1) -> list[tuple[ProjectivePoint, np.ndarray]]:
    """Greedy choice of eigenvectors whose bristles sum to the bristle-generated part."""
    require_reduced(p)
    f = p.field
    U1, U2 = bristle_sum_submodule(p, e_prime, threads)
    span1 = Subspace.zero(p.a, f)
    span2 = Subspace.zero(p.b, f)
    picks: list[tuple[ProjectivePoint, np.ndarray]] = []
    for rep in eigen_reports(p, e_prime, threads):
        for v in rep.eigenspace.vectors():
            if v in span1:
                continue
            span1 = subspace_sum(span1, Subspace.span(v, f, p.a))
            images = np.stack([al @ v for al in p.alphas]) if p.b else f.zeros((p.n, 0))
            span2 = subspace_sum(span2, Subspace.span(images, f, p.b))
            picks.append((rep.eigenvalue, v))
    if span1 != U1 or span2 != U2:
        raise InvariantViolationError("selected bristles do not sum to the bristle-generated submodule")
    if len(picks) != U1.dim:
        raise InvariantViolationError(f"picked {len(picks)} bristles for a {U1.dim}-dimensional top")
    if U1.dim < U2.dim:
        raise InvariantViolationError("bristle sum violates a >= b")
    return picks
