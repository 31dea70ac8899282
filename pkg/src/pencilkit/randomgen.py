"""Seeded random pencils, quadrics and witnesses for property checks."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .canonical import QuadraticForm, n_pairs
from .field import FieldSpec
from .linalg import Matrix
from .pencil import MatrixPencil, bristle, direct_sum, direct_sum_all, is_reduced, simple
from .projective import ProjectivePoint


def random_scalars(rng: np.random.Generator, shape, field: FieldSpec) -> np.ndarray:
    if field.p is not None:
        return rng.integers(0, field.p, size=shape, dtype=np.int64)
    nums = rng.integers(-4, 5, size=shape)
    dens = rng.integers(1, 4, size=shape)
    out = np.empty(shape, dtype=object)
    flat = out.reshape(-1)
    for i, (x, y) in enumerate(zip(nums.ravel(), dens.ravel())):
        flat[i] = Fraction(int(x), int(y))
    return out


def random_matrix(rng, rows: int, cols: int, field: FieldSpec) -> Matrix:
    return Matrix(random_scalars(rng, (rows, cols), field), field, canonical=True)


def random_invertible(rng, size: int, field: FieldSpec) -> Matrix:
    while True:
        m = random_matrix(rng, size, size, field)
        if m.is_invertible():
            return m


def random_pencil(rng, n: int, a: int, b: int, field: FieldSpec) -> MatrixPencil:
    return MatrixPencil([random_matrix(rng, b, a, field) for _ in range(n)], a, b, field)


def random_reduced_pencil(rng, n: int, a: int, b: int, field: FieldSpec,
                          max_tries: int = 1000) -> MatrixPencil:
    """Rejection-sample a reduced pencil; requires a <= n*b."""
    if a > n * b:
        raise ValueError(f"no reduced pencil with dim ({a},{b}) and n={n}")
    for _ in range(max_tries):
        p = random_pencil(rng, n, a, b, field)
        if is_reduced(p):
            return p
    raise RuntimeError("could not sample a reduced pencil")


def random_point(rng, m: int, field: FieldSpec) -> ProjectivePoint:
    while True:
        v = random_scalars(rng, m, field)
        if np.any(v != 0):
            return ProjectivePoint(v.tolist(), field)


def random_quadrics(rng, n: int, m: int, field: FieldSpec, density: float = 0.5) -> list[QuadraticForm]:
    out = []
    for _ in range(m):
        coeffs = random_scalars(rng, n_pairs(n), field)
        mask = rng.random(n_pairs(n)) < density
        coeffs = np.where(mask, coeffs, 0)
        out.append(QuadraticForm(n, tuple(coeffs.tolist()), field))
    return out


def random_bristled_pencil(rng, n: int, k: int, field: FieldSpec, extra_s2: int = 0,
                           extra: MatrixPencil | None = None) -> MatrixPencil:
    """Reduced image of k random bristles, optionally plus non-bristle padding.

    The bristles B(lambda_j) are summed, pushed through a random surjection at
    vertex 2 and mixed by a random change of basis; non-reduced draws are
    discarded. ``extra_s2`` copies of S(2) and ``extra`` are appended.
    """
    while True:
        lams = [random_point(rng, n, field) for _ in range(k)]
        core = direct_sum_all([bristle(lam) for lam in lams])
        b = int(rng.integers(1, k + 1))
        gamma = random_matrix(rng, b, k, field)
        if gamma.rank() != b:
            continue
        beta = random_invertible(rng, k, field)
        p = core.transformed(beta, gamma)
        if is_reduced(p):
            break
    for _ in range(extra_s2):
        p = direct_sum(p, simple(2, n, field))
    if extra is not None:
        p = direct_sum(p, extra)
    return p
