"""The canonical bristled module C and the quadric dictionary.

C has basis c_ij (i <= j) at vertex 1 and c_1..c_n at vertex 2, with
alpha_i(c_ij) = c_j, alpha_j(c_ij) = c_i and alpha_r(c_ij) = 0 otherwise.
Vertex-1 coordinates follow the pair order (1,1), (1,2), ..., (1,n), (2,2),
..., (n,n), which is also the coefficient order of :class:`QuadraticForm`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionMismatchError, UnsupportedParameterError
from .field import FieldSpec, Scalar
from .linalg import Matrix, _matmul_array
from .pencil import MatrixPencil


@lru_cache(maxsize=None)
def pair_index(n: int) -> tuple[tuple[int, int], ...]:
    """0-based pairs (i, j), i <= j, in coefficient order."""
    return tuple((i, j) for i in range(n) for j in range(i, n))


def n_pairs(n: int) -> int:
    return n * (n + 1) // 2


@dataclass(frozen=True)
class CanonicalModule:
    n: int
    pencil: MatrixPencil

    @property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pair_index(self.n)

    @property
    def field(self) -> FieldSpec:
        return self.pencil.field

    def position(self, i: int, j: int) -> int:
        """Vertex-1 coordinate of c_ij (0-based, either order)."""
        i, j = min(i, j), max(i, j)
        return self.pairs.index((i, j))


def build_canonical(n: int, field: FieldSpec) -> CanonicalModule:
    if n < 1:
        raise UnsupportedParameterError(f"canonical module needs n >= 1, got {n}")
    N = n_pairs(n)
    mats = [field.zeros((n, N)) for _ in range(n)]
    one = field.one()
    for col, (i, j) in enumerate(pair_index(n)):
        mats[i][j, col] = one
        mats[j][i, col] = one
    pencil = MatrixPencil([Matrix(m, field, canonical=True) for m in mats], N, n, field)
    return CanonicalModule(n, pencil)


def veronese_d(c: Sequence, field: FieldSpec) -> np.ndarray:
    """d(c) = sum_{i<=j} c_i c_j c_ij."""
    vec = field.array(list(c))
    n = len(vec)
    out = field.zeros(n_pairs(n))
    for col, (i, j) in enumerate(pair_index(n)):
        out[col] = vec[i] * vec[j]
    if field.p is not None:
        out %= field.p
    return out


@dataclass(frozen=True)
class QuadraticForm:
    """sum_{r<=s} coeffs[rs] x_r x_s, coefficients in pair order."""

    n: int
    coeffs: tuple
    field: FieldSpec

    def __post_init__(self):
        if len(self.coeffs) != n_pairs(self.n):
            raise DimensionMismatchError(
                f"quadratic form in {self.n} variables needs {n_pairs(self.n)} coefficients, got {len(self.coeffs)}"
            )
        object.__setattr__(self, "coeffs", tuple(self.field.coerce(x) for x in self.coeffs))

    @classmethod
    def from_dict(cls, n: int, terms: dict[tuple[int, int], object], field: FieldSpec) -> QuadraticForm:
        """Build from {(r, s): coefficient} with 1-based variable indices."""
        coeffs = [0] * n_pairs(n)
        pairs = pair_index(n)
        for (r, s), val in terms.items():
            r, s = min(r, s) - 1, max(r, s) - 1
            coeffs[pairs.index((r, s))] += val
        return cls(n, tuple(coeffs), field)

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> QuadraticForm:
        return cls(n, (0,) * n_pairs(n), field)

    def __add__(self, other: QuadraticForm) -> QuadraticForm:
        if self.n != other.n or self.field != other.field:
            raise DimensionMismatchError("cannot add quadratic forms of different shape")
        return QuadraticForm(self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)), self.field)

    def vector(self) -> np.ndarray:
        return self.field.array(list(self.coeffs))

    def __call__(self, c) -> Scalar:
        return eval_quadratic(self, c)


def quad_to_hom(q: QuadraticForm, C: CanonicalModule) -> Matrix:
    """The functional phi' on C_1 (a 1 x n(n+1)/2 matrix) pairing coefficients with coordinates.

    Read as a map C -> S(1); the vertex-2 component is the empty map.
    """
    if q.n != C.n:
        raise DimensionMismatchError(f"quadratic form has n={q.n}, canonical module n={C.n}")
    if q.field != C.field:
        raise DimensionMismatchError("field mismatch")
    return Matrix(q.vector().reshape(1, -1), q.field, canonical=True)


def eval_quadratic(q: QuadraticForm, c) -> Scalar:
    f = q.field
    vec = f.array(list(c))
    if len(vec) != q.n:
        raise DimensionMismatchError(f"point has {len(vec)} coordinates, form has n={q.n}")
    total = f.zero()
    for coeff, (i, j) in zip(q.coeffs, pair_index(q.n)):
        if coeff != 0:
            total = total + coeff * vec[i] * vec[j]
    return f.coerce(total)


def upper_matrix(q: QuadraticForm) -> np.ndarray:
    """Upper-triangular U with q(c) = c^T U c."""
    U = q.field.zeros((q.n, q.n))
    for coeff, (i, j) in zip(q.coeffs, pair_index(q.n)):
        U[i, j] = coeff
    return U


def eval_quadrics_on_points(quadrics: Sequence[QuadraticForm], points: np.ndarray, field: FieldSpec) -> np.ndarray:
    """(N, m) values of every form at every row of ``points``, as c^T U c."""
    pts = field.array(points)
    out = field.zeros((len(pts), len(quadrics)))
    for k, q in enumerate(quadrics):
        if len(pts) == 0:
            break
        pts_q = pts.reshape(-1, q.n)
        prod = _matmul_array(pts_q, upper_matrix(q), field) * pts_q
        if field.p is not None:
            prod %= field.p
        vals = prod.sum(axis=1)
        out[:, k] = vals % field.p if field.p is not None else vals
    return out


def beilinson_check(n: int, field: FieldSpec) -> bool:
    """Extend C by C_3 = k with alpha_i(c_j) = delta_ij and test the commutativity relations."""
    C = build_canonical(n, field)
    second = []
    for i in range(n):
        row = field.zeros((1, n))
        row[0, i] = field.one()
        second.append(Matrix(row, field, canonical=True))
    first = C.pencil.alphas
    for i in range(n):
        for j in range(n):
            if (second[i] @ first[j]) != (second[j] @ first[i]):
                return False
    dims = (C.pencil.a, C.pencil.b, second[0].rows)
    return dims == (n_pairs(n), n, 1)
