"""Dense exact linear algebra over GF(p) and Q.

GF(p) matrices are int64 arrays and go through :mod:`pencilkit.kernels`;
rational matrices are object arrays of ``Fraction`` reduced in Python.
Pivoting is always "first nonzero entry in the column", so every result is
deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .errors import DimensionMismatchError, PencilError
from .field import FieldSpec, Scalar

__all__ = [
    "Matrix",
    "Subspace",
    "apply",
    "kernel_basis",
    "matmul",
    "rref",
    "subspace_intersection",
    "subspace_sum",
]

_INT64_BUDGET = 2**63 - 1


class Matrix:
    """Immutable matrix with entries in ``field``."""

    __slots__ = ("data", "field")

    def __init__(self, data, field: FieldSpec, *, canonical: bool = False):
        arr = data if canonical else field.array(data)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"matrix data must be 2-dimensional, got shape {arr.shape}")
        arr = arr.copy() if not canonical else arr
        arr.flags.writeable = False
        object.__setattr__(self, "data", arr)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # construction ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec, cols: int | None = None) -> Matrix:
        rows = list(rows)
        if not rows:
            return cls.zeros(0, cols or 0, field)
        return cls(rows, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> Matrix:
        return cls(field.zeros((rows, cols)), field, canonical=True)

    @classmethod
    def identity(cls, size: int, field: FieldSpec) -> Matrix:
        arr = field.zeros((size, size))
        for i in range(size):
            arr[i, i] = field.one()
        return cls(arr, field, canonical=True)

    @classmethod
    def _wrap(cls, arr: np.ndarray, field: FieldSpec) -> Matrix:
        return cls(arr, field, canonical=True)

    # basic protocol ----------------------------------------------------

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape

    def __getitem__(self, key):
        return self.data[key]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.field == other.field
            and self.shape == other.shape
            and bool(np.array_equal(self.data, other.data))
        )

    def __hash__(self) -> int:
        return hash((self.field, self.shape, tuple(self.data.ravel().tolist())))

    def __repr__(self) -> str:
        return f"Matrix({self.tolist()!r}, {self.field})"

    def tolist(self) -> list[list[Scalar]]:
        return self.data.tolist()

    @property
    def T(self) -> Matrix:
        return Matrix._wrap(np.ascontiguousarray(self.data.T), self.field)

    def is_zero(self) -> bool:
        return not bool(np.any(self.data != 0))

    # arithmetic --------------------------------------------------------

    def _check_field(self, other: Matrix):
        if self.field != other.field:
            raise DimensionMismatchError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_field(other)
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shape mismatch {self.shape} vs {other.shape}")
        arr = self.data + other.data
        if self.field.p is not None:
            arr %= self.field.p
        return Matrix._wrap(arr, self.field)

    def __neg__(self) -> Matrix:
        return self.scale(-1)

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def scale(self, c) -> Matrix:
        c = self.field.coerce(c)
        arr = self.data * c
        if self.field.p is not None:
            arr %= self.field.p
        return Matrix._wrap(arr, self.field)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            return matmul(self, other)
        return apply(self, other)

    # reduction ---------------------------------------------------------

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        return rref(self)

    def rank(self) -> int:
        return len(_rref_array(self.data, self.field)[1])

    def kernel(self) -> Subspace:
        return kernel_basis(self)

    def row_space(self) -> Subspace:
        return Subspace.span(self.data, self.field, self.cols)

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows

    def inverse(self) -> Matrix:
        if self.rows != self.cols:
            raise DimensionMismatchError("only square matrices can be inverted")
        n = self.rows
        aug = hstack([self, Matrix.identity(n, self.field)])
        R, piv = _rref_array(aug.data, self.field)
        if tuple(piv[:n]) != tuple(range(n)) or len(piv) < n:
            raise PencilError("matrix is singular")
        return Matrix._wrap(np.ascontiguousarray(R[:, n:]), self.field)

    def columns(self, idx: Iterable[int]) -> Matrix:
        return Matrix._wrap(np.ascontiguousarray(self.data[:, list(idx)]), self.field)


# ---------------------------------------------------------------------------
# raw array helpers


def _rref_rational(A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    R = A.copy()
    rows, cols = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if R[i, c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        lead = R[r, c]
        if lead != 1:
            R[r, c:] = R[r, c:] / lead
        for i in range(rows):
            if i != r and R[i, c] != 0:
                R[i, c:] = R[i, c:] - R[i, c] * R[r, c:]
        pivots.append(c)
        r += 1
    return R, pivots


def _rref_array(A: np.ndarray, field: FieldSpec) -> tuple[np.ndarray, list[int]]:
    if field.p is None:
        return _rref_rational(A)
    R, piv = kernels.rref(np.ascontiguousarray(A, dtype=np.int64), field.p)
    return R, [int(x) for x in piv]


def _nullspace_array(A: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Free-variable null-space basis (one row per non-pivot column)."""
    cols = A.shape[1]
    if field.p is not None:
        return kernels.nullspace(np.ascontiguousarray(A, dtype=np.int64), field.p)
    R, pivots = _rref_rational(A)
    free = [c for c in range(cols) if c not in set(pivots)]
    out = field.zeros((len(free), cols))
    for row, f in enumerate(free):
        out[row, f] = Fraction(1)
        for k, pc in enumerate(pivots):
            out[row, pc] = -R[k, f]
    return out


def _canonical_rows(A: np.ndarray, field: FieldSpec) -> np.ndarray:
    R, piv = _rref_array(A, field)
    return np.ascontiguousarray(R[: len(piv)])


def _matmul_array(A: np.ndarray, B: np.ndarray, field: FieldSpec) -> np.ndarray:
    if field.p is None:
        if A.shape[1] == 0:
            return field.zeros((A.shape[0],) + B.shape[1:])
        out = np.dot(A, B)
        if out.ndim == 0:
            return out
        return field.array(out) if out.size and not isinstance(out.flat[0], Fraction) else out
    p = field.p
    k = A.shape[1]
    if k == 0:
        return field.zeros((A.shape[0],) + B.shape[1:])
    if k * (p - 1) ** 2 <= _INT64_BUDGET:
        return (A @ B) % p
    # wide products at large p: chunk the inner dimension
    step = max(1, _INT64_BUDGET // ((p - 1) ** 2))
    out = np.zeros((A.shape[0],) + B.shape[1:], dtype=np.int64)
    for lo in range(0, k, step):
        out = (out + (A[:, lo : lo + step] @ B[lo : lo + step]) % p) % p
    return out


# ---------------------------------------------------------------------------
# public operations


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and its strictly increasing pivot columns."""
    R, piv = _rref_array(m.data, m.field)
    return Matrix._wrap(R, m.field), tuple(piv)


def kernel_basis(m: Matrix) -> Subspace:
    """Null space ``{v : m v = 0}`` as a canonical subspace of k^cols."""
    N = _nullspace_array(m.data, m.field)
    return Subspace._from_rows(_canonical_rows(N, m.field), m.field, m.cols)


def matmul(m1: Matrix, m2: Matrix) -> Matrix:
    m1._check_field(m2)
    if m1.cols != m2.rows:
        raise DimensionMismatchError(f"cannot multiply {m1.shape} by {m2.shape}")
    return Matrix._wrap(_matmul_array(m1.data, m2.data, m1.field), m1.field)


def apply(m: Matrix, v) -> np.ndarray:
    """Matrix-vector product; ``v`` is any 1-d sequence of scalars."""
    vec = m.field.array(v)
    if vec.ndim != 1 or vec.shape[0] != m.cols:
        raise DimensionMismatchError(f"cannot apply {m.shape} matrix to vector of shape {vec.shape}")
    return _matmul_array(m.data, vec, m.field)


def hstack(mats: Sequence[Matrix], rows: int | None = None, field: FieldSpec | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(rows or 0, 0, field)
    f = mats[0].field
    for m in mats[1:]:
        mats[0]._check_field(m)
        if m.rows != mats[0].rows:
            raise DimensionMismatchError("hstack row mismatch")
    return Matrix._wrap(np.ascontiguousarray(np.concatenate([m.data for m in mats], axis=1)), f)


def vstack(mats: Sequence[Matrix], cols: int | None = None, field: FieldSpec | None = None) -> Matrix:
    if not mats:
        return Matrix.zeros(0, cols or 0, field)
    f = mats[0].field
    for m in mats[1:]:
        mats[0]._check_field(m)
        if m.cols != mats[0].cols:
            raise DimensionMismatchError("vstack column mismatch")
    return Matrix._wrap(np.ascontiguousarray(np.concatenate([m.data for m in mats], axis=0)), f)


def block_diag(m1: Matrix, m2: Matrix) -> Matrix:
    m1._check_field(m2)
    out = m1.field.zeros((m1.rows + m2.rows, m1.cols + m2.cols))
    out[: m1.rows, : m1.cols] = m1.data
    out[m1.rows :, m1.cols :] = m2.data
    return Matrix._wrap(out, m1.field)


def kron(m1: Matrix, m2: Matrix) -> Matrix:
    m1._check_field(m2)
    f = m1.field
    out = f.zeros((m1.rows * m2.rows, m1.cols * m2.cols))
    for i in range(m1.rows):
        for j in range(m1.cols):
            c = m1.data[i, j]
            if c == 0:
                continue
            blk = m2.data * c
            if f.p is not None:
                blk %= f.p
            out[i * m2.rows : (i + 1) * m2.rows, j * m2.cols : (j + 1) * m2.cols] = blk
    return Matrix._wrap(out, f)


# ---------------------------------------------------------------------------


class Subspace:
    """Subspace of k^ambient_dim stored as its reduced echelon basis.

    The representation is unique, so ``==`` is equality of subspaces.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim: int, basis: Matrix):
        canon = _canonical_rows(basis.data, basis.field) if basis.rows else basis.data
        if basis.cols != ambient_dim:
            raise DimensionMismatchError("basis width differs from ambient dimension")
        self._init(ambient_dim, Matrix._wrap(canon, basis.field))

    def _init(self, ambient_dim: int, basis: Matrix):
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", basis)
        piv = []
        for row in basis.data:
            piv.append(int(np.flatnonzero(row != 0)[0]))
        object.__setattr__(self, "pivots", tuple(piv))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @classmethod
    def _from_rows(cls, rows: np.ndarray, field: FieldSpec, ambient_dim: int) -> Subspace:
        obj = cls.__new__(cls)
        if rows.shape[0] == 0:
            rows = field.zeros((0, ambient_dim))
        obj._init(ambient_dim, Matrix._wrap(rows, field))
        return obj

    @classmethod
    def span(cls, vectors, field: FieldSpec, ambient_dim: int) -> Subspace:
        arr = vectors.data if isinstance(vectors, Matrix) else field.array(vectors)
        if arr.size == 0:
            return cls.zero(ambient_dim, field)
        arr = arr.reshape(-1, ambient_dim)
        return cls._from_rows(_canonical_rows(arr, field), field, ambient_dim)

    @classmethod
    def zero(cls, ambient_dim: int, field: FieldSpec) -> Subspace:
        return cls._from_rows(field.zeros((0, ambient_dim)), field, ambient_dim)

    @classmethod
    def full(cls, ambient_dim: int, field: FieldSpec) -> Subspace:
        return cls._from_rows(Matrix.identity(ambient_dim, field).data, field, ambient_dim)

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def dim(self) -> int:
        return self.basis.rows

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, {self.field})"

    def vectors(self) -> list[np.ndarray]:
        return [row.copy() for row in self.basis.data]

    def _residual(self, v: np.ndarray) -> np.ndarray:
        v = self.field.array(v).copy()
        for row, pc in zip(self.basis.data, self.pivots):
            c = v[pc]
            if c != 0:
                v = v - c * row
                if self.field.p is not None:
                    v %= self.field.p
        return v

    def __contains__(self, v) -> bool:
        return not bool(np.any(self._residual(v) != 0))

    def contains(self, other: Subspace) -> bool:
        return all(v in self for v in other.basis.data)

    def coordinates(self, v) -> np.ndarray:
        """Coefficients of ``v`` in the echelon basis."""
        if v not in self:
            raise PencilError("vector is not in the subspace")
        arr = self.field.array(v)
        return arr[list(self.pivots)] if self.pivots else self.field.zeros(0)

    def complement_coordinates(self) -> list[int]:
        """Standard coordinates spanning a complement: the non-pivot columns."""
        piv = set(self.pivots)
        return [c for c in range(self.ambient_dim) if c not in piv]

    def _check(self, other: Subspace):
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise DimensionMismatchError(
                f"subspaces live in different spaces: {self!r} vs {other!r}"
            )

    def sum(self, other: Subspace) -> Subspace:
        return subspace_sum(self, other)

    def intersection(self, other: Subspace) -> Subspace:
        return subspace_intersection(self, other)

    __add__ = sum
    __and__ = intersection


def subspace_sum(u: Subspace, v: Subspace) -> Subspace:
    u._check(v)
    if v.dim == 0:
        return u
    if u.dim == 0:
        return v
    stacked = np.concatenate([u.basis.data, v.basis.data], axis=0)
    return Subspace._from_rows(_canonical_rows(stacked, u.field), u.field, u.ambient_dim)


def subspace_intersection(u: Subspace, v: Subspace) -> Subspace:
    """Solve x.U = y.V: kernel of [U; V]^T, then map the x-part through U."""
    u._check(v)
    if u.dim == 0 or v.dim == 0:
        return Subspace.zero(u.ambient_dim, u.field)
    f = u.field
    stacked = np.concatenate([u.basis.data, v.basis.data], axis=0)
    K = _nullspace_array(np.ascontiguousarray(stacked.T), f)
    if K.shape[0] == 0:
        return Subspace.zero(u.ambient_dim, f)
    X = np.ascontiguousarray(K[:, : u.dim])
    vecs = _matmul_array(X, u.basis.data, f)
    return Subspace._from_rows(_canonical_rows(vecs, f), f, u.ambient_dim)
