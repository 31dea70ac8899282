"""Matrix pencils, read equally as n-Kronecker modules.

A pencil ``(a, b; alpha_1..alpha_n)`` holds n linear maps k^a -> k^b given
as b x a matrices. Modules are always presented in coordinates, so the
pencil and its Kronecker module are the same object here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionMismatchError, InvalidWitnessError, PencilError
from .field import FieldSpec
from .linalg import Matrix, Subspace, block_diag, hstack, kernel_basis, kron, matmul, vstack
from .projective import ProjectivePoint


class DimensionVector(NamedTuple):
    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


class MatrixPencil:
    """n matrices of one shape b x a over one field."""

    __slots__ = ("alphas", "a", "b", "field")

    def __init__(self, alphas: Sequence[Matrix], a: int | None = None, b: int | None = None,
                 field: FieldSpec | None = None):
        alphas = tuple(alphas)
        if not alphas:
            raise PencilError("a pencil needs at least one matrix")
        field = field or alphas[0].field
        a = alphas[0].cols if a is None else a
        b = alphas[0].rows if b is None else b
        for m in alphas:
            if m.field != field:
                raise DimensionMismatchError("pencil matrices must share one field")
            if m.shape != (b, a):
                raise DimensionMismatchError(f"pencil matrix has shape {m.shape}, expected {(b, a)}")
        object.__setattr__(self, "alphas", alphas)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("MatrixPencil is immutable")

    @classmethod
    def from_lists(cls, mats, field: FieldSpec, a: int | None = None, b: int | None = None) -> MatrixPencil:
        """Build from nested lists; give ``a``/``b`` when matrices are empty."""
        out = []
        for m in mats:
            arr = field.array(m)
            if arr.size == 0:
                arr = field.zeros((b if b is not None else arr.shape[0], a if a is not None else 0))
            out.append(Matrix(arr, field, canonical=True))
        return cls(out, a, b, field)

    @classmethod
    def zero(cls, n: int, field: FieldSpec, a: int = 0, b: int = 0) -> MatrixPencil:
        return cls([Matrix.zeros(b, a, field) for _ in range(n)], a, b, field)

    @property
    def n(self) -> int:
        return len(self.alphas)

    @property
    def dim(self) -> DimensionVector:
        return DimensionVector(self.a, self.b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixPencil):
            return NotImplemented
        return self.field == other.field and self.dim == other.dim and self.alphas == other.alphas

    def __hash__(self) -> int:
        return hash((self.field, self.dim, self.alphas))

    def __repr__(self) -> str:
        return f"MatrixPencil(n={self.n}, dim={self.dim}, field={self.field})"

    def stacked(self) -> Matrix:
        """The nb x a matrix [alpha_1; ...; alpha_n]."""
        return vstack(list(self.alphas), cols=self.a, field=self.field)

    def combined(self) -> Matrix:
        """The b x na matrix [alpha_1 | ... | alpha_n]."""
        return hstack(list(self.alphas), rows=self.b, field=self.field)

    def as_array(self) -> np.ndarray:
        """(n, b, a) int64 stack for the GF(p) kernels."""
        return np.ascontiguousarray(np.stack([m.data for m in self.alphas]).astype(np.int64))

    def images(self, v) -> Matrix:
        """The b x n matrix whose i-th column is alpha_i(v)."""
        vec = self.field.array(v)
        cols = [m @ vec for m in self.alphas]
        arr = np.stack(cols, axis=1) if self.b else self.field.zeros((0, self.n))
        return Matrix(arr, self.field, canonical=True)

    def scaled(self, c) -> MatrixPencil:
        return MatrixPencil([m.scale(c) for m in self.alphas], self.a, self.b, self.field)

    def transformed(self, beta: Matrix, gamma: Matrix) -> MatrixPencil:
        """The pencil (gamma alpha_i beta)_i."""
        return MatrixPencil([matmul(matmul(gamma, m), beta) for m in self.alphas],
                            beta.cols, gamma.rows, self.field)

    def restrict(self, u1: Subspace, u2: Subspace) -> MatrixPencil:
        """Submodule (u1, u2) in the echelon bases of u1 and u2.

        Requires alpha_i(u1) inside u2; coordinates in an echelon basis are
        the entries at its pivot columns.
        """
        mats = []
        piv2 = list(u2.pivots)
        for m in self.alphas:
            img = matmul(m, u1.basis.T)  # b x a'
            for col in img.data.T:
                if col not in u2:
                    raise PencilError("alpha_i(U1) is not contained in U2")
            sub = img.data[piv2, :] if piv2 else self.field.zeros((0, u1.dim))
            mats.append(Matrix(np.ascontiguousarray(sub), self.field, canonical=True))
        return MatrixPencil(mats, u1.dim, u2.dim, self.field)


def _check_compatible(p: MatrixPencil, q: MatrixPencil):
    if p.n != q.n:
        raise DimensionMismatchError(f"pencils have different n: {p.n} vs {q.n}")
    if p.field != q.field:
        raise DimensionMismatchError(f"pencils over different fields: {p.field} vs {q.field}")


def common_kernel(p: MatrixPencil) -> Subspace:
    return kernel_basis(p.stacked())


def is_reduced(p: MatrixPencil) -> bool:
    """True iff the kernels of the alpha_i meet only in 0."""
    if p.a == 0:
        return True
    return p.stacked().rank() == p.a


def direct_sum(p: MatrixPencil, q: MatrixPencil) -> MatrixPencil:
    _check_compatible(p, q)
    mats = [block_diag(x, y) for x, y in zip(p.alphas, q.alphas)]
    return MatrixPencil(mats, p.a + q.a, p.b + q.b, p.field)


def direct_sum_all(pencils: Sequence[MatrixPencil]) -> MatrixPencil:
    out = pencils[0]
    for q in pencils[1:]:
        out = direct_sum(out, q)
    return out


def simple(which: int, n: int, field: FieldSpec) -> MatrixPencil:
    """S(1) = (1,0) or S(2) = (0,1)."""
    if which == 1:
        return MatrixPencil.zero(n, field, a=1, b=0)
    if which == 2:
        return MatrixPencil.zero(n, field, a=0, b=1)
    raise PencilError(f"simple module index must be 1 or 2, got {which}")


def bristle(lam: ProjectivePoint | Sequence, field: FieldSpec | None = None) -> MatrixPencil:
    """The bristle B(lambda) = (1,1; [lambda_1], ..., [lambda_n])."""
    if not isinstance(lam, ProjectivePoint):
        lam = ProjectivePoint(lam, field)
    f = lam.field
    return MatrixPencil([Matrix([[x]], f, canonical=False) for x in lam.coords], 1, 1, f)


def hom_dim(p: MatrixPencil, q: MatrixPencil) -> int:
    """dim Hom(p, q): pairs (F1, F2) with q.alpha_i F1 = F2 p.alpha_i for all i.

    Unknowns are vec_r(F1) (a'a entries) then vec_r(F2) (b'b entries); with
    row-major vec, vec(A X B) = (A kron B^T) vec(X).
    """
    _check_compatible(p, q)
    f = p.field
    a, b, a2, b2 = p.a, p.b, q.a, q.b
    unknowns = a2 * a + b2 * b
    if unknowns == 0:
        return 0
    if b2 * a == 0:
        return unknowns
    blocks = []
    id_a = Matrix.identity(a, f)
    id_b2 = Matrix.identity(b2, f)
    for al, al2 in zip(p.alphas, q.alphas):
        left = kron(al2, id_a)
        right = kron(id_b2, al.T)
        blocks.append(hstack([left, -right], rows=b2 * a, field=f))
    system = vstack(blocks, cols=unknowns, field=f)
    return unknowns - system.rank()


@dataclass(frozen=True)
class ReducedDecomposition:
    """p = S(1)^s (+) reduced, witnessed by ``gamma alpha_i beta = alpha'_i``.

    ``beta`` has the common-kernel basis as its first ``s`` columns and the
    complementary standard vectors after them; ``gamma`` is the identity.
    """

    s: int
    reduced: MatrixPencil
    kernel: Subspace
    complement: tuple[int, ...]
    beta: Matrix
    gamma: Matrix

    def split_pencil(self) -> MatrixPencil:
        """S(1)^s (+) reduced, the right-hand side of the witness."""
        p = self.reduced
        return direct_sum(MatrixPencil.zero(p.n, p.field, a=self.s, b=0), p)


def reduced_decomposition(p: MatrixPencil) -> ReducedDecomposition:
    f = p.field
    K = common_kernel(p)
    comp = tuple(K.complement_coordinates())
    reduced = MatrixPencil([m.columns(comp) for m in p.alphas], len(comp), p.b, f)
    cols = [row for row in K.basis.data]
    for c in comp:
        e = f.zeros(p.a)
        e[c] = f.one()
        cols.append(e)
    beta = Matrix(np.stack(cols, axis=1), f, canonical=True) if cols else Matrix.zeros(0, 0, f)
    gamma = Matrix.identity(p.b, f)
    return ReducedDecomposition(K.dim, reduced, K, comp, beta, gamma)


def is_equivalence_witness(p: MatrixPencil, p2: MatrixPencil, beta: Matrix, gamma: Matrix) -> bool:
    """True iff gamma alpha_i beta = alpha'_i for every i."""
    _check_compatible(p, p2)
    if p.dim != p2.dim:
        return False
    if beta.shape != (p.a, p.a) or gamma.shape != (p.b, p.b):
        raise InvalidWitnessError(f"witness shapes {beta.shape}, {gamma.shape} do not fit dim {p.dim}")
    if not beta.is_invertible() or not gamma.is_invertible():
        raise InvalidWitnessError("beta and gamma must be invertible")
    return all(matmul(matmul(gamma, m), beta) == m2 for m, m2 in zip(p.alphas, p2.alphas))


# ---------------------------------------------------------------------------
# indecomposable pencils for n = 2 (Kronecker blocks)


def kronecker_wide(m: int, field: FieldSpec) -> MatrixPencil:
    """(m+1, m; [I | 0], [0 | I]), the indecomposable with a > b."""
    left = field.zeros((m, m + 1))
    right = field.zeros((m, m + 1))
    for i in range(m):
        left[i, i] = field.one()
        right[i, i + 1] = field.one()
    return MatrixPencil([Matrix(left, field, canonical=True), Matrix(right, field, canonical=True)],
                        m + 1, m, field)


def kronecker_tall(m: int, field: FieldSpec) -> MatrixPencil:
    """(m, m+1; [I; 0], [0; I]), the preprojective indecomposable with a < b."""
    w = kronecker_wide(m, field)
    return MatrixPencil([x.T for x in w.alphas], m, m + 1, field)


def jordan_pencil(m: int, mu, field: FieldSpec) -> MatrixPencil:
    """(m, m; I, J_m(mu)); ``mu=None`` gives the infinite eigenvalue (J_m(0), I)."""
    ident = Matrix.identity(m, field)
    J = field.zeros((m, m))
    for i in range(m):
        J[i, i] = field.coerce(0 if mu is None else mu)
        if i + 1 < m:
            J[i, i + 1] = field.one()
    jm = Matrix(J, field, canonical=True)
    return MatrixPencil([jm, ident] if mu is None else [ident, jm], m, m, field)
