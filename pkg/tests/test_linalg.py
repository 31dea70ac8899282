from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pencilkit.errors import DimensionMismatchError
from pencilkit.field import GF, QQ, FieldSpec, is_prime
from pencilkit.linalg import Matrix, Subspace, kernel_basis, matmul, rref
from pencilkit.randomgen import random_matrix

FIELDS = [GF(2), GF(7), QQ]


def matrices(field, max_rows=5, max_cols=5):
    if field.p is not None:
        entry = st.integers(0, field.p - 1)
    else:
        entry = st.fractions(min_value=-5, max_value=5, max_denominator=4)

    @st.composite
    def build(draw):
        r = draw(st.integers(0, max_rows))
        c = draw(st.integers(0, max_cols))
        rows = [[draw(entry) for _ in range(c)] for _ in range(r)]
        return Matrix.from_rows(rows, field, cols=c)

    return build()


def test_field_parse_and_format():
    assert FieldSpec.parse("gf7") == GF(7)
    assert FieldSpec.parse("rational") == QQ
    assert str(GF(5)) == "gf5" and str(QQ) == "rational"
    assert QQ.format_scalar(Fraction(-6, 4)) == "-3/2"
    assert QQ.format_scalar(Fraction(4, 2)) == "2"
    assert GF(7).parse_scalar("-1") == 6
    assert GF(7).inv(3) == 5
    assert [x for x in range(30) if is_prime(x)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_rref_small_gf7():
    m = Matrix.from_rows([[2, 4], [1, 2]], GF(7))
    R, piv = rref(m)
    assert R.tolist() == [[1, 2], [0, 0]]
    assert piv == (0,)


def test_rref_rational():
    m = Matrix.from_rows([[2, 1, 1], [4, 3, 3]], QQ)
    R, piv = rref(m)
    assert R.tolist() == [[1, 0, 0], [0, 1, 1]]
    assert piv == (0, 1)


def test_kernel_gf2():
    m = Matrix.from_rows([[1, 1, 0], [0, 1, 1]], GF(2))
    K = kernel_basis(m)
    assert K.dim == 1
    assert K.basis.tolist() == [[1, 1, 1]]


def test_inverse_and_identity(field, rng):
    for _ in range(10):
        m = random_matrix(rng, 4, 4, field)
        if m.is_invertible():
            assert matmul(m, m.inverse()) == Matrix.identity(4, field)


def test_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        Matrix.zeros(2, 3, GF(7)) @ Matrix.zeros(2, 3, GF(7))


def test_large_prime_matmul_no_overflow():
    p = 2_147_483_629
    f = GF(p)
    m = Matrix.from_rows([[p - 1] * 40], f)
    prod = matmul(m, m.T)
    assert prod.tolist() == [[40 % p]]


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_rank_nullity_property(field):
    @given(matrices(field))
    def check(m):
        assert m.rank() + m.kernel().dim == m.cols
        for v in m.kernel().basis.data:
            assert not np.any(m @ v != 0)

    check()


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_rref_idempotent_property(field):
    @given(matrices(field))
    def check(m):
        R, piv = m.rref()
        R2, piv2 = R.rref()
        assert R == R2 and piv == piv2
        assert len(piv) == m.rank()

    check()


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_subspace_dimension_formula(field):
    @given(matrices(field, 4, 5), matrices(field, 4, 5))
    def check(x, y):
        if x.cols != y.cols:
            return
        U, V = x.row_space(), y.row_space()
        assert (U + V).dim + (U & V).dim == U.dim + V.dim
        assert (U + V).contains(U) and U.contains(U & V) and V.contains(U & V)

    check()


@pytest.mark.parametrize("field", FIELDS, ids=str)
def test_modular_law(field, rng):
    # U <= W  implies  U + (V & W) = (U + V) & W
    for _ in range(30):
        W = random_matrix(rng, 3, 5, field).row_space()
        gens = W.basis.data[:1] if W.dim else np.zeros((0, 5), dtype=W.basis.data.dtype)
        U = Subspace.span(list(gens), field, 5)
        V = random_matrix(rng, 2, 5, field).row_space()
        assert U + (V & W) == (U + V) & W


def test_subspace_coordinates_roundtrip(rng):
    f = GF(5)
    U = random_matrix(rng, 3, 6, f).row_space()
    coeff = f.array([1, 2, 3][: U.dim])
    v = (coeff @ U.basis.data) % 5 if U.dim else f.zeros(6)
    assert v in U
    assert list(U.coordinates(v)) == list(coeff)


def test_complement_coordinates():
    U = Subspace.span([[1, 0, 2], [0, 0, 1]], GF(3), 3)
    assert U.pivots == (0, 2)
    assert U.complement_coordinates() == [1]
