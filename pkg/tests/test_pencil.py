import numpy as np
import pytest

from pencilkit.errors import DimensionMismatchError, InvalidWitnessError
from pencilkit.field import GF, QQ
from pencilkit.linalg import Matrix
from pencilkit.pencil import (
    MatrixPencil,
    bristle,
    direct_sum,
    hom_dim,
    is_equivalence_witness,
    is_reduced,
    jordan_pencil,
    kronecker_tall,
    kronecker_wide,
    reduced_decomposition,
    simple,
)
from pencilkit.randomgen import random_invertible, random_pencil


def test_construction_and_shape_checks():
    f = GF(5)
    p = MatrixPencil.from_lists([[[1, 0]], [[0, 1]]], f)
    assert p.n == 2 and p.dim == (2, 1) and str(p.dim) == "(2,1)"
    with pytest.raises(DimensionMismatchError):
        MatrixPencil([Matrix.zeros(1, 2, f), Matrix.zeros(2, 2, f)])
    with pytest.raises(AttributeError):
        p.a = 3


def test_stacked_and_combined():
    f = GF(7)
    p = MatrixPencil.from_lists([[[1, 2]], [[3, 4]]], f)
    assert p.stacked().tolist() == [[1, 2], [3, 4]]
    assert p.combined().tolist() == [[1, 2, 3, 4]]


def test_simples_and_reducedness():
    f = GF(3)
    assert not is_reduced(simple(1, 2, f))
    assert is_reduced(simple(2, 2, f))
    assert is_reduced(bristle([1, 2], f))
    assert not is_reduced(direct_sum(bristle([1, 0], f), simple(1, 2, f)))


@pytest.mark.parametrize("field", [GF(2), GF(5), QQ], ids=str)
def test_reduced_decomposition_witness(field, rng):
    for _ in range(20):
        n, a, b = (int(x) for x in rng.integers(1, 4, size=3))
        core = random_pencil(rng, n, a, b, field)
        p = direct_sum(core, MatrixPencil.zero(n, field, a=int(rng.integers(0, 3)), b=0))
        p = p.transformed(random_invertible(rng, p.a, field), Matrix.identity(p.b, field))
        dec = reduced_decomposition(p)
        assert is_reduced(dec.reduced)
        assert dec.s + dec.reduced.a == p.a
        assert dec.s == p.a - p.stacked().rank()
        assert is_equivalence_witness(p, dec.split_pencil(), dec.beta, dec.gamma)


def test_witness_rejects_singular():
    f = GF(3)
    p = bristle([1, 1], f)
    with pytest.raises(InvalidWitnessError):
        is_equivalence_witness(p, p, Matrix.zeros(1, 1, f), Matrix.identity(1, f))


def test_hom_dims_known_values():
    f = GF(5)
    b1, b2 = bristle([1, 0], f), bristle([0, 1], f)
    assert hom_dim(b1, b1) == 1
    assert hom_dim(b1, b2) == 0
    assert hom_dim(simple(2, 2, f), simple(1, 2, f)) == 0
    assert hom_dim(simple(1, 2, f), simple(1, 2, f)) == 1
    # Hom(S(2), B) = k, Hom(B, S(2)) = 0 as S(2) is the socle
    assert hom_dim(simple(2, 2, f), b1) == 1
    assert hom_dim(b1, simple(2, 2, f)) == 0


def test_hom_dim_against_brute_force():
    # independent count: enumerate all (F1, F2) over GF(2)
    f = GF(2)
    rng = np.random.default_rng(3)
    for _ in range(10):
        p = random_pencil(rng, 2, 1, 2, f)
        q = random_pencil(rng, 2, 2, 1, f)
        count = 0
        for bits in range(2 ** 4):
            F1 = np.array([(bits >> i) & 1 for i in range(2)]).reshape(2, 1)
            F2 = np.array([(bits >> i) & 1 for i in range(2, 4)]).reshape(1, 2)
            if all(np.array_equal((qa.data @ F1) % 2, (F2 @ pa.data) % 2)
                   for pa, qa in zip(p.alphas, q.alphas)):
                count += 1
        assert 2 ** hom_dim(p, q) == count


def test_kronecker_blocks():
    f = GF(3)
    assert kronecker_wide(2, f).dim == (3, 2)
    assert kronecker_tall(2, f).dim == (2, 3)
    assert jordan_pencil(3, 1, f).dim == (3, 3)
    assert jordan_pencil(2, None, f).alphas[1] == Matrix.identity(2, f)
