from fractions import Fraction

import pytest

from pencilkit.canonical import (
    QuadraticForm,
    beilinson_check,
    build_canonical,
    eval_quadratic,
    eval_quadrics_on_points,
    pair_index,
    quad_to_hom,
    veronese_d,
)
from pencilkit.eigen import eigenvector_space, eigenvector_variety
from pencilkit.errors import DimensionMismatchError, UnsupportedParameterError
from pencilkit.field import GF, QQ
from pencilkit.linalg import Subspace
from pencilkit.pencil import bristle, hom_dim, is_reduced
from pencilkit.projective import all_points, point_array


def test_pair_order():
    assert pair_index(3) == ((0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2))


def test_canonical_n3_matrices():
    C = build_canonical(3, GF(7)).pencil
    assert C.dim == (6, 3)
    assert C.alphas[0].tolist() == [[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]]
    assert C.alphas[1].tolist() == [[0, 1, 0, 0, 0, 0], [0, 0, 0, 1, 0, 0], [0, 0, 0, 0, 1, 0]]
    assert C.alphas[2].tolist() == [[0, 0, 1, 0, 0, 0], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]]
    assert is_reduced(C)


def test_canonical_rejects_n0():
    with pytest.raises(UnsupportedParameterError):
        build_canonical(0, GF(3))


def test_veronese():
    assert list(veronese_d([1, 2, 3], GF(7))) == [1, 2, 3, 4, 6, 2]
    assert list(veronese_d([Fraction(1, 2), 1], QQ)) == [Fraction(1, 4), Fraction(1, 2), 1]


def test_quadratic_form_from_dict():
    q = QuadraticForm.from_dict(3, {(2, 2): 1, (1, 3): -1}, GF(5))
    assert q.coeffs == (0, 0, 4, 1, 0, 0)
    assert eval_quadratic(q, [1, 2, 4]) == 0
    with pytest.raises(DimensionMismatchError):
        QuadraticForm(2, (1, 2), GF(5))


@pytest.mark.parametrize("field", [GF(3), GF(7), QQ], ids=str)
def test_phi_of_d_is_q(field, rng):
    from pencilkit.randomgen import random_quadrics, random_scalars

    for n in range(1, 5):
        C = build_canonical(n, field)
        for q in random_quadrics(rng, n, 5, field, density=0.8):
            c = random_scalars(rng, n, field)
            assert (quad_to_hom(q, C) @ veronese_d(c, field))[0] == eval_quadratic(q, c)


def test_batch_evaluation_matches_scalar(rng):
    from pencilkit.randomgen import random_quadrics

    f = GF(5)
    qs = random_quadrics(rng, 3, 3, f)
    pts = point_array(f, 3)
    vals = eval_quadrics_on_points(qs, pts, f)
    for row, v in zip(pts, vals):
        assert list(v) == [eval_quadratic(q, row) for q in qs]


@pytest.mark.parametrize("q", [2, 3, 5])
def test_unique_bristle_per_eigenvalue(q):
    f = GF(q)
    for n in range(1, 4):
        C = build_canonical(n, f).pencil
        for lam in all_points(f, n):
            assert hom_dim(bristle(lam), C) == 1
            assert eigenvector_space(C, lam) == Subspace.span(veronese_d(lam.coords, f), f, C.a)


def test_variety_of_c_is_veronese_image():
    f = GF(3)
    C = build_canonical(2, f).pencil
    eps = eigenvector_variety(C)
    from pencilkit.projective import ProjectivePoint

    assert eps == sorted(ProjectivePoint(veronese_d(l.coords, f), f) for l in all_points(f, 2))


@pytest.mark.parametrize("field", [GF(7), QQ], ids=str)
def test_end_c_is_k(field):
    for n in range(1, 5):
        C = build_canonical(n, field).pencil
        assert hom_dim(C, C) == 1


def test_beilinson_relations():
    assert all(beilinson_check(n, GF(7)) for n in range(1, 6))
    assert beilinson_check(3, QQ)
