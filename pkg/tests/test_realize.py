import pytest

from pencilkit.canonical import QuadraticForm
from pencilkit.eigen import eigenvalue_of, eigenvalues, eigenvector_variety, eigenvector_variety_oracle
from pencilkit.errors import (
    DimensionMismatchError,
    EnumerationUnsupportedError,
    ReducednessRequiredError,
    UnsupportedParameterError,
)
from pencilkit.field import GF, QQ
from pencilkit.pencil import bristle, direct_sum, is_reduced, jordan_pencil, simple
from pencilkit.projective import point_count
from pencilkit.randomgen import random_bristled_pencil, random_quadrics
from pencilkit.realize import realize_variety, select_generating_bristles, squareize, verify_realization, zero_set


def conic(field):
    return QuadraticForm.from_dict(3, {(2, 2): 1, (1, 3): -1}, field)


def test_conic_over_gf5():
    r = realize_variety([conic(GF(5))])
    assert r.pencil.dim == (5, 3)
    rep = verify_realization(r)
    assert rep.passed and len(rep.point_set) == 6
    assert len(eigenvector_variety_oracle(r.pencil)) == 6


def test_empty_system_gives_c():
    r = realize_variety([], GF(3), n=2)
    assert r.pencil.dim == (3, 2)
    assert len(verify_realization(r).eigenvalue_set) == point_count(3, 2)
    with pytest.raises(UnsupportedParameterError):
        realize_variety([])


def test_mixed_inputs_rejected():
    with pytest.raises(DimensionMismatchError):
        realize_variety([conic(GF(5)), QuadraticForm.zero(2, GF(5))])


def test_rational_realization():
    r = realize_variety([conic(QQ)])
    assert r.pencil.dim == (5, 3) and is_reduced(r.pencil)
    from pencilkit.projective import ProjectivePoint

    on = ProjectivePoint([1, 2, 4], QQ)
    off = ProjectivePoint([1, 1, 2], QQ)
    assert eigenvalues(r.pencil, [on, off]) == [on]
    with pytest.raises(EnumerationUnsupportedError):
        verify_realization(r)


def test_zero_set_brute_force():
    f = GF(3)
    q = QuadraticForm.from_dict(2, {(1, 1): 1, (2, 2): 1}, f)  # x^2 + y^2 has no points mod 3
    assert zero_set([q], 2, f) == []
    r = realize_variety([q])
    assert verify_realization(r).passed and not eigenvector_variety(r.pencil)


def test_random_realizations(rng):
    for _ in range(20):
        f = GF(int(rng.choice([2, 3, 5])))
        n = int(rng.integers(1, 4))
        r = realize_variety(random_quadrics(rng, n, int(rng.integers(0, 4)), f), f, n=n)
        assert verify_realization(r).passed


def test_squareize_bristled(rng):
    f = GF(3)
    for _ in range(15):
        p = random_bristled_pencil(rng, 3, int(rng.integers(1, 5)), f, extra_s2=int(rng.integers(0, 2)))
        sq = squareize(p)
        assert sq.a == sq.b and is_reduced(sq)
        assert eigenvalues(sq) == eigenvalues(p)
        picks = select_generating_bristles(p)
        assert len(picks) == sq.a
        for lam, v in picks:
            assert eigenvalue_of(p, v) == lam


def test_squareize_drops_non_bristle_part():
    f = GF(3)
    p = direct_sum(bristle([1, 2], f), jordan_pencil(2, 1, f))
    sq = squareize(p)
    assert sq.dim == (2, 2)
    assert eigenvalues(sq) == eigenvalues(p)


def test_squareize_requires_reduced():
    f = GF(3)
    with pytest.raises(ReducednessRequiredError):
        squareize(direct_sum(bristle([1, 0], f), simple(1, 2, f)))
