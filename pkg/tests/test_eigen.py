from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from pencilkit.eigen import (
    eigen_reports,
    eigenspaces,
    eigenvalue_of,
    eigenvalues,
    eigenvector_space,
    eigenvector_variety,
    eigenvector_variety_oracle,
    has_sufficiently_many,
    is_eigenvector,
)
from pencilkit.errors import (
    EnumerationTooLargeError,
    EnumerationUnsupportedError,
    ExplicitEigenvaluesRequiredError,
    NotAnEigenvectorError,
    ReducednessRequiredError,
)
from pencilkit.field import GF, QQ
from pencilkit.pencil import MatrixPencil, bristle, direct_sum, jordan_pencil, kronecker_wide, simple
from pencilkit.projective import ProjectivePoint, all_points
from pencilkit.randomgen import random_reduced_pencil


def test_bristle_eigenvector():
    f = GF(5)
    b = bristle([1, 3], f)
    assert is_eigenvector(b, [2])
    assert eigenvalue_of(b, [2]) == ProjectivePoint([1, 3], f)
    assert eigenvector_variety(b) == [ProjectivePoint([1], f)]


def test_not_an_eigenvector():
    f = GF(3)
    p = MatrixPencil.from_lists([[[1, 0], [0, 1]], [[0, 0], [1, 0]]], f)
    # e2 maps to (e2, 0): an eigenvector; e1 maps to (e1, e2): not one
    assert is_eigenvector(p, [0, 1])
    assert not is_eigenvector(p, [1, 0])
    with pytest.raises(NotAnEigenvectorError):
        eigenvalue_of(p, [1, 0])


def test_reducedness_required():
    f = GF(3)
    p = direct_sum(bristle([1, 0], f), simple(1, 2, f))
    with pytest.raises(ReducednessRequiredError):
        eigenvector_variety(p)
    with pytest.raises(ReducednessRequiredError):
        eigenvector_space(p, [1, 0])


def test_rational_needs_explicit_eigenvalues():
    p = bristle([1, Fraction(1, 2)], QQ)
    with pytest.raises(ExplicitEigenvaluesRequiredError):
        eigenvalues(p)
    with pytest.raises(EnumerationUnsupportedError):
        eigenvector_variety(p)
    lam = ProjectivePoint([2, 1], QQ)
    assert eigenvalues(p, [lam, ProjectivePoint([1, 0], QQ)]) == [lam]


def test_rational_jordan_eigenspace():
    p = jordan_pencil(3, Fraction(2, 3), QQ)
    U = eigenvector_space(p, [1, Fraction(2, 3)])
    assert U.dim == 1
    assert U.basis.tolist() == [[1, 0, 0]]
    assert eigenvector_space(p, [1, 0]).dim == 0


def test_budget_enforced():
    rng = np.random.default_rng(1)
    p = random_reduced_pencil(rng, 2, 4, 3, GF(5))
    with pytest.raises(EnumerationTooLargeError):
        eigenvector_variety_oracle(p, budget=10)


def test_batched_matches_single_route(rng):
    for q in (2, 3, 5):
        f = GF(q)
        for _ in range(10):
            n, b = (int(x) for x in rng.integers(1, 4, size=2))
            a = int(rng.integers(1, min(4, n * b) + 1))
            p = random_reduced_pencil(rng, n, a, b, f)
            lams = all_points(f, n)
            assert eigenspaces(p, lams) == [eigenvector_space(p, lam) for lam in lams]


def test_threads_do_not_change_results(rng):
    f = GF(3)
    p = random_reduced_pencil(rng, 3, 4, 2, f)
    assert eigenvector_variety(p, threads=1) == eigenvector_variety(p, threads=4)
    assert eigenvector_variety_oracle(p, threads=1) == eigenvector_variety_oracle(p, threads=7)


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3, 5]))
def test_primary_equals_oracle_property(seed, q):
    rng = np.random.default_rng(seed)
    n, b = (int(x) for x in rng.integers(1, 4, size=2))
    a = int(rng.integers(1, min(4, n * b) + 1))
    p = random_reduced_pencil(rng, n, a, b, GF(q))
    eps = eigenvector_variety(p)
    assert eps == eigenvector_variety_oracle(p)
    for pt in eps:
        assert is_eigenvector(p, pt.vector())


def test_eigenspaces_meet_trivially(rng):
    f = GF(3)
    for _ in range(10):
        p = random_reduced_pencil(rng, 2, 3, 3, f)
        spaces = [r.eigenspace for r in eigen_reports(p)]
        for i, U in enumerate(spaces):
            for V in spaces[i + 1:]:
                assert (U & V).dim == 0


def test_sufficiently_many():
    f = GF(5)
    b = direct_sum(bristle([1, 0], f), bristle([0, 1], f))
    assert has_sufficiently_many(b)
    assert not has_sufficiently_many(b, [ProjectivePoint([1, 0], f)])
    assert not has_sufficiently_many(jordan_pencil(2, 1, f))
    assert has_sufficiently_many(simple(2, 2, f))


@pytest.mark.parametrize("q", [2, 3, 5])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_wide_kronecker_variety_is_rational_curve(q, m):
    # eigenvectors of the (m+1, m) block trace a rational normal curve: q+1 points
    p = kronecker_wide(m, GF(q))
    pts = eigenvector_variety(p)
    assert pts == eigenvector_variety_oracle(p)
    assert len(pts) == q + 1
