"""The numba kernels and their numpy fallbacks must agree bit for bit."""

import numpy as np
import pytest

from pencilkit import kernels
from pencilkit.projective import all_points

PRIMES = [2, 3, 5, 7, 31]


@pytest.mark.parametrize("p", PRIMES)
def test_rref_agrees(p, rng):
    for _ in range(25):
        r, c = rng.integers(0, 7, size=2)
        M = rng.integers(0, p, size=(r, c)).astype(np.int64)
        R1, piv1 = kernels.rref_jit(M.copy(), p)
        R2, piv2 = kernels.rref_np(M.copy(), p)
        assert np.array_equal(R1, R2)
        assert list(piv1) == list(piv2)


@pytest.mark.parametrize("p", PRIMES)
def test_nullspace_agrees(p, rng):
    for _ in range(25):
        r, c = rng.integers(1, 7, size=2)
        M = rng.integers(0, p, size=(r, c)).astype(np.int64)
        N1 = kernels.nullspace_jit(M.copy(), p)
        N2 = kernels.nullspace_np(M.copy(), p)
        assert np.array_equal(N1, N2)
        assert not np.any((M @ N1.T) % p) if N1.size else True


@pytest.mark.parametrize("q,m", [(2, 1), (2, 4), (3, 3), (5, 2), (7, 3)])
def test_decode_agrees(q, m):
    total = kernels.count_projective_points(q, m)
    a = kernels.decode_points_jit(q, m, 0, total)
    b = kernels.decode_points_np(q, m, 0, total)
    assert np.array_equal(a, b)
    # lexicographic, normalized, distinct
    assert len({tuple(r) for r in a}) == total
    assert [tuple(r) for r in a] == sorted(tuple(r) for r in a)
    for row in a:
        assert row[np.flatnonzero(row)[0]] == 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_eigen_mask_and_eigenspaces_agree(q, rng):
    from pencilkit.field import GF

    f = GF(q)
    for _ in range(15):
        n, a, b = (int(x) for x in rng.integers(1, 4, size=3))
        alphas = rng.integers(0, q, size=(n, b, a)).astype(np.int64)
        total = kernels.count_projective_points(q, a)
        assert np.array_equal(kernels.eigen_mask_jit(alphas, q, 0, total),
                              kernels.eigen_mask_np(alphas, q, 0, total))
        lams = np.array([pt.coords for pt in all_points(f, n)], dtype=np.int64)
        B1, d1 = kernels.eigenspaces_jit(alphas, lams, q)
        B2, d2 = kernels.eigenspaces_np(alphas, lams, q)
        assert np.array_equal(d1, d2)
        for i in range(len(lams)):
            assert np.array_equal(B1[i, : d1[i]], B2[i, : d2[i]])


def test_count_projective_points():
    assert kernels.count_projective_points(5, 3) == 31
    assert kernels.count_projective_points(2, 0) == 0


def test_stacked_and_looped_numpy_eigenspaces_agree(rng):
    from pencilkit.field import GF

    for q in (2, 3, 7):
        for _ in range(10):
            n, a, b = (int(x) for x in rng.integers(1, 5, size=3))
            alphas = rng.integers(0, q, size=(n, b, a)).astype(np.int64)
            lams = np.array([pt.coords for pt in all_points(GF(q), n)], dtype=np.int64)
            B1, d1 = kernels.eigenspaces_np(alphas, lams, q)
            B2, d2 = kernels.eigenspaces_np(alphas, lams, q, stack_limit=0)
            assert np.array_equal(d1, d2)
            for i in range(len(lams)):
                assert np.array_equal(B1[i, : d1[i]], B2[i, : d2[i]])
