"""Hot GF(p) kernels.

Every kernel exists twice: a loop version compiled with numba (``*_jit``)
and a vectorized numpy version (``*_np``). The unsuffixed names are bound
to one of them according to :mod:`pencilkit._accel`. All arrays are int64
holding canonical residues in ``[0, p)``; ``p < 2**31`` keeps every product
of two residues below ``2**62``.
"""

from __future__ import annotations

import numpy as np

from ._accel import USE_NUMBA, njit

__all__ = [
    "count_projective_points",
    "decode_indices",
    "decode_points",
    "eigen_mask",
    "eigenspaces",
    "nullspace",
    "rref",
]


def count_projective_points(q: int, m: int) -> int:
    """Number of points of P^{m-1}(F_q), i.e. (q^m - 1)/(q - 1)."""
    if m <= 0:
        return 0
    return (q**m - 1) // (q - 1)


# ---------------------------------------------------------------------------
# numba loop kernels


@njit
def _inv_mod_jit(x, p):
    r0, r1 = p, x % p
    s0, s1 = 0, 1
    while r1 != 0:
        quo = r0 // r1
        r0, r1 = r1, r0 - quo * r1
        s0, s1 = s1, s0 - quo * s1
    return s0 % p


@njit
def _rref_inplace_jit(M, p):
    rows, cols = M.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if M[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                tmp = M[r, j]
                M[r, j] = M[piv, j]
                M[piv, j] = tmp
        inv = _inv_mod_jit(M[r, c], p)
        if inv != 1:
            for j in range(c, cols):
                M[r, j] = M[r, j] * inv % p
        for i in range(rows):
            if i == r:
                continue
            f = M[i, c]
            if f == 0:
                continue
            for j in range(c, cols):
                if M[r, j] != 0:
                    M[i, j] = (M[i, j] - f * M[r, j]) % p
        pivots[r] = c
        r += 1
    return pivots[:r]


@njit
def rref_jit(M, p):
    R = M.copy() % p
    pivots = _rref_inplace_jit(R, p)
    return R, pivots


@njit
def _nullspace_from_rref_jit(R, pivots, p):
    cols = R.shape[1]
    rank = pivots.shape[0]
    is_pivot = np.zeros(cols, dtype=np.bool_)
    for k in range(rank):
        is_pivot[pivots[k]] = True
    out = np.zeros((cols - rank, cols), dtype=np.int64)
    row = 0
    for f in range(cols):
        if is_pivot[f]:
            continue
        out[row, f] = 1
        for k in range(rank):
            out[row, pivots[k]] = (p - R[k, f]) % p
        row += 1
    return out


@njit
def nullspace_jit(M, p):
    R, pivots = rref_jit(M, p)
    return _nullspace_from_rref_jit(R, pivots, p)


@njit
def eigenspaces_jit(alphas, lams, p):
    """Canonical eigenvector-space basis for every eigenvalue in ``lams``.

    ``alphas`` is (n, b, a). Returns ``(bases, dims)`` with ``bases[l, :dims[l]]``
    the reduced echelon basis for ``lams[l]``.
    """
    n, b, a = alphas.shape
    L = lams.shape[0]
    bases = np.zeros((L, a, a), dtype=np.int64)
    dims = np.zeros(L, dtype=np.int64)
    for l in range(L):
        t = 0
        while lams[l, t] == 0:
            t += 1
        lt = lams[l, t]
        S = np.zeros(((n - 1) * b, a), dtype=np.int64)
        blk = 0
        for i in range(n):
            if i == t:
                continue
            li = lams[l, i]
            for r in range(b):
                for c in range(a):
                    S[blk * b + r, c] = (lt * alphas[i, r, c] - li * alphas[t, r, c]) % p
            blk += 1
        K = nullspace_jit(S, p)
        Kr, kp = rref_jit(K, p)
        d = kp.shape[0]
        dims[l] = d
        for r in range(d):
            for c in range(a):
                bases[l, r, c] = Kr[r, c]
    return bases, dims


@njit
def _decode_point_jit(idx, q, m, out):
    # block j holds the points whose leading 1 sits at position m-1-j
    j = 0
    start = 0
    size = 1
    while idx >= start + size:
        start += size
        size *= q
        j += 1
    off = idx - start
    lead = m - 1 - j
    for c in range(m):
        out[c] = 0
    out[lead] = 1
    for c in range(m - 1, lead, -1):
        out[c] = off % q
        off //= q


@njit
def decode_points_jit(q, m, start, stop):
    out = np.zeros((stop - start, m), dtype=np.int64)
    for idx in range(start, stop):
        _decode_point_jit(idx, q, m, out[idx - start])
    return out


@njit
def eigen_mask_jit(alphas, q, start, stop):
    """Brute-force eigenvector test for points ``start..stop`` of P(F_q^a)."""
    n, b, a = alphas.shape
    mask = np.zeros(stop - start, dtype=np.bool_)
    v = np.zeros(a, dtype=np.int64)
    X = np.zeros((n, b), dtype=np.int64)
    for idx in range(start, stop):
        _decode_point_jit(idx, q, a, v)
        for i in range(n):
            for r in range(b):
                s = 0
                for c in range(a):
                    s = (s + alphas[i, r, c] * v[c]) % q
                X[i, r] = s
        w = -1
        for i in range(n):
            for r in range(b):
                if X[i, r] != 0:
                    w = i
                    break
            if w >= 0:
                break
        if w < 0:
            continue
        r0 = 0
        while X[w, r0] == 0:
            r0 += 1
        ok = True
        for i in range(w + 1, n):
            for r in range(b):
                if (X[i, r] * X[w, r0] - X[w, r] * X[i, r0]) % q != 0:
                    ok = False
                    break
            if not ok:
                break
        mask[idx - start] = ok
    return mask


# ---------------------------------------------------------------------------
# numpy kernels


def rref_np(M, p):
    R = np.array(M, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(R[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        R[r, c:] = R[r, c:] * pow(int(R[r, c]), -1, p) % p
        # only rows with a nonzero in column c change, and only from column c on
        hit = np.flatnonzero(R[:, c])
        hit = hit[hit != r]
        if hit.size:
            R[np.ix_(hit, np.arange(c, cols))] = (R[hit, c:] - np.outer(R[hit, c], R[r, c:])) % p
        pivots.append(c)
        r += 1
    return R, np.array(pivots, dtype=np.int64)


def nullspace_np(M, p):
    R, pivots = rref_np(M, p)
    cols = R.shape[1]
    rank = len(pivots)
    free = np.setdiff1d(np.arange(cols), pivots)
    out = np.zeros((len(free), cols), dtype=np.int64)
    out[np.arange(len(free)), free] = 1
    if rank:
        out[:, pivots] = (-R[:rank, free].T) % p
    return out


def _rref_stack_np(S, p):
    """RREF of every matrix in an (L, m, k) stack at once.

    Returns the reduced stack, the rank of each matrix and an (L, k) array
    giving the pivot row of each column (-1 for free columns).
    """
    R = np.array(S, dtype=np.int64) % p
    L, m, k = R.shape
    rank = np.zeros(L, dtype=np.int64)
    pivot_row = np.full((L, k), -1, dtype=np.int64)
    row_ids = np.arange(m)
    for c in range(k):
        cand = (R[:, :, c] != 0) & (row_ids[None, :] >= rank[:, None])
        b = np.flatnonzero(cand.any(axis=1))
        if b.size == 0:
            continue
        src = np.argmax(cand[b], axis=1)
        dst = rank[b]
        top, other = R[b, dst].copy(), R[b, src].copy()
        R[b, src] = top
        R[b, dst] = other
        inv = np.array([pow(int(x), -1, p) for x in R[b, dst, c]], dtype=np.int64)
        R[b, dst] = R[b, dst] * inv[:, None] % p
        f = R[b, :, c].copy()
        f[np.arange(b.size), dst] = 0
        R[b] = (R[b] - f[:, :, None] * R[b, dst][:, None, :]) % p
        pivot_row[b, c] = dst
        rank[b] += 1
    return R, rank, pivot_row


def _eigenspaces_stack_np(alphas, lams, p):
    n, b, a = alphas.shape
    L = lams.shape[0]
    t = np.argmax(lams != 0, axis=1)
    lt = lams[np.arange(L), t]
    # rows for every i; the i = t block is identically zero and does no harm
    S = (lt[:, None, None, None] * alphas[None]
         - lams[:, :, None, None] * alphas[t][:, None]) % p  # (L, n, b, a)
    R, _, pivot_row = _rref_stack_np(S.reshape(L, n * b, a), p)
    free = pivot_row < 0
    # T[l, c, :] is the pivot row owning column c (zero for free columns)
    T = np.where(free[:, :, None], 0, R[np.arange(L)[:, None], np.maximum(pivot_row, 0)])
    K = np.where(free[:, :, None], np.eye(a, dtype=np.int64)[None] - T.transpose(0, 2, 1), 0) % p
    bases, dims, _ = _rref_stack_np(K, p)
    return bases, dims


def eigenspaces_np(alphas, lams, p, stack_limit=4096):
    alphas = np.asarray(alphas, dtype=np.int64)
    lams = np.asarray(lams, dtype=np.int64)
    n, b, a = alphas.shape
    L = lams.shape[0]
    if L and n * b * a <= stack_limit:
        return _eigenspaces_stack_np(alphas, lams, p)
    bases = np.zeros((L, a, a), dtype=np.int64)
    dims = np.zeros(L, dtype=np.int64)
    for l in range(L):
        lam = lams[l]
        t = int(np.flatnonzero(lam)[0])
        others = [i for i in range(n) if i != t]
        blocks = [lam[t] * alphas[i] - lam[i] * alphas[t] for i in others]
        S = np.concatenate(blocks, axis=0) % p if blocks else np.zeros((0, a), np.int64)
        K = nullspace_np(S, p)
        Kr, kp = rref_np(K, p)
        d = len(kp)
        dims[l] = d
        bases[l, :d] = Kr[:d]
    return bases, dims


def decode_points_np(q, m, start, stop):
    return decode_indices(q, m, np.arange(start, stop, dtype=np.int64))


def decode_indices(q, m, idx):
    """Points at arbitrary positions of the lexicographic order (numpy only)."""
    idx = np.asarray(idx, dtype=np.int64)
    out = np.zeros((idx.size, m), dtype=np.int64)
    if idx.size == 0:
        return out
    starts = np.array([(q**j - 1) // (q - 1) for j in range(m + 1)], dtype=np.int64)
    j = np.searchsorted(starts, idx, side="right") - 1
    off = idx - starts[j]
    lead = m - 1 - j
    out[np.arange(idx.size), lead] = 1
    for c in range(m - 1, -1, -1):
        live = c > lead
        out[live, c] = off[live] % q
        off = np.where(live, off // q, off)
    return out


def eigen_mask_np(alphas, q, start, stop, chunk=4096):
    """Rank-exactly-one test through 2x2 minors, vectorized over points."""
    alphas = np.asarray(alphas, dtype=np.int64)
    n, b, a = alphas.shape
    mask = np.zeros(stop - start, dtype=bool)
    for lo in range(start, stop, chunk):
        hi = min(lo + chunk, stop)
        V = decode_points_np(q, a, lo, hi)
        X = np.einsum("irc,Nc->Nri", alphas, V) % q  # (N, b, n)
        nonzero = X.reshape(len(V), -1).any(axis=1)
        minors = (
            X[:, :, None, :, None] * X[:, None, :, None, :]
            - X[:, :, None, None, :] * X[:, None, :, :, None]
        ) % q
        rank_le1 = ~minors.reshape(len(V), -1).any(axis=1)
        mask[lo - start : hi - start] = nonzero & rank_le1
    return mask


# ---------------------------------------------------------------------------
# dispatch

if USE_NUMBA:
    rref = rref_jit
    nullspace = nullspace_jit
    eigenspaces = eigenspaces_jit
    decode_points = decode_points_jit
    eigen_mask = eigen_mask_jit
else:
    rref = rref_np
    nullspace = nullspace_np
    eigenspaces = eigenspaces_np
    decode_points = decode_points_np
    eigen_mask = eigen_mask_np
