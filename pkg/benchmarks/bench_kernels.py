"""Numba kernels vs their numpy fallbacks.

    python benchmarks/bench_kernels.py [--repeat 5]

Each row times one kernel on fixed random inputs and checks that both
versions return the same arrays. Compilation happens before timing.
"""

import argparse
import time

import numpy as np

from pencilkit import kernels
from pencilkit.field import GF
from pencilkit.projective import all_points


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def cases(rng):
    M = rng.integers(0, 7, size=(120, 160)).astype(np.int64)
    yield "rref 120x160 gf7", (lambda: kernels.rref_jit(M.copy(), 7)), (lambda: kernels.rref_np(M.copy(), 7))
    yield "nullspace 120x160 gf7", (lambda: kernels.nullspace_jit(M, 7)), (lambda: kernels.nullspace_np(M, 7))

    q, n, a, b = 5, 4, 6, 5
    alphas = rng.integers(0, q, size=(n, b, a)).astype(np.int64)
    lams = np.array([pt.coords for pt in all_points(GF(q), n)], dtype=np.int64)
    yield (f"eigenspaces {len(lams)} lambdas gf{q}",
           lambda: kernels.eigenspaces_jit(alphas, lams, q),
           lambda: kernels.eigenspaces_np(alphas, lams, q))

    total = kernels.count_projective_points(q, a)
    yield (f"eigen_mask P^{a - 1}(F_{q}) {total} pts",
           lambda: kernels.eigen_mask_jit(alphas, q, 0, total),
           lambda: kernels.eigen_mask_np(alphas, q, 0, total))

    q, m = 3, 10
    total = kernels.count_projective_points(q, m)
    yield (f"decode P^{m - 1}(F_{q}) {total} pts",
           lambda: kernels.decode_points_jit(q, m, 0, total),
           lambda: kernels.decode_points_np(q, m, 0, total))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':<36}{'numba s':>10}{'numpy s':>10}{'speedup':>9}  agree")
    for name, jit_fn, np_fn in cases(rng):
        jit_fn()  # compile
        t_jit, out_jit = best_of(jit_fn, args.repeat)
        t_np, out_np = best_of(np_fn, args.repeat)
        print(f"{name:<36}{t_jit:>10.4f}{t_np:>10.4f}{t_np / t_jit:>8.1f}x  {'yes' if same(out_jit, out_np) else 'NO'}")


if __name__ == "__main__":
    main()
