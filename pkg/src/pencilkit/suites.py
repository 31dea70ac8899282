"""Named invariant suites, shared by ``pencilkit check`` and the acceptance tests.

Each suite is a generator of :class:`CheckResult`; output depends only on the
seed and the requested size, never on the thread count.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from .canonical import QuadraticForm, build_canonical, beilinson_check, eval_quadratic, quad_to_hom, veronese_d
from .eigen import eigenspaces, eigenvector_space, eigenvector_variety, eigenvector_variety_oracle
from .field import GF, QQ, FieldSpec
from .linalg import Subspace
from .pencil import bristle, hom_dim
from .projective import all_points, e_vector
from .randomgen import random_pencil, random_quadrics, random_reduced_pencil, random_scalars
from .realize import realize_variety, verify_realization
from .reflect import (
    build_preprojectives,
    coxeter_dim,
    preprojective_dimvecs,
    sigma,
    theorem2_harness,
    tits_form,
)

SMALL_PRIMES = (2, 3, 5)


@dataclass(frozen=True)
class CheckResult:
    suite: str
    check: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        verdict = "pass" if self.passed else "fail"
        tail = f" {self.detail}" if self.detail else ""
        return f"suite={self.suite} check={self.check} result={verdict}{tail}"


def oracle_equivalence(seed: int = 0, count: int = 100, threads: int = 1) -> Iterator[CheckResult]:
    """Eigenvalue-indexed variety versus the P(F_q^a) scan on random reduced pencils."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        q = int(rng.choice(SMALL_PRIMES))
        n = int(rng.integers(1, 5))
        b = int(rng.integers(1, 5))
        a = int(rng.integers(1, min(4, n * b) + 1))
        f = GF(q)
        p = random_reduced_pencil(rng, n, a, b, f)
        primary = eigenvector_variety(p, threads)
        oracle = eigenvector_variety_oracle(p, threads=threads)
        spaces = [U for U in eigenspaces(p, all_points(f, n), threads) if U.dim]
        disjoint = all(
            spaces[i].intersection(spaces[j]).dim == 0
            for i in range(len(spaces)) for j in range(i + 1, len(spaces))
        )
        yield CheckResult("oracle-equivalence", f"{k}", primary == oracle and disjoint,
                          f"q={q} n={n} dim=({a},{b}) points={len(oracle)}")


def canonical_suite(seed: int = 0, count: int = 0, threads: int = 1) -> Iterator[CheckResult]:
    """End(C) = k, Hom(B, C) = k and the unique-bristle property."""
    for f in (GF(7), QQ):
        for n in range(1, 6):
            C = build_canonical(n, f).pencil
            d = hom_dim(C, C)
            yield CheckResult("canonical", f"end-{f}-n{n}", d == 1, f"hom_dim={d}")
    for q in SMALL_PRIMES:
        f = GF(q)
        for n in range(1, 5):
            C = build_canonical(n, f).pencil
            lams = all_points(f, n)
            bad = 0
            for lam in lams:
                U = eigenvector_space(C, lam)
                target = Subspace.span(veronese_d(lam.coords, f), f, C.a)
                if hom_dim(bristle(lam), C) != 1 or U != target:
                    bad += 1
            yield CheckResult("canonical", f"bristles-gf{q}-n{n}", bad == 0,
                              f"eigenvalues={len(lams)} bad={bad}")
    for n in range(1, 6):
        yield CheckResult("canonical", f"beilinson-n{n}", beilinson_check(n, GF(7)))


def quadric_correspondence(seed: int = 0, count: int = 10_000, threads: int = 1) -> Iterator[CheckResult]:
    """q(c) = q'(d(c)) on random pairs, per field kind."""
    rng = np.random.default_rng(seed)
    for f in (GF(5), QQ):
        ns = rng.integers(1, 5, size=count)
        bad = 0
        for n in range(1, 5):
            k = int(np.sum(ns == n))
            if k == 0:
                continue
            N = n * (n + 1) // 2
            coeffs = np.where(rng.random((k, N)) < 0.7, random_scalars(rng, (k, N), f), 0)
            points = random_scalars(rng, (k, n), f)
            C = build_canonical_cached(n, f)
            for row, c in zip(coeffs, points):
                q = QuadraticForm(n, tuple(row.tolist()), f)
                lhs = eval_quadratic(q, c)
                rhs = (quad_to_hom(q, C) @ veronese_d(c, f))[0]
                bad += lhs != rhs
        yield CheckResult("quadrics", f"phi-d-{f}", bad == 0, f"pairs={count} bad={bad}")


_C_CACHE: dict = {}


def build_canonical_cached(n: int, f: FieldSpec):
    key = (n, f)
    if key not in _C_CACHE:
        _C_CACHE[key] = build_canonical(n, f)
    return _C_CACHE[key]


def realization_suite(seed: int = 0, count: int = 200, threads: int = 1) -> Iterator[CheckResult]:
    """verify_realization on random quadric systems."""
    rng = np.random.default_rng(seed)
    for k in range(count):
        q = int(rng.choice(SMALL_PRIMES))
        n = int(rng.integers(1, 5))
        m = int(rng.integers(0, 5))
        f = GF(q)
        quads = random_quadrics(rng, n, m, f)
        r = realize_variety(quads, f, n=n)
        rep = verify_realization(r, threads)
        yield CheckResult("realization", f"{k}", rep.passed,
                          f"q={q} n={n} m={m} dim={r.pencil.dim} points={len(rep.point_set)}")


def reflection_suite(seed: int = 0, count: int = 20, threads: int = 1) -> Iterator[CheckResult]:
    """Preprojective series, the sigma dimension rule, Coxeter dims, E_0 saturation of B(e_1)."""
    for n in (2, 3):
        dvs = preprojective_dimvecs(n, 5)
        ok = all(tits_form(dv, n) == 1 and dv.a < dv.b for dv in dvs)
        yield CheckResult("reflection", f"dimvecs-n{n}", ok, " ".join(str(dv) for dv in dvs))
        for q in SMALL_PRIMES:
            f = GF(q)
            built = build_preprojectives(n, 5, f)
            dims_ok = [p.dim for p in built] == dvs
            empty = all(not eigenvector_variety(p, threads) for p in built)
            yield CheckResult("reflection", f"preprojective-n{n}-gf{q}", dims_ok and empty,
                              f"dims={'ok' if dims_ok else 'bad'} empty={'yes' if empty else 'no'}")
        C = build_canonical(n, GF(3)).pencil
        s2 = sigma(sigma(C))
        want = coxeter_dim(C.dim, n)
        yield CheckResult("reflection", f"coxeter-C-n{n}", s2.dim == want, f"got={s2.dim} want={want}")
    rng = np.random.default_rng(seed)
    bad = 0
    for _ in range(count):
        f = GF(int(rng.choice(SMALL_PRIMES)))
        n = int(rng.integers(1, 5))
        a, b = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        p = random_pencil(rng, n, a, b, f)
        z = sigma(p).a
        bad += z != n * a - p.combined().rank()
    yield CheckResult("reflection", "sigma-dim-rule", bad == 0, f"pencils={count} bad={bad}")
    report = theorem2_harness(bristle(e_vector(3, [0], GF(5))), 8, threads=threads)
    first = report.first_sufficient_t
    yield CheckResult("reflection", "e0-saturation-B(e1)-n3-gf5", first is not None,
                      f"first_sufficient_t={first}")


SUITES: dict[str, Callable[..., Iterator[CheckResult]]] = {
    "oracle-equivalence": oracle_equivalence,
    "canonical": canonical_suite,
    "quadrics": quadric_correspondence,
    "realization": realization_suite,
    "reflection": reflection_suite,
}
