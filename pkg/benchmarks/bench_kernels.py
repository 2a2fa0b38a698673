"""Time the compiled kernels against their interpreted originals.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both variants get identical inputs; results are compared before timing.
With BMODKIT_DISABLE_NUMBA set, the compiled column is skipped.
"""
import argparse
import time

import numpy as np

from bmodkit import _kernels as K
from bmodkit import bmods as S
from bmodkit import catalog as C
from bmodkit import lattice as L


def hom_args(M, N, equivariant=False):
    plan = M._hom_plan
    g = len(plan.gens)
    sigma_src = np.full(max(g, 1), -1, dtype=np.int64)
    cod_sigma = np.arange(N.n, dtype=np.int64)
    if equivariant:
        pos = {x: i for i, x in enumerate(plan.gens)}
        for i, x in enumerate(plan.gens):
            sigma_src[i] = pos[M.sigma[x]]
        cod_sigma = np.array(N.sigma, dtype=np.int64)
    allowed = np.ones((max(g, 1), N.n), dtype=bool)
    return (N.table, N.order, plan.gen_le, sigma_src, cod_sigma, allowed,
            plan.elem_gens, plan.ready_ptr, plan.ready_idx, plan.pair_ptr,
            plan.pair_x, plan.pair_y, M.table, False, L.DEFAULT_LIMIT, 0)


def cases():
    D = C.diagonal()
    B3 = L.powerset(list("abc"))
    big = S.s_functor(B3)
    small = S.s_functor(L.powerset(list("ab")))
    rng = np.random.default_rng(0)
    a = rng.integers(0, big.n, 6).astype(np.int64)
    b = rng.integers(0, big.n, 6).astype(np.int64)
    none = np.zeros(0, dtype=np.int64)
    f = np.array(big.sigma, dtype=np.int64)
    yield "hom search End(Q), equivariant", "hom_search", hom_args(D.Q, D.Q, True)
    yield "hom search I -> Q", "hom_search", hom_args(D.I, D.Q)
    yield "hom search B^3 -> B^3", "hom_search", hom_args(B3, B3)
    yield "hom search s(B^2) -> s(B^2), equivariant", "hom_search", hom_args(small, small, True)
    yield "congruence closure on s(B^3)", "close_congruence", (big.table, np.array(big.sigma), a, b)
    yield "congruence closure, no sigma", "close_congruence", (big.table, none, a, b)
    yield "join check on s(B^3)", "preserves_join", (big.table, big.table, f)
    yield "meet table of s(B^3)", "meet_table", (big.table, big.order)


def timed(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    print(f"numba disabled: {K.NUMBA_DISABLED}")
    print(f"{'case':45s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}")
    for label, name, a in cases():
        py = getattr(K, name + "_py")
        fast = getattr(K, name)
        if not K.NUMBA_DISABLED:
            if not same(py(*a), fast(*a)):
                raise SystemExit(f"{label}: results differ")
            fast(*a)  # warm-up compiles
        tp = timed(py, a, args.repeat)
        if K.NUMBA_DISABLED:
            print(f"{label:45s} {tp * 1e3:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        tf = timed(fast, a, args.repeat)
        print(f"{label:45s} {tp * 1e3:9.2f}ms {tf * 1e3:9.2f}ms {tp / tf:7.1f}x")


if __name__ == "__main__":
    main()
