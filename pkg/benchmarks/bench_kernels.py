"""Time the numba kernels against the numpy fallback on fixed workloads.

Usage: python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each workload is run once per backend to warm up (numba compiles on the
first call) and then timed; the best of ``--repeat`` runs is reported,
together with a check that both backends return identical results.
"""
import argparse
import time

import numpy as np

from helly import _kernels as K
from helly._kernels import numpy_impl
from helly.codes import golay_code
from helly.extremal import _event_params, family_from_code, prop21_family

try:
    from helly._kernels import numba_impl
except ImportError:  # numba missing
    numba_impl = None


def workloads(quick):
    rng = np.random.default_rng(0)
    golay = golay_code().packed()
    A = rng.integers(0, 3, (600 if quick else 2000, 16)).astype(np.int64)
    inside = rng.integers(0, 3, (6, 11)).astype(np.int64)
    ev = prop21_family(9) if quick else family_from_code(golay_code(), 16).subfamily(range(16))
    X = rng.integers(0, 3, (400, 10)).astype(np.int64)
    F = rng.integers(-1, 3, (400, 10)).astype(np.int64)
    yield "packed_min_distance (Golay, 4096 words)", "packed_min_distance", (golay,)
    yield "packed_cross_distances (Golay x Golay)", "packed_cross_distances", (golay, golay)
    yield f"cross_distances ({len(A)}x{len(A)}, n=16)", "cross_distances", (A, A)
    yield "first_point (3^11 scan, 6 balls, none found)", "first_point", (
        3, 11, inside, 0, np.zeros(11, dtype=np.int64), False, 0, 3**11)
    yield f"event_counts (2^{ev.n} strings, {ev.m} events)", "event_counts", (ev.n, *_event_params(ev))
    yield "nonzero_pattern (400x400, n=10)", "nonzero_pattern", (X, F)


def best_of(fn, args, repeat):
    fn(*args)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def same(x, y):
    if isinstance(x, tuple):
        return all(same(a, b) for a, b in zip(x, y))
    return np.array_equal(np.asarray(x), np.asarray(y))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller workloads")
    args = ap.parse_args()
    print(f"dispatch backend: {K.BACKEND}")
    print(f"{'workload':52s} {'numpy s':>10s} {'numba s':>10s} {'speedup':>8s}  agree")
    for label, name, inputs in workloads(args.quick):
        t_np, out_np = best_of(getattr(numpy_impl, name), inputs, args.repeat)
        if numba_impl is None:
            print(f"{label:52s} {t_np:10.4f} {'-':>10s} {'-':>8s}  -")
            continue
        t_nb, out_nb = best_of(getattr(numba_impl, name), inputs, args.repeat)
        print(f"{label:52s} {t_np:10.4f} {t_nb:10.4f} {t_np / t_nb:8.1f}x  {same(out_np, out_nb)}")


if __name__ == "__main__":
    main()
