"""Numba kernels against the numpy fallback on random codes.

    python3 benchmarks/bench_kernels.py [--quick] [--repeat 3] [--threads 1]

Both paths are called directly, so one process measures both.  Outputs are
compared before any timing is reported.
"""

import argparse
import time

import numpy as np

from weightstar import field_new, kernels
from weightstar.geometry import pg_points, subspaces
from weightstar.kernels import _config

CASES = [
    # (p, m, k, n)
    (2, 1, 20, 64),
    (2, 1, 16, 200),
    (3, 1, 12, 40),
    (2, 2, 10, 30),
    (5, 1, 8, 24),
]
QUICK = [(2, 1, 16, 64), (3, 1, 9, 30), (2, 2, 8, 20)]


def best(fn, repeat):
    out, times = None, []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def bench_weights(case, repeat, threads, rng):
    p, m, k, n = case
    F = field_new(p, m)
    G = rng.integers(0, F.q, size=(k, n))
    fast_rows = kernels.prepare(F, G, use_numba=True)
    slow_rows = kernels.prepare(F, G, use_numba=False)
    kernels.message_weights(fast_rows, 0, min(16, F.q**k), use_numba=True)  # compile
    tf, wf = best(lambda: kernels.all_weights(fast_rows, threads), repeat)
    ts, ws = best(lambda: kernels.all_weights(slow_rows, threads), repeat)
    assert np.array_equal(wf, ws), "backends disagree"
    return f"weights GF({F.q}) [{n},{k}]", F.q**k, tf, ts


def bench_hyperplanes(case, repeat, rng):
    p, m, k, n = case
    F = field_new(p, m)
    k = min(k, 8)
    D = rng.integers(0, F.q, size=(4096, k))
    H = pg_points(F, k)[:, None, :]
    kernels.subspace_zero_counts(F, D[:2], H[:2], use_numba=True)
    tf, a = best(lambda: kernels.subspace_zero_counts(F, D, H, use_numba=True), repeat)
    ts, b = best(lambda: kernels.subspace_zero_counts(F, D, H, use_numba=False), repeat)
    assert np.array_equal(a, b), "backends disagree"
    return f"hyperplane counts GF({F.q})^{k}", len(H) * len(D), tf, ts


def bench_spans(case, repeat, rng):
    p, m, k, _ = case
    F = field_new(p, m)
    k = min(k, 6)
    w = rng.integers(0, 50, size=F.q**k)
    B = subspaces(F, k, 2)
    kernels.span_weight_sums(F, w, B[:2], use_numba=True)
    tf, a = best(lambda: kernels.span_weight_sums(F, w, B, use_numba=True), repeat)
    ts, b = best(lambda: kernels.span_weight_sums(F, w, B, use_numba=False), repeat)
    assert np.array_equal(a, b), "backends disagree"
    return f"2-dim span sums GF({F.q})^{k}", len(B) * F.q**2, tf, ts


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--threads", type=int, default=None)
    args = ap.parse_args()
    if not _config.USE_NUMBA:
        raise SystemExit("numba is disabled in this environment; nothing to compare")
    rng = np.random.default_rng(1)
    cases = QUICK if args.quick else CASES
    rows = []
    for c in cases:
        rows.append(bench_weights(c, args.repeat, args.threads, rng))
    for c in cases[:3]:
        rows.append(bench_hyperplanes(c, args.repeat, rng))
        rows.append(bench_spans(c, args.repeat, rng))
    print(f"{'kernel':34s} {'items':>10s} {'numba s':>9s} {'numpy s':>9s} {'speedup':>8s}")
    for name, items, tf, ts in rows:
        print(f"{name:34s} {items:10d} {tf:9.4f} {ts:9.4f} {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
