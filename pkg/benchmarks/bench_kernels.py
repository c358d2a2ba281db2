#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure Python twins.

Times three workloads: the exhaustive fast-vs-naive Dedekind scan, a batch of
descent evaluations at large k, and a batch of matrix-invariant evaluations
on random words.

    python3 benchmarks/bench_kernels.py [--scan-kmax 800] [--batch 20000]
"""

import argparse
import random
import time
from math import gcd

import gamma0char._kernels_py as pure

try:
    import gamma0char._speedups as compiled
except ImportError:
    compiled = None

from gamma0char.sampling import random_sl2


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def bench_scan(kmax):
    rows = []
    if compiled is not None:
        n, t = timed(lambda: compiled.scan_fast_vs_naive(kmax))
        rows.append(("compiled", n, t))
    n, t = timed(lambda: pure.scan_fast_vs_naive(kmax))
    rows.append(("pure", n, t))
    return rows


def bench_fast(batch):
    rng = random.Random(1)
    pairs = []
    while len(pairs) < batch:
        k = rng.randrange(2, 10**6)
        h = rng.randrange(1, k)
        if gcd(h, k) == 1:
            pairs.append((h, k))
    rows = []
    if compiled is not None:
        _, t = timed(lambda: [compiled.dedekind_fast(h, k) for h, k in pairs])
        rows.append(("compiled", batch, t))
    _, t = timed(lambda: [pure.dedekind_fast(h, k) for h, k in pairs])
    rows.append(("pure", batch, t))
    return rows


def bench_psi(batch):
    rng = random.Random(2)
    mats = [random_sl2(rng, 40).entries() for _ in range(batch)]
    rows = []
    if compiled is not None:
        _, t = timed(lambda: [compiled.psi(*m) for m in mats])
        rows.append(("compiled", batch, t))
    _, t = timed(lambda: [pure.psi(*m) for m in mats])
    rows.append(("pure", batch, t))
    return rows


def report(title, rows, unit):
    print(f"\n{title}")
    compiled_time = next((t for backend, _, t in rows if backend == "compiled"), None)
    for backend, n, t in rows:
        rate = n / t if t else float("inf")
        note = ""
        if backend == "pure" and compiled_time:
            note = f"  ({t / compiled_time:.1f}x the compiled time)"
        print(f"  {backend:>8}: {t:8.3f}s  ({rate:,.0f} {unit}/s){note}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scan-kmax", type=int, default=800)
    parser.add_argument("--batch", type=int, default=20000)
    args = parser.parse_args()

    if compiled is None:
        print("compiled extension not available; timing the pure backend only")

    report(f"exhaustive fast-vs-naive scan, k <= {args.scan_kmax}", bench_scan(args.scan_kmax), "pairs")
    report(f"descent Dedekind sums, k < 10^6, batch {args.batch}", bench_fast(args.batch), "sums")
    report(f"matrix invariant on random words, batch {args.batch}", bench_psi(args.batch), "evals")


if __name__ == "__main__":
    main()
