#!/usr/bin/env python3
"""Benchmark the compiled capacity kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--channels N]

Each kernel runs the same randomized workload on every available backend;
results are cross-checked while timing. The grid scan is the hot spot: the
verification sweep evaluates the mutual information at 10^6 priors for each
of 10^3 channels.
"""

import argparse
import time

import numpy as np

from chancap import kernels


def random_channels(n, seed=12345):
    rng = np.random.default_rng(seed)
    m = rng.uniform(0, 1, (n, 2, 2))
    m /= m.sum(axis=2, keepdims=True)
    return [(float(a[0, 0]), float(a[1, 0])) for a in m]


def bench(fn, workload):
    t0 = time.perf_counter()
    out = [fn(*args) for args in workload]
    return time.perf_counter() - t0, out


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--channels", type=int, default=200,
                        help="random channels per workload (default 200)")
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"active backend: {kernels.BACKEND}; available: {', '.join(backends)}")
    if len(backends) == 1:
        print("compiled extension not built; timing the fallback only")

    channels = random_channels(args.channels)
    rng = np.random.default_rng(0)
    workloads = {
        "mi_binary (x100)": [
            (p00, p10, float(q))
            for p00, p10 in channels
            for q in rng.uniform(0, 1, 100)
        ],
        "capacity_ternary": channels,
        "ba_binary tol=1e-9": [(p00, p10, 1e-9, 100_000) for p00, p10 in channels],
        "capacity_grid step=1e-4": [(p00, p10, 1e-4) for p00, p10 in channels],
        "capacity_grid step=1e-6": [(p00, p10, 1e-6) for p00, p10 in channels[:10]],
    }

    width = max(map(len, workloads))
    header = f"{'kernel':<{width}}  " + "".join(f"{name:>12}" for name in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, workload in workloads.items():
        times = {}
        results = {}
        for name, impl in backends.items():
            fn = getattr(impl, label.split()[0].split("(")[0])
            times[name], results[name] = bench(fn, workload)
        if len(results) > 1:
            caps = {
                name: np.array([r[0] if isinstance(r, tuple) else r for r in out])
                for name, out in results.items()
            }
            vals = list(caps.values())
            assert np.max(np.abs(vals[0] - vals[1])) < 1e-10, f"backends disagree on {label}"
        line = f"{label:<{width}}  " + "".join(f"{times[n]:>11.4f}s" for n in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['compiled']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
