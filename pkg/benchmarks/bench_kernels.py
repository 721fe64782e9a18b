#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy reference backend.

Times each kernel on a prefix of length --n, plus a search-shaped workload
(one operator-norm ratio evaluation: averaging apply + majorant norm), and
prints one table row per kernel with the speedup. Run after building the
extension; if the extension is unavailable only the reference column is
reported.

    python benchmarks/bench_kernels.py --n 512 --repeat 2000
"""

import argparse
import timeit

import numpy as np

from cesaro_lab import _kernels_py

try:
    from cesaro_lab import _ckern
except ImportError:
    _ckern = None


def workloads(n: int):
    rng = np.random.default_rng(0)
    x = rng.random(n)
    a = np.zeros(n)
    a[: max(1, n // 32)] = rng.random(max(1, n // 32))
    order = n // 4

    def ratio_eval(mod):
        y = mod.cesaro_apply(0.75, x)
        m = mod.suffix_abs_max(y)
        return np.sqrt(np.dot(m, m))

    return [
        ("cesaro_apply", lambda mod: mod.cesaro_apply(0.75, x)),
        ("resolvent_apply(full)", lambda mod: mod.resolvent_apply(0.75, n, x)),
        ("resolvent_apply(trunc)", lambda mod: mod.resolvent_apply(0.75, order, x)),
        ("convolve_prefix", lambda mod: mod.convolve_prefix(a, x)),
        ("suffix_abs_max", lambda mod: mod.suffix_abs_max(x)),
        ("eigenvector_fill", lambda mod: mod.eigenvector_fill(0.9, 5, n)),
        ("norm-ratio eval", ratio_eval),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=512)
    parser.add_argument("--repeat", type=int, default=2000)
    args = parser.parse_args()

    rows = []
    for name, fn in workloads(args.n):
        t_py = timeit.timeit(lambda: fn(_kernels_py), number=args.repeat) / args.repeat
        if _ckern is not None:
            t_c = timeit.timeit(lambda: fn(_ckern), number=args.repeat) / args.repeat
            rows.append((name, t_py * 1e6, t_c * 1e6, t_py / t_c))
        else:
            rows.append((name, t_py * 1e6, float("nan"), float("nan")))

    header = "%-24s %12s %12s %9s" % ("kernel", "numpy (us)", "cython (us)", "speedup")
    print(header)
    print("-" * len(header))
    for name, t_py, t_c, speedup in rows:
        print("%-24s %12.2f %12.2f %8.1fx" % (name, t_py, t_c, speedup))
    if _ckern is None:
        print("(compiled extension not available; install with the build step)")


if __name__ == "__main__":
    main()
