"""Reference numpy/scipy backend for the hot prefix kernels.

Every function here has a compiled twin in ``_ckern`` (Cython). The package
selects the backend once at import time (see :mod:`cesaro_lab.kernels`); the
two implementations agree to floating-point roundoff and are benchmarked
against each other in ``benchmarks/bench_kernels.py``.

All kernels act on finite prefixes: a length-``N`` vector stands for the
infinite sequence extended by zeros, and because every operator involved is
lower triangular the returned prefix is exact for the represented sequence.
"""

from __future__ import annotations

import numpy as np
from scipy.signal import lfilter


def cesaro_apply(t: float, x: np.ndarray) -> np.ndarray:
    """Weighted averages out[n] = (sum_k t^(n-k) x_k) / (n+1) in O(N).

    Uses the first-order recurrence s_n = t*s_{n-1} + x_n realised as an IIR
    filter, then divides by n+1.
    """
    s = lfilter([1.0], [1.0, -t], x)
    return s / np.arange(1, x.shape[0] + 1, dtype=np.float64)


def resolvent_apply(t: float, order: int, x: np.ndarray) -> np.ndarray:
    """Partial geometric shift sum out = sum_{j<=order} t^j (S^j x) on the prefix."""
    n = x.shape[0]
    if order >= n - 1:
        return lfilter([1.0], [1.0, -t], x)
    window = np.power(t, np.arange(order + 1, dtype=np.float64))
    return np.convolve(x, window)[:n]


def convolve_prefix(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    """First N coordinates of the Cauchy product of two length-N prefixes."""
    return np.convolve(a, x)[: x.shape[0]]


def suffix_abs_max(x: np.ndarray) -> np.ndarray:
    """out[n] = max_{k >= n} |x_k| (suffix maximum of the absolute values)."""
    return np.maximum.accumulate(np.abs(x)[::-1])[::-1].copy()


def eigenvector_fill(t: float, m: int, size: int) -> np.ndarray:
    """Eigenvector prefix: 1 at index m, then the ratio recurrence
    v[m+n+1] = v[m+n] * (m+n+1) * t / (n+1).

    Raises OverflowError if any entry exceeds 1e300 (entries grow before
    they decay, so the guard fires only for t close to 1 with large m, N).
    """
    out = np.zeros(size, dtype=np.float64)
    out[m] = 1.0
    k = size - m - 1
    if k > 0:
        steps = np.arange(1, k + 1, dtype=np.float64)
        ratios = (m + steps) * t / steps
        with np.errstate(over="ignore"):
            tail = np.cumprod(ratios)
        if tail.size and np.max(tail) > 1e300:
            idx = int(np.argmax(tail > 1e300))
            raise OverflowError(
                "eigenvector entry exceeds 1e300 at index %d" % (m + idx + 1)
            )
        out[m + 1 :] = tail
    return out
