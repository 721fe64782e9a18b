# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the prefix recurrences.

Semantics match ``cesaro_lab._kernels_py`` (the numpy reference backend);
see that module for the documented contracts.
"""

import numpy as np


def cesaro_apply(double t, double[::1] x):
    cdef Py_ssize_t n, size = x.shape[0]
    out = np.empty(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double s = 0.0
    for n in range(size):
        s = t * s + x[n]
        o[n] = s / (n + 1)
    return out


def resolvent_apply(double t, Py_ssize_t order, double[::1] x):
    cdef Py_ssize_t n, k, lo, size = x.shape[0]
    out = np.empty(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double s = 0.0
    cdef double acc
    if order >= size - 1:
        for n in range(size):
            s = t * s + x[n]
            o[n] = s
        return out
    for n in range(size):
        lo = n - order
        if lo < 0:
            lo = 0
        acc = 0.0
        for k in range(lo, n + 1):
            acc = t * acc + x[k]
        o[n] = acc
    return out


def convolve_prefix(double[::1] a, double[::1] x):
    cdef Py_ssize_t n, k, lo, last, size = x.shape[0]
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double acc
    last = size - 1
    while last >= 0 and a[last] == 0.0:
        last -= 1
    for n in range(size):
        acc = 0.0
        lo = n - last
        if lo < 0:
            lo = 0
        if lo > n:
            continue
        for k in range(lo, n + 1):
            acc += x[k] * a[n - k]
        o[n] = acc
    return out


def suffix_abs_max(double[::1] x):
    cdef Py_ssize_t n, size = x.shape[0]
    out = np.empty(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double best = 0.0
    cdef double v
    for n in range(size - 1, -1, -1):
        v = x[n]
        if v < 0.0:
            v = -v
        if v > best:
            best = v
        o[n] = best
    return out


def eigenvector_fill(double t, Py_ssize_t m, Py_ssize_t size):
    cdef Py_ssize_t n
    out = np.zeros(size, dtype=np.float64)
    cdef double[::1] o = out
    cdef double v = 1.0
    o[m] = 1.0
    for n in range(size - m - 1):
        v = v * ((m + n + 1) * t) / (n + 1)
        if v > 1e300:
            raise OverflowError(
                "eigenvector entry exceeds 1e300 at index %d" % (m + n + 1)
            )
        o[m + n + 1] = v
    return out
