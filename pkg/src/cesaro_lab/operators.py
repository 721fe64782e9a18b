"""Operators on finite sequence prefixes.

Every operator here is lower triangular, so output coordinate n depends only
on input coordinates 0..n and the computed prefix is exact for the
zero-extended input. The O(N) recurrence is the canonical implementation of
the averaging operator; the dense matrix exists for spectral work and
cross-checking.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import kernels

__all__ = [
    "apply_cesaro",
    "apply_diagonal",
    "apply_shift",
    "apply_resolvent_partial",
    "convolve",
    "cesaro_matrix",
    "apply_diagonal_truncated",
    "apply_cesaro_truncated",
    "eigenvector",
    "OperatorSpec",
    "apply_operator",
    "matrix_to_csv",
]


def _check_t(t: float, *, allow_one: bool) -> float:
    if not 0.0 <= t <= 1.0 or (not allow_one and t >= 1.0):
        limit = "[0, 1]" if allow_one else "[0, 1)"
        raise ValueError("parameter t must lie in %s, got %r" % (limit, t))
    return float(t)


def apply_cesaro(t: float, x: np.ndarray) -> np.ndarray:
    """Weighted averaging operator: out[n] = (sum_{k<=n} t^(n-k) x_k)/(n+1).

    t = 0 is the diagonal operator, t = 1 plain averaging. Computed by the
    recurrence s_n = t s_{n-1} + x_n, out_n = s_n/(n+1) in O(N).
    """
    _check_t(t, allow_one=True)
    return kernels.cesaro_apply(float(t), np.ascontiguousarray(x, dtype=np.float64))


def apply_diagonal(x: np.ndarray) -> np.ndarray:
    """Diagonal scaling out[n] = x[n]/(n+1)."""
    x = np.asarray(x, dtype=np.float64)
    return x / np.arange(1, x.shape[0] + 1, dtype=np.float64)


def apply_shift(m: int, x: np.ndarray) -> np.ndarray:
    """Right shift by m places; output keeps the input length.

    Coordinates pushed past the prefix are dropped, which does not affect
    any downstream prefix computation (all operators are lower triangular).
    """
    if m < 0:
        raise ValueError("shift power must be >= 0")
    x = np.asarray(x, dtype=np.float64)
    n = x.shape[0]
    out = np.zeros(n, dtype=np.float64)
    if m < n:
        out[m:] = x[: n - m]
    return out


def apply_resolvent_partial(t: float, order: int, x: np.ndarray) -> np.ndarray:
    """Partial shift series sum_{j<=order} t^j (S^j x) on the prefix.

    For order >= N-1 the result is exact on the prefix (later terms vanish
    there), so it realises the full geometric shift series.
    """
    _check_t(t, allow_one=False)
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    return kernels.resolvent_apply(
        float(t), int(order), np.ascontiguousarray(x, dtype=np.float64)
    )


def convolve(a: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Cauchy product out[n] = sum_{j<=n} x_j a_{n-j}; commutative."""
    a = np.ascontiguousarray(a, dtype=np.float64)
    x = np.ascontiguousarray(x, dtype=np.float64)
    if a.shape[0] != x.shape[0]:
        raise ValueError("length mismatch: %d vs %d" % (a.shape[0], x.shape[0]))
    return kernels.convolve_prefix(a, x)


def cesaro_matrix(t: float, order: int) -> np.ndarray:
    """Dense lower-triangular section M[i, j] = t^(i-j)/(i+1) for j <= i."""
    _check_t(t, allow_one=True)
    if order < 1:
        raise ValueError("matrix order must be >= 1")
    i = np.arange(order)
    exponents = i[:, None] - i[None, :]
    powers = np.where(exponents >= 0, np.power(float(t), np.maximum(exponents, 0)), 0.0)
    return powers / (i[:, None] + 1.0)


def apply_diagonal_truncated(order: int, x: np.ndarray) -> np.ndarray:
    """Finite-rank diagonal: keep out[n] = x[n]/(n+1) for n <= order, zero after."""
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    out = apply_diagonal(x)
    out[order + 1 :] = 0.0
    return out


def apply_cesaro_truncated(t: float, order: int, x: np.ndarray) -> np.ndarray:
    """Finite-rank averaging: first order+1 output coordinates, zeros after."""
    _check_t(t, allow_one=False)
    if order < 0:
        raise ValueError("truncation order must be >= 0")
    out = apply_cesaro(t, x)
    out[order + 1 :] = 0.0
    return out


def eigenvector(t: float, m: int, size: int) -> np.ndarray:
    """Eigenvector prefix for eigenvalue 1/(m+1) of the averaging operator.

    Zeros below index m, 1 at m, then the ratio recurrence
    v[m+n+1] = v[m+n]*(m+n+1)*t/(n+1) (never via factorials). Entries grow
    while (m+n+1)t/(n+1) > 1 and decay afterwards; an overflow guard raises
    if any entry exceeds 1e300.
    """
    _check_t(t, allow_one=False)
    if not 0 <= m < size:
        raise IndexError("eigenvector index %d out of range for length %d" % (m, size))
    return kernels.eigenvector_fill(float(t), int(m), int(size))


@dataclass(frozen=True)
class OperatorSpec:
    """Tagged description of an operator action on prefixes.

    kind is one of CesaroT, Diagonal, Shift, ResolventPartial, Convolution,
    DiagonalTruncated, CesaroTruncated; t, m, order, a are the parameters
    used by the respective kinds.
    """

    kind: str
    t: float | None = None
    m: int | None = None
    order: int | None = None
    a: tuple[float, ...] | None = None

    _KINDS = (
        "CesaroT",
        "Diagonal",
        "Shift",
        "ResolventPartial",
        "Convolution",
        "DiagonalTruncated",
        "CesaroTruncated",
    )

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise ValueError("unknown operator kind %r" % self.kind)
        if self.kind in ("CesaroT", "ResolventPartial", "CesaroTruncated"):
            if self.t is None:
                raise ValueError("%s requires parameter t" % self.kind)
            _check_t(self.t, allow_one=self.kind == "CesaroT")
        if self.kind == "Shift" and (self.m is None or self.m < 0):
            raise ValueError("Shift requires power m >= 0")
        if self.kind in ("ResolventPartial", "DiagonalTruncated", "CesaroTruncated"):
            if self.order is None or self.order < 0:
                raise ValueError("%s requires truncation order >= 0" % self.kind)
        if self.kind == "Convolution" and self.a is None:
            raise ValueError("Convolution requires the kernel sequence a")

    def label(self) -> str:
        parts = []
        if self.t is not None:
            parts.append("t=%g" % self.t)
        if self.m is not None:
            parts.append("m=%d" % self.m)
        if self.order is not None:
            parts.append("M=%d" % self.order)
        if self.a is not None:
            parts.append("|a|=%d" % len(self.a))
        return "%s(%s)" % (self.kind, ",".join(parts))

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.t is not None:
            out["t"] = self.t
        if self.m is not None:
            out["m"] = self.m
        if self.order is not None:
            out["M"] = self.order
        if self.a is not None:
            out["a"] = list(self.a)
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "OperatorSpec":
        a = data.get("a")
        return cls(
            kind=data["kind"],
            t=data.get("t"),
            m=data.get("m"),
            order=data.get("M"),
            a=tuple(float(v) for v in a) if a is not None else None,
        )


def apply_operator(spec: OperatorSpec, x: np.ndarray) -> np.ndarray:
    """Dispatch a tagged operator onto a prefix."""
    if spec.kind == "CesaroT":
        return apply_cesaro(spec.t, x)
    if spec.kind == "Diagonal":
        return apply_diagonal(x)
    if spec.kind == "Shift":
        return apply_shift(spec.m, x)
    if spec.kind == "ResolventPartial":
        return apply_resolvent_partial(spec.t, spec.order, x)
    if spec.kind == "Convolution":
        a = np.zeros(x.shape[0], dtype=np.float64)
        kern = np.asarray(spec.a, dtype=np.float64)
        a[: min(kern.shape[0], x.shape[0])] = kern[: x.shape[0]]
        return convolve(a, x)
    if spec.kind == "DiagonalTruncated":
        return apply_diagonal_truncated(spec.order, x)
    if spec.kind == "CesaroTruncated":
        return apply_cesaro_truncated(spec.t, spec.order, x)
    raise ValueError("unknown operator kind %r" % spec.kind)


def matrix_to_csv(matrix: np.ndarray, path: str) -> None:
    """Export a dense section to CSV (one row per line, 17 significant digits)."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        for row in np.asarray(matrix, dtype=np.float64):
            writer.writerow([format(v, ".17g") for v in row])
