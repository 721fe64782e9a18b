"""Norm functionals for the sequence spaces in scope.

All norms are Riesz norms: monotone in the pointwise absolute-value order.
Values are computed on the prefix. With the zero-extension semantics every
norm is exact for the represented sequence, except the averaged p-norms
(``CesP``): averaging spreads mass past the prefix, so their value is a
lower approximation and the exact remainder for a prefix-supported input,
``l1(x) * (sum_{k>=N} (k+1)^(-p))^(1/p)``, is reported alongside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable, Sequence

import numpy as np
from scipy.special import zeta

from . import kernels
from .seqs import make_weight

__all__ = [
    "SpaceSpec",
    "NormValue",
    "EXACT_ON_PREFIX",
    "LOWER_APPROXIMATION",
    "lp_norm",
    "majorant",
    "cesp_norm",
    "ces_sup_norm",
    "dp_norm",
    "weighted_lp_norm",
    "weighted_c0_norm",
    "xpq_norm",
    "distribution_function",
    "space_norm",
    "make_functionals",
]

EXACT_ON_PREFIX = "exact-on-prefix"
LOWER_APPROXIMATION = "lower-approximation"


@dataclass(frozen=True)
class NormValue:
    """A computed norm with its exactness tag.

    ``tail_bound`` is nonzero only for lower approximations; it is the norm
    of the neglected part for a prefix-supported input, so that
    ``(value^p + tail_bound^p)^(1/p)`` recovers the exact norm there.
    """

    value: float
    exactness: str = EXACT_ON_PREFIX
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        if self.value < 0.0 or not math.isfinite(self.value):
            raise ValueError("norm value must be finite and >= 0")


def _pnorm(v: np.ndarray, p: float) -> float:
    if p == math.inf:
        return float(np.max(np.abs(v))) if v.size else 0.0
    if p == 1.0:
        return float(np.sum(np.abs(v)))
    if p == 2.0:
        return float(np.sqrt(np.dot(v, v)))
    return float(np.sum(np.abs(v) ** p) ** (1.0 / p))


def lp_norm(p: float, x: np.ndarray) -> NormValue:
    """The p-norm (sum |x_n|^p)^(1/p); max |x_n| for p = inf."""
    if p != math.inf and p < 1.0:
        raise ValueError("p must satisfy p >= 1 or be inf")
    x = np.asarray(x, dtype=np.float64)
    return NormValue(_pnorm(x, p))


def majorant(x: np.ndarray) -> np.ndarray:
    """Least non-increasing sequence dominating |x|: the suffix maximum.

    Exact under zero extension (the suffix maximum past the prefix is 0).
    """
    return kernels.suffix_abs_max(np.ascontiguousarray(x, dtype=np.float64))


def _ces_averages(x: np.ndarray) -> np.ndarray:
    x = np.ascontiguousarray(x, dtype=np.float64)
    return kernels.cesaro_apply(1.0, np.abs(x))


def cesp_norm(p: float, x: np.ndarray) -> NormValue:
    """p-norm of the running averages of |x|; requires p > 1.

    Lower approximation: for a prefix-supported input, every average past
    the prefix equals l1(x)/(n+1), and the reported tail bound is exactly
    the p-norm of that remainder.
    """
    if not p > 1.0:
        raise ValueError("averaged p-norm needs p > 1")
    x = np.asarray(x, dtype=np.float64)
    value = _pnorm(_ces_averages(x), p)
    n = x.shape[0]
    tail = float(np.sum(np.abs(x))) * float(zeta(p, n + 1)) ** (1.0 / p)
    return NormValue(value, LOWER_APPROXIMATION, tail)


def ces_sup_norm(x: np.ndarray) -> NormValue:
    """Supremum of the running averages of |x| (shared ces_0 / ces_inf functional).

    Exact on the prefix for prefix-supported input: past the support each
    average is l1(x)/(n+1), already dominated by the average at the last
    prefix index. Membership in the order-continuous part (averages -> 0)
    is not decidable from a prefix and is not claimed.
    """
    x = np.asarray(x, dtype=np.float64)
    return NormValue(float(np.max(_ces_averages(x))))


def dp_norm(p: float, x: np.ndarray) -> NormValue:
    """p-norm of the least decreasing majorant; requires p >= 1."""
    if p < 1.0:
        raise ValueError("majorant p-norm needs p >= 1")
    return NormValue(_pnorm(majorant(x), p))


def weighted_lp_norm(p: float, w: np.ndarray, x: np.ndarray) -> NormValue:
    """(sum |x_n|^p w(n))^(1/p) for a strictly positive non-increasing weight."""
    if p < 1.0:
        raise ValueError("weighted p-norm needs p >= 1")
    x = np.asarray(x, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if w.shape[0] != x.shape[0]:
        raise ValueError("weight/sequence length mismatch: %d vs %d" % (w.shape[0], x.shape[0]))
    return NormValue(float(np.sum(np.abs(x) ** p * w) ** (1.0 / p)))


def weighted_c0_norm(w: np.ndarray, x: np.ndarray) -> NormValue:
    """sup_n w(n)|x_n|."""
    x = np.asarray(x, dtype=np.float64)
    w = np.asarray(w, dtype=np.float64)
    if w.shape[0] != x.shape[0]:
        raise ValueError("weight/sequence length mismatch: %d vs %d" % (w.shape[0], x.shape[0]))
    return NormValue(float(np.max(w * np.abs(x))))


def xpq_norm(p: float, q: float, x: np.ndarray) -> NormValue:
    """p-norm of the even-indexed part plus q-norm of the odd-indexed part.

    Requires 1 < p < q < inf. This splice norm is a Riesz norm but is not
    shift invariant.
    """
    if not 1.0 < p < q < math.inf:
        raise ValueError("splice norm needs 1 < p < q < inf")
    x = np.asarray(x, dtype=np.float64)
    return NormValue(_pnorm(x[0::2], p) + _pnorm(x[1::2], q))


def distribution_function(x: np.ndarray, threshold: float) -> int:
    """Number of indices with |x_n| strictly above the threshold."""
    if threshold < 0.0:
        raise ValueError("threshold must be >= 0")
    x = np.asarray(x, dtype=np.float64)
    return int(np.count_nonzero(np.abs(x) > threshold))


_KINDS = (
    "Lp",
    "Linf",
    "CesP",
    "Ces0",
    "CesInf",
    "Dp",
    "LpWeighted",
    "C0Weighted",
    "Xpq",
)


@dataclass(frozen=True)
class SpaceSpec:
    """Tagged description of a sequence-space norm.

    ``w`` stays in its portable form (named family string such as
    ``"power:1"`` / ``"exp:0.5"``, or a tuple of values) and is materialised
    per prefix length with :func:`cesaro_lab.seqs.make_weight`.
    """

    kind: str
    p: float | None = None
    q: float | None = None
    w: str | tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise ValueError("unknown space kind %r" % self.kind)
        if self.kind in ("Lp", "Dp", "LpWeighted"):
            if self.p is None or self.p < 1.0:
                raise ValueError("%s requires p >= 1" % self.kind)
        if self.kind == "CesP" and (self.p is None or not self.p > 1.0):
            raise ValueError("CesP requires p > 1")
        if self.kind == "Xpq":
            if self.p is None or self.q is None or not 1.0 < self.p < self.q:
                raise ValueError("Xpq requires 1 < p < q")
        if self.kind in ("LpWeighted", "C0Weighted") and self.w is None:
            raise ValueError("%s requires a weight" % self.kind)

    def label(self) -> str:
        parts = []
        if self.p is not None:
            parts.append("p=%g" % self.p)
        if self.q is not None:
            parts.append("q=%g" % self.q)
        if self.w is not None:
            parts.append("w=%s" % (self.w if isinstance(self.w, str) else "array"))
        return "%s(%s)" % (self.kind, ",".join(parts)) if parts else self.kind

    def weight(self, size: int) -> np.ndarray:
        if self.w is None:
            raise ValueError("space %s carries no weight" % self.kind)
        return make_weight(self.w, size)

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"kind": self.kind}
        if self.p is not None:
            out["p"] = self.p
        if self.q is not None:
            out["q"] = self.q
        if self.w is not None:
            out["w"] = self.w if isinstance(self.w, str) else list(self.w)
        return out

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> "SpaceSpec":
        w = data.get("w")
        if isinstance(w, Sequence) and not isinstance(w, str):
            w = tuple(float(v) for v in w)
        return cls(kind=data["kind"], p=data.get("p"), q=data.get("q"), w=w)


def space_norm(space: SpaceSpec, x: np.ndarray) -> NormValue:
    """Evaluate the norm described by a space spec on a prefix."""
    if space.kind == "Lp":
        return lp_norm(space.p, x)
    if space.kind == "Linf":
        return lp_norm(math.inf, x)
    if space.kind == "CesP":
        return cesp_norm(space.p, x)
    if space.kind in ("Ces0", "CesInf"):
        return ces_sup_norm(x)
    if space.kind == "Dp":
        return dp_norm(space.p, x)
    if space.kind == "LpWeighted":
        return weighted_lp_norm(space.p, space.weight(len(x)), x)
    if space.kind == "C0Weighted":
        return weighted_c0_norm(space.weight(len(x)), x)
    if space.kind == "Xpq":
        return xpq_norm(space.p, space.q, x)
    raise ValueError("unknown space kind %r" % space.kind)


def make_functionals(
    space: SpaceSpec, size: int
) -> tuple[Callable[[np.ndarray], float], Callable[[np.ndarray], float]]:
    """Fast (input_norm, output_norm) pair for operator-norm search.

    ``input_norm`` is the exact norm of a prefix-supported vector (for the
    averaged p-norms this includes the remainder term, making ratios valid
    lower bounds of the true operator norm). ``output_norm`` is the prefix
    functional, a lower bound of the norm of the full image.
    """
    if space.kind in ("Lp", "Linf"):
        p = math.inf if space.kind == "Linf" else space.p
        fn = lambda v: _pnorm(v, p)
        return fn, fn
    if space.kind == "CesP":
        p = space.p
        tail_factor = float(zeta(p, size + 1))
        prefix = lambda v: _pnorm(_ces_averages(v), p)

        def exact(v: np.ndarray) -> float:
            main = prefix(v)
            tail_p = float(np.sum(np.abs(v))) ** p * tail_factor
            return (main**p + tail_p) ** (1.0 / p)

        return exact, prefix
    if space.kind in ("Ces0", "CesInf"):
        fn = lambda v: float(np.max(_ces_averages(v)))
        return fn, fn
    if space.kind == "Dp":
        p = space.p
        fn = lambda v: _pnorm(kernels.suffix_abs_max(np.ascontiguousarray(v)), p)
        return fn, fn
    if space.kind == "LpWeighted":
        p, w = space.p, space.weight(size)
        fn = lambda v: float(np.sum(np.abs(v) ** p * w) ** (1.0 / p))
        return fn, fn
    if space.kind == "C0Weighted":
        w = space.weight(size)
        fn = lambda v: float(np.max(w * np.abs(v)))
        return fn, fn
    if space.kind == "Xpq":
        p, q = space.p, space.q
        fn = lambda v: _pnorm(v[0::2], p) + _pnorm(v[1::2], q)
        return fn, fn
    raise ValueError("unknown space kind %r" % space.kind)
