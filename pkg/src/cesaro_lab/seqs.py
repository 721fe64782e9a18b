"""Finite sequence prefixes and the named vectors used throughout the library.

A sequence is a 1-D float64 numpy array of length N >= 1 with finite entries;
it stands for the infinite sequence obtained by extending with zeros. All
constructors return fresh arrays and all helpers are pure functions.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

__all__ = [
    "as_seq",
    "as_weight",
    "canonical",
    "xi",
    "ones",
    "geometric",
    "squares_witness",
    "ell1_not_d1_witness",
    "elementwise_abs",
    "add",
    "scale",
    "seq_to_json",
    "seq_from_json",
    "make_weight",
    "make_sequence",
]


def as_seq(data: Sequence[float] | np.ndarray) -> np.ndarray:
    """Validate and convert input to a sequence prefix.

    Raises ValueError for empty input, wrong dimension, or non-finite entries.
    """
    x = np.asarray(data, dtype=np.float64)
    if x.ndim != 1:
        raise ValueError("sequence must be one-dimensional, got ndim=%d" % x.ndim)
    if x.shape[0] == 0:
        raise ValueError("sequence prefix must have positive length")
    if not np.all(np.isfinite(x)):
        raise ValueError("sequence entries must be finite")
    return x


def as_weight(values: Sequence[float] | np.ndarray) -> np.ndarray:
    """Validate a weight: strictly positive and non-increasing."""
    w = as_seq(values)
    if np.any(w <= 0.0):
        raise ValueError("weight entries must be strictly positive")
    if np.any(np.diff(w) > 0.0):
        raise ValueError("weight must be non-increasing")
    return w


def canonical(n: int, size: int) -> np.ndarray:
    """Unit coordinate vector: 1 at index n, 0 elsewhere."""
    if not 0 <= n < size:
        raise IndexError("canonical index %d out of range for length %d" % (n, size))
    x = np.zeros(size, dtype=np.float64)
    x[n] = 1.0
    return x


def xi(size: int) -> np.ndarray:
    """The harmonic-reciprocal vector (1/(n+1)) for n < size."""
    if size < 1:
        raise ValueError("length must be >= 1")
    return 1.0 / np.arange(1, size + 1, dtype=np.float64)


def ones(size: int) -> np.ndarray:
    """The all-ones prefix."""
    if size < 1:
        raise ValueError("length must be >= 1")
    return np.ones(size, dtype=np.float64)


def geometric(t: float, size: int) -> np.ndarray:
    """Powers (t^n) for n < size, with the convention 0^0 = 1.

    Requires 0 <= t < 1.
    """
    if not 0.0 <= t < 1.0:
        raise ValueError("geometric ratio must lie in [0, 1), got %r" % t)
    if size < 1:
        raise ValueError("length must be >= 1")
    out = np.empty(size, dtype=np.float64)
    out[0] = 1.0
    if size > 1:
        out[1:] = np.power(t, np.arange(1, size, dtype=np.float64))
    return out


def squares_witness(size: int) -> np.ndarray:
    """Vector with value k at index k*k for every k >= 1, zeros elsewhere.

    Its running averages stay bounded by 1, yet it is uniformly far from
    every bounded vector in the averaged sup norm; see
    :func:`cesaro_lab.spectral.cesinf_nondensity_check`.
    """
    if size < 2:
        raise ValueError("length must be >= 2")
    x = np.zeros(size, dtype=np.float64)
    ks = np.arange(1, int(np.floor(np.sqrt(size - 1))) + 1)
    x[ks * ks] = ks
    return x


def ell1_not_d1_witness(blocks: int) -> np.ndarray:
    """Summable vector whose least decreasing majorant is far from summable.

    Nonzero entries are 2^(-k) for k = 0..blocks-1, with exactly 2^k - 1
    zeros between the (k-1)-th and k-th nonzero entry; the k-th nonzero
    entry therefore sits at index 2^(k+1) - 2. The returned prefix has the
    minimal length containing all requested blocks. Its l1 norm is
    2 - 2^(1-blocks) while its majorant's l1 norm equals ``blocks``.
    """
    if blocks < 1:
        raise ValueError("need at least one block")
    size = 2**blocks - 1
    x = np.zeros(size, dtype=np.float64)
    ks = np.arange(blocks)
    x[2 ** (ks + 1) - 2] = 0.5**ks
    return x


def elementwise_abs(x: np.ndarray) -> np.ndarray:
    return np.abs(x)


def add(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    if x.shape[0] != y.shape[0]:
        raise ValueError("length mismatch: %d vs %d" % (x.shape[0], y.shape[0]))
    return x + y


def scale(c: float, x: np.ndarray) -> np.ndarray:
    return c * x


def seq_to_json(x: np.ndarray) -> list[float]:
    """JSON-ready representation: a plain list of numbers."""
    return [float(v) for v in x]


def seq_from_json(data: Sequence[float]) -> np.ndarray:
    return as_seq(data)


def make_weight(spec: str | Sequence[float], size: int) -> np.ndarray:
    """Materialise a weight from a JSON array or a named family.

    Named families: ``power:alpha`` gives w(n) = (n+1)^(-alpha) with
    alpha >= 0, and ``exp:r`` gives w(n) = r^n with 0 < r < 1.
    """
    if not isinstance(spec, str):
        w = as_weight(spec)
        if w.shape[0] != size:
            raise ValueError("weight length %d != requested %d" % (w.shape[0], size))
        return w
    name, _, arg = spec.partition(":")
    if name == "power":
        alpha = float(arg)
        if alpha < 0:
            raise ValueError("power weight needs alpha >= 0")
        return np.power(np.arange(1, size + 1, dtype=np.float64), -alpha)
    if name == "exp":
        r = float(arg)
        if not 0.0 < r < 1.0:
            raise ValueError("exp weight needs 0 < r < 1")
        return np.power(r, np.arange(size, dtype=np.float64))
    raise ValueError("unknown weight family %r" % spec)


_GENERATORS = {
    "canonical": lambda size, n: canonical(int(n), size),
    "xi": lambda size: xi(size),
    "ones": lambda size: ones(size),
    "geometric": lambda size, t: geometric(float(t), size),
    "squares": lambda size: squares_witness(size),
    "blocks": lambda size, b: ell1_not_d1_witness(int(b)),
    "zeros": lambda size: np.zeros(size, dtype=np.float64),
}


def make_sequence(spec: str, size: int) -> np.ndarray:
    """Build a named sequence from a ``name`` or ``name:key=value,...`` string.

    Examples: ``xi``, ``geometric:t=0.5``, ``canonical:n=3``, ``blocks:b=20``.
    """
    name, _, argstr = spec.partition(":")
    if name not in _GENERATORS:
        raise ValueError(
            "unknown sequence generator %r (known: %s)"
            % (name, ", ".join(sorted(_GENERATORS)))
        )
    kwargs = {}
    if argstr:
        for item in argstr.split(","):
            key, _, value = item.partition("=")
            if not _:
                raise ValueError("malformed generator argument %r" % item)
            kwargs[key.strip()] = value.strip()
    try:
        return _GENERATORS[name](size, **kwargs)
    except TypeError as exc:
        raise ValueError("bad arguments for generator %r: %s" % (name, exc)) from None
