"""Exact rational reference implementations at small prefix lengths.

These validate the floating-point kernels: identities that hold exactly in
rational arithmetic (averaging recurrence, eigenvector relation, basis
relation) are recomputed with ``fractions.Fraction`` and compared. Prefix
lengths are capped at 64 to keep rational bit growth bounded. Norms with
p-th roots stay floating point and have no rational twin.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "MAX_ORACLE_LEN",
    "exact_cesaro",
    "exact_eigenvector",
    "exact_eigen_identity",
    "exact_basis_identity",
]

MAX_ORACLE_LEN = 64

Rational = Fraction
RationalSeq = list[Fraction]


def _check_len(n: int) -> None:
    if not 1 <= n <= MAX_ORACLE_LEN:
        raise ValueError("oracle prefix length must be in [1, %d]" % MAX_ORACLE_LEN)


def _check_ratio(t: Fraction) -> Fraction:
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise ValueError("rational ratio must lie in [0, 1]")
    return t


def exact_cesaro(t: Fraction, x: Sequence[Fraction]) -> RationalSeq:
    """Exact weighted averages out[n] = (sum_{k<=n} t^(n-k) x_k)/(n+1)."""
    t = _check_ratio(t)
    _check_len(len(x))
    out: RationalSeq = []
    s = Fraction(0)
    for n, xn in enumerate(x):
        s = t * s + Fraction(xn)
        out.append(s / (n + 1))
    return out


def exact_eigenvector(t: Fraction, m: int, size: int) -> RationalSeq:
    """Exact eigenvector prefix via the ratio recurrence (see operators.eigenvector)."""
    t = _check_ratio(t)
    if t == 1:
        raise ValueError("eigenvector requires t < 1")
    _check_len(size)
    if not 0 <= m < size:
        raise IndexError("index %d out of range for length %d" % (m, size))
    v = [Fraction(0)] * size
    v[m] = Fraction(1)
    for n in range(size - m - 1):
        v[m + n + 1] = v[m + n] * (m + n + 1) * t / (n + 1)
    return v


def exact_eigen_identity(t: Fraction, m: int, size: int) -> bool:
    """True iff the averaging operator maps the eigenvector prefix to itself
    scaled by 1/(m+1), exactly."""
    v = exact_eigenvector(t, m, size)
    image = exact_cesaro(t, v)
    lam = Fraction(1, m + 1)
    return all(image[k] == lam * v[k] for k in range(size))


def exact_basis_identity(t: Fraction, n: int, size: int, lam: Fraction | None = None) -> bool:
    """True iff applying the averaging operator to e_n - t*e_{n+1} yields
    lam * e_n exactly, with lam defaulting to 1/(n+1).

    Passing a wrong lam is the mutation control: the identity must fail.
    """
    t = _check_ratio(t)
    _check_len(size)
    if n + 1 >= size:
        raise IndexError("need n + 1 < prefix length")
    x = [Fraction(0)] * size
    x[n] = Fraction(1)
    x[n + 1] = -t
    image = exact_cesaro(t, x)
    if lam is None:
        lam = Fraction(1, n + 1)
    expected = [Fraction(0)] * size
    expected[n] = Fraction(lam)
    return image == expected
