"""Eigen certificates, finite sections, operator-norm sandwiches, and decay.

Operator norms are estimated from below by maximising ``|Op x| / |x|`` over
nonnegative prefix vectors: positivity of the operators plus the Riesz
property of every norm make the nonnegative cone sufficient. Input norms are
evaluated exactly for prefix-supported vectors (including the remainder term
of the averaged p-norms), while output norms use the prefix functional,
which can only under-estimate; every reported ratio is therefore a valid
lower bound of the true operator norm. Each lower bound is paired with an
analytic upper bound, and ``lower <= upper`` is enforced at construction.

All randomness is driven by an explicit seed; certificates record it.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np
from scipy.special import zeta

from .operators import (
    OperatorSpec,
    apply_cesaro,
    apply_operator,
    cesaro_matrix,
    convolve,
    eigenvector,
)
from .report import CheckReport
from .seqs import canonical, geometric, ones, xi
from .spaces import SpaceSpec, make_functionals

__all__ = [
    "EigenCertificate",
    "NormBoundCertificate",
    "DecayEstimate",
    "SANDWICH_SLACK",
    "upper_bound",
    "eigen_certificate",
    "finite_section_eigenvalues",
    "dense_section_eigenvalues",
    "hausdorff_to_eigenvalue_set",
    "norm_lower_bound",
    "shift_norm_check",
    "resolvent_norm_check",
    "multiplier_norm_check",
    "compactness_decay",
    "cesinf_nondensity_check",
    "certificates_to_csv",
]

SANDWICH_SLACK = 1e-9
WITNESS_TOL = 1e-9


def _require_t_below_one(t: float) -> float:
    if not 0.0 <= t < 1.0:
        raise ValueError("spectral routines require 0 <= t < 1, got %r" % t)
    return float(t)


# ---------------------------------------------------------------------------
# Analytic upper bounds per (space, operator) pair.


def _xi_pnorm_full(p: float) -> float:
    """Full p-norm of (1/(n+1)): zeta(p)^(1/p)."""
    return float(zeta(p, 1)) ** (1.0 / p)


def upper_bound(space: SpaceSpec, op: OperatorSpec) -> tuple[float, str]:
    """Analytic operator-norm upper bound for the pair, or (inf, "none").

    The bounds: averaging operators are contractions of the pure averaging
    case on the ces spaces, dominated by the geometric shift series
    elsewhere; the diagonal operator has norm exactly 1; shifts expand the
    majorant p-norm by (m+1)^(1/p) and contract everywhere else in scope.
    """
    kind, t, m = op.kind, op.t, op.m
    if kind in ("Diagonal", "DiagonalTruncated"):
        return 1.0, "diagonal contraction, norm exactly 1"
    if kind in ("CesaroT", "CesaroTruncated"):
        _require_t_below_one(t)
        if space.kind in ("Lp", "LpWeighted", "C0Weighted"):
            return 1.0 / (1.0 - t), "geometric shift series sum t^n = (1-t)^-1"
        if space.kind == "Linf":
            return 1.0, "row sums of the section are at most 1"
        if space.kind == "CesP":
            p = space.p
            return (
                min(p / (p - 1.0), 1.0 / (1.0 - t)),
                "min(p/(p-1), (1-t)^-1): averaging-conjugate vs shift series",
            )
        if space.kind in ("Ces0", "CesInf"):
            return 1.0, "averaged-sup contraction, norm exactly 1"
        if space.kind == "Dp":
            return (
                (1.0 - t) ** (-1.0 - 1.0 / space.p),
                "(1-t)^(-1-1/p) via shift norms (n+1)^(1/p) t^n",
            )
        if space.kind == "Xpq":
            return (
                2.0 * _xi_pnorm_full(space.p) / (1.0 - t),
                "2*zeta(p)^(1/p)/(1-t): splice-norm convolution bound",
            )
    if kind == "Shift":
        if space.kind == "Dp":
            return (m + 1) ** (1.0 / space.p), "majorant repeats the head: (m+1)^(1/p)"
        if space.kind in ("Lp", "Linf", "CesP", "Ces0", "CesInf", "LpWeighted", "C0Weighted"):
            return 1.0, "shift is a contraction here"
        return math.inf, "none"
    if kind == "ResolventPartial":
        _require_t_below_one(t)
        if space.kind == "Dp":
            return (
                (1.0 - t) ** (-1.0 - 1.0 / space.p),
                "(1-t)^(-1-1/p) via shift norms (n+1)^(1/p) t^n",
            )
        if space.kind in ("Lp", "Linf", "CesP", "Ces0", "CesInf", "LpWeighted", "C0Weighted"):
            return 1.0 / (1.0 - t), "geometric series of shift contractions"
        return math.inf, "none"
    if kind == "Convolution":
        if space.kind in ("Lp", "Linf"):
            a = np.asarray(op.a, dtype=np.float64)
            return float(np.sum(np.abs(a))), "Young bound: l1 norm of the kernel"
        return math.inf, "none"
    return math.inf, "none"


# ---------------------------------------------------------------------------
# Certificates.


@dataclass(frozen=True)
class EigenCertificate:
    """Residual record for the eigenvalue 1/(m+1) on a prefix.

    residual = |C_t v - v/(m+1)|_space / |v|_space with both norms taken as
    prefix functionals; lower triangularity makes the prefix residual the
    truncation of the infinite one, so it vanishes up to roundoff.
    """

    t: float
    m: int
    n: int
    lam: float
    residual: float
    space: SpaceSpec

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "m": self.m,
            "n": self.n,
            "lambda": self.lam,
            "residual": self.residual,
            "space": self.space.to_json(),
        }


@dataclass(frozen=True)
class NormBoundCertificate:
    """Search lower bound paired with an analytic upper bound.

    Invariants enforced at construction: 0 <= lower <= upper*(1+1e-9); the
    witness has unit input norm within 1e-9 and reproduces ``lower`` within
    1e-9 when re-evaluated.
    """

    space: SpaceSpec
    operator: OperatorSpec
    lower: float
    upper: float
    witness: tuple[float, ...]
    bound_source: str
    seed: int
    n: int

    def __post_init__(self) -> None:
        if not 0.0 <= self.lower:
            raise ValueError("lower bound must be >= 0")
        if self.lower > self.upper * (1.0 + SANDWICH_SLACK):
            raise ValueError(
                "certificate violated: lower %.17g exceeds upper %.17g for %s on %s"
                % (self.lower, self.upper, self.operator.label(), self.space.label())
            )
        inp, outp = make_functionals(self.space, self.n)
        w = np.asarray(self.witness, dtype=np.float64)
        if abs(inp(w) - 1.0) > WITNESS_TOL:
            raise ValueError("witness is not unit-normalised")
        if abs(outp(apply_operator(self.operator, w)) - self.lower) > WITNESS_TOL * max(
            1.0, self.lower
        ):
            raise ValueError("witness does not reproduce the reported lower bound")

    def witness_hash(self) -> str:
        payload = ",".join(format(v, ".17g") for v in self.witness)
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def to_json(self) -> dict:
        return {
            "space": self.space.to_json(),
            "operator": self.operator.to_json(),
            "lower": self.lower,
            "upper": self.upper,
            "bound_source": self.bound_source,
            "witness": list(self.witness),
            "seed": self.seed,
            "n": self.n,
        }


def certificates_to_csv(certs: Iterable[NormBoundCertificate], path: str) -> None:
    """Batch table: space, op, t, p, q, lower, upper, witness-hash, seed."""
    lines = ["space,op,t,p,q,lower,upper,witness_hash,seed"]
    for c in certs:
        lines.append(
            ",".join(
                [
                    c.space.kind,
                    c.operator.kind,
                    "" if c.operator.t is None else format(c.operator.t, ".17g"),
                    "" if c.space.p is None else format(c.space.p, ".17g"),
                    "" if c.space.q is None else format(c.space.q, ".17g"),
                    format(c.lower, ".17g"),
                    "inf" if math.isinf(c.upper) else format(c.upper, ".17g"),
                    c.witness_hash(),
                    str(c.seed),
                ]
            )
        )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


# ---------------------------------------------------------------------------
# Eigen certificates and finite sections.


def eigen_certificate(t: float, m: int, n: int, space: SpaceSpec) -> EigenCertificate:
    """Relative eigen-residual of the recurrence eigenvector on the prefix."""
    _require_t_below_one(t)
    v = eigenvector(t, m, n)
    lam = 1.0 / (m + 1)
    resid = apply_cesaro(t, v) - lam * v
    _, prefix_norm = make_functionals(space, n)
    residual = prefix_norm(resid) / prefix_norm(v)
    return EigenCertificate(t=t, m=m, n=n, lam=lam, residual=residual, space=space)


def finite_section_eigenvalues(t: float, n: int) -> tuple[np.ndarray, float]:
    """Eigenvalues of the n-by-n section, sorted descending, with the maximum
    deviation from {1/(k+1)}.

    The section is lower triangular, so its spectrum is the diagonal, which
    does not depend on t. t = 1 is accepted here (the statement is purely
    about the finite section); note that for t = 1 the infinite operator's
    spectrum is a disk which finite sections do not approximate.
    """
    if not 0.0 <= t <= 1.0:
        raise ValueError("t must lie in [0, 1]")
    eigs = np.sort(np.diag(cesaro_matrix(t, n)))[::-1]
    target = 1.0 / np.arange(1, n + 1, dtype=np.float64)
    return eigs, float(np.max(np.abs(eigs - target)))


def dense_section_eigenvalues(t: float, n: int) -> np.ndarray:
    """Cross-check eigenvalues via a dense general eigensolver, sorted by
    descending real part."""
    ev = np.linalg.eigvals(cesaro_matrix(t, n))
    order = np.argsort(ev.real)[::-1]
    return ev[order]


def hausdorff_to_eigenvalue_set(values: Sequence[float] | np.ndarray, n: int) -> float:
    """Hausdorff distance from ``set(values) | {0}`` to {1/(k+1)} | {0}.

    The reference set is truncated at k = 4n and the truncation is absorbed
    conservatively: every omitted point lies within 1/(4n+2) of 0, and the
    returned value is at least that cap, so the result never under-reports.
    """
    pts = np.asarray(values, dtype=np.complex128)
    pts = np.concatenate([pts, [0.0 + 0.0j]])
    k_cap = 4 * n
    lam = np.concatenate([1.0 / np.arange(1, k_cap + 1, dtype=np.float64), [0.0]])
    d_lam_to_pts = np.max(np.min(np.abs(lam[:, None] - pts[None, :]), axis=1))
    d_pts_to_lam = np.max(np.min(np.abs(pts[:, None] - lam[None, :]), axis=1))
    return float(max(d_lam_to_pts, d_pts_to_lam, 1.0 / (k_cap + 2)))


# ---------------------------------------------------------------------------
# Operator-norm search: deterministic candidates, multi-start random
# sampling, then cyclic coordinate ascent with multiplicative perturbation.


def _ratio_fn(
    apply_fn: Callable[[np.ndarray], np.ndarray],
    input_norm: Callable[[np.ndarray], float],
    output_norm: Callable[[np.ndarray], float],
) -> Callable[[np.ndarray], float]:
    def ratio(x: np.ndarray) -> float:
        den = input_norm(x)
        if den <= 0.0 or not math.isfinite(den):
            return 0.0
        return output_norm(apply_fn(x)) / den

    return ratio


def _coordinate_ascent(
    ratio: Callable[[np.ndarray], float],
    x: np.ndarray,
    value: float,
    budget: int,
    rel_tol: float = 1e-10,
) -> tuple[np.ndarray, float, int]:
    """Greedy cyclic ascent; multiplicative steps keep iterates in the cone.

    Zero coordinates stay zero (multiplicative moves cannot revive them),
    which preserves sparse witnesses exactly. Returns (x, value, used).
    """
    n = x.shape[0]
    used = 0
    step = 0.5
    while step >= 1e-6 and used + 2 <= budget:
        sweep_start = value
        for j in range(n):
            if used + 2 > budget:
                break
            base = x[j]
            if base == 0.0:
                continue
            x[j] = base * (1.0 + step)
            up = ratio(x)
            used += 1
            if up > value:
                value = up
                continue
            x[j] = base / (1.0 + step)
            down = ratio(x)
            used += 1
            if down > value:
                value = down
                continue
            x[j] = base
        if value - sweep_start <= rel_tol * max(value, 1.0):
            step *= 0.25
    return x, value, used


def _search_max_ratio(
    ratio: Callable[[np.ndarray], float],
    n: int,
    rng: np.random.Generator,
    budget: int,
    starts: int,
    extra_candidates: Sequence[np.ndarray] = (),
) -> tuple[float, np.ndarray]:
    """Maximise a cone ratio: candidates + random starts + ascent on the best."""
    candidates: list[np.ndarray] = [
        canonical(0, n),
        canonical(min(1, n - 1), n),
        xi(n),
        ones(n),
    ]
    candidates.extend(np.asarray(c, dtype=np.float64) for c in extra_candidates)

    best_val = -1.0
    best_x = candidates[0]
    used = 0
    for c in candidates:
        v = ratio(c)
        used += 1
        if v > best_val:
            best_val, best_x = v, c

    pool: list[tuple[float, np.ndarray]] = []
    for k in range(starts):
        if used >= budget:
            break
        if k % 2 == 0:
            x = rng.random(n) + 1e-9
        else:
            decay = 0.5 + 0.5 * rng.random()
            x = (rng.random(n) + 1e-9) * np.power(decay, np.arange(n))
        v = ratio(x)
        used += 1
        pool.append((v, x))
        if v > best_val:
            best_val, best_x = v, x

    pool.sort(key=lambda item: item[0], reverse=True)
    for v, x in pool[:2]:
        if used >= budget:
            break
        share = (budget - used) // 2
        x, v, spent = _coordinate_ascent(ratio, x, v, share)
        used += spent
        if v > best_val:
            best_val, best_x = v, x
    return best_val, best_x


def norm_lower_bound(
    space: SpaceSpec,
    op: OperatorSpec,
    budget: int = 4000,
    seed: int = 42,
    n: int = 512,
    starts: int = 32,
) -> NormBoundCertificate:
    """Search lower bound for the operator norm, sandwiched by the analytic
    upper bound for the pair.

    Deterministic given the seed. The witness is re-normalised to unit input
    norm and re-evaluated, so the certificate invariants hold by
    construction or the constructor raises.
    """
    if op.kind in ("CesaroT", "CesaroTruncated", "ResolventPartial"):
        _require_t_below_one(op.t)
    upper, source = upper_bound(space, op)
    input_norm, output_norm = make_functionals(space, n)
    ratio = _ratio_fn(lambda v: apply_operator(op, v), input_norm, output_norm)

    extras: list[np.ndarray] = []
    t_hint = op.t if op.t is not None else 0.5
    if t_hint > 0.0:
        extras.append(geometric(t_hint, n))
    if op.kind in ("DiagonalTruncated", "CesaroTruncated") and op.order + 1 < n:
        extras.append(canonical(op.order + 1, n))
    if op.kind == "Shift" and op.m < n:
        extras.append(canonical(0, n))

    rng = np.random.default_rng(np.random.SeedSequence(seed))
    _, best_x = _search_max_ratio(ratio, n, rng, budget, starts, extras)

    witness = best_x / input_norm(best_x)
    lower = output_norm(apply_operator(op, witness))
    return NormBoundCertificate(
        space=space,
        operator=op,
        lower=lower,
        upper=upper,
        witness=tuple(float(v) for v in witness),
        bound_source=source,
        seed=seed,
        n=n,
    )


# ---------------------------------------------------------------------------
# Targeted checks.


def shift_norm_check(
    p: float, m: int, n: int, trials: int = 200, seed: int = 42
) -> CheckReport:
    """The m-fold shift on the majorant-p space: witness value (m+1)^(1/p)
    met exactly by e_0, never exceeded by random vectors."""
    if m + 1 > n:
        raise ValueError("need m + 1 <= n")
    space = SpaceSpec("Dp", p=p)
    input_norm, _ = make_functionals(space, n)
    bound = (m + 1) ** (1.0 / p)

    from .operators import apply_shift

    witness_value = input_norm(apply_shift(m, canonical(0, n))) / input_norm(canonical(0, n))

    rng = np.random.default_rng(np.random.SeedSequence(seed))
    search_max = 0.0
    for _ in range(trials):
        x = rng.random(n) * np.power(rng.random() ** 2, np.arange(n) / n)
        search_max = max(search_max, input_norm(apply_shift(m, x)) / input_norm(x))

    ok = abs(witness_value - bound) <= 1e-12 * bound and search_max <= bound * (
        1.0 + SANDWICH_SLACK
    )
    return CheckReport(
        claim_id="shift-majorant-norm[p=%g,m=%d]" % (p, m),
        computed=witness_value,
        bound=bound,
        tolerance=1e-12,
        mode="eq",
        status="pass" if ok else "fail",
        citation="shift norm on majorant-p space equals (m+1)^(1/p)",
        seed=seed,
        inputs={"n": n, "trials": trials, "search_max": search_max},
    )


def resolvent_norm_check(
    p: float, t: float, n: int, budget: int = 2000, seed: int = 42
) -> CheckReport:
    """Geometric shift series on the majorant-p space: e_0 attains
    (1-t^p)^(-1/p); search stays below (1-t)^(-1-1/p)."""
    _require_t_below_one(t)
    space = SpaceSpec("Dp", p=p)
    input_norm, _ = make_functionals(space, n)
    if t == 0.0:
        order = 1
        expected = 1.0
    else:
        order = int(math.ceil(math.log(1e-15) / math.log(t)))
        expected = (1.0 - t**p) ** (-1.0 / p)
    if order > n - 1:
        raise ValueError(
            "prefix too short: truncation order %d needs n >= %d" % (order, order + 1)
        )

    from .operators import apply_resolvent_partial

    witness_value = input_norm(apply_resolvent_partial(t, order, canonical(0, n)))

    # search against the full series: exact on the prefix (lower triangular)
    # and dominating every truncation on the nonnegative cone
    op = OperatorSpec("ResolventPartial", t=t, order=n - 1)
    cert = norm_lower_bound(space, op, budget=budget, seed=seed, n=n)
    upper = (1.0 - t) ** (-1.0 - 1.0 / p) if t > 0 else 1.0
    ok = (
        abs(witness_value - expected) <= 1e-9 * expected
        and cert.lower <= upper * (1.0 + SANDWICH_SLACK)
        and cert.lower >= witness_value * (1.0 - 1e-12)
    )
    return CheckReport(
        claim_id="resolvent-majorant-norm[p=%g,t=%g]" % (p, t),
        computed=witness_value,
        bound=expected,
        tolerance=1e-9,
        mode="eq",
        status="pass" if ok else "fail",
        citation="geometric shift series attains (1-t^p)^(-1/p) at e_0",
        seed=seed,
        inputs={"n": n, "order": order, "search_lower": cert.lower, "upper": upper},
    )


def multiplier_norm_check(
    a: np.ndarray, p: float, budget: int = 1000, seed: int = 42
) -> CheckReport:
    """Convolution by a summable kernel on the p-norm: the search value lies
    between the p-norm of the kernel (attained at e_0) and its l1 norm."""
    a = np.asarray(a, dtype=np.float64)
    n = a.shape[0]
    space = SpaceSpec("Lp", p=p)
    op = OperatorSpec("Convolution", a=tuple(float(v) for v in a))
    input_norm, _ = make_functionals(space, n)

    a_p = input_norm(a)
    a_1 = float(np.sum(np.abs(a)))
    image_of_e0 = input_norm(convolve(a, canonical(0, n)))

    cert = norm_lower_bound(space, op, budget=budget, seed=seed, n=n)
    ok = (
        abs(image_of_e0 - a_p) <= 1e-12 * max(a_p, 1.0)
        and cert.lower >= image_of_e0 * (1.0 - 1e-12)
        and cert.lower <= a_1 * (1.0 + SANDWICH_SLACK)
    )
    return CheckReport(
        claim_id="multiplier-norm[p=%g]" % p,
        computed=cert.lower,
        bound=a_1,
        tolerance=SANDWICH_SLACK,
        mode="le",
        status="pass" if ok else "fail",
        citation="kernel p-norm <= convolution norm <= kernel l1 norm",
        seed=seed,
        inputs={"n": n, "a_p_norm": a_p, "a_l1_norm": a_1, "image_of_e0": image_of_e0},
    )


# ---------------------------------------------------------------------------
# Compactness decay.


@dataclass(frozen=True)
class DecayEstimate:
    order: int
    estimate: float
    upper: float

    def to_json(self) -> dict:
        return {"order": self.order, "estimate": self.estimate, "upper": self.upper}


def _decay_upper(space: SpaceSpec, t: float, order: int) -> float:
    if t == 0.0:
        return 1.0 / (order + 2)
    if space.kind == "Xpq":
        return 2.0 / (1.0 - t) * float(zeta(space.p, order + 2)) ** (1.0 / space.p)
    return math.inf


def compactness_decay(
    space: SpaceSpec,
    t: float,
    orders: Sequence[int],
    n: int = 512,
    budget: int = 4000,
    seed: int = 42,
) -> list[DecayEstimate]:
    """Lower estimates of the truncation-tail norms |C_t - C_t^[M]|.

    For t = 0 the tail is the diagonal remainder with exact norm 1/(M+2) in
    every space (attained at e_{M+1}); on the splice space the tail norm is
    at most 2(1-t)^-1 times the p-norm of the averaging profile past M. The
    witnesses found for each order are pooled and re-evaluated at every
    order, so the reported estimates are non-increasing in M by
    construction (the tail image shrinks pointwise as M grows).
    """
    _require_t_below_one(t)
    orders = sorted(set(int(M) for M in orders))
    if orders and orders[-1] >= n:
        raise ValueError("orders must stay below the prefix length")
    input_norm, output_norm = make_functionals(space, n)

    def tail_ratio(order: int) -> Callable[[np.ndarray], float]:
        def ratio(x: np.ndarray) -> float:
            den = input_norm(x)
            if den <= 0.0 or not math.isfinite(den):
                return 0.0
            y = apply_cesaro(t, x)
            y[: order + 1] = 0.0
            return output_norm(y) / den

        return ratio

    rng = np.random.default_rng(np.random.SeedSequence(seed))
    share = max(len(orders), 1)
    pool: list[np.ndarray] = []
    for M in orders:
        extras = []
        if M + 1 < n:
            extras.append(canonical(M + 1, n))
        if M + 2 < n:
            extras.append(canonical(M + 2, n))
        if t > 0.0:
            extras.append(geometric(t, n))
        _, best = _search_max_ratio(
            tail_ratio(M), n, rng, budget // share, starts=8, extra_candidates=extras
        )
        pool.append(best)

    out = []
    for M in orders:
        r = tail_ratio(M)
        estimate = max(r(w) for w in pool)
        out.append(DecayEstimate(order=M, estimate=estimate, upper=_decay_upper(space, t, M)))
    return out


# ---------------------------------------------------------------------------
# Non-density of bounded vectors under the averaged sup norm.


def cesinf_nondensity_check(
    sup_bounds: Sequence[float], n: int, trials: int = 8, seed: int = 42
) -> CheckReport:
    """Distance from the squares witness to bounded vectors stays >= 1/4.

    For each sup bound M the adversarial family contains 0, the constant
    vectors at heights M and M/2, and random vectors with sup norm exactly
    M; the averaged sup distance on a prefix of length >= 4*(2*floor(M)+2)^2+1
    is at least 1/4 for every such vector.
    """
    from .seqs import squares_witness
    from .spaces import ces_sup_norm

    sup_bounds = [float(M) for M in sup_bounds]
    k0_max = 2 * int(math.floor(max(sup_bounds))) + 2
    n_needed = 4 * k0_max**2 + 1
    if n < n_needed:
        raise ValueError("prefix length %d too small; need >= %d" % (n, n_needed))

    z = squares_witness(n)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    worst = math.inf
    per_bound: dict[str, float] = {}
    for M in sup_bounds:
        family: list[np.ndarray] = [
            np.zeros(n),
            M * np.ones(n),
            0.5 * M * np.ones(n),
        ]
        for _ in range(trials):
            y = rng.uniform(-M, M, size=n)
            peak = np.max(np.abs(y))
            if peak > 0:
                y *= M / peak
            family.append(y)
        dist = min(ces_sup_norm(z - y).value for y in family)
        per_bound["M=%g" % M] = dist
        worst = min(worst, dist)

    return CheckReport(
        claim_id="averaged-sup-nondensity",
        computed=worst,
        bound=0.25,
        tolerance=0.0,
        mode="ge",
        citation="averaged distance of the squares witness to any bounded vector >= 1/4",
        seed=seed,
        inputs={"n": n, "sup_bounds": sup_bounds, "per_bound": per_bound},
    )
