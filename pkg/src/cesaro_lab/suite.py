"""Full verification suite: every check in a fixed order, seeded end to end.

Independent steps may run on a thread pool (capped by the environment
variable ``CESARO_LAB_THREADS``); the report list order is fixed by the
configuration regardless of completion order, and two runs with the same
configuration produce identical reports.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from typing import Callable

import numpy as np

from .config import SuiteConfig
from .operators import (
    OperatorSpec,
    apply_cesaro,
    apply_diagonal,
    apply_resolvent_partial,
    apply_shift,
    eigenvector,
)
from .oracle import (
    MAX_ORACLE_LEN,
    exact_basis_identity,
    exact_cesaro,
    exact_eigen_identity,
    exact_eigenvector,
)
from .report import CheckReport
from .seqs import canonical, ell1_not_d1_witness, make_weight, squares_witness
from .spaces import (
    SpaceSpec,
    ces_sup_norm,
    distribution_function,
    dp_norm,
    lp_norm,
    make_functionals,
    space_norm,
)
from .spectral import (
    SANDWICH_SLACK,
    cesinf_nondensity_check,
    compactness_decay,
    dense_section_eigenvalues,
    eigen_certificate,
    finite_section_eigenvalues,
    hausdorff_to_eigenvalue_set,
    multiplier_norm_check,
    norm_lower_bound,
    resolvent_norm_check,
    shift_norm_check,
)

__all__ = ["run_suite", "EIGEN_GRID_SPACES"]

# Space panel for the eigen-residual grid: one representative per family.
EIGEN_GRID_SPACES = (
    SpaceSpec("Lp", p=1.0),
    SpaceSpec("Lp", p=2.0),
    SpaceSpec("Dp", p=1.0),
    SpaceSpec("Dp", p=2.0),
    SpaceSpec("CesP", p=2.0),
    SpaceSpec("LpWeighted", p=2.0, w="power:1"),
    SpaceSpec("Xpq", p=2.0, q=3.0),
)

_RATIONAL_T = {
    0.0: Fraction(0),
    0.1: Fraction(1, 10),
    0.25: Fraction(1, 4),
    0.5: Fraction(1, 2),
    0.75: Fraction(3, 4),
    0.9: Fraction(9, 10),
}


def _rng(cfg: SuiteConfig, tag: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(entropy=cfg.seed, spawn_key=(tag,)))


def _one_sided(claim: str, computed: float, bound: float, citation: str, seed: int | None,
               inputs: dict | None = None, tolerance: float = 0.0) -> CheckReport:
    return CheckReport(
        claim_id=claim,
        computed=computed,
        bound=bound,
        tolerance=tolerance,
        mode="le",
        citation=citation,
        seed=seed,
        inputs=inputs or {},
    )


# ---------------------------------------------------------------------------
# Step 1: rational-oracle agreement of the float kernels.


def _step_oracle(cfg: SuiteConfig) -> list[CheckReport]:
    rng = _rng(cfg, 1)
    rational_ts = list(_RATIONAL_T.values())
    worst = 0.0
    for case in range(cfg.oracle_cases):
        n = int(rng.integers(2, MAX_ORACLE_LEN + 1))
        t = rational_ts[case % len(rational_ts)]
        nums = rng.integers(-8, 9, size=n)
        dens = rng.integers(1, 9, size=n)
        exact_x = [Fraction(int(a), int(b)) for a, b in zip(nums, dens)]
        x = np.array([float(v) for v in exact_x])
        got = apply_cesaro(float(t), x)
        want = exact_cesaro(t, exact_x)
        for g, w in zip(got, want):
            wf = float(w)
            scale = max(abs(wf), 1.0)
            worst = max(worst, abs(g - wf) / scale)
    reports = [
        _one_sided(
            "oracle-cesaro-agreement",
            worst,
            cfg.tolerances.oracle_tol,
            "float averaging recurrence vs exact rational evaluation",
            cfg.seed,
            {"cases": cfg.oracle_cases},
        )
    ]

    worst_v = 0.0
    all_exact = True
    for t_float, t_frac in _RATIONAL_T.items():
        if t_float not in cfg.t_grid:
            continue
        for m in range(0, 11):
            want = exact_eigenvector(t_frac, m, MAX_ORACLE_LEN)
            got = eigenvector(t_float, m, MAX_ORACLE_LEN)
            for g, w in zip(got, want):
                wf = float(w)
                worst_v = max(worst_v, abs(g - wf) / max(abs(wf), 1.0))
            all_exact &= exact_eigen_identity(t_frac, m, MAX_ORACLE_LEN)
    reports.append(
        _one_sided(
            "oracle-eigenvector-agreement",
            worst_v,
            cfg.tolerances.oracle_tol,
            "float ratio recurrence vs exact rational evaluation",
            cfg.seed,
        )
    )
    reports.append(
        CheckReport(
            claim_id="exact-eigen-identity",
            computed=1.0 if all_exact else 0.0,
            bound=1.0,
            tolerance=0.0,
            mode="eq",
            citation="averaging maps the recurrence vector to itself over m+1, exactly",
            seed=None,
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Step 2: basis identity (exact) and float operator identities.


def _step_identities(cfg: SuiteConfig) -> list[CheckReport]:
    reports = []
    ok = True
    for t in (Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)):
        for k in range(0, 31):
            ok &= exact_basis_identity(t, k, 40)
    reports.append(
        CheckReport(
            claim_id="basis-identity-exact",
            computed=1.0 if ok else 0.0,
            bound=1.0,
            tolerance=0.0,
            mode="eq",
            citation="averaging(e_n - t e_{n+1}) = e_n/(n+1) in rational arithmetic",
            seed=None,
        )
    )
    mutated = any(
        exact_basis_identity(Fraction(1, 2), k, 40, lam=Fraction(1, k + 2)) for k in range(5)
    )
    reports.append(
        CheckReport(
            claim_id="basis-identity-mutation-control",
            computed=1.0 if mutated else 0.0,
            bound=0.0,
            tolerance=0.0,
            mode="eq",
            citation="a wrong eigenvalue must break the basis identity",
            seed=None,
        )
    )

    rng = _rng(cfg, 2)
    n = cfg.n
    worst_fact = 0.0
    worst_dom = 0.0
    positive = True
    for t in cfg.t_grid:
        for _ in range(20):
            x = rng.standard_normal(n)
            via_factor = apply_diagonal(apply_resolvent_partial(t, n - 1, x))
            direct = apply_cesaro(t, x)
            scale = max(float(np.max(np.abs(direct))), 1e-300)
            worst_fact = max(worst_fact, float(np.max(np.abs(via_factor - direct))) / scale)
            positive &= bool(np.all(apply_cesaro(t, np.abs(x)) >= 0.0))
    for r, s in zip(cfg.t_grid, cfg.t_grid[1:]):
        for _ in range(10):
            x = rng.standard_normal(n)
            lo = np.abs(apply_cesaro(r, x))
            mid = apply_cesaro(r, np.abs(x))
            hi = apply_cesaro(s, np.abs(x))
            worst_dom = max(
                worst_dom,
                float(np.max(lo - mid)),
                float(np.max(mid - hi)),
            )
    reports.append(
        _one_sided(
            "factorization-diagonal-times-shift-series",
            worst_fact,
            1e-12,
            "averaging = diagonal composed with the geometric shift series",
            cfg.seed,
        )
    )
    reports.append(
        _one_sided(
            "positivity-and-domination",
            worst_dom if positive else math.inf,
            1e-15,
            "|C_r x| <= C_r|x| <= C_s|x| entrywise for r <= s",
            cfg.seed,
        )
    )

    worst_res = 0.0
    for t in cfg.t_grid:
        for space in EIGEN_GRID_SPACES:
            for m in range(0, min(11, cfg.n)):
                cert = eigen_certificate(t, m, cfg.n, space)
                worst_res = max(worst_res, cert.residual)
    reports.append(
        _one_sided(
            "eigen-residual-grid",
            worst_res,
            cfg.tolerances.residual_tol,
            "prefix eigen-residuals vanish for every space in the panel",
            cfg.seed,
            {"t_grid": list(cfg.t_grid), "m_max": 10, "n": cfg.n},
        )
    )

    # Unit ratio of the decaying eigenvector under the same prefix functional.
    worst_unit = 0.0
    for t in cfg.t_grid:
        if t == 0.0:
            continue
        g = eigenvector(t, 0, cfg.n)
        for space in EIGEN_GRID_SPACES:
            _, prefix_norm = make_functionals(space, cfg.n)
            ratio = prefix_norm(apply_cesaro(t, g)) / prefix_norm(g)
            worst_unit = max(worst_unit, abs(ratio - 1.0))
    reports.append(
        _one_sided(
            "norm-at-least-one-witness",
            worst_unit,
            1e-12,
            "the geometric eigenvector is fixed by averaging, forcing norm >= 1",
            cfg.seed,
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Step 3: norm axioms and embedding constants.


def _step_norm_axioms(cfg: SuiteConfig) -> list[CheckReport]:
    rng = _rng(cfg, 3)
    n = min(cfg.n, 256)
    reports = []
    for space in cfg.spaces:
        worst = 0.0
        for _ in range(25):
            x = rng.standard_normal(n)
            y = rng.standard_normal(n)
            c = float(rng.uniform(0.1, 10.0))
            nx = space_norm(space, x).value
            ny = space_norm(space, y).value
            nxy = space_norm(space, x + y).value
            ncx = space_norm(space, c * x).value
            scale = max(nx + ny, 1e-300)
            worst = max(worst, (nxy - (nx + ny)) / scale)
            worst = max(worst, abs(ncx - c * nx) / max(c * nx, 1e-300))
            masked = x * (rng.random(n) < 0.7)
            worst = max(worst, (space_norm(space, masked).value - nx) / max(nx, 1e-300))
        reports.append(
            _one_sided(
                "norm-axioms[%s]" % space.label(),
                worst,
                1e-12,
                "triangle, homogeneity, and monotonicity in |.|",
                cfg.seed,
            )
        )
    return reports


def _step_embeddings(cfg: SuiteConfig) -> list[CheckReport]:
    rng = _rng(cfg, 4)
    n = min(cfg.n, 512)
    reports = []

    worst = 0.0
    for _ in range(50):
        x = rng.standard_normal(n) * np.power(0.99, np.arange(n))
        worst = max(worst, lp_norm(1, x).value / max(dp_norm(1, x).value, 1e-300) - 1.0)
    e0_gap = abs(lp_norm(1, canonical(0, n)).value - dp_norm(1, canonical(0, n)).value)
    reports.append(
        _one_sided(
            "embedding-l1-below-majorant",
            max(worst, e0_gap),
            1e-12,
            "|x|_1 <= majorant norm, equality at e_0",
            cfg.seed,
        )
    )

    worst = 0.0
    for p in cfg.p_grid:
        w = make_weight("power:1", n)
        for _ in range(20):
            x = rng.standard_normal(n)
            lhs = space_norm(SpaceSpec("LpWeighted", p=p, w="power:1"), x).value
            rhs = float(w[0]) ** (1.0 / p) * lp_norm(1, x).value
            worst = max(worst, (lhs - rhs) / max(rhs, 1e-300))
    reports.append(
        _one_sided(
            "embedding-l1-into-weighted",
            worst,
            1e-12,
            "weighted p-norm <= w(0)^(1/p) l1 norm",
            cfg.seed,
        )
    )

    worst = 0.0
    for _ in range(50):
        x = rng.standard_normal(n)
        worst = max(
            worst,
            ces_sup_norm(x).value / max(float(np.max(np.abs(x))), 1e-300) - 1.0,
        )
    reports.append(
        _one_sided(
            "embedding-sup-dominates-averaged-sup",
            worst,
            1e-12,
            "running averages of |x| never exceed sup|x|",
            cfg.seed,
        )
    )

    worst = 0.0
    for p in [p for p in cfg.p_grid if p > 1]:
        q = p + 1
        spec = SpaceSpec("Xpq", p=p, q=q)
        for _ in range(20):
            x = rng.standard_normal(n)
            mid = space_norm(spec, x).value
            lo = lp_norm(q, x).value
            hi = 2.0 * lp_norm(p, x).value
            worst = max(worst, (lo - mid) / max(mid, 1e-300), (mid - hi) / max(hi, 1e-300))
    reports.append(
        _one_sided(
            "splice-norm-sandwich",
            worst,
            1e-12,
            "q-norm <= splice norm <= 2 p-norm",
            cfg.seed,
        )
    )

    ok = True
    for _ in range(20):
        x = np.zeros(n)
        support = rng.integers(0, n // 2, size=10)
        x[support] = rng.standard_normal(10)
        lam = float(rng.uniform(0, 1))
        ok &= distribution_function(x, lam) == distribution_function(apply_shift(3, x), lam)
    reports.append(
        CheckReport(
            claim_id="distribution-shift-invariance",
            computed=1.0 if ok else 0.0,
            bound=1.0,
            tolerance=0.0,
            mode="eq",
            citation="shifting preserves the level counts of |x|",
            seed=cfg.seed,
        )
    )

    blocks = 20
    x = ell1_not_d1_witness(blocks)
    l1 = lp_norm(1, x).value
    d1 = dp_norm(1, x).value
    ratios = [
        dp_norm(1, ell1_not_d1_witness(b)).value / lp_norm(1, ell1_not_d1_witness(b)).value
        for b in range(1, blocks + 1)
    ]
    monotone = all(r2 > r1 for r1, r2 in zip(ratios, ratios[1:]))
    ok = l1 <= 2.0 and d1 >= (blocks - 1) * (1.0 - 1e-12) and monotone
    reports.append(
        CheckReport(
            claim_id="summable-vs-majorant-separation",
            computed=d1,
            bound=float(blocks - 1),
            tolerance=0.0,
            mode="ge",
            status="pass" if ok else "fail",
            citation="block witness: l1 norm stays <= 2 while the majorant norm grows like b",
            seed=None,
            inputs={"blocks": blocks, "l1": l1, "ratio_monotone": monotone},
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Step 4: shift / resolvent / multiplier checks.


def _step_shift_resolvent_multiplier(cfg: SuiteConfig) -> list[CheckReport]:
    reports = []
    for p in cfg.p_grid:
        for m in range(0, 21):
            reports.append(shift_norm_check(p, m, cfg.n, trials=50, seed=cfg.seed))
    for p in cfg.p_grid:
        for t in cfg.t_grid:
            reports.append(
                resolvent_norm_check(p, t, cfg.n, budget=min(800, cfg.budget), seed=cfg.seed)
            )
    rng = _rng(cfg, 5)
    n = min(cfg.n, 256)
    for k in range(50):
        support = int(rng.integers(1, 17))
        a = np.zeros(n)
        a[rng.choice(32, size=support, replace=False)] = rng.random(support)
        p = float(cfg.p_grid[k % len(cfg.p_grid)])
        rep = multiplier_norm_check(a, p, budget=600, seed=cfg.seed + k)
        reports.append(replace(rep, claim_id="multiplier-norm[p=%g,case=%d]" % (p, k)))
    return reports


# ---------------------------------------------------------------------------
# Step 5: norm sandwiches for every (space, t), plus the diagonal operator.


def _step_sandwiches(cfg: SuiteConfig) -> list[CheckReport]:
    reports = []
    slack = cfg.tolerances.sandwich_slack
    for space in cfg.spaces:
        lowers = []
        uppers = []
        for t in cfg.t_grid:
            cert = norm_lower_bound(
                space,
                OperatorSpec("CesaroT", t=t),
                budget=cfg.budget,
                seed=cfg.seed,
                n=cfg.n,
            )
            lowers.append(cert.lower)
            uppers.append(cert.upper)
            reports.append(
                CheckReport(
                    claim_id="norm-sandwich[%s,t=%g]" % (space.label(), t),
                    computed=cert.lower,
                    bound=cert.upper,
                    tolerance=slack,
                    mode="le",
                    citation=cert.bound_source,
                    seed=cfg.seed,
                    inputs={"witness_hash": cert.witness_hash(), "n": cfg.n},
                )
            )
            if space.kind == "Dp" and t > 0.0:
                p = space.p
                k = np.arange(4096, dtype=np.float64)
                series = float(np.sum(t ** (k * p) / (k + 1.0) ** p) ** (1.0 / p))
                reports.append(
                    CheckReport(
                        claim_id="majorant-lower-witness[%s,t=%g]" % (space.label(), t),
                        computed=cert.lower,
                        bound=series,
                        tolerance=1e-9,
                        mode="ge",
                        citation="e_0 realises (sum t^(np)/(n+1)^p)^(1/p) from below",
                        seed=cfg.seed,
                    )
                )
        monotone_ok = all(
            lowers[i] <= uppers[j] * (1.0 + slack)
            for i in range(len(lowers))
            for j in range(i, len(uppers))
        )
        reports.append(
            CheckReport(
                claim_id="monotone-domination[%s]" % space.label(),
                computed=1.0 if monotone_ok else 0.0,
                bound=1.0,
                tolerance=0.0,
                mode="eq",
                citation="lower bounds at smaller t stay below upper bounds at larger t",
                seed=cfg.seed,
            )
        )
        cert = norm_lower_bound(
            space, OperatorSpec("Diagonal"), budget=min(500, cfg.budget), seed=cfg.seed, n=cfg.n
        )
        reports.append(
            CheckReport(
                claim_id="diagonal-norm[%s]" % space.label(),
                computed=cert.lower,
                bound=1.0,
                tolerance=slack,
                mode="le",
                citation=cert.bound_source,
                seed=cfg.seed,
                inputs={"attained": abs(cert.lower - 1.0) <= 1e-9},
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Step 6: compactness decay.


def _step_decay(cfg: SuiteConfig) -> list[CheckReport]:
    reports = []
    orders = [M for M in cfg.m_grid if M < cfg.n - 2]
    decay_spaces = (
        SpaceSpec("Lp", p=2.0),
        SpaceSpec("Dp", p=2.0),
        SpaceSpec("Xpq", p=2.0, q=3.0),
    )
    for space in decay_spaces:
        estimates = compactness_decay(
            space, 0.0, orders, n=cfg.n, budget=cfg.budget, seed=cfg.seed
        )
        worst_low = 0.0
        worst_high = 0.0
        for est in estimates:
            exact = 1.0 / (est.order + 2)
            worst_low = max(worst_low, exact - est.estimate)
            worst_high = max(worst_high, est.estimate - exact * (1.0 + SANDWICH_SLACK))
        reports.append(
            _one_sided(
                "diagonal-tail-norm[%s]" % space.label(),
                max(worst_low, worst_high),
                1e-10,
                "diagonal remainder norm is exactly 1/(M+2), attained at e_{M+1}",
                cfg.seed,
                {"orders": orders},
            )
        )
    xpq = SpaceSpec("Xpq", p=2.0, q=3.0)
    for t in cfg.t_grid:
        if t == 0.0:
            continue
        estimates = compactness_decay(xpq, t, orders, n=cfg.n, budget=cfg.budget, seed=cfg.seed)
        bound_ok = all(e.estimate <= e.upper * (1.0 + SANDWICH_SLACK) for e in estimates)
        dec_ok = all(
            e2.estimate <= e1.estimate * (1.0 + 1e-12)
            for e1, e2 in zip(estimates, estimates[1:])
        )
        reports.append(
            CheckReport(
                claim_id="averaging-tail-decay[t=%g]" % t,
                computed=1.0 if (bound_ok and dec_ok) else 0.0,
                bound=1.0,
                tolerance=0.0,
                mode="eq",
                citation="tail estimates stay under 2(1-t)^-1 zeta(p,M+2)^(1/p) and decrease",
                seed=cfg.seed,
                inputs={"estimates": [e.to_json() for e in estimates]},
            )
        )
    return reports


# ---------------------------------------------------------------------------
# Step 7: finite sections.


def _step_sections(cfg: SuiteConfig) -> list[CheckReport]:
    reports = []
    for t in cfg.t_grid:
        eigs, max_dev = finite_section_eigenvalues(t, cfg.n)
        reports.append(
            CheckReport(
                claim_id="section-eigenvalues[t=%g]" % t,
                computed=max_dev,
                bound=0.0,
                tolerance=0.0,
                mode="eq",
                citation="triangular sections carry exactly the reciprocals 1/(k+1)",
                seed=None,
            )
        )
        d_h = hausdorff_to_eigenvalue_set(eigs, cfg.n)
        reports.append(
            _one_sided(
                "section-hausdorff[t=%g]" % t,
                d_h,
                1.0 / (cfg.n + 1),
                "section spectrum with 0 is within 1/(N+1) of the limit set",
                None,
            )
        )
    n64 = min(MAX_ORACLE_LEN, cfg.n)
    worst = 0.0
    for t in cfg.t_grid:
        dense = dense_section_eigenvalues(t, n64)
        target = 1.0 / np.arange(1, n64 + 1, dtype=np.float64)
        worst = max(worst, float(np.max(np.abs(dense - target))))
    reports.append(
        _one_sided(
            "section-dense-crosscheck",
            worst,
            1e-8,
            "general dense eigensolver agrees with the diagonal at order 64",
            None,
            {"n": n64},
        )
    )
    return reports


# ---------------------------------------------------------------------------
# Step 8: averaged-sup witnesses.


def _step_cesinf(cfg: SuiteConfig) -> list[CheckReport]:
    n = 10**4
    z = squares_witness(n)
    averages_max = float(np.max(apply_cesaro(1.0, z)))
    reports = [
        _one_sided(
            "squares-witness-bounded-averages",
            averages_max,
            1.0,
            "running averages of the squares witness never exceed 1",
            None,
            {"n": n},
        )
    ]
    sup_bounds = [0.5, 1.0, 2.0, 5.0]
    k0 = 2 * int(math.floor(max(sup_bounds))) + 2
    n_needed = 4 * k0 * k0 + 1
    reports.append(
        cesinf_nondensity_check(sup_bounds, max(cfg.n, n_needed), trials=8, seed=cfg.seed)
    )
    return reports


def run_suite(config: SuiteConfig) -> list[CheckReport]:
    """Execute every check in order and return the reports.

    The caller decides what to do with failures; the CLI exits nonzero iff
    any report failed.
    """
    cfg = config.validate()
    steps: list[Callable[[SuiteConfig], list[CheckReport]]] = [
        _step_oracle,
        _step_identities,
        _step_norm_axioms,
        _step_embeddings,
        _step_shift_resolvent_multiplier,
        _step_sandwiches,
        _step_decay,
        _step_sections,
        _step_cesinf,
    ]
    threads = int(os.environ.get("CESARO_LAB_THREADS", "1") or "1")
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(lambda s: s(cfg), steps))
    else:
        chunks = [step(cfg) for step in steps]
    return [report for chunk in chunks for report in chunk]
