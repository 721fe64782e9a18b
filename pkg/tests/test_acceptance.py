"""Acceptance suite: one test per criterion, tolerances pinned here.

Each test prints one ``[acceptance] criterion-N ...: PASS/FAIL`` line.
Expected values are computed by independent means inside this module
(plain-Python direct summation, closed forms, rational arithmetic), never
by the code paths under test.
"""

import math
import time
from fractions import Fraction

import mpmath
import numpy as np
import pytest

from cesaro_lab.config import SuiteConfig, default_spaces
from cesaro_lab.operators import OperatorSpec, apply_cesaro
from cesaro_lab.oracle import exact_basis_identity, exact_eigen_identity
from cesaro_lab.report import emit
from cesaro_lab.seqs import canonical, ell1_not_d1_witness, squares_witness
from cesaro_lab.spaces import SpaceSpec, dp_norm, lp_norm, space_norm
from cesaro_lab.spectral import (
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
from cesaro_lab.suite import EIGEN_GRID_SPACES, run_suite

T_GRID = (0.0, 0.1, 0.25, 0.5, 0.75, 0.9)
T_RATIONAL = (
    Fraction(0),
    Fraction(1, 10),
    Fraction(1, 4),
    Fraction(1, 2),
    Fraction(3, 4),
    Fraction(9, 10),
)
P_GRID = (1.0, 1.5, 2.0, 3.0)
N = 512
SEED = 42

RESIDUAL_TOL = 1e-10
SANDWICH_SLACK = 1e-9
WITNESS_TOL = 1e-10
EXACT_TOL = 1e-12


def criterion(n, label):
    """Print one pass/fail line per criterion, whatever the assert outcome."""

    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            verdict = "PASS" if exc_type is None else "FAIL"
            print("[acceptance] criterion-%02d %s: %s" % (n, label, verdict))
            return False

    return _Ctx()


def test_criterion_01_eigen_identity():
    with criterion(1, "eigen identity across the space panel"):
        start = time.monotonic()
        for t in T_GRID:
            for m in range(11):
                for space in EIGEN_GRID_SPACES:
                    cert = eigen_certificate(t, m, N, space)
                    assert cert.residual <= RESIDUAL_TOL, (t, m, space.label())
                    assert cert.lam == pytest.approx(1.0 / (m + 1), rel=1e-15)
        for t in T_RATIONAL:
            for m in range(11):
                assert exact_eigen_identity(t, m, 64)
        elapsed = time.monotonic() - start
        assert elapsed < 30.0, "runtime target exceeded: %.1f s" % elapsed


def test_criterion_02_basis_identity_exact():
    with criterion(2, "basis identity in rational arithmetic"):
        for t in (Fraction(1, 3), Fraction(1, 2), Fraction(9, 10)):
            for k in range(31):
                assert exact_basis_identity(t, k, 33)


def _direct_ct_e0_norm(space, t, n):
    """Independent direct summation of the norm of (t^k/(k+1)) per space."""
    entries = [t**k / (k + 1) for k in range(n)]
    if space.kind == "Lp":
        return math.fsum(abs(v) ** space.p for v in entries) ** (1 / space.p)
    if space.kind == "Dp":
        # entries decrease, so the majorant is the sequence itself
        return math.fsum(abs(v) ** space.p for v in entries) ** (1 / space.p)
    if space.kind == "CesP":
        averages = []
        running = 0.0
        for k, v in enumerate(entries):
            running += v
            averages.append(running / (k + 1))
        return math.fsum(a ** space.p for a in averages) ** (1 / space.p)
    if space.kind == "LpWeighted":
        w = [(k + 1.0) ** -1.0 for k in range(n)]
        return math.fsum(abs(v) ** space.p * w[k] for k, v in enumerate(entries)) ** (
            1 / space.p
        )
    if space.kind == "C0Weighted":
        w = [(k + 1.0) ** -1.0 for k in range(n)]
        return max(w[k] * abs(v) for k, v in enumerate(entries))
    if space.kind == "Xpq":
        even = math.fsum(abs(v) ** space.p for v in entries[0::2]) ** (1 / space.p)
        odd = math.fsum(abs(v) ** space.q for v in entries[1::2]) ** (1 / space.q)
        return even + odd
    raise AssertionError("unexpected space kind")


def _expected_upper(space, t):
    if space.kind in ("Lp", "LpWeighted", "C0Weighted"):
        return 1.0 / (1.0 - t)
    if space.kind == "CesP":
        return min(space.p / (space.p - 1.0), 1.0 / (1.0 - t))
    if space.kind == "Dp":
        return (1.0 - t) ** (-1.0 - 1.0 / space.p)
    if space.kind == "Xpq":
        # independent high-precision evaluation of the full p-norm of (1/(n+1))
        xi_p = float(mpmath.zeta(space.p)) ** (1 / space.p)
        return 2.0 * xi_p / (1.0 - t)
    raise AssertionError("unexpected space kind")


def test_criterion_03_norm_sandwiches():
    with criterion(3, "search lower bounds under analytic upper bounds"):
        spaces = default_spaces(P_GRID)
        for space in spaces:
            for t in T_GRID:
                cert = norm_lower_bound(
                    space, OperatorSpec("CesaroT", t=t), budget=1200, seed=SEED, n=N
                )
                assert cert.lower <= cert.upper * (1.0 + SANDWICH_SLACK), (
                    space.label(),
                    t,
                )
                want_upper = _expected_upper(space, t)
                assert cert.upper == pytest.approx(want_upper, rel=1e-9), space.label()
                # witness evaluation against direct summation
                image = apply_cesaro(t, canonical(0, N))
                got = space_norm(space, image).value
                want = _direct_ct_e0_norm(space, t, N)
                assert got == pytest.approx(want, rel=WITNESS_TOL), (space.label(), t)
                if space.kind == "Dp":
                    series = math.fsum(
                        t ** (k * space.p) / (k + 1.0) ** space.p for k in range(6000)
                    ) ** (1.0 / space.p)
                    assert cert.lower >= series - SANDWICH_SLACK, (space.label(), t)


def test_criterion_04_shift_norms():
    with criterion(4, "exact shift norms on the majorant spaces"):
        for p in P_GRID:
            for m in range(21):
                rep = shift_norm_check(p, m, N, trials=200, seed=SEED)
                assert abs(rep.computed - (m + 1) ** (1.0 / p)) <= EXACT_TOL * rep.bound
                assert rep.inputs["search_max"] <= rep.bound * (1.0 + SANDWICH_SLACK)
                assert rep.status == "pass"


def test_criterion_05_resolvent_norms():
    with criterion(5, "geometric shift series norms on the majorant spaces"):
        for p in P_GRID:
            for t in T_GRID:
                rep = resolvent_norm_check(p, t, N, budget=800, seed=SEED)
                assert rep.status == "pass"
                if t == 0.0:
                    assert rep.computed == 1.0
                else:
                    want = (1.0 - t**p) ** (-1.0 / p)
                    assert abs(rep.computed - want) <= 1e-9 * want
                    assert rep.inputs["search_lower"] <= (1.0 - t) ** (
                        -1.0 - 1.0 / p
                    ) * (1.0 + SANDWICH_SLACK)


def test_criterion_06_multiplier_sandwich():
    with criterion(6, "convolution multiplier norm sandwich"):
        rng = np.random.default_rng(SEED)
        n = 256
        for case in range(50):
            support = int(rng.integers(1, 17))
            a = np.zeros(n)
            a[rng.choice(48, size=support, replace=False)] = rng.random(support)
            p = P_GRID[case % len(P_GRID)]
            rep = multiplier_norm_check(a, p, budget=600, seed=SEED + case)
            assert rep.status == "pass"
            a_p = math.fsum(abs(v) ** p for v in a) ** (1 / p)
            a_1 = math.fsum(abs(v) for v in a)
            assert abs(rep.inputs["image_of_e0"] - a_p) <= EXACT_TOL * max(a_p, 1.0)
            assert rep.computed >= rep.inputs["image_of_e0"] * (1.0 - 1e-12)
            assert rep.computed <= a_1 * (1.0 + SANDWICH_SLACK)


def test_criterion_07_compactness_decay():
    with criterion(7, "truncation tails: diagonal exact rate, splice bound"):
        orders = [0, 1, 3, 7, 15, 31, 63]
        for space in (SpaceSpec("Lp", p=2.0), SpaceSpec("Dp", p=2.0)):
            for est in compactness_decay(space, 0.0, orders, n=N, budget=2000, seed=SEED):
                exact = 1.0 / (est.order + 2)
                assert est.estimate >= exact - 1e-10
                assert est.estimate <= exact * (1.0 + SANDWICH_SLACK)
        xpq = SpaceSpec("Xpq", p=2.0, q=3.0)
        for t in T_GRID[1:]:
            ests = compactness_decay(xpq, t, orders, n=N, budget=2000, seed=SEED)
            tail_sq = [float(mpmath.zeta(2, M + 2)) for M in orders]
            for est, ts in zip(ests, tail_sq):
                assert est.upper == pytest.approx(2.0 / (1 - t) * ts**0.5, rel=1e-12)
                assert est.estimate <= est.upper * (1.0 + SANDWICH_SLACK)
            values = [e.estimate for e in ests]
            assert all(b <= a * (1 + 1e-12) for a, b in zip(values, values[1:]))


def test_criterion_08_finite_section_spectrum():
    with criterion(8, "finite sections carry the reciprocal eigenvalues"):
        for t in T_GRID:
            eigs, dev = finite_section_eigenvalues(t, N)
            assert dev == 0.0
            np.testing.assert_array_equal(eigs, 1.0 / np.arange(1, N + 1))
            assert hausdorff_to_eigenvalue_set(eigs, N) <= 1.0 / (N + 1)
            dense = dense_section_eigenvalues(t, 64)
            assert np.max(np.abs(dense - 1.0 / np.arange(1, 65))) <= 1e-8


def test_criterion_09_averaged_sup_witnesses():
    with criterion(9, "squares witness: bounded averages, distance >= 1/4"):
        n = 10_000
        averages = apply_cesaro(1.0, squares_witness(n))
        assert float(np.max(averages)) <= 1.0
        sup_bounds = [0.5, 1.0, 2.0, 5.0]
        k0 = 2 * int(math.floor(max(sup_bounds))) + 2
        rep = cesinf_nondensity_check(sup_bounds, 4 * k0 * k0 + 1, trials=8, seed=SEED)
        assert rep.status == "pass"
        assert rep.computed >= 0.25
        assert all(v >= 0.25 for v in rep.inputs["per_bound"].values())


def test_criterion_10_summable_vs_majorant_separation():
    with criterion(10, "summable witness with divergent majorant norm"):
        blocks = 20
        x = ell1_not_d1_witness(blocks)
        assert lp_norm(1, x).value <= 2.0
        assert dp_norm(1, x).value >= (blocks - 1) * (1.0 - 1e-12)
        ratios = []
        for b in range(1, blocks + 1):
            w = ell1_not_d1_witness(b)
            ratios.append(dp_norm(1, w).value / lp_norm(1, w).value)
        assert all(r2 > r1 for r1, r2 in zip(ratios, ratios[1:]))


def test_criterion_11_determinism(tmp_path):
    with criterion(11, "byte-identical verify runs at seed 42"):
        cfg = SuiteConfig(seed=42)
        first = tmp_path / "run1.json"
        second = tmp_path / "run2.json"
        reports1 = run_suite(cfg)
        reports2 = run_suite(cfg)
        assert all(r.passed for r in reports1)
        emit(reports1, "json", str(first))
        emit(reports2, "json", str(second))
        assert first.read_bytes() == second.read_bytes()
