import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import zeta

from cesaro_lab import spaces
from cesaro_lab.operators import apply_cesaro, apply_shift
from cesaro_lab.seqs import canonical, geometric, make_weight, squares_witness, xi

finite_vectors = st.lists(
    st.floats(-1e3, 1e3, allow_nan=False), min_size=1, max_size=30
).map(lambda v: np.asarray(v, dtype=np.float64))


def all_space_specs():
    return [
        spaces.SpaceSpec("Lp", p=1.0),
        spaces.SpaceSpec("Lp", p=1.5),
        spaces.SpaceSpec("Linf"),
        spaces.SpaceSpec("CesP", p=2.0),
        spaces.SpaceSpec("Ces0"),
        spaces.SpaceSpec("CesInf"),
        spaces.SpaceSpec("Dp", p=1.0),
        spaces.SpaceSpec("Dp", p=2.0),
        spaces.SpaceSpec("LpWeighted", p=2.0, w="power:1"),
        spaces.SpaceSpec("C0Weighted", w="exp:0.5"),
        spaces.SpaceSpec("Xpq", p=2.0, q=3.0),
    ]


def test_lp_norm_values():
    assert spaces.lp_norm(1, np.array([1.0, -2.0, 3.0])).value == 6.0
    assert spaces.lp_norm(math.inf, np.array([1.0, -2.0])).value == 2.0
    with pytest.raises(ValueError):
        spaces.lp_norm(0.5, np.ones(2))


def test_lp_norm_of_xi_approaches_basel():
    n = 10_000
    value = spaces.lp_norm(2, xi(n)).value
    assert abs(value - math.pi / math.sqrt(6)) < 1e-2


def test_majorant_examples():
    np.testing.assert_array_equal(
        spaces.majorant(np.array([1.0, 0.0, 2.0, 0.0])), [2, 2, 2, 0]
    )
    g = geometric(0.5, 16)
    np.testing.assert_array_equal(spaces.majorant(g), g)


@settings(max_examples=60, deadline=None)
@given(finite_vectors)
def test_majorant_properties(x):
    m = spaces.majorant(x)
    assert np.all(m >= np.abs(x))
    assert np.all(np.diff(m) <= 0)
    np.testing.assert_array_equal(spaces.majorant(m), m)


def test_cesp_norm_on_e0():
    p, n = 2.0, 200
    got = spaces.cesp_norm(p, canonical(0, n))
    want = float(np.sum((1.0 / np.arange(1, n + 1)) ** p)) ** (1 / p)
    assert got.value == pytest.approx(want, rel=1e-14)
    assert got.exactness == spaces.LOWER_APPROXIMATION
    # remainder term: l1(x) * zeta(p, n+1)^(1/p); value + tail recovers zeta(p)^(1/p)
    full = (got.value**p + got.tail_bound**p) ** (1 / p)
    assert full == pytest.approx(float(zeta(p, 1)) ** (1 / p), rel=1e-13)
    with pytest.raises(ValueError):
        spaces.cesp_norm(1.0, canonical(0, 4))


def test_cesp_zero():
    assert spaces.cesp_norm(2.0, np.zeros(8)).value == 0.0


def test_cesp_monotone_in_pointwise_order():
    rng = np.random.default_rng(5)
    for _ in range(50):
        y = rng.standard_normal(64)
        x = y * rng.random(64)
        assert (
            spaces.cesp_norm(1.5, x).value
            <= spaces.cesp_norm(1.5, y).value * (1 + 1e-12)
        )


def test_ces_sup_norm_values():
    n = 64
    for k in (0, 3, 9):
        assert spaces.ces_sup_norm(canonical(k, n)).value == pytest.approx(
            1.0 / (k + 1), rel=1e-15
        )
    assert spaces.ces_sup_norm(np.ones(n)).value == pytest.approx(1.0)
    assert spaces.ces_sup_norm(squares_witness(5000)).value <= 1.0


def test_dp_norm_values():
    n = 50
    for p in (1.0, 2.0, 3.0):
        for k in (0, 4, 9):
            assert spaces.dp_norm(p, canonical(k, n)).value == pytest.approx(
                (k + 1) ** (1 / p), rel=1e-15
            )
    with pytest.raises(ValueError):
        spaces.dp_norm(0.9, np.ones(3))


def test_dp_norm_of_geometric_matches_closed_form():
    n = 64
    for p in (1.0, 2.0):
        for t in (0.3, 0.8):
            got = spaces.dp_norm(p, geometric(t, n)).value
            want = ((1 - t ** (p * n)) / (1 - t**p)) ** (1 / p)
            assert got == pytest.approx(want, rel=1e-13)


def test_d1_dominates_l1():
    rng = np.random.default_rng(6)
    for _ in range(50):
        x = rng.standard_normal(40)
        assert spaces.lp_norm(1, x).value <= spaces.dp_norm(1, x).value * (1 + 1e-12)


def test_weighted_lp_norm():
    n = 16
    w1 = np.ones(n)
    x = np.arange(1.0, n + 1)
    assert spaces.weighted_lp_norm(2, w1, x).value == pytest.approx(
        spaces.lp_norm(2, x).value
    )
    w = make_weight("power:1", n)
    for k in (0, 3):
        assert spaces.weighted_lp_norm(2, w, canonical(k, n)).value == pytest.approx(
            w[k] ** 0.5
        )
    with pytest.raises(ValueError):
        spaces.weighted_lp_norm(2, w, np.ones(n + 1))


def test_weighted_shift_contraction():
    n, p = 64, 2.0
    w = make_weight("power:1", n)
    rng = np.random.default_rng(7)
    for _ in range(30):
        x = rng.standard_normal(n)
        assert (
            spaces.weighted_lp_norm(p, w, apply_shift(1, x)).value
            <= spaces.weighted_lp_norm(p, w, x).value * (1 + 1e-12)
        )
        assert (
            spaces.weighted_c0_norm(w, apply_shift(1, x)).value
            <= spaces.weighted_c0_norm(w, x).value * (1 + 1e-12)
        )


def test_weighted_c0_norm():
    n = 12
    w = make_weight("exp:0.5", n)
    for k in (0, 2):
        assert spaces.weighted_c0_norm(w, canonical(k, n)).value == pytest.approx(w[k])
    assert spaces.weighted_c0_norm(np.ones(n), np.arange(float(n))).value == n - 1


def test_xpq_norm():
    n = 10
    for k in range(n):
        assert spaces.xpq_norm(2, 3, canonical(k, n)).value == pytest.approx(1.0)
    assert spaces.xpq_norm(2, 3, np.array([3.0, -4.0])).value == pytest.approx(7.0)
    with pytest.raises(ValueError):
        spaces.xpq_norm(3, 2, np.ones(4))
    with pytest.raises(ValueError):
        spaces.xpq_norm(1, 2, np.ones(4))


def test_xpq_sandwich():
    rng = np.random.default_rng(8)
    p, q = 2.0, 3.0
    for _ in range(50):
        x = rng.standard_normal(31)
        mid = spaces.xpq_norm(p, q, x).value
        assert spaces.lp_norm(q, x).value <= mid * (1 + 1e-12)
        assert mid <= 2 * spaces.lp_norm(p, x).value * (1 + 1e-12)


def test_distribution_function():
    assert spaces.distribution_function(np.array([1.0, 2.0, 3.0]), 1.5) == 2
    assert spaces.distribution_function(np.zeros(5), 0.3) == 0
    # strict inequality at the threshold
    assert spaces.distribution_function(np.array([1.0, 1.0]), 1.0) == 0
    with pytest.raises(ValueError):
        spaces.distribution_function(np.ones(3), -0.1)


def test_distribution_shift_invariance():
    rng = np.random.default_rng(9)
    for _ in range(20):
        x = np.zeros(64)
        x[rng.integers(0, 32, size=8)] = rng.standard_normal(8)
        lam = float(rng.uniform(0, 2))
        assert spaces.distribution_function(x, lam) == spaces.distribution_function(
            apply_shift(5, x), lam
        )


@pytest.mark.parametrize("space", all_space_specs(), ids=lambda s: s.label())
def test_norm_axioms(space):
    rng = np.random.default_rng(11)
    n = 48
    assert spaces.space_norm(space, np.zeros(n)).value == 0.0
    for _ in range(25):
        x = rng.standard_normal(n)
        y = rng.standard_normal(n)
        c = float(rng.uniform(0.1, 5.0))
        nx = spaces.space_norm(space, x).value
        assert nx > 0.0
        assert spaces.space_norm(space, x + y).value <= nx + spaces.space_norm(
            space, y
        ).value * (1 + 1e-12) + 1e-12 * nx
        assert spaces.space_norm(space, c * x).value == pytest.approx(c * nx, rel=1e-12)
        shrunk = x * rng.random(n)
        assert spaces.space_norm(space, shrunk).value <= nx * (1 + 1e-12)


def test_space_spec_validation():
    with pytest.raises(ValueError):
        spaces.SpaceSpec("Lp")
    with pytest.raises(ValueError):
        spaces.SpaceSpec("CesP", p=1.0)
    with pytest.raises(ValueError):
        spaces.SpaceSpec("Xpq", p=2.0, q=2.0)
    with pytest.raises(ValueError):
        spaces.SpaceSpec("LpWeighted", p=2.0)
    with pytest.raises(ValueError):
        spaces.SpaceSpec("Mystery")


def test_space_spec_json_roundtrip():
    for spec in all_space_specs():
        data = json.loads(json.dumps(spec.to_json()))
        assert spaces.SpaceSpec.from_json(data) == spec
    spec = spaces.SpaceSpec("C0Weighted", w=(1.0, 0.5, 0.25))
    assert spaces.SpaceSpec.from_json(spec.to_json()) == spec


def test_make_functionals_cesp_ratio_is_conservative():
    # the exact input functional dominates the prefix functional
    space = spaces.SpaceSpec("CesP", p=2.0)
    exact, prefix = spaces.make_functionals(space, 128)
    rng = np.random.default_rng(12)
    for _ in range(20):
        x = np.abs(rng.standard_normal(128))
        assert exact(x) > prefix(x)
        full = spaces.cesp_norm(2.0, x)
        assert exact(x) == pytest.approx(
            (full.value**2 + full.tail_bound**2) ** 0.5, rel=1e-13
        )


def test_make_functionals_match_space_norm():
    rng = np.random.default_rng(13)
    for space in all_space_specs():
        inp, outp = spaces.make_functionals(space, 32)
        for _ in range(5):
            x = rng.standard_normal(32)
            assert outp(x) == pytest.approx(spaces.space_norm(space, x).value, rel=1e-13)
            if space.kind != "CesP":
                assert inp(x) == outp(x)
