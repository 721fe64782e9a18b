import json
from fractions import Fraction

import numpy as np
import pytest

from cesaro_lab import operators as ops
from cesaro_lab import oracle
from cesaro_lab.seqs import canonical, geometric, xi


@pytest.fixture(scope="module")
def rng():
    return np.random.default_rng(2024)


def test_cesaro_at_zero_is_diagonal(rng):
    for _ in range(100):
        x = rng.standard_normal(32)
        np.testing.assert_allclose(
            ops.apply_cesaro(0.0, x), ops.apply_diagonal(x), rtol=1e-15
        )


def test_cesaro_on_e0_gives_scaled_powers():
    t, n = 0.5, 16
    out = ops.apply_cesaro(t, canonical(0, n))
    want = geometric(t, n) / np.arange(1, n + 1)
    np.testing.assert_allclose(out, want, rtol=1e-14)


def test_cesaro_averages_constants():
    np.testing.assert_allclose(ops.apply_cesaro(1.0, np.ones(3)), np.ones(3))


def test_cesaro_rejects_bad_t():
    with pytest.raises(ValueError):
        ops.apply_cesaro(1.5, np.ones(3))
    with pytest.raises(ValueError):
        ops.apply_cesaro(-0.1, np.ones(3))


def test_diagonal_values():
    np.testing.assert_allclose(ops.apply_diagonal(np.ones(3)), [1, 0.5, 1 / 3])
    np.testing.assert_allclose(ops.apply_diagonal(canonical(0, 2)), [1.0, 0.0])


def test_shift():
    np.testing.assert_array_equal(ops.apply_shift(1, np.array([1.0, 2, 3])), [0, 1, 2])
    x = np.arange(4.0)
    np.testing.assert_array_equal(ops.apply_shift(0, x), x)
    np.testing.assert_array_equal(ops.apply_shift(3, np.array([1.0, 0, 0])), [0, 0, 0])
    np.testing.assert_array_equal(ops.apply_shift(9, np.ones(4)), np.zeros(4))
    with pytest.raises(ValueError):
        ops.apply_shift(-1, x)


def test_resolvent_on_e0_is_geometric():
    t, n = 0.7, 24
    out = ops.apply_resolvent_partial(t, n - 1, canonical(0, n))
    np.testing.assert_allclose(out, geometric(t, n), rtol=1e-14)


def test_resolvent_identity_at_zero(rng):
    x = rng.standard_normal(16)
    for order in (0, 3, 15):
        np.testing.assert_array_equal(ops.apply_resolvent_partial(0.0, order, x), x)
    with pytest.raises(ValueError):
        ops.apply_resolvent_partial(1.0, 4, x)


def test_factorization_diagonal_resolvent(rng):
    # averaging = diagonal o (full shift series) exactly on prefixes
    for t in (0.1, 0.3, 0.5, 0.7, 0.9):
        for _ in range(20):
            x = rng.standard_normal(64)
            lhs = ops.apply_diagonal(ops.apply_resolvent_partial(t, 63, x))
            rhs = ops.apply_cesaro(t, x)
            np.testing.assert_allclose(lhs, rhs, rtol=1e-13, atol=1e-300)


def test_convolve_identity_and_commutativity(rng):
    x = rng.standard_normal(20)
    np.testing.assert_allclose(ops.convolve(canonical(0, 20), x), x)
    a = rng.standard_normal(20)
    np.testing.assert_allclose(ops.convolve(a, x), ops.convolve(x, a), rtol=1e-12)
    with pytest.raises(ValueError):
        ops.convolve(np.ones(3), np.ones(4))


def test_convolve_with_powers_matches_scaled_averaging(rng):
    t, n = 0.6, 40
    x = rng.standard_normal(n)
    conv = ops.convolve(geometric(t, n), x)
    avg = ops.apply_cesaro(t, x) * np.arange(1, n + 1)
    np.testing.assert_allclose(conv, avg, rtol=1e-12)


def test_matrix_small_sections():
    m = ops.cesaro_matrix(0.5, 2)
    np.testing.assert_allclose(m, [[1.0, 0.0], [0.25, 0.5]])
    d = ops.cesaro_matrix(0.0, 5)
    np.testing.assert_allclose(d, np.diag(1.0 / np.arange(1, 6)))


def test_matrix_diagonal_and_triangularity():
    m = ops.cesaro_matrix(0.9, 30)
    np.testing.assert_allclose(np.diag(m), 1.0 / np.arange(1, 31))
    assert np.array_equal(np.triu(m, k=1), np.zeros_like(m))


def test_matrix_multiply_matches_recurrence(rng):
    # absolute tolerance scaled by the summed mass: entries produced by heavy
    # cancellation carry roundoff from both summation orders
    for t in (0.0, 0.25, 0.9):
        m = ops.cesaro_matrix(t, 48)
        for _ in range(100):
            x = rng.standard_normal(48)
            np.testing.assert_allclose(
                m @ x,
                ops.apply_cesaro(t, x),
                rtol=1e-12,
                atol=1e-14 * float(np.sum(np.abs(x))),
            )


def test_diagonal_truncated():
    np.testing.assert_array_equal(
        ops.apply_diagonal_truncated(0, np.array([2.0, 2.0, 2.0])), [2, 0, 0]
    )
    x = np.arange(1.0, 9.0)
    np.testing.assert_array_equal(
        ops.apply_diagonal_truncated(7, x), ops.apply_diagonal(x)
    )


def test_diagonal_truncated_tail_bound(rng):
    for order in (0, 2, 5):
        for _ in range(20):
            x = rng.standard_normal(32)
            tail = ops.apply_diagonal(x) - ops.apply_diagonal_truncated(order, x)
            assert np.max(np.abs(tail)) <= np.max(np.abs(x)) / (order + 2) + 1e-15


def test_cesaro_truncated():
    np.testing.assert_array_equal(
        ops.apply_cesaro_truncated(0.5, 0, np.array([1.0, 1.0])), [1.0, 0.0]
    )
    x = np.arange(1.0, 6.0)
    np.testing.assert_allclose(
        ops.apply_cesaro_truncated(0.5, 4, x), ops.apply_cesaro(0.5, x)
    )


def test_eigenvector_values():
    np.testing.assert_allclose(ops.eigenvector(0.5, 0, 8), geometric(0.5, 8))
    np.testing.assert_array_equal(ops.eigenvector(0.0, 3, 6), canonical(3, 6))
    np.testing.assert_allclose(ops.eigenvector(0.5, 1, 4), [0.0, 1.0, 1.0, 0.75])
    with pytest.raises(IndexError):
        ops.eigenvector(0.5, 9, 4)


def test_eigenvector_matches_rational_oracle():
    for t_float, t_frac in [(0.5, Fraction(1, 2)), (0.9, Fraction(9, 10))]:
        for m in (0, 2, 7):
            got = ops.eigenvector(t_float, m, 48)
            want = [float(v) for v in oracle.exact_eigenvector(t_frac, m, 48)]
            np.testing.assert_allclose(got, want, rtol=1e-13)


def test_eigen_identity_on_prefix():
    # lower triangularity makes the prefix identity exact up to roundoff
    for t in (0.1, 0.5, 0.9):
        for m in (0, 1, 5, 10):
            v = ops.eigenvector(t, m, 512)
            resid = ops.apply_cesaro(t, v) - v / (m + 1)
            assert np.max(np.abs(resid)) <= 1e-12 * np.max(np.abs(v))


def test_basis_identity_float():
    n = 64
    for t in (0.1, 0.5, 0.9):
        for k in (0, 3, 30):
            x = canonical(k, n) - t * canonical(k + 1, n)
            out = ops.apply_cesaro(t, x)
            np.testing.assert_allclose(
                out, canonical(k, n) / (k + 1), atol=1e-17, rtol=1e-14
            )


def test_positivity_and_domination(rng):
    for _ in range(50):
        x = rng.standard_normal(40)
        assert np.all(ops.apply_cesaro(0.7, np.abs(x)) >= 0)
        lo = np.abs(ops.apply_cesaro(0.3, x))
        mid = ops.apply_cesaro(0.3, np.abs(x))
        hi = ops.apply_cesaro(0.8, np.abs(x))
        assert np.all(lo <= mid + 1e-15)
        assert np.all(mid <= hi + 1e-15)


def test_matrix_invertibility_proxy():
    for t in (0.0, 0.5, 1.0):
        m = ops.cesaro_matrix(t, 20)
        assert np.all(np.diag(m) > 0)


def test_operator_spec_json_roundtrip():
    spec = ops.OperatorSpec("CesaroT", t=0.5)
    assert ops.OperatorSpec.from_json(json.loads(json.dumps(spec.to_json()))) == spec
    spec = ops.OperatorSpec("Convolution", a=(1.0, 0.5))
    assert ops.OperatorSpec.from_json(spec.to_json()) == spec
    spec = ops.OperatorSpec("ResolventPartial", t=0.25, order=7)
    assert ops.OperatorSpec.from_json(spec.to_json()) == spec


def test_operator_spec_validation():
    with pytest.raises(ValueError):
        ops.OperatorSpec("Banana")
    with pytest.raises(ValueError):
        ops.OperatorSpec("CesaroT")
    with pytest.raises(ValueError):
        ops.OperatorSpec("ResolventPartial", t=1.0, order=3)
    with pytest.raises(ValueError):
        ops.OperatorSpec("Shift")
    with pytest.raises(ValueError):
        ops.OperatorSpec("Convolution")


def test_apply_operator_dispatch(rng):
    x = rng.standard_normal(12)
    cases = [
        (ops.OperatorSpec("CesaroT", t=0.5), ops.apply_cesaro(0.5, x)),
        (ops.OperatorSpec("Diagonal"), ops.apply_diagonal(x)),
        (ops.OperatorSpec("Shift", m=2), ops.apply_shift(2, x)),
        (ops.OperatorSpec("ResolventPartial", t=0.5, order=4),
         ops.apply_resolvent_partial(0.5, 4, x)),
        (ops.OperatorSpec("DiagonalTruncated", order=3),
         ops.apply_diagonal_truncated(3, x)),
        (ops.OperatorSpec("CesaroTruncated", t=0.5, order=3),
         ops.apply_cesaro_truncated(0.5, 3, x)),
    ]
    for spec, want in cases:
        np.testing.assert_array_equal(ops.apply_operator(spec, x), want)


def test_matrix_csv_export(tmp_path):
    path = tmp_path / "section.csv"
    m = ops.cesaro_matrix(0.5, 3)
    ops.matrix_to_csv(m, str(path))
    rows = [line.split(",") for line in path.read_text().strip().splitlines()]
    got = np.array([[float(v) for v in row] for row in rows])
    np.testing.assert_array_equal(got, m)
