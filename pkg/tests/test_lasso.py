import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from lassotrig import (
    ConvergenceFailure,
    IncompatibleLayout,
    InvalidArgument,
    LassoParams,
    NoiseSpec,
    SampleVector,
    add_noise,
    coefficients,
    evaluate,
    interpolate,
    lambda_max,
    lasso_interpolate,
    objective,
    oracle_solve,
    sample_function,
    sample_signal,
    soft_threshold,
    sparsity,
)
from lassotrig.trigpoly import TrigCoefficients, TrigPolynomial, zero_polynomial

from conftest import SIGNAL_IDS

SQRT_PI, SQRT_2PI = np.sqrt(np.pi), np.sqrt(2 * np.pi)
finite = st.floats(-1e6, 1e6, allow_nan=False)


def test_soft_threshold_examples():
    assert soft_threshold(3.0, 1.0) == 2.0
    assert soft_threshold(-0.5, 1.0) == 0.0
    assert soft_threshold(0.7, 0.0) == 0.7
    assert soft_threshold(-2.0, 2.0) == 0.0
    with pytest.raises(InvalidArgument):
        soft_threshold(1.0, -0.1)


@given(a=finite, k=st.floats(0, 1e6))
def test_soft_threshold_properties(a, k):
    s = soft_threshold(a, k)
    assert abs(s) <= abs(a)
    assert s == 0.0 or np.sign(s) == np.sign(a)
    if abs(a) <= k:
        assert s == 0.0
    else:
        assert s == pytest.approx(a - np.sign(a) * k, rel=1e-12, abs=1e-9)


@given(a=st.floats(allow_nan=False, allow_infinity=False))
def test_soft_threshold_zero_is_identity(a):
    assert soft_threshold(a, 0.0) == a


def test_lasso_params_validation():
    with pytest.raises(InvalidArgument):
        LassoParams(-1.0)
    with pytest.raises(InvalidArgument):
        lasso_interpolate(sample_function(np.cos, 5), -0.1)


@pytest.mark.parametrize("sid", SIGNAL_IDS)
@pytest.mark.parametrize("N", [4, 17, 64])
def test_lambda_zero_is_classical(sid, N):
    s = add_noise(sample_signal(sid, N), NoiseSpec("snr_db", 5.0, seed=N))
    np.testing.assert_array_equal(
        lasso_interpolate(s, 0.0).coefficients.vector(), interpolate(s).coefficients.vector()
    )


def test_cos_shrinkage(cos_samples):
    c = lasso_interpolate(cos_samples, LassoParams(0.5)).coefficients
    assert c.a[1] == pytest.approx(SQRT_PI - 0.5, rel=1e-14)
    assert sparsity(c) == 1


def test_large_lambda_gives_zero(cos_samples):
    lm = lambda_max(cos_samples)
    assert sparsity(lasso_interpolate(cos_samples, lm)) == 0
    assert sparsity(lasso_interpolate(cos_samples, 10 * lm)) == 0


def test_sparsity_examples():
    assert sparsity(zero_polynomial(5)) == 0
    # exact coefficient input: interpolate(cos x) has round-off residue elsewhere
    exact = TrigPolynomial(TrigCoefficients(5, [0.0, SQRT_PI, 0.0], [0.0, 0.0]))
    assert sparsity(exact) == 1
    s = sample_function(lambda x: np.cos(x) + 0.05 * np.sin(2 * x), 7)
    c = coefficients(s)
    assert c.b[1] == pytest.approx(0.05 * SQRT_PI, rel=1e-13)
    assert sparsity(lasso_interpolate(s, 0.1)) == 1


def test_lambda_max_examples(cos_samples):
    assert lambda_max(sample_function(np.ones_like, 5)) == pytest.approx(SQRT_2PI, rel=1e-15)
    assert lambda_max(cos_samples) == pytest.approx(SQRT_PI, rel=1e-14)
    zero = sample_function(np.zeros_like, 6)
    assert lambda_max(zero) == 0.0
    assert sparsity(lasso_interpolate(zero, 1e-12)) == 0


def test_objective_examples(cos_samples):
    f1 = sample_signal("f1", 9)
    assert objective(interpolate(f1), f1, 0.0) == pytest.approx(0.0, abs=1e-25)
    zero = sample_function(np.zeros_like, 5)
    assert objective(zero_polynomial(5), zero, 3.0) == 0.0
    p = lasso_interpolate(cos_samples, 0.5)
    # residual energy equals (alpha - gamma)^2 = 0.25 by discrete orthonormality
    expected = 0.5 * 0.5**2 + 0.5 * (SQRT_PI - 0.5)
    assert objective(p, cos_samples, 0.5) == pytest.approx(expected, rel=1e-13)
    assert expected == pytest.approx(0.76123, abs=1e-5)


def test_objective_layout_mismatch(cos_samples):
    with pytest.raises(IncompatibleLayout):
        objective(zero_polynomial(6), cos_samples, 0.1)


def test_oracle_examples(cos_samples):
    s = sample_signal("f3", 12)
    np.testing.assert_allclose(
        oracle_solve(s, 0.0, tol=1e-13).vector(), coefficients(s).vector(), atol=1e-13
    )
    c = oracle_solve(cos_samples, 0.5)
    assert c.a[1] == pytest.approx(SQRT_PI - 0.5, abs=1e-10)
    noisy = add_noise(sample_signal("f1", 31), NoiseSpec("snr_db", 5.0, seed=11))
    diff = oracle_solve(noisy, 0.1).vector() - lasso_interpolate(noisy, 0.1).coefficients.vector()
    assert np.max(np.abs(diff)) < 1e-8


@pytest.mark.parametrize("step", [1.0, 0.5, 0.1])
def test_oracle_smaller_steps_converge_to_same_point(step):
    s = add_noise(sample_signal("f2", 17), NoiseSpec("sigma", 0.2, seed=3))
    c = oracle_solve(s, 0.05, max_iter=2000, tol=1e-13, step=step)
    np.testing.assert_allclose(c.vector(), lasso_interpolate(s, 0.05).coefficients.vector(), atol=1e-10)


def test_oracle_reports_non_convergence():
    s = sample_signal("f1", 9)
    with pytest.raises(ConvergenceFailure) as info:
        oracle_solve(s, 0.01, max_iter=3, tol=1e-12, step=0.1)
    assert info.value.last_iterate.node_count == 9


def test_oracle_rejects_bad_arguments(cos_samples):
    with pytest.raises(InvalidArgument):
        oracle_solve(cos_samples, 0.1, max_iter=0)
    with pytest.raises(InvalidArgument):
        oracle_solve(cos_samples, 0.1, tol=0.0)


@pytest.mark.parametrize("even_only", [False, True])
def test_even_variant_thresholds_cosines(even_only):
    s = sample_signal("f2", 41)
    p = lasso_interpolate(s, 0.2, even_only=even_only)
    assert p.coefficients.even_only == even_only
    np.testing.assert_array_equal(
        p.coefficients.a, soft_threshold(coefficients(s, even_only=even_only).a, 0.2)
    )
    np.testing.assert_allclose(
        oracle_solve(s, 0.2, even_only=even_only).vector(), p.coefficients.vector(), atol=1e-12
    )


def test_shrinkage_dominance():
    rng = np.random.default_rng(5)
    for N in (5, 8, 17, 40):
        s = SampleVector.from_values(rng.standard_normal(N))
        alpha = coefficients(s).vector()
        for lam in (0.01, 0.1, 0.5):
            gamma = lasso_interpolate(s, lam).coefficients.vector()
            assert np.all(np.abs(gamma) <= np.abs(alpha))
            assert np.all((gamma == 0) | (np.sign(gamma) == np.sign(alpha)))


def test_not_a_projection(cos_samples):
    first = lasso_interpolate(cos_samples, 0.5)
    resampled = SampleVector(cos_samples.grid, evaluate(first, cos_samples.grid.nodes))
    second = lasso_interpolate(resampled, 0.5)
    assert second.coefficients.a[1] == pytest.approx(SQRT_PI - 1.0, rel=1e-13)
    assert second.coefficients.a[1] != first.coefficients.a[1]


def test_not_interpolatory(cos_samples):
    p = lasso_interpolate(cos_samples, 0.5)
    x = cos_samples.grid.nodes
    residual = evaluate(p, x) - cos_samples.values
    np.testing.assert_allclose(np.abs(residual), 0.5 * np.abs(np.cos(x)) / SQRT_PI, atol=1e-14)
    assert np.max(np.abs(residual)) > 0


@given(seed=st.integers(0, 2**32 - 1), N=st.integers(1, 40))
def test_sparsity_monotone_in_lambda(seed, N):
    s = SampleVector.from_values(np.random.default_rng(seed).standard_normal(N))
    counts = [sparsity(lasso_interpolate(s, lam)) for lam in np.linspace(0, 2 * lambda_max(s) + 1e-9, 25)]
    assert all(a >= b for a, b in zip(counts, counts[1:]))
