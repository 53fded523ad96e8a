import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays
from scipy.integrate import quad

from lassotrig import (
    DomainError,
    InvalidArgument,
    NoiseSpec,
    SampleVector,
    TrigCoefficients,
    TrigPolynomial,
    add_noise,
    best_approx_proxy,
    coefficients,
    evaluate,
    interpolate,
    k_functional,
    l2_error,
    l2_norm,
    lasso_interpolate,
    sample_function,
    sample_signal,
    stability_bound,
    subtract,
    uniform_error,
)
from lassotrig.signals import SIGNALS
from lassotrig.trigpoly import zero_polynomial

from conftest import SIGNAL_IDS, brute_eval

SQRT_PI, SQRT_2PI = np.sqrt(np.pi), np.sqrt(2 * np.pi)
DENSE = np.linspace(-np.pi, np.pi, 20001)


def sup(sid):
    return float(np.max(np.abs(SIGNALS[sid](DENSE))))


def test_l2_error_examples():
    p = interpolate(sample_signal("f2", 21))
    assert l2_error(p, p) < 1e-12
    assert l2_error(np.cos, zero_polynomial(5)) == pytest.approx(SQRT_PI, abs=1e-10)
    q = interpolate(sample_signal("f1", 41))
    err = l2_error(SIGNALS["f1"], q)
    oracle = np.sqrt(quad(lambda x: (np.exp(np.sin(x)) - evaluate(q, x)) ** 2, -np.pi, np.pi, limit=200)[0])
    assert err < 1e-10 and oracle < 1e-10


def test_l2_error_matches_quadrature_oracle():
    q = interpolate(sample_signal("f3", 21))
    oracle = np.sqrt(quad(lambda x: (SIGNALS["f3"](x) - evaluate(q, x)) ** 2, -np.pi, np.pi,
                          points=[-np.pi / 2, np.pi / 2], limit=400, epsabs=1e-13)[0])
    assert l2_error(SIGNALS["f3"], q, 20_000) == pytest.approx(oracle, rel=1e-4)


def test_l2_error_needs_enough_points():
    with pytest.raises(InvalidArgument):
        l2_error(np.cos, zero_polynomial(21), 21)


def test_uniform_error_examples():
    p = interpolate(sample_signal("f1", 15))
    assert uniform_error(p, p) < 1e-12
    assert uniform_error(np.cos, zero_polynomial(5), 4) == pytest.approx(1.0, abs=1e-12)
    q = interpolate(sample_signal("f3", 501))
    x = -np.pi + 2 * np.pi * np.arange(10_000) / 10_000
    oracle = np.max(np.abs(SIGNALS["f3"](x) - brute_eval(q.coefficients, x)))
    got = uniform_error(SIGNALS["f3"], q, 10_000)
    assert got == pytest.approx(oracle, abs=1e-12)
    assert got == pytest.approx(0.0035997069124811, rel=1e-6)  # recorded run value


def test_k_functional_examples():
    c = TrigCoefficients(5, [0.3, -2.0, 1.0], [0.5, -0.1])
    assert k_functional(c, 0.0) == 0.0
    assert k_functional(c, 2.0) == 0.0
    single = TrigCoefficients(1, [2.0])
    assert k_functional(single, 1.0) == 1.0


@given(v=arrays(np.float64, 11, elements=st.floats(-1e3, 1e3)), lam=st.floats(0, 1e3))
def test_k_functional_nonnegative(v, lam):
    assert k_functional(TrigCoefficients.zeros(11).with_vector(v), lam) >= 0.0


def test_stability_bound_examples(cos_samples):
    alpha = coefficients(cos_samples)
    assert stability_bound(alpha, 0.0, 1.0) == pytest.approx(SQRT_2PI, rel=1e-15)
    K = 0.5 * (SQRT_PI - 0.5)
    assert k_functional(alpha, 0.5) == pytest.approx(K, rel=1e-13)
    assert stability_bound(alpha, 0.5, 1.0) == pytest.approx(np.sqrt(2 * np.pi - 2 * K), rel=1e-13)
    assert stability_bound(alpha, 10.0, 1.0) == pytest.approx(SQRT_2PI, rel=1e-15)


def test_stability_bound_domain_error():
    c = TrigCoefficients(1, [100.0])
    with pytest.raises(DomainError):
        stability_bound(c, 1.0, 0.1)


def test_best_approx_proxy_examples():
    p, e = best_approx_proxy(lambda x: 1 + np.cos(2 * x) - 0.5 * np.sin(3 * x), 3)
    assert e < 1e-12 and p.node_count == 7
    p, e = best_approx_proxy(np.ones_like, 0)
    assert e < 1e-14
    assert evaluate(p, 0.3) == pytest.approx(1.0, abs=1e-15)


def test_best_approx_proxy_decreases_for_f1():
    errors = [best_approx_proxy(SIGNALS["f1"], n)[1] for n in (5, 10, 15, 20)]
    # decays like 2^-n / n! until it reaches float round-off near n = 15
    assert errors[0] > errors[1] > errors[2]
    assert errors[1] < 1e-10 and max(errors[2:]) < 1e-14


def test_best_approx_proxy_is_upper_bound_of_sorts():
    # no degree-n polynomial beats E_n by definition; the proxy may not be below the interpolant's error by much
    for n in (3, 6):
        _, e = best_approx_proxy(SIGNALS["f1"], n)
        interp_err = uniform_error(SIGNALS["f1"], interpolate(sample_signal("f1", 2 * n + 1)))
        assert e <= interp_err


@pytest.mark.parametrize("sid", SIGNAL_IDS)
@pytest.mark.parametrize("N", [5, 8, 17, 64])
@pytest.mark.parametrize("lam", [0.0, 0.01, 0.1, 1.0])
def test_lasso_stability(sid, N, lam):
    s = sample_signal(sid, N)
    alpha = coefficients(s)
    bound = stability_bound(alpha, lam, sup(sid))
    assert l2_norm(lasso_interpolate(s, lam)) <= bound + 1e-9


def test_monotone_convergence_f1():
    errs = [l2_error(SIGNALS["f1"], interpolate(sample_signal("f1", N))) for N in (5, 9, 17, 33)]
    assert all(a >= b for a, b in zip(errs, errs[1:]))
    assert errs[-1] < 1e-8


@pytest.mark.parametrize("sid", SIGNAL_IDS)
@pytest.mark.parametrize("N", [31, 101])
@pytest.mark.parametrize("lam", [0.01, 0.1, 0.5])
def test_noisy_error_bound(sid, N, lam):
    f = SIGNALS[sid]
    clean = sample_signal(sid, N)
    noisy = add_noise(clean, NoiseSpec("snr_db", 5.0, seed=N))
    n = N // 2
    proxy, proxy_e = best_approx_proxy(f, n)
    proxy_samples = sample_function(proxy, N)
    reg_err = l2_norm(subtract(interpolate(proxy_samples), lasso_interpolate(proxy_samples, lam)))
    lhs = l2_error(f, lasso_interpolate(noisy, lam))
    noise_sup = np.max(np.abs(noisy.values - clean.values))
    rhs = SQRT_2PI * noise_sup + 2 * SQRT_2PI * proxy_e + reg_err
    assert lhs <= rhs + 1e-6
