"""Error estimators and the stability diagnostics for the LTI."""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from .errors import DomainError, InvalidArgument
from .interpolation import coefficients
from .lasso import soft_threshold
from .signals import sample_function
from .trigpoly import TrigCoefficients, TrigPolynomial, dense_points, eval_dense

DENSE_FACTOR = 10


def _target_values(f, points: int) -> np.ndarray:
    if callable(f):
        x = dense_points(points)
        return np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
    values = np.asarray(f, dtype=float).reshape(-1)
    if values.size != points:
        raise InvalidArgument(f"dense samples have {values.size} values, expected {points}")
    return values


def _default_points(p: TrigPolynomial, f) -> int:
    if callable(f):
        return DENSE_FACTOR * p.node_count
    return int(np.asarray(f).size)


def l2_error(f, p: TrigPolynomial, quad_points: int | None = None) -> float:
    """Trapezoidal estimate of ``||f - p||_2`` on ``quad_points`` equidistant points.

    ``f`` is a callable or values already on that dense grid.  Default is 10 N
    points.
    """
    if quad_points is None:
        quad_points = _default_points(p, f)
    if quad_points < 2 * p.degree + 2:
        raise InvalidArgument(
            f"quad_points={quad_points} cannot resolve (f - p)^2 for degree {p.degree}; "
            f"need at least {2 * p.degree + 2}"
        )
    diff = _target_values(f, quad_points) - eval_dense(p, quad_points)
    return float(np.sqrt(2.0 * np.pi / quad_points * np.sum(diff**2)))


def uniform_error(f, p: TrigPolynomial, eval_points: int | None = None) -> float:
    """Max of ``|f - p|`` over ``eval_points`` equidistant points (default 10 N)."""
    if eval_points is None:
        eval_points = _default_points(p, f)
    if eval_points < 1:
        raise InvalidArgument("eval_points must be >= 1")
    diff = _target_values(f, eval_points) - eval_dense(p, eval_points)
    return float(np.max(np.abs(diff)))


def k_functional(coeffs: TrigCoefficients, lam: float) -> float:
    """``sum_l S(c_l) c_l - S(c_l)^2`` over the stored coefficients; never negative."""
    c = coeffs.vector()
    s = soft_threshold(c, lam)
    return float(np.sum(s * c - s * s))


def stability_bound(coeffs: TrigCoefficients, lam: float, sup_f: float) -> float:
    """``sqrt(2 pi sup_f^2 - 2 K)``, an upper bound on the L2 norm of the LTI.

    ``coeffs`` are the classical interpolation coefficients of the data and
    ``sup_f`` bounds the data in absolute value.
    """
    if sup_f < 0:
        raise InvalidArgument("sup_f must be non-negative")
    radicand = 2.0 * np.pi * sup_f**2 - 2.0 * k_functional(coeffs, lam)
    if radicand < 0:
        raise DomainError(
            f"2*pi*sup_f^2 - 2K = {radicand:.3e} < 0; sup_f={sup_f} underestimates the data"
        )
    return math.sqrt(radicand)


def best_approx_proxy(f: Callable, n: int, oversample: int = 4) -> tuple[TrigPolynomial, float]:
    """Degree-n stand-in for the best uniform approximation of ``f``.

    Interpolates ``f`` on the smallest odd grid with at least
    ``oversample * (2n + 1)`` nodes and truncates to degree n.  The returned
    error, the uniform distance on a dense grid, bounds the best-approximation
    error from above (up to dense-grid resolution). It is not that error itself.
    """
    if n < 0 or oversample < 1:
        raise InvalidArgument("need n >= 0 and oversample >= 1")
    M = oversample * (2 * n + 1)
    M += 1 - M % 2
    full = coefficients(sample_function(f, M))
    proxy = TrigPolynomial(TrigCoefficients(2 * n + 1, full.a[: n + 1], full.b[:n]))
    points = max(DENSE_FACTOR * M, 1000)
    return proxy, uniform_error(f, proxy, points)
