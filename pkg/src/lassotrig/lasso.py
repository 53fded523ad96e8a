"""Lasso trigonometric interpolation (LTI).

Soft-thresholding every interpolation coefficient by ``lam`` gives the exact
minimiser of::

    1/2 * sum_j (2 pi/N) (p(x_j) - f(x_j))^2 + lam * sum |coefficients of p|

over polynomials p of degree N // 2.  This holds because the basis is
discretely orthonormal, which reduces the problem to separable scalar
problems.  :func:`oracle_solve` checks it by running proximal gradient on the
same objective.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceFailure, IncompatibleLayout, InvalidArgument
from .interpolation import coefficients
from .signals import SampleVector
from .trigpoly import TrigCoefficients, TrigPolynomial, node_basis


@dataclass(frozen=True)
class LassoParams:
    lam: float

    def __post_init__(self):
        if not np.isfinite(self.lam) or self.lam < 0:
            raise InvalidArgument(f"lambda must be a finite non-negative number, got {self.lam!r}")


def _lam(params) -> float:
    if isinstance(params, LassoParams):
        return float(params.lam)
    return LassoParams(float(params)).lam


def soft_threshold(a, k):
    """``max(0, a - k) + min(0, a + k)``; works elementwise on arrays.

    ``k = 0`` returns ``a`` unchanged, and ``|a| == k`` maps to exactly 0.
    """
    if np.any(np.asarray(k) < 0):
        raise InvalidArgument(f"threshold must be non-negative, got {k!r}")
    out = np.maximum(0.0, np.subtract(a, k)) + np.minimum(0.0, np.add(a, k))
    return float(out) if np.ndim(out) == 0 else out


def shrink(coeffs: TrigCoefficients, params) -> TrigCoefficients:
    lam = _lam(params)
    return coeffs.with_vector(soft_threshold(coeffs.vector(), lam))


def lasso_interpolate(samples: SampleVector, params, even_only: bool = False) -> TrigPolynomial:
    """LTI of ``samples`` with regularization ``params`` (LassoParams or float)."""
    return TrigPolynomial(shrink(coefficients(samples, even_only=even_only), params))


def sparsity(p) -> int:
    """Number of stored coefficients that are not exactly zero."""
    c = p.coefficients if isinstance(p, TrigPolynomial) else p
    return int(np.count_nonzero(c.vector()))


def lambda_max(samples: SampleVector, even_only: bool = False) -> float:
    """Smallest lambda at which the LTI is the zero polynomial."""
    v = coefficients(samples, even_only=even_only).vector()
    return float(np.max(np.abs(v))) if v.size else 0.0


def objective(p: TrigPolynomial, samples: SampleVector, params) -> float:
    """Regularized discrete least-squares objective, residual evaluated at the nodes."""
    lam = _lam(params)
    c = p.coefficients
    if c.node_count != samples.node_count:
        raise IncompatibleLayout(
            f"polynomial built for N={c.node_count}, samples have N={samples.node_count}"
        )
    v = c.vector()
    residual = node_basis(c.node_count, c.even_only) @ v - samples.values
    return float(0.5 * samples.grid.weight * np.sum(residual**2) + lam * np.sum(np.abs(v)))


def oracle_solve(
    samples: SampleVector,
    params,
    max_iter: int = 100,
    tol: float = 1e-12,
    step: float = 1.0,
    even_only: bool = False,
) -> TrigCoefficients:
    """Minimise the LTI objective by proximal gradient descent from zero.

    The design matrix is built from plain ``cos``/``sin`` of the grid nodes,
    independently of :func:`coefficients`.  Its weighted Gram matrix is the
    identity, so the gradient is 1-Lipschitz and any ``0 < step <= 1``
    converges; ``step = 1`` lands on the fixed point after one step.
    """
    if max_iter < 1:
        raise InvalidArgument("max_iter must be >= 1")
    if not tol > 0:
        raise InvalidArgument("tol must be positive")
    if not 0 < step <= 1:
        raise InvalidArgument("step must lie in (0, 1]")
    lam = _lam(params)
    N = samples.node_count
    design = _plain_design(samples.grid.nodes, N, even_only)
    w = samples.grid.weight
    f = samples.values
    gamma = np.zeros(design.shape[1])
    template = TrigCoefficients.zeros(N, even_only)
    for _ in range(max_iter):
        grad = w * (design.T @ (design @ gamma - f))
        z = gamma - step * grad
        new = np.maximum(0.0, z - step * lam) + np.minimum(0.0, z + step * lam)
        change = np.max(np.abs(new - gamma)) if new.size else 0.0
        gamma = new
        if change < tol:
            return template.with_vector(gamma)
    raise ConvergenceFailure(
        f"proximal gradient did not converge in {max_iter} iterations",
        last_iterate=template.with_vector(gamma),
    )


def _plain_design(x: np.ndarray, N: int, even_only: bool) -> np.ndarray:
    n = N // 2
    cols = [np.full_like(x, 1.0 / np.sqrt(2.0 * np.pi))]
    for ell in range(1, n + 1):
        scale = np.sqrt(2.0 * np.pi) if (N % 2 == 0 and ell == n) else np.sqrt(np.pi)
        cols.append(np.cos(ell * x) / scale)
    if not even_only:
        top = n if N % 2 else n - 1
        cols += [np.sin(ell * x) / np.sqrt(np.pi) for ell in range(1, top + 1)]
    return np.column_stack(cols)
