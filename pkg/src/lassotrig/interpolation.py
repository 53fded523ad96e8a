"""Classical trigonometric interpolation on an equidistant grid.

Coefficients are trapezoidal-rule approximations of the Fourier coefficients
in the orthonormal basis of :mod:`lassotrig.trigpoly`.  Because that basis is
discretely orthonormal, they are also the unique discrete least-squares fit,
and the resulting polynomial interpolates the samples.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgument
from .signals import SampleVector
from .trigpoly import SQRT_2PI, SQRT_PI, TrigCoefficients, TrigPolynomial, node_basis, sine_count


def _check(samples: SampleVector) -> None:
    if samples.values.size == 0:
        raise InvalidArgument("samples must be nonempty")


def coefficients(samples: SampleVector, method: str = "direct", even_only: bool = False) -> TrigCoefficients:
    """Real-basis interpolation coefficients ``(2 pi/N) * Phi^T f``.

    ``method="direct"`` is the O(N n) sum and defines the result; ``"fft"`` is
    an equivalent rfft-based route.
    """
    _check(samples)
    N = samples.node_count
    f = samples.values
    if method == "direct":
        v = samples.grid.weight * (node_basis(N, even_only).T @ f)
        n = N // 2
        return TrigCoefficients(N, v[: n + 1], v[n + 1 :], even_only)
    if method == "fft":
        return _fft_coefficients(samples, even_only)
    raise InvalidArgument(f"unknown method {method!r}")


def _fft_coefficients(samples: SampleVector, even_only: bool) -> TrigCoefficients:
    N = samples.node_count
    n = N // 2
    # nodes start at -pi, so exp(-i l x_j) = (-1)^l exp(-2 pi i l j / N)
    spec = np.fft.rfft(samples.values)[: n + 1]
    spec = spec * np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    w = samples.grid.weight
    a = w * spec.real / SQRT_PI
    a[0] = w * spec.real[0] / SQRT_2PI
    if N % 2 == 0:
        a[n] = w * spec.real[n] / SQRT_2PI
    if even_only:
        return TrigCoefficients(N, a, even_only=True)
    m = sine_count(N)
    b = -w * spec.imag[1 : m + 1] / SQRT_PI
    return TrigCoefficients(N, a, b)


def interpolate(samples: SampleVector, method: str = "direct") -> TrigPolynomial:
    return TrigPolynomial(coefficients(samples, method))


def even_interpolate(samples: SampleVector, method: str = "direct") -> TrigPolynomial:
    """Cosine-only interpolant for samples of an even function.

    Evenness is not checked: for any samples this is the least-squares fit in
    the cosine subspace, i.e. :func:`interpolate` with the sines dropped.
    """
    return TrigPolynomial(coefficients(samples, method, even_only=True))


def check_discrete_orthonormality(N: int, even_only: bool = False) -> float:
    """Largest entry of ``|Phi^T W Phi - I|`` for the basis on ``N`` nodes."""
    if N < 1:
        raise InvalidArgument(f"N must be >= 1, got {N}")
    phi = node_basis(N, even_only)
    gram = (2.0 * np.pi / N) * (phi.T @ phi)
    return float(np.max(np.abs(gram - np.eye(gram.shape[0]))))
