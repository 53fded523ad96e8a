"""Trigonometric interpolation and Lasso (soft-thresholded) trigonometric interpolation."""

from .analysis import best_approx_proxy, k_functional, l2_error, stability_bound, uniform_error
from .errors import (
    ConvergenceFailure,
    CsvParseError,
    DomainError,
    GridMismatch,
    IncompatibleLayout,
    InvalidArgument,
    LassoTrigError,
)
from .grid import EquidistantGrid, make_grid, trapezoidal
from .interpolation import check_discrete_orthonormality, coefficients, even_interpolate, interpolate
from .lasso import (
    LassoParams,
    lambda_max,
    lasso_interpolate,
    objective,
    oracle_solve,
    soft_threshold,
    sparsity,
)
from .noise import NoiseSpec, add_noise, derive_stream
from .signals import (
    Provenance,
    SampleVector,
    eval_signal,
    f1,
    f2,
    f3,
    read_samples_csv,
    sample_function,
    sample_signal,
    write_samples_csv,
)
from .trigpoly import (
    TrigCoefficients,
    TrigPolynomial,
    eval_dense,
    evaluate,
    l2_norm,
    read_coefficients_csv,
    subtract,
    write_coefficients_csv,
)

__version__ = "0.1.0"
