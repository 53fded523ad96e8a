"""Experiment drivers behind the CLI.

Each driver takes an :class:`ExperimentSpec`, writes CSV tables (and optional
SVG plots drawn from those tables) into ``spec.out_dir`` and returns the paths
written.  Every CSV starts with ``#`` metadata lines holding the full spec and
root seed; nothing time- or host-dependent goes into the files, so reruns are
byte-identical.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable

import numpy as np

from .analysis import DENSE_FACTOR, k_functional, l2_error, uniform_error
from .errors import InvalidArgument
from .interpolation import coefficients
from .lasso import shrink, sparsity
from .noise import NoiseSpec, add_noise, derive_stream
from .signals import SampleVector, get_signal, read_samples_csv, sample_function, write_samples_csv
from .trigpoly import TrigPolynomial, dense_points, eval_dense, write_coefficients_csv

log = logging.getLogger(__name__)

RESULT_COLUMNS = [
    "N",
    "lambda",
    "seed",
    "sparsity_classical",
    "sparsity_lasso",
    "l2_err_classical",
    "l2_err_lasso",
    "uniform_err_classical",
    "uniform_err_lasso",
]


@dataclass(frozen=True)
class ExperimentSpec:
    command: str
    n_values: tuple[int, ...]
    lambdas: tuple[float, ...] = (0.1,)
    signal: str | None = None
    input_path: str | None = None
    noise: NoiseSpec | None = None
    seed: int = 0
    repeats: int = 1
    out_dir: str = "."
    plot: bool = False
    even_only: bool = False

    def __post_init__(self):
        if (self.signal is None) == (self.input_path is None):
            raise InvalidArgument("give exactly one of a built-in signal or an input CSV")
        if self.signal is not None:
            get_signal(self.signal)
        if not self.n_values and self.input_path is None:
            raise InvalidArgument("no N values given")
        if any(int(n) != n or n < 1 for n in self.n_values):
            raise InvalidArgument(f"N values must be positive integers: {self.n_values}")
        if not self.lambdas:
            raise InvalidArgument("lambda grid is empty")
        if any(not np.isfinite(lam) or lam < 0 for lam in self.lambdas):
            raise InvalidArgument(f"lambda values must be non-negative: {self.lambdas}")
        if self.repeats < 1:
            raise InvalidArgument("repeats must be >= 1")

    def header(self) -> dict:
        d = asdict(self)
        d["noise"] = None if self.noise is None else asdict(self.noise)
        return {"spec": json.dumps(d, sort_keys=True), "root_seed": self.seed}


@dataclass
class ExperimentResult:
    rows: list[tuple] = field(default_factory=list)
    metadata: dict = field(default_factory=dict)
    columns: list[str] = field(default_factory=lambda: list(RESULT_COLUMNS))


# --- table IO ---------------------------------------------------------------


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v)).lower()
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return f"{float(v):.17g}"
    return str(v)


def write_table(path, columns, rows, metadata: dict | None = None) -> Path:
    path = Path(path)
    lines = [f"# {k}: {v}" for k, v in (metadata or {}).items()]
    lines.append(",".join(columns))
    lines += [",".join(_fmt(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return path


def read_table(path) -> tuple[dict, list[str], list[list[str]]]:
    meta, columns, rows = {}, None, []
    for line in Path(path).read_text().splitlines():
        if line.startswith("#"):
            key, _, value = line[1:].partition(":")
            meta[key.strip()] = value.strip()
        elif columns is None:
            columns = line.split(",")
        elif line:
            rows.append(line.split(","))
    return meta, columns or [], rows


# --- helpers ----------------------------------------------------------------


def task_seed(root: int, N: int, repeat: int) -> int:
    """Noise seed of sweep point (N, repeat); independent of execution order."""
    return derive_stream(derive_stream(root, N), repeat)


def _clean_function(spec: ExperimentSpec) -> Callable | None:
    return get_signal(spec.signal) if spec.signal else None


def _samples(spec: ExperimentSpec, N: int, seed: int) -> tuple[SampleVector, SampleVector]:
    """Clean and (possibly) noisy samples at N nodes."""
    if spec.input_path is not None:
        clean = read_samples_csv(spec.input_path)
        if N != clean.node_count:
            raise InvalidArgument(f"input file has N={clean.node_count}, spec asks for N={N}")
    else:
        clean = sample_function(get_signal(spec.signal), N, source=spec.signal)
    noisy = clean if spec.noise is None else add_noise(clean, spec.noise.with_seed(seed))
    return clean, noisy


def _dense_target(f, N: int):
    if f is None:
        return None
    points = DENSE_FACTOR * N
    return np.broadcast_to(np.asarray(f(dense_points(points)), dtype=float), (points,))


def _metrics(f, noisy: SampleVector, lam: float, even_only: bool, alpha=None, target=None, cache=None) -> dict:
    """Sparsity and error metrics for classical vs Lasso.

    ``alpha`` and ``target`` may be precomputed; ``cache`` (a dict shared across
    lambdas for one noise realization) keeps the lambda-independent classical errors.
    """
    if alpha is None:
        alpha = coefficients(noisy, even_only=even_only)
    gamma = shrink(alpha, lam)
    classical, lasso = TrigPolynomial(alpha), TrigPolynomial(gamma)
    out = {
        "sparsity_classical": sparsity(classical),
        "sparsity_lasso": sparsity(lasso),
        "k_functional": k_functional(alpha, lam),
        "lambda_max": float(np.max(np.abs(alpha.vector()))),
        "classical": classical,
        "lasso": lasso,
    }
    if f is None:
        out.update(l2_err_classical=None, l2_err_lasso=None, uniform_err_classical=None, uniform_err_lasso=None)
        return out
    if target is None:
        target = _dense_target(f, noisy.node_count)
    points = target.size
    cache = {} if cache is None else cache
    if not cache:
        cache.update(
            l2_err_classical=l2_error(target, classical, points),
            uniform_err_classical=uniform_error(target, classical, points),
        )
    out.update(cache)
    out.update(
        l2_err_lasso=l2_error(target, lasso, points),
        uniform_err_lasso=uniform_error(target, lasso, points),
    )
    return out


def _result_row(N, lam, seed, m) -> tuple:
    return (N, lam, seed) + tuple(m[c] for c in RESULT_COLUMNS[3:])


def _prepare(spec: ExperimentSpec) -> Path:
    out = Path(spec.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _n_values(spec: ExperimentSpec) -> tuple[int, ...]:
    if spec.n_values:
        return spec.n_values
    return (read_samples_csv(spec.input_path).node_count,)


# --- commands ---------------------------------------------------------------


def cmd_recover(spec: ExperimentSpec) -> list[Path]:
    """Single-N reconstruction: dense curves, coefficients and a summary row."""
    ns = _n_values(spec)
    if len(ns) != 1 or len(spec.lambdas) != 1:
        raise InvalidArgument("recover takes exactly one N and one lambda")
    out = _prepare(spec)
    N, lam = ns[0], spec.lambdas[0]
    f = _clean_function(spec)
    seed = task_seed(spec.seed, N, 0)
    _, noisy = _samples(spec, N, seed)
    m = _metrics(f, noisy, lam, spec.even_only)
    meta = spec.header()
    if lam >= m["lambda_max"]:
        meta["warning"] = f"lambda={lam!r} >= lambda_max={m['lambda_max']!r}; lasso polynomial is zero"
        log.warning(meta["warning"])
    meta["noise_seed"] = seed if spec.noise is not None else ""

    points = DENSE_FACTOR * N
    x = dense_points(points)
    classical = eval_dense(m["classical"], points)
    lasso = eval_dense(m["lasso"], points)
    if f is not None:
        clean = np.broadcast_to(np.asarray(f(x), dtype=float), x.shape)
        dense_cols = ["x", "f_clean", "interp_classical", "interp_lasso"]
        dense_rows = list(zip(x, clean, classical, lasso))
    else:
        dense_cols = ["x", "interp_classical", "interp_lasso"]
        dense_rows = list(zip(x, classical, lasso))
    paths = [
        write_table(out / "recover_dense.csv", dense_cols, dense_rows, meta),
        write_table(
            out / "recover_summary.csv",
            RESULT_COLUMNS + ["k_functional", "lambda_max"],
            [_result_row(N, lam, seed if spec.noise else "", m) + (m["k_functional"], m["lambda_max"])],
            meta,
        ),
    ]
    samples_path = out / "recover_samples.csv"
    write_samples_csv(noisy, samples_path)
    coef_c, coef_l = out / "coefficients_classical.csv", out / "coefficients_lasso.csv"
    write_coefficients_csv(m["classical"].coefficients, coef_c, meta)
    write_coefficients_csv(m["lasso"].coefficients, coef_l, meta)
    paths += [samples_path, coef_c, coef_l]
    if spec.plot:
        from .svgplot import plot_table

        svg = out / "recover.svg"
        plot_table(paths[0], "x", dense_cols[1:], svg, title=f"{spec.signal or spec.input_path}, N={N}, lambda={lam:g}")
        paths.append(svg)
    return paths


SPARSITY_COLUMNS = [
    "N",
    "lambda",
    "seed",
    "stored_full",
    "stored_even",
    "clean_classical",
    "clean_lasso",
    "clean_classical_even",
    "clean_lasso_even",
    "noisy_classical",
    "noisy_lasso",
    "noisy_classical_even",
    "noisy_lasso_even",
]


def sparsity_rows(f: Callable, n_values, lam: float, noise: NoiseSpec | None, root_seed: int) -> list[tuple]:
    """Nonzero-coefficient counts, classical vs lasso, for each N."""
    rows = []
    for N in n_values:
        clean = sample_function(f, N)
        seed = task_seed(root_seed, N, 0)
        row = [N, lam, seed if noise else "", N, N // 2 + 1]
        variants = [clean]
        if noise and noise.kind == "snr_db" and not np.any(clean.values):
            log.warning("N=%d: samples are identically zero, SNR undefined; noisy columns left empty", N)
        elif noise:
            variants.append(add_noise(clean, noise.with_seed(seed)))
        for s in variants:
            for even in (False, True):
                alpha = coefficients(s, even_only=even)
                row += [sparsity(alpha), sparsity(shrink(alpha, lam))]
        if len(variants) == 1:
            row += [""] * 4
        rows.append(tuple(row))
    return rows


def cmd_sparsity_sweep(spec: ExperimentSpec) -> list[Path]:
    if spec.signal is None:
        raise InvalidArgument("sparsity-sweep needs a built-in --signal")
    if len(spec.lambdas) != 1:
        raise InvalidArgument("sparsity-sweep takes one lambda")
    out = _prepare(spec)
    rows = sparsity_rows(get_signal(spec.signal), spec.n_values, spec.lambdas[0], spec.noise, spec.seed)
    paths = [write_table(out / "sparsity_sweep.csv", SPARSITY_COLUMNS, rows, spec.header())]
    if spec.plot:
        from .svgplot import plot_table

        ys = ["clean_classical", "clean_lasso"] + (["noisy_classical", "noisy_lasso"] if spec.noise else [])
        svg = out / "sparsity_sweep.svg"
        plot_table(paths[0], "N", ys, svg, title=f"nonzero coefficients, {spec.signal}", ylabel="count")
        paths.append(svg)
    return paths


def error_rows(spec: ExperimentSpec) -> list[tuple]:
    """One row per (N, lambda, repeat), sorted by (N, lambda, repeat)."""
    f = _clean_function(spec)
    rows = []
    for N in _n_values(spec):
        target = _dense_target(f, N)
        for r in range(spec.repeats):
            seed = task_seed(spec.seed, N, r)
            _, noisy = _samples(spec, N, seed)
            alpha = coefficients(noisy, even_only=spec.even_only)
            cache: dict = {}
            for lam in spec.lambdas:
                m = _metrics(f, noisy, lam, spec.even_only, alpha, target, cache)
                rows.append((_result_row(N, lam, seed, m), r))
    rows.sort(key=lambda t: (t[0][0], t[0][1], t[1]))
    return [row for row, _ in rows]


def mean_rows(rows) -> list[tuple]:
    groups: dict[tuple, list] = {}
    for row in rows:
        groups.setdefault((row[0], row[1]), []).append(row)
    out = []
    for (N, lam), grp in sorted(groups.items()):
        arr = np.array([[float(v) for v in g[3:]] for g in grp])
        out.append((N, lam, len(grp)) + tuple(arr.mean(axis=0)))
    return out


def cmd_error_sweep(spec: ExperimentSpec) -> list[Path]:
    if spec.signal is None:
        raise InvalidArgument("error-sweep needs a built-in --signal")
    if spec.noise is None:
        raise InvalidArgument("error-sweep needs noise (--snr-db or --sigma)")
    out = _prepare(spec)
    rows = error_rows(spec)
    means = mean_rows(rows)
    meta = spec.header()
    mean_cols = ["N", "lambda", "repeats"] + RESULT_COLUMNS[3:]
    paths = [
        write_table(out / "error_sweep_rows.csv", RESULT_COLUMNS, rows, meta),
        write_table(out / "error_sweep_mean.csv", mean_cols, means, meta),
    ]
    # lambda with the smallest L2 error averaged over all N and repeats
    by_lam: dict[float, list[float]] = {}
    for row in means:
        by_lam.setdefault(row[1], []).append(row[mean_cols.index("l2_err_lasso")])
    best = [(lam, float(np.mean(v))) for lam, v in sorted(by_lam.items())]
    best_lam = min(best, key=lambda t: t[1])[0]
    paths.append(
        write_table(
            out / "error_sweep_lambda.csv",
            ["lambda", "mean_l2_err_lasso", "best"],
            [(lam, err, lam == best_lam) for lam, err in best],
            meta,
        )
    )
    if spec.plot:
        from .svgplot import plot_table

        svg = out / "error_sweep.svg"
        plot_table(
            paths[1],
            "N",
            ["l2_err_classical", "l2_err_lasso", "uniform_err_classical", "uniform_err_lasso"],
            svg,
            title=f"errors, {spec.signal}, lambda={best_lam:g}",
            log_y=True,
            where={"lambda": _fmt(best_lam)},
        )
        paths.append(svg)
    return paths


LAMBDA_COLUMNS = [
    "N",
    "lambda",
    "seed",
    "sparsity",
    "l2_err",
    "uniform_err",
    "k_functional",
    "lambda_max",
]


def cmd_lambda_sweep(spec: ExperimentSpec) -> list[Path]:
    ns = _n_values(spec)
    if len(ns) != 1:
        raise InvalidArgument("lambda-sweep takes exactly one N")
    out = _prepare(spec)
    N = ns[0]
    f = _clean_function(spec)
    target = _dense_target(f, N)
    rows = []
    for r in range(spec.repeats):
        seed = task_seed(spec.seed, N, r)
        _, noisy = _samples(spec, N, seed)
        alpha = coefficients(noisy, even_only=spec.even_only)
        cache: dict = {}
        for lam in sorted(spec.lambdas):
            m = _metrics(f, noisy, lam, spec.even_only, alpha, target, cache)
            rows.append(
                (N, lam, seed if spec.noise else "", m["sparsity_lasso"], m["l2_err_lasso"],
                 m["uniform_err_lasso"], m["k_functional"], m["lambda_max"])
            )
    paths = [write_table(out / "lambda_sweep.csv", LAMBDA_COLUMNS, rows, spec.header())]
    if spec.plot and f is not None:
        from .svgplot import plot_table

        svg = out / "lambda_sweep.svg"
        plot_table(paths[0], "lambda", ["l2_err", "uniform_err"], svg, title=f"{spec.signal}, N={N}", log_y=True)
        paths.append(svg)
    return paths


COMMANDS = {
    "recover": cmd_recover,
    "sparsity-sweep": cmd_sparsity_sweep,
    "error-sweep": cmd_error_sweep,
    "lambda-sweep": cmd_lambda_sweep,
}


def run(spec: ExperimentSpec) -> list[Path]:
    return COMMANDS[spec.command](spec)
