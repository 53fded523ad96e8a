"""Seeded Gaussian noise.

Draws come from numpy's Philox4x64 counter-based bit generator, converted to
normals by ``Generator.standard_normal`` (ziggurat).  Both are fixed
algorithms in numpy, so a given seed gives the same noise on every platform.
Per-task seeds come from :func:`derive_stream`, which uses SplitMix64 mixing.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import InvalidArgument
from .signals import Provenance, SampleVector

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    # SplitMix64 finaliser; a bijection on 64-bit integers
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & MASK64
    return z ^ (z >> 31)


def derive_stream(seed: int, index: int) -> int:
    """Seed for the ``index``-th independent stream under root ``seed``.

    ``mix64(mix64(seed) + (index + 1) * GOLDEN_GAMMA)`` modulo 2**64.  For a
    fixed root it is injective in ``index`` (for index below 2**64), since
    both the odd-multiplier step and the finaliser are bijections.
    """
    z = (_mix64(seed & MASK64) + (index + 1) * GOLDEN_GAMMA) & MASK64
    return _mix64(z)


def rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed & MASK64))


@dataclass(frozen=True)
class NoiseSpec:
    """Noise level as SNR in dB (``kind="snr_db"``) or standard deviation (``kind="sigma"``)."""

    kind: str
    value: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in ("snr_db", "sigma"):
            raise InvalidArgument(f"noise kind must be 'snr_db' or 'sigma', got {self.kind!r}")
        if not np.isfinite(self.value):
            raise InvalidArgument("noise value must be finite")
        if self.kind == "sigma" and self.value < 0:
            raise InvalidArgument(f"sigma must be >= 0, got {self.value}")
        if not 0 <= int(self.seed) <= MASK64:
            raise InvalidArgument("seed must be an unsigned 64-bit integer")

    def with_seed(self, seed: int) -> "NoiseSpec":
        return replace(self, seed=seed)

    def describe(self) -> str:
        return f"{self.kind}={self.value!r} seed={self.seed}"


def noise_sigma(values, spec: NoiseSpec) -> float:
    """Standard deviation implied by ``spec`` for the clean ``values``."""
    if spec.kind == "sigma":
        return float(spec.value)
    power = float(np.mean(np.square(values)))
    if power == 0.0:
        raise InvalidArgument("SNR is undefined for identically zero samples")
    return float(np.sqrt(power / 10.0 ** (spec.value / 10.0)))


def add_noise(samples: SampleVector, spec: NoiseSpec) -> SampleVector:
    """Add i.i.d. N(0, sigma^2) noise.

    For ``snr_db`` kind, ``sigma^2 = P / 10**(dB/10)`` with P the mean square of
    the clean samples.
    """
    if samples.values.size == 0:
        raise InvalidArgument("samples must be nonempty")
    sigma = noise_sigma(samples.values, spec)
    eps = rng(spec.seed).standard_normal(samples.values.size)
    noisy = samples.values + sigma * eps
    return SampleVector(samples.grid, noisy, Provenance(samples.provenance.source, spec))
