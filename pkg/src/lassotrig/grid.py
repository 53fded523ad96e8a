"""Equidistant nodes on [-pi, pi) and the periodic trapezoidal rule."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidArgument


def _nodes(n_points: int) -> np.ndarray:
    # closed form per node; cumulative addition drifts
    return -np.pi + 2.0 * np.pi * np.arange(n_points) / n_points


@dataclass(frozen=True)
class EquidistantGrid:
    """N nodes ``x_j = -pi + 2*pi*j/N`` with equal weights ``2*pi/N``.

    The right endpoint ``pi`` is excluded; periodicity identifies it with ``-pi``.
    """

    node_count: int
    nodes: np.ndarray = field(init=False, repr=False, compare=False)
    weight: float = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise InvalidArgument(f"node_count must be a positive integer, got {self.node_count!r}")
        object.__setattr__(self, "node_count", int(self.node_count))
        nodes = _nodes(self.node_count)
        nodes.setflags(write=False)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "weight", 2.0 * np.pi / self.node_count)

    def __len__(self):
        return self.node_count

    @property
    def degree(self) -> int:
        """Degree ``floor(N/2)`` of the interpolation space on this grid."""
        return self.node_count // 2


def make_grid(N: int) -> EquidistantGrid:
    return EquidistantGrid(N)


def trapezoidal(samples) -> float:
    """Periodic trapezoidal rule ``(2*pi/N) * sum_j g(x_j)``.

    ``samples`` is anything with ``.grid`` and ``.values`` (a SampleVector).
    Exact for trigonometric polynomials of degree < N.
    """
    values = np.asarray(samples.values, dtype=float)
    return float(samples.grid.weight * np.sum(values))


def trapezoidal_values(values) -> float:
    """Trapezoidal rule for raw values assumed to sit on ``make_grid(len(values))``."""
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise InvalidArgument("need at least one sample")
    return float(2.0 * np.pi / values.size * np.sum(values))
