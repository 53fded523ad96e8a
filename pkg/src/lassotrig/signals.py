"""Built-in test signals, sample vectors and their CSV format."""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path
from typing import TYPE_CHECKING, Callable

import numpy as np

from .errors import CsvParseError, GridMismatch, InvalidArgument
from .grid import EquidistantGrid, make_grid

if TYPE_CHECKING:
    from .noise import NoiseSpec

GRID_TOLERANCE = 1e-9


def f1(x):
    """Entire periodic function ``exp(sin x)``."""
    return np.exp(np.sin(x))


def f2(x):
    """FM signal ``cos(50x + 4 sin 5x)``; even about 0."""
    return np.cos(50.0 * x + 4.0 * np.sin(5.0 * x))


def f3(x):
    """Triangle wave of amplitude 2, peak at pi/2, trough at -pi/2."""
    # floor-mod into [0, 2 pi)
    return 4.0 / np.pi * np.abs(np.mod(np.asarray(x) - np.pi / 2, 2.0 * np.pi) - np.pi) - 2.0


SIGNALS: dict[str, Callable] = {"f1": f1, "f2": f2, "f3": f3}


def get_signal(signal_id: str) -> Callable:
    try:
        return SIGNALS[signal_id]
    except KeyError:
        raise InvalidArgument(
            f"signal {signal_id!r} has no closed form; choose one of {sorted(SIGNALS)}"
        ) from None


def eval_signal(signal_id: str, x):
    out = get_signal(signal_id)(np.asarray(x, dtype=float))
    return float(out) if np.ndim(out) == 0 else out


@dataclass(frozen=True)
class Provenance:
    source: str
    noise: "NoiseSpec | None" = None


@dataclass(frozen=True)
class SampleVector:
    """Function values on an equidistant grid."""

    grid: EquidistantGrid
    values: np.ndarray
    provenance: Provenance = field(default_factory=lambda: Provenance("array"))

    def __post_init__(self):
        values = np.array(self.values, dtype=float).reshape(-1)
        if values.size != self.grid.node_count:
            raise InvalidArgument(
                f"{values.size} values do not fit a grid of {self.grid.node_count} nodes"
            )
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def node_count(self) -> int:
        return self.grid.node_count

    @classmethod
    def from_values(cls, values, source: str = "array") -> "SampleVector":
        values = np.asarray(values, dtype=float).reshape(-1)
        if values.size == 0:
            raise InvalidArgument("samples must be nonempty")
        return cls(make_grid(values.size), values, Provenance(source))


def sample_function(f: Callable, N: int, source: str = "callable") -> SampleVector:
    grid = make_grid(N)
    values = np.broadcast_to(np.asarray(f(grid.nodes), dtype=float), grid.nodes.shape)
    return SampleVector(grid, values, Provenance(source))


def sample_signal(signal_id: str, N: int) -> SampleVector:
    return sample_function(get_signal(signal_id), N, source=signal_id)


def write_samples_csv(samples: SampleVector, path) -> None:
    """Two-column ``x,value`` CSV with a ``#`` metadata header, 17 significant digits."""
    prov = samples.provenance
    lines = [f"# N: {samples.node_count}", f"# signal: {prov.source}"]
    if prov.noise is not None:
        lines.append(f"# noise: {prov.noise.describe()}")
        lines.append(f"# seed: {prov.noise.seed}")
    lines.append("x,value")
    lines += [f"{x:.17g},{v:.17g}" for x, v in zip(samples.grid.nodes, samples.values)]
    Path(path).write_text("\n".join(lines) + "\n")


def read_samples_csv(path) -> SampleVector:
    """Read ``x,value`` or value-only CSV.

    Lines starting with ``#`` and a non-numeric first row (column names) are
    skipped.  With two columns, each x must match ``-pi + 2 pi j / N`` within
    1e-9, N being the row count.
    """
    rows: list[tuple[int, list[float]]] = []
    with open(path, newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or text.startswith("#"):
                continue
            fields = [s.strip() for s in next(csv.reader([text]))]
            try:
                numbers = [float(s) for s in fields]
            except ValueError:
                if not rows and all(s and not _looks_numeric(s) for s in fields):
                    continue  # column names
                raise CsvParseError(f"non-numeric field in {text!r}", lineno) from None
            if len(numbers) not in (1, 2):
                raise CsvParseError(f"expected 1 or 2 columns, got {len(numbers)}", lineno)
            if rows and len(numbers) != len(rows[0][1]):
                raise CsvParseError("inconsistent column count", lineno)
            rows.append((lineno, numbers))
    if not rows:
        raise CsvParseError("no samples found")
    N = len(rows)
    grid = make_grid(N)
    data = np.array([r[1] for r in rows])
    if data.shape[1] == 2:
        deviation = np.abs(data[:, 0] - grid.nodes)
        worst = int(np.argmax(deviation))
        if deviation[worst] > GRID_TOLERANCE:
            raise GridMismatch(
                f"x at row {worst} (line {rows[worst][0]}) is {data[worst, 0]!r}, "
                f"expected {grid.nodes[worst]!r} on the {N}-point grid",
                index=worst,
                deviation=float(deviation[worst]),
            )
        values = data[:, 1]
    else:
        values = data[:, 0]
    return SampleVector(grid, values, Provenance(str(path)))


def _looks_numeric(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True
