"""Trigonometric polynomials in the discretely orthonormal real basis.

Basis on an N-point grid, n = N // 2::

    1/sqrt(2 pi), cos(l x)/sqrt(pi), sin(l x)/sqrt(pi),  1 <= l <= n

with two adjustments when N is even: the top cosine ``cos(n x)`` is scaled by
``1/sqrt(2 pi)`` instead of ``1/sqrt(pi)``, and the top sine is dropped because
``sin(n x_j) = 0`` at every node.  With these conventions the N basis functions
are orthonormal under the discrete inner product ``sum_j (2 pi/N) phi(x_j) psi(x_j)``.

Relation to complex coefficients ``c_l`` of ``(1/sqrt(2 pi)) sum c_l exp(i l x)``
for real data: ``a_0 = c_0``, ``a_l = sqrt(2) Re c_l``, ``b_l = -sqrt(2) Im c_l``.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CsvParseError, IncompatibleLayout, InvalidArgument

SQRT_PI = np.sqrt(np.pi)
SQRT_2PI = np.sqrt(2.0 * np.pi)


def _frozen(values) -> np.ndarray:
    arr = np.array(values, dtype=float).reshape(-1)
    arr.setflags(write=False)
    return arr


def sine_count(node_count: int) -> int:
    n = node_count // 2
    return n if node_count % 2 else max(n - 1, 0)


@dataclass(frozen=True)
class TrigCoefficients:
    """Real coefficients of a degree ``n = N // 2`` trigonometric polynomial.

    ``a`` holds ``a_0..a_n`` and ``b`` holds ``b_1..b_m`` where ``m = n`` for odd N
    and ``m = n - 1`` for even N.  An ``even_only`` instance stores no sines.
    """

    node_count: int
    a: np.ndarray
    b: np.ndarray = field(default_factory=lambda: np.zeros(0))
    even_only: bool = False

    def __post_init__(self):
        if int(self.node_count) != self.node_count or self.node_count < 1:
            raise InvalidArgument(f"node_count must be a positive integer, got {self.node_count!r}")
        object.__setattr__(self, "node_count", int(self.node_count))
        object.__setattr__(self, "a", _frozen(self.a))
        object.__setattr__(self, "b", _frozen(self.b))
        n = self.degree
        if self.a.size != n + 1:
            raise InvalidArgument(f"expected {n + 1} cosine coefficients for N={self.node_count}, got {self.a.size}")
        expected_b = 0 if self.even_only else sine_count(self.node_count)
        if self.b.size != expected_b:
            raise InvalidArgument(f"expected {expected_b} sine coefficients for N={self.node_count}, got {self.b.size}")

    @property
    def degree(self) -> int:
        return self.node_count // 2

    @property
    def halved_top(self) -> bool:
        return self.node_count % 2 == 0

    @property
    def stored_count(self) -> int:
        return self.a.size + self.b.size

    def vector(self) -> np.ndarray:
        """Stored coefficients as one array, cosines first."""
        return np.concatenate([self.a, self.b])

    def with_vector(self, v) -> "TrigCoefficients":
        v = np.asarray(v, dtype=float)
        if v.shape != (self.stored_count,):
            raise InvalidArgument(f"expected vector of length {self.stored_count}, got shape {v.shape}")
        k = self.a.size
        return TrigCoefficients(self.node_count, v[:k], v[k:], self.even_only)

    def promote(self) -> "TrigCoefficients":
        """Full layout; an even_only instance gains zero sines."""
        if not self.even_only:
            return self
        return TrigCoefficients(self.node_count, self.a, np.zeros(sine_count(self.node_count)))

    @classmethod
    def zeros(cls, node_count: int, even_only: bool = False) -> "TrigCoefficients":
        n = node_count // 2
        m = 0 if even_only else sine_count(node_count)
        return cls(node_count, np.zeros(n + 1), np.zeros(m), even_only)


def cosine_scales(node_count: int) -> np.ndarray:
    """Normalising factor of each cosine basis function ``cos(l x)``."""
    n = node_count // 2
    scales = np.full(n + 1, 1.0 / SQRT_PI)
    scales[0] = 1.0 / SQRT_2PI
    if node_count % 2 == 0:
        scales[n] = 1.0 / SQRT_2PI
    return scales


def node_basis(node_count: int, even_only: bool = False) -> np.ndarray:
    """Basis functions sampled at the grid nodes, shape ``(N, stored_count)``.

    Angles ``l x_j`` are reduced exactly with integer arithmetic,
    ``l x_j = -l pi + 2 pi ((l j) mod N) / N``, which keeps large-degree columns
    accurate to a few ulp.
    """
    N = node_count
    n = N // 2
    j = np.arange(N)[:, None]
    ell = np.arange(n + 1)[None, :]
    sign = np.where(ell % 2 == 0, 1.0, -1.0)
    theta = 2.0 * np.pi * ((ell * j) % N) / N
    cos_part = sign * np.cos(theta) * cosine_scales(N)[None, :]
    if even_only:
        return cos_part
    m = sine_count(N)
    ell_s = np.arange(1, m + 1)[None, :]
    sign_s = np.where(ell_s % 2 == 0, 1.0, -1.0)
    theta_s = 2.0 * np.pi * ((ell_s * j) % N) / N
    sin_part = sign_s * np.sin(theta_s) / SQRT_PI
    return np.hstack([cos_part, sin_part])


@dataclass(frozen=True)
class TrigPolynomial:
    coefficients: TrigCoefficients

    @property
    def node_count(self) -> int:
        return self.coefficients.node_count

    @property
    def degree(self) -> int:
        return self.coefficients.degree

    def __call__(self, x):
        out = _evaluate(self.coefficients, np.asarray(x, dtype=float))
        return float(out) if out.ndim == 0 else out


def _evaluate(c: TrigCoefficients, x: np.ndarray) -> np.ndarray:
    # Term-by-term elementwise accumulation: every point follows the same
    # arithmetic regardless of batch size, so scalar and dense evaluation agree bitwise.
    scales = cosine_scales(c.node_count)
    out = np.full(x.shape, c.a[0] * scales[0])
    for ell in range(1, c.a.size):
        if c.a[ell] != 0.0:
            out = out + c.a[ell] * (np.cos(ell * x) * scales[ell])
    for ell in range(1, c.b.size + 1):
        if c.b[ell - 1] != 0.0:
            out = out + c.b[ell - 1] * (np.sin(ell * x) / SQRT_PI)
    return out


def evaluate(p: TrigPolynomial, x):
    """Value of ``p`` at ``x`` (scalar or array)."""
    return p(x)


def dense_points(grid_size: int) -> np.ndarray:
    if int(grid_size) != grid_size or grid_size < 1:
        raise InvalidArgument(f"grid_size must be a positive integer, got {grid_size!r}")
    return -np.pi + 2.0 * np.pi * np.arange(grid_size) / grid_size


def eval_dense(p: TrigPolynomial, grid_size: int) -> np.ndarray:
    """Evaluate on ``grid_size`` equidistant points of [-pi, pi)."""
    return _evaluate(p.coefficients, dense_points(grid_size))


def l2_norm(p: TrigPolynomial) -> float:
    """Continuous L2 norm over [-pi, pi].

    The basis is L2-orthonormal except the halved top cosine (even N), whose
    squared norm is 1/2.
    """
    c = p.coefficients
    sq = np.sum(c.a**2) + np.sum(c.b**2)
    if c.halved_top:
        sq -= 0.5 * c.a[-1] ** 2
    return float(np.sqrt(max(sq, 0.0)))


def subtract(p: TrigPolynomial, q: TrigPolynomial) -> TrigPolynomial:
    cp, cq = p.coefficients, q.coefficients
    if cp.node_count != cq.node_count:
        raise IncompatibleLayout(f"node counts differ: {cp.node_count} vs {cq.node_count}")
    if cp.even_only and cq.even_only:
        return TrigPolynomial(TrigCoefficients(cp.node_count, cp.a - cq.a, even_only=True))
    cp, cq = cp.promote(), cq.promote()
    return TrigPolynomial(TrigCoefficients(cp.node_count, cp.a - cq.a, cp.b - cq.b))


def zero_polynomial(node_count: int, even_only: bool = False) -> TrigPolynomial:
    return TrigPolynomial(TrigCoefficients.zeros(node_count, even_only))


# --- coefficient CSV --------------------------------------------------------


def write_coefficients_csv(coeffs: TrigCoefficients, path, header: dict | None = None) -> None:
    """One row per stored coefficient: ``kind,index,value`` with 17 significant digits."""
    lines = [f"# node_count: {coeffs.node_count}", f"# even_only: {str(coeffs.even_only).lower()}"]
    for key, value in (header or {}).items():
        lines.append(f"# {key}: {value}")
    lines.append("kind,index,value")
    lines += [f"cos,{ell},{v:.17g}" for ell, v in enumerate(coeffs.a)]
    lines += [f"sin,{ell},{v:.17g}" for ell, v in enumerate(coeffs.b, start=1)]
    Path(path).write_text("\n".join(lines) + "\n")


def read_coefficients_csv(path) -> TrigCoefficients:
    meta = {}
    cos_vals, sin_vals = {}, {}
    with open(path, newline="") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].partition(":")
                meta[key.strip()] = value.strip()
                continue
            if line == "kind,index,value":
                continue
            row = next(csv.reader([line]))
            if len(row) != 3 or row[0] not in ("cos", "sin"):
                raise CsvParseError(f"malformed coefficient row {line!r}", lineno)
            try:
                ell, value = int(row[1]), float(row[2])
            except ValueError as exc:
                raise CsvParseError(str(exc), lineno) from None
            (cos_vals if row[0] == "cos" else sin_vals)[ell] = value
    if "node_count" not in meta:
        raise CsvParseError("missing '# node_count:' header")
    N = int(meta["node_count"])
    even_only = meta.get("even_only", "false") == "true"
    a = [cos_vals.get(ell, 0.0) for ell in range(N // 2 + 1)]
    b = [] if even_only else [sin_vals.get(ell, 0.0) for ell in range(1, sine_count(N) + 1)]
    return TrigCoefficients(N, a, b, even_only)
