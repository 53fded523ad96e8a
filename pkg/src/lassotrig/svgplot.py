"""Minimal SVG line plots built from CSV tables written by the experiments."""

from __future__ import annotations

import math
from pathlib import Path
from xml.sax.saxutils import escape

from .experiments import read_table

COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"]
WIDTH, HEIGHT = 720, 440
LEFT, RIGHT, TOP, BOTTOM = 80, 180, 40, 60


def _ticks(lo, hi, count=5):
    if hi == lo:
        return [lo]
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def line_plot(series, path, title="", xlabel="", ylabel="", log_y=False) -> None:
    """Write ``series`` (``{label: (xs, ys)}``) as an SVG polyline chart.

    With ``log_y`` non-positive values are dropped.
    """
    cleaned = {}
    for label, (xs, ys) in series.items():
        pts = [(float(x), float(y)) for x, y in zip(xs, ys) if math.isfinite(y) and (not log_y or y > 0)]
        if pts:
            cleaned[label] = pts
    all_pts = [p for pts in cleaned.values() for p in pts] or [(0.0, 1.0)]
    tf = (lambda y: math.log10(y)) if log_y else (lambda y: y)
    xlo, xhi = min(p[0] for p in all_pts), max(p[0] for p in all_pts)
    ylo, yhi = min(tf(p[1]) for p in all_pts), max(tf(p[1]) for p in all_pts)
    if xhi == xlo:
        xlo, xhi = xlo - 1, xhi + 1
    if yhi == ylo:
        ylo, yhi = ylo - 1, yhi + 1
    pw, ph = WIDTH - LEFT - RIGHT, HEIGHT - TOP - BOTTOM

    def sx(x):
        return LEFT + (x - xlo) / (xhi - xlo) * pw

    def sy(y):
        return TOP + (1 - (tf(y) - ylo) / (yhi - ylo)) * ph

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" '
        f'viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>',
        f'<text x="{LEFT + pw / 2:.1f}" y="{TOP - 14}" text-anchor="middle" font-size="14">{escape(title)}</text>',
        f'<text x="{LEFT + pw / 2:.1f}" y="{HEIGHT - 15}" text-anchor="middle">{escape(xlabel)}</text>',
        f'<text x="18" y="{TOP + ph / 2:.1f}" text-anchor="middle" '
        f'transform="rotate(-90 18 {TOP + ph / 2:.1f})">{escape(ylabel)}</text>',
    ]
    for xt in _ticks(xlo, xhi):
        X = sx(xt)
        out.append(f'<line x1="{X:.1f}" y1="{TOP + ph}" x2="{X:.1f}" y2="{TOP + ph + 5}" stroke="black"/>')
        out.append(f'<text x="{X:.1f}" y="{TOP + ph + 18}" text-anchor="middle">{xt:.4g}</text>')
    for yt in _ticks(ylo, yhi):
        Y = TOP + (1 - (yt - ylo) / (yhi - ylo)) * ph
        label = f"1e{yt:.1f}" if log_y else f"{yt:.4g}"
        out.append(f'<line x1="{LEFT - 5}" y1="{Y:.1f}" x2="{LEFT}" y2="{Y:.1f}" stroke="black"/>')
        out.append(f'<text x="{LEFT - 8}" y="{Y + 4:.1f}" text-anchor="end">{label}</text>')
    for i, (label, pts) in enumerate(cleaned.items()):
        color = COLORS[i % len(COLORS)]
        coords = " ".join(f"{sx(x):.2f},{sy(y):.2f}" for x, y in pts)
        out.append(f'<polyline fill="none" stroke="{color}" stroke-width="1.5" points="{coords}"/>')
        ly = TOP + 16 + 18 * i
        out.append(f'<line x1="{WIDTH - RIGHT + 12}" y1="{ly}" x2="{WIDTH - RIGHT + 36}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{WIDTH - RIGHT + 42}" y="{ly + 4}">{escape(label)}</text>')
    out.append("</svg>")
    Path(path).write_text("\n".join(out) + "\n")


def plot_table(csv_path, x: str, ys, path, title="", ylabel="", log_y=False, where=None) -> None:
    """Plot columns ``ys`` against ``x`` from a CSV written by :func:`write_table`.

    ``where`` optionally filters rows, e.g. ``{"lambda": "0.1"}`` (string match).
    """
    _, columns, rows = read_table(csv_path)
    if where:
        rows = [r for r in rows if all(r[columns.index(k)] == v for k, v in where.items())]
    xi = columns.index(x)
    series = {}
    for y in ys:
        yi = columns.index(y)
        series[y] = ([float(r[xi]) for r in rows], [float(r[yi]) if r[yi] != "" else math.nan for r in rows])
    line_plot(series, path, title=title, xlabel=x, ylabel=ylabel, log_y=log_y)
