"""CSV and SVG emission.

CSV is the canonical output: UTF-8, comma separators, LF line endings,
reals at 12 significant digits. The SVG plots are best-effort sketches
written directly, with no plotting dependency.
"""

from __future__ import annotations

import numpy as np

from .hypercube import index_pattern
from .lindblad import Trajectory

__all__ = [
    "fmt_real",
    "write_trajectory_csv",
    "write_classical_csv",
    "write_sweep_csv",
    "write_coin_csv",
    "write_hopfield_csv",
    "svg_line_plot",
    "svg_heatmap",
]


def fmt_real(x: float) -> str:
    """12 significant digits, no exponent padding."""
    return format(float(x), ".12g")


def _write_lines(path: str, lines) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for line in lines:
            fh.write(line)
            fh.write("\n")


def write_trajectory_csv(path: str, traj: Trajectory, n: int) -> None:
    """Header ``t,pattern_<bits>...,trace_drift,min_eig,purity``."""
    dim = traj.populations.shape[1]
    header = (
        "t,"
        + ",".join(f"pattern_{index_pattern(v, n)}" for v in range(dim))
        + ",trace_drift,min_eig,purity"
    )
    lines = [header]
    for k in range(traj.times.size):
        cells = [fmt_real(traj.times[k])]
        cells.extend(fmt_real(p) for p in traj.populations[k])
        cells.append(fmt_real(traj.trace_drift[k]))
        cells.append(fmt_real(traj.min_eigenvalue[k]))
        cells.append(fmt_real(traj.purity[k]))
        lines.append(",".join(cells))
    _write_lines(path, lines)


def write_classical_csv(path: str, times, distributions, n: int) -> None:
    dim = np.asarray(distributions).shape[1]
    header = "t," + ",".join(f"pattern_{index_pattern(v, n)}" for v in range(dim))
    lines = [header]
    for t, dist in zip(times, distributions):
        lines.append(",".join([fmt_real(t)] + [fmt_real(p) for p in dist]))
    _write_lines(path, lines)


def write_sweep_csv(path: str, rows) -> None:
    """Rows of (kappa, gamma, mixing_time, diagnostics), pre-sorted."""
    lines = ["kappa,gamma,mixing_time,diagnostics"]
    for kappa, gamma, t_mix, diag in rows:
        lines.append(f"{fmt_real(kappa)},{fmt_real(gamma)},{fmt_real(t_mix)},{diag}")
    _write_lines(path, lines)


def write_coin_csv(path: str, rows) -> None:
    lines = ["p,kind,deviation,unitary"]
    for p, kind, deviation, unitary in rows:
        flag = "true" if unitary else "false"
        lines.append(f"{fmt_real(p)},{kind},{fmt_real(deviation)},{flag}")
    _write_lines(path, lines)


def write_hopfield_csv(path: str, rows) -> None:
    lines = ["input,output,steps,converged,energy_trace"]
    for inp, out, steps, converged, energies in rows:
        trace = ";".join(fmt_real(e) for e in energies)
        flag = "true" if converged else "false"
        lines.append(f"{inp},{out},{steps},{flag},{trace}")
    _write_lines(path, lines)


# ---------------------------------------------------------------------------
# SVG sketches

_PALETTE = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#ffbb78",
    "#98df8a", "#ff9896", "#c5b0d5", "#c49c94",
]

_W, _H = 820, 520
_ML, _MR, _MT, _MB = 70, 150, 40, 55


def _ticks(lo: float, hi: float, count: int = 5):
    if hi <= lo:
        hi = lo + 1.0
    return [lo + (hi - lo) * i / (count - 1) for i in range(count)]


def svg_line_plot(path: str, x, series: dict, title: str, x_label: str, y_label: str) -> None:
    """One polyline per labeled series over a shared x axis."""
    x = np.asarray(x, dtype=float)
    y_min = min(float(np.min(v)) for v in series.values())
    y_max = max(float(np.max(v)) for v in series.values())
    if y_max - y_min < 1e-12:
        y_max = y_min + 1.0
    x_min, x_max = float(x[0]), float(x[-1])

    def sx(v):
        return _ML + (v - x_min) / (x_max - x_min) * (_W - _ML - _MR)

    def sy(v):
        return _H - _MB - (v - y_min) / (y_max - y_min) * (_H - _MT - _MB)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="22" text-anchor="middle" font-size="16">{title}</text>',
        f'<line x1="{_ML}" y1="{_H - _MB}" x2="{_W - _MR}" y2="{_H - _MB}" stroke="black"/>',
        f'<line x1="{_ML}" y1="{_MT}" x2="{_ML}" y2="{_H - _MB}" stroke="black"/>',
        f'<text x="{(_W - _MR + _ML) / 2:.1f}" y="{_H - 12}" text-anchor="middle" '
        f'font-size="13">{x_label}</text>',
        f'<text x="18" y="{(_H - _MB + _MT) / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {(_H - _MB + _MT) / 2:.1f})">{y_label}</text>',
    ]
    for tick in _ticks(x_min, x_max):
        parts.append(
            f'<text x="{sx(tick):.1f}" y="{_H - _MB + 18}" text-anchor="middle" '
            f'font-size="11">{tick:.3g}</text>'
        )
    for tick in _ticks(y_min, y_max):
        parts.append(
            f'<text x="{_ML - 8}" y="{sy(tick) + 4:.1f}" text-anchor="end" '
            f'font-size="11">{tick:.3g}</text>'
        )
        parts.append(
            f'<line x1="{_ML}" y1="{sy(tick):.1f}" x2="{_W - _MR}" y2="{sy(tick):.1f}" '
            f'stroke="#dddddd"/>'
        )
    for idx, (label, values) in enumerate(series.items()):
        color = _PALETTE[idx % len(_PALETTE)]
        points = " ".join(
            f"{sx(float(xv)):.2f},{sy(float(yv)):.2f}" for xv, yv in zip(x, values)
        )
        parts.append(
            f'<polyline points="{points}" fill="none" stroke="{color}" stroke-width="1.5"/>'
        )
        if len(series) <= len(_PALETTE):
            ly = _MT + 16 * idx
            parts.append(
                f'<line x1="{_W - _MR + 10}" y1="{ly}" x2="{_W - _MR + 34}" y2="{ly}" '
                f'stroke="{color}" stroke-width="2"/>'
            )
            parts.append(
                f'<text x="{_W - _MR + 40}" y="{ly + 4}" font-size="12">{label}</text>'
            )
    parts.append("</svg>")
    _write_lines(path, parts)


def _heat_color(fraction: float) -> str:
    """Dark blue to yellow ramp."""
    f = min(max(fraction, 0.0), 1.0)
    r = int(round(253 * f * f + 20 * (1 - f)))
    g = int(round(231 * f + 40 * (1 - f)))
    b = int(round(37 * f + 120 * (1 - f)))
    return f"#{r:02x}{g:02x}{b:02x}"


def svg_heatmap(path: str, x_values, y_values, grid, title: str, x_label: str, y_label: str) -> None:
    """Colored cell per (x, y) grid point; -1 cells are drawn dark red."""
    grid = np.asarray(grid, dtype=float)
    ny, nx = grid.shape
    cell_w = (_W - _ML - _MR) / nx
    cell_h = (_H - _MT - _MB) / ny
    finite = grid[grid >= 0]
    top = float(np.max(finite)) if finite.size else 1.0
    top = top if top > 0 else 1.0

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'viewBox="0 0 {_W} {_H}">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2:.1f}" y="22" text-anchor="middle" font-size="16">{title}</text>',
        f'<text x="{(_W - _MR + _ML) / 2:.1f}" y="{_H - 10}" text-anchor="middle" '
        f'font-size="13">{x_label}</text>',
        f'<text x="18" y="{(_H - _MB + _MT) / 2:.1f}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 18 {(_H - _MB + _MT) / 2:.1f})">{y_label}</text>',
    ]
    for iy in range(ny):
        for ix in range(nx):
            value = grid[iy, ix]
            color = "#7f0000" if value < 0 else _heat_color(value / top)
            x0 = _ML + ix * cell_w
            y0 = _H - _MB - (iy + 1) * cell_h
            parts.append(
                f'<rect x="{x0:.1f}" y="{y0:.1f}" width="{cell_w:.1f}" '
                f'height="{cell_h:.1f}" fill="{color}" stroke="white"/>'
            )
            label = "x" if value < 0 else f"{value:.3g}"
            parts.append(
                f'<text x="{x0 + cell_w / 2:.1f}" y="{y0 + cell_h / 2 + 4:.1f}" '
                f'text-anchor="middle" font-size="11" fill="#202020">{label}</text>'
            )
    for ix, xv in enumerate(x_values):
        parts.append(
            f'<text x="{_ML + (ix + 0.5) * cell_w:.1f}" y="{_H - _MB + 18}" '
            f'text-anchor="middle" font-size="11">{xv:.3g}</text>'
        )
    for iy, yv in enumerate(y_values):
        parts.append(
            f'<text x="{_ML - 8}" y="{_H - _MB - (iy + 0.5) * cell_h + 4:.1f}" '
            f'text-anchor="end" font-size="11">{yv:.3g}</text>'
        )
    parts.append("</svg>")
    _write_lines(path, parts)
