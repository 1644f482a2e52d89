"""Scenario runners behind the CLI.

Each runner turns a parsed configuration into library calls and writes
the canonical CSV (plus an optional SVG sketch). Runners return both the
written paths and the in-memory results so they can be driven from tests
without touching the filesystem output twice.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import coins, hopfield, markov, output
from .config import ScenarioConfig, SweepGrid, build_params, build_spec
from .errors import IntegrationDiagnosticsError
from .hypercube import build_jump_operators, index_pattern, vertex_index
from .lindblad import Trajectory, density_from_pattern, evolve, mixing_time

__all__ = [
    "SimulateResult",
    "SweepResult",
    "run_simulate",
    "run_classical",
    "run_sweep",
    "run_coin_check",
    "run_hopfield",
]

DEFAULT_COIN_GRID = tuple(i / 20 for i in range(21))


def _resolve_out_dir(cfg_out: str | None, out_dir: str | None) -> str:
    target = out_dir or cfg_out or "."
    os.makedirs(target, exist_ok=True)
    return target


@dataclass
class SimulateResult:
    trajectory: Trajectory | None
    paths: list = field(default_factory=list)


@dataclass
class SweepResult:
    rows: list  # (kappa, gamma, mixing_time, diagnostics) sorted by (gamma, kappa)
    trajectories: dict  # (kappa, gamma) -> Trajectory, absent for failed points
    paths: list = field(default_factory=list)


def run_simulate(cfg: ScenarioConfig, out_dir: str | None = None, svg: bool = False) -> SimulateResult:
    """Evolve one walk scenario and write its trajectory CSV."""
    spec = build_spec(cfg)
    rho0 = density_from_pattern(cfg.initial, cfg.n)
    traj = evolve(rho0, spec, build_params(cfg), rule=cfg.equidistant_rule)

    target = _resolve_out_dir(cfg.out, out_dir)
    csv_path = os.path.join(target, "simulate.csv")
    output.write_trajectory_csv(csv_path, traj, cfg.n)
    paths = [csv_path]
    if svg:
        svg_path = os.path.join(target, "simulate.svg")
        series = {
            index_pattern(v, cfg.n): traj.populations[:, v]
            for v in range(spec.dim)
        }
        output.svg_line_plot(
            svg_path, traj.times, series,
            title=f"firing-pattern populations (kappa={cfg.kappa:g}, gamma={cfg.gamma:g})",
            x_label="t (1/gamma units)", y_label="probability",
        )
        paths.append(svg_path)
    return SimulateResult(trajectory=traj, paths=paths)


def run_classical(cfg: ScenarioConfig, out_dir: str | None = None) -> SimulateResult:
    """Continuous-time classical chain over the same jump structure."""
    spec = build_spec(cfg)
    jumps = build_jump_operators(spec, cfg.equidistant_rule)
    q = markov.rate_matrix_from_jumps(jumps, spec.dim, rate=1.0)
    pi0 = np.zeros(spec.dim)
    pi0[vertex_index(cfg.initial)] = 1.0

    steps = int(np.ceil(cfg.t_max / cfg.sample_every - 1e-12))
    times = np.array([k * cfg.sample_every for k in range(steps + 1)])
    dists = np.array([markov.ctmc_evolve(q, pi0, t) for t in times])

    target = _resolve_out_dir(cfg.out, out_dir)
    csv_path = os.path.join(target, "classical.csv")
    output.write_classical_csv(csv_path, times, dists, cfg.n)
    traj = None
    return SimulateResult(trajectory=traj, paths=[csv_path])


def _sweep_point(grid: SweepGrid, kappa: float, gamma: float):
    cfg = grid.base
    spec = build_spec(cfg)
    rho0 = density_from_pattern(cfg.initial, cfg.n)
    params = build_params(cfg, kappa=kappa, gamma=gamma)
    try:
        traj = evolve(rho0, spec, params, rule=cfg.equidistant_rule)
    except IntegrationDiagnosticsError as exc:
        # Distinct from the non-convergence sentinel 0: the point failed.
        return (kappa, gamma, -1.0, str(exc).replace(",", ";"), None)
    return (kappa, gamma, mixing_time(traj), "", traj)


def run_sweep(
    grid: SweepGrid,
    out_dir: str | None = None,
    svg: bool = False,
    parallel: bool = True,
    max_workers: int | None = None,
) -> SweepResult:
    """Mixing time per (kappa, gamma) grid point, rows sorted by (gamma, kappa).

    Points are independent single-threaded evolutions; they may be
    evaluated concurrently and the merge order never affects the output.
    """
    points = [(k, g) for g in grid.gammas for k in grid.kappas]
    if parallel and len(points) > 1:
        workers = max_workers or min(len(points), os.cpu_count() or 1)
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: _sweep_point(grid, *p), points))
    else:
        results = [_sweep_point(grid, *p) for p in points]

    results.sort(key=lambda r: (r[1], r[0]))
    rows = [(k, g, tm, diag) for k, g, tm, diag, _ in results]
    trajectories = {(k, g): traj for k, g, _, _, traj in results if traj is not None}

    target = _resolve_out_dir(grid.base.out, out_dir)
    csv_path = os.path.join(target, "sweep.csv")
    output.write_sweep_csv(csv_path, rows)
    paths = [csv_path]
    if svg:
        svg_path = os.path.join(target, "sweep.svg")
        kappas = sorted(set(grid.kappas))
        gammas = sorted(set(grid.gammas))
        lookup = {(k, g): tm for k, g, tm, _ in rows}
        cells = np.array([[lookup[(k, g)] for k in kappas] for g in gammas])
        output.svg_heatmap(
            svg_path, kappas, gammas, cells,
            title="mixing time (1/gamma units)", x_label="kappa", y_label="gamma",
        )
        paths.append(svg_path)
    return SweepResult(rows=rows, trajectories=trajectories, paths=paths)


def run_coin_check(grid_values=None, out_dir: str | None = None) -> tuple[list, list]:
    """Unitarity deviations of the neuron and biased coins over a p grid."""
    values = tuple(DEFAULT_COIN_GRID if grid_values is None else grid_values)
    rows = []
    for p in values:
        for kind, factory in (("neuron", coins.neuron_coin), ("biased", coins.biased_coin)):
            report = coins.is_unitary(factory(p))
            rows.append((p, kind, report.deviation, report.unitary))
    target = _resolve_out_dir(None, out_dir)
    csv_path = os.path.join(target, "coin_check.csv")
    output.write_coin_csv(csv_path, rows)
    return rows, [csv_path]


def run_hopfield(cfg: ScenarioConfig, out_dir: str | None = None) -> tuple[list, list]:
    """Classical retrieval baseline: one row per input pattern."""
    stored = [hopfield.parse_pattern(p) for p in cfg.stored]
    weights = hopfield.hebbian_store(stored)
    theta = hopfield.zero_thresholds(cfg.n)
    rows = []
    for text in cfg.inputs:
        state = hopfield.parse_pattern(text)
        run = hopfield.run_async(
            state, weights, theta,
            order=cfg.order, max_sweeps=cfg.max_sweeps,
            seed=cfg.seed, sense=cfg.threshold_sense,
        )
        energies = [hopfield.energy(s, weights, theta) for s in run.states]
        rows.append(
            (text, hopfield.format_pattern(run.final), run.flips, run.converged, energies)
        )
    target = _resolve_out_dir(cfg.out, out_dir)
    csv_path = os.path.join(target, "hopfield.csv")
    output.write_hopfield_csv(csv_path, rows)
    return rows, [csv_path]
