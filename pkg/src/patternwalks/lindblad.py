"""Master-equation evolution of the walk's density matrix.

The generator combines a coherent commutator term (strength kappa) with a
dissipator built from the hypercube's directed jump operators (strength
gamma):

    drho/dt = -i kappa [H, rho]
              - gamma sum_k (1/2 L_k^dag L_k rho + 1/2 rho L_k^dag L_k - L_k rho L_k^dag)

All times are expressed in 1/gamma units: for gamma > 0 the equation is
integrated in the rescaled time tau = gamma t, where the dissipator has
unit strength and the commutator carries kappa/gamma. For gamma = 0 the
plain coherent equation is integrated and times are unscaled.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import (
    DEFAULT_DT,
    DEFAULT_SAMPLE_EVERY,
    DEFAULT_T_MAX,
    EIGENVALUE_ABORT,
    HERMITICITY_TOL,
    MAX_DT,
    MIXING_EPS,
    POPULATION_DUST,
    POSITIVITY_FLOOR,
    SINK_THRESHOLD,
    TRACE_ABORT,
    TRACE_TOL,
)
from .errors import (
    ConfigurationError,
    ContractViolationError,
    IntegrationDiagnosticsError,
)
from .hypercube import HypercubeSpec, STRICT, build_hamiltonian, build_jump_operators
from .numerics import hermiticity_residual, rk4_step

__all__ = [
    "WalkParams",
    "Trajectory",
    "basis_density",
    "density_from_pattern",
    "validate_density",
    "populations",
    "purity",
    "lindblad_rhs",
    "evolve",
    "mixing_time",
]


@dataclass(frozen=True)
class WalkParams:
    """Strengths and integration horizon of one walk run.

    kappa weighs the coherent commutator, gamma the dissipator; they may
    not both vanish. Times (t_max, dt, sample_every) are in 1/gamma units.
    """

    kappa: float
    gamma: float
    t_max: float = DEFAULT_T_MAX
    dt: float = DEFAULT_DT
    sample_every: float = DEFAULT_SAMPLE_EVERY

    def __post_init__(self):
        if self.kappa < 0 or self.gamma < 0:
            raise ConfigurationError("kappa and gamma must be >= 0")
        if self.kappa == 0 and self.gamma == 0:
            raise ConfigurationError("kappa and gamma may not both be zero")
        if not self.t_max > 0:
            raise ConfigurationError("t_max must be positive")
        if not 0 < self.dt <= MAX_DT:
            raise ConfigurationError(f"dt must lie in (0, {MAX_DT}]")
        if not self.sample_every >= self.dt:
            raise ConfigurationError("sample_every must be at least dt")


@dataclass
class Trajectory:
    """Sampled populations and per-sample health diagnostics of one run."""

    times: np.ndarray
    populations: np.ndarray  # (samples, dim)
    trace_drift: np.ndarray
    min_eigenvalue: np.ndarray
    purity: np.ndarray
    hermiticity: np.ndarray
    sink_indices: tuple[int, ...]
    params: WalkParams

    def sink_population(self) -> np.ndarray:
        """Total population sitting in the sinks at each sample."""
        return self.populations[:, list(self.sink_indices)].sum(axis=1)


def basis_density(v: int, dim: int) -> np.ndarray:
    """Pure density matrix |v><v|."""
    if not 0 <= v < dim:
        raise ConfigurationError(f"basis index {v} out of range for dimension {dim}")
    rho = np.zeros((dim, dim), dtype=np.complex128)
    rho[v, v] = 1.0
    return rho


def density_from_pattern(pattern: str, n: int) -> np.ndarray:
    """Pure density matrix sitting on one firing pattern."""
    from .hypercube import vertex_index

    if len(pattern) != n:
        raise ConfigurationError(f"pattern {pattern!r} does not have length {n}")
    return basis_density(vertex_index(pattern), 1 << n)


def validate_density(rho, trace_tol: float = TRACE_TOL) -> np.ndarray:
    """Check Hermiticity, unit trace and positivity of a density matrix."""
    m = np.asarray(rho, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ConfigurationError(f"density matrix must be square, got {m.shape}")
    residual = hermiticity_residual(m)
    if residual > HERMITICITY_TOL:
        raise ContractViolationError(
            f"density matrix not Hermitian: residual {residual:.3g}"
        )
    drift = abs(float(np.trace(m).real) - 1.0)
    if drift > trace_tol:
        raise ContractViolationError(f"density matrix trace drifts by {drift:.3g}")
    smallest = float(np.min(np.linalg.eigvalsh(0.5 * (m + m.conj().T))))
    if smallest < POSITIVITY_FLOOR:
        raise ContractViolationError(
            f"density matrix has eigenvalue {smallest:.3g} below the floor"
        )
    return m


def populations(rho) -> np.ndarray:
    """Diagonal of the density matrix as a clean probability vector.

    Negative numerical dust (magnitude below 1e-12) is clamped away and
    the vector renormalized; on a valid state the adjustment is < 1e-9.
    """
    m = np.asarray(rho, dtype=np.complex128)
    p = np.real(np.diag(m)).copy()
    p[np.abs(p) < POPULATION_DUST] = 0.0
    p = np.clip(p, 0.0, None)
    total = float(p.sum())
    if total <= 0:
        raise ContractViolationError("density matrix has no population")
    return p / total


def purity(rho) -> float:
    """trace(rho^2); 1 for pure states, 1/dim for the maximally mixed one."""
    m = np.asarray(rho, dtype=np.complex128)
    return float(np.real(np.vdot(m, m)))


def _jump_arrays(jumps, dim: int):
    """Gain matrix and anticommutator weights of a basis-transition jump set."""
    gain = np.zeros((dim, dim))
    out_count = np.zeros(dim)
    for op in jumps:
        if not (0 <= op.src < dim and 0 <= op.dst < dim):
            raise ConfigurationError(f"jump {op} outside dimension {dim}")
        gain[op.dst, op.src] += 1.0
        out_count[op.src] += 1.0
    half_decay = 0.5 * (out_count[:, None] + out_count[None, :])
    return gain, half_decay


def _rhs(rho, h, gain, half_decay, kappa, gamma):
    if kappa != 0.0:
        out = (-1j * kappa) * (h @ rho - rho @ h)
    else:
        out = np.zeros_like(rho)
    if gamma != 0.0:
        dissipator = -half_decay * rho
        idx = np.arange(rho.shape[0])
        dissipator[idx, idx] += gain @ np.diag(rho)
        out = out + gamma * dissipator
    return out


def lindblad_rhs(rho, h, jumps, kappa: float, gamma: float) -> np.ndarray:
    """Right-hand side of the master equation, exactly as written above.

    ``jumps`` are basis transitions |dst><src|, which lets the dissipator
    act through the populations alone: each jump feeds rho_src,src into
    the dst diagonal and damps the src row and column by gamma/2.
    """
    m = np.asarray(rho, dtype=np.complex128)
    hm = np.asarray(h, dtype=np.complex128)
    if m.shape != hm.shape or m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ConfigurationError(
            f"dimension mismatch: rho {m.shape} versus H {hm.shape}"
        )
    if hermiticity_residual(hm) > HERMITICITY_TOL:
        raise ContractViolationError("Hamiltonian must be Hermitian")
    gain, half_decay = _jump_arrays(jumps, m.shape[0])
    return _rhs(m, hm, gain, half_decay, float(kappa), float(gamma))


def evolve(
    rho0,
    spec: HypercubeSpec,
    params: WalkParams,
    rule: str = STRICT,
) -> Trajectory:
    """Integrate the walk with fixed-step RK4 and sample its populations.

    The sampling stride is rounded to a whole number of integrator steps
    and the run extends to the first sample at or past ``t_max``. Every
    sampled state is health-checked; a trace drift beyond 1e-6 or an
    eigenvalue below -1e-6 aborts the run with a diagnostics error
    prescribing a smaller dt.
    """
    rho = validate_density(rho0).copy()
    dim = spec.dim
    if rho.shape[0] != dim:
        raise ConfigurationError(
            f"density matrix dimension {rho.shape[0]} does not match 2^{spec.n}"
        )
    h = build_hamiltonian(spec, rule)
    jumps = build_jump_operators(spec, rule)
    gain, half_decay = _jump_arrays(jumps, dim)

    # Rescale to 1/gamma time units; gamma = 0 runs in plain time.
    if params.gamma > 0:
        kappa_eff = params.kappa / params.gamma
        gamma_eff = 1.0
    else:
        kappa_eff = params.kappa
        gamma_eff = 0.0

    def rhs(_t, y):
        return _rhs(y, h, gain, half_decay, kappa_eff, gamma_eff)

    steps_per_sample = max(1, int(round(params.sample_every / params.dt)))
    sample_dt = steps_per_sample * params.dt
    n_samples = int(np.ceil(params.t_max / sample_dt - 1e-12))

    times = np.empty(n_samples + 1)
    pops = np.empty((n_samples + 1, dim))
    trace_drift = np.empty(n_samples + 1)
    min_eig = np.empty(n_samples + 1)
    pur = np.empty(n_samples + 1)
    herm = np.empty(n_samples + 1)

    t = 0.0
    for k in range(n_samples + 1):
        if k > 0:
            for _ in range(steps_per_sample):
                rho = rk4_step(rhs, rho, t, params.dt)
                t += params.dt
        times[k] = k * sample_dt
        drift = abs(float(np.trace(rho).real) - 1.0)
        smallest = float(np.min(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))))
        if drift > TRACE_ABORT or smallest < EIGENVALUE_ABORT:
            raise IntegrationDiagnosticsError(times[k], params.dt, drift, smallest)
        trace_drift[k] = drift
        min_eig[k] = smallest
        pur[k] = purity(rho)
        herm[k] = hermiticity_residual(rho)
        pops[k] = populations(rho)

    return Trajectory(
        times=times,
        populations=pops,
        trace_drift=trace_drift,
        min_eigenvalue=min_eig,
        purity=pur,
        hermiticity=herm,
        sink_indices=tuple(spec.sinks),
        params=params,
    )


def mixing_time(
    traj: Trajectory,
    eps: float = MIXING_EPS,
    sink_threshold: float = SINK_THRESHOLD,
) -> float:
    """Settling time of the sampled populations, in 1/gamma units.

    Returns the earliest sample time from which every later sample stays
    within ``eps`` (sup norm) of the final one, provided the sinks have
    actually absorbed ``sink_threshold`` of the population by the end of
    the run; otherwise 0, the sentinel for a walk that failed to converge
    to the memory states.
    """
    final = traj.populations[-1]
    absorbed = float(final[list(traj.sink_indices)].sum())
    if absorbed < sink_threshold:
        return 0.0
    deviation = np.max(np.abs(traj.populations - final), axis=1)
    bad = np.nonzero(deviation >= eps)[0]
    first_settled = 0 if bad.size == 0 else int(bad[-1]) + 1
    return float(traj.times[first_settled])
