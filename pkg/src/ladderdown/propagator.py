"""Time propagation of the nuclear wavefunction under a driving field.

One step advances the state by the symmetric split

    psi(t + dt) = exp(-i T dt/2) exp(-i W(tmid) dt) exp(-i T dt/2) psi(t)

with W(t) = V(R) + eps(t) D(R) + V_cap(R) evaluated at the midpoint
tmid = t + dt/2. The kinetic factors act in momentum space through FFTs on
the periodic grid; the complex absorbing potential lives inside W, so each
step stays exactly norm-non-increasing. Between observable samples the
inner half-kinetic factors of consecutive steps are merged, which halves
the FFT count without changing the factorization.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.fft as sfft

from .dvr import RadialGrid, VibrationalSpectrum
from .pulse import ChirpedPulseParams, as_field


class PropagationBlowupError(Exception):
    """An observable went non-finite; carries the offending step index."""

    def __init__(self, step_index: int):
        self.step_index = step_index
        super().__init__(f"non-finite wavefunction at step {step_index}")


@dataclass(frozen=True)
class CapSpec:
    """Quadratic complex absorbing potential -i*eta*(R-r0)^2 for R > r0."""

    r0: float
    eta: float

    def __post_init__(self):
        if self.eta <= 0:
            raise ValueError(f"CAP strength must be positive, got {self.eta}")


def cap_value(cap: CapSpec, r):
    """-i*eta*(r-r0)^2 beyond the onset, exactly zero at and before it."""
    ramp = np.clip(np.asarray(r, dtype=float) - cap.r0, 0.0, None)
    return -1j * cap.eta * ramp**2


@dataclass
class WavefunctionState:
    """Complex wavefunction on the grid at time t (atomic units)."""

    psi: np.ndarray
    t: float
    grid: RadialGrid

    def __post_init__(self):
        psi = np.asarray(self.psi, dtype=complex)
        if psi.shape != (self.grid.n_points,):
            raise ValueError("wavefunction length does not match the grid")
        self.psi = psi

    def norm(self) -> float:
        """Total probability dr * sum |psi|^2."""
        return float(self.grid.dr * np.sum(np.abs(self.psi) ** 2))

    def overlap(self, other: np.ndarray) -> complex:
        """<other|psi> grid quadrature (other is conjugated)."""
        return complex(self.grid.dr * np.vdot(other, self.psi))


@dataclass(frozen=True)
class PopulationSnapshot:
    """Level populations plus the norm bookkeeping at one instant."""

    populations: np.ndarray
    total_bound: float
    norm: float
    dissociation: float


def populations(
    state: WavefunctionState, spectrum: VibrationalSpectrum, levels=None
) -> PopulationSnapshot:
    """p_v = |<v|Psi>|^2 for the requested levels (default: all bound).

    total_bound always sums over every bound level; dissociation is the
    flux the absorber has removed, 1 - norm.
    """
    overlaps = state.grid.dr * (spectrum.wavefunctions @ state.psi)
    all_pops = np.abs(overlaps) ** 2
    pops = all_pops if levels is None else all_pops[list(levels)]
    norm = state.norm()
    return PopulationSnapshot(
        populations=pops,
        total_bound=float(np.sum(all_pops)),
        norm=norm,
        dissociation=1.0 - norm,
    )


@dataclass
class PropagationRecord:
    """Sampled observables of one propagation run.

    ``populations[k]`` holds p_v at ``times[k]`` for each entry of
    ``levels`` (empty when no spectrum was supplied). The final state is
    kept for fitness evaluation and restarts.
    """

    times: np.ndarray
    field_values: np.ndarray
    populations: np.ndarray
    total_bound: np.ndarray
    norm: np.ndarray
    dissociation: np.ndarray
    levels: tuple
    final_state: WavefunctionState
    steps: int
    dt: float


class SplitStepper:
    """Precomputed split-operator factors for one (grid, curves, cap, dt)."""

    def __init__(self, grid: RadialGrid, potential, dipole, cap: CapSpec | None, dt: float):
        if dt == 0:
            raise ValueError("time step must be nonzero")
        if cap is not None and not grid.r_min < cap.r0 < grid.r_max:
            raise ValueError(
                f"CAP onset {cap.r0} must lie inside the grid ({grid.r_min}, {grid.r_max})"
            )
        self.grid = grid
        self.dt = dt
        r = grid.points
        k = 2.0 * math.pi * sfft.fftfreq(grid.n_points, d=grid.dr)
        kin_phase = -1j * k**2 / (2.0 * grid.mu)
        self.kin_half = np.exp(kin_phase * (dt / 2.0))
        self.kin_full = self.kin_half * self.kin_half
        w_static = potential.value(r).astype(complex)
        if cap is not None:
            w_static = w_static + cap_value(cap, r)
        self.pot_factor = np.exp(-1j * w_static * dt)
        self.dip_phase = (
            -1j * dipole.value(r) * dt if dipole is not None else np.zeros(grid.n_points)
        )

    def _field_factors(self, eps_mid: np.ndarray) -> np.ndarray:
        return np.exp(np.multiply.outer(eps_mid, self.dip_phase)) * self.pot_factor

    # batch bound keeps the precomputed factor matrix small
    _MAX_BATCH = 512

    def run(self, psi: np.ndarray, t0: float, n_steps: int, field) -> np.ndarray:
        """Apply n_steps Strang steps starting at t0, merging inner kinetics."""
        done = 0
        while done < n_steps:
            m = min(self._MAX_BATCH, n_steps - done)
            psi = self._run_batch(psi, t0 + done * self.dt, m, field)
            done += m
        return psi

    def _run_batch(self, psi: np.ndarray, t0: float, n_steps: int, field) -> np.ndarray:
        t_mid = t0 + self.dt * (np.arange(n_steps) + 0.5)
        eps_mid = (
            np.zeros(n_steps) if field is None else np.asarray(field(t_mid), dtype=float)
        )
        factors = self._field_factors(eps_mid)
        psi = sfft.ifft(self.kin_half * sfft.fft(psi))
        for j in range(n_steps - 1):
            psi *= factors[j]
            psi = sfft.ifft(self.kin_full * sfft.fft(psi, overwrite_x=True), overwrite_x=True)
        psi *= factors[n_steps - 1]
        return sfft.ifft(self.kin_half * sfft.fft(psi, overwrite_x=True), overwrite_x=True)


def step(
    state: WavefunctionState,
    field,
    potential,
    dipole,
    cap: CapSpec | None,
    dt: float,
) -> WavefunctionState:
    """One symmetric split-operator step; advances time by dt.

    ``field`` may be a callable eps(t), a ChirpedPulseParams, or None for a
    field-free step. Negative dt steps backward (no CAP only, or the
    absorber turns into a source).
    """
    if isinstance(field, ChirpedPulseParams):
        field = as_field(field)
    stepper = SplitStepper(state.grid, potential, dipole, cap, dt)
    psi = stepper.run(state.psi.copy(), state.t, 1, field)
    return WavefunctionState(psi=psi, t=state.t + dt, grid=state.grid)


def propagate(
    state: WavefunctionState,
    field,
    potential,
    dipole,
    cap: CapSpec | None,
    t_max: float,
    dt: float,
    sample_stride: int = 1,
    spectrum: VibrationalSpectrum | None = None,
    levels=None,
) -> PropagationRecord:
    """Propagate until t >= t_max, sampling observables along the way.

    Observables are recorded at the start, every ``sample_stride`` steps,
    and at the final step. Populations require ``spectrum``; ``levels``
    selects which of its bound levels to record (default all). Raises
    PropagationBlowupError if the norm goes non-finite.
    """
    if dt <= 0:
        raise ValueError("propagation requires dt > 0")
    if sample_stride < 1:
        raise ValueError("sample_stride must be >= 1")
    if isinstance(field, ChirpedPulseParams):
        field = as_field(field)
    stepper = SplitStepper(state.grid, potential, dipole, cap, dt)
    n_steps = max(1, math.ceil((t_max - state.t) / dt - 1e-12))

    if levels is None and spectrum is not None:
        levels = tuple(range(spectrum.bound_count))
    levels = tuple(levels) if levels is not None else ()

    times, fields_out, pops, totals, norms = [], [], [], [], []

    def record(psi: np.ndarray, t: float, step_index: int):
        st = WavefunctionState(psi=psi, t=t, grid=state.grid)
        if spectrum is not None:
            snap = populations(st, spectrum, levels)
            pops.append(snap.populations)
            totals.append(snap.total_bound)
            n = snap.norm
        else:
            n = st.norm()
        if not math.isfinite(n):
            raise PropagationBlowupError(step_index)
        times.append(t)
        fields_out.append(0.0 if field is None else float(field(t)))
        norms.append(n)

    psi = state.psi.copy()
    record(psi, state.t, 0)
    done = 0
    while done < n_steps:
        chunk = min(sample_stride, n_steps - done)
        psi = stepper.run(psi, state.t + done * dt, chunk, field)
        done += chunk
        record(psi, state.t + done * dt, done)

    norm_arr = np.array(norms)
    return PropagationRecord(
        times=np.array(times),
        field_values=np.array(fields_out),
        populations=np.array(pops) if pops else np.empty((len(times), 0)),
        total_bound=np.array(totals) if totals else np.full(len(times), np.nan),
        norm=norm_arr,
        dissociation=1.0 - norm_arr,
        levels=levels,
        final_state=WavefunctionState(psi=psi, t=state.t + done * dt, grid=state.grid),
        steps=n_steps,
        dt=dt,
    )


def choose_time_step(
    grid: RadialGrid,
    potential,
    dipole,
    cap: CapSpec | None,
    eps_max: float = 0.0,
    pot_phase: float = 0.1,
    kin_phase: float = 1.0,
) -> float:
    """Default dt: potential phase < pot_phase rad, Nyquist kinetic phase
    < kin_phase rad per step. A starting point; refine_time_step tightens
    it against actual dynamics."""
    r = grid.points
    w = np.abs(potential.value(r)) + (
        eps_max * np.abs(dipole.value(r)) if dipole is not None else 0.0
    )
    if cap is not None:
        w = w + np.abs(cap_value(cap, r))
    k_nyq = math.pi / grid.dr
    dt_pot = pot_phase / float(np.max(w))
    dt_kin = kin_phase / (k_nyq**2 / (2.0 * grid.mu))
    return min(dt_pot, dt_kin)


def refine_time_step(
    state: WavefunctionState,
    field,
    potential,
    dipole,
    cap: CapSpec | None,
    t_max: float,
    spectrum: VibrationalSpectrum,
    dt0: float | None = None,
    tol: float = 1.0e-6,
    max_halvings: int = 12,
) -> float:
    """Halve dt until the final bound populations move by less than tol."""
    dt = dt0 if dt0 is not None else choose_time_step(grid=state.grid, potential=potential,
                                                      dipole=dipole, cap=cap)

    def final_pops(dt_try: float) -> np.ndarray:
        rec = propagate(state, field, potential, dipole, cap, t_max, dt_try,
                        sample_stride=10**9, spectrum=spectrum)
        return rec.populations[-1]

    prev = final_pops(dt)
    for _ in range(max_halvings):
        cur = final_pops(dt / 2.0)
        if float(np.max(np.abs(cur - prev))) < tol:
            return dt
        dt /= 2.0
        prev = cur
    raise RuntimeError(f"time step did not self-converge after {max_halvings} halvings")
