"""Command-line interface: scenario presets, batch runs, plot-ready files.

Subcommands
-----------
eigensolve      bound levels, lifetimes, and the dipole-coupling map
propagate       wavepacket run under a fixed pulse, time-series output
optimize        genetic-algorithm pulse search, history + best chromosome
pulse-spectrum  analytic (and optionally FFT) optical spectrum of a pulse

Every run writes a resolved config, a manifest with the config hash and
library versions, and locale-independent full-precision CSV files, so any
result can be reproduced exactly from its output directory.
"""

from __future__ import annotations

import argparse
import configparser
import hashlib
import json
import math
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy

from . import __version__
from .constants import AU_ANGFREQ_RAD_PER_S, AU_TIME_S, MU_K39RB87
from .curves import (
    ExpRampDipole,
    MorsePotential,
    krb_standin_dipole,
    krb_standin_potential,
    load_tabulated,
)
from .dvr import RadialGrid, build_hamiltonian, sdme_map, solve_bound_states, lifetime
from .ga import GaConfig, LadderProblem, SurrogateProblem, optimize
from .propagator import CapSpec, WavefunctionState, choose_time_step, propagate
from .pulse import (
    GENE_NAMES,
    ChirpedPulseParams,
    ParamRanges,
    bandwidth,
    fft_spectrum,
    heuristic_ranges,
    spectrum as pulse_spectrum_values,
)


class ConfigError(Exception):
    """A config file field is missing or malformed."""


def _fmt(x) -> str:
    """Full-precision, locale-independent decimal for output files."""
    return repr(float(x))


# --- presets ----------------------------------------------------------------
#
# The four production presets pair the stand-in curves with the published
# search ranges and optimal pulses of the one-rung (old*) and multi-rung
# (mld*) scenarios; `desk` is a reduced-scale variant that runs in minutes.

_STANDIN_A = krb_standin_potential().a

_COMMON_PRODUCTION = f"""
[grid]
r_min = 6.0
r_max = 146.0
n_points = 5600
reduced_mass = {MU_K39RB87!r}

[potential]
model = morse
de = 1.1e-3
re = 11.0
a = {_STANDIN_A!r}

[dipole]
model = ramp
d0 = 0.5
rd = 28.0
p = 2.0

[cap]
r0 = 100.0
eta = 5e-6
"""

PRESETS: dict[str, str] = {
    "old20": _COMMON_PRODUCTION + """
[levels]
initial = 20
target = 10

[pulse]
eps0 = 8.011e-3
omega0 = 3.531e-5
tau0 = 4.104e7
tau = 9.798e6
chirp = 6.259e-13

[ga]
population = 40
generations = 10
elites = 5
crossover_prob = 0.25
mutation_prob = 0.9
seed = 1
eps0_range = 1.0e-3, 1.0e-2
omega0_range = 3.1e-5, 3.6e-5
tau0_range = 3.3e6, 3.5e7
tau_range = 1.0e6, 1.0e7
chirp_range = 4.0e-13, 5.0e-12
""",
    "old24": _COMMON_PRODUCTION + """
[levels]
initial = 24
target = 10

[pulse]
eps0 = 9.168e-3
omega0 = 3.723e-5
tau0 = 3.723e7
tau = 1.146e7
chirp = 7.300e-13

[ga]
population = 40
generations = 10
elites = 5
crossover_prob = 0.25
mutation_prob = 0.9
seed = 1
eps0_range = 1.0e-3, 1.0e-2
omega0_range = 3.3e-5, 3.6e-5
tau0_range = 3.3e6, 3.5e7
tau_range = 1.0e6, 1.0e7
chirp_range = 6.0e-13, 7.0e-12
""",
    "mld20": _COMMON_PRODUCTION + """
[levels]
initial = 20
target = 10
ladder = 20, 16, 13, 10

[pulse]
eps0 = 5.154e-3
omega0 = 1.211e-4
tau0 = 4.900e6
tau = 1.489e6
chirp = 8.254e-12

[ga]
population = 40
generations = 10
elites = 5
crossover_prob = 0.25
mutation_prob = 0.9
seed = 1
eps0_range = 1.0e-3, 1.0e-2
omega0_range = 1.0e-4, 1.8e-4
tau0_range = 1.0e6, 1.0e7
tau_range = 3.2e5, 3.2e6
chirp_range = 1.8e-12, 1.6e-11
""",
    "mld24": _COMMON_PRODUCTION + """
[levels]
initial = 24
target = 10
ladder = 24, 17, 13, 10

[pulse]
eps0 = 5.720e-3
omega0 = 1.378e-4
tau0 = 4.835e6
tau = 1.003e6
chirp = 5.832e-12

[ga]
population = 40
generations = 10
elites = 5
crossover_prob = 0.25
mutation_prob = 0.9
seed = 1
eps0_range = 1.0e-3, 1.0e-2
omega0_range = 1.3e-4, 1.6e-4
tau0_range = 3.3e6, 3.5e7
tau_range = 1.0e6, 1.0e7
chirp_range = 1.0e-13, 1.0e-12
""",
    "desk": f"""
[grid]
r_min = 8.0
r_max = 68.0
n_points = 1024
reduced_mass = {MU_K39RB87!r}

[potential]
model = morse
de = 1.1e-3
re = 11.0
a = {_STANDIN_A!r}

[dipole]
model = ramp
d0 = 0.5
rd = 28.0
p = 2.0

[cap]
r0 = 48.0
eta = 5e-6

[levels]
initial = 8
target = 2
ladder = 8, 6, 4, 2

[ga]
population = 12
generations = 6
elites = 2
crossover_prob = 0.25
mutation_prob = 0.9
seed = 1
tau_span = 2.5

[propagation]
dt = 40.0
sample_stride = 100
""",
}


# --- config parsing ---------------------------------------------------------

_REQUIRED = object()


@dataclass
class GaSettings:
    population: int
    generations: int
    elites: int
    crossover_prob: float
    mutation_prob: float
    seed: int
    tau_span: float
    ranges: ParamRanges | None


@dataclass
class RunConfig:
    """Fully resolved run description, one-to-one with the config file."""

    grid: RadialGrid
    potential: object
    dipole: object
    cap: CapSpec | None
    initial_level: int
    target_level: int
    ladder: tuple[int, ...]
    pulse: ChirpedPulseParams | None
    ga: GaSettings | None
    dt: float | None
    sample_stride: int
    text: str


def _get(cp, section, key, cast, default=_REQUIRED):
    raw = cp.get(section, key, fallback=None)
    if raw is None:
        if default is _REQUIRED:
            raise ConfigError(f"[{section}] {key}: required field is missing")
        return default
    try:
        return cast(raw)
    except ValueError:
        raise ConfigError(
            f"[{section}] {key}: cannot parse {raw!r} as {cast.__name__}"
        ) from None


def _parse_pair(raw: str) -> tuple[float, float]:
    parts = raw.replace(",", " ").split()
    if len(parts) != 2:
        raise ValueError(raw)
    return float(parts[0]), float(parts[1])


def _parse_ladder(raw: str) -> tuple[int, ...]:
    return tuple(int(tok) for tok in raw.replace(",", " ").split())


def parse_config(text: str) -> RunConfig:
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"config syntax: {exc}") from None

    grid = RadialGrid(
        r_min=_get(cp, "grid", "r_min", float),
        r_max=_get(cp, "grid", "r_max", float),
        n_points=_get(cp, "grid", "n_points", int),
        mu=_get(cp, "grid", "reduced_mass", float, MU_K39RB87),
    )

    model = _get(cp, "potential", "model", str, "morse").strip().lower()
    if cp.has_option("potential", "file"):
        potential = load_tabulated(_get(cp, "potential", "file", str), kind="potential")
    elif model == "morse":
        potential = MorsePotential(
            de=_get(cp, "potential", "de", float),
            re=_get(cp, "potential", "re", float),
            a=_get(cp, "potential", "a", float),
        )
    else:
        raise ConfigError(f"[potential] model: unknown model {model!r}")

    if cp.has_option("dipole", "file"):
        dipole = load_tabulated(_get(cp, "dipole", "file", str), kind="dipole")
    else:
        dmodel = _get(cp, "dipole", "model", str, "ramp").strip().lower()
        if dmodel != "ramp":
            raise ConfigError(f"[dipole] model: unknown model {dmodel!r}")
        dipole = ExpRampDipole(
            d0=_get(cp, "dipole", "d0", float),
            rd=_get(cp, "dipole", "rd", float),
            p=_get(cp, "dipole", "p", float, 4.0),
        )

    cap = None
    if cp.has_section("cap"):
        cap = CapSpec(r0=_get(cp, "cap", "r0", float), eta=_get(cp, "cap", "eta", float))

    initial = _get(cp, "levels", "initial", int)
    target = _get(cp, "levels", "target", int)
    if not initial > target >= 0:
        raise ConfigError(f"[levels]: need initial > target >= 0, got {initial}, {target}")
    ladder = _get(cp, "levels", "ladder", _parse_ladder, None)
    if ladder is None:
        ladder = tuple(range(initial, target - 1, -1))
    if ladder[0] != initial or ladder[-1] != target:
        raise ConfigError(f"[levels] ladder: must run from {initial} to {target}, got {ladder}")
    if any(a <= b for a, b in zip(ladder, ladder[1:])):
        raise ConfigError(f"[levels] ladder: must strictly descend, got {ladder}")

    pulse = None
    if cp.has_section("pulse"):
        pulse = ChirpedPulseParams(
            eps0=_get(cp, "pulse", "eps0", float),
            omega0=_get(cp, "pulse", "omega0", float),
            tau0=_get(cp, "pulse", "tau0", float),
            tau=_get(cp, "pulse", "tau", float),
            chirp=_get(cp, "pulse", "chirp", float),
        )

    ga = None
    if cp.has_section("ga"):
        explicit = {
            name: _get(cp, "ga", f"{name}_range", _parse_pair, None) for name in GENE_NAMES
        }
        if all(v is not None for v in explicit.values()):
            ranges = ParamRanges(**explicit)
        elif any(v is not None for v in explicit.values()):
            missing = [k for k, v in explicit.items() if v is None]
            raise ConfigError(f"[ga]: incomplete explicit ranges, missing {missing}")
        else:
            ranges = None
        ga = GaSettings(
            population=_get(cp, "ga", "population", int, 40),
            generations=_get(cp, "ga", "generations", int, 10),
            elites=_get(cp, "ga", "elites", int, 5),
            crossover_prob=_get(cp, "ga", "crossover_prob", float, 0.25),
            mutation_prob=_get(cp, "ga", "mutation_prob", float, 0.9),
            seed=_get(cp, "ga", "seed", int, 1),
            tau_span=_get(cp, "ga", "tau_span", float, 10.0),
            ranges=ranges,
        )

    return RunConfig(
        grid=grid,
        potential=potential,
        dipole=dipole,
        cap=cap,
        initial_level=initial,
        target_level=target,
        ladder=ladder,
        pulse=pulse,
        ga=ga,
        dt=_get(cp, "propagation", "dt", float, None) if cp.has_section("propagation") else None,
        sample_stride=(
            _get(cp, "propagation", "sample_stride", int, 100)
            if cp.has_section("propagation")
            else 100
        ),
        text=text,
    )


def load_config(path: str | None, preset: str | None) -> RunConfig:
    if (path is None) == (preset is None):
        raise ConfigError("provide exactly one of --config or --preset")
    if preset is not None:
        if preset not in PRESETS:
            raise ConfigError(f"unknown preset {preset!r}; have {sorted(PRESETS)}")
        return parse_config(PRESETS[preset])
    return parse_config(Path(path).read_text(encoding="utf-8"))


# --- output helpers ---------------------------------------------------------


def _prepare_out(out_dir: str) -> Path:
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    return out


def _write(out: Path, name: str, text: str) -> Path:
    path = out / name
    path.write_text(text, encoding="utf-8")
    return path


def _write_manifest(out: Path, command: str, config: RunConfig, seed, threads: int | None):
    manifest = {
        "command": command,
        "config_sha256": hashlib.sha256(config.text.encode()).hexdigest(),
        "seed": seed,
        "threads": threads,
        "versions": {
            "ladderdown": __version__,
            "numpy": np.__version__,
            "scipy": scipy.__version__,
        },
    }
    _write(out, "resolved_config.ini", config.text)
    _write(out, "manifest.json", json.dumps(manifest, indent=2, sort_keys=True) + "\n")


def _solve(config: RunConfig):
    h = build_hamiltonian(config.grid, config.potential)
    return solve_bound_states(h, config.grid)


def _pulse_from_file(path: str) -> ChirpedPulseParams:
    cp = configparser.ConfigParser()
    cp.read_string(Path(path).read_text(encoding="utf-8"))
    if not cp.has_section("pulse"):
        raise ConfigError(f"{path}: no [pulse] section")
    return ChirpedPulseParams(
        **{k: _get(cp, "pulse", k, float) for k in ("eps0", "omega0", "tau0", "tau", "chirp")}
    )


def _pulse_to_ini(p: ChirpedPulseParams) -> str:
    lines = ["[pulse]"]
    lines += [f"{name} = {_fmt(getattr(p, name))}" for name in GENE_NAMES]
    return "\n".join(lines) + "\n"


# --- commands ---------------------------------------------------------------


def cmd_eigensolve(config: RunConfig, out_dir: str, with_wavefunctions: bool = False) -> dict:
    out = _prepare_out(out_dir)
    spec = _solve(config)
    sd = sdme_map(spec, config.dipole)

    _write(out, "energies.csv", "level,energy_hartree\n" + "".join(
        f"{v},{_fmt(e)}\n" for v, e in enumerate(spec.energies)
    ))
    _write(out, "sdme.csv", "".join(
        ",".join(_fmt(x) for x in row) + "\n" for row in sd.values
    ))
    _write(out, "lifetimes.csv", "level,lifetime_s\n" + "".join(
        f"{v},{_fmt(lifetime(spec, sd, v)) if math.isfinite(lifetime(spec, sd, v)) else 'inf'}\n"
        for v in range(1, spec.bound_count)
    ))
    if with_wavefunctions:
        header = "r_bohr," + ",".join(f"psi_{v}" for v in range(spec.bound_count))
        rows = np.column_stack([config.grid.points, spec.wavefunctions.T])
        _write(out, "wavefunctions.csv", header + "\n" + "".join(
            ",".join(_fmt(x) for x in row) + "\n" for row in rows
        ))

    summary = [
        f"bound_count = {spec.bound_count}",
        f"grid = [{_fmt(config.grid.r_min)}, {_fmt(config.grid.r_max)}] x {config.grid.n_points}",
        f"reduced_mass = {_fmt(config.grid.mu)}",
        f"threshold = 0.0",
    ]
    if config.cap is not None:
        summary += [f"cap_r0 = {_fmt(config.cap.r0)}", f"cap_eta = {_fmt(config.cap.eta)}"]
    _write(out, "summary.txt", "\n".join(summary) + "\n")
    _write_manifest(out, "eigensolve", config, seed=None, threads=None)
    print(f"eigensolve: {spec.bound_count} bound levels -> {out}")
    return {"bound_count": spec.bound_count, "out": out}


def _timeseries_csv(rec, levels) -> str:
    header = ["t_au", "t_ns", "field_au"] + [f"p_{v}" for v in levels]
    header += ["total_bound", "norm", "dissociation"]
    lines = [",".join(header)]
    for k in range(len(rec.times)):
        row = [rec.times[k], rec.times[k] * AU_TIME_S * 1e9, rec.field_values[k]]
        row += list(rec.populations[k])
        row += [rec.total_bound[k], rec.norm[k], rec.dissociation[k]]
        lines.append(",".join(_fmt(x) for x in row))
    return "\n".join(lines) + "\n"


def cmd_propagate(config: RunConfig, out_dir: str, pulse_file: str | None = None) -> dict:
    out = _prepare_out(out_dir)
    pulse = _pulse_from_file(pulse_file) if pulse_file else config.pulse
    if pulse is None:
        raise ConfigError("propagate needs a [pulse] section or --pulse file")
    spec = _solve(config)
    dt = config.dt or choose_time_step(
        config.grid, config.potential, config.dipole, config.cap, eps_max=pulse.eps0
    )
    t_max = pulse.tau0 + 4.0 * pulse.tau
    psi0 = spec.wavefunctions[config.initial_level].astype(complex)
    state = WavefunctionState(psi=psi0, t=0.0, grid=config.grid)

    t0 = time.perf_counter()
    rec = propagate(
        state, pulse, config.potential, config.dipole, config.cap,
        t_max=t_max, dt=dt, sample_stride=config.sample_stride, spectrum=spec,
    )
    wall = time.perf_counter() - t0

    _write(out, "timeseries.csv", _timeseries_csv(rec, rec.levels))
    fin = rec.populations[-1]
    summary = [
        f"initial_level = {config.initial_level}",
        f"target_level = {config.target_level}",
        f"final_p_target = {_fmt(fin[config.target_level])}",
        f"final_p_initial = {_fmt(fin[config.initial_level])}",
        f"final_total_bound = {_fmt(rec.total_bound[-1])}",
        f"final_dissociation = {_fmt(rec.dissociation[-1])}",
        f"steps = {rec.steps}",
        f"dt_au = {_fmt(dt)}",
        f"wall_time_s = {wall:.3f}",
    ]
    _write(out, "summary.txt", "\n".join(summary) + "\n")
    _write_manifest(out, "propagate", config, seed=None, threads=None)
    print(
        f"propagate: {rec.steps} steps, p_target={fin[config.target_level]:.4f} -> {out}"
    )
    return {"record": rec, "out": out}


def cmd_optimize(
    config: RunConfig, out_dir: str, threads: int = 1, surrogate: bool = False,
    seed: int | None = None,
) -> dict:
    out = _prepare_out(out_dir)
    if config.ga is None:
        raise ConfigError("optimize needs a [ga] section")
    ga = config.ga
    used_seed = ga.seed if seed is None else seed

    ranges = ga.ranges
    spec = None
    if ranges is None or not surrogate:
        spec = _solve(config)
    if ranges is None:
        sd = sdme_map(spec, config.dipole)
        life_s = lifetime(spec, sd, config.initial_level)
        ranges = heuristic_ranges(
            spec, config.initial_level, config.ladder,
            lifetime_au=life_s / AU_TIME_S, sdme=sd, tau_span=ga.tau_span,
        )

    if surrogate:
        problem = SurrogateProblem.from_ranges(ranges)
    else:
        dt = config.dt or choose_time_step(
            config.grid, config.potential, config.dipole, config.cap,
            eps_max=ranges.eps0[1],
        )
        problem = LadderProblem(
            grid=config.grid, potential=config.potential, dipole=config.dipole,
            cap=config.cap, spectrum=spec, initial_level=config.initial_level,
            target_level=config.target_level, dt=dt,
        )

    cfg = GaConfig(
        ranges=ranges, population_size=ga.population, generations=ga.generations,
        elite_count=ga.elites, crossover_prob=ga.crossover_prob,
        mutation_prob=ga.mutation_prob, rng_seed=used_seed,
    )
    best, history = optimize(cfg, problem, threads=threads)

    _write(out, "history.csv", history.to_csv())
    _write(out, "best_pulse.cfg", _pulse_to_ini(best.params))

    los, his = ranges.as_arrays()
    genes = best.params.as_array()
    on_boundary = [
        name for name, g, lo, hi in zip(GENE_NAMES, genes, los, his)
        if g <= lo or g >= hi
    ]
    summary = [
        f"seed = {used_seed}",
        f"best_fitness = {_fmt(best.fitness)}",
        f"evaluations = {history.evaluations}",
        f"failures = {history.failures}",
        f"surrogate = {surrogate}",
        f"genes_on_range_boundary = {','.join(on_boundary) if on_boundary else 'none'}",
    ]
    summary += [
        f"range_{name} = {_fmt(lo)}, {_fmt(hi)}" for name, lo, hi in zip(GENE_NAMES, los, his)
    ]
    _write(out, "summary.txt", "\n".join(summary) + "\n")
    _write_manifest(out, "optimize", config, seed=used_seed, threads=threads)
    print(f"optimize: best J = {best.fitness:.6f} after {history.evaluations} evaluations -> {out}")
    return {"best": best, "history": history, "ranges": ranges, "out": out}


def cmd_pulse_spectrum(
    config: RunConfig | None, out_dir: str, pulse_file: str | None = None,
    omega_min: float | None = None, omega_max: float | None = None,
    n_points: int = 2000, with_fft: bool = False,
) -> dict:
    out = _prepare_out(out_dir)
    if pulse_file:
        pulse = _pulse_from_file(pulse_file)
    elif config is not None and config.pulse is not None:
        pulse = config.pulse
    else:
        raise ConfigError("pulse-spectrum needs a [pulse] section or --pulse file")

    sigma = bandwidth(pulse)
    lo = omega_min if omega_min is not None else max(pulse.omega0 - 4.0 * sigma, 0.0)
    hi = omega_max if omega_max is not None else pulse.omega0 + 4.0 * sigma
    if not lo < hi:
        raise ConfigError(f"empty spectral range [{lo}, {hi}]")
    w = np.linspace(lo, hi, n_points)
    intens = pulse_spectrum_values(pulse, w)
    _write(out, "spectrum.csv", "omega_au,nu_hz,intensity\n" + "".join(
        f"{_fmt(wi)},{_fmt(wi * AU_ANGFREQ_RAD_PER_S / (2 * math.pi))},{_fmt(ii)}\n"
        for wi, ii in zip(w, intens)
    ))
    if with_fft:
        freqs, power = fft_spectrum(pulse)
        keep = (freqs >= lo) & (freqs <= hi)
        _write(out, "spectrum_fft.csv", "omega_au,nu_hz,intensity\n" + "".join(
            f"{_fmt(wi)},{_fmt(wi * AU_ANGFREQ_RAD_PER_S / (2 * math.pi))},{_fmt(ii)}\n"
            for wi, ii in zip(freqs[keep], power[keep])
        ))
    if config is not None:
        _write_manifest(out, "pulse-spectrum", config, seed=None, threads=None)
    print(f"pulse-spectrum: peak at omega0 = {pulse.omega0:g} a.u. -> {out}")
    return {"pulse": pulse, "out": out}


# --- argument parsing ---------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ladderdown",
        description="Vibrational ladder-descent pulse optimization toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="path to an INI run config")
        p.add_argument("--preset", help=f"built-in scenario: {', '.join(sorted(PRESETS))}")
        p.add_argument("--out", required=True, help="output directory")
        p.add_argument("--seed", type=int, help="override the [ga] seed")
        p.add_argument("--threads", type=int, default=1, help="parallel fitness evaluations")

    p = sub.add_parser("eigensolve", help="bound states, SDME map, lifetimes")
    common(p)
    p.add_argument("--wavefunctions", action="store_true", help="also write wavefunctions.csv")

    p = sub.add_parser("propagate", help="run one pulse and record populations")
    common(p)
    p.add_argument("--pulse", help="pulse parameter file overriding the config [pulse]")

    p = sub.add_parser("optimize", help="genetic-algorithm pulse search")
    common(p)
    p.add_argument("--surrogate", action="store_true",
                   help="closed-form test fitness instead of propagation")

    p = sub.add_parser("pulse-spectrum", help="optical spectrum of a pulse")
    common(p)
    p.add_argument("--pulse", help="pulse parameter file overriding the config [pulse]")
    p.add_argument("--omega-min", type=float, help="lower angular frequency (a.u.)")
    p.add_argument("--omega-max", type=float, help="upper angular frequency (a.u.)")
    p.add_argument("--points", type=int, default=2000, help="number of spectrum samples")
    p.add_argument("--fft", action="store_true", help="also emit the FFT cross-check spectrum")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = load_config(args.config, args.preset)
        if args.command == "eigensolve":
            cmd_eigensolve(config, args.out, with_wavefunctions=args.wavefunctions)
        elif args.command == "propagate":
            cmd_propagate(config, args.out, pulse_file=args.pulse)
        elif args.command == "optimize":
            cmd_optimize(config, args.out, threads=args.threads,
                         surrogate=args.surrogate, seed=args.seed)
        elif args.command == "pulse-spectrum":
            cmd_pulse_spectrum(
                config, args.out, pulse_file=args.pulse, omega_min=args.omega_min,
                omega_max=args.omega_max, n_points=args.points, with_fft=args.fft,
            )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
