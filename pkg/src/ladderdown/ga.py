"""Genetic optimization of the five pulse genes.

One evaluation cycle scores every pulse by propagating the initial
vibrational state and projecting on the target level; evolution then
eliminates below-mean individuals, protects an elite, refills the
population through roulette-wheel crossover, and applies range-clipped
Gaussian mutation to everyone but the elite.

All random draws come from one sequential generator, used only between
evaluation rounds, so runs are reproducible bit-for-bit no matter how the
fitness evaluations are parallelized.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import partial

import numpy as np

from .dvr import RadialGrid, VibrationalSpectrum
from .propagator import CapSpec, PropagationBlowupError, WavefunctionState, propagate
from .pulse import GENE_NAMES, ChirpedPulseParams, ParamRanges


@dataclass
class Individual:
    """A pulse chromosome with its fitness score (None until evaluated)."""

    params: ChirpedPulseParams
    fitness: float | None = None
    failed: bool = False


@dataclass(frozen=True)
class GaConfig:
    ranges: ParamRanges
    population_size: int = 40
    generations: int = 10
    elite_count: int = 5
    crossover_prob: float = 0.25
    mutation_prob: float = 0.9
    mutation_scale: float = 0.1  # std dev of a mutation, as a fraction of range width
    rng_seed: int = 0

    def __post_init__(self):
        if not 0 < self.elite_count < self.population_size:
            raise ValueError("need 0 < elite_count < population_size")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ValueError(f"{name} must be a probability, got {p}")
        if self.generations < 1:
            raise ValueError("need at least one generation")


@dataclass
class GaHistory:
    """Per-generation summary of an optimization run."""

    best_fitness: list[float] = field(default_factory=list)
    mean_fitness: list[float] = field(default_factory=list)
    min_fitness: list[float] = field(default_factory=list)
    best_params: list[ChirpedPulseParams] = field(default_factory=list)
    evaluations: int = 0
    failures: int = 0
    uniform_fallbacks: int = 0

    def record(self, population: list[Individual]):
        scores = np.array([ind.fitness for ind in population])
        best = int(np.argmax(scores))
        self.best_fitness.append(float(scores[best]))
        self.mean_fitness.append(float(np.mean(scores)))
        self.min_fitness.append(float(np.min(scores)))
        self.best_params.append(population[best].params)

    def to_csv(self) -> str:
        lines = ["generation,best_fitness,mean_fitness,min_fitness," + ",".join(GENE_NAMES)]
        for g, (b, m, lo, p) in enumerate(
            zip(self.best_fitness, self.mean_fitness, self.min_fitness, self.best_params),
            start=1,
        ):
            genes = ",".join(repr(float(x)) for x in p.as_array())
            lines.append(f"{g},{b!r},{m!r},{lo!r},{genes}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class LadderProblem:
    """Fitness through propagation: J = |<target|Psi(t_max)>|^2.

    ``t_max`` per pulse is tau0 + horizon_widths*tau, covering the whole
    envelope; ``dt`` is pinned by the caller (validated once per scenario
    against the self-convergence criterion).
    """

    grid: RadialGrid
    potential: object
    dipole: object
    cap: CapSpec | None
    spectrum: VibrationalSpectrum
    initial_level: int
    target_level: int
    dt: float
    horizon_widths: float = 4.0

    def evaluate(self, params: ChirpedPulseParams) -> float:
        psi0 = self.spectrum.wavefunctions[self.initial_level].astype(complex)
        state = WavefunctionState(psi=psi0, t=0.0, grid=self.grid)
        t_max = params.tau0 + self.horizon_widths * params.tau
        rec = propagate(
            state, params, self.potential, self.dipole, self.cap,
            t_max=t_max, dt=self.dt, sample_stride=10**9,
        )
        target = self.spectrum.wavefunctions[self.target_level]
        j = abs(rec.final_state.overlap(target)) ** 2
        return float(min(max(j, 0.0), 1.0))


@dataclass(frozen=True)
class SurrogateProblem:
    """Closed-form stand-in fitness: a Gaussian bump over the gene box.

    Evaluates in microseconds, so optimizer mechanics can be exercised
    end-to-end without any propagation.
    """

    center: np.ndarray
    width: np.ndarray

    @classmethod
    def from_ranges(cls, ranges: ParamRanges, offset: float = 0.6,
                    rel_width: float = 1.0) -> "SurrogateProblem":
        los, his = ranges.as_arrays()
        return cls(center=los + offset * (his - los), width=rel_width * (his - los))

    def evaluate(self, params: ChirpedPulseParams) -> float:
        z = (params.as_array() - self.center) / self.width
        return float(np.exp(-np.sum(z * z)))

    def maximum(self) -> float:
        return 1.0


def _safe_evaluate(problem, genes) -> tuple[float, bool]:
    try:
        return problem.evaluate(ChirpedPulseParams.from_array(genes)), False
    except PropagationBlowupError:
        return 0.0, True


def evaluate_fitness(individual: Individual, problem) -> float:
    """Score one individual in place; blow-ups degrade to zero fitness."""
    j, failed = _safe_evaluate(problem, individual.params.as_array())
    individual.fitness = j
    individual.failed = failed
    return j


def _evaluate_population(population: list[Individual], problem, history: GaHistory,
                         threads: int = 1):
    todo = [i for i, ind in enumerate(population) if ind.fitness is None]
    if not todo:
        return
    genes = [population[i].params.as_array() for i in todo]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(partial(_safe_evaluate, problem), genes))
    else:
        results = [_safe_evaluate(problem, g) for g in genes]
    for i, (j, failed) in zip(todo, results):
        population[i].fitness = j
        population[i].failed = failed
        history.failures += failed
    history.evaluations += len(todo)


def init_population(ranges: ParamRanges, n: int, rng_seed: int) -> list[Individual]:
    """n individuals with genes drawn uniformly from their ranges."""
    return _draw_population(ranges, n, np.random.default_rng(rng_seed))


def _draw_population(ranges: ParamRanges, n: int, rng: np.random.Generator):
    los, his = ranges.as_arrays()
    return [
        Individual(params=ChirpedPulseParams.from_array(rng.uniform(los, his)))
        for _ in range(n)
    ]


def random_params(ranges: ParamRanges, rng_seed: int) -> ChirpedPulseParams:
    """One unoptimized chromosome, uniform over the search box."""
    los, his = ranges.as_arrays()
    return ChirpedPulseParams.from_array(np.random.default_rng(rng_seed).uniform(los, his))


def roulette_pick(fitness: np.ndarray, rng: np.random.Generator) -> int:
    """Index drawn with probability proportional to fitness."""
    cum = np.cumsum(fitness)
    return int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))


def evolve_generation(population: list[Individual], cfg: GaConfig,
                      rng: np.random.Generator,
                      history: GaHistory | None = None) -> list[Individual]:
    """One evolution cycle: eliminate, protect elite, cross over, mutate.

    Individuals scoring below the population mean are dropped; the best
    survivors are carried over untouched (fitness kept); the population is
    refilled with children of roulette-picked survivor pairs whose genes
    swap with the crossover probability; finally every non-elite gene
    mutates with the mutation probability by a range-clipped Gaussian kick.
    Returned non-elite individuals are unevaluated.
    """
    if any(ind.fitness is None for ind in population):
        raise ValueError("evolve_generation requires a fully evaluated population")
    scores = np.array([ind.fitness for ind in population])
    mean = float(np.mean(scores))
    survivors = [ind for ind in population if ind.fitness >= mean]
    order = sorted(range(len(survivors)), key=lambda k: -survivors[k].fitness)
    elite_idx = set(order[: cfg.elite_count])

    sur_fitness = np.array([ind.fitness for ind in survivors])
    degenerate = float(np.sum(sur_fitness)) <= 0.0
    if degenerate and history is not None:
        history.uniform_fallbacks += 1

    def pick_parent() -> np.ndarray:
        if degenerate:
            k = int(rng.integers(len(survivors)))
        else:
            k = roulette_pick(sur_fitness, rng)
        return survivors[k].params.as_array()

    n_children = cfg.population_size - len(survivors)
    children: list[Individual] = []
    for _ in range(n_children):
        a, b = pick_parent(), pick_parent()
        swap = rng.random(len(GENE_NAMES)) < cfg.crossover_prob
        child = np.where(swap, b, a)  # sibling np.where(swap, a, b) is discarded
        children.append(Individual(params=ChirpedPulseParams.from_array(child)))

    los, his = cfg.ranges.as_arrays()
    widths = his - los
    new_pop: list[Individual] = []
    for k, ind in enumerate(survivors):
        if k in elite_idx:
            new_pop.append(replace(ind))
        else:
            new_pop.append(Individual(params=ind.params))
    new_pop.extend(children)
    for idx, ind in enumerate(new_pop):
        if idx < len(survivors) and idx in elite_idx:
            continue
        genes = ind.params.as_array()
        for g in range(len(genes)):
            if rng.random() < cfg.mutation_prob:
                genes[g] += rng.normal(0.0, cfg.mutation_scale * widths[g])
        ind.params = ChirpedPulseParams.from_array(np.clip(genes, los, his))
        ind.fitness = None
        ind.failed = False
    return new_pop


def optimize(cfg: GaConfig, problem, threads: int = 1) -> tuple[Individual, GaHistory]:
    """Run the full optimization cycle and return the best-ever individual.

    Deterministic for a fixed config seed: evaluations never touch the
    random stream, so the thread count cannot change the outcome.
    """
    rng = np.random.default_rng(cfg.rng_seed)
    history = GaHistory()
    population = _draw_population(cfg.ranges, cfg.population_size, rng)
    _evaluate_population(population, problem, history, threads)
    history.record(population)
    for _ in range(cfg.generations - 1):
        population = evolve_generation(population, cfg, rng, history)
        _evaluate_population(population, problem, history, threads)
        history.record(population)
    best = max(population, key=lambda ind: ind.fitness)
    return replace(best), history
