"""Generational GA loop with uniform random selection, crossover at rate pc,
per-gene swap mutation, elitism, and an evaluation budget as the stopping
criterion.

A run is fully deterministic for a fixed seed: all randomness flows through a
single ``numpy.random.Generator``. Selection pressure comes only from elitism
and the greedy crossovers; there is no fitness-proportionate or tournament
selection.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from ._kernels import (apply_swaps_kernel, rx_fill_kernel, scx_kernel,
                       tour_cost_kernel)
from .errors import ConfigError
from .operators import CrossoverKind, rx_positions
from .tour import Individual, random_tour
from .tsplib import Instance


@dataclass(frozen=True)
class GaConfig:
    """Engine parameters. ``pm=None`` resolves to 1/n at run time (mutation
    rate of one expected swap per chromosome)."""

    ps: int = 100
    pc: float = 0.9
    pm: float | None = None
    budget: int = 1_000_000
    crossover: CrossoverKind = field(default_factory=CrossoverKind.mscx)
    elitism: int = 1
    seed: int = 0
    log_generations: bool = False

    def validate(self) -> None:
        if self.ps < 2:
            raise ConfigError(f"population size must be >= 2, got {self.ps}")
        if not 0.0 <= self.pc <= 1.0:
            raise ConfigError(f"crossover rate must be in [0, 1], got {self.pc}")
        if self.pm is not None and not 0.0 <= self.pm <= 1.0:
            raise ConfigError(f"mutation rate must be in [0, 1], got {self.pm}")
        if self.budget < self.ps:
            raise ConfigError(
                f"budget must cover the initial population (>= ps={self.ps}), "
                f"got {self.budget}")
        if not 0 <= self.elitism < self.ps:
            raise ConfigError(
                f"elitism must be in 0..ps-1={self.ps - 1}, got {self.elitism}")
        if not isinstance(self.crossover, CrossoverKind):
            raise ConfigError("crossover must be a CrossoverKind")


@dataclass
class RunReport:
    """Outcome of one run. ``generation_log`` holds (generation, best, mean)
    triples when enabled; wall_time is excluded from determinism contracts."""

    best_cost: float
    best_tour: np.ndarray
    evaluations_used: int
    wall_time: float
    seed: int
    generation_log: list[tuple[int, float, float]] | None = None


def select_parents(population: list[Individual],
                   rng: np.random.Generator) -> tuple[Individual, Individual]:
    """Two individuals drawn uniformly at random, with distinct indices
    whenever the population has at least two members."""
    ps = len(population)
    if ps == 0:
        raise ConfigError("cannot select parents from an empty population")
    if ps == 1:
        return population[0], population[0]
    i = int(rng.integers(ps))
    j = int(rng.integers(ps - 1))
    if j >= i:
        j += 1
    return population[i], population[j]


class _Evaluator:
    """Counts every cost computation on a new or mutated tour."""

    __slots__ = ("cost1", "count")

    def __init__(self, instance: Instance):
        self.cost1 = instance._cost1
        self.count = 0

    def evaluate(self, tour: np.ndarray) -> Individual:
        self.count += 1
        return Individual(tour, float(tour_cost_kernel(tour, self.cost1)))


def _mutated(tour: np.ndarray, pm: float, rng: np.random.Generator):
    """Engine-internal mutation; returns (tour, changed). Mirrors
    operators.mutate but skips revalidation on the hot path."""
    n = tour.shape[0]
    triggers = np.flatnonzero(rng.random(n) < pm)
    if triggers.size == 0:
        return tour, False
    partners = rng.integers(0, n - 1, size=triggers.size)
    out, _ = apply_swaps_kernel(tour, triggers, partners)
    return out, True


def _crossover_children(kind: CrossoverKind, pa: Individual, pb: Individual,
                        cost1: np.ndarray, rng: np.random.Generator):
    if kind.kind == "rx":
        n = pa.tour.shape[0]
        c1 = rx_fill_kernel(pa.tour, pb.tour, rx_positions(n, kind.pr, rng))
        c2 = rx_fill_kernel(pb.tour, pa.tour, rx_positions(n, kind.pr, rng))
        return [c1, c2]
    r = kind.r if kind.kind == "mscx_radius" else 1
    child, _ = scx_kernel(pa.tour, pb.tour, cost1, r)
    return [child]


def _next_generation(population: list[Individual], need: int,
                     kind: CrossoverKind, pc: float, pm: float,
                     cost1: np.ndarray, rng: np.random.Generator,
                     evaluator: _Evaluator) -> list[Individual]:
    """Produce exactly ``need`` children. A surplus second RX child is
    discarded before mutation. Children cloned without crossover keep their
    cached cost unless mutation actually changed them."""
    children: list[Individual] = []
    while len(children) < need:
        pa, pb = select_parents(population, rng)
        if rng.random() < pc:
            for tour in _crossover_children(kind, pa, pb, cost1, rng):
                if len(children) == need:
                    break
                tour, _ = _mutated(tour, pm, rng)
                children.append(evaluator.evaluate(tour))
        else:
            clones = (pa, pb) if kind.kind == "rx" else (pa,)
            for parent in clones:
                if len(children) == need:
                    break
                tour, changed = _mutated(parent.tour, pm, rng)
                if changed:
                    children.append(evaluator.evaluate(tour))
                else:
                    children.append(Individual(tour, parent.cost))
    return children


def _elites(population: list[Individual], count: int) -> list[Individual]:
    if count == 0:
        return []
    order = sorted(range(len(population)), key=lambda i: population[i].cost)
    return [Individual(population[i].tour, population[i].cost)
            for i in order[:count]]


def run_ga(instance: Instance, config: GaConfig,
           hrx_config=None) -> RunReport:
    """Run the generational GA on ``instance`` until the evaluation budget is
    reached; returns the best individual ever seen.

    When ``hrx_config`` is given, generations on the HRX schedule are
    produced by the split-population combination step instead (see
    ``cxga.hrx``); ``run_cxga`` is the public entry point for that mode.
    """
    config.validate()
    if hrx_config is not None:
        hrx_config.validate()

    start = time.perf_counter()
    rng = np.random.default_rng(config.seed)
    pm = config.pm if config.pm is not None else 1.0 / instance.n
    cost1 = instance._cost1
    evaluator = _Evaluator(instance)

    population = [evaluator.evaluate(random_tour(instance.n, rng))
                  for _ in range(config.ps)]
    best = min(population, key=lambda ind: ind.cost)
    best = Individual(best.tour, best.cost)

    log: list[tuple[int, float, float]] | None = (
        [] if config.log_generations else None)
    generation = 0

    if hrx_config is not None:
        from .hrx import hrx as hrx_step
        interval = hrx_config.schedule_interval()
        stochastic = hrx_config.stochastic_schedule
        hrx_prob = hrx_config.pc_hrx / 100.0
    else:
        interval = 0

    # pc=0 with pm=0 copies the population forever without consuming budget;
    # nothing can change, so stop after the initial evaluation.
    static = (config.pc == 0.0 and pm == 0.0
              and (hrx_config is None or hrx_config.pc_hrx == 0.0))

    while not static and evaluator.count < config.budget:
        generation += 1
        fire_hrx = False
        if hrx_config is not None and hrx_config.pc_hrx > 0:
            if stochastic:
                fire_hrx = rng.random() < hrx_prob
            else:
                fire_hrx = generation % interval == 0
        if fire_hrx:
            population = hrx_step(population, hrx_config, instance, rng,
                                  pm=pm, _evaluator=evaluator)
            # Outer-loop elitism: the previous best survives unless beaten.
            if config.elitism > 0:
                incumbent = min(population, key=lambda ind: ind.cost)
                if incumbent.cost > best.cost:
                    worst_idx = max(range(len(population)),
                                    key=lambda i: population[i].cost)
                    population[worst_idx] = Individual(best.tour, best.cost)
        else:
            elites = _elites(population, config.elitism)
            children = _next_generation(
                population, config.ps - config.elitism, config.crossover,
                config.pc, pm, cost1, rng, evaluator)
            population = elites + children
        assert len(population) == config.ps
        gen_best = min(population, key=lambda ind: ind.cost)
        if gen_best.cost < best.cost:
            best = Individual(gen_best.tour, gen_best.cost)
        if log is not None:
            mean = sum(ind.cost for ind in population) / config.ps
            log.append((generation, best.cost, mean))

    return RunReport(
        best_cost=best.cost,
        best_tour=best.tour.copy(),
        evaluations_used=evaluator.count,
        wall_time=time.perf_counter() - start,
        seed=config.seed,
        generation_log=log,
    )
