"""Split-population combination step (HRX) and the CXGA run entry point.

HRX splits the population by cost into a best part P1 and a rest part P2,
evolves them separately for ``ng`` rounds (P1 with a mix of RX and
MSCX_Radius, P2 with plain MSCX), then merges the results back into a
population of the original size. CXGA is the generational engine with HRX
fired on a schedule of generations.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from ._kernels import rx_fill_kernel, scx_kernel
from .errors import ConfigError
from .operators import rx_positions
from .tour import Individual
from .tsplib import Instance


@dataclass(frozen=True)
class HrxConfig:
    """Parameters of the combination step.

    ``pc_hrx`` is the percentage of outer generations that execute HRX; the
    default schedule fires deterministically every round(100/pc_hrx)-th
    generation, or per-generation Bernoulli(pc_hrx/100) draws when
    ``stochastic_schedule`` is set. ``pn`` is accepted for config-file
    compatibility but has no effect; a warning is emitted if it is set.
    """

    first_part_pct: float = 90.0
    prx: float = 40.0
    pr: float = 30.0
    r: int = 5
    ng: int = 1
    pc_hrx: float = 15.0
    stochastic_schedule: bool = False
    pn: float | None = None

    def validate(self) -> None:
        for label, value in (("first_part_pct", self.first_part_pct),
                             ("prx", self.prx), ("pr", self.pr),
                             ("pc_hrx", self.pc_hrx)):
            if not 0.0 <= value <= 100.0:
                raise ConfigError(f"{label} must be in [0, 100], got {value}")
        if self.r < 1:
            raise ConfigError(f"r must be >= 1, got {self.r}")
        if self.ng < 1:
            raise ConfigError(f"ng must be >= 1, got {self.ng}")

    def schedule_interval(self) -> int:
        if self.pc_hrx <= 0:
            return 0
        return max(1, int(math.floor(100.0 / self.pc_hrx + 0.5)))


def split_population(population: list[Individual],
                     first_part_pct: float) -> tuple[list[Individual], list[Individual]]:
    """Sort by cost ascending and split: P1 = the best
    round(first_part_pct*|P|/100) individuals, P2 = the rest. A split that
    would leave either part empty is clamped to keep one individual in each,
    with a warning."""
    size = len(population)
    if size < 2:
        raise ConfigError(f"cannot split a population of size {size}")
    size1 = int(math.floor(first_part_pct * size / 100.0 + 0.5))
    if size1 < 1 or size1 > size - 1:
        clamped = min(max(size1, 1), size - 1)
        warnings.warn(
            f"first_part_pct={first_part_pct} would leave an empty part for "
            f"|P|={size}; clamping the first part to {clamped}",
            stacklevel=2)
        size1 = clamped
    ordered = sorted(population, key=lambda ind: ind.cost)
    return ordered[:size1], ordered[size1:]


def _round_even(x: float) -> int:
    """Nearest even integer; exact midpoints round up."""
    lo = 2 * math.floor(x / 2.0)
    hi = lo + 2
    return lo if (x - lo) < (hi - x) else hi


def num_in_rx(part1_size: int, prx: float) -> int:
    """Number of P1 offspring produced by RX pairings: prx% of |P1| rounded
    to the nearest even count so the pairing loop emits exactly that many,
    clamped to an even number within 0..|P1|."""
    raw = prx * part1_size / 100.0
    return min(_round_even(raw), 2 * (part1_size // 2))


def hrx(population: list[Individual], cfg: HrxConfig, instance: Instance,
        rng: np.random.Generator, pm: float | None = None,
        _evaluator=None) -> list[Individual]:
    """One HRX invocation; returns a new population of the same size.

    Offspring in the P1 lineage descend only from P1 members, and likewise
    for P2: the two sub-populations never mix until the final merge. Every
    child is mutated (rate ``pm``, default 1/n) and evaluated.
    """
    from .engine import _Evaluator, _mutated, select_parents

    cfg.validate()
    if pm is None:
        pm = 1.0 / instance.n
    evaluator = _evaluator if _evaluator is not None else _Evaluator(instance)
    cost1 = instance._cost1

    part1, part2 = split_population(population, cfg.first_part_pct)
    n_rx = num_in_rx(len(part1), cfg.prx)
    sp, fp = part1, part2

    for _ in range(cfg.ng):
        sp_next: list[Individual] = []
        for _ in range(n_rx // 2):
            pa, pb = select_parents(sp, rng)
            n = pa.tour.shape[0]
            c1 = rx_fill_kernel(pa.tour, pb.tour, rx_positions(n, cfg.pr, rng))
            c2 = rx_fill_kernel(pb.tour, pa.tour, rx_positions(n, cfg.pr, rng))
            for child in (c1, c2):
                child, _ = _mutated(child, pm, rng)
                sp_next.append(evaluator.evaluate(child))
        for _ in range(len(part1) - n_rx):
            pa, pb = select_parents(sp, rng)
            child, _fb = scx_kernel(pa.tour, pb.tour, cost1, cfg.r)
            child, _ = _mutated(child, pm, rng)
            sp_next.append(evaluator.evaluate(child))
        fp_next: list[Individual] = []
        for _ in range(len(part2)):
            pa, pb = select_parents(fp, rng)
            child, _fb = scx_kernel(pa.tour, pb.tour, cost1, 1)
            child, _ = _mutated(child, pm, rng)
            fp_next.append(evaluator.evaluate(child))
        sp, fp = sp_next, fp_next

    return fp + sp


def run_cxga(instance: Instance, ga, hrx_config: HrxConfig):
    """CXGA: the generational engine with HRX generations on the schedule.

    Budget accounting, elitism, determinism and reporting are identical to
    ``run_ga``; with ``pc_hrx=0`` the output is bit-identical to a plain
    ``run_ga`` under the same seed.
    """
    from .engine import run_ga

    if hrx_config.pn is not None:
        warnings.warn("the pn parameter is accepted for compatibility but "
                      "has no effect", stacklevel=2)
    return run_ga(instance, ga, hrx_config=hrx_config)
