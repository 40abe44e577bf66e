"""Crossover and mutation operators.

The MSCX family builds one offspring per application by greedy sequential
construction and consumes no randomness; RX builds two offspring from random
position subsets; mutation is a per-gene random swap. Operators take explicit
``numpy.random.Generator`` streams where they need randomness, so they are
pure given their inputs and safe to run concurrently with independent
streams.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import apply_swaps_kernel, rx_fill_kernel, scx_kernel
from .errors import ConfigError
from .tour import require_valid_tour
from .tsplib import Instance


@dataclass(frozen=True)
class CrossoverKind:
    """Tagged choice of crossover: mscx, mscx_radius (with radius r >= 1),
    or rx (with selection percentage 0..100)."""

    kind: str
    r: int = 1
    pr: float = 0.0

    def __post_init__(self):
        if self.kind not in ("mscx", "mscx_radius", "rx"):
            raise ConfigError(f"unknown crossover kind {self.kind!r}")
        if self.kind == "mscx_radius" and self.r < 1:
            raise ConfigError(f"mscx_radius needs r >= 1, got {self.r}")
        if self.kind == "rx" and not 0.0 <= self.pr <= 100.0:
            raise ConfigError(f"rx needs 0 <= pr <= 100, got {self.pr}")

    @classmethod
    def mscx(cls) -> "CrossoverKind":
        return cls("mscx")

    @classmethod
    def mscx_radius(cls, r: int) -> "CrossoverKind":
        return cls("mscx_radius", r=int(r))

    @classmethod
    def rx(cls, pr: float) -> "CrossoverKind":
        return cls("rx", pr=float(pr))

    @property
    def children_per_application(self) -> int:
        return 2 if self.kind == "rx" else 1


def mscx(p1, p2, instance: Instance, return_fallback_count: bool = False):
    """Sequential constructive crossover.

    The offspring starts at the first city of ``p1``. Each step appends the
    cheaper of the two parents' first unvisited successors of the current
    city (scanning each parent cyclically; cost tie -> the parent-2
    candidate). Steps where both scans wrapped past their parent's end take
    the first unvisited city of parent 1 instead; these are the fallback
    steps reported by ``return_fallback_count``.

    Deterministic: no randomness is consumed.
    """
    t1 = require_valid_tour(p1, instance.n)
    t2 = require_valid_tour(p2, instance.n)
    offspring, fallbacks = scx_kernel(t1, t2, instance._cost1, 1)
    if return_fallback_count:
        return offspring, fallbacks
    return offspring


def mscx_radius(p1, p2, instance: Instance, r: int,
                return_fallback_count: bool = False):
    """MSCX variant differing only in the fallback step: up to ``r`` distinct
    unvisited cities are collected scanning parent 1 then parent 2 from the
    start, and the one nearest to the current city is appended (tie -> first
    collected). With r=1 this is exactly mscx."""
    if r < 1:
        raise ConfigError(f"mscx_radius needs r >= 1, got {r}")
    t1 = require_valid_tour(p1, instance.n)
    t2 = require_valid_tour(p2, instance.n)
    offspring, fallbacks = scx_kernel(t1, t2, instance._cost1, int(r))
    if return_fallback_count:
        return offspring, fallbacks
    return offspring


def rx_positions(n: int, pr: float, rng: np.random.Generator) -> np.ndarray:
    """The k = round(pr*n/100) distinct positions copied from the first
    parent (round half up, clamped to 0..n)."""
    k = int(np.floor(pr * n / 100.0 + 0.5))
    k = max(0, min(n, k))
    return np.asarray(rng.choice(n, size=k, replace=False), dtype=np.int64)


def rx(p1, p2, pr: float, rng: np.random.Generator):
    """Random position-preserving crossover; returns two offspring.

    Offspring 1 keeps the cities of ``p1`` at k randomly chosen positions and
    fills the remaining slots left to right with the unused cities in ``p2``
    order; offspring 2 swaps the parent roles, with fresh random positions.
    """
    if not 0.0 <= pr <= 100.0:
        raise ConfigError(f"rx needs 0 <= pr <= 100, got {pr}")
    n = len(p1)
    t1 = require_valid_tour(p1, n)
    t2 = require_valid_tour(p2, n)
    c1 = rx_fill_kernel(t1, t2, rx_positions(n, pr, rng))
    c2 = rx_fill_kernel(t2, t1, rx_positions(n, pr, rng))
    return c1, c2


def mutate(tour, pm: float, rng: np.random.Generator,
           return_swap_count: bool = False):
    """Per-gene swap mutation.

    Each position independently triggers with probability ``pm``; a triggered
    position is swapped with a uniformly random other position. Swaps are
    applied in ascending position order, so the output is deterministic given
    the stream. Always returns a fresh array.
    """
    if not 0.0 <= pm <= 1.0:
        raise ConfigError(f"mutation rate must be in [0, 1], got {pm}")
    n = len(tour)
    t = require_valid_tour(tour, n)
    triggers = np.flatnonzero(rng.random(n) < pm)
    if n < 2:
        triggers = triggers[:0]  # no other position to swap with
    if triggers.size == 0:
        out, count = t.copy(), 0
    else:
        partners = rng.integers(0, n - 1, size=triggers.size)
        out, count = apply_swaps_kernel(t, triggers, partners)
    if return_swap_count:
        return out, count
    return out
