"""Chromosome representation: tours over 1-based city labels.

A tour is a numpy int64 array holding a permutation of 1..n. Tours are value
types; nothing in this package mutates one in place.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import tour_cost_kernel
from .errors import InvalidTourError
from .tsplib import Instance


def as_tour(cities) -> np.ndarray:
    """Coerce a label sequence to the canonical int64 array form."""
    return np.ascontiguousarray(np.asarray(cities, dtype=np.int64))


def validate_tour(tour, n: int) -> str | None:
    """Return None if ``tour`` is a permutation of 1..n, else a description
    of the first duplicate or out-of-range label."""
    t = np.asarray(tour)
    if t.shape != (n,):
        return f"expected {n} labels, got {t.shape}"
    if t.size and np.issubdtype(t.dtype, np.integer):
        if t.min() >= 1 and t.max() <= n:
            if (np.bincount(t.astype(np.int64), minlength=n + 1)[1:] == 1).all():
                return None
    # walk the labels to name the first offending one
    seen = np.zeros(n + 1, dtype=bool)
    for label in t:
        if not float(label).is_integer():
            return f"label {label!r} is not an integer"
        label = int(label)
        if label < 1 or label > n:
            return f"label {label} out of range 1..{n}"
        if seen[label]:
            return f"duplicate label {label}"
        seen[label] = True
    return None


def require_valid_tour(tour, n: int) -> np.ndarray:
    t = as_tour(tour)
    problem = validate_tour(t, n)
    if problem is not None:
        raise InvalidTourError(problem)
    return t


def tour_cost(tour, instance: Instance) -> float:
    """Closed-tour cost: consecutive edge costs plus the edge closing the
    cycle from the last city back to the first."""
    t = require_valid_tour(tour, instance.n)
    return float(tour_cost_kernel(t, instance._cost1))


def random_tour(n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform random permutation of 1..n; deterministic given the stream."""
    if n < 3:
        raise InvalidTourError(f"need at least 3 cities, got {n}")
    return rng.permutation(n).astype(np.int64) + 1


@dataclass
class Individual:
    """A tour with its cached cost on the instance it was evaluated on."""

    tour: np.ndarray
    cost: float

    @classmethod
    def evaluated(cls, tour: np.ndarray, instance: Instance) -> "Individual":
        return cls(tour=tour, cost=float(tour_cost_kernel(tour, instance._cost1)))
