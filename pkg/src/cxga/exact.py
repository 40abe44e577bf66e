"""Exact brute-force solver for tiny instances; the ground truth used to
check the GA and the operators."""

from __future__ import annotations

import numpy as np

from ._kernels import brute_force_kernel
from .errors import ConfigError
from .tsplib import Instance

MAX_EXACT_N = 11  # (n-1)!/2 tours; 11 keeps the worst case under ~1.8M


def brute_force_optimum(instance: Instance) -> tuple[float, np.ndarray]:
    """Minimum tour cost and one optimal tour, by exhaustive enumeration.

    City 1 is fixed first and the orientation is canonicalized (second city
    label < last city label), halving and de-rotating the search space.
    Deterministic; refuses instances with more than MAX_EXACT_N cities.
    """
    if instance.n > MAX_EXACT_N:
        raise ConfigError(
            f"brute force is capped at n <= {MAX_EXACT_N}; "
            f"got n = {instance.n}")
    cost, tour = brute_force_kernel(instance._cost1, instance.n)
    return float(cost), tour
