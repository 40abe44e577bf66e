#!/usr/bin/env python3
"""Check the GA against the exact solver on instances small enough to
enumerate.

Run: python3 demos/small_instance_exact_vs_ga.py
"""

import numpy as np

import cxga

for n, seed in ((7, 1), (9, 2), (11, 3)):
    inst = cxga.random_euclidean_instance(n, seed=seed)
    optimum, opt_tour = cxga.brute_force_optimum(inst)

    report = cxga.run_ga(inst, cxga.GaConfig(ps=50, budget=20_000, seed=99))
    gap = 100 * (report.best_cost - optimum) / optimum
    print(f"n={n:>2}: exact {optimum:8.1f}   GA {report.best_cost:8.1f} "
          f"({gap:+.2f}%)   evaluations {report.evaluations_used}")
    print(f"      exact tour {opt_tour.tolist()}")
    print(f"      GA tour    {report.best_tour.tolist()}")

# The same (instance, config, seed) triple always reproduces the same run.
inst = cxga.random_euclidean_instance(9, seed=2)
cfg = cxga.GaConfig(ps=50, budget=20_000, seed=99)
a, b = cxga.run_ga(inst, cfg), cxga.run_ga(inst, cfg)
assert a.best_cost == b.best_cost
assert np.array_equal(a.best_tour, b.best_tour)
print("\nrerun with the same seed is identical:", a.best_cost)
