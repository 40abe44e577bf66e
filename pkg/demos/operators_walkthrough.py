#!/usr/bin/env python3
"""A tour of the three crossover operators on a small hand-built instance.

Run: python3 demos/operators_walkthrough.py
"""

import numpy as np

import cxga

# Nine cities on a ring with one in the middle; exact distances keep the
# greedy choices easy to follow.
angles = np.linspace(0, 2 * np.pi, 8, endpoint=False)
coords = np.concatenate([np.stack([np.cos(angles), np.sin(angles)], axis=1),
                         [[0.1, 0.1]]])
inst = cxga.instance_from_coords(coords, name="ring9", rounding="exact")
print(f"instance {inst.name}: n={inst.n}")

rng = np.random.default_rng(7)
p1 = cxga.random_tour(inst.n, rng)
p2 = cxga.random_tour(inst.n, rng)
print("parent 1:", p1)
print("parent 2:", p2)
print(f"parent costs: {cxga.tour_cost(p1, inst):.3f} / "
      f"{cxga.tour_cost(p2, inst):.3f}")

# MSCX walks from the first city of parent 1, repeatedly taking the cheaper
# of the two parents' next unvisited cities. It is deterministic, so calling
# it twice gives the same child.
child, fallbacks = cxga.mscx(p1, p2, inst, return_fallback_count=True)
print("\nMSCX offspring:", child)
print(f"cost {cxga.tour_cost(child, inst):.3f}, "
      f"fallback steps: {fallbacks}")
assert np.array_equal(child, cxga.mscx(p1, p2, inst))

# The radius variant only differs on fallback steps (no unvisited city left
# after the current one in either parent): it gathers up to r candidates and
# takes the nearest. With r=1 it IS mscx; larger r can pick a different city
# on those steps.
for r in (1, 3, 6):
    variant = cxga.mscx_radius(p1, p2, inst, r)
    marker = "(same as MSCX)" if np.array_equal(variant, child) else ""
    print(f"MSCX_Radius r={r}: {variant} "
          f"cost {cxga.tour_cost(variant, inst):.3f} {marker}")

# Parents that exhaust each other early make the difference visible: here the
# third step is a fallback step, MSCX keeps the first unvisited city of
# parent 1, while r=2 reaches the nearer candidate.
fb_inst = cxga.instance_from_coords(
    [(0, 0), (2, 5), (2, 3), (2, 0), (10, 0)], name="fb5", rounding="exact")
fp1, fp2 = [1, 5, 2, 4, 3], [1, 4, 2, 5, 3]
plain, fb = cxga.mscx(fp1, fp2, fb_inst, return_fallback_count=True)
wide = cxga.mscx_radius(fp1, fp2, fb_inst, 2)
print(f"\nfallback demo ({fb} fallback step): "
      f"MSCX {plain.tolist()} vs MSCX_Radius(r=2) {wide.tolist()}")
print(f"costs: {cxga.tour_cost(plain, fb_inst):.3f} vs "
      f"{cxga.tour_cost(wide, fb_inst):.3f}")

# RX keeps a random pr% of positions from one parent and fills the rest in
# the other parent's order; it returns two children and is cost-blind.
c1, c2 = cxga.rx(p1, p2, 30, rng)
print("\nRX(pr=30) offspring 1:", c1)
print("RX(pr=30) offspring 2:", c2)

# Boundary percentages reproduce the parents exactly.
e1, e2 = cxga.rx(p1, p2, 100, rng)
assert np.array_equal(e1, p1) and np.array_equal(e2, p2)

# Swap mutation with rate 1/n triggers about one swap per child.
mutant = cxga.mutate(child, 1.0 / inst.n, rng)
print("\nmutated MSCX offspring:", mutant)
print("valid permutation:", cxga.validate_tour(mutant, inst.n) is None)
