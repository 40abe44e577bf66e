"""Compiled inner loops for the crossover operators and cost evaluation.

All kernels work on 1-based city labels together with the padded
``(n+1) x (n+1)`` cost matrix held by ``Instance`` (row/column 0 unused), so
no label translation happens on the hot path. Kernels are deterministic and
consume no randomness; callers draw any random numbers beforehand.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def tour_cost_kernel(tour, cost1):
    total = 0.0
    n = tour.shape[0]
    for i in range(n - 1):
        total += cost1[tour[i], tour[i + 1]]
    return total + cost1[tour[n - 1], tour[0]]


@njit(cache=True)
def scx_kernel(p1, p2, cost1, r):
    """Greedy sequential construction shared by the MSCX family.

    Starting from the first city of ``p1``, each step scans both parents
    cyclically from the current city and appends the cheaper of the two first
    unvisited successors (cost tie -> the parent-2 candidate). When *both*
    scans had to wrap past the end of their parent (no unvisited successor in
    either linear remainder), the step is a fallback step: the first up-to-r
    distinct unvisited cities found scanning parent 1 then parent 2 from the
    start are collected and the one nearest to the current city is appended
    (tie -> first collected). ``r == 1`` therefore appends the parent-1
    candidate unconditionally, which is plain MSCX.

    Returns (offspring, number of fallback steps).
    """
    n = p1.shape[0]
    pos1 = np.empty(n + 1, np.int64)
    pos2 = np.empty(n + 1, np.int64)
    for i in range(n):
        pos1[p1[i]] = i
        pos2[p2[i]] = i
    visited = np.zeros(n + 1, np.bool_)
    offspring = np.empty(n, np.int64)
    current = p1[0]
    offspring[0] = current
    visited[current] = True
    fallbacks = 0
    collected = np.empty(r, np.int64)

    for k in range(1, n):
        cand1 = 0
        wrapped1 = False
        start = pos1[current]
        for step in range(1, n):
            j = start + step
            w = j >= n
            if w:
                j -= n
            city = p1[j]
            if not visited[city]:
                cand1 = city
                wrapped1 = w
                break
        cand2 = 0
        wrapped2 = False
        start = pos2[current]
        for step in range(1, n):
            j = start + step
            w = j >= n
            if w:
                j -= n
            city = p2[j]
            if not visited[city]:
                cand2 = city
                wrapped2 = w
                break

        if wrapped1 and wrapped2:
            fallbacks += 1
            count = 0
            best = 0
            best_cost = np.inf
            for j in range(n):
                city = p1[j]
                if not visited[city]:
                    seen = False
                    for t in range(count):
                        if collected[t] == city:
                            seen = True
                            break
                    if not seen:
                        collected[count] = city
                        count += 1
                        d = cost1[current, city]
                        if d < best_cost:
                            best_cost = d
                            best = city
                        if count == r:
                            break
            if count < r:
                for j in range(n):
                    city = p2[j]
                    if not visited[city]:
                        seen = False
                        for t in range(count):
                            if collected[t] == city:
                                seen = True
                                break
                        if not seen:
                            collected[count] = city
                            count += 1
                            d = cost1[current, city]
                            if d < best_cost:
                                best_cost = d
                                best = city
                            if count == r:
                                break
            nxt = best
        else:
            if cost1[current, cand1] < cost1[current, cand2]:
                nxt = cand1
            else:
                nxt = cand2

        offspring[k] = nxt
        visited[nxt] = True
        current = nxt

    return offspring, fallbacks


@njit(cache=True)
def rx_fill_kernel(keeper, donor, positions):
    """Position-preserving fill: cities of ``keeper`` at ``positions`` stay
    put; every other slot is filled left to right with the unused cities in
    ``donor`` order."""
    n = keeper.shape[0]
    offspring = np.zeros(n, np.int64)
    used = np.zeros(n + 1, np.bool_)
    for idx in positions:
        city = keeper[idx]
        offspring[idx] = city
        used[city] = True
    j = 0
    for i in range(n):
        if offspring[i] == 0:
            while used[donor[j]]:
                j += 1
            offspring[i] = donor[j]
            used[donor[j]] = True
    return offspring


@njit(cache=True)
def apply_swaps_kernel(tour, trigger_idx, partner_raw):
    """Swap each triggered position with its drawn partner, in index order.

    ``partner_raw[t]`` is drawn from 0..n-2; values >= trigger index are
    shifted up by one so the partner is uniform over the *other* positions.
    Returns (mutated copy, number of swaps applied).
    """
    out = tour.copy()
    for t in range(trigger_idx.shape[0]):
        i = trigger_idx[t]
        j = partner_raw[t]
        if j >= i:
            j += 1
        tmp = out[i]
        out[i] = out[j]
        out[j] = tmp
    return out, trigger_idx.shape[0]


@njit(cache=True)
def brute_force_kernel(cost1, n):
    """Exhaustive search over all tours with city 1 fixed first and the
    orientation canonicalized by second city < last city.

    Enumerates the (second, last) pairs explicitly and fills the middle
    positions by iterative depth-first search; (n-1)!/2 tours in total.
    Returns (cost, tour).
    """
    best_cost = np.inf
    best_tour = np.empty(n, np.int64)
    perm = np.empty(n, np.int64)
    used = np.zeros(n + 1, np.bool_)
    acc = np.zeros(n, np.float64)   # acc[d]: chain cost 1 .. perm[d-1]
    cand = np.zeros(n, np.int64)    # cand[d]: last city tried at depth d
    perm[0] = 1
    used[1] = True
    for second in range(2, n + 1):
        for last in range(second + 1, n + 1):
            perm[1] = second
            perm[n - 1] = last
            used[second] = True
            used[last] = True
            close_cost = cost1[last, 1]
            if n == 3:
                total = cost1[1, second] + cost1[second, last] + close_cost
                if total < best_cost:
                    best_cost = total
                    for i in range(n):
                        best_tour[i] = perm[i]
                used[second] = False
                used[last] = False
                continue
            depth = 2
            acc[2] = cost1[1, second]
            cand[2] = 0
            while depth >= 2:
                c = cand[depth] + 1
                while c <= n and used[c]:
                    c += 1
                if c > n:
                    cand[depth] = 0
                    depth -= 1
                    if depth >= 2:
                        used[perm[depth]] = False
                    continue
                cand[depth] = c
                if depth == n - 2:
                    total = (acc[depth] + cost1[perm[depth - 1], c]
                             + cost1[c, last] + close_cost)
                    if total < best_cost:
                        best_cost = total
                        perm[depth] = c
                        for i in range(n):
                            best_tour[i] = perm[i]
                else:
                    perm[depth] = c
                    used[c] = True
                    acc[depth + 1] = acc[depth] + cost1[perm[depth - 1], c]
                    depth += 1
                    cand[depth] = 0
            used[second] = False
            used[last] = False
    return best_cost, best_tour
