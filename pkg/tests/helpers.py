"""Shared drawing sources for the tests: small fixtures and random drawings."""
from __future__ import annotations

import random
from itertools import combinations

from bipdense import (
    gen_2planar,
    gen_3planar,
    gen_8sticks_fixture,
    gen_cylinder,
    gen_fan,
    gen_ic,
    gen_nic,
    gen_rac,
    new_geometric,
    new_graph,
    planarize_geometric,
)
from bipdense.analysis import conflict_graph
from bipdense.builder import Builder
from bipdense.errors import DrawingError, HomotopicMultiedge


def small_fixtures() -> dict:
    """One small instance of every construction, keyed by name."""
    return {
        "ic-16": gen_ic(16),
        "nic-16": gen_nic(16),
        "nic-20": gen_nic(20),
        "rac-1": gen_rac(1),
        "rac-2": gen_rac(2),
        "fan-k4-8": gen_fan("k4", 8),
        "fan-k55e": gen_fan("k55e", 10),
        "fan-k2_multi-8": gen_fan("k2_multi", 8),
        "fan-k4_multi-9": gen_fan("k4_multi", 9),
        "fan-k55e_multi": gen_fan("k55e_multi", 10),
        "2planar-16": gen_2planar(16),
        "2planar-20": gen_2planar(20),
        "2planar-16-multi": gen_2planar(16, True),
        "3planar-4": gen_3planar(4),
        "cylinder-3": gen_cylinder(3),
        "8sticks": gen_8sticks_fixture(),
    }


def topological(d):
    return d if not hasattr(d, "coords") else planarize_geometric(d)


def random_geometric(rng: random.Random, max_m: int = 20, grid: int = 40):
    """Straight-line bipartite drawing on random integer points; retries on degenerate input."""
    while True:
        na, nb = rng.randint(1, 5), rng.randint(1, 5)
        pts = rng.sample([(x, y) for x in range(grid) for y in range(grid)], na + nb)
        parts = ["A"] * na + ["B"] * nb
        pairs = [(a, na + b) for a in range(na) for b in range(nb)]
        edges = rng.sample(pairs, rng.randint(0, min(max_m, len(pairs))))
        try:
            return new_geometric(new_graph(na + nb, parts, edges), pts)
        except DrawingError:
            continue


def random_subdrawing(rng: random.Random, d, max_m: int = 20):
    """Keep a random set of at most ``max_m`` edges of a topological drawing (a valid one)."""
    d = topological(d)
    while True:
        keep = set(rng.sample(range(d.m), min(max_m, d.m, rng.randint(1, max_m))))
        b = Builder.from_drawing(d)
        for e in range(d.m):
            if e not in keep:
                b.remove_edge(e)
        try:
            return b.to_drawing()
        except HomotopicMultiedge:
            # dropping edges left two parallel copies bounding an empty region
            continue


def brute_force_plane_size(d) -> int:
    """Largest crossing-free edge set, enumerated subset by subset inside each conflict component.

    Edges in different components of the crossing-conflict graph never
    interact, so the maximum is the sum of per-component maxima.
    """
    adj = conflict_graph(d)
    seen: set[int] = set()
    total = 0
    for e in range(d.m):
        if e in seen:
            continue
        comp, stack = [], [e]
        seen.add(e)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        best = 0
        for r in range(len(comp), 0, -1):
            if any(all(b not in adj[a] for a, b in combinations(sub, 2)) for sub in combinations(comp, r)):
                best = r
                break
        total += best
    return total
