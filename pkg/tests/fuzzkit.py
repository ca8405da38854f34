"""Random instances around a single configuration, for extension fuzzing.

A fuzz instance is a graph ``G`` that contains one configuration with fixed
labels ``0..5`` plus a pool of outside vertices wired densely to the core, and
a uniformly shuffled greedy k-linear coloring of the reduced graph. Dense
outside wiring produces the long monochromatic paths that the deeper
recoloring branches need.
"""

from __future__ import annotations

import random

from planar_la.coloring import LinearColoring
from planar_la.configurations import (
    ChordedC4,
    ConfigA,
    ConfigB,
    CubicSmall,
    LightEdge,
    TwoCubic,
    TwoPairs,
    TwoVertexNonadjacent,
    TwoWithThree,
    apply_reduction,
)
from planar_la.graph import Graph, norm

# name -> (core edges, fixed degrees, forbidden pairs, config factory)
CORES = {
    "LightEdge": ([(0, 1)], {}, set(), lambda: LightEdge(0, 1)),
    "TwoVertexNonadjacent": (
        [(0, 1), (0, 2)],
        {0: 2},
        {(1, 2)},
        lambda: TwoVertexNonadjacent(0, 1, 2),
    ),
    "ConfigA": (
        [(0, 1), (2, 0), (2, 1), (3, 0), (3, 1)],
        {2: 2, 3: 2},
        set(),
        lambda: ConfigA(0, 1, 2, 3),
    ),
    "ConfigB": (
        [(3, 0), (3, 1), (4, 0), (4, 2), (0, 1), (0, 2)],
        {3: 2, 4: 2},
        set(),
        lambda: ConfigB(0, 1, 2, 3, 4),
    ),
    "TwoPairs": (
        [(0, 1), (0, 2), (0, 3), (1, 3), (3, 2)],
        {0: 3},
        {(1, 2)},
        lambda: TwoPairs(0, 1, 2, 3),
    ),
    "ChordedC4": (
        [(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)],
        {0: 3, 2: 2},
        set(),
        lambda: ChordedC4(0, 1, 2, 3),
    ),
    "TwoWithThree": (
        [(0, 1), (0, 2), (1, 2), (3, 1), (3, 4), (3, 5), (4, 5), (4, 1), (5, 1)],
        {0: 2, 3: 3},
        set(),
        lambda: TwoWithThree(0, 1, 2, 3, 4, 5),
    ),
    "CubicSmall": (
        [(0, 1), (0, 4), (1, 2), (1, 3)],
        {1: 3, 4: 3},
        set(),
        lambda: CubicSmall(0, 1, 2, 3, 4),
    ),
    "TwoCubic": (
        [(1, 0), (1, 3), (1, 2), (4, 5), (4, 3), (4, 2), (0, 3), (0, 2), (3, 2), (5, 3), (5, 2)],
        {1: 3, 4: 3},
        set(),
        lambda: TwoCubic(0, 1, 2, 3, 4, 5),
    ),
}


def _caps(name: str, k: int, rng: random.Random) -> dict[int, int]:
    if name == "LightEdge":
        du = rng.randint(1, 2 * k)
        return {0: du, 1: min(2 * k, 2 * k + 1 - du)}
    if name == "CubicSmall":
        return {0: 2 * k - 1}
    return {}


def build_instance(name: str, k: int, rng: random.Random, pool: int | None = None):
    """Return (G, cfg) with ``cfg`` matching ``G``; None if the draw failed."""
    core, fixed, forbidden, make = CORES[name]
    cfg = make()
    ncore = max(max(e) for e in core) + 1
    if pool is None:
        pool = rng.randint(3, 9)
    n = ncore + pool
    g = Graph(n, core)
    caps = {v: 2 * k for v in range(n)}
    caps.update(_caps(name, k, rng))
    forbidden = {norm(*p) for p in forbidden}

    if name == "CubicSmall":
        # x1 x2 linked to each other or to v; y needs two more neighbors
        opts = [(2, 3), (2, 0), (3, 0)]
        picks = [p for p in opts if rng.random() < 0.5] or [rng.choice(opts)]
        for p in picks:
            g.add_edge(*p)

    free_set = set(range(n)) - set(fixed)
    for v, d in fixed.items():
        # y of the cubic configuration must stay off {x1, x2}
        banned = {2, 3} if name == "CubicSmall" and v == 4 else set()
        opts = [t for t in free_set - banned if not g.adjacent(v, t) and t != v]
        for t in rng.sample(opts, d - g.degree(v)):
            g.add_edge(v, t)

    free = [v for v in range(n) if v not in fixed]
    pairs = [
        (a, b)
        for i, a in enumerate(free)
        for b in free[i + 1 :]
        if (a, b) not in forbidden and not g.adjacent(a, b)
    ]
    rng.shuffle(pairs)
    density = rng.choice((0.3, 0.6, 0.9, 1.0))
    for a, b in pairs:
        if rng.random() > density:
            continue
        if g.degree(a) < caps[a] and g.degree(b) < caps[b]:
            g.add_edge(a, b)
    if not cfg.matches(g, k):
        return None
    return g, cfg


def random_coloring(g: Graph, k: int, rng: random.Random, tries: int = 200):
    """Greedy k-linear coloring with random edge order and random color choice."""
    edges = list(g.edges())
    for _ in range(tries):
        rng.shuffle(edges)
        col = LinearColoring(g.n, k)
        ok = True
        for u, v in edges:
            opts = [
                c
                for c in range(1, k + 1)
                if col.count(u, c) < 2
                and col.count(v, c) < 2
                and not col.same_path(c, u, v)
            ]
            if not opts:
                ok = False
                break
            col.assign(u, v, rng.choice(opts))
        if ok:
            return col
    return None


def fuzz_instance(name: str, k: int, rng: random.Random):
    """Return (G, step, coloring of the reduced graph) or None."""
    built = build_instance(name, k, rng)
    if built is None:
        return None
    g, cfg = built
    reduced = g.copy()
    step = apply_reduction(reduced, cfg, k)
    col = random_coloring(reduced, k, rng)
    if col is None:
        return None
    return g, step, col
