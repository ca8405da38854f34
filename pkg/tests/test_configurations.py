from __future__ import annotations

import random
from dataclasses import fields
from itertools import permutations

import pytest

from planar_la.bounded import choose_k
from planar_la.configurations import (
    CONFIG_TYPES,
    ChordedC4,
    LightEdge,
    ReductionStep,
    TwoPairs,
    TwoVertexNonadjacent,
    apply_reduction,
    detect_at,
    find_any,
    undo_step,
)
from planar_la.errors import StaleConfiguration
from planar_la.generate import gen_planar
from planar_la.graph import Graph

from fuzzkit import CORES, build_instance
from graphs import complete, cycle


@pytest.mark.parametrize("delta, k", [(9, 5), (10, 5), (3, 5), (0, 5), (11, 6), (20, 10)])
def test_choose_k(delta, k):
    assert choose_k(delta) == k


def test_triangle_edges_are_light():
    cfg = detect_at(cycle(3), 0, 5)
    assert isinstance(cfg, LightEdge)


def test_chorded_c4_in_heavy_surroundings():
    # z and w share seven neighbors on a path, so every edge at z is heavy for k = 5
    v, z, u, w, p = range(5)
    hs = list(range(5, 12))
    edges = [(z, v), (z, u), (w, u), (w, v), (z, w), (v, p)]
    edges += [(z, h) for h in hs] + [(w, h) for h in hs]
    edges += [(hs[i], hs[i + 1]) for i in range(6)]
    g = Graph(12, edges)
    assert g.degree(z) == g.degree(w) == 10
    assert all(g.degree(z) + g.degree(t) > 11 for t in g.neighbors(z))
    assert detect_at(g, z, 5) == ChordedC4(v, z, u, w)


def test_priority_prefers_light_edge():
    # v is a 2-vertex with nonadjacent neighbors, but its edges are also light
    g = Graph(3, [(0, 1), (0, 2)])
    assert isinstance(detect_at(g, 0, 5), LightEdge)


def _all_candidates(g, k):
    """Every labelled vertex tuple of every configuration type that matches."""
    for cls in CONFIG_TYPES:
        arity = len(fields(cls))
        for labels in permutations(range(g.n), arity):
            cfg = cls(*labels)
            if cfg.matches(g, k):
                yield cfg


def test_k7_with_three_colors_has_no_configuration():
    g = complete(7)
    assert all(detect_at(g, v, 3) is None for v in range(7))
    assert find_any(g, 3) is None
    # independent check: no labelled tuple satisfies any configuration
    assert next(_all_candidates(g, 3), None) is None


def test_exhaustive_matches_agree_with_detection_on_small_graphs():
    # detection finds something exactly when some configuration matches
    rng = random.Random(7)
    for _ in range(60):
        n = rng.choice((6, 7))
        density = rng.choice((0.5, 0.7, 0.8))
        edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < density]
        g = Graph(n, edges)
        if g.max_degree() > 6:
            continue
        found = find_any(g, 3)
        exists = next(_all_candidates(g, 3), None) is not None
        assert (found is not None) == exists
        if found is not None:
            assert found.matches(g, 3)


def test_surgery_edge_lists():
    assert ReductionStep(LightEdge(0, 1)).removed_edges == [(0, 1)]
    assert ReductionStep(LightEdge(0, 1)).added_edges == []
    step = ReductionStep(TwoVertexNonadjacent(0, 1, 2))
    assert step.removed_edges == [(0, 1), (0, 2)]
    assert step.added_edges == [(1, 2)]
    step = ReductionStep(TwoPairs(0, 1, 2, 3))
    assert step.removed_edges == [(0, 1), (0, 2), (0, 3)]
    assert step.added_edges == [(1, 2)]


def test_two_pairs_surgery_drops_two_edges():
    g = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 3), (2, 3)])
    before = g.edge_count
    apply_reduction(g, TwoPairs(0, 1, 2, 3), 5)
    assert g.edge_count == before - 2
    assert g.adjacent(1, 2) and g.degree(0) == 0


def test_stale_configuration_rejected():
    g = cycle(4)
    with pytest.raises(StaleConfiguration):
        apply_reduction(g, TwoVertexNonadjacent(0, 1, 2), 5)
    with pytest.raises(StaleConfiguration):
        apply_reduction(g, LightEdge(0, 2), 5)


@pytest.mark.parametrize("name", sorted(CORES))
def test_each_type_is_detected_and_reverses(name):
    rng = random.Random(11)
    core = {x for e in CORES[name][0] for x in e}
    hits = 0
    for _ in range(60):
        built = build_instance(name, 3, rng)
        if built is None:
            continue
        g, _ = built
        for v in sorted(core):
            cfg = detect_at(g, v, 3)
            if type(cfg).__name__ != name:
                continue
            hits += 1
            assert cfg.matches(g, 3)
            snapshot = g.copy()
            step = apply_reduction(g, cfg, 3)
            assert g.edge_count < snapshot.edge_count
            undo_step(g, step)
            assert g == snapshot
    assert hits > 0, f"{name} never detected"


def test_detected_configurations_are_valid_on_planar_graphs():
    for seed in range(30):
        for delta in (4, 7, 10):
            g = gen_planar(60, delta, seed)
            k = choose_k(delta)
            while g.edge_count:
                cfg = find_any(g, k)
                assert cfg is not None
                assert cfg.matches(g, k)
                before = g.edge_count
                apply_reduction(g, cfg, k)
                assert g.edge_count < before
