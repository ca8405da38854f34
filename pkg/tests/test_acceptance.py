"""End-to-end acceptance checks.

Each test prints one ``[criterion N] PASS|FAIL ...`` line straight to the
terminal, then asserts. The whole module takes several minutes.
"""

from __future__ import annotations

import itertools
import math
import random
import subprocess
import sys
import time
from pathlib import Path

import networkx as nx
import pytest

from planar_la import (
    Graph,
    LinearColoring,
    brute_force_la,
    gen_planar,
    solve,
    solve_bounded,
    solve_highdegree,
    verify,
)
from planar_la.bounded import choose_k
from planar_la.cli import bench_row, main
from planar_la.errors import EngineFailure, NoConfigurationFound, QueueExhausted
from planar_la.fileio import format_graph
from planar_la.highdegree import highdegree_k

from graphs import complete, cycle, octahedron, to_networkx
from oracles import ColorModel, audit_operations

TESTS = Path(__file__).parent


@pytest.fixture
def report(capsys):
    def _report(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[criterion {number}] {'PASS' if ok else 'FAIL'} {detail}")

    return _report


def log_sizes(count: int, lo: int, hi: int) -> list[int]:
    step = math.log(hi / lo) / (count - 1)
    return [round(lo * math.exp(i * step)) for i in range(count)]


def planar_with_delta(n: int, deltas, seed: int) -> Graph:
    """A generated planar graph whose maximum degree lies in ``deltas``."""
    for attempt in itertools.count():
        target = deltas[(seed + attempt) % len(deltas)]
        g = gen_planar(n, target, seed * 1000 + attempt)
        if g.max_degree() in deltas:
            return g


def test_bounded_engine_uses_five_colors(report):
    sizes = log_sizes(200, 100, 10_000)
    failures = []
    t0 = time.perf_counter()
    for i, n in enumerate(sizes):
        g = planar_with_delta(n, (9, 10), i)
        col = solve_bounded(g)
        rep = verify(g, col)
        if not (col.k == 5 and rep.valid and rep.colors_used <= 5):
            failures.append((n, i, rep.summary()))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 30
    report(1, ok, f"200 graphs, delta 9-10, n<=10^4: {len(failures)} failures, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 30


def test_highdegree_engine_uses_half_delta_colors(report):
    # mostly mid-sized graphs, plus a few at the top of the range
    sizes = [100_000 if i % 50 == 0 else n for i, n in enumerate(log_sizes(200, 100, 10_000))]
    deltas = tuple(range(11, 41))
    failures = []
    t0 = time.perf_counter()
    for i, n in enumerate(sizes):
        g = planar_with_delta(n, deltas[i % 30 :] + deltas[: i % 30], i)
        delta = g.max_degree()
        col = solve_highdegree(g)
        rep = verify(g, col)
        if not (col.k == math.ceil(delta / 2) and rep.valid):
            failures.append((n, i, delta, rep.summary()))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 120
    report(2, ok, f"200 graphs, delta 11-40, n<=10^5: {len(failures)} failures, {elapsed:.1f}s")
    assert not failures
    assert elapsed < 120


def small_planar_family():
    """Atlas graphs up to 7 vertices plus random ones on 8 and 9 vertices."""
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 0 or h.number_of_edges() > 14:
            continue
        if nx.is_connected(h) and nx.check_planarity(h)[0]:
            yield Graph(h.number_of_nodes(), list(h.edges()))
    rng = random.Random(9)
    made = 0
    while made < 600:
        n = rng.choice((8, 9))
        pairs = list(itertools.combinations(range(n), 2))
        edges = rng.sample(pairs, rng.randint(n - 1, 14))
        h = nx.Graph(edges)
        h.add_nodes_from(range(n))
        if nx.is_connected(h) and nx.check_planarity(h)[0]:
            made += 1
            yield Graph(n, edges)


def test_solver_against_exact_oracle(report):
    anchors = {"C3": (cycle(3), 2), "K4": (complete(4), 2), "octahedron": (octahedron(), 3)}
    bad_anchor = [name for name, (g, la) in anchors.items() if brute_force_la(g) != la]
    violations = []
    count = 0
    for g in small_planar_family():
        count += 1
        la = brute_force_la(g)
        col = solve(g)
        rep = verify(g, col)
        if not (rep.valid and la <= rep.colors_used <= max(la, 5)):
            violations.append((sorted(g.edges()), la, rep.colors_used))
    ok = not violations and not bad_anchor
    report(3, ok, f"{count} connected planar graphs, {len(violations)} violations, anchors ok={not bad_anchor}")
    assert not bad_anchor
    assert not violations, violations[:3]


def test_bench_scales_like_n_log_n(report):
    rows = [bench_row(2**e, 10, 1) for e in range(14, 21)]
    ratios = [r["ratio"] for r in rows]
    spread = max(ratios) / min(ratios)
    # first size with about a million edges
    million = next(r for r in rows if r["m"] >= 1_000_000)
    verified = all(r["verified"] for r in rows)
    ok = spread <= 2.5 and million["time"] < 60 and verified
    report(
        4,
        ok,
        f"n=2^14..2^20 ratio spread {spread:.2f}, m={million['m']} in {million['time']:.1f}s",
    )
    assert verified
    assert spread <= 2.5
    assert million["time"] < 60


def test_reducible_configurations_never_run_out(report, tmp_path, capsys):
    rng = random.Random(5)
    runs = 0
    stuck = []
    invalid = []
    for i in range(10_000):
        n = rng.randint(4, 70)
        g = gen_planar(n, rng.randint(3, 30), rng.randrange(2**32))
        delta = g.max_degree()
        for engine, solver, k in (
            ("bounded", solve_bounded, choose_k(delta)),
            ("high", solve_highdegree, highdegree_k(delta)),
        ):
            runs += 1
            try:
                col = solver(g, k)
            except (NoConfigurationFound, QueueExhausted) as exc:
                stuck.append((i, engine, type(exc).__name__))
                continue
            if not verify(g, col).valid:
                invalid.append((i, engine))

    with pytest.raises(NoConfigurationFound) as info:
        solve_bounded(complete(7), 3)
    assert "residual graph" in info.value.diagnostic
    with pytest.raises(QueueExhausted):
        solve_highdegree(complete(13), 6)
    src = tmp_path / "k7.txt"
    src.write_text(format_graph(complete(7)))
    code = main(["solve", str(src), "--k", "3"])
    err = capsys.readouterr().err
    cli_ok = code == 2 and "engine failure" in err

    ok = not stuck and not invalid and cli_ok
    report(5, ok, f"{runs} engine runs on planar graphs: {len(stuck)} stuck; K7 --k 3 exit {code}")
    assert not stuck, stuck[:5]
    assert not invalid, invalid[:5]
    assert cli_ok


def test_extension_figure_suite(report):
    proc = subprocess.run(
        [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(TESTS / "test_extensions.py")],
        capture_output=True,
        text=True,
        cwd=TESTS.parent,
        check=False,
    )
    tail = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr
    report(6, proc.returncode == 0, f"extension fixtures: {tail}")
    assert proc.returncode == 0, proc.stdout[-2000:]


def test_path_structure_audit(report):
    rng = random.Random(7)
    total = 0
    bad = 0
    for _ in range(100):
        n = rng.choice((5, 12, 30, 80, 200))
        k = rng.randint(1, 4)
        bad += audit_operations(LinearColoring(n, k), ColorModel(k), n, 10_000, rng)
        total += 10_000
    report(7, bad == 0, f"{total} random operations, {bad} disagreements with BFS")
    assert bad == 0
