"""Named small graphs used across the test suite."""

from __future__ import annotations

from itertools import combinations

from planar_la.graph import Graph


def path(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def wheel(rim: int) -> Graph:
    """Hub 0 joined to the cycle 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph(rim + 1, edges)


def double_wheel(rim: int) -> Graph:
    """Two hubs 0 and 1 joined to the cycle 2..rim+1."""
    ring = list(range(2, rim + 2))
    edges = [(h, r) for h in (0, 1) for r in ring]
    edges += [(ring[i], ring[(i + 1) % rim]) for i in range(rim)]
    return Graph(rim + 2, edges)


def octahedron() -> Graph:
    # K6 minus the perfect matching 03, 14, 25
    return Graph(6, [(a, b) for a, b in combinations(range(6), 2) if b - a != 3])


def icosahedron() -> Graph:
    top, bottom = 0, 11
    upper = list(range(1, 6))
    lower = list(range(6, 11))
    edges = [(top, u) for u in upper] + [(bottom, w) for w in lower]
    for i in range(5):
        edges.append((upper[i], upper[(i + 1) % 5]))
        edges.append((lower[i], lower[(i + 1) % 5]))
        edges.append((upper[i], lower[i]))
        edges.append((upper[i], lower[(i + 1) % 5]))
    return Graph(12, edges)


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
