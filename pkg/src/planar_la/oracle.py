"""Exact linear arboricity of small graphs by backtracking."""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph

MAX_EDGES = 18


def _colorable(n: int, edges: list[tuple[int, int]], k: int) -> bool:
    m = len(edges)
    deg = [[0] * (k + 1) for _ in range(n)]
    # per color union-find with undo: parent arrays and a change log
    parent = [list(range(n)) for _ in range(k + 1)]

    def find(p: list[int], x: int) -> int:
        while p[x] != x:
            x = p[x]
        return x

    def place(i: int, used: int) -> bool:
        if i == m:
            return True
        u, v = edges[i]
        # a color index above used + 1 is equivalent to used + 1 by renaming
        for c in range(1, min(used + 1, k) + 1):
            du, dv = deg[u], deg[v]
            if du[c] == 2 or dv[c] == 2:
                continue
            p = parent[c]
            ru, rv = find(p, u), find(p, v)
            if ru == rv:
                continue
            du[c] += 1
            dv[c] += 1
            p[ru] = rv
            if place(i + 1, max(used, c)):
                return True
            p[ru] = ru
            du[c] -= 1
            dv[c] -= 1
        return False

    return place(0, 0)


def brute_force_la(g: Graph) -> int:
    """Minimum number of linear forests covering the edges of ``g``."""
    edges = sorted(g.edges())
    if len(edges) > MAX_EDGES:
        raise TooLarge(f"{len(edges)} edges exceed the oracle bound of {MAX_EDGES}")
    if not edges:
        return 0
    k = (g.max_degree() + 1) // 2
    while not _colorable(g.n, edges, k):
        k += 1
    return k
