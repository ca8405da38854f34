"""Mutable simple undirected graph on a fixed vertex set ``0..n-1``.

Vertices are never deleted; "removing a vertex" means removing all of its
incident edges so that vertex ids stay stable over a whole reduction run.
Neighbor sets are insertion-ordered dicts, which gives O(1) adjacency tests
and a deterministic iteration order for a given operation history.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import DuplicateEdge, MissingEdge, SelfLoop

Edge = tuple[int, int]


def norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "adj", "edge_count")

    def __init__(self, n: int, edges: Iterable[Edge] = ()) -> None:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        self.n = n
        self.adj: list[dict[int, None]] = [{} for _ in range(n)]
        self.edge_count = 0
        for u, v in edges:
            self.add_edge(u, v)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range 0..{self.n - 1}")

    def add_edge(self, u: int, v: int) -> None:
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoop(f"self-loop at {u}")
        au = self.adj[u]
        if v in au:
            raise DuplicateEdge(f"edge {norm(u, v)} already present")
        au[v] = None
        self.adj[v][u] = None
        self.edge_count += 1

    def remove_edge(self, u: int, v: int) -> None:
        au = self.adj[u] if 0 <= u < self.n else {}
        if v not in au:
            raise MissingEdge(f"edge {norm(u, v)} not present")
        del au[v]
        del self.adj[v][u]
        self.edge_count -= 1

    def adjacent(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbors(self, v: int) -> list[int]:
        return list(self.adj[v])

    def edge_weight(self, u: int, v: int) -> int:
        if v not in self.adj[u]:
            raise MissingEdge(f"edge {norm(u, v)} not present")
        return len(self.adj[u]) + len(self.adj[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def edges(self) -> Iterator[Edge]:
        for u, au in enumerate(self.adj):
            for v in au:
                if u < v:
                    yield (u, v)

    def copy(self) -> "Graph":
        g = Graph(self.n)
        g.adj = [dict(a) for a in self.adj]
        g.edge_count = self.edge_count
        return g

    def edge_set(self) -> set[Edge]:
        return set(self.edges())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edge_set() == other.edge_set()

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def max_degree(g: Graph) -> int:
    return g.max_degree()


def edge_weight(g: Graph, u: int, v: int) -> int:
    return g.edge_weight(u, v)


def adjacent(g: Graph, u: int, v: int) -> bool:
    return g.adjacent(u, v)
