"""Independent checker for k-linear colorings.

Only the raw edge -> color assignment is read; profile tables and path forests
of the coloring are ignored so that a bug there cannot hide itself.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Union

from .coloring import LinearColoring
from .graph import Edge, Graph, norm

DEGREE_EXCEEDED = "DegreeExceeded"
MONOCHROMATIC_CYCLE = "MonochromaticCycle"
UNCOLORED_EDGE = "UncoloredEdge"
COLOR_OUT_OF_RANGE = "ColorOutOfRange"
EXTRA_EDGE = "ExtraEdge"


@dataclass(slots=True)
class Violation:
    kind: str
    witness: tuple

    def __str__(self) -> str:
        return f"{self.kind} {self.witness}"


@dataclass(slots=True)
class VerificationReport:
    valid: bool
    colors_used: int
    violations: list[Violation] = field(default_factory=list)
    # color -> number of paths, and color -> Counter(path length in edges -> count)
    path_counts: dict[int, int] = field(default_factory=dict)
    path_lengths: dict[int, Counter] = field(default_factory=dict)

    def kinds(self) -> set[str]:
        return {v.kind for v in self.violations}

    def summary(self) -> str:
        head = f"valid: {str(self.valid).lower()}  colors used: {self.colors_used}"
        lines = [head]
        for c in sorted(self.path_counts):
            hist = " ".join(f"{L}:{n}" for L, n in sorted(self.path_lengths[c].items()))
            lines.append(f"  color {c}: {self.path_counts[c]} paths  lengths {hist}")
        for v in self.violations[:50]:
            lines.append(f"  violation: {v}")
        if len(self.violations) > 50:
            lines.append(f"  ... {len(self.violations) - 50} more violations")
        return "\n".join(lines)


class _DSU:
    __slots__ = ("parent",)

    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent.get(root, root) != root:
            root = parent[root]
        while x != root:
            nxt = parent.get(x, x)
            parent[x] = root
            x = nxt
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[ra] = rb
        return True


def verify(
    g: Graph,
    col: Union[LinearColoring, Mapping[Edge, int]],
    k: int | None = None,
) -> VerificationReport:
    if isinstance(col, LinearColoring):
        assignment = col.assignment()
        k = col.k if k is None else k
    else:
        assignment = {norm(*e): c for e, c in col.items()}
    violations: list[Violation] = []

    graph_edges = g.edge_set()
    for e in sorted(graph_edges):
        if e not in assignment:
            violations.append(Violation(UNCOLORED_EDGE, e))
    for e in sorted(assignment):
        if e not in graph_edges:
            violations.append(Violation(EXTRA_EDGE, e))

    by_color: dict[int, list[Edge]] = defaultdict(list)
    for e, c in assignment.items():
        if k is not None and not 1 <= c <= k:
            violations.append(Violation(COLOR_OUT_OF_RANGE, (e, c)))
        by_color[c].append(e)

    path_counts: dict[int, int] = {}
    path_lengths: dict[int, Counter] = {}
    for c in sorted(by_color):
        edges = by_color[c]
        deg: Counter = Counter()
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        for x, d in sorted(deg.items()):
            if d > 2:
                violations.append(Violation(DEGREE_EXCEEDED, (x, c, d)))
        dsu = _DSU()
        for e in sorted(edges):
            if not dsu.union(*e):
                violations.append(Violation(MONOCHROMATIC_CYCLE, (e, c)))
        comp_edges: Counter = Counter(dsu.find(u) for u, _ in edges)
        path_counts[c] = len(comp_edges)
        path_lengths[c] = Counter(comp_edges.values())

    valid = not violations
    return VerificationReport(valid, len(by_color), violations, path_counts, path_lengths)
