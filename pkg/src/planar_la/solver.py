"""Engine selection shared by the library entry point and the CLI."""

from __future__ import annotations

from typing import Optional

from .bounded import ReductionTrace, choose_k, solve_bounded
from .coloring import LinearColoring
from .errors import InvalidParams
from .graph import Graph
from .highdegree import highdegree_k, solve_highdegree

ENGINES = ("auto", "bounded", "high")

# below this degree the bounded engine reaches max(ceil(D/2), 5) colors
HIGH_DEGREE_FROM = 11


def pick_engine(delta: int, engine: str = "auto") -> str:
    if engine not in ENGINES:
        raise InvalidParams(f"unknown engine {engine!r}; choose from {', '.join(ENGINES)}")
    if engine == "auto":
        return "high" if delta >= HIGH_DEGREE_FROM else "bounded"
    return engine


def default_k(delta: int, engine: str) -> int:
    return highdegree_k(delta) if engine == "high" else choose_k(delta)


def check_k(delta: int, k: int, engine: str) -> None:
    """Reject color counts the engine's reductions cannot work with.

    Every reduction needs maximum degree at most 2k. The small-degree
    configurations need k >= 3; the high-degree engine needs k >= 6 because
    its nice edges have weight up to 13.
    """
    floor = 6 if engine == "high" else 3
    if k < floor:
        raise InvalidParams(f"the {engine} engine needs k >= {floor}, got {k}")
    if delta > 2 * k:
        raise InvalidParams(f"maximum degree {delta} exceeds 2k = {2 * k}")


def solve(
    g: Graph,
    k: Optional[int] = None,
    engine: str = "auto",
    trace_out: Optional[ReductionTrace] = None,
) -> LinearColoring:
    """Partition the edges of a planar graph into few linear forests."""
    delta = g.max_degree()
    engine = pick_engine(delta, engine)
    if k is None:
        k = default_k(delta, engine)
    check_k(delta, k, engine)
    if engine == "high":
        return solve_highdegree(g, k, trace_out=trace_out)
    return solve_bounded(g, k, trace_out=trace_out)
