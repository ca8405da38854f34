"""Reduction engine for graphs of maximum degree at most 10.

The graph is shrunk one configuration at a time until no edges remain; the
surgeries are logged in a :class:`ReductionTrace`. The empty coloring of the
empty graph is then extended by replaying the trace backwards, one extension
per step. Both phases are loops, so deep traces cannot exhaust the stack.
"""

from __future__ import annotations

import gc
from collections import deque
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Callable, Optional

from .coloring import LinearColoring
from .configurations import LightEdge, ReductionStep, apply_reduction, detect_at, find_any
from .errors import NoConfigurationFound
from .extensions import extend, extend_light_edge
from .graph import Graph


@contextmanager
def no_gc():
    """Suspend the cyclic collector; a solve allocates millions of objects
    that all stay alive until it returns, so collections only cost time."""
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        yield
    finally:
        if was_enabled:
            gc.enable()


def choose_k(delta: int) -> int:
    if delta < 0:
        raise ValueError("maximum degree must be nonnegative")
    return max((delta + 1) // 2, 5)


@dataclass(slots=True)
class ReductionTrace:
    steps: list[ReductionStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def append(self, step: ReductionStep) -> None:
        self.steps.append(step)

    def dump(self) -> str:
        lines = []
        for i, s in enumerate(self.steps):
            rm = " ".join(f"{u}-{v}" for u, v in s.removed_edges)
            add = " ".join(f"{u}-{v}" for u, v in s.added_edges)
            lines.append(f"{i} {s.config} -[{rm}] +[{add}]")
        return "\n".join(lines)


def describe_residual(g: Graph, limit: int = 40) -> str:
    """Human-readable summary of a graph the engine got stuck on."""
    active = [v for v in range(g.n) if g.adj[v]]
    degs = sorted(len(g.adj[v]) for v in active)
    lines = [
        f"residual graph: {len(active)} non-isolated vertices, {g.edge_count} edges",
        f"degree range: {degs[0]}..{degs[-1]}" if degs else "degree range: empty",
    ]
    for v in active[:limit]:
        lines.append(f"  {v} (deg {len(g.adj[v])}): {' '.join(map(str, g.adj[v]))}")
    if len(active) > limit:
        lines.append(f"  ... {len(active) - limit} more vertices")
    return "\n".join(lines)


def _touched(g: Graph, step: ReductionStep) -> list[int]:
    """Vertices whose neighborhood may now host a new configuration."""
    adj = g.adj
    out: dict[int, None] = {}
    for e in step.removed_edges:
        for p in e:
            out[p] = None
            for q in adj[p]:
                out[q] = None
    for e in step.added_edges:
        for p in e:
            out[p] = None
            for q in adj[p]:
                out[q] = None
                for r in adj[q]:
                    out[r] = None
    return list(out)


def reduce_bounded(
    g: Graph,
    k: int,
    audit: Optional[Callable[[Graph, deque], None]] = None,
) -> ReductionTrace:
    """Shrink ``g`` in place to the edgeless graph and return the trace.

    ``audit`` (tests only) is called after every surgery with the graph and the
    pending work queue.
    """
    trace = ReductionTrace()
    steps = trace.steps
    adj = g.adj
    queue: deque[int] = deque(v for v in range(g.n) if adj[v])
    queued = bytearray(g.n)
    for v in queue:
        queued[v] = 1
    push = queue.append
    while queue:
        v = queue.popleft()
        queued[v] = 0
        cfg = detect_at(g, v, k)
        if cfg is None:
            continue
        if type(cfg) is LightEdge:
            # the bulk of all steps; skip the generic revalidation
            a, b = cfg.u, cfg.v
            g.remove_edge(a, b)
            steps.append(ReductionStep(cfg))
            for p in (a, b):
                if not queued[p] and adj[p]:
                    queued[p] = 1
                    push(p)
                for t in adj[p]:
                    if not queued[t]:
                        queued[t] = 1
                        push(t)
        else:
            step = apply_reduction(g, cfg, k)
            steps.append(step)
            for t in _touched(g, step):
                if not queued[t] and adj[t]:
                    queued[t] = 1
                    push(t)
            # v itself may anchor another configuration
            if not queued[v] and adj[v]:
                queued[v] = 1
                push(v)
        if audit is not None:
            audit(g, queue)
    if g.edge_count:
        raise NoConfigurationFound(
            f"no reducible configuration in a graph with {g.edge_count} edges (k={k}); "
            "the input is probably not planar",
            describe_residual(g),
        )
    return trace


def replay(
    n: int,
    k: int,
    trace: ReductionTrace,
    col: Optional[LinearColoring] = None,
    check: bool = False,
    on_step: Optional[Callable[[ReductionStep, str], None]] = None,
) -> LinearColoring:
    """Extend ``col`` (default: empty) backwards over every step of ``trace``."""
    if col is None:
        col = LinearColoring(n, k)
    for step in reversed(trace.steps):
        if type(step.config) is LightEdge:
            case = extend_light_edge(col, step)
        else:
            case = extend(col, step)
        if check:
            col.check_invariants()
        if on_step is not None:
            on_step(step, case)
    return col


def solve_bounded(
    g: Graph,
    k: Optional[int] = None,
    check: bool = False,
    trace_out: Optional[ReductionTrace] = None,
) -> LinearColoring:
    """Color ``g`` with ``k`` colors; ``g`` itself is left untouched."""
    if k is None:
        k = choose_k(g.max_degree())
    with no_gc():
        work = g.copy()
        trace = reduce_bounded(work, k)
        if trace_out is not None:
            trace_out.steps.extend(trace.steps)
        return replay(g.n, k, trace, check=check)


__all__ = [
    "ReductionTrace",
    "choose_k",
    "describe_residual",
    "find_any",
    "no_gc",
    "reduce_bounded",
    "replay",
    "solve_bounded",
]
