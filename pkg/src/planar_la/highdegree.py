"""Reduction engine for graphs of maximum degree at least 11.

Only three kinds of reductions are needed once k >= 6: removing a *nice* edge
(a light edge of a special form), contracting a 2-vertex whose neighbors are
nonadjacent, and removing an edge of a configuration with two 2-vertices on a
common (2k)-vertex. Nice edges wait in ``Q_e``; 2-vertices squeezed between two
(2k)-vertices wait in ``Q_2``. A 2-vertex that is not yet reducible parks its
triangle at both of its (2k)-neighbors, so the next 2-vertex arriving at either
of them finds a partner in constant time.

Queue entries and stored triangles are validated when they are read and
dropped if stale, so updates after an edge removal stay O(1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .bounded import ReductionTrace, describe_residual, no_gc, replay
from .coloring import LinearColoring
from .configurations import (
    ConfigA,
    ConfigB,
    LightEdge,
    ReductionStep,
    TwoVertexNonadjacent,
    apply_reduction,
)
from .errors import QueueExhausted
from .graph import Edge, Graph, norm

# edges touching a vertex of degree above this are re-tested only via the
# 2k-1 rule below; at most O(1) incident edges are re-tested otherwise
RETEST_DEGREE = 12


def highdegree_k(delta: int) -> int:
    return max((delta + 1) // 2, 6)


def is_nice(g: Graph, e: Edge, k: int) -> bool:
    du = len(g.adj[e[0]])
    dv = len(g.adj[e[1]])
    lo, hi = (du, dv) if du <= dv else (dv, du)
    return lo + hi <= 13 or lo == 1 or (lo == 2 and hi <= 2 * k - 1)


@dataclass(slots=True)
class Queues:
    n: int
    k: int
    edges: deque = field(default_factory=deque)
    edge_keys: set = field(default_factory=set)
    twos: deque = field(default_factory=deque)
    two_set: set = field(default_factory=set)
    # vertex -> (2-vertex, other (2k)-vertex) of a stored triangle
    triangle: dict = field(default_factory=dict)

    def push_edge(self, u: int, v: int) -> None:
        key = u * self.n + v if u < v else v * self.n + u
        if key not in self.edge_keys:
            self.edge_keys.add(key)
            self.edges.append(key)

    def pop_edge(self) -> Edge:
        key = self.edges.popleft()
        self.edge_keys.discard(key)
        return divmod(key, self.n)

    def push_two(self, x: int) -> None:
        if x not in self.two_set:
            self.two_set.add(x)
            self.twos.append(x)

    def pop_two(self) -> int:
        x = self.twos.popleft()
        self.two_set.discard(x)
        return x


def _squeezed(g: Graph, x: int, k: int) -> bool:
    """2-vertex whose both neighbors have degree 2k."""
    ax = g.adj[x]
    if len(ax) != 2:
        return False
    top = 2 * k
    v, w = ax
    return len(g.adj[v]) == top and len(g.adj[w]) == top


def init_queues(g: Graph, k: int) -> Queues:
    q = Queues(g.n, k)
    for u, v in g.edges():
        if is_nice(g, (u, v), k):
            q.push_edge(u, v)
    for x in range(g.n):
        if _squeezed(g, x, k):
            q.push_two(x)
    return q


def _retest(g: Graph, z: int, q: Queues) -> None:
    k = q.k
    for t in g.adj[z]:
        if is_nice(g, (z, t), k):
            q.push_edge(z, t)


def update_queues_after_removal(g: Graph, e: Edge, q: Queues, k: int) -> None:
    for z in e:
        d = len(g.adj[z])
        if d <= RETEST_DEGREE or d == 2 * k - 1:
            # at 2k-1 the vertex turns every 2-neighbor edge nice
            _retest(g, z, q)
        if d == 2 and _squeezed(g, z, k):
            q.push_two(z)


def _stored(g: Graph, q: Queues, v: int) -> Optional[tuple[int, int]]:
    """Triangle stored at ``v`` if it still exists, else None."""
    rec = q.triangle.get(v)
    if rec is None:
        return None
    y, other = rec
    adj = g.adj
    ay = adj[y]
    if len(ay) == 2 and v in ay and other in ay and other in adj[v]:
        return rec
    del q.triangle[v]
    return None


def reduce_highdegree(g: Graph, k: int, check_invariant: bool = False) -> ReductionTrace:
    """Shrink ``g`` in place to the edgeless graph and return the trace."""
    trace = ReductionTrace()
    q = init_queues(g, k)

    def commit(cfg) -> None:
        step: ReductionStep = apply_reduction(g, cfg, k)
        trace.append(step)
        for e in step.removed_edges:
            update_queues_after_removal(g, e, q, k)

    while g.edge_count:
        if check_invariant:
            assert_invariant(g, q, k)
        if q.edges:
            u, v = q.pop_edge()
            if v in g.adj[u] and is_nice(g, (u, v), k):
                commit(LightEdge(u, v))
            continue
        if not q.twos:
            raise QueueExhausted(
                f"no nice edge and no queued 2-vertex with {g.edge_count} edges left (k={k}); "
                "the input is probably not planar",
                describe_residual(g),
            )
        x = q.pop_two()
        if not _squeezed(g, x, k):
            continue
        v, w = g.adj[x]
        # configuration A: another 2-vertex on the same pair v, w
        for p, r in ((v, w), (w, v)):
            rec = _stored(g, q, p)
            if rec is not None and rec[1] == r and rec[0] != x:
                commit(ConfigA(p, r, rec[0], x))
                break
        else:
            if w not in g.adj[v]:
                commit(TwoVertexNonadjacent(x, v, w))
                continue
            # configuration B: a 2-vertex on a triangle with p and a third vertex
            for p, r in ((v, w), (w, v)):
                rec = _stored(g, q, p)
                if rec is not None and rec[1] != r and rec[0] != x:
                    commit(ConfigB(p, rec[1], r, rec[0], x))
                    break
            else:
                q.triangle[v] = (x, w)
                q.triangle[w] = (x, v)
    return trace


def assert_invariant(g: Graph, q: Queues, k: int) -> None:
    """Full rescan of the queue invariant (tests only)."""
    n = g.n
    for u, v in g.edges():
        if is_nice(g, (u, v), k):
            assert u * n + v in q.edge_keys, f"nice edge {(u, v)} not queued"
    for x in range(n):
        if _squeezed(g, x, k) and x not in q.two_set:
            v, w = g.adj[x]
            ok = all(
                _stored(g, q, p) == (x, r) for p, r in ((v, w), (w, v))
            )
            assert ok, f"2-vertex {x} neither queued nor stored"


def solve_highdegree(
    g: Graph,
    k: Optional[int] = None,
    check: bool = False,
    trace_out: Optional[ReductionTrace] = None,
) -> LinearColoring:
    if k is None:
        k = highdegree_k(g.max_degree())
    if k < 6:
        raise ValueError("the high-degree engine needs k >= 6")
    if g.max_degree() > 2 * k:
        raise ValueError(f"maximum degree {g.max_degree()} exceeds 2k = {2 * k}")
    with no_gc():
        work = g.copy()
        trace = reduce_highdegree(work, k, check_invariant=check)
        if trace_out is not None:
            trace_out.steps.extend(trace.steps)
        return replay(g.n, k, trace, check=check)
