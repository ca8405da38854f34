"""Reducible configurations: detection, validation and graph surgery.

Every configuration is detected from one *anchor* vertex that is adjacent to
(or is) every other vertex of the configuration, with the single exception of
:class:`CubicSmall` whose far vertices ``x1``/``x2`` sit at distance two. After
a surgery it is therefore enough to re-examine the endpoints of removed edges
and their neighbors, plus distance two around endpoints of added edges.

Vertex names follow the labels used in the correctness arguments, so the
extension code in :mod:`planar_la.extensions` reads like the case analysis.
"""

from __future__ import annotations

from dataclasses import astuple, dataclass
from typing import Optional, Union

from .errors import StaleConfiguration
from .graph import Edge, Graph, norm


@dataclass(frozen=True, slots=True)
class LightEdge:
    """Edge ``uv`` with deg(u) + deg(v) <= 2k + 1."""

    u: int
    v: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.v)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        return g.adjacent(self.u, self.v) and g.degree(self.u) + g.degree(self.v) <= 2 * k + 1


@dataclass(frozen=True, slots=True)
class TwoVertexNonadjacent:
    """2-vertex ``v`` whose neighbors ``u``, ``z`` are not adjacent."""

    v: int
    u: int
    z: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.v), norm(self.v, self.z)]

    def added(self) -> list[Edge]:
        return [norm(self.u, self.z)]

    def matches(self, g: Graph, k: int) -> bool:
        v, u, z = self.v, self.u, self.z
        return g.degree(v) == 2 and g.adjacent(v, u) and g.adjacent(v, z) and not g.adjacent(u, z)


@dataclass(frozen=True, slots=True)
class ConfigA:
    """2-vertices ``w``, ``z`` both adjacent to exactly ``u`` and ``v``; uv is an edge."""

    u: int
    v: int
    w: int
    z: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.z)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        u, v, w, z = self.u, self.v, self.w, self.z
        if len({u, v, w, z}) != 4:
            return False
        return (
            g.degree(w) == 2
            and g.degree(z) == 2
            and g.adjacent(u, v)
            and g.adjacent(w, u)
            and g.adjacent(w, v)
            and g.adjacent(z, u)
            and g.adjacent(z, v)
        )


@dataclass(frozen=True, slots=True)
class ConfigB:
    """2-vertices ``w`` (other neighbor ``v``) and ``z`` (other neighbor ``t``)
    sharing only ``u``; both uv and ut are edges."""

    u: int
    v: int
    t: int
    w: int
    z: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.z)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        u, v, t, w, z = self.u, self.v, self.t, self.w, self.z
        if len({u, v, t, w, z}) != 5:
            return False
        return (
            g.degree(w) == 2
            and g.degree(z) == 2
            and g.adjacent(w, u)
            and g.adjacent(w, v)
            and g.adjacent(z, u)
            and g.adjacent(z, t)
            and g.adjacent(u, v)
            and g.adjacent(u, t)
        )


@dataclass(frozen=True, slots=True)
class TwoPairs:
    """3-vertex ``v`` with neighbors ``u``, ``w``, ``z``: uz and zw edges, uw not."""

    v: int
    u: int
    w: int
    z: int

    def removed(self) -> list[Edge]:
        v = self.v
        return [norm(self.u, v), norm(v, self.w), norm(v, self.z)]

    def added(self) -> list[Edge]:
        return [norm(self.u, self.w)]

    def matches(self, g: Graph, k: int) -> bool:
        v, u, w, z = self.v, self.u, self.w, self.z
        return (
            g.degree(v) == 3
            and g.adjacent(v, u)
            and g.adjacent(v, w)
            and g.adjacent(v, z)
            and g.adjacent(u, z)
            and g.adjacent(z, w)
            and not g.adjacent(u, w)
        )


@dataclass(frozen=True, slots=True)
class ChordedC4:
    """4-cycle v-z-u-w with chord zw, deg(v) = 3 and deg(u) = 2."""

    v: int
    z: int
    u: int
    w: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.z)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        v, z, u, w = self.v, self.z, self.u, self.w
        if len({v, z, u, w}) != 4:
            return False
        return (
            g.degree(v) == 3
            and g.degree(u) == 2
            and g.adjacent(v, z)
            and g.adjacent(z, u)
            and g.adjacent(u, w)
            and g.adjacent(w, v)
            and g.adjacent(z, w)
        )


@dataclass(frozen=True, slots=True)
class TwoWithThree:
    """2-vertex ``u`` on triangle uvw, and 3-vertex ``z`` adjacent to ``v``
    whose neighbors ``v``, ``x``, ``y`` are pairwise adjacent."""

    u: int
    v: int
    w: int
    z: int
    x: int
    y: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.v)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        u, v, w, z, x, y = astuple(self)
        if len({u, v, w, z, x, y}) != 6:
            return False
        adj = g.adjacent
        return (
            g.degree(u) == 2
            and g.degree(z) == 3
            and adj(u, v)
            and adj(u, w)
            and adj(v, w)
            and adj(z, v)
            and adj(z, x)
            and adj(z, y)
            and adj(x, y)
            and adj(x, v)
            and adj(y, v)
        )


@dataclass(frozen=True, slots=True)
class CubicSmall:
    """Vertex ``v`` of degree <= 2k - 1 with 3-neighbors ``x`` and ``y``; the
    other neighbors ``x1``, ``x2`` of ``x`` are adjacent to each other or to ``v``."""

    v: int
    x: int
    x1: int
    x2: int
    y: int

    def removed(self) -> list[Edge]:
        return [norm(self.v, self.x)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        v, x, x1, x2, y = self.v, self.x, self.x1, self.x2, self.y
        if len({v, x, x1, x2, y}) != 5:
            return False
        adj = g.adjacent
        return (
            g.degree(v) <= 2 * k - 1
            and g.degree(x) == 3
            and g.degree(y) == 3
            and adj(v, x)
            and adj(v, y)
            and adj(x, x1)
            and adj(x, x2)
            and (adj(x1, x2) or adj(x1, v) or adj(x2, v))
        )


@dataclass(frozen=True, slots=True)
class TwoCubic:
    """3-vertices ``v`` (neighbors u, z, w) and ``x`` (neighbors y, z, w) with
    uz, uw, zw, yz, yw all edges."""

    u: int
    v: int
    w: int
    z: int
    x: int
    y: int

    def removed(self) -> list[Edge]:
        return [norm(self.u, self.v)]

    def added(self) -> list[Edge]:
        return []

    def matches(self, g: Graph, k: int) -> bool:
        u, v, w, z, x, y = astuple(self)
        if len({u, v, w, z, x, y}) != 6:
            return False
        adj = g.adjacent
        return (
            g.degree(v) == 3
            and g.degree(x) == 3
            and adj(v, u)
            and adj(v, z)
            and adj(v, w)
            and adj(x, y)
            and adj(x, z)
            and adj(x, w)
            and adj(u, z)
            and adj(u, w)
            and adj(z, w)
            and adj(y, z)
            and adj(y, w)
        )


Configuration = Union[
    LightEdge,
    TwoVertexNonadjacent,
    ConfigA,
    ConfigB,
    TwoPairs,
    ChordedC4,
    TwoWithThree,
    CubicSmall,
    TwoCubic,
]

CONFIG_TYPES = (
    LightEdge,
    TwoVertexNonadjacent,
    ConfigA,
    ConfigB,
    TwoPairs,
    ChordedC4,
    TwoWithThree,
    CubicSmall,
    TwoCubic,
)


class ReductionStep:
    """One surgery. The edge lists are derived from the configuration, so a
    step costs a single pointer on top of the configuration itself."""

    __slots__ = ("config",)

    def __init__(self, config: Configuration) -> None:
        self.config = config

    @property
    def removed_edges(self) -> list[Edge]:
        return self.config.removed()

    @property
    def added_edges(self) -> list[Edge]:
        return self.config.added()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ReductionStep):
            return NotImplemented
        return self.config == other.config

    def __repr__(self) -> str:
        return f"ReductionStep({self.config})"


def undo_step(g: Graph, step: ReductionStep) -> None:
    """Reverse a surgery on ``g`` (used by tests and the trace dump)."""
    for u, v in step.added_edges:
        g.remove_edge(u, v)
    for u, v in step.removed_edges:
        g.add_edge(u, v)


def apply_reduction(g: Graph, cfg: Configuration, k: int) -> ReductionStep:
    if not cfg.matches(g, k):
        raise StaleConfiguration(f"{cfg} no longer present")
    for u, v in cfg.removed():
        g.remove_edge(u, v)
    for u, v in cfg.added():
        g.add_edge(u, v)
    return ReductionStep(cfg)


# -- detection -----------------------------------------------------------------


def detect_at(g: Graph, v: int, k: int) -> Optional[Configuration]:
    """Return a configuration anchored at ``v``, or None.

    Types are tried in a fixed priority order; within a type, candidates are
    scanned in neighbor insertion order.
    """
    adj = g.adj
    av = adj[v]
    dv = len(av)
    if dv == 0:
        return None
    limit = 2 * k + 1 - dv
    for u in av:
        if len(adj[u]) <= limit:
            return LightEdge(*norm(v, u))

    if dv == 2:
        u, z = av
        if z not in adj[u]:
            return TwoVertexNonadjacent(v, u, z)

    # 2-neighbors of v, each with its other neighbor
    twos = []
    threes = []
    for u in av:
        du = len(adj[u])
        if du == 2:
            a, b = adj[u]
            twos.append((u, b if a == v else a))
        elif du == 3:
            threes.append(u)

    if len(twos) >= 2:
        cfg = _config_ab(g, v, twos)
        if cfg is not None:
            return cfg

    if dv == 3:
        cfg = _two_pairs(g, v)
        if cfg is not None:
            return cfg

    for u, w in twos:
        cfg = _chorded_c4(g, v, u, w)
        if cfg is not None:
            return cfg

    if twos and threes:
        cfg = _two_with_three(g, v, twos, threes)
        if cfg is not None:
            return cfg

    if len(threes) >= 2:
        if dv <= 2 * k - 1:
            cfg = _cubic_small(g, v, threes)
            if cfg is not None:
                return cfg
        cfg = _two_cubic(g, v, threes)
        if cfg is not None:
            return cfg
    return None


def _config_ab(g: Graph, u: int, twos: list[tuple[int, int]]) -> Optional[Configuration]:
    au = g.adj[u]
    good = [(w, o) for w, o in twos if o in au]
    for i in range(len(good)):
        w, ow = good[i]
        for j in range(i + 1, len(good)):
            z, oz = good[j]
            if ow == oz:
                return ConfigA(u, ow, w, z)
    for i in range(len(good)):
        w, ow = good[i]
        for j in range(i + 1, len(good)):
            z, oz = good[j]
            if ow != oz and ow != z and oz != w:
                return ConfigB(u, ow, oz, w, z)
    return None


def _two_pairs(g: Graph, v: int) -> Optional[TwoPairs]:
    adj = g.adj
    p, q, r = adj[v]
    pq = q in adj[p]
    pr = r in adj[p]
    qr = r in adj[q]
    if pq + pr + qr != 2:
        return None
    # the missing pair is (u, w); the common vertex is z
    if not pq:
        return TwoPairs(v, p, q, r)
    if not pr:
        return TwoPairs(v, p, r, q)
    return TwoPairs(v, q, r, p)


def _chorded_c4(g: Graph, z: int, u: int, w: int) -> Optional[ChordedC4]:
    adj = g.adj
    az = adj[z]
    if w not in az:
        return None
    aw = adj[w]
    for v in az:
        if v != u and v != w and len(adj[v]) == 3 and v in aw:
            return ChordedC4(v, z, u, w)
    return None


def _two_with_three(
    g: Graph, v: int, twos: list[tuple[int, int]], threes: list[int]
) -> Optional[TwoWithThree]:
    adj = g.adj
    av = adj[v]
    tris = [(u, w) for u, w in twos if w in av]
    if not tris:
        return None
    for z in threes:
        x, y = (t for t in adj[z] if t != v)
        if y in adj[x] and x in av and y in av:
            for u, w in tris:
                if w != x and w != y and w != z:
                    return TwoWithThree(u, v, w, z, x, y)
    return None


def _cubic_small(g: Graph, v: int, threes: list[int]) -> Optional[CubicSmall]:
    adj = g.adj
    av = adj[v]
    for x in threes:
        x1, x2 = (t for t in adj[x] if t != v)
        if not (x2 in adj[x1] or x1 in av or x2 in av):
            continue
        for y in threes:
            if y != x and y != x1 and y != x2:
                return CubicSmall(v, x, x1, x2, y)
    return None


def _two_cubic(g: Graph, w: int, threes: list[int]) -> Optional[TwoCubic]:
    adj = g.adj
    aw = adj[w]
    for i, v in enumerate(threes):
        nv = [t for t in adj[v] if t != w]
        for x in threes[i + 1 :]:
            if x in nv:
                continue
            nx = [t for t in adj[x] if t != w]
            common = [t for t in nv if t in nx]
            if len(common) != 1:
                continue
            z = common[0]
            u = nv[0] if nv[1] == z else nv[1]
            y = nx[0] if nx[1] == z else nx[1]
            if (
                z in aw
                and u in aw
                and y in aw
                and z in adj[u]
                and z in adj[y]
            ):
                return TwoCubic(u, v, w, z, x, y)
    return None


def find_any(g: Graph, k: int) -> Optional[Configuration]:
    """Full scan (used for audits and diagnostics)."""
    for v in range(g.n):
        cfg = detect_at(g, v, k)
        if cfg is not None:
            return cfg
    return None


def config_vertices(cfg: Configuration) -> tuple[int, ...]:
    return astuple(cfg)
