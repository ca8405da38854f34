"""Extend a coloring of the reduced graph back over one reduction step.

Each ``extend_*`` function receives the coloring of the graph *after* the
surgery (with the restored edges still uncolored) and leaves a coloring of the
graph *before* it. The graph itself is never consulted: an edge of the
configuration exists exactly when it is colored, because every other edge of
the configuration survives the surgery.

Recolorings go through :meth:`LinearColoring.apply`, which rejects any state
with a vertex carrying three edges of one color or a monochromatic cycle. A
branch that the case analysis claims is safe but is rejected therefore surfaces
as :class:`ExtensionFailed` instead of a silently broken coloring.

Every function returns a short label naming the branch that produced the final
coloring. Multi-round extensions join the labels of all rounds with ``>``.
"""

from __future__ import annotations

from typing import Callable

from .coloring import LinearColoring
from .configurations import (
    ChordedC4,
    ConfigA,
    ConfigB,
    CubicSmall,
    LightEdge,
    ReductionStep,
    TwoCubic,
    TwoPairs,
    TwoVertexNonadjacent,
    TwoWithThree,
)
from .errors import ColoringError, ExtensionFailed, UnreachableCase


def _first_free(col: LinearColoring, v: int) -> int:
    free = col.free_colors(v)
    if not free:
        raise ExtensionFailed(f"no free color at vertex {v}")
    return free[0]


def _apply(col: LinearColoring, changes, case: str) -> str:
    try:
        col.apply(changes)
    except ColoringError as exc:
        raise ExtensionFailed(f"case {case}: {exc}") from exc
    return case


def extend_light_edge(col: LinearColoring, step: ReductionStep) -> str:
    cfg: LightEdge = step.config
    u, v = cfg.u, cfg.v
    cnt = col._count
    bu = u * col._stride
    bv = v * col._stride
    for c in range(1, col.k + 1):
        cu = cnt[bu + c]
        cv = cnt[bv + c]
        # a color missing at one end cannot close a cycle
        if (cu == 0 and cv <= 1) or (cv == 0 and cu <= 1):
            col.assign(u, v, c)
            return "direct"
    raise ExtensionFailed(f"no color for light edge {u}-{v}")


def extend_two_vertex(col: LinearColoring, step: ReductionStep) -> str:
    cfg: TwoVertexNonadjacent = step.config
    v, u, z = cfg.v, cfg.u, cfg.z
    a = col.color_of(u, z)
    if a is None:
        raise ExtensionFailed(f"contracted edge {u}-{z} is not colored")
    return _apply(col, [(u, z, None), (u, v, a), (v, z, a)], "subdivide")


def extend_config_a(col: LinearColoring, step: ReductionStep) -> str:
    cfg: ConfigA = step.config
    u, v, w, z = cfg.u, cfg.v, cfg.w, cfg.z
    C = col.color_of
    a = _first_free(col, u)
    if C(v, z) != a or not col.same_path(a, u, v):
        return _apply(col, [(u, z, a)], "direct")
    if C(v, w) == a:
        b = C(u, v)
        # vw and wu both become b, uv takes a; then wu is freed for a
        return _apply(col, [(v, w, b), (u, v, a), (u, w, a), (u, z, b)], "A.swap")
    c = C(w, u)
    return _apply(col, [(u, w, a), (u, z, c)], "A")


def extend_config_b(col: LinearColoring, step: ReductionStep) -> str:
    cfg: ConfigB = step.config
    u, v, t, w, z = cfg.u, cfg.v, cfg.t, cfg.w, cfg.z
    C = col.color_of
    a = _first_free(col, u)
    if C(t, z) != a or not col.same_path(a, t, u):
        return _apply(col, [(u, z, a)], "direct")
    if C(u, w) == a:
        b = C(u, v)
        return _apply(col, [(v, w, b), (u, v, a), (u, z, b)], "B.1")
    b = C(u, w)
    return _apply(col, [(u, w, a), (u, z, b)], "B.2")


def extend_two_pairs(col: LinearColoring, step: ReductionStep) -> str:
    cfg: TwoPairs = step.config
    v, u, w, z = cfg.v, cfg.u, cfg.w, cfg.z
    C = col.color_of
    c = C(u, w)
    if c is None:
        raise ExtensionFailed(f"added edge {u}-{w} is not colored")
    col.unassign(u, w)
    for d in col.free_colors(z):
        if d != c:
            return _apply(col, [(v, z, d), (u, v, c), (v, w, c)], "free")
    a = C(u, z)
    if not col.same_path(c, u, z):
        return _apply(col, [(u, z, c), (u, v, a), (v, z, a), (v, w, c)], "no-uz-path")
    b = C(w, z)
    return _apply(col, [(w, z, c), (w, v, b), (v, z, b), (u, v, c)], "no-wz-path")


def extend_chorded_c4(col: LinearColoring, step: ReductionStep) -> str:
    cfg: ChordedC4 = step.config
    v, z, u, w = cfg.v, cfg.z, cfg.u, cfg.w
    C = col.color_of
    a = _first_free(col, z)
    if C(u, w) != a or not col.same_path(a, w, z):
        return _apply(col, [(u, z, a)], "direct")
    if C(w, z) == a:
        return _apply(col, [(v, z, a), (u, z, C(v, z))], "1")
    b = C(w, z)
    vz = C(v, z)
    vw = C(v, w)
    if vz != a and vw != a:
        return _apply(col, [(v, z, a), (u, z, vz)], "2.1")
    if vz != a:
        return _apply(col, [(w, z, a), (v, w, b), (u, z, b)], "2.2")
    if vw != a:
        # case 2.2 with the roles of z and w exchanged
        return _apply(col, [(u, z, a), (w, z, a), (v, z, b), (u, w, b)], "2.3")
    col.unassign(w, z)
    vw_linked = col.same_path(b, v, w)
    col.assign(w, z, b)
    if not vw_linked:
        return _apply(col, [(w, z, a), (v, w, b), (u, z, b)], "2.4")
    return _apply(col, [(u, z, a), (w, z, a), (v, z, b), (u, w, b), (v, w, a)], "2.4.mirror")


def extend_two_with_three(col: LinearColoring, step: ReductionStep) -> str:
    cfg: TwoWithThree = step.config
    u, v, w, z, x, y = cfg.u, cfg.v, cfg.w, cfg.z, cfg.x, cfg.y
    C = col.color_of
    a = _first_free(col, v)
    trail = []
    for _ in range(3):
        if C(u, w) != a or not col.same_path(a, v, u):
            trail.append("direct")
            return _apply(col, [(u, v, a)], ">".join(trail))
        if C(v, z) != a:
            e = C(v, z)
            changes = [(v, z, a), (u, v, e)]
            if C(z, x) == a and C(z, y) == a:
                h = C(x, y)
                changes += [(z, x, h), (z, y, h), (x, y, a)]
                trail.append("1.rotate")
            else:
                trail.append("1")
            return _apply(col, changes, ">".join(trail))
        # case 2: vz = a, so the a-path continues from z
        if C(z, x) != a:
            x, y = y, x
        if C(z, x) != a:
            raise UnreachableCase("case 2: no a-edge leaves z")
        b = C(z, y)
        f = C(x, v)
        if f != b:
            trail.append("2.shift")
            _apply(col, [(z, x, f), (v, z, f), (x, v, a)], "2.shift")
            continue
        c = C(v, w)
        linked = False
        if c == b:
            # only a b-path from x to y that avoids v blocks the next recoloring
            col.unassign(v, w)
            linked = col.same_path(b, x, y)
            col.assign(v, w, b)
        if not linked:
            trail.append("2.direct")
            return _apply(col, [(u, w, c), (v, z, c), (v, w, a), (u, v, a)], ">".join(trail))
        d = C(v, y)
        trail.append("2")
        return _apply(
            col,
            [(v, x, a), (v, y, b), (x, z, b), (u, v, d), (y, z, d)],
            ">".join(trail),
        )
    raise UnreachableCase("two-with-three: no progress after repeated rounds")


def extend_cubic_small(col: LinearColoring, step: ReductionStep) -> str:
    cfg: CubicSmall = step.config
    v, x, x1, x2, y = cfg.v, cfg.x, cfg.x1, cfg.x2, cfg.y
    C = col.color_of
    missing = col.missing_colors(v)
    if missing:
        a = missing[0]
        if C(x, x1) != a or C(x, x2) != a:
            return _apply(col, [(v, x, a)], "1.direct")
        e = C(x1, v)
        if e is not None:
            return _apply(col, [(x, x1, e), (v, x, e), (x1, v, a)], "1.x1v")
        e = C(x2, v)
        if e is not None:
            return _apply(col, [(x, x2, e), (v, x, e), (x2, v, a)], "1.x2v")
        f = C(x1, x2)
        if f is not None:
            return _apply(col, [(x, x1, f), (x, x2, f), (v, x, a), (x1, x2, a)], "1.x1x2")
        raise UnreachableCase("cubic-small case 1: x1, x2 not linked")
    single = col.single_colors(v)
    if len(single) < 2:
        raise ExtensionFailed(f"vertex {v} has fewer than two single colors")
    a, b = single[0], single[1]
    near = (C(x, x1), C(x, x2))
    if a not in near:
        return _apply(col, [(v, x, a)], "2.direct")
    if b not in near:
        return _apply(col, [(v, x, b)], "2.direct")
    if not col.same_path(a, v, x):
        return _apply(col, [(v, x, a)], "2.no-a-path")
    if not col.same_path(b, v, x):
        return _apply(col, [(v, x, b)], "2.no-b-path")
    c = C(v, y)
    vy = a if col.count(y, a) <= 1 else b
    return _apply(col, [(v, x, c), (v, y, vy)], "2")


_TWO_CUBIC_ROUNDS = 8


def extend_two_cubic(col: LinearColoring, step: ReductionStep) -> str:
    cfg: TwoCubic = step.config
    u, v, w, z, x, y = cfg.u, cfg.v, cfg.w, cfg.z, cfg.x, cfg.y
    C = col.color_of
    trail: list[str] = []

    def done(changes, case):
        trail.append(case)
        return _apply(col, changes, ">".join(trail))

    def shift(changes, case):
        trail.append(case)
        _apply(col, changes, case)

    for _ in range(_TWO_CUBIC_ROUNDS):
        a = _first_free(col, u)
        vz, vw = C(v, z), C(v, w)
        if vz != a and vw != a:
            return done([(u, v, a)], "1")
        if vz == a and vw == a:
            b = C(z, w)
            return done([(v, z, b), (v, w, b), (z, w, a), (u, v, a)], "2")
        if vz == a:
            z, w = w, z
        b = C(v, z)
        if not col.same_path(a, u, w):
            return done([(u, v, a)], "3.direct")
        wx = C(w, x)
        if wx != a:
            c = wx
            if col.count(x, a) <= 1:
                if col.try_apply([(v, w, c), (w, x, a), (u, v, a)]):
                    trail.append("3.1.1")
                    return ">".join(trail)
                if C(x, z) == b:
                    raise UnreachableCase("3.1.1.1")
                xz = C(x, z)
                return done([(v, z, xz), (x, z, b), (v, w, c), (w, x, a), (u, v, a)], "3.1.1.2")
            # x carries two a-edges: zx and xy
            d = C(z, y)
            if d != c:
                shift([(z, x, d), (x, y, d), (z, y, a)], "3.1.2.rotate")
                continue
            if col.try_apply(
                [(v, w, c), (w, x, a), (z, y, a), (z, x, c), (x, y, c), (u, v, a)]
            ):
                trail.append("3.1.2.1")
                return ">".join(trail)
            # b == c and a b-path joins w and y; locate the a-path from u
            col.unassign(z, x)
            through_x = not col.same_path(a, u, w)
            u_on_z_side = col.same_path(a, u, z)
            col.assign(z, x, a)
            if not through_x:
                return done([(v, z, a), (z, x, b), (v, w, b), (w, x, a), (u, v, a)], "3.1.2.2.1")
            if not u_on_z_side:
                c1 = C(u, z)
                return done([(u, z, a), (u, v, c1), (z, x, c1)], "3.1.2.2.2")
            c1 = C(u, w)
            if c1 != b:
                return done(
                    [(u, w, a), (u, v, c1), (v, w, b), (v, z, a), (z, x, b), (w, x, c1)],
                    "3.1.2.2.3.1",
                )
            c2 = C(w, z)
            return done(
                [(u, w, a), (u, v, b), (v, w, c2), (v, z, a), (z, x, c2), (z, w, b)],
                "3.1.2.2.3.2",
            )
        # wx = a, so the a-path through w continues at x
        if C(x, y) == a:
            c = C(x, z)
            if c != b:
                if C(w, y) == c:
                    shift([(v, z, c), (x, z, b)], "3.2.1.1.swap")
                h = C(w, y)
                shift([(w, x, h), (x, y, h), (w, y, a)], "3.2.1.1")
                continue
            d = C(u, w)
            return done([(x, w, d), (u, v, d), (u, w, a)], "3.2.1.2")
        if C(x, z) != a:
            raise UnreachableCase("3.2: x has a single a-edge")
        c = C(w, z)
        if C(x, y) != c:
            shift([(w, x, c), (x, z, c), (w, z, a)], "3.2.2.rotate")
            continue
        if col.try_apply([(v, z, a), (x, z, b)]):
            trail.append("3.2.2.1")
            continue
        d = C(u, w)
        if col.try_apply([(u, v, d), (w, x, d), (u, w, a)]):
            trail.append("3.2.2.2")
            return ">".join(trail)
        if C(u, z) == a:
            c3 = C(w, y)
            return done(
                [
                    (u, z, b),
                    (u, w, a),
                    (v, w, c3),
                    (w, z, a),
                    (w, x, b),
                    (w, y, b),
                    (x, y, c3),
                    (u, v, a),
                ],
                "3.2.2.2.1",
            )
        c3 = C(u, z)
        return done(
            [(u, z, b), (z, v, a), (z, x, c3), (u, w, a), (v, w, b), (u, v, c3)],
            "3.2.2.2.2",
        )
    raise UnreachableCase("two-cubic: case analysis did not terminate: " + ">".join(trail))


EXTENDERS: dict[type, Callable[[LinearColoring, ReductionStep], str]] = {
    LightEdge: extend_light_edge,
    TwoVertexNonadjacent: extend_two_vertex,
    ConfigA: extend_config_a,
    ConfigB: extend_config_b,
    TwoPairs: extend_two_pairs,
    ChordedC4: extend_chorded_c4,
    TwoWithThree: extend_two_with_three,
    CubicSmall: extend_cubic_small,
    TwoCubic: extend_two_cubic,
}


def extend(col: LinearColoring, step: ReductionStep) -> str:
    """Dispatch on the configuration type of ``step``."""
    try:
        return EXTENDERS[type(step.config)](col, step)
    except ColoringError as exc:
        raise ExtensionFailed(f"{step.config}: {exc}") from exc
