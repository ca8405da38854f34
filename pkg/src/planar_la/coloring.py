"""Partial k-linear edge colorings.

A :class:`LinearColoring` keeps three views consistent with each other:

* the raw assignment edge -> color,
* per-vertex color profiles (how many edges of each color meet a vertex),
* one :class:`~planar_la.pathforest.PathForest` per color, so that
  "is there a monochromatic path between u and v" is a logarithmic query.

Every mutation goes through :meth:`assign` / :meth:`unassign`, and
:meth:`assign` refuses to create a vertex with three edges of one color or a
monochromatic cycle. Higher level code can therefore try a recoloring and rely
on an exception instead of re-deriving the proof that it is legal.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .errors import ColorOutOfRange, NotColored, WouldCloseCycle, WouldExceedDegree
from .graph import Edge, norm
from .pathforest import PathForest


class LinearColoring:
    __slots__ = ("n", "k", "_stride", "_color", "_count", "_forests")

    def __init__(self, n: int, k: int) -> None:
        if k < 1:
            raise ValueError("k must be at least 1")
        self.n = n
        self.k = k
        self._stride = k + 1
        # edge key u * n + v (u < v) -> color
        self._color: dict[int, int] = {}
        self._count = bytearray(n * (k + 1))
        self._forests = [PathForest() for _ in range(k + 1)]

    # -- queries -----------------------------------------------------------

    def _key(self, u: int, v: int) -> int:
        return u * self.n + v if u < v else v * self.n + u

    def color_of(self, u: int, v: int) -> int | None:
        return self._color.get(u * self.n + v if u < v else v * self.n + u)

    def __getitem__(self, e: Edge) -> int:
        c = self.color_of(*e)
        if c is None:
            raise NotColored(f"edge {norm(*e)} is not colored")
        return c

    def __contains__(self, e: Edge) -> bool:
        return self.color_of(*e) is not None

    def __len__(self) -> int:
        return len(self._color)

    def count(self, v: int, c: int) -> int:
        return self._count[v * self._stride + c]

    def profile(self, v: int) -> list[int]:
        """Per-color edge counts at ``v``; index 0 is unused."""
        base = v * self._stride
        return list(self._count[base : base + self._stride])

    def free_colors(self, v: int) -> list[int]:
        base = v * self._stride
        cnt = self._count
        return [c for c in range(1, self.k + 1) if cnt[base + c] <= 1]

    def missing_colors(self, v: int) -> list[int]:
        """Colors not used at ``v`` at all (C0)."""
        base = v * self._stride
        cnt = self._count
        return [c for c in range(1, self.k + 1) if cnt[base + c] == 0]

    def single_colors(self, v: int) -> list[int]:
        """Colors used exactly once at ``v`` (C1)."""
        base = v * self._stride
        cnt = self._count
        return [c for c in range(1, self.k + 1) if cnt[base + c] == 1]

    def same_path(self, c: int, u: int, v: int) -> bool:
        if u == v:
            return True
        s = self._stride
        if self._count[u * s + c] == 0 or self._count[v * s + c] == 0:
            return False
        return self._forests[c].same_path(u, v)

    def items(self) -> Iterator[tuple[Edge, int]]:
        n = self.n
        for key, c in self._color.items():
            yield divmod(key, n), c

    def assignment(self) -> dict[Edge, int]:
        return dict(self.items())

    def colors_used(self) -> int:
        return len(set(self._color.values()))

    def path_of(self, c: int, v: int) -> list[int]:
        return self._forests[c].path_of(v)

    # -- mutation ----------------------------------------------------------

    def assign(self, u: int, v: int, c: int) -> None:
        if not 1 <= c <= self.k:
            raise ColorOutOfRange(f"color {c} not in 1..{self.k}")
        if u == v:
            raise ValueError("self-loop")
        key = u * self.n + v if u < v else v * self.n + u
        if key in self._color:
            raise ValueError(f"edge {norm(u, v)} already colored {self._color[key]}")
        s = self._stride
        cnt = self._count
        iu = u * s + c
        iv = v * s + c
        if cnt[iu] >= 2 or cnt[iv] >= 2:
            raise WouldExceedDegree(f"color {c} already twice at an endpoint of {norm(u, v)}")
        if cnt[iu] and cnt[iv] and self._forests[c].same_path(u, v):
            raise WouldCloseCycle(f"coloring {norm(u, v)} with {c} closes a cycle")
        self._forests[c].link(u, v)
        cnt[iu] += 1
        cnt[iv] += 1
        self._color[key] = c

    def unassign(self, u: int, v: int) -> int:
        key = u * self.n + v if u < v else v * self.n + u
        c = self._color.pop(key, None)
        if c is None:
            raise NotColored(f"edge {norm(u, v)} is not colored")
        self._forests[c].cut(u, v)
        s = self._stride
        self._count[u * s + c] -= 1
        self._count[v * s + c] -= 1
        return c

    def recolor(self, u: int, v: int, c: int) -> None:
        old = self.color_of(u, v)
        if old is None:
            raise NotColored(f"edge {norm(u, v)} is not colored")
        if old == c:
            return
        self.unassign(u, v)
        try:
            self.assign(u, v, c)
        except Exception:
            self.assign(u, v, old)
            raise

    def apply(self, changes: Iterable[tuple[int, int, int | None]]) -> None:
        """Atomically set several edge colors (``None`` uncolors).

        All touched edges are uncolored first and then assigned, so the
        intermediate states never violate the invariants. On failure the
        previous colors are restored and the error propagates.
        """
        changes = list(changes)
        old: list[tuple[int, int, int | None]] = []
        for u, v, _ in changes:
            c = self.color_of(u, v)
            old.append((u, v, c))
            if c is not None:
                self.unassign(u, v)
        done: list[tuple[int, int]] = []
        try:
            for u, v, c in changes:
                if c is not None:
                    self.assign(u, v, c)
                    done.append((u, v))
        except Exception:
            for u, v in done:
                self.unassign(u, v)
            for u, v, c in old:
                if c is not None:
                    self.assign(u, v, c)
            raise

    def try_apply(self, changes: Iterable[tuple[int, int, int | None]]) -> bool:
        try:
            self.apply(changes)
        except (WouldCloseCycle, WouldExceedDegree):
            return False
        return True

    # -- misc --------------------------------------------------------------

    def copy(self) -> "LinearColoring":
        out = LinearColoring(self.n, self.k)
        for (u, v), c in self.items():
            out.assign(u, v, c)
        return out

    def check_invariants(self) -> None:
        """Recompute profiles and forests from scratch and compare (slow)."""
        s = self._stride
        cnt = bytearray(self.n * s)
        adj: dict[tuple[int, int], list[int]] = {}
        for (u, v), c in self.items():
            cnt[u * s + c] += 1
            cnt[v * s + c] += 1
            adj.setdefault((c, u), []).append(v)
            adj.setdefault((c, v), []).append(u)
        assert cnt == self._count, "profile table out of sync"
        assert max(cnt, default=0) <= 2, "degree bound violated"
        for (c, v), nbrs in adj.items():
            path = self._forests[c].path_of(v)
            assert v in path
            pos = {x: i for i, x in enumerate(path)}
            for w in nbrs:
                assert abs(pos[w] - pos[v]) == 1, "forest out of sync"
        for c in range(1, self.k + 1):
            for v in list(self._forests[c]._nodes):
                assert cnt[v * s + c] > 0, "stale forest node"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearColoring):
            return NotImplemented
        return self.n == other.n and self.k == other.k and self._color == other._color

    def __repr__(self) -> str:
        return f"LinearColoring(n={self.n}, k={self.k}, colored={len(self._color)})"


def assign(col: LinearColoring, e: Edge, c: int) -> None:
    col.assign(e[0], e[1], c)


def unassign(col: LinearColoring, e: Edge) -> int:
    return col.unassign(e[0], e[1])


def recolor(col: LinearColoring, e: Edge, c: int) -> None:
    col.recolor(e[0], e[1], c)


def free_colors(col: LinearColoring, v: int) -> list[int]:
    return col.free_colors(v)


def same_path(col: LinearColoring, c: int, u: int, v: int) -> bool:
    return col.same_path(c, u, v)
