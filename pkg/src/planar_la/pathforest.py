"""Dynamic linear forest over vertex ids.

Each path of the forest is stored as the in-order sequence of a splay tree.
Linking two path endpoints concatenates their sequences, reversing one of them
first if needed (a lazy flag, so O(1) extra). Cutting an edge splits the
sequence between its two endpoints. ``same_path`` splays both vertices and
tests whether they ended up in one tree. All operations run in O(log n)
amortized time and space is linear in the number of non-isolated vertices:
a vertex without incident forest edges has no node at all.
"""

from __future__ import annotations


class _Node:
    __slots__ = ("l", "r", "p", "rev", "key")

    def __init__(self, key: int) -> None:
        self.l: _Node | None = None
        self.r: _Node | None = None
        self.p: _Node | None = None
        self.rev = False
        self.key = key


def _push(x: _Node) -> None:
    if x.rev:
        x.l, x.r = x.r, x.l
        if x.l is not None:
            x.l.rev = not x.l.rev
        if x.r is not None:
            x.r.rev = not x.r.rev
        x.rev = False


def _splay(x: _Node) -> None:
    # Flags must be pushed top-down before any rotation touches the path.
    path = []
    y = x
    while y is not None:
        path.append(y)
        y = y.p
    for y in reversed(path):
        if y.rev:
            _push(y)

    while True:
        p = x.p
        if p is None:
            return
        g = p.p
        if g is None:
            # zig
            if p.l is x:
                b = x.r
                p.l = b
                x.r = p
            else:
                b = x.l
                p.r = b
                x.l = p
            if b is not None:
                b.p = p
            p.p = x
            x.p = None
            return
        gg = g.p
        if g.l is p:
            if p.l is x:
                # zig-zig
                b = x.r
                c = p.r
                g.l = c
                if c is not None:
                    c.p = g
                p.r = g
                g.p = p
                p.l = b
                if b is not None:
                    b.p = p
                x.r = p
                p.p = x
            else:
                # zig-zag
                b = x.l
                c = x.r
                p.r = b
                if b is not None:
                    b.p = p
                g.l = c
                if c is not None:
                    c.p = g
                x.l = p
                x.r = g
                p.p = x
                g.p = x
        else:
            if p.r is x:
                b = x.l
                c = p.l
                g.r = c
                if c is not None:
                    c.p = g
                p.l = g
                g.p = p
                p.r = b
                if b is not None:
                    b.p = p
                x.l = p
                p.p = x
            else:
                b = x.r
                c = x.l
                p.l = b
                if b is not None:
                    b.p = p
                g.r = c
                if c is not None:
                    c.p = g
                x.r = p
                x.l = g
                p.p = x
                g.p = x
        x.p = gg
        if gg is not None:
            if gg.l is g:
                gg.l = x
            else:
                gg.r = x


class PathForest:
    """Vertex-disjoint paths supporting link, cut and same-path queries.

    The caller guarantees the linear-forest discipline: ``link`` is only
    called on two endpoints of different paths and ``cut`` only on two
    vertices that are consecutive on a path.
    """

    __slots__ = ("_nodes",)

    def __init__(self) -> None:
        self._nodes: dict[int, _Node] = {}

    def __contains__(self, v: int) -> bool:
        return v in self._nodes

    def node_count(self) -> int:
        return len(self._nodes)

    def link(self, u: int, v: int) -> None:
        nodes = self._nodes
        nu = nodes.get(u)
        if nu is None:
            nu = nodes[u] = _Node(u)
        nv = nodes.get(v)
        if nv is None:
            nv = nodes[v] = _Node(v)
        # Make u the last element of its sequence.
        _splay(nu)
        if nu.r is not None:
            nu.rev = not nu.rev
            _push(nu)
        # Make v the first element of its sequence.
        _splay(nv)
        if nv.l is not None:
            nv.rev = not nv.rev
            _push(nv)
        if nu.p is not None or nv.p is not None:
            raise ValueError(f"link({u}, {v}): endpoints already on one path")
        nu.r = nv
        nv.p = nu

    def cut(self, u: int, v: int) -> None:
        nodes = self._nodes
        nu = nodes[u]
        nv = nodes[v]
        _splay(nu)
        x = nv
        while x.p is not nu:
            x = x.p
            if x is None:
                raise ValueError(f"cut({u}, {v}): not on one path")
        if x is nu.l:
            x.p = None
            nu.l = None
        else:
            x.p = None
            nu.r = None
        _splay(nv)
        if nu.l is None and nu.r is None:
            del nodes[u]
        if nv.l is None and nv.r is None:
            del nodes[v]

    def same_path(self, u: int, v: int) -> bool:
        if u == v:
            return True
        nodes = self._nodes
        nu = nodes.get(u)
        nv = nodes.get(v)
        if nu is None or nv is None:
            return False
        _splay(nu)
        _splay(nv)
        return nu.p is not None

    def path_of(self, v: int) -> list[int]:
        """Vertices of the path through ``v`` in order (linear time)."""
        nv = self._nodes.get(v)
        if nv is None:
            return [v]
        _splay(nv)
        return _flatten(nv)


def _flatten(root: _Node) -> list[int]:
    out: list[int] = []
    # (node, inherited reversal, emit-key-only)
    stack: list[tuple[_Node, bool, bool]] = [(root, False, False)]
    while stack:
        x, flip, emit = stack.pop()
        if emit:
            out.append(x.key)
            continue
        flip ^= x.rev
        left, right = (x.r, x.l) if flip else (x.l, x.r)
        if right is not None:
            stack.append((right, flip, False))
        stack.append((x, flip, True))
        if left is not None:
            stack.append((left, flip, False))
    return out
