"""Random planar graphs from face-split triangulations.

Faces are kept as vertex triples; inserting a vertex into a face replaces it by
three faces. No embedding or geometry is needed and the result is planar by
construction. Edges are then deleted in random order until every vertex has
degree at most ``target_delta``.
"""

from __future__ import annotations

import random

from .errors import InvalidParams
from .graph import Graph


def gen_planar(n: int, target_delta: int, seed: int) -> Graph:
    if n < 3:
        raise InvalidParams("need at least 3 vertices")
    if target_delta < 2:
        raise InvalidParams("target maximum degree must be at least 2")
    rng = random.Random(seed)
    g = Graph(n, [(0, 1), (1, 2), (0, 2)])
    faces = [(0, 1, 2), (0, 2, 1)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.append((b, c, v))
        faces.append((c, a, v))
        g.add_edge(a, v)
        g.add_edge(b, v)
        g.add_edge(c, v)
    edges = list(g.edges())
    rng.shuffle(edges)
    adj = g.adj
    for u, v in edges:
        if len(adj[u]) > target_delta or len(adj[v]) > target_delta:
            g.remove_edge(u, v)
    return g
