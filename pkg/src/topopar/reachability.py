"""Compression of a graph into its reachability graph.

The reachability graph for budget ``delta`` joins every pair of vertices
whose distance in the base graph lies in ``[1, delta]`` (the graph power
``G^delta`` without loops). Each root's shortest-only projection is cut at
level ``delta`` and the root is joined to everything on levels ``1..delta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .graph import Graph
from .projection import shortest_levels

__all__ = ["ReachGraph", "compress"]


@dataclass(frozen=True)
class ReachGraph:
    base: Graph
    delta: int
    derived: Graph


def compress(g: Graph, delta: int) -> ReachGraph:
    if not isinstance(delta, int) or delta < 1:
        raise ValidationError(f"reachability delta must be an integer >= 1, got {delta!r}")
    if delta == 1:
        return ReachGraph(g, 1, g)
    adj = [()] * g.n
    known = g._levels
    for v in g.vertices:
        # levels 1..delta of v's shortest-only projection
        full = known.get(v)
        if full is not None:
            adj[v] = tuple(sorted(u for u, x in full.items() if 0 < x <= delta))
        else:
            adj[v] = tuple(sorted(u for u in shortest_levels(g, v, delta) if u != v))
    return ReachGraph(g, delta, Graph._trusted(g.n, g.vertices, tuple(adj)))
