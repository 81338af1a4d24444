"""Embedding task information graphs under limited reachability.

A task graph embeds into a computing-system graph at budget ``delta`` when
its branches can be placed on distinct processors so that every pair of
information-adjacent branches sits at distance ``1..delta``. That is a
subgraph monomorphism into the ``delta``-reachability graph.

Ring-structured tasks reduce to finding cycles of a given length, which are
read off full-chains projections: a chain of length ``k - 1`` from ``v``
whose last vertex is adjacent to ``v`` closes a ``k``-cycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import ResourceLimitError, ValidationError
from .graph import Graph, generate_topology
from .projection import build_projection
from .reachability import compress

__all__ = [
    "Embedding",
    "embed",
    "iter_cycles",
    "enumerate_cycles",
    "girth",
    "embed_ring",
    "DEFAULT_CYCLE_CAP",
]

DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class Embedding:
    mapping: dict
    delta: int

    def pairs(self) -> list[tuple[int, int]]:
        return sorted(self.mapping.items())

    def __str__(self):
        return "\n".join(f"{a} -> {b}" for a, b in self.pairs())


def embed(task: Graph, g: Graph, delta: int) -> Optional[Embedding]:
    """First embedding of ``task`` into ``g`` at budget ``delta``, or None.

    Task vertices are placed in descending degree (ties by id); processors
    are tried in ascending id, so the answer is deterministic.
    """
    if len(task.vertices) > len(g.vertices):
        return None
    h = compress(g, delta).derived
    order = sorted(task.vertices, key=lambda a: (-task.degree(a), a))
    placed: dict[int, int] = {}
    used: set[int] = set()
    # for each task vertex, its neighbors placed earlier in the order
    pos = {a: i for i, a in enumerate(order)}
    back = {a: [b for b in task.adj[a] if pos[b] < pos[a]] for a in order}

    def extend(i):
        if i == len(order):
            return True
        a = order[i]
        need = task.degree(a)
        for c in h.vertices:
            if c in used or h.degree(c) < need:
                continue
            if all(h.has_edge(placed[b], c) for b in back[a]):
                placed[a] = c
                used.add(c)
                if extend(i + 1):
                    return True
                del placed[a]
                used.discard(c)
        return False

    if extend(0):
        return Embedding(dict(sorted(placed.items())), delta)
    return None


def iter_cycles(g: Graph, length: int) -> Iterator[tuple[int, ...]]:
    """Simple cycles of ``length`` in canonical form, lexicographic order.

    Canonical form starts at the smallest vertex and runs toward the
    smaller of its two cycle neighbors.
    """
    if length < 3:
        raise ValidationError("cycle length must be >= 3")
    for v in g.vertices:
        later = [u for u in g.vertices if u > v]
        if len(later) < length - 1:
            break
        p = build_projection(g, v, length - 1, "full", within=later)
        close = g.nbr_set(v)
        for node, lv in enumerate(p.level):
            if lv == length - 1 and p.vertex[node] in close:
                c = p.chain(node)
                if c[1] < c[-1]:
                    yield c


def enumerate_cycles(g: Graph, length: int,
                     cap: int = DEFAULT_CYCLE_CAP) -> list[tuple[int, ...]]:
    out = []
    for c in iter_cycles(g, length):
        out.append(c)
        if len(out) > cap:
            raise ResourceLimitError(f"more than {cap} cycles of length {length}", cap)
    return sorted(out)


def girth(g: Graph) -> Optional[int]:
    """Shortest cycle length, or None for a forest."""
    best = None
    for root in g.vertices:
        dist = {root: 0}
        parent = {root: -1}
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for w in g.adj[u]:
                    if w not in dist:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u]:
                        c = dist[u] + dist[w] + 1
                        if best is None or c < best:
                            best = c
            if best is not None and 2 * dist[frontier[0]] + 1 >= best:
                break
            frontier = nxt
    return best


def embed_ring(g: Graph, length: int, delta: int) -> Optional[Embedding]:
    """Place a ring task of ``length`` branches: the first canonical cycle of
    the reachability graph, task vertex ``i`` on ``cycle[i]``."""
    h = compress(g, delta).derived
    c = next(iter_cycles(h, length), None)
    if c is None:
        return None
    return Embedding(dict(enumerate(c)), delta)


def ring_task(length: int) -> Graph:
    return generate_topology("ring", length)
