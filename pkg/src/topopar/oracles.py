"""Brute-force reference implementations for auditing on small graphs.

Nothing here uses projections, compression or other package helpers; the
only shared piece is the :class:`~topopar.graph.Graph` value itself.
"""

from __future__ import annotations

import itertools
from collections import deque
from typing import Optional

from .errors import ResourceLimitError
from .graph import Graph

INF = float("inf")

MAX_CLIQUE_GUARD = 20
EMBED_TASK_GUARD = 6
EMBED_HOST_GUARD = 8


def oracle_distances(g: Graph) -> dict[tuple[int, int], float]:
    """All-pairs hop distances by breadth-first search; unreachable -> inf."""
    table = {}
    adj = g.adj
    for s in g.vertices:
        dist = [INF] * g.n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            du = dist[u] + 1
            for w in adj[u]:
                if dist[w] == INF:
                    dist[w] = du
                    q.append(w)
        for t in g.vertices:
            table[s, t] = dist[t]
    return table


def oracle_max_clique(g: Graph) -> tuple[int, ...]:
    """Lexicographically smallest maximum clique by exhaustive search."""
    vs = g.vertices
    n = len(vs)
    if n > MAX_CLIQUE_GUARD:
        raise ResourceLimitError("oracle_max_clique guard exceeded", MAX_CLIQUE_GUARD)
    # bit i of a subset mask stands for vs[i]; lownb[1 << i] is vs[i]'s neighbor mask
    pos = {v: i for i, v in enumerate(vs)}
    lownb = {1 << i: sum(1 << pos[u] for u in g.adj[v]) for i, v in enumerate(vs)}
    # size[S] = |S| if S is a clique else 0, built from S minus its lowest member
    size = bytearray(1 << n)
    best, best_size = 0, 0
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        if (rest == 0 or size[rest]) and not rest & ~lownb[low]:
            k = size[s] = size[rest] + 1
            if k > best_size:
                best, best_size = s, k
            elif k == best_size:
                # equal sizes: the lowest differing member decides the order
                diff = s ^ best
                if diff & -diff & s:
                    best = s
    return tuple(vs[i] for i in range(n) if best >> i & 1)


def oracle_all_cliques(g: Graph) -> list[tuple[int, ...]]:
    """Every clique (non-empty vertex subset that is pairwise adjacent)."""
    out = []
    for k in range(1, len(g.vertices) + 1):
        for combo in itertools.combinations(g.vertices, k):
            if all(g.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
                out.append(combo)
    return out


def oracle_embed(task: Graph, g: Graph, delta: int) -> Optional[dict[int, int]]:
    """First injective mapping (in permutation order) honoring the budget."""
    if len(task.vertices) > EMBED_TASK_GUARD:
        raise ResourceLimitError("oracle_embed task guard exceeded", EMBED_TASK_GUARD)
    if len(g.vertices) > EMBED_HOST_GUARD:
        raise ResourceLimitError("oracle_embed host guard exceeded", EMBED_HOST_GUARD)
    d = oracle_distances(g)
    tv = list(task.vertices)
    for image in itertools.permutations(g.vertices, len(tv)):
        f = dict(zip(tv, image))
        if all(1 <= d[f[a], f[b]] <= delta for a, b in task.edges):
            return f
    return None


def oracle_cycles(g: Graph, length: int) -> set[frozenset]:
    """Cycles of ``length`` as frozensets of their edges."""
    found = set()
    for combo in itertools.combinations(g.vertices, length):
        first, rest = combo[0], combo[1:]
        for perm in itertools.permutations(rest):
            ring = (first, *perm)
            edges = [(ring[i], ring[(i + 1) % length]) for i in range(length)]
            if all(g.has_edge(a, b) for a, b in edges):
                found.add(frozenset(frozenset(e) for e in edges))
    return found


def oracle_power(g: Graph, delta: int) -> Graph:
    """Pairs at distance 1..delta, from the breadth-first distance table."""
    d = oracle_distances(g)
    adj = [()] * g.n
    for v in g.vertices:
        adj[v] = tuple(u for u in g.vertices if u != v and 1 <= d[v, u] <= delta)
    return Graph(g.n, g.vertices, tuple(adj))


def oracle_density(g: Graph, delta: int) -> int:
    return len(oracle_max_clique(oracle_power(g, delta)))
