"""Simple undirected graphs over dense integer vertex ids.

A :class:`Graph` describes either an interconnect (the computing-system
graph) or the information graph of a parallel task. Values are immutable;
every analysis in the package takes a ``Graph`` and returns new values.

Edge-list text format::

    # comments run to end of line
    n=6            # optional header, declares trailing isolated vertices
    0 1
    1 2
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .errors import ParseError, ValidationError

__all__ = [
    "Graph",
    "from_edges",
    "from_edge_list",
    "to_edge_list",
    "generate_topology",
    "remove_vertices",
    "TOPOLOGY_KINDS",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    Attributes
    ----------
    n : int
        Size of the id space; vertex ids lie in ``0..n-1``.
    vertices : tuple of int
        Ids actually present, ascending. Equals ``range(n)`` except for
        graphs produced by :func:`remove_vertices`, which keep original ids.
    adj : tuple of tuple of int
        ``adj[v]`` is the ascending neighbor tuple of ``v`` (empty for
        absent ids).
    """

    n: int
    vertices: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValidationError("adjacency length must equal n")
        present = set(self.vertices)
        for v in range(self.n):
            nbrs = self.adj[v]
            if nbrs and v not in present:
                raise ValidationError(f"absent vertex {v} has neighbors")
            for a, b in zip(nbrs, nbrs[1:]):
                if a >= b:
                    raise ValidationError(f"neighbors of {v} not strictly ascending")
            for u in nbrs:
                if u == v:
                    raise ValidationError(f"self-loop at vertex {v}")
                if not 0 <= u < self.n or u not in present:
                    raise ValidationError(f"neighbor {u} of {v} out of range")
        for v in range(self.n):
            for u in self.adj[v]:
                if v not in self.nbr_set(u):
                    raise ValidationError(f"asymmetric adjacency {v}-{u}")

    @classmethod
    def _trusted(cls, n, vertices, adj) -> "Graph":
        # for adjacency built inside the package, which is valid by construction
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "vertices", vertices)
        object.__setattr__(g, "adj", adj)
        return g

    @cached_property
    def _sets(self) -> tuple[frozenset, ...]:
        return tuple(frozenset(a) for a in self.adj)

    @cached_property
    def _levels(self) -> dict:
        # root -> full breadth-first level map, filled on demand by metrics
        return {}

    def nbr_set(self, v: int) -> frozenset:
        return self._sets[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def order(self) -> int:
        """Number of vertices present."""
        return len(self.vertices)

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return tuple((u, v) for u in self.vertices for v in self.adj[u] if u < v)

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and v in self._vertex_set

    @cached_property
    def _vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def check_vertex(self, v: int) -> None:
        if v not in self:
            raise ValidationError(f"vertex {v} not in graph")

    def induced(self, keep: Iterable[int]) -> "Graph":
        """Induced subgraph on ``keep``; ids are preserved."""
        keep = sorted(set(keep))
        for v in keep:
            self.check_vertex(v)
        ks = set(keep)
        adj = [()] * self.n
        for v in keep:
            adj[v] = tuple(u for u in self.adj[v] if u in ks)
        return Graph._trusted(self.n, tuple(keep), tuple(adj))


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a graph on ids ``0..n-1``; duplicate edges collapse.

    >>> from_edges(3, [(0, 1), (2, 1), (1, 0)]).edges
    ((0, 1), (1, 2))
    """
    if n < 0:
        raise ValidationError("vertex count must be non-negative")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise ValidationError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ValidationError(f"edge ({u}, {v}) out of range for n={n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph._trusted(n, tuple(range(n)), tuple(tuple(sorted(s)) for s in nbrs))


def _parse_int(tok: str, lineno: int) -> int:
    if not tok.isdigit():
        raise ParseError(f"expected non-negative integer, got {tok!r}", line=lineno)
    return int(tok)


def from_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    ``n`` is ``1 + max id`` unless an ``n=<count>`` header line (the first
    non-comment line) declares more.
    """
    declared = None
    pairs = []
    seen_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n="):
            if seen_data or declared is not None:
                raise ParseError("n= header must be the first data line", line=lineno)
            declared = _parse_int(line[2:].strip(), lineno)
            seen_data = True
            continue
        seen_data = True
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected two vertex ids, got {len(toks)} tokens",
                             line=lineno)
        u, v = _parse_int(toks[0], lineno), _parse_int(toks[1], lineno)
        if u == v:
            raise ValidationError(f"line {lineno}: self-loop at vertex {u}")
        pairs.append((u, v))
    n = 1 + max((max(p) for p in pairs), default=-1)
    if declared is not None:
        if declared < n:
            raise ValidationError(f"header n={declared} but edge list mentions id {n - 1}")
        n = declared
    return from_edges(n, pairs)


def to_edge_list(g: Graph) -> str:
    """Serialize as sorted ``u v`` lines.

    An ``n=`` header is emitted only when it is needed to round-trip
    isolated trailing vertices.
    """
    lines = [f"{u} {v}" for u, v in g.edges]
    top = max((v for e in g.edges for v in e), default=-1)
    if g.n != top + 1:
        lines.insert(0, f"n={g.n}")
    return "\n".join(lines)


def remove_vertices(g: Graph, faults: Iterable[int]) -> Graph:
    """Induced subgraph on ``V \\ faults``; surviving vertices keep their ids."""
    faults = set(faults)
    for v in faults:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValidationError(f"vertex {v} out of range")
    return g.induced(v for v in g.vertices if v not in faults)


# --- standard interconnects -------------------------------------------------

TOPOLOGY_KINDS = ("ring", "complete", "hypercube", "torus", "mesh", "path", "star")


def _grid(dims: Sequence[int], wrap: bool) -> Graph:
    # row-major numbering: last coordinate varies fastest
    if not dims or any(d < 1 for d in dims):
        raise ValidationError("grid dimensions must be positive")
    strides = [1] * len(dims)
    for i in range(len(dims) - 2, -1, -1):
        strides[i] = strides[i + 1] * dims[i + 1]
    n = strides[0] * dims[0]
    edges = []
    for coord in itertools.product(*(range(d) for d in dims)):
        v = sum(c * s for c, s in zip(coord, strides))
        for axis, d in enumerate(dims):
            c = coord[axis]
            if c + 1 < d:
                edges.append((v, v + strides[axis]))
            elif wrap and d > 2:
                edges.append((v, v - c * strides[axis]))
    return from_edges(n, edges)


def generate_topology(kind: str, *params: int) -> Graph:
    """Standard interconnect graphs.

    Vertex numbering:

    * ``ring n`` -- cycle ``0-1-...-(n-1)-0``
    * ``complete n`` -- K_n
    * ``hypercube d`` -- Q_d; vertex id is the binary coordinate word, so
      ``u ~ v`` iff ``u ^ v`` is a power of two
    * ``torus d1 d2 ...`` / ``mesh d1 d2 ...`` -- row-major grid ids, with
      and without wraparound (a wrap along a dimension of size <= 2 adds
      nothing new)
    * ``path n`` and ``star n`` (center 0) for trees
    """
    if any(not isinstance(p, int) or p < 1 for p in params):
        raise ValidationError(f"{kind}: parameters must be positive integers")
    if kind in ("ring", "complete", "hypercube", "path", "star") and len(params) != 1:
        raise ValidationError(f"{kind} takes exactly one parameter")
    if kind == "ring":
        (n,) = params
        if n < 3:
            raise ValidationError("ring needs n >= 3")
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind == "complete":
        (n,) = params
        return from_edges(n, itertools.combinations(range(n), 2))
    if kind == "hypercube":
        (d,) = params
        n = 1 << d
        return from_edges(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d)
                              if v < v ^ (1 << b)])
    if kind == "path":
        (n,) = params
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind == "star":
        (n,) = params
        return from_edges(n, [(0, i) for i in range(1, n)])
    if kind in ("torus", "mesh"):
        if not params:
            raise ValidationError(f"{kind} needs at least one dimension")
        return _grid(params, wrap=kind == "torus")
    raise ValidationError(f"unknown topology kind {kind!r}; "
                          f"expected one of {', '.join(TOPOLOGY_KINDS)}")
