"""Projective (bracket) description of a graph.

A projection ``P_k(v0)`` is a rooted tree of vertex occurrences. Level 0
holds the angle vertex ``v0``; each occurrence ``x`` at level ``i`` generates
the subset ``N(vertex(x)) \\ W(x)`` at level ``i + 1``, where ``W(x)`` is the
simple chain from ``v0`` down to ``x``. Serialized, ``0(1(4),3(4),4(1,3))``
means ``0`` generates ``{1, 3, 4}``, ``1`` generates ``{4}`` and so on.

Two construction modes are offered:

``full``
    Every simple chain of length ``<= k`` is materialized. Exponential in
    general, guarded by a node cap. Carries multiplicities.
``shortest``
    A breadth-first tree: each reachable vertex occurs once, at the level
    equal to its distance from the root, under its smallest-id predecessor.
    Polynomial; used for metrics.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import (DisconnectedGraphError, ParseError, ResourceLimitError,
                     UnsupportedModeError, ValidationError)
from .graph import Graph

__all__ = [
    "Projection",
    "DEFAULT_NODE_CAP",
    "build_projection",
    "to_bracket",
    "parse_bracket",
    "vertex_complete_level",
    "is_edge_complete",
    "multiplicity",
    "surplus_bound",
    "distance",
    "distances_from",
    "shortest_levels",
    "eccentricity",
    "diameter",
]

DEFAULT_NODE_CAP = 10**7

_MODES = {"full": "full", "full-chains": "full",
          "shortest": "shortest", "shortest-only": "shortest"}


@dataclass(frozen=True)
class Projection:
    """Immutable projection tree, nodes stored in preorder.

    Node 0 is the root occurrence. ``children[i]`` lists node indices in
    sibling order (ascending vertex id for built projections).
    Equality compares the tree only, not the requested depth or mode.
    """

    root: int
    vertex: tuple[int, ...]
    parent: tuple[int, ...]
    level: tuple[int, ...]
    children: tuple[tuple[int, ...], ...] = field(repr=False)
    depth: int = field(default=0, compare=False)
    mode: str = field(default="parsed", compare=False)

    def __len__(self):
        return len(self.vertex)

    @property
    def height(self) -> int:
        return max(self.level)

    def chain(self, node: int) -> tuple[int, ...]:
        """``W(node)``: vertices from the root down to ``node``."""
        out = []
        while node >= 0:
            out.append(self.vertex[node])
            node = self.parent[node]
        return tuple(reversed(out))

    def generated(self, node: int) -> tuple[int, ...]:
        """Vertices of the subset generated by ``node``."""
        return tuple(self.vertex[c] for c in self.children[node])

    @cached_property
    def level_counts(self) -> tuple[int, ...]:
        """``C_i``: number of occurrences at each level ``0..depth``."""
        counts = [0] * (max(self.depth, self.height) + 1)
        for lv in self.level:
            counts[lv] += 1
        return tuple(counts)

    @cached_property
    def level_sets(self) -> tuple[frozenset, ...]:
        """``V_i``: distinct vertices at each level ``0..depth``."""
        sets: list[set] = [set() for _ in self.level_counts]
        for v, lv in zip(self.vertex, self.level):
            sets[lv].add(v)
        return tuple(frozenset(s) for s in sets)

    def parent_child_pairs(self) -> set[tuple[int, int]]:
        """Undirected ``(min, max)`` pairs of every parent->child incidence."""
        out = set()
        for i, p in enumerate(self.parent):
            if p >= 0:
                a, b = self.vertex[p], self.vertex[i]
                out.add((a, b) if a < b else (b, a))
        return out


class _Builder:
    def __init__(self, root, cap):
        self.vertex = [root]
        self.parent = [-1]
        self.level = [0]
        self.children: list[list[int]] = [[]]
        self.cap = cap

    def add(self, v, parent):
        if len(self.vertex) >= self.cap:
            raise ResourceLimitError("projection node count exceeds cap", self.cap)
        idx = len(self.vertex)
        self.vertex.append(v)
        self.parent.append(parent)
        self.level.append(self.level[parent] + 1)
        self.children.append([])
        self.children[parent].append(idx)
        return idx

    def freeze(self, depth, mode):
        return Projection(self.vertex[0], tuple(self.vertex), tuple(self.parent),
                          tuple(self.level), tuple(tuple(c) for c in self.children),
                          depth, mode)


def shortest_levels(g: Graph, root: int, depth: Optional[int], allowed=None) -> dict[int, int]:
    dist = {root: 0}
    frontier = [root]
    d = 0
    adj = g.adj
    if depth is None:
        depth = len(adj)
    while frontier and d < depth:
        d += 1
        nxt = []
        for v in frontier:
            for u in adj[v]:
                if u not in dist and (allowed is None or u in allowed):
                    dist[u] = d
                    nxt.append(u)
        frontier = nxt
    return dist


def build_projection(g: Graph, root: int, depth: Optional[int] = None,
                     mode: str = "full", *, within: Optional[Iterable[int]] = None,
                     cap: int = DEFAULT_NODE_CAP) -> Projection:
    """Build the ``depth``-level projection of ``g`` from ``root``.

    Parameters
    ----------
    g : Graph
    root : int
        Angle vertex.
    depth : int or None
        Number of levels below the root. ``None`` means "until the tree
        stops growing" (``n - 1`` levels suffice for both modes).
    mode : {"full", "shortest"}
        ``"full-chains"`` and ``"shortest-only"`` are accepted aliases.
    within : iterable of int, optional
        Restrict occurrences (other than the root) to these vertices.
    cap : int
        Maximum number of nodes before :class:`ResourceLimitError`.
    """
    g.check_vertex(root)
    if mode not in _MODES:
        raise ValidationError(f"unknown projection mode {mode!r}")
    mode = _MODES[mode]
    if depth is None:
        depth = max(g.order - 1, 0)
    if depth < 0:
        raise ValidationError("projection depth must be >= 0")
    allowed = None if within is None else frozenset(within)
    b = _Builder(root, cap)

    if mode == "shortest":
        dist = shortest_levels(g, root, depth, allowed)
        kids: dict[int, list[int]] = {}
        for w in sorted(dist):
            if w == root:
                continue
            par = min(u for u in g.adj[w] if dist.get(u) == dist[w] - 1)
            kids.setdefault(par, []).append(w)
        stack = [(0, iter(kids.get(root, ())))]
        while stack:
            node, it = stack[-1]
            w = next(it, None)
            if w is None:
                stack.pop()
                continue
            idx = b.add(w, node)
            stack.append((idx, iter(kids.get(w, ()))))
        return b.freeze(depth, mode)

    on_chain = {root}

    def generated(v):
        return [u for u in g.adj[v]
                if u not in on_chain and (allowed is None or u in allowed)]

    stack = [(0, iter(generated(root) if depth > 0 else ()))]
    while stack:
        node, it = stack[-1]
        w = next(it, None)
        if w is None:
            stack.pop()
            on_chain.discard(b.vertex[node])
            continue
        idx = b.add(w, node)
        if b.level[idx] < depth:
            on_chain.add(w)
            stack.append((idx, iter(generated(w))))
    return b.freeze(depth, mode)


# --- bracket text -----------------------------------------------------------

def to_bracket(p: Projection) -> str:
    """Canonical bracket text: no whitespace, siblings in stored order."""
    out = []
    stack: list = [0]
    while stack:
        item = stack.pop()
        if isinstance(item, str):
            out.append(item)
            continue
        out.append(str(p.vertex[item]))
        kids = p.children[item]
        if kids:
            out.append("(")
            stack.append(")")
            for j, c in enumerate(reversed(kids)):
                stack.append(c)
                if j < len(kids) - 1:
                    stack.append(",")
    return "".join(out)


def parse_bracket(text: str) -> Projection:
    """Parse ``vertex [ "(" projection { "," projection } ")" ]``.

    Whitespace is ignored. Errors report the character offset.
    """
    pos = 0
    n = len(text)

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def integer():
        nonlocal pos
        skip()
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        if start == pos:
            found = repr(text[pos]) if pos < n else "end of input"
            raise ParseError(f"expected vertex id, found {found}", offset=pos)
        return int(text[start:pos])

    b = _Builder(integer(), DEFAULT_NODE_CAP)
    open_nodes = [0]
    # after a vertex: optional "(" opens its subset
    skip()
    expect_close_or_comma = False
    while True:
        skip()
        if pos >= n:
            break
        ch = text[pos]
        if ch == "(" and not expect_close_or_comma:
            pos += 1
            skip()
            if pos < n and text[pos] == ")":
                raise ParseError("empty subset '()'", offset=pos)
            open_nodes.append(len(b.vertex) - 1)
            b.add(integer(), open_nodes[-1])
            expect_close_or_comma = False
            continue
        if ch == "," and len(open_nodes) > 1:
            pos += 1
            b.add(integer(), open_nodes[-1])
            expect_close_or_comma = False
            continue
        if ch == ")" and len(open_nodes) > 1:
            pos += 1
            open_nodes.pop()
            expect_close_or_comma = True
            continue
        raise ParseError(f"unexpected {ch!r}", offset=pos)
    if len(open_nodes) > 1:
        raise ParseError("unbalanced parentheses: missing ')'", offset=pos)
    p = b.freeze(0, "parsed")
    return Projection(p.root, p.vertex, p.parent, p.level, p.children,
                      p.height, "parsed")


# --- interrogation ----------------------------------------------------------

def vertex_complete_level(p: Projection, g: Graph) -> Optional[int]:
    """Smallest level ``k_e`` at which levels ``0..k_e`` cover every vertex.

    Returns ``None`` when the projection is too shallow (or the graph is
    disconnected).
    """
    need = set(g.vertices)
    for k, vs in enumerate(p.level_sets):
        need -= vs
        if not need:
            return k
    return None


def is_edge_complete(p: Projection, g: Graph) -> bool:
    """True iff every edge of ``g`` occurs as a parent->child incidence."""
    return p.parent_child_pairs() >= set(g.edges)


def multiplicity(p: Projection, v: int) -> tuple[int, ...]:
    """Occurrences of ``v`` per level; equals simple-chain counts by length."""
    if p.mode != "full":
        raise UnsupportedModeError(f"multiplicity needs a full-chains projection, "
                                   f"got mode {p.mode!r}")
    counts = [0] * len(p.level_counts)
    for u, lv in zip(p.vertex, p.level):
        if u == v:
            counts[lv] += 1
    return tuple(counts)


def surplus_bound(p: Projection) -> int:
    """``sum C_i - sum |V_i|``: repeated occurrences within levels."""
    return sum(p.level_counts) - sum(len(s) for s in p.level_sets)


def distances_from(g: Graph, source: int) -> dict[int, int]:
    """First-occurrence level of every reachable vertex.

    These are the levels of the shortest-only projection from ``source``,
    read without materializing the tree.
    """
    if source not in g._levels:
        g.check_vertex(source)
    return dict(_full_levels(g, source))


def _full_levels(g: Graph, source: int) -> dict[int, int]:
    # memoized on the (immutable) graph; callers must not mutate the result
    d = g._levels.get(source)
    if d is None:
        d = g._levels[source] = shortest_levels(g, source, None)
    return d


def distance(g: Graph, u: int, v: int) -> int:
    g.check_vertex(v)
    d = distances_from(g, u)
    if v not in d:
        raise DisconnectedGraphError(u, v)
    return d[v]


def eccentricity(g: Graph, v: int) -> int:
    """Level at which the root's shortest-only projection becomes
    vertex-complete."""
    if v not in g._levels:
        g.check_vertex(v)
    return _ecc(g, v)


def _ecc(g: Graph, v: int) -> int:
    d = _full_levels(g, v)
    if len(d) < len(g.vertices):
        raise DisconnectedGraphError(v, next(u for u in g.vertices if u not in d))
    return max(d.values())


def diameter(g: Graph) -> int:
    if not g.vertices:
        raise ValidationError("diameter of an empty graph is undefined")
    return max(_ecc(g, v) for v in g.vertices)
