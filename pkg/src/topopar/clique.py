"""Projection-guided maximum clique search and reachability density.

The search works on *restricted projections*: for an angle vertex ``v`` and
a candidate set ``C`` the first level is ``N(v) & C`` and each first-level
vertex ``u`` generates only the first-level vertices adjacent to it. Reading
the subset sizes gives an upper bound on any clique through ``v``; when
every ``{u} | gen(u)`` coincides with the whole first level, ``{v}`` plus
the first level is itself a clique.

``max_clique`` runs in three stages:

1. a greedy seed (smallest ids first) becomes the incumbent;
2. vertices whose bound cannot beat the incumbent are eliminated, pass by
   pass, until nothing changes;
3. the survivors are branched on in ascending order, recursing into each
   restricted first level, with the coincidence test accepting a clique
   without further branching.

Ties between maximum cliques resolve to the lexicographically smallest
vertex tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from .errors import ResourceLimitError, ValidationError
from .graph import Graph
from .reachability import compress

__all__ = [
    "RestrictedProjection",
    "CliqueResult",
    "restricted_projection",
    "clique_bound",
    "max_clique",
    "delta_density",
    "enumerate_delta_components",
    "DEFAULT_COMPONENT_CAP",
]

DEFAULT_COMPONENT_CAP = 10**6


@dataclass(frozen=True)
class RestrictedProjection:
    angle: int
    first_level: tuple[int, ...]
    generated: tuple[tuple[int, ...], ...]

    def gen(self, u: int) -> tuple[int, ...]:
        return self.generated[self.first_level.index(u)]

    def coincides(self) -> bool:
        """Every ``{u} | gen(u)`` equals the first level."""
        k = len(self.first_level)
        return all(len(g) == k - 1 for g in self.generated)

    def to_bracket(self) -> str:
        parts = [str(u) + (f"({','.join(map(str, g))})" if g else "")
                 for u, g in zip(self.first_level, self.generated)]
        return str(self.angle) + (f"({','.join(parts)})" if parts else "")

    def __str__(self):
        return self.to_bracket()


@dataclass(frozen=True)
class EliminationTrace:
    seed: tuple[int, ...]
    # per pass, the (vertex, bound) pairs eliminated
    passes: tuple[tuple[tuple[int, int], ...], ...]
    survivors: tuple[int, ...]


@dataclass(frozen=True)
class CliqueResult:
    vertices: tuple[int, ...]
    delta: int = 1
    trace: EliminationTrace | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.vertices)


def _restricted(g: Graph, v: int, cand: Iterable[int]) -> RestrictedProjection:
    nv = g.nbr_set(v)
    first = tuple(sorted(u for u in cand if u in nv))
    fs = frozenset(first)
    gens = tuple(tuple(x for x in g.adj[u] if x in fs) for u in first)
    return RestrictedProjection(v, first, gens)


def restricted_projection(g: Graph, v: int,
                          candidates: Iterable[int] | None = None) -> RestrictedProjection:
    """First level ``N(v) & candidates`` with subsets cut to that level."""
    cand = set(g.vertices) if candidates is None else set(candidates)
    if v not in cand:
        raise ValidationError(f"angle vertex {v} is not among the candidates")
    for u in cand:
        g.check_vertex(u)
    return _restricted(g, v, cand)


def clique_bound(rp: RestrictedProjection) -> int:
    """Largest ``s`` such that ``s - 1`` first-level vertices generate at least
    ``s - 2`` vertices each. No clique through the angle vertex is larger.
    """
    return _bound_from_sizes([len(g) for g in rp.generated])


def _bound(g: Graph, v: int, cand: frozenset) -> int:
    # clique_bound of the restricted projection, from subset sizes alone
    first = g.nbr_set(v) & cand
    sets = g._sets
    return _bound_from_sizes([len(sets[u] & first) for u in first])


def _bound_from_sizes(sizes: list[int]) -> int:
    sizes.sort(reverse=True)
    best = 1
    for s in range(2, len(sizes) + 2):
        # the (s-1)-th largest subset must have >= s-2 members
        if sizes[s - 2] >= s - 2:
            best = s
        else:
            break
    return best


def _greedy_seed(g: Graph, verts: Sequence[int]) -> tuple[int, ...]:
    clique: list[int] = []
    cand = list(verts)
    while cand:
        v = cand[0]
        clique.append(v)
        nv = g.nbr_set(v)
        cand = [u for u in cand[1:] if u in nv]
    return tuple(clique)


class _Search:
    def __init__(self, g: Graph, best: tuple[int, ...]):
        self.sets = g._sets
        self.best = best

    def expand(self, current: list[int], cand: list[int]):
        # cand is ascending, so each restricted first level is too
        if not cand:
            if len(current) > len(self.best):
                self.best = tuple(current)
            return
        sets = self.sets
        for i, v in enumerate(cand):
            if len(current) + len(cand) - i <= len(self.best):
                return
            nv = sets[v]
            first = [u for u in cand[i + 1:] if u in nv]
            fs = frozenset(first)
            sizes = [len(sets[u] & fs) for u in first]
            if all(k == len(first) - 1 for k in sizes):
                # coincidence: v and its whole first level form a clique
                if len(current) + 1 + len(first) > len(self.best):
                    self.best = tuple(current + [v] + first)
                continue
            if len(current) + _bound_from_sizes(sizes) <= len(self.best):
                continue
            self.expand(current + [v], first)


def max_clique(g: Graph) -> CliqueResult:
    """Maximum clique of ``g`` (lexicographically smallest among ties).

    The returned result carries an :class:`EliminationTrace` recording the
    seed and each elimination pass.
    """
    if not g.vertices:
        raise ValidationError("max_clique of an empty graph is undefined")
    seed = _greedy_seed(g, g.vertices)
    alive = list(g.vertices)
    passes = []
    while True:
        dropped = []
        alive_set = frozenset(alive)
        for v in alive:
            b = _bound(g, v, alive_set)
            if b <= len(seed):
                dropped.append((v, b))
        if not dropped:
            break
        passes.append(tuple(dropped))
        gone = {v for v, _ in dropped}
        alive = [v for v in alive if v not in gone]
    search = _Search(g, seed)
    search.expand([], alive)
    trace = EliminationTrace(seed, tuple(passes), tuple(alive))
    return CliqueResult(tuple(sorted(search.best)), 1, trace)


def delta_density(g: Graph, delta: int) -> CliqueResult:
    """Maximum clique of the ``delta``-reachability graph; its size is the
    potential parallelism for fully connected tasks at that budget."""
    rg = compress(g, delta)
    return replace(max_clique(rg.derived), delta=delta)


def _maximal_cliques(g: Graph, min_size: int, cap: int):
    # Bron-Kerbosch with Tomita pivoting
    out = []

    def bk(r, p, x):
        if not p and not x:
            if len(r) >= min_size:
                out.append(tuple(sorted(r)))
                if len(out) > cap:
                    raise ResourceLimitError("too many reachability components", cap)
            return
        if len(r) + len(p) < min_size:
            return
        pivot = max(p | x, key=lambda u: (len(p & g.nbr_set(u)), -u))
        for v in sorted(p - g.nbr_set(pivot)):
            nv = g.nbr_set(v)
            bk(r + [v], p & nv, x & nv)
            p = p - {v}
            x = x | {v}

    if g.vertices:
        bk([], set(g.vertices), set())
    return out


def enumerate_delta_components(g: Graph, delta: int, min_size: int = 1,
                               cap: int = DEFAULT_COMPONENT_CAP) -> list[tuple[int, ...]]:
    """All maximal cliques of the ``delta``-reachability graph with at least
    ``min_size`` vertices, each ascending, the list sorted."""
    if min_size < 1:
        raise ValidationError("min_size must be >= 1")
    rg = compress(g, delta)
    return sorted(_maximal_cliques(rg.derived, min_size, cap))
