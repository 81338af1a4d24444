"""Topological fault tolerance under a fixed number of processor faults.

Every fault set ``F`` of the given multiplicity is removed in turn and the
reachability density of ``G - F`` is recomputed. Distances are measured in
the damaged graph, since faults lengthen or sever routes.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

from .clique import delta_density
from .errors import ResourceLimitError, ValidationError
from .graph import Graph, remove_vertices

__all__ = ["FaultReport", "ToleranceVerdict", "worst_case_density",
           "is_fault_tolerant", "DEFAULT_FAULT_SET_CAP"]

DEFAULT_FAULT_SET_CAP = 10**6


@dataclass(frozen=True)
class FaultReport:
    delta: int
    f: int
    min_density: int
    witness: tuple[int, ...]
    examined: int
    clique: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"delta": self.delta, "f": self.f, "min_density": self.min_density,
                "witness": list(self.witness), "examined": self.examined,
                "distances": "measured in G - F"}


@dataclass(frozen=True)
class ToleranceVerdict:
    tolerant: bool
    counterexample: Optional[tuple[int, ...]] = None
    density: Optional[int] = None
    examined: int = 0

    def __bool__(self):
        return self.tolerant


def _fault_sets(g: Graph, delta: int, f: int, cap: Optional[int]):
    if not isinstance(delta, int) or delta < 1:
        raise ValidationError("delta must be an integer >= 1")
    n = g.order
    if not 0 <= f < n:
        raise ValidationError(f"fault multiplicity f must satisfy 0 <= f < n={n}")
    count = math.comb(n, f)
    if cap is not None and count > cap:
        raise ResourceLimitError(
            f"{count} fault sets of size {f}; use a smaller f, or is_fault_tolerant "
            "which stops at the first counterexample", cap)
    return itertools.combinations(g.vertices, f)


def worst_case_density(g: Graph, delta: int, f: int,
                       cap: int = DEFAULT_FAULT_SET_CAP) -> FaultReport:
    """Minimum density over all fault sets of size ``f``, with the
    lexicographically first fault set attaining it."""
    best = None
    examined = 0
    for fs in _fault_sets(g, delta, f, cap):
        examined += 1
        res = delta_density(remove_vertices(g, fs), delta)
        if best is None or res.size < best[0]:
            best = (res.size, fs, res.vertices)
    size, witness, clique = best
    return FaultReport(delta, f, size, tuple(witness), examined, clique)


def is_fault_tolerant(g: Graph, delta: int, p: int, f: int,
                      cap: int = DEFAULT_FAULT_SET_CAP) -> ToleranceVerdict:
    """True iff every fault set of size ``f`` leaves density ``>= p``.

    Stops at the first (lexicographic) counterexample, so the cap applies to
    the number of sets actually examined rather than to ``C(n, f)``.
    """
    if p < 1:
        raise ValidationError("p must be >= 1")
    examined = 0
    for fs in _fault_sets(g, delta, f, None):
        if examined == cap:
            raise ResourceLimitError(
                f"examined {cap} fault sets of size {f} without a counterexample", cap)
        examined += 1
        size = delta_density(remove_vertices(g, fs), delta).size
        if size < p:
            return ToleranceVerdict(False, tuple(fs), size, examined)
    return ToleranceVerdict(True, None, None, examined)
