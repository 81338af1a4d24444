"""Amdahl-style speedup model with distance-proportional exchange delay.

A ``(W, Q)`` task has computation volume ``W`` (time on one processor) and
exchange volume ``Q`` (bytes). Split into ``p`` branches, each branch
computes ``w = W/p`` and exchanges ``q = Q/p`` with information-adjacent
branches. One hop costs ``t(q)`` and an exchange across ``L`` hops costs
``L * t(q)``. Computation overlaps communication, so a branch finishes
after ``max(w, L * t(q))`` and the speedup is

    S = min(p, W / (L * t(Q/p)))

Inverting for ``L`` at a directive speedup or efficiency gives the largest
admissible distance between information-adjacent processors; its integer
part is the reachability budget that the interconnect must honor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Optional

from .clique import delta_density
from .errors import InfeasibleError, ValidationError
from .graph import Graph

__all__ = [
    "TaskVolumes",
    "BranchLoad",
    "DelayModel",
    "Directive",
    "ParallelPlan",
    "PlanStep",
    "per_branch",
    "achieved_speedup",
    "achieved_efficiency",
    "required_distance_for_speedup",
    "required_distance_for_efficiency",
    "required_distance",
    "reachability_budget",
    "tech_coefficient",
    "max_feasible_parallelism",
]


@dataclass(frozen=True)
class TaskVolumes:
    W: float
    Q: float = 0.0

    def __post_init__(self):
        if not self.W > 0:
            raise ValidationError(f"computation volume W must be > 0, got {self.W}")
        if not self.Q >= 0:
            raise ValidationError(f"exchange volume Q must be >= 0, got {self.Q}")

    def scaled(self, m: float) -> "TaskVolumes":
        return TaskVolumes(self.W * m, self.Q * m)


@dataclass(frozen=True)
class BranchLoad:
    p: int
    w: float
    q: float


@dataclass(frozen=True)
class DelayModel:
    """Affine per-hop delay ``t(q) = alpha + beta * q``."""

    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if self.alpha < 0 or self.beta < 0:
            raise ValidationError("delay coefficients must be non-negative")
        if self.alpha + self.beta <= 0:
            raise ValidationError("degenerate delay model: alpha = beta = 0")

    def __call__(self, q: float) -> float:
        return self.alpha + self.beta * q


def _check_p(p):
    if not isinstance(p, int) or p < 1:
        raise ValidationError(f"branch count p must be an integer >= 1, got {p!r}")


def per_branch(tv: TaskVolumes, p: int) -> BranchLoad:
    _check_p(p)
    return BranchLoad(p, tv.W / p, tv.Q / p)


def _hop_time(tv, p, dm):
    t = dm(tv.Q / p)
    if t <= 0:
        raise ValidationError("delay model evaluates to zero; distance is unbounded")
    return t


def achieved_speedup(tv: TaskVolumes, p: int, L: float, dm: DelayModel) -> float:
    """Speedup on ``p`` branches when adjacent branches sit ``L`` hops apart."""
    _check_p(p)
    if L < 1:
        raise ValidationError(f"distance L must be >= 1, got {L}")
    if p == 1:
        return 1.0
    t = dm(tv.Q / p)
    if t == 0:
        # nothing to send, so nothing limits the branches
        return float(p)
    return min(float(p), tv.W / (L * t))


def achieved_efficiency(tv: TaskVolumes, p: int, L: float, dm: DelayModel) -> float:
    return achieved_speedup(tv, p, L, dm) / p


def _infeasible_if_short(L, what):
    if L < 1:
        raise InfeasibleError(f"{what}: admissible distance {L:.6g} < 1, "
                              "even adjacent processors are too slow", distance=L)
    return L


def required_distance_for_speedup(tv: TaskVolumes, p: int, target: float,
                                  dm: DelayModel) -> float:
    """Largest admissible distance ``L_S(p) = W / (S * t(Q/p))``.

    Raises :class:`InfeasibleError` when ``target > p`` or the distance
    falls below one hop.
    """
    _check_p(p)
    if p < 2:
        raise ValidationError("required distance needs p >= 2")
    if target < 1:
        raise ValidationError(f"speedup target must be >= 1, got {target}")
    if target > p:
        raise InfeasibleError(f"speedup {target} exceeds p={p}")
    L = tv.W / (target * _hop_time(tv, p, dm))
    return _infeasible_if_short(L, f"speedup {target} on p={p}")


def required_distance_for_efficiency(tv: TaskVolumes, p: int, target: float,
                                     dm: DelayModel) -> float:
    """Largest admissible distance ``L_E(p) = W / (p * E * t(Q/p))``."""
    _check_p(p)
    if p < 2:
        raise ValidationError("required distance needs p >= 2")
    if not 0 < target <= 1:
        raise ValidationError(f"efficiency target must be in (0, 1], got {target}")
    L = tv.W / (p * target * _hop_time(tv, p, dm))
    return _infeasible_if_short(L, f"efficiency {target} on p={p}")


def reachability_budget(L: float) -> int:
    """Integer part of the admissible distance; at least one hop."""
    if not L >= 1:
        raise InfeasibleError(f"admissible distance {L} < 1 has no reachability budget",
                              distance=L)
    return math.floor(L)


def tech_coefficient(dm: DelayModel, q: float, k_p: float) -> float:
    """How much of a ``k_p``-fold processor increase the network converts
    into per-hop delay reduction: ``t(q) / (k_p * t(q / k_p))``.

    Pure-latency networks give ``1/k_p``, pure-bandwidth networks give 1.
    """
    if q < 0:
        raise ValidationError("q must be >= 0")
    if not k_p > 0:
        raise ValidationError("k_p must be > 0")
    denom = dm(q / k_p)
    if denom <= 0:
        raise ValidationError("delay model vanishes at q/k_p")
    return dm(q) / (k_p * denom)


# --- planner ----------------------------------------------------------------

@dataclass(frozen=True)
class Directive:
    kind: Literal["speedup", "efficiency"]
    target: float

    def __post_init__(self):
        if self.kind not in ("speedup", "efficiency"):
            raise ValidationError(f"unknown directive kind {self.kind!r}")


def required_distance(tv: TaskVolumes, p: int, directive: Directive,
                      dm: DelayModel) -> float:
    if directive.kind == "speedup":
        return required_distance_for_speedup(tv, p, directive.target, dm)
    return required_distance_for_efficiency(tv, p, directive.target, dm)


@dataclass(frozen=True)
class PlanStep:
    """One row of the planner scan."""

    p: int
    L: Optional[float]
    delta: Optional[int]
    density: Optional[int]
    feasible: bool


@dataclass(frozen=True)
class ParallelPlan:
    directive: Directive
    feasible: bool
    p: Optional[int] = None
    L: Optional[float] = None
    delta: Optional[int] = None
    witness_clique: Optional[tuple[int, ...]] = None
    scan: tuple[PlanStep, ...] = ()

    def to_dict(self) -> dict:
        return {
            "directive": self.directive.kind,
            "target": self.directive.target,
            "p": self.p,
            "L": self.L,
            "delta": self.delta,
            "feasible": self.feasible,
            "witness_clique": list(self.witness_clique) if self.witness_clique else None,
        }


def max_feasible_parallelism(g: Graph, tv: TaskVolumes, dm: DelayModel,
                             directive: Directive) -> ParallelPlan:
    """Largest ``p`` in ``2..n`` whose reachability budget the graph can host.

    ``p`` is feasible when ``L(p) >= 1`` and the graph's density at
    ``floor(L(p))`` is at least ``p``. Feasibility is not monotone in ``p``,
    so every ``p`` is evaluated.
    """
    densities: dict[int, object] = {}
    steps = []
    best = None
    for p in range(2, g.order + 1):
        try:
            L = required_distance(tv, p, directive, dm)
        except InfeasibleError as exc:
            steps.append(PlanStep(p, exc.distance, None, None, False))
            continue
        delta = reachability_budget(L)
        if delta not in densities:
            densities[delta] = delta_density(g, delta)
        res = densities[delta]
        ok = res.size >= p
        steps.append(PlanStep(p, L, delta, res.size, ok))
        if ok:
            best = (p, L, delta, res.vertices[:p])
    if best is None:
        return ParallelPlan(directive, False, scan=tuple(steps))
    p, L, delta, clique = best
    return ParallelPlan(directive, True, p, L, delta, clique, tuple(steps))
