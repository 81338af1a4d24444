"""Topology analysis of parallel computing systems via projective graph descriptions."""

from .clique import (CliqueResult, RestrictedProjection, clique_bound, delta_density,
                     enumerate_delta_components, max_clique, restricted_projection)
from .embedding import Embedding, embed, embed_ring, enumerate_cycles, girth
from .errors import (DisconnectedGraphError, InfeasibleError, ParseError,
                     ResourceLimitError, TopoError, UnsupportedModeError, ValidationError)
from .faults import FaultReport, is_fault_tolerant, worst_case_density
from .graph import (Graph, from_edge_list, from_edges, generate_topology, remove_vertices,
                    to_edge_list)
from .model import (DelayModel, Directive, ParallelPlan, TaskVolumes, achieved_efficiency,
                    achieved_speedup, max_feasible_parallelism, per_branch,
                    reachability_budget, required_distance_for_efficiency,
                    required_distance_for_speedup, tech_coefficient)
from .projection import (Projection, build_projection, diameter, distance, eccentricity,
                         is_edge_complete, multiplicity, parse_bracket, to_bracket,
                         vertex_complete_level)
from .reachability import ReachGraph, compress

__version__ = "0.1.0"
