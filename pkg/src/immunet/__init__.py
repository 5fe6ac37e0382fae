"""Spectral node immunization: pick k vertices whose removal most reduces
the largest adjacency eigenvalue of a graph."""
from .errors import CapabilityError, GraphParseError, NonConvergenceError, StateError
from .graph import (Graph, codegree, degree, from_edges, parse_edge_list, read_edge_list,
                    remove_vertices, to_edge_list, write_ids)
from .spectral import EigendropReport, SpectralResult, eigendrop, lambda1, trace_power
from .walkscore import (ScoreState, compute_scores, cw4_vertex, cw_brute, gp_set,
                        update_scores)
from .selection import (METHODS, Selection, brute_force_optimal, greedy1, greedy2, greedy3,
                        max_degree, netshield, select, updated_max_degree)
from .episim import SisConfig, SisResult, epidemic_threshold, save_ratio, sis_simulate

__version__ = "0.1.0"
