"""Exact domination-criticality and matching certificates for small graphs."""

__version__ = "0.1.0"

from .graph import (ComponentSummary, Graph, GraphError, VertexSet, bits,
                    components_after_deletion, construct_named, to_list, vset)
from .graph6 import Graph6Error, parse_graph6, to_graph6
from .canon import canonical_form, is_isomorphic
from .enumeration import enumerate_graphs
from .domination import (DominationReport, CriticalityCertificate, domination_number, dv_pair_graph,
                         dv_sets, is_dominating, is_gamma_edge_critical, is_gamma_vertex_critical)
from .matching import (DeficiencyWitness, GallaiEdmonds, MatchingReport, has_near_perfect_matching,
                       has_perfect_matching, is_bicritical, is_factor_critical, maximum_matching,
                       near_pm_witness, tutte_witness)
from .structure import (cut_lemma_check, degree1_lemma_check, is_star_free, is_triangle_free,
                        vertex_connectivity)
from .analysis import WitnessAnalysis, minimal_witness_analysis
from .search import reconstruct_case_1_2, reconstruct_case_3_2, reconstruct_case_4_2

__all__ = [name for name in dir() if not name.startswith("_")]
