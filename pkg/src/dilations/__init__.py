"""Exact combinatorics of graph dilations.

Construct dilations and generalized powers of small graphs, compute
domination, matching, and transversal numbers with reproducible optimal
certificates, classify support graphs against the structural families that
decide when domination equals matching, and machine-verify the package's
identities over enumerated instances.
"""

from .berge import (BergeWitness, natural_berge_witness, random_berge,
                    search_berge_witness, verify_berge_witness)
from .dilation import (BlockWitness, DilationClass, DilationSpec,
                       DilationPropertyReport, RankDeficitWarning, check_dilation_properties,
                       classify_dilation, dilate, generalized_power,
                       random_dilation)
from .errors import (CapacityError, ConstraintError, DomainError,
                     FeasibilityError, ParseError, SearchBudgetExceeded,
                     StructuralError, WitnessError)
from .families import (ExtremalGamma1, FamilyVerdict, derive_g2nb_candidates,
                       extremal_class_gamma1, in_family_g1, in_family_g2b,
                       in_family_g2nb, is_generalized_corona,
                       load_g2nb_candidates, predict_gamma,
                       union_family_member)
from .graphs import (FamilySpec, Graph, StructureProfile, complete,
                     complete_bipartite, complete_minus_clique, corona,
                     cp_vee_cq, cycle, g_nr, generate, ghat_nr,
                     graph_from_family_string, parse_edge_list, parse_family,
                     parse_graph, parse_graph6, path, serialize_graph, star,
                     structure_profile, t1, t2, to_edge_list, to_graph6,
                     vertex_amalgam)
from .harness import (SUITES, FailureRecord, VerificationReport,
                      crosscheck_extremal_gamma0, crosscheck_extremal_gamma1,
                      verify_counterexample, verify_hereditary, verify_nonextremal)
from .hypergraphs import (Hypergraph, builtin_hypergraph, parse_hypergraph,
                          to_hypergraph_text)
from .invariants import (Certificate, KegVerdict, check_certificate,
                         domination_number, is_keg, matching_number,
                         transversal_number)
from .isomorphism import (canonical_form, canonical_labeling,
                          enumerate_connected, is_isomorphic)

__version__ = "0.1.0"
