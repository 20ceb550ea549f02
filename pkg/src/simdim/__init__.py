"""Exact (simultaneous) metric and adjacency dimension of small graphs."""

from .errors import (BudgetExceeded, CapacityExceeded, HypothesisNotMet, InvalidParameter,
                     ParseError, SimdimError, UnsupportedMetric)
from .graph import (ADJ, FULL, Full, Graph, GraphFamily, MetricTable, Truncated, build_standard,
                    complement, complete, complete_bipartite, cycle, diameter, disjoint_union, empty,
                    girth, is_connected, metric_table, parse_metric, path)
from .textio import (format_graph, format_graphs, load_family, load_graph, parse_family,
                     parse_graph, parse_graphs, save_graphs)
from .resolving import (BasisCatalog, GapProfile, PremiseProfile, TwinClass, adjacency_dimension,
                        distinguisher_constraints, enumerate_bases, gamma, gamma_prime,
                        gamma_prime_witness, gap_profile, is_dominating, is_generator,
                        metric_dimension, min_dominating_set, min_generator, premise_profile,
                        simultaneous_adjacency_dimension, simultaneous_gamma,
                        simultaneous_metric_dimension, trap_of, twin_classes, twin_lower_bound)
from .products import CoronaLayout, corona, corona_layout, family_corona, family_join, join
from .families import (StabilizerSpec, adjacency_basis, is_member_B, is_member_Bf, iter_stabilizer,
                       sample_members, small_iso, stabilizer_enumerate, weakly_induced)
from .verify import VerificationReport, format_report
from .suite import bundled_suite, parse_suite, run_suite

__version__ = "0.1.0"
