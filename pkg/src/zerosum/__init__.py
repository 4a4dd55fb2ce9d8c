"""Reverse discrepancy of complete and equipartite uniform hypergraphs.

Exact upper bounds on the unbalancedness ``X(H) = max_f min_v |sum_{A ni v} f(A)|``
over zero-sum edge weightings ``f: E -> [-1, 1]``, the weightings attaining
them, and two independent exact oracles to check both.
"""

from .bounds import (BoundReport, balogh_smyth_bound, chi, complete_bound, complete_partite_bound,
                     edge_class_sizes, equipartite_bound, f_monotonicity_check, fractional_level_value,
                     g_difference_identity, g_function, m_of_k)
from .constructions import (Construction, equipartite_majority, equipartite_threshold,
                            majority_weighting_complete, optimal_weighting_complete)
from .cube import (CubeFunction, ProductMeasure, SemiThreshold, abs_expectation, conditional_expectation,
                   expectation, level_one_correlation, max_semi_threshold, measure_of_point,
                   semi_threshold_function, shift, shift_to_uniform, xbar, xbar_semi_threshold)
from .errors import (DegenerateMeasure, InstanceTooLarge, InvalidParameters, InvalidWeighting,
                     NoFeasibleWeighting, RegimeViolation, ZeroSumError)
from .hypergraph import (Hypergraph, SignPattern, Weighting, complete_equipartite, complete_hypergraph,
                         imbalances, total_sum, unbalancedness, vertex_imbalance)
from .solver import (OracleResult, cube_projection, enumerate_pm1_max, exact_complete_max, lp_max,
                     symmetrize_complete, symmetrize_partite)

__version__ = "0.1.0"
