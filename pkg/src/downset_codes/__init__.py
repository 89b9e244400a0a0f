"""Few-Lee-weight codes over F_p + uF_p built from down sets of F_p^m."""

from .analytic import (
    FamilySpec,
    distribution_analytic,
    lee_weight_analytic,
    predicted_params,
    table5,
    table_distribution,
)
from .bounds import distance_optimal_check, griesmer_sum, meets_griesmer, sphere_packing_ok
from .codes import (
    DefiningSet,
    Variant,
    WeightDistribution,
    brute_force_distribution,
    codeword,
    dual_distance_class,
    gray_generator_matrix,
)
from .errors import BudgetExceeded, DimensionError, ParameterError
from .gf import FpVector, dot, hamming_weight
from .poset import DownSet, canonicalize
from .ring import RingElement, RingVector, gray_map, inner_product, lee_weight

__version__ = "0.1.0"
