"""Chip-firing on finite multigraphs: burning, reduced divisors, rank,
gonality search, sourceless orientations, and brambles."""

from .brambles import (
    BRAMBLE,
    NOT_BRAMBLE,
    STRICT_BRAMBLE,
    BrambleFamily,
    classify,
    order,
    tree_product_bramble,
)
from .catalog import FamilySpec, genus1_census, make, small_instances
from .divisor import Divisor, canonical_divisor, fire_set, laplacian
from .errors import BudgetExceededError, ChipfireError, ValidationError
from .gonality import (
    GonalityCertificate,
    ProductReport,
    SearchOptions,
    conjecture_bound,
    enumerate_effective_classes,
    expected_product_gonality,
    gonality,
    product_report,
    replicate_divisor,
)
from .multigraph import (
    Multigraph,
    ProductIndex,
    are_isomorphic,
    build,
    cartesian_product,
)
from .orientations import (
    Orientation,
    divisor_from_orientation,
    find_sourceless_rep,
    is_sourceless,
    rook_defeat_instance,
    sourceless_divisor_classes,
)
from .rank import RankResult, has_positive_rank, rank, riemann_roch_residual
from .reduction import (
    BurnReport,
    dhar_burn,
    has_effective_rep,
    is_equivalent,
    q_reduce,
)
from .verify import SUITE_NAMES, Check, SuiteReport, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "BRAMBLE",
    "NOT_BRAMBLE",
    "STRICT_BRAMBLE",
    "BrambleFamily",
    "BudgetExceededError",
    "BurnReport",
    "Check",
    "ChipfireError",
    "Divisor",
    "FamilySpec",
    "GonalityCertificate",
    "Multigraph",
    "Orientation",
    "ProductIndex",
    "ProductReport",
    "RankResult",
    "SUITE_NAMES",
    "SearchOptions",
    "SuiteReport",
    "ValidationError",
    "are_isomorphic",
    "build",
    "canonical_divisor",
    "cartesian_product",
    "classify",
    "conjecture_bound",
    "dhar_burn",
    "divisor_from_orientation",
    "enumerate_effective_classes",
    "expected_product_gonality",
    "find_sourceless_rep",
    "fire_set",
    "genus1_census",
    "gonality",
    "has_effective_rep",
    "has_positive_rank",
    "is_equivalent",
    "is_sourceless",
    "laplacian",
    "make",
    "order",
    "product_report",
    "q_reduce",
    "rank",
    "replicate_divisor",
    "riemann_roch_residual",
    "rook_defeat_instance",
    "run_all",
    "run_suite",
    "small_instances",
    "sourceless_divisor_classes",
    "tree_product_bramble",
]
