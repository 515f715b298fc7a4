"""Long exact sequences, universal coefficients and cohomology."""

from .cohomology import CochainComplex, cohomology, dual_cochain_complex, pullback_coboundary
from .les import (
    ChainSES,
    ExactnessError,
    ExactnessViolation,
    LesNode,
    LongExactSequence,
    connecting_class,
    connecting_map,
    coordinate_projection,
    direct_sum_complex,
    require_exact,
    restricted_complex,
    ses_failures,
    snake_les,
    subgroupoid_ses,
    verify_exactness,
)
from .mayer_vietoris import CoverError, MvCover, mv_les, mv_ses
from .uct import (
    ChainUctRow,
    NaturalityFailure,
    UctSequence,
    chain_map_naturality,
    chain_uct_row,
    chain_uct_sequence,
    distinct_values,
    finite_image_predicate,
    split_sum,
    tensor_comparison,
    uct_cohomology,
    uct_homology,
    uct_naturality_check,
)

__all__ = [
    "ChainSES", "ChainUctRow", "CochainComplex", "CoverError", "ExactnessError",
    "ExactnessViolation", "LesNode", "LongExactSequence", "MvCover", "NaturalityFailure",
    "UctSequence", "chain_map_naturality", "chain_uct_row", "chain_uct_sequence",
    "cohomology", "connecting_class", "connecting_map", "coordinate_projection",
    "direct_sum_complex", "distinct_values", "dual_cochain_complex",
    "finite_image_predicate", "mv_les", "mv_ses", "pullback_coboundary",
    "require_exact", "restricted_complex", "ses_failures", "snake_les",
    "subgroupoid_ses", "tensor_comparison", "uct_cohomology", "uct_homology",
    "uct_naturality_check", "verify_exactness",
]
