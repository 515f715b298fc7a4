"""Exact integer linear algebra and finitely generated abelian groups."""

from .groups import (
    AbHom,
    FgAbGroup,
    IllDefinedHomomorphism,
    Presentation,
    Subquotient,
    check_exact_at,
    cokernel_group,
    direct_sum,
    ext1,
    hom_group,
    hom_image_kernel,
    present,
    tensor,
    tor1,
)
from .matrix import IntMatrix, block_diag, hstack, vstack
from .normal_forms import (
    HermiteForm,
    SmithForm,
    hermite_form,
    hermite_solve,
    integer_kernel,
    invariant_factors,
    lattice_basis,
    rank,
    rank_mod_p,
    smith_normal_form,
)

__all__ = [
    "AbHom", "FgAbGroup", "HermiteForm", "IllDefinedHomomorphism", "IntMatrix",
    "Presentation", "SmithForm", "Subquotient", "block_diag", "check_exact_at",
    "cokernel_group", "direct_sum", "ext1", "hermite_form", "hermite_solve",
    "hom_group", "hom_image_kernel", "hstack", "integer_kernel", "invariant_factors",
    "lattice_basis", "present", "rank", "rank_mod_p", "smith_normal_form", "tensor",
    "tor1", "vstack",
]
