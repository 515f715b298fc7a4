"""Moore homology of finite groupoids and shift-of-finite-type invariants.

The subpackages are layered: ``abelian`` (exact integer algebra) under
``groupoid`` and ``nerve``, which feed ``moore`` (chain complexes and
homology), which feeds ``sequences`` (long exact sequences, universal
coefficients, cohomology).  ``sft`` gives closed-form answers for shifts of
finite type, and ``cli`` reads JSON documents.
"""

from .abelian import FgAbGroup, IntMatrix, smith_normal_form
from .groupoid import (
    FiniteGroupoid,
    cyclic_group_table,
    disjoint_union,
    group_groupoid,
    pair_groupoid,
    transformation_groupoid,
    unit_groupoid,
    validate_groupoid,
)
from .moore import CoefficientSpec, HomologyResult, groupoid_homology, moore_complex
from .nerve import build_nerve
from .sft import SftSpec, sft_disjoint_union, sft_homology

__all__ = [
    "CoefficientSpec", "FgAbGroup", "FiniteGroupoid", "HomologyResult", "IntMatrix",
    "SftSpec", "build_nerve", "cyclic_group_table", "disjoint_union", "group_groupoid",
    "groupoid_homology", "moore_complex", "pair_groupoid", "sft_disjoint_union",
    "sft_homology", "smith_normal_form", "transformation_groupoid", "unit_groupoid",
    "validate_groupoid",
]
