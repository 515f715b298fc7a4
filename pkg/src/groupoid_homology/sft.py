"""Homology of shift-of-finite-type groupoids from their adjacency matrices.

For an ``N x N`` adjacency matrix ``A`` with no zero row or column,
``H_0 = coker(1 - A^T)``, ``H_1 = ker(1 - A^T)`` (free), and higher groups vanish.

>>> str(sft_homology(SftSpec.from_rows([[2, 1], [1, 0]]))[0])
'Z/2'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .abelian import FgAbGroup, IntMatrix, block_diag, cokernel_group, direct_sum, rank
from .moore import INTEGERS, CoefficientSpec, HomologyResult
from .sequences.uct import uct_homology


class SftError(ValueError):
    def __init__(self, message: str, index: int | None = None) -> None:
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class SftSpec:
    matrix: IntMatrix

    def __post_init__(self) -> None:
        m = self.matrix
        if m.rows != m.cols:
            raise SftError(f"adjacency matrix must be square, got {m.rows}x{m.cols}")
        if m.rows == 0:
            raise SftError("adjacency matrix is empty")
        for i in range(m.rows):
            for j in range(m.cols):
                if m[i, j] < 0:
                    raise SftError(f"negative entry {m[i, j]} at ({i}, {j})", i)
        for i in range(m.rows):
            if not any(m.row(i)):
                raise SftError(f"row {i} is zero", i)
        for j in range(m.cols):
            if not any(m.col(j)):
                raise SftError(f"column {j} is zero", j)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> SftSpec:
        return cls(IntMatrix.from_rows(rows))

    @property
    def size(self) -> int:
        return self.matrix.rows

    def bowen_franks_matrix(self) -> IntMatrix:
        """``1 - A^T``."""
        return IntMatrix.identity(self.size) - self.matrix.T


def sft_homology(spec: SftSpec, max_degree: int = 2) -> HomologyResult:
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    m = spec.bowen_franks_matrix()
    groups = [cokernel_group(m), FgAbGroup(spec.size - rank(m))]
    groups += [FgAbGroup()] * (max_degree - 1)
    return HomologyResult(INTEGERS, tuple(groups[: max_degree + 1]))


def sft_homology_with_coefficients(spec: SftSpec | Sequence[SftSpec], a: CoefficientSpec | str, n: int) -> FgAbGroup:
    """Middle term of the universal coefficient sequence; a list of specs is taken as a disjoint union."""
    h = sft_disjoint_union(spec) if isinstance(spec, (list, tuple)) else sft_homology(spec, max(n, 1))
    if n > h.max_degree:
        h = HomologyResult(INTEGERS, h.groups + (FgAbGroup(),) * (n - h.max_degree))
    return uct_homology(h, a, n).middle


def sft_disjoint_union(parts: Sequence[SftSpec], max_degree: int = 2) -> HomologyResult:
    if not parts:
        raise SftError("need at least one part")
    results = [sft_homology(p, max_degree) for p in parts]
    return HomologyResult(INTEGERS, tuple(direct_sum([r[n] for r in results]) for n in range(max_degree + 1)))


def block_diagonal_spec(parts: Sequence[SftSpec]) -> SftSpec:
    """Adjacency matrix of the disjoint union of the underlying graphs."""
    return SftSpec(block_diag([p.matrix for p in parts]))
