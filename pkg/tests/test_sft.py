import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from groupoid_homology.abelian import FgAbGroup, IntMatrix
from groupoid_homology.sft import (
    SftError,
    SftSpec,
    block_diagonal_spec,
    sft_disjoint_union,
    sft_homology,
    sft_homology_with_coefficients,
)

A = SftSpec.from_rows([[2, 1], [1, 0]])
B = SftSpec.from_rows([[2, 1], [1, 2]])
C = SftSpec.from_rows([[3]])
Z, Z2 = FgAbGroup(1), FgAbGroup(0, (2,))


def test_golden_values():
    assert sft_homology(A).groups[:2] == (Z2, FgAbGroup())
    assert sft_homology(B).groups[:2] == (Z, Z)
    assert sft_homology(C).groups[:2] == (Z2, FgAbGroup())
    assert sft_homology(A)[2].is_trivial()
    union = sft_disjoint_union([A, B, C])
    assert union[0] == FgAbGroup(1, (2, 2)) and union[1] == Z


def test_golden_values_with_coefficients():
    parts = [A, B, C]
    for n in (0, 1):
        assert sft_homology_with_coefficients(parts, "Z/2", n) == FgAbGroup(0, (2, 2, 2))
        for p in (3, 5, 7):
            assert sft_homology_with_coefficients(parts, f"Z/{p}", n) == FgAbGroup(0, (p,))
    assert sft_homology_with_coefficients(A, "Z/4", 1) == Z2
    assert sft_homology_with_coefficients(A, "Z/2", 3).is_trivial()


@pytest.mark.parametrize(
    "rows, index, needle",
    [([[1, 0], [1, 0]], 1, "column 1"), ([[1, 1], [0, 0]], 1, "row 1"), ([[0, 1], [0, 1]], 0, "column 0")],
)
def test_zero_rows_and_columns_are_named(rows, index, needle):
    with pytest.raises(SftError) as exc:
        SftSpec.from_rows(rows)
    assert exc.value.index == index and needle in str(exc.value)


def test_other_malformed_matrices():
    for rows in ([[1, 1]], [], [[1, -1], [1, 1]]):
        with pytest.raises(SftError):
            SftSpec.from_rows(rows)


square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(0, 3), min_size=n, max_size=n), min_size=n, max_size=n)
)


def _valid(rows):
    n = len(rows)
    return all(any(r) for r in rows) and all(any(rows[i][j] for i in range(n)) for j in range(n))


@settings(max_examples=150, deadline=None)
@given(square)
def test_order_of_h0_is_determinant(rows):
    if not _valid(rows):
        return
    spec = SftSpec.from_rows(rows)
    det = spec.bowen_franks_matrix().determinant()
    h = sft_homology(spec)
    if det:
        assert h[0].order == abs(det) and h[1].is_trivial()
    else:
        assert h[0].free_rank == h[1].free_rank > 0


@settings(max_examples=100, deadline=None)
@given(square, st.randoms(use_true_random=False))
def test_relabelling_states_preserves_homology(rows, rnd):
    if not _valid(rows):
        return
    n = len(rows)
    perm = list(range(n))
    rnd.shuffle(perm)
    permuted = [[rows[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    assert sft_homology(SftSpec.from_rows(rows)) == sft_homology(SftSpec.from_rows(permuted))


def test_block_diagonal_agrees_with_direct_sum():
    rng = random.Random(9)
    specs = []
    while len(specs) < 12:
        n = rng.randint(1, 3)
        rows = [[rng.randint(0, 3) for _ in range(n)] for _ in range(n)]
        if _valid(rows):
            specs.append(SftSpec.from_rows(rows))
    for k in range(1, 4):
        for start in range(0, len(specs) - k, 3):
            parts = specs[start: start + k]
            assert sft_homology(block_diagonal_spec(parts)) == sft_disjoint_union(parts)


def test_max_degree_padding():
    h = sft_homology(B, 4)
    assert h.max_degree == 4 and all(h[n].is_trivial() for n in (2, 3, 4))
    assert sft_homology(B, 0).max_degree == 0
    with pytest.raises(ValueError):
        sft_homology(B, -1)
    assert B.bowen_franks_matrix() == IntMatrix.from_rows([[-1, -1], [-1, -1]])
