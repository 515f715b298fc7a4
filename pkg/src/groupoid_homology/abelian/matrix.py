"""Dense exact integer matrices.

Entries are Python ints, so nothing ever overflows or rounds.  The class is
deliberately small: it stores a row-major tuple and keeps a lazily built
sparse row view for products, which is where almost all time goes when the
matrices come from face maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...] = field(repr=False)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    # -- constructors -------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged row list")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        cols = len(columns)
        data = [0] * (rows * cols)
        for j, col in enumerate(columns):
            if len(col) != rows:
                raise ValueError("column length does not match row count")
            for i, x in enumerate(col):
                data[i * cols + j] = int(x)
        return cls(rows, cols, tuple(data))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> IntMatrix:
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        data = [0] * (n * n)
        for i in range(n):
            data[i * n + i] = 1
        return cls(n, n, tuple(data))

    @classmethod
    def diag(cls, values: Sequence[int], rows: int | None = None, cols: int | None = None) -> IntMatrix:
        rows = len(values) if rows is None else rows
        cols = len(values) if cols is None else cols
        data = [0] * (rows * cols)
        for i, x in enumerate(values):
            data[i * cols + i] = int(x)
        return cls(rows, cols, tuple(data))

    @classmethod
    def from_triplets(cls, rows: int, cols: int, triplets: Iterable[tuple[int, int, int]]) -> IntMatrix:
        """Sum (row, col, value) triplets into a dense matrix."""
        data = [0] * (rows * cols)
        for i, j, x in triplets:
            if not (0 <= i < rows and 0 <= j < cols):
                raise IndexError(f"triplet ({i}, {j}) outside {rows}x{cols}")
            data[i * cols + j] += x
        return cls(rows, cols, tuple(data))

    # -- access ---------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def col(self, j: int) -> list[int]:
        return list(self.entries[j::self.cols]) if self.rows else []

    def tolist(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def columns(self) -> list[list[int]]:
        return [self.col(j) for j in range(self.cols)]

    @cached_property
    def _sparse_rows(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        c = self.cols
        e = self.entries
        return tuple(
            tuple((j, e[i * c + j]) for j in range(c) if e[i * c + j])
            for i in range(self.rows)
        )

    def nonzeros(self) -> list[tuple[int, int, int]]:
        return [(i, j, x) for i, r in enumerate(self._sparse_rows) for j, x in r]

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def is_zero(self) -> bool:
        return not any(self.entries)

    # -- arithmetic -----------------------------------------------------
    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n = other.cols
        out = [0] * (self.rows * n)
        right = other._sparse_rows
        for i, row in enumerate(self._sparse_rows):
            base = i * n
            for k, a in row:
                for j, b in right[k]:
                    out[base + j] += a * b
        return IntMatrix(self.rows, n, tuple(out))

    def apply(self, vec: Sequence[int]) -> list[int]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.shape} matrix")
        return [sum(x * vec[j] for j, x in row) for row in self._sparse_rows]

    def _check_same(self, other: IntMatrix) -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: IntMatrix) -> IntMatrix:
        self._check_same(other)
        return IntMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, k: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(k * a for a in self.entries))

    @property
    def T(self) -> IntMatrix:
        return IntMatrix.from_columns(self.tolist(), self.cols) if self.rows else IntMatrix.zeros(self.cols, 0)

    def select_rows(self, idx: Sequence[int]) -> IntMatrix:
        return IntMatrix.from_rows([self.row(i) for i in idx], self.cols)

    def select_cols(self, idx: Sequence[int]) -> IntMatrix:
        cols = self.columns()
        return IntMatrix.from_columns([cols[j] for j in idx], self.rows)

    def mod(self, m: int) -> IntMatrix:
        return IntMatrix(self.rows, self.cols, tuple(a % m for a in self.entries))

    def determinant(self) -> int:
        """Bareiss fraction-free elimination; exact for any square matrix."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        a = self.tolist()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1


def hstack(blocks: Sequence[IntMatrix], rows: int | None = None) -> IntMatrix:
    if not blocks:
        return IntMatrix.zeros(rows or 0, 0)
    r = blocks[0].rows
    if any(b.rows != r for b in blocks):
        raise ValueError("hstack needs equal row counts")
    return IntMatrix.from_rows(
        [[x for b in blocks for x in b.row(i)] for i in range(r)],
        sum(b.cols for b in blocks),
    )


def vstack(blocks: Sequence[IntMatrix], cols: int | None = None) -> IntMatrix:
    if not blocks:
        return IntMatrix.zeros(0, cols or 0)
    c = blocks[0].cols
    if any(b.cols != c for b in blocks):
        raise ValueError("vstack needs equal column counts")
    return IntMatrix(sum(b.rows for b in blocks), c, tuple(x for b in blocks for x in b.entries))


def block_diag(blocks: Sequence[IntMatrix]) -> IntMatrix:
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    trip = []
    r0 = c0 = 0
    for b in blocks:
        trip.extend((r0 + i, c0 + j, x) for i, j, x in b.nonzeros())
        r0 += b.rows
        c0 += b.cols
    return IntMatrix.from_triplets(rows, cols, trip)
