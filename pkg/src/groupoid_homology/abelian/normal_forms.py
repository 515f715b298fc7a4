"""Hermite and Smith normal forms over the integers, with transforms.

Both reductions use the smallest nonzero absolute value as pivot.  Working
copies are plain lists of lists; the public results are frozen
:class:`IntMatrix` values.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .matrix import IntMatrix


@dataclass(frozen=True)
class HermiteForm:
    """Column-style echelon form ``m @ u == h``.

    ``pivot_rows[k]`` is the row of the pivot in column ``k``; columns at
    index ``rank`` and beyond are zero, so the matching columns of ``u``
    span the integer kernel.
    """

    h: IntMatrix
    u: IntMatrix
    pivot_rows: tuple[int, ...]
    uinv: IntMatrix | None = None

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        return tuple(range(self.rank))

    def kernel(self) -> IntMatrix:
        return self.u.select_cols(range(self.rank, self.u.cols))

    def kernel_coordinates(self) -> IntMatrix:
        """Rows of ``u^-1`` that read off kernel-basis coordinates of a kernel vector."""
        if self.uinv is None:
            raise ValueError("hermite form was computed without the inverse transform")
        return self.uinv.select_rows(range(self.rank, self.uinv.rows))

    def solve(self, b: Sequence[int]) -> list[int] | None:
        """Integer ``x`` with ``m @ x == b``, or ``None`` if none exists."""
        if len(b) != self.h.rows:
            raise ValueError(f"right-hand side has length {len(b)}, expected {self.h.rows}")
        res = list(b)
        z = []
        hcols = self._hcols
        for k, r in enumerate(self.pivot_rows):
            p = hcols[k][r]
            q, rem = divmod(res[r], p)
            if rem:
                return None
            z.append(q)
            if q:
                col = hcols[k]
                for i in range(r, len(res)):
                    if col[i]:
                        res[i] -= q * col[i]
        if any(res):
            return None
        ucols = self._ucols
        x = [0] * self.u.rows
        for k, q in enumerate(z):
            if q:
                col = ucols[k]
                for i, c in enumerate(col):
                    if c:
                        x[i] += q * c
        return x

    def contains(self, b: Sequence[int]) -> bool:
        return self.solve(b) is not None

    @cached_property
    def _hcols(self) -> list[list[int]]:
        return self.h.columns()

    @cached_property
    def _ucols(self) -> list[list[int]]:
        return self.u.columns()


def _axpy(dst: list[int], q: int, src: list[int]) -> None:
    for i, v in enumerate(src):
        if v:
            dst[i] -= q * v


def hermite_form(m: IntMatrix, track: bool = True, track_inverse: bool = False) -> HermiteForm:
    rows, n = m.rows, m.cols
    cols = m.columns()
    track = track or track_inverse
    ucols = [[1 if i == j else 0 for i in range(n)] for j in range(n)] if track else None
    # column op "c_j -= q c_i" on u is "row_i += q row_j" on u^-1
    vrows = [[1 if i == j else 0 for j in range(n)] for i in range(n)] if track_inverse else None
    pivots: list[int] = []
    pc = 0
    for r in range(rows):
        if pc == n:
            break
        while True:
            nz = [j for j in range(pc, n) if cols[j][r]]
            if not nz:
                break
            j0 = min(nz, key=lambda j: (abs(cols[j][r]), j))
            if len(nz) == 1:
                break
            p = cols[j0][r]
            for j in nz:
                if j != j0:
                    q = cols[j][r] // p
                    _axpy(cols[j], q, cols[j0])
                    if track:
                        _axpy(ucols[j], q, ucols[j0])
                    if vrows is not None:
                        _axpy(vrows[j0], -q, vrows[j])
        live = [j for j in range(pc, n) if cols[j][r]]
        if not live:
            continue
        j0 = live[0]
        cols[pc], cols[j0] = cols[j0], cols[pc]
        if track:
            ucols[pc], ucols[j0] = ucols[j0], ucols[pc]
        if vrows is not None:
            vrows[pc], vrows[j0] = vrows[j0], vrows[pc]
        if cols[pc][r] < 0:
            cols[pc] = [-x for x in cols[pc]]
            if track:
                ucols[pc] = [-x for x in ucols[pc]]
            if vrows is not None:
                vrows[pc] = [-x for x in vrows[pc]]
        p = cols[pc][r]
        for k in range(pc):
            q = cols[k][r] // p
            if q:
                _axpy(cols[k], q, cols[pc])
                if track:
                    _axpy(ucols[k], q, ucols[pc])
                if vrows is not None:
                    _axpy(vrows[pc], -q, vrows[k])
        pivots.append(r)
        pc += 1
    h = IntMatrix.from_columns(cols, rows)
    u = IntMatrix.from_columns(ucols, n) if track else IntMatrix.zeros(n, 0)
    uinv = IntMatrix.from_rows(vrows, n) if vrows is not None else None
    return HermiteForm(h, u, tuple(pivots), uinv)


def hermite_solve(m: IntMatrix, b: Sequence[int]) -> list[int] | None:
    if len(b) != m.rows:
        raise ValueError(f"right-hand side has length {len(b)}, expected {m.rows}")
    return hermite_form(m).solve(b)


def integer_kernel(m: IntMatrix) -> IntMatrix:
    """Lattice basis (as columns) of the integer solutions of ``m @ x == 0``."""
    return hermite_form(m).kernel()


def lattice_basis(gens: IntMatrix) -> IntMatrix:
    """Full-column-rank basis of the lattice spanned by the columns of ``gens``."""
    hf = hermite_form(gens, track=False)
    return hf.h.select_cols(range(hf.rank))


@dataclass(frozen=True)
class SmithForm:
    s: IntMatrix
    u: IntMatrix
    v: IntMatrix
    source_dims: tuple[int, int]

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.s[i, i] for i in range(min(self.s.rows, self.s.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def smith_normal_form(m: IntMatrix) -> SmithForm:
    """Return ``u, s, v`` with ``u @ m @ v == s`` and a divisibility chain on ``s``."""
    s, u, v, _ = _smith(m, True, True)
    return SmithForm(s, u, v, m.shape)


def _smith(
    m: IntMatrix, want_u: bool, want_v: bool, want_uinv: bool = False
) -> tuple[IntMatrix, IntMatrix | None, IntMatrix | None, IntMatrix | None]:
    R, C = m.rows, m.cols
    a = m.tolist()
    u = [[int(i == j) for j in range(R)] for i in range(R)] if want_u else None
    v = [[int(i == j) for j in range(C)] for i in range(C)] if want_v else None
    # row op "r_dst -= q r_src" on u is "col_src += q col_dst" on u^-1
    w = [[int(i == j) for j in range(R)] for i in range(R)] if want_uinv else None

    def swap_rows(i: int, k: int) -> None:
        a[i], a[k] = a[k], a[i]
        if u is not None:
            u[i], u[k] = u[k], u[i]
        if w is not None:
            for row in w:
                row[i], row[k] = row[k], row[i]

    def swap_cols(j: int, k: int) -> None:
        for row in a:
            row[j], row[k] = row[k], row[j]
        if v is not None:
            for row in v:
                row[j], row[k] = row[k], row[j]

    def add_row(dst: int, q: int, src: int) -> None:  # row_dst -= q * row_src
        _axpy(a[dst], q, a[src])
        if u is not None:
            _axpy(u[dst], q, u[src])
        if w is not None:
            for row in w:
                if row[dst]:
                    row[src] += q * row[dst]

    def add_col(dst: int, q: int, src: int) -> None:
        for row in a:
            if row[src]:
                row[dst] -= q * row[src]
        if v is not None:
            for row in v:
                if row[src]:
                    row[dst] -= q * row[src]

    for t in range(min(R, C)):
        best = None
        for i in range(t, R):
            row = a[i]
            for j in range(t, C):
                x = row[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, R):
                if a[i][t]:
                    add_row(i, a[i][t] // p, t)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, C):
                if a[t][j]:
                    add_col(j, a[t][j] // p, t)
                    dirty = dirty or a[t][j] != 0
            if dirty:
                cand = [(abs(a[i][t]), i, t) for i in range(t + 1, R) if a[i][t]]
                cand += [(abs(a[t][j]), t, j) for j in range(t + 1, C) if a[t][j]]
                _, i, j = min(cand)
                if abs(a[i][j]) < abs(p):
                    if i != t:
                        swap_rows(t, i)
                    else:
                        swap_cols(t, j)
                continue
            if abs(p) == 1:
                break
            bad = next(
                (i for i in range(t + 1, R) if any(a[i][j] % p for j in range(t + 1, C))),
                None,
            )
            if bad is None:
                break
            add_row(t, -1, bad)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
            if w is not None:
                for row in w:
                    row[t] = -row[t]
    s = IntMatrix.from_rows(a, C)
    return (
        s,
        IntMatrix.from_rows(u, R) if u is not None else None,
        IntMatrix.from_rows(v, C) if v is not None else None,
        IntMatrix.from_rows(w, R) if w is not None else None,
    )


def invariant_factors(m: IntMatrix) -> tuple[int, ...]:
    s, _, _, _ = _smith(m, False, False)
    return tuple(s[i, i] for i in range(min(s.rows, s.cols)))


def rank_mod_p(m: IntMatrix, p: int) -> int:
    """Rank over the prime field with ``p`` elements (Gaussian elimination)."""
    rows = [[x % p for x in r] for r in m.tolist()]
    rank = 0
    for c in range(m.cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for i in range(len(rows)):
            if i != rank and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], prow)]
        rank += 1
    return rank


def rank(m: IntMatrix) -> int:
    return hermite_form(m, track=False).rank
