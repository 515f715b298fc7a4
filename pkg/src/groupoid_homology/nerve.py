"""Levels of composable tuples with their face and degeneracy maps.

Level 0 holds the unit arrows themselves (plain ints); level ``n >= 1``
holds tuples ``(g1, ..., gn)`` with ``s(g_i) == r(g_{i+1})``, listed in
lexicographic order.  Face and degeneracy maps are stored as index arrays
between levels.

>>> from groupoid_homology.groupoid import pair_groupoid
>>> [len(level) for level in build_nerve(pair_groupoid(2), 2).levels]
[2, 4, 8]
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import NamedTuple, Sequence

from .groupoid import EtaleFunctor, FiniteGroupoid, require_valid_functor

DEFAULT_TUPLE_BUDGET = 10**6


class NerveBudgetError(RuntimeError):
    pass


@dataclass(frozen=True)
class Nerve:
    groupoid: FiniteGroupoid
    n_max: int
    levels: tuple[tuple, ...] = field(repr=False)
    faces: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)
    degeneracies: dict[tuple[int, int], tuple[int, ...]] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_index", [{t: k for k, t in enumerate(lvl)} for lvl in self.levels])

    def index(self, n: int, simplex) -> int:
        return self._index[n][simplex]

    def sizes(self) -> list[int]:
        return [len(lvl) for lvl in self.levels]

    def with_face(self, n: int, i: int, array: Sequence[int]) -> Nerve:
        """Copy with one face array replaced (used to exercise the identity checker)."""
        faces = dict(self.faces)
        faces[(n, i)] = tuple(array)
        return replace(self, faces=faces)


def _enumerate_levels(g: FiniteGroupoid, n_max: int, budget: int) -> list[list]:
    levels: list[list] = [list(g.units)]
    if n_max >= 1:
        if g.arrow_count > budget:
            raise NerveBudgetError(f"level 1 would hold {g.arrow_count} tuples, above the budget of {budget}")
        levels.append([(a,) for a in range(g.arrow_count)])
    by_range = g.arrows_by_range
    src = g.source
    for n in range(2, n_max + 1):
        prev = levels[-1]
        size = sum(len(by_range[src[t[-1]]]) for t in prev)
        if size > budget:
            raise NerveBudgetError(
                f"level {n} would hold {size} tuples, above the budget of {budget}"
            )
        levels.append([t + (b,) for t in prev for b in by_range[src[t[-1]]]])
    return levels


def build_nerve(g: FiniteGroupoid, n_max: int, budget: int = DEFAULT_TUPLE_BUDGET) -> Nerve:
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if g.arrow_count > budget:
        raise NerveBudgetError(f"level 1 would hold {g.arrow_count} tuples, above the budget of {budget}")
    levels = _enumerate_levels(g, n_max, budget)
    index = [{t: k for k, t in enumerate(lvl)} for lvl in levels]
    faces: dict[tuple[int, int], tuple[int, ...]] = {}
    degens: dict[tuple[int, int], tuple[int, ...]] = {}
    for n in range(1, n_max + 1):
        for i in range(n + 1):
            faces[(n, i)] = tuple(index[n - 1][_face(g, t, i)] for t in levels[n])
    for n in range(n_max):
        for j in range(n + 1):
            degens[(n, j)] = tuple(index[n + 1][_degeneracy(g, t, j)] for t in levels[n])
    return Nerve(g, n_max, tuple(tuple(lvl) for lvl in levels), faces, degens)


def _face(g: FiniteGroupoid, t: tuple, i: int):
    n = len(t)
    if n == 1:
        return g.source[t[0]] if i == 0 else g.range[t[0]]
    if i == 0:
        return t[1:]
    if i == n:
        return t[:-1]
    return t[:i - 1] + (g.mul(t[i - 1], t[i]),) + t[i + 1:]


def _degeneracy(g: FiniteGroupoid, t, j: int) -> tuple:
    if isinstance(t, int):
        return (t,)
    unit = g.range[t[j]] if j < len(t) else g.source[t[-1]]
    return t[:j] + (unit,) + t[j:]


def face_map(nv: Nerve, n: int, i: int) -> tuple[int, ...]:
    if not (1 <= n <= nv.n_max and 0 <= i <= n):
        raise IndexError(f"no face d_{i} on level {n} of a nerve built to {nv.n_max}")
    return nv.faces[(n, i)]


def degeneracy_map(nv: Nerve, n: int, j: int) -> tuple[int, ...]:
    if not (0 <= n < nv.n_max and 0 <= j <= n):
        raise IndexError(f"no degeneracy s_{j} on level {n} of a nerve built to {nv.n_max}")
    return nv.degeneracies[(n, j)]


class IdentityFailure(NamedTuple):
    identity: str
    n: int
    i: int
    j: int
    simplex: object


def check_simplicial_identities(nv: Nerve) -> list[IdentityFailure]:
    """Exhaustively test the simplicial identities; empty iff all hold."""
    out: list[IdentityFailure] = []
    d, s, N = nv.faces, nv.degeneracies, nv.n_max
    for n in range(N + 1):
        lvl = nv.levels[n]
        for x in range(len(lvl)):
            if n >= 2:
                for j in range(n + 1):
                    for i in range(j):
                        if d[(n - 1, i)][d[(n, j)][x]] != d[(n - 1, j - 1)][d[(n, i)][x]]:
                            out.append(IdentityFailure("d_i d_j = d_{j-1} d_i", n, i, j, lvl[x]))
            if n + 2 <= N:
                for j in range(n + 1):
                    for i in range(j + 1):
                        if s[(n + 1, i)][s[(n, j)][x]] != s[(n + 1, j + 1)][s[(n, i)][x]]:
                            out.append(IdentityFailure("s_i s_j = s_{j+1} s_i", n, i, j, lvl[x]))
            if n + 1 <= N:
                for j in range(n + 1):
                    y = s[(n, j)][x]
                    for i in range(n + 2):
                        lhs = d[(n + 1, i)][y]
                        if i < j:
                            rhs, name = s[(n - 1, j - 1)][d[(n, i)][x]], "d_i s_j = s_{j-1} d_i"
                        elif i in (j, j + 1):
                            rhs, name = x, "d_i s_j = id"
                        else:
                            rhs, name = s[(n - 1, j)][d[(n, i - 1)][x]], "d_i s_j = s_j d_{i-1}"
                        if lhs != rhs:
                            out.append(IdentityFailure(name, n, i, j, lvl[x]))
    return out


def level_maps(nv_dom: Nerve, nv_cod: Nerve, arrow_map: Sequence[int]) -> list[tuple[int, ...]]:
    """Per-level index arrays induced by an arrow-level map (applied entrywise)."""
    if nv_dom.n_max > nv_cod.n_max:
        raise ValueError("codomain nerve is built to a lower degree than the domain nerve")
    out = [tuple(nv_cod.index(0, arrow_map[x]) for x in nv_dom.levels[0])]
    for n in range(1, nv_dom.n_max + 1):
        out.append(tuple(nv_cod.index(n, tuple(arrow_map[a] for a in t)) for t in nv_dom.levels[n]))
    return out


def induced_simplicial_map(f: EtaleFunctor, nv_dom: Nerve, nv_cod: Nerve) -> list[tuple[int, ...]]:
    require_valid_functor(f)
    if nv_dom.groupoid != f.domain or nv_cod.groupoid != f.codomain:
        raise ValueError("nerves do not belong to the functor's groupoids")
    return level_maps(nv_dom, nv_cod, f.arrow_map)
