"""Mayer-Vietoris sequences for covers of the unit space by two subsets."""

from __future__ import annotations

from dataclasses import dataclass

from ..abelian import hstack, vstack
from ..groupoid import FiniteGroupoid, is_saturated, reduction
from ..moore import ChainMap, moore_complex, pushforward_matrix
from ..nerve import build_nerve, level_maps
from .les import ChainSES, LongExactSequence, direct_sum_complex, require_exact, restricted_complex, snake_les


class CoverError(ValueError):
    pass


@dataclass(frozen=True)
class MvCover:
    groupoid: FiniteGroupoid
    u1: frozenset[int]
    u2: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "u1", frozenset(self.u1))
        object.__setattr__(self, "u2", frozenset(self.u2))
        units = self.groupoid.unit_set
        for name in ("u1", "u2"):
            extra = getattr(self, name) - units
            if extra:
                raise CoverError(f"{name} contains non-units {sorted(extra)}")
        if self.u1 | self.u2 != units:
            raise CoverError(f"cover misses units {sorted(units - self.u1 - self.u2)}")

    def is_admissible(self) -> bool:
        return is_saturated(self.groupoid, self.u1) and is_saturated(self.groupoid, self.u2)


def mv_ses(cover: MvCover, n_max: int, support_local: bool = False) -> ChainSES:
    """Chain-level sequence ``overlap -> piece1 + piece2 -> whole``.

    Complexes are built to degree ``n_max + 1``.  With ``support_local`` the
    two subsets need not be saturated and the last complex is replaced by
    chains supported on tuples lying in one of the two reductions.
    """
    g = cover.groupoid
    if not support_local:
        for name in ("u1", "u2"):
            if not is_saturated(g, getattr(cover, name)):
                raise CoverError(f"{name} is not a union of orbits")
    top = n_max + 1
    r1, r2, r12 = reduction(g, cover.u1), reduction(g, cover.u2), reduction(g, cover.u1 & cover.u2)
    nv = build_nerve(g, top)
    nv1, nv2, nv12 = (build_nerve(r.groupoid, top) for r in (r1, r2, r12))
    to_whole_1 = level_maps(nv1, nv, r1.arrows)
    to_whole_2 = level_maps(nv2, nv, r2.arrows)
    pos1 = {a: k for k, a in enumerate(r1.arrows)}
    pos2 = {a: k for k, a in enumerate(r2.arrows)}
    to_1 = level_maps(nv12, nv1, [pos1[a] for a in r12.arrows])
    to_2 = level_maps(nv12, nv2, [pos2[a] for a in r12.arrows])

    c1, c2, c12, whole = moore_complex(nv1), moore_complex(nv2), moore_complex(nv12), moore_complex(nv)
    mid = direct_sum_complex(c1, c2)
    if support_local:
        keep = [sorted(set(a) | set(b)) for a, b in zip(to_whole_1, to_whole_2)]
        quot = restricted_complex(whole, keep)
        where = [{x: k for k, x in enumerate(ks)} for ks in keep]
        to_whole_1 = [[where[n][x] for x in m] for n, m in enumerate(to_whole_1)]
        to_whole_2 = [[where[n][x] for x in m] for n, m in enumerate(to_whole_2)]
    else:
        quot = whole

    alpha, beta = [], []
    for n in range(top + 1):
        i1 = pushforward_matrix(to_1[n], c1.ranks[n])
        i2 = pushforward_matrix(to_2[n], c2.ranks[n])
        alpha.append(vstack([i1, -i2], cols=c12.ranks[n]))
        e1 = pushforward_matrix(to_whole_1[n], quot.ranks[n])
        e2 = pushforward_matrix(to_whole_2[n], quot.ranks[n])
        beta.append(hstack([e1, e2], rows=quot.ranks[n]))
    ses = ChainSES(c12, mid, quot, ChainMap(c12, mid, tuple(alpha)), ChainMap(mid, quot, tuple(beta)))
    return require_exact(ses)


def mv_les(cover: MvCover, n_max: int, support_local: bool = False) -> LongExactSequence:
    return snake_les(mv_ses(cover, n_max, support_local), n_max, tags=("overlap", "pieces", "whole"))

