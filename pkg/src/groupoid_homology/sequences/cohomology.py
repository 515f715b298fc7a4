"""Cochains as coefficient vectors and the coboundary as a transposed boundary."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..abelian import FgAbGroup, IntMatrix, Subquotient, direct_sum, ext1, hermite_form, hom_group, rank_mod_p
from ..moore import ChainComplex, CoefficientSpec, DegreeError, homology
from ..nerve import Nerve


@dataclass(frozen=True)
class CochainComplex:
    """``coboundaries[n]`` maps degree ``n`` cochains to degree ``n+1``."""

    chains: ChainComplex
    coefficients: CoefficientSpec
    coboundaries: tuple[IntMatrix, ...] = field(repr=False)

    def __post_init__(self) -> None:
        for n in range(1, len(self.coboundaries)):
            if not (self.coboundaries[n] @ self.coboundaries[n - 1]).is_zero():
                raise ValueError(f"coboundary {n} after coboundary {n - 1} is not zero")
        object.__setattr__(self, "_cache", {})

    @property
    def ranks(self) -> tuple[int, ...]:
        return self.chains.ranks

    @property
    def top_degree(self) -> int:
        return self.chains.top_homology_degree

    def coboundary(self, n: int) -> IntMatrix:
        if n < 0:
            return IntMatrix.zeros(self.ranks[0], 0)
        return self.chains.boundary(n + 1).T

    def apply(self, n: int, cochain: Sequence) -> tuple:
        """Coboundary of a cochain whose entries are elements of the coefficient group."""
        grp = self.coefficients.group
        d = self.coboundary(n)
        out = []
        for i in range(d.rows):
            acc = grp.zero()
            for j in range(d.cols):
                if d[i, j]:
                    acc = grp.add(acc, grp.scale(d[i, j], cochain[j]))
            out.append(acc)
        return tuple(out)


def dual_cochain_complex(c: ChainComplex, a: CoefficientSpec | str = "Z") -> CochainComplex:
    a = CoefficientSpec.parse(a)
    return CochainComplex(c, a, tuple(b.T for b in c.boundaries))


def cohomology(cochain: CochainComplex, n: int) -> FgAbGroup:
    if not 0 <= n <= cochain.top_degree:
        raise DegreeError(f"cohomology in degree {n} needs boundary {n + 1}; available degrees 0..{cochain.top_degree}")
    a = cochain.coefficients
    d_out, d_in = cochain.coboundary(n), cochain.coboundary(n - 1)
    if a.is_integers:
        key = ("Z", n)
        if key not in cochain._cache:
            hf = hermite_form(d_out, track_inverse=True)
            cochain._cache[key] = Subquotient(None, d_in, basis=hf.kernel(), coordinates=hf.kernel_coordinates())
        return cochain._cache[key].group
    if a.prime is not None:
        p = a.prime
        dim = cochain.ranks[n] - rank_mod_p(d_out, p) - rank_mod_p(d_in, p)
        return FgAbGroup(0, (p,) * dim)
    c = cochain.chains
    prev = homology(c, n - 1) if n else FgAbGroup()
    return direct_sum([ext1(prev, a.group), hom_group(homology(c, n), a.group)])


def pullback_coboundary(nv: Nerve, n: int, zeta: Sequence, group: FgAbGroup | None = None) -> tuple:
    """``sum_i (-1)^i zeta o d_i`` on level ``n + 1``, straight from the face maps."""
    if not 0 <= n < nv.n_max:
        raise DegreeError(f"need level {n + 1}, nerve is built to {nv.n_max}")
    size = len(nv.levels[n + 1])
    if group is None:
        out = [0] * size
        for i in range(n + 2):
            sign = -1 if i % 2 else 1
            for x, y in enumerate(nv.faces[(n + 1, i)]):
                out[x] += sign * int(zeta[y])
        return tuple(out)
    acc = [group.zero()] * size
    for i in range(n + 2):
        sign = -1 if i % 2 else 1
        for x, y in enumerate(nv.faces[(n + 1, i)]):
            acc[x] = group.add(acc[x], group.scale(sign, zeta[y]))
    return tuple(acc)
