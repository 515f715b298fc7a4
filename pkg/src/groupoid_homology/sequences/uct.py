"""Universal coefficient sequences, split and chain-level.

Two flavours live here.  :func:`uct_homology` and :func:`uct_cohomology`
start from integral homology groups and return a fixed coordinate
splitting of the middle term.  :func:`chain_uct_sequence` instead works on
a chain complex and realises the middle term as actual homology with
coefficients, with the genuine inclusion and Bockstein projection.  Only
the second one is natural, so the naturality check uses it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ..abelian import (
    AbHom,
    FgAbGroup,
    IntMatrix,
    Subquotient,
    block_diag,
    check_exact_at,
    direct_sum,
    ext1,
    hermite_form,
    hom_group,
    hstack,
    present,
    tensor,
    tor1,
)
from ..moore import (
    ChainComplex,
    ChainMap,
    CoefficientSpec,
    HomologyResult,
    cycles_mod_boundaries,
    cyclic_coefficient_subquotient,
)
from .les import ChainSES


@dataclass(frozen=True)
class UctSequence:
    """``0 -> left --iota--> middle --kappa--> right -> 0``."""

    degree: int
    coefficients: CoefficientSpec
    left: FgAbGroup
    middle: FgAbGroup
    right: FgAbGroup
    iota: AbHom = field(repr=False)
    kappa: AbHom = field(repr=False)

    def failures(self) -> list[str]:
        out = []
        if not self.iota.is_injective():
            out.append("iota is not injective")
        if not self.kappa.is_surjective():
            out.append("kappa is not surjective")
        if not check_exact_at(self.iota, self.kappa):
            out.append("image of iota differs from kernel of kappa")
        if direct_sum([self.left, self.right]) != self.middle:
            out.append("middle term is not the direct sum of the outer terms")
        return out


def split_sum(left: FgAbGroup, right: FgAbGroup) -> tuple[FgAbGroup, AbHom, AbHom]:
    """Canonical form of ``left + right`` with coordinate inclusion and projection."""
    kl = left.ngens
    orders = left.orders + right.orders
    pres = present(IntMatrix.diag(orders))
    mid = pres.group
    iota = AbHom(left, mid, pres.to_canonical.select_cols(range(kl)))
    kappa = AbHom(mid, right, pres.from_canonical.select_rows(range(kl, len(orders))))
    return mid, iota, kappa


def _previous(h: HomologyResult, n: int) -> FgAbGroup:
    if n < 0 or n > h.max_degree:
        raise IndexError(f"degree {n} is missing from the integral homology")
    return h[n - 1] if n else FgAbGroup()


def uct_homology(h_integral: HomologyResult, a: CoefficientSpec | str, n: int) -> UctSequence:
    a = CoefficientSpec.parse(a)
    prev = _previous(h_integral, n)
    left, right = tensor(h_integral[n], a.group), tor1(prev, a.group)
    mid, iota, kappa = split_sum(left, right)
    return UctSequence(n, a, left, mid, right, iota, kappa)


def uct_cohomology(h_integral: HomologyResult, a: CoefficientSpec | str, n: int) -> UctSequence:
    """Ext-Hom form: ``0 -> Ext(H_{n-1}, A) -> H^n(A) -> Hom(H_n, A) -> 0``."""
    a = CoefficientSpec.parse(a)
    prev = _previous(h_integral, n)
    left, right = ext1(prev, a.group), hom_group(h_integral[n], a.group)
    mid, iota, kappa = split_sum(left, right)
    return UctSequence(n, a, left, mid, right, iota, kappa)


# -- chain-level sequence -----------------------------------------------------------

_EMPTY = IntMatrix.zeros(0, 0)


class ChainUctRow(NamedTuple):
    """Lattice models of ``H_n (x) Z/m``, ``H_n(C; Z/m)`` and the ``m``-torsion of ``H_{n-1}``."""

    left: Subquotient
    middle: Subquotient
    right: Subquotient
    iota: AbHom
    kappa: AbHom


def _torsion_part(c: ChainComplex, m: int, n: int) -> Subquotient:
    """``{z cycle : m z a boundary} / boundaries`` in degree ``n``."""
    cyc = cycles_mod_boundaries(c, n)
    k = c.ranks[n]
    d_in = c.boundary(n + 1)
    aug = hstack([cyc.basis.scale(m), d_in], rows=k)
    kern = hermite_form(aug).kernel()
    ys = kern.select_rows(range(cyc.basis.cols))
    return Subquotient(cyc.basis @ ys, d_in)


def chain_uct_row(c: ChainComplex, m: int, n: int) -> ChainUctRow:
    """Universal coefficient row for ``Z/m`` (or ``Z`` when ``m == 0``) from the chains."""
    cyc = cycles_mod_boundaries(c, n)
    middle = cyclic_coefficient_subquotient(c, m, n)
    if m == 0:
        left = cyc
        right = Subquotient(_EMPTY, _EMPTY)
    else:
        left = Subquotient(cyc.basis, hstack([c.boundary(n + 1), cyc.basis.scale(m)], rows=c.ranks[n]))
        right = _torsion_part(c, m, n - 1) if n else Subquotient(_EMPTY, _EMPTY)
    iota = left.induced(middle, list)
    if m == 0 or n == 0:
        kappa = AbHom.zero(middle.group, right.group)
    else:
        d = c.boundary(n)

        def bockstein(x: Sequence[int]) -> list[int]:
            y = d.apply(list(x))
            if any(v % m for v in y):
                raise ValueError("chain is not a cycle mod m")
            return [v // m for v in y]

        kappa = middle.induced(right, bockstein)
    return ChainUctRow(left, middle, right, iota, kappa)


def _block_hom(homs: Sequence[AbHom]) -> AbHom:
    dom = present(IntMatrix.diag([o for h in homs for o in h.domain.orders]))
    cod = present(IntMatrix.diag([o for h in homs for o in h.codomain.orders]))
    mat = cod.to_canonical @ block_diag([h.matrix for h in homs]) @ dom.from_canonical
    return AbHom(dom.group, cod.group, mat)


def chain_uct_sequence(c: ChainComplex, a: CoefficientSpec | str, n: int) -> UctSequence:
    """Genuine universal coefficient sequence, one cyclic summand of ``A`` at a time."""
    a = CoefficientSpec.parse(a)
    rows = [chain_uct_row(c, m, n) for m in a.group.orders]
    iota = _block_hom([r.iota for r in rows])
    kappa = _block_hom([r.kappa for r in rows])
    return UctSequence(n, a, iota.domain, iota.codomain, kappa.codomain, iota, kappa)


class NaturalityFailure(NamedTuple):
    map_name: str
    degree: int
    summand: int
    square: str


def _row_naturality(x: ChainUctRow, y: ChainUctRow, f_n: IntMatrix, f_prev: IntMatrix | None) -> list[str]:
    v_left = x.left.induced(y.left, f_n.apply)
    v_mid = x.middle.induced(y.middle, f_n.apply)
    bad = []
    if y.iota @ v_left != v_mid @ x.iota:
        bad.append("tensor square")
    if f_prev is not None:
        v_right = x.right.induced(y.right, f_prev.apply)
    else:
        v_right = AbHom.zero(x.right.group, y.right.group)
    if y.kappa @ v_mid != v_right @ x.kappa:
        bad.append("tor square")
    return bad


def uct_naturality_check(ses: ChainSES, a: CoefficientSpec | str, n_max: int | None = None) -> list[NaturalityFailure]:
    """Check that both chain maps of ``ses`` commute with the universal coefficient rows.

    For each of ``inject`` and ``project`` and each degree, the vertical maps
    ``H_n(f) (x) A``, ``H_n(f; A)`` and ``Tor(H_{n-1}(f), A)`` are computed
    from the same chain matrices, and both squares are compared on
    generators.  Empty result means everything commutes.
    """
    a = CoefficientSpec.parse(a)
    top = ses.top_homology_degree if n_max is None else n_max
    out = []
    for name, cm in (("inject", ses.inject), ("project", ses.project)):
        for n in range(top + 1):
            for m in a.group.orders:
                x = chain_uct_row(cm.source, m, n)
                y = chain_uct_row(cm.target, m, n)
                prev = cm.matrices[n - 1] if n else None
                for sq in _row_naturality(x, y, cm.matrices[n], prev):
                    out.append(NaturalityFailure(name, n, m, sq))
    return out


def chain_map_naturality(cm: ChainMap, a: CoefficientSpec | str, n_max: int) -> list[NaturalityFailure]:
    a = CoefficientSpec.parse(a)
    out = []
    for n in range(n_max + 1):
        for m in a.group.orders:
            x, y = chain_uct_row(cm.source, m, n), chain_uct_row(cm.target, m, n)
            for sq in _row_naturality(x, y, cm.matrices[n], cm.matrices[n - 1] if n else None):
                out.append(NaturalityFailure("map", n, m, sq))
    return out


# -- tensor comparison ----------------------------------------------------------------

def tensor_comparison(terms: Sequence[tuple[Sequence[int], Sequence[int]]], group: FgAbGroup) -> tuple:
    """Values of ``sum_j f_j (x) a_j`` as a function ``x -> sum_j f_j(x) a_j``."""
    if not terms:
        return ()
    size = len(terms[0][0])
    out = []
    for x in range(size):
        acc = group.zero()
        for f, a in terms:
            acc = group.add(acc, group.scale(int(f[x]), a))
        out.append(acc)
    return tuple(out)


def finite_image_predicate(zeta) -> bool:
    """Whether the function takes finitely many distinct values.

    Any function on a finite index set does; the predicate is kept so the
    local-constancy statement for comparison-map images can be asserted.
    """
    values = getattr(zeta, "values", zeta)
    distinct = set(tuple(v) if isinstance(v, list) else v for v in values)
    return len(distinct) <= len(values)


def distinct_values(zeta) -> int:
    values = getattr(zeta, "values", zeta)
    return len(set(values))
