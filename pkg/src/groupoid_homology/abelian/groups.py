"""Finitely generated abelian groups in invariant-factor form.

A group ``Z/d_1 + ... + Z/d_k + Z^r`` has canonical generators ordered with
the torsion summands first (``d_1 | d_2 | ...``) and the free summands last.
Elements are integer tuples in those coordinates, torsion entries reduced
into ``[0, d_i)``.

Subgroups never get a canonical form of their own.  They live as generator
matrices on the free cover ``Z^ngens``, always together with the relation
columns, and equality is decided by two lattice-membership checks.

>>> str(tensor(FgAbGroup(0, (4,)), FgAbGroup(0, (6,))))
'Z/2'
>>> str(direct_sum([FgAbGroup(0, (2,)), FgAbGroup(0, (3,))]))
'Z/6'
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Sequence

from .matrix import IntMatrix, hstack
from .normal_forms import _smith, hermite_form, integer_kernel, invariant_factors, lattice_basis


class IllDefinedHomomorphism(ValueError):
    pass


@dataclass(frozen=True)
class FgAbGroup:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        tors = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", tors)
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for d in tors:
            if d < 2:
                raise ValueError(f"invariant factor {d} is not >= 2")
        for a, b in zip(tors, tors[1:]):
            if b % a:
                raise ValueError(f"invariant factors {a}, {b} break the divisibility chain")

    @classmethod
    def from_orders(cls, orders: Iterable[int]) -> FgAbGroup:
        """Canonical form of a direct sum of cyclic groups; order 0 means ``Z``."""
        orders = [abs(int(o)) for o in orders]
        free = sum(1 for o in orders if o == 0)
        finite = [o for o in orders if o > 1]
        if not finite:
            return cls(free, ())
        return cls(free, _invariant_factors_of_cyclics(finite))

    @property
    def ngens(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def orders(self) -> tuple[int, ...]:
        return self.torsion + (0,) * self.free_rank

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        if self.free_rank:
            return None
        out = 1
        for d in self.torsion:
            out *= d
        return out

    def relations(self) -> IntMatrix:
        """Relation columns ``d_i e_i`` on the free cover."""
        return IntMatrix.from_triplets(
            self.ngens, len(self.torsion), ((i, i, d) for i, d in enumerate(self.torsion))
        )

    # element arithmetic
    def normalize(self, x: Sequence[int]) -> tuple[int, ...]:
        if len(x) != self.ngens:
            raise ValueError(f"element of length {len(x)} for a group with {self.ngens} generators")
        return tuple(v % d if d else int(v) for v, d in zip(x, self.orders))

    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ngens

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return self.normalize([a + b for a, b in zip(x, y)])

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.normalize([-a for a in x])

    def scale(self, k: int, x: Sequence[int]) -> tuple[int, ...]:
        return self.normalize([k * a for a in x])

    def elements(self) -> Iterator[tuple[int, ...]]:
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        return itertools.product(*(range(d) for d in self.torsion))

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        for d, run in itertools.groupby(self.torsion):
            k = len(list(run))
            parts.append(f"Z/{d}" if k == 1 else f"(Z/{d})^{k}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}


def _invariant_factors_of_cyclics(orders: Sequence[int]) -> tuple[int, ...]:
    diag = invariant_factors(IntMatrix.diag(orders))
    return tuple(d for d in diag if d > 1)


@dataclass(frozen=True)
class AbHom:
    """Homomorphism given by its matrix on canonical generators."""

    domain: FgAbGroup
    codomain: FgAbGroup
    matrix: IntMatrix = field(repr=False)

    def __post_init__(self) -> None:
        m = self.matrix
        if m.shape != (self.codomain.ngens, self.domain.ngens):
            raise ValueError(
                f"matrix shape {m.shape} does not match {self.codomain.ngens}x{self.domain.ngens}"
            )
        cols = [self.codomain.normalize(c) for c in m.columns()]
        object.__setattr__(self, "matrix", IntMatrix.from_columns(cols, m.rows))
        for j, d in enumerate(self.domain.orders):
            if d == 0:
                continue
            image = self.codomain.normalize([d * x for x in cols[j]])
            if any(image):
                raise IllDefinedHomomorphism(
                    f"generator {j} has order {d} but {d} times its image is not zero"
                )

    @classmethod
    def identity(cls, g: FgAbGroup) -> AbHom:
        return cls(g, g, IntMatrix.identity(g.ngens))

    @classmethod
    def zero(cls, dom: FgAbGroup, cod: FgAbGroup) -> AbHom:
        return cls(dom, cod, IntMatrix.zeros(cod.ngens, dom.ngens))

    def __call__(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.codomain.normalize(self.matrix.apply(list(x)))

    def __matmul__(self, other: AbHom) -> AbHom:
        """``self @ other`` is ``self`` after ``other``."""
        if other.codomain != self.domain:
            raise ValueError("homomorphisms are not composable")
        return AbHom(other.domain, self.codomain, self.matrix @ other.matrix)

    def is_zero(self) -> bool:
        return self.matrix.is_zero()

    def image_and_kernel(self) -> tuple[FgAbGroup, FgAbGroup]:
        return hom_image_kernel(self)

    def is_injective(self) -> bool:
        return hom_image_kernel(self)[1].is_trivial()

    def is_surjective(self) -> bool:
        return check_exact_at(self, AbHom.zero(self.codomain, FgAbGroup()))

    def is_isomorphism(self) -> bool:
        return self.is_injective() and self.is_surjective()


# -- presentations and subquotients ---------------------------------------

@dataclass(frozen=True)
class Presentation:
    """Identification of ``Z^k / span(relations)`` with its canonical form.

    ``to_canonical`` sends cover coordinates to canonical coordinates;
    column ``j`` of ``from_canonical`` is a cover vector representing
    canonical generator ``j``.
    """

    group: FgAbGroup
    to_canonical: IntMatrix
    from_canonical: IntMatrix

    def coords(self, x: Sequence[int]) -> tuple[int, ...]:
        return self.group.normalize(self.to_canonical.apply(list(x)))


def present(relations: IntMatrix) -> Presentation:
    k = relations.rows
    if relations.cols:
        relations = lattice_basis(relations)
    s, u, _, uinv = _smith(relations, True, False, want_uinv=True)
    diag = [s[i, i] for i in range(min(s.rows, s.cols))]
    diag += [0] * (k - len(diag))
    keep = [i for i, d in enumerate(diag) if d != 1]
    group = FgAbGroup.from_orders(diag[i] for i in keep)
    # SNF order is units, torsion ascending, zeros: already canonical
    return Presentation(group, u.select_rows(keep), uinv.select_cols(keep))


def cokernel_group(m: IntMatrix) -> FgAbGroup:
    return present(m).group


class Subquotient:
    """The group ``L / D`` for lattices ``D <= L <= Z^k``.

    ``numerator`` and ``denominator`` are generator columns.  When the caller
    already knows a basis of ``L`` together with a matrix reading off
    coordinates in that basis, it can pass ``basis`` and ``coordinates``
    instead and skip a Hermite reduction.
    """

    def __init__(
        self,
        numerator: IntMatrix | None,
        denominator: IntMatrix,
        basis: IntMatrix | None = None,
        coordinates: IntMatrix | None = None,
    ) -> None:
        if basis is None:
            basis = lattice_basis(numerator)
        self.ambient = basis.rows
        self.basis = basis
        self._coordinates = coordinates
        self._solver = None if coordinates is not None else hermite_form(basis)
        den = self._basis_coords_of_columns(denominator)
        self.presentation = present(den)
        self.group = self.presentation.group
        self.generators = [basis.apply(c) for c in self.presentation.from_canonical.columns()]

    def _basis_coords(self, x: Sequence[int]) -> list[int]:
        if self._coordinates is not None:
            y = self._coordinates.apply(list(x))
            if self.basis.apply(y) != list(x):
                raise ValueError("vector does not lie in the numerator lattice")
            return y
        y = self._solver.solve(x)
        if y is None:
            raise ValueError("vector does not lie in the numerator lattice")
        return y

    def _basis_coords_of_columns(self, m: IntMatrix) -> IntMatrix:
        if self._coordinates is not None:
            return self._coordinates @ m
        return IntMatrix.from_columns([self._basis_coords(c) for c in m.columns()], self.basis.cols)

    def coords(self, x: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of the class of ``x``."""
        return self.presentation.coords(self._basis_coords(x))

    def lift(self, c: Sequence[int]) -> list[int]:
        out = [0] * self.ambient
        for k, g in zip(c, self.generators):
            if k:
                for i, v in enumerate(g):
                    out[i] += k * v
        return out

    def induced(self, target: Subquotient, f) -> AbHom:
        """Homomorphism induced by a vector map ``f`` sending our lattice pair into target's."""
        cols = [target.coords(f(g)) for g in self.generators]
        return AbHom(self.group, target.group, IntMatrix.from_columns(cols, target.group.ngens))


# -- derived functors on canonical forms ------------------------------------

def _pairwise(g: FgAbGroup, h: FgAbGroup, rule) -> FgAbGroup:
    orders = []
    for a in g.orders:
        for b in h.orders:
            o = rule(a, b)
            if o is not None:
                orders.append(o)
    return FgAbGroup.from_orders(orders)


def tensor(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _pairwise(g, h, gcd)


def tor1(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _pairwise(g, h, lambda a, b: gcd(a, b) if a and b else None)


def hom_group(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _pairwise(g, h, lambda a, b: None if a and not b else gcd(a, b))


def ext1(g: FgAbGroup, h: FgAbGroup) -> FgAbGroup:
    return _pairwise(g, h, lambda a, b: None if not a else gcd(a, b))


def direct_sum(parts: Sequence[FgAbGroup]) -> FgAbGroup:
    return FgAbGroup.from_orders(o for p in parts for o in p.orders)


# -- images, kernels, exactness ---------------------------------------------

def _kernel_lift(f: AbHom) -> IntMatrix:
    """Generators of ``{x in Z^n : f(x) = 0}`` on the free cover of the domain."""
    n = f.domain.ngens
    aug = hstack([f.matrix, f.codomain.relations()], rows=f.codomain.ngens)
    k = integer_kernel(aug)
    return k.select_rows(range(n)) if n else IntMatrix.zeros(0, k.cols)


def hom_image_kernel(f: AbHom) -> tuple[FgAbGroup, FgAbGroup]:
    lift = _kernel_lift(f)
    image = cokernel_group(lift)
    kernel = Subquotient(lift, f.domain.relations()).group
    return image, kernel


def _span_contains(gens: IntMatrix, vectors: Iterable[Sequence[int]]) -> bool:
    solver = hermite_form(gens)
    return all(solver.solve(v) is not None for v in vectors)


def check_exact_at(f: AbHom, g: AbHom) -> bool:
    """Whether ``image(f) == kernel(g)`` inside the middle group."""
    if f.codomain != g.domain:
        raise ValueError("check_exact_at needs codomain(f) == domain(g)")
    mid = f.codomain
    image_gens = hstack([f.matrix, mid.relations()], rows=mid.ngens)
    kernel_gens = _kernel_lift(g)
    rel_g = g.codomain.relations()
    if not _span_contains(rel_g, (g.matrix.apply(c) for c in image_gens.columns())):
        return False
    return _span_contains(image_gens, kernel_gens.columns())
