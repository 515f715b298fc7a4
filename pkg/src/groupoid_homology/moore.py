"""Moore chain complexes of nerves and their homology.

The chain group in degree ``n`` is ``Z^{|level n|}`` with the nerve's
lexicographic basis, and the boundary is the alternating sum of the face
pushforwards.  Because the nerve is cut off at some degree ``N``, homology
is only reported in degrees ``0..N-1`` unless the complex is flagged as
genuinely ending at ``N``.

>>> from groupoid_homology.groupoid import cyclic_group_table, group_groupoid
>>> result = groupoid_homology(group_groupoid(cyclic_group_table(2)), 3)
>>> [str(h) for h in result.groups]
['Z', 'Z/2', '0', 'Z/2']
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from .abelian import (
    FgAbGroup,
    IntMatrix,
    Subquotient,
    direct_sum,
    hermite_form,
    hstack,
    lattice_basis,
    rank_mod_p,
    tensor,
    tor1,
)
from .groupoid import EtaleFunctor, FiniteGroupoid
from .nerve import Nerve, build_nerve, induced_simplicial_map


class DegreeError(IndexError):
    pass


def pushforward_matrix(mapping: Sequence[int], target_size: int) -> IntMatrix:
    """Fibre-sum matrix: entry ``(y, x)`` is 1 exactly when ``mapping[x] == y``."""
    for x, y in enumerate(mapping):
        if not 0 <= y < target_size:
            raise IndexError(f"image {y} of element {x} is outside a target of size {target_size}")
    return IntMatrix.from_triplets(target_size, len(mapping), ((y, x, 1) for x, y in enumerate(mapping)))


@dataclass(frozen=True)
class ChainComplex:
    """Free chain complex ``C_N -> ... -> C_0``.

    ``boundaries[n-1]`` is the matrix of the boundary out of degree ``n``.
    With ``truncated`` set (the default for nerve complexes) the chain
    groups continue above ``N`` and homology at ``N`` is unknown.
    """

    ranks: tuple[int, ...]
    boundaries: tuple[IntMatrix, ...] = field(repr=False)
    basis_labels: tuple[tuple, ...] | None = field(default=None, repr=False, compare=False)
    truncated: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "ranks", tuple(self.ranks))
        object.__setattr__(self, "boundaries", tuple(self.boundaries))
        if not self.ranks:
            raise ValueError("a chain complex needs at least degree 0")
        if len(self.boundaries) != len(self.ranks) - 1:
            raise ValueError("need one boundary matrix per positive degree")
        for n, b in enumerate(self.boundaries, start=1):
            if b.shape != (self.ranks[n - 1], self.ranks[n]):
                raise ValueError(f"boundary {n} has shape {b.shape}, expected {(self.ranks[n - 1], self.ranks[n])}")
        for n in range(1, len(self.boundaries)):
            if not (self.boundaries[n - 1] @ self.boundaries[n]).is_zero():
                raise ValueError(f"boundary {n} after boundary {n + 1} is not zero")
        object.__setattr__(self, "_cache", {})

    @property
    def length(self) -> int:
        return len(self.ranks) - 1

    @property
    def top_homology_degree(self) -> int:
        return self.length - 1 if self.truncated else self.length

    def boundary(self, n: int) -> IntMatrix:
        """Boundary out of degree ``n``; zero in degree 0 and above an untruncated top."""
        if n == 0:
            return IntMatrix.zeros(0, self.ranks[0])
        if n <= self.length:
            return self.boundaries[n - 1]
        if not self.truncated and n == self.length + 1:
            return IntMatrix.zeros(self.ranks[-1], 0)
        raise DegreeError(f"boundary {n} is not available on a complex of length {self.length}")

    def check_degree(self, n: int) -> None:
        if not 0 <= n <= self.top_homology_degree:
            raise DegreeError(
                f"homology in degree {n} needs boundary {n + 1}; this complex supports degrees "
                f"0..{self.top_homology_degree}"
            )


def moore_complex(nv: Nerve) -> ChainComplex:
    bds = []
    for n in range(1, nv.n_max + 1):
        trip = []
        for i in range(n + 1):
            sign = -1 if i % 2 else 1
            trip.extend((y, x, sign) for x, y in enumerate(nv.faces[(n, i)]))
        bds.append(IntMatrix.from_triplets(len(nv.levels[n - 1]), len(nv.levels[n]), trip))
    return ChainComplex(tuple(nv.sizes()), tuple(bds), nv.levels)


def cycles_mod_boundaries(c: ChainComplex, n: int) -> Subquotient:
    """Cycles over boundaries in degree ``n`` with explicit class coordinates."""
    c.check_degree(n)
    key = ("Z", n)
    if key not in c._cache:
        d_in = c.boundary(n + 1)
        if n == 0:
            basis = IntMatrix.identity(c.ranks[0])
            coords = basis
        else:
            hf = hermite_form(c.boundary(n), track_inverse=True)
            basis, coords = hf.kernel(), hf.kernel_coordinates()
        c._cache[key] = Subquotient(None, d_in, basis=basis, coordinates=coords)
    return c._cache[key]


def homology(c: ChainComplex, n: int) -> FgAbGroup:
    return cycles_mod_boundaries(c, n).group


# -- coefficients ------------------------------------------------------------------

def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    k = 2
    while k * k <= m:
        if m % k == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class CoefficientSpec:
    """The coefficient group: ``Z``, ``Z/m`` or an explicit finitely generated group."""

    kind: str
    group: FgAbGroup

    def __post_init__(self) -> None:
        if self.kind not in ("Z", "mod", "fg"):
            raise ValueError(f"unknown coefficient kind {self.kind!r}")
        if self.kind == "mod" and (self.group.free_rank or len(self.group.torsion) != 1):
            raise ValueError("mod coefficients must be a single cyclic group Z/m with m >= 2")

    @classmethod
    def integers(cls) -> CoefficientSpec:
        return cls("Z", FgAbGroup(1))

    @classmethod
    def mod(cls, m: int) -> CoefficientSpec:
        if m < 2:
            raise ValueError("mod m coefficients need m >= 2")
        return cls("mod", FgAbGroup(0, (m,)))

    @classmethod
    def fg(cls, group: FgAbGroup) -> CoefficientSpec:
        return cls("fg", group)

    @classmethod
    def parse(cls, text: str | CoefficientSpec) -> CoefficientSpec:
        """Read ``Z``, ``Z/6``, ``FG:2,4`` or ``FG:2,4+r1``."""
        if isinstance(text, CoefficientSpec):
            return text
        t = text.strip()
        if t == "Z":
            return cls.integers()
        m = re.fullmatch(r"Z/(\d+)", t)
        if m:
            return cls.mod(int(m.group(1)))
        m = re.fullmatch(r"FG:(\d+(?:,\d+)*)?(?:\+?r(\d+))?", t)
        if m and (m.group(1) or m.group(2)):
            orders = [int(x) for x in m.group(1).split(",")] if m.group(1) else []
            if any(o < 2 for o in orders):
                raise ValueError(f"invariant factors must be >= 2 in {text!r}")
            free = int(m.group(2)) if m.group(2) else 0
            return cls.fg(FgAbGroup.from_orders(orders + [0] * free))
        raise ValueError(f"cannot read coefficients {text!r}; use Z, Z/m, FG:2,4 or FG:2,4+r1")

    @property
    def is_integers(self) -> bool:
        return self.kind == "Z" or (self.kind == "fg" and self.group == FgAbGroup(1))

    @property
    def prime(self) -> int | None:
        if self.kind == "mod" and _is_prime(self.group.torsion[0]):
            return self.group.torsion[0]
        return None

    def __str__(self) -> str:
        if self.kind == "Z":
            return "Z"
        if self.kind == "mod":
            return f"Z/{self.group.torsion[0]}"
        body = ",".join(map(str, self.group.torsion))
        return f"FG:{body}" + (f"+r{self.group.free_rank}" if self.group.free_rank else "")


INTEGERS = CoefficientSpec.integers()


@dataclass(frozen=True)
class HomologyResult:
    coefficients: CoefficientSpec
    groups: tuple[FgAbGroup, ...]

    def __getitem__(self, n: int) -> FgAbGroup:
        if not 0 <= n < len(self.groups):
            raise DegreeError(f"degree {n} is not in this result (degrees 0..{len(self.groups) - 1})")
        return self.groups[n]

    @property
    def max_degree(self) -> int:
        return len(self.groups) - 1

    def to_dict(self) -> dict:
        return {str(n): g.to_dict() for n, g in enumerate(self.groups)}


def homology_mod_prime(c: ChainComplex, p: int, n: int) -> FgAbGroup:
    c.check_degree(n)
    dim = c.ranks[n] - rank_mod_p(c.boundary(n), p) - rank_mod_p(c.boundary(n + 1), p)
    return FgAbGroup(0, (p,) * dim)


def uct_value(h_n: FgAbGroup, h_prev: FgAbGroup, a: FgAbGroup) -> FgAbGroup:
    return direct_sum([tensor(h_n, a), tor1(h_prev, a)])


def cyclic_coefficient_subquotient(c: ChainComplex, m: int, n: int) -> Subquotient:
    """Homology of ``C (x) Z/m`` in degree ``n`` as a lattice subquotient of ``Z^{rank}``.

    Cycles are ``{x : boundary(x) in m Z}`` and boundaries are
    ``image(boundary) + m Z``, so everything stays over the integers.
    ``m = 0`` gives integral homology.
    """
    if m == 0:
        return cycles_mod_boundaries(c, n)
    c.check_degree(n)
    key = ("mod", m, n)
    if key not in c._cache:
        k = c.ranks[n]
        d_out, d_in = c.boundary(n), c.boundary(n + 1)
        aug = hstack([d_out, IntMatrix.identity(d_out.rows).scale(m)], rows=d_out.rows)
        kern = hermite_form(aug).kernel()
        cyc = kern.select_rows(range(k)) if k else IntMatrix.zeros(0, kern.cols)
        bnd = hstack([d_in, IntMatrix.identity(k).scale(m)], rows=k)
        c._cache[key] = Subquotient(cyc, bnd)
    return c._cache[key]


def homology_with_coefficients(
    c: ChainComplex, a: CoefficientSpec | str, n: int, route: str = "auto"
) -> FgAbGroup:
    """Homology with coefficients.

    ``route`` is ``"auto"`` (prime field when possible, otherwise the
    universal-coefficient formula), ``"prime_field"``, ``"uct"``, or
    ``"chain"``.  The last one computes ``H_n(C (x) A)`` directly from
    lattice subquotients, one cyclic summand of ``A`` at a time.
    """
    a = CoefficientSpec.parse(a)
    c.check_degree(n)
    if a.is_integers and route in ("auto", "uct", "chain"):
        return homology(c, n)
    if route == "auto":
        route = "prime_field" if a.prime is not None else "uct"
    if route == "prime_field":
        if a.prime is None:
            raise ValueError(f"prime-field route needs Z/p coefficients, got {a}")
        return homology_mod_prime(c, a.prime, n)
    if route == "uct":
        prev = homology(c, n - 1) if n else FgAbGroup()
        return uct_value(homology(c, n), prev, a.group)
    if route == "chain":
        return direct_sum([cyclic_coefficient_subquotient(c, m, n).group for m in a.group.orders])
    raise ValueError(f"unknown route {route!r}")


def homology_result(c: ChainComplex, max_degree: int | None = None, coefficients: CoefficientSpec | str = INTEGERS) -> HomologyResult:
    a = CoefficientSpec.parse(coefficients)
    top = c.top_homology_degree if max_degree is None else max_degree
    return HomologyResult(a, tuple(homology_with_coefficients(c, a, n) for n in range(top + 1)))


def groupoid_homology(
    g: FiniteGroupoid, max_degree: int, coefficients: CoefficientSpec | str = INTEGERS, budget: int | None = None
) -> HomologyResult:
    """Homology in degrees ``0..max_degree`` (builds the nerve one degree higher)."""
    kwargs = {} if budget is None else {"budget": budget}
    c = moore_complex(build_nerve(g, max_degree + 1, **kwargs))
    return homology_result(c, max_degree, coefficients)


# -- maps and homotopies ----------------------------------------------------------

@dataclass(frozen=True)
class ChainMap:
    source: ChainComplex
    target: ChainComplex
    matrices: tuple[IntMatrix, ...] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrices", tuple(self.matrices))
        for n, f in enumerate(self.matrices):
            if f.shape != (self.target.ranks[n], self.source.ranks[n]):
                raise ValueError(f"chain map matrix {n} has shape {f.shape}")
        for n in range(1, len(self.matrices)):
            lhs = self.target.boundaries[n - 1] @ self.matrices[n]
            rhs = self.matrices[n - 1] @ self.source.boundaries[n - 1]
            if lhs != rhs:
                raise ValueError(f"chain map does not commute with the boundary in degree {n}")

    def __getitem__(self, n: int) -> IntMatrix:
        return self.matrices[n]

    def then(self, other: ChainMap) -> ChainMap:
        """``other`` after ``self``."""
        k = min(len(self.matrices), len(other.matrices))
        return ChainMap(self.source, other.target, tuple(other.matrices[n] @ self.matrices[n] for n in range(k)))


def identity_chain_map(c: ChainComplex) -> ChainMap:
    return ChainMap(c, c, tuple(IntMatrix.identity(r) for r in c.ranks))


def chain_map_from_level_maps(source: ChainComplex, target: ChainComplex, maps: Sequence[Sequence[int]]) -> ChainMap:
    return ChainMap(source, target, tuple(pushforward_matrix(m, target.ranks[n]) for n, m in enumerate(maps)))


def induced_chain_map(f: EtaleFunctor, nv_dom: Nerve, nv_cod: Nerve) -> ChainMap:
    maps = induced_simplicial_map(f, nv_dom, nv_cod)
    return chain_map_from_level_maps(moore_complex(nv_dom), moore_complex(nv_cod), maps)


def induced_homology_map(cm: ChainMap, n: int):
    if n >= len(cm.matrices):
        raise DegreeError(f"chain map has no component in degree {n}")
    src = cycles_mod_boundaries(cm.source, n)
    tgt = cycles_mod_boundaries(cm.target, n)
    f = cm.matrices[n]
    return src.induced(tgt, f.apply)


@dataclass(frozen=True)
class ChainHomotopy:
    """``h[n]`` maps degree ``n`` of the source to degree ``n+1`` of the target."""

    f: ChainMap
    g: ChainMap
    h: tuple[IntMatrix, ...] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "h", tuple(self.h))
        failed = self.failures()
        if failed:
            raise ValueError(f"homotopy identity fails in degrees {failed}")

    def failures(self) -> list[int]:
        src, tgt = self.f.source, self.f.target
        bad = []
        for n, hn in enumerate(self.h):
            lhs = tgt.boundary(n + 1) @ hn
            if n:
                lhs = lhs + self.h[n - 1] @ src.boundary(n)
            if lhs != self.f.matrices[n] - self.g.matrices[n]:
                bad.append(n)
        return bad


class SimilarityError(ValueError):
    def __init__(self, message: str, witness: int) -> None:
        super().__init__(f"{message} (witness {witness})")
        self.witness = witness


def similarity_chain_homotopy(
    rho: EtaleFunctor, sigma: EtaleFunctor, theta: Sequence[int] | Mapping[int, int], n_max: int
) -> ChainHomotopy:
    """Chain homotopy between the chain maps of two similar functors.

    ``theta`` assigns to each unit ``x`` of the domain an arrow of the
    codomain from ``rho(x)`` to ``sigma(x)``; pass it as a mapping keyed by
    unit or as a sequence aligned with ``domain.units``.
    """
    G, H = rho.domain, rho.codomain
    if sigma.domain != G or sigma.codomain != H:
        raise ValueError("similar functors must share domain and codomain")
    th = dict(theta) if isinstance(theta, Mapping) else dict(zip(G.units, theta))
    if set(th) != set(G.units):
        raise ValueError("theta needs exactly one arrow per unit of the domain")
    for x in G.units:
        if H.source[th[x]] != rho.on_unit(x):
            raise SimilarityError("theta(x) does not start at rho(x)", x)
        if H.range[th[x]] != sigma.on_unit(x):
            raise SimilarityError("theta(x) does not end at sigma(x)", x)
    P, S = rho.arrow_map, sigma.arrow_map
    for a in range(G.arrow_count):
        if H.mul(th[G.range[a]], P[a]) != H.mul(S[a], th[G.source[a]]):
            raise SimilarityError("theta is not natural on this arrow", a)

    nv_g, nv_h = build_nerve(G, n_max), build_nerve(H, n_max + 1)
    c_g, c_h = moore_complex(nv_g), moore_complex(nv_h)
    f = chain_map_from_level_maps(c_g, c_h, induced_simplicial_map(rho, nv_g, nv_h))
    g = chain_map_from_level_maps(c_g, c_h, induced_simplicial_map(sigma, nv_g, nv_h))

    hs = []
    for n in range(n_max + 1):
        trip = []
        for x, t in enumerate(nv_g.levels[n]):
            if n == 0:
                trip.append((nv_h.index(1, (th[t],)), x, 1))
                continue
            for j in range(n + 1):
                unit = G.range[t[0]] if j == 0 else G.source[t[j - 1]]
                k = tuple(S[a] for a in t[:j]) + (th[unit],) + tuple(P[a] for a in t[j:])
                trip.append((nv_h.index(n + 1, k), x, -1 if j % 2 else 1))
        hs.append(IntMatrix.from_triplets(c_h.ranks[n + 1], c_g.ranks[n], trip))
    return ChainHomotopy(f, g, tuple(hs))
