"""Short exact sequences of chain complexes and their long exact sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from ..abelian import AbHom, FgAbGroup, IntMatrix, block_diag, check_exact_at, hermite_form, rank
from ..groupoid import FiniteGroupoid, restrict_to_arrows
from ..moore import ChainComplex, ChainMap, cycles_mod_boundaries, induced_homology_map, moore_complex, pushforward_matrix
from ..nerve import build_nerve, level_maps


class ExactnessError(ValueError):
    def __init__(self, message: str, degree: int) -> None:
        super().__init__(f"{message} (degree {degree})")
        self.degree = degree


@dataclass(frozen=True)
class ChainSES:
    """``0 -> sub --inject--> mid --project--> quot -> 0``, degreewise exact."""

    sub: ChainComplex
    mid: ChainComplex
    quot: ChainComplex
    inject: ChainMap = field(repr=False)
    project: ChainMap = field(repr=False)

    def __post_init__(self) -> None:
        if self.inject.source != self.sub or self.inject.target != self.mid:
            raise ValueError("inject must run from sub to mid")
        if self.project.source != self.mid or self.project.target != self.quot:
            raise ValueError("project must run from mid to quot")

    @property
    def degrees(self) -> int:
        return min(len(self.inject.matrices), len(self.project.matrices))

    @property
    def top_homology_degree(self) -> int:
        return min(c.top_homology_degree for c in (self.sub, self.mid, self.quot))


def ses_failures(ses: ChainSES) -> list[tuple[int, str]]:
    """Degreewise exactness failures as ``(degree, reason)`` pairs."""
    out = []
    for n in range(ses.degrees):
        i, p = ses.inject.matrices[n], ses.project.matrices[n]
        if rank(i) != i.cols:
            out.append((n, "inject is not injective"))
        hp = hermite_form(p)
        if hp.rank != p.rows or any(hp.h[r, c] != 1 for r, c in zip(hp.pivot_rows, hp.pivot_columns)):
            out.append((n, "project is not surjective"))
        if not (p @ i).is_zero():
            out.append((n, "project after inject is not zero"))
            continue
        solver = hermite_form(i)
        if any(solver.solve(k) is None for k in hp.kernel().columns()):
            out.append((n, "kernel of project is larger than the image of inject"))
    return out


def require_exact(ses: ChainSES) -> ChainSES:
    bad = ses_failures(ses)
    if bad:
        raise ExactnessError(bad[0][1], bad[0][0])
    return ses


class LesNode(NamedTuple):
    group: FgAbGroup
    degree: int
    tag: str


@dataclass(frozen=True)
class LongExactSequence:
    """``maps[k]`` runs from ``nodes[k]`` to ``nodes[k+1]``."""

    nodes: tuple[LesNode, ...]
    maps: tuple[AbHom, ...] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.maps) != len(self.nodes) - 1:
            raise ValueError("need one map between each pair of consecutive nodes")
        for k, f in enumerate(self.maps):
            if f.domain != self.nodes[k].group or f.codomain != self.nodes[k + 1].group:
                raise ValueError(f"map {k} does not join nodes {k} and {k + 1}")

    @classmethod
    def from_maps(cls, maps: Sequence[AbHom], tags: Sequence[str] | None = None) -> LongExactSequence:
        groups = [maps[0].domain] + [f.codomain for f in maps]
        tags = tags or ["" for _ in groups]
        return cls(tuple(LesNode(g, -1, t) for g, t in zip(groups, tags)), tuple(maps))

    def node(self, tag: str, degree: int) -> LesNode:
        return next(x for x in self.nodes if x.tag == tag and x.degree == degree)

    def map_from(self, tag: str, degree: int) -> AbHom:
        k = next(k for k, x in enumerate(self.nodes) if x.tag == tag and x.degree == degree)
        return self.maps[k]


class ExactnessViolation(NamedTuple):
    index: int
    node: LesNode


def verify_exactness(les: LongExactSequence) -> list[ExactnessViolation]:
    return [
        ExactnessViolation(k, les.nodes[k])
        for k in range(1, len(les.nodes) - 1)
        if not check_exact_at(les.maps[k - 1], les.maps[k])
    ]


# -- connecting maps ---------------------------------------------------------------

def connecting_class(ses: ChainSES, n: int, cycle: Sequence[int], lift: Sequence[int] | None = None) -> tuple[int, ...]:
    """Class in ``H_{n-1}(sub)`` of the snake chase started at a cycle of ``quot``.

    ``lift`` overrides the Hermite-reduced preimage of ``cycle`` in ``mid``.
    """
    p = ses.project.matrices[n]
    b = list(lift) if lift is not None else hermite_form(p).solve(cycle)
    if b is None or p.apply(b) != list(cycle):
        raise ExactnessError("cycle has no preimage under project", n)
    db = ses.mid.boundary(n).apply(b)
    a = hermite_form(ses.inject.matrices[n - 1]).solve(db)
    if a is None:
        raise ExactnessError("boundary of the lift is not in the image of inject", n - 1)
    return cycles_mod_boundaries(ses.sub, n - 1).coords(a)


def connecting_map(ses: ChainSES, n: int) -> AbHom:
    if n < 1:
        raise ValueError("connecting maps start in degree 1")
    src = cycles_mod_boundaries(ses.quot, n)
    tgt = cycles_mod_boundaries(ses.sub, n - 1)
    p_solver = hermite_form(ses.project.matrices[n])
    i_solver = hermite_form(ses.inject.matrices[n - 1])
    cols = []
    for z in src.generators:
        b = p_solver.solve(z)
        if b is None:
            raise ExactnessError("cycle has no preimage under project", n)
        a = i_solver.solve(ses.mid.boundary(n).apply(b))
        if a is None:
            raise ExactnessError("boundary of the lift is not in the image of inject", n - 1)
        cols.append(tgt.coords(a))
    return AbHom(src.group, tgt.group, IntMatrix.from_columns(cols, tgt.group.ngens))


def snake_les(ses: ChainSES, n_max: int | None = None, tags: Sequence[str] = ("sub", "mid", "quot")) -> LongExactSequence:
    """Long exact homology sequence from degree ``n_max`` down to 0, ending in a zero node."""
    top = ses.top_homology_degree if n_max is None else n_max
    if top > ses.top_homology_degree:
        raise ValueError(f"homology is available only through degree {ses.top_homology_degree}")
    require_exact(ses)
    nodes: list[LesNode] = []
    maps: list[AbHom] = []
    for n in range(top, -1, -1):
        hi = induced_homology_map(ses.inject, n)
        hp = induced_homology_map(ses.project, n)
        nodes += [LesNode(hi.domain, n, tags[0]), LesNode(hi.codomain, n, tags[1]), LesNode(hp.codomain, n, tags[2])]
        maps += [hi, hp]
        maps.append(connecting_map(ses, n) if n else AbHom.zero(hp.codomain, FgAbGroup()))
    nodes.append(LesNode(FgAbGroup(), -1, "zero"))
    return LongExactSequence(tuple(nodes), tuple(maps))


# -- complexes assembled from pieces --------------------------------------------------

def direct_sum_complex(c1: ChainComplex, c2: ChainComplex) -> ChainComplex:
    if c1.length != c2.length:
        raise ValueError("summands must have the same length")
    return ChainComplex(
        tuple(a + b for a, b in zip(c1.ranks, c2.ranks)),
        tuple(block_diag([b1, b2]) for b1, b2 in zip(c1.boundaries, c2.boundaries)),
        truncated=c1.truncated or c2.truncated,
    )


def restricted_complex(c: ChainComplex, keep: Sequence[Sequence[int]]) -> ChainComplex:
    """Boundary submatrices on the basis subsets ``keep[n]``.

    This is a chain complex whenever the kept cells are closed under faces
    (a subcomplex) or their complement is (a quotient complex).
    """
    pos = [{x: k for k, x in enumerate(ks)} for ks in keep]
    bds = []
    for n in range(1, c.length + 1):
        trip = [
            (pos[n - 1][i], pos[n][j], v)
            for i, j, v in c.boundaries[n - 1].nonzeros()
            if i in pos[n - 1] and j in pos[n]
        ]
        bds.append(IntMatrix.from_triplets(len(keep[n - 1]), len(keep[n]), trip))
    labels = None
    if c.basis_labels is not None:
        labels = tuple(tuple(c.basis_labels[n][x] for x in ks) for n, ks in enumerate(keep))
    return ChainComplex(tuple(len(k) for k in keep), tuple(bds), labels, c.truncated)


def coordinate_projection(keep: Sequence[int], size: int) -> IntMatrix:
    return IntMatrix.from_triplets(len(keep), size, ((k, x, 1) for k, x in enumerate(keep)))


def subgroupoid_ses(g: FiniteGroupoid, sub_arrows, n_max: int) -> ChainSES:
    """Extension-by-zero / restriction sequence for a wide subgroupoid.

    ``sub_arrows`` lists the arrows of ``g`` forming the subgroupoid.  The
    complexes are built to degree ``n_max + 1`` so that homology is known
    through ``n_max``.
    """
    arrows = set(sub_arrows)
    missing = set(g.units) - arrows
    if missing:
        raise ValueError(f"subgroupoid is not wide: units {sorted(missing)} are missing")
    sub_g, keep = restrict_to_arrows(g, arrows)
    top = n_max + 1
    nv, nv_sub = build_nerve(g, top), build_nerve(sub_g, top)
    maps = level_maps(nv_sub, nv, keep)
    whole, sub = moore_complex(nv), moore_complex(nv_sub)
    delta = [sorted(set(range(whole.ranks[n])) - set(maps[n])) for n in range(top + 1)]
    quot = restricted_complex(whole, delta)
    inject = ChainMap(sub, whole, tuple(pushforward_matrix(m, whole.ranks[n]) for n, m in enumerate(maps)))
    project = ChainMap(whole, quot, tuple(coordinate_projection(d, whole.ranks[n]) for n, d in enumerate(delta)))
    return require_exact(ChainSES(sub, whole, quot, inject, project))
