"""Finite discrete groupoids given arrow by arrow.

Arrows are the integers ``0..arrow_count-1``.  A unit is an arrow that is its
own range and source, so ``source`` and ``range`` take values among the unit
arrows.  Composition ``a * b`` is defined exactly when ``source[a] ==
range[b]`` and is stored as a sorted table of triples ``(a, b, a*b)``.

>>> g = pair_groupoid(3)
>>> g.arrow_count, len(g.units)
(9, 3)
>>> validate_groupoid(g)
[]
>>> [list(b) for b in orbits(g)]
[[0, 4, 8]]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Any, Hashable, Iterable, Mapping, NamedTuple, Sequence


class GroupoidStructureError(ValueError):
    """Index arrays out of range or of the wrong length."""


class ConstructionError(ValueError):
    """Input data does not describe the requested standard groupoid."""


class PresentationError(ValueError):
    def __init__(self, axiom: str, witness: tuple, message: str) -> None:
        super().__init__(f"{axiom} fails at {witness}: {message}")
        self.axiom = axiom
        self.witness = witness


class Violation(NamedTuple):
    axiom: str
    witness: tuple
    message: str


@dataclass(frozen=True)
class FiniteGroupoid:
    arrow_count: int
    units: tuple[int, ...]
    source: tuple[int, ...]
    range: tuple[int, ...]
    inverse: tuple[int, ...]
    compose: tuple[tuple[int, int, int], ...]
    labels: tuple[Hashable, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "units", tuple(sorted(int(x) for x in self.units)))
        object.__setattr__(self, "source", tuple(int(x) for x in self.source))
        object.__setattr__(self, "range", tuple(int(x) for x in self.range))
        object.__setattr__(self, "inverse", tuple(int(x) for x in self.inverse))
        object.__setattr__(self, "compose", tuple(sorted(tuple(int(v) for v in t) for t in self.compose)))
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
        _check_structure(self)

    @cached_property
    def table(self) -> dict[tuple[int, int], int]:
        return {(a, b): c for a, b, c in self.compose}

    @cached_property
    def unit_set(self) -> frozenset[int]:
        return frozenset(self.units)

    @cached_property
    def arrows_by_range(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {x: [] for x in self.units}
        for a, r in enumerate(self.range):
            out[r].append(a)
        return {x: tuple(v) for x, v in out.items()}

    @cached_property
    def arrows_by_source(self) -> dict[int, tuple[int, ...]]:
        out: dict[int, list[int]] = {x: [] for x in self.units}
        for a, s in enumerate(self.source):
            out[s].append(a)
        return {x: tuple(v) for x, v in out.items()}

    def mul(self, a: int, b: int) -> int:
        try:
            return self.table[(a, b)]
        except KeyError:
            raise ValueError(f"arrows {a} and {b} are not composable") from None

    def is_unit(self, a: int) -> bool:
        return a in self.unit_set

    def label(self, a: int) -> Hashable:
        return self.labels[a] if self.labels is not None else a


def _check_structure(g: FiniteGroupoid) -> None:
    m = g.arrow_count
    if m < 0:
        raise GroupoidStructureError("arrow_count must be non-negative")
    for name in ("source", "range", "inverse"):
        arr = getattr(g, name)
        if len(arr) != m:
            raise GroupoidStructureError(f"{name} has length {len(arr)}, expected {m}")
        bad = [i for i, v in enumerate(arr) if not 0 <= v < m]
        if bad:
            raise GroupoidStructureError(f"{name}[{bad[0]}] = {arr[bad[0]]} is not an arrow index")
    if g.labels is not None and len(g.labels) != m:
        raise GroupoidStructureError("labels must have one entry per arrow")
    if len(set(g.units)) != len(g.units) or any(not 0 <= x < m for x in g.units):
        raise GroupoidStructureError("units must be distinct arrow indices")
    units = set(g.units)
    for name in ("source", "range"):
        arr = getattr(g, name)
        bad = [i for i, v in enumerate(arr) if v not in units]
        if bad:
            raise GroupoidStructureError(f"{name}[{bad[0]}] = {arr[bad[0]]} is not a unit")
    seen = set()
    for t in g.compose:
        if len(t) != 3 or any(not 0 <= v < m for v in t):
            raise GroupoidStructureError(f"composition entry {t} is out of range")
        if t[:2] in seen:
            raise GroupoidStructureError(f"pair {t[:2]} has two products")
        seen.add(t[:2])


# -- validation ---------------------------------------------------------------

def validate_groupoid(g: FiniteGroupoid) -> list[Violation]:
    """Every failed groupoid axiom, each with a witness; empty iff valid."""
    out: list[Violation] = []
    r, s, inv, tab = g.range, g.source, g.inverse, g.table
    for (a, b) in tab:
        if s[a] != r[b]:
            out.append(Violation("composition-domain", (a, b), "product defined although s(a) != r(b)"))
    for b in range(g.arrow_count):
        for a in g.arrows_by_source.get(r[b], ()):
            if (a, b) not in tab:
                out.append(Violation("composition-domain", (a, b), "composable pair has no product"))
    for x in g.units:
        if r[x] != x or s[x] != x:
            out.append(Violation("G1", (x,), "a unit must be its own range and source"))
    for a in range(g.arrow_count):
        if tab.get((r[a], a)) != a or tab.get((a, s[a])) != a:
            out.append(Violation("G2", (a,), "units do not act as identities on this arrow"))
        if r[inv[a]] != s[a] or s[inv[a]] != r[a]:
            out.append(Violation("G3", (a,), "inverse swaps range and source incorrectly"))
        if tab.get((inv[a], a)) != s[a] or tab.get((a, inv[a])) != r[a]:
            out.append(Violation("G4", (a,), "inverse does not cancel"))
    for (a, b), c in tab.items():
        if r[c] != r[a] or s[c] != s[b]:
            out.append(Violation("G5", (a, b), "product has the wrong range or source"))
    for (a, b), ab in tab.items():
        for c in g.arrows_by_range.get(s[b], ()):
            bc = tab.get((b, c))
            left = tab.get((ab, c))
            right = tab.get((a, bc)) if bc is not None else None
            if left is None or right is None or left != right:
                out.append(Violation("G6", (a, b, c), "composition is not associative"))
    return out


def require_valid(g: FiniteGroupoid) -> FiniteGroupoid:
    bad = validate_groupoid(g)
    if bad:
        v = bad[0]
        raise ConstructionError(f"{v.axiom} fails at {v.witness}: {v.message}")
    return g


def derive_structure(
    arrow_count: int,
    compose: Mapping[tuple[int, int], int],
    inverse: Sequence[int],
    composable: Iterable[tuple[int, int]] | None = None,
    labels: Sequence[Hashable] | None = None,
) -> FiniteGroupoid:
    """Recover units, range and source from composition and inversion alone.

    ``composable`` defaults to the key set of ``compose``; when given it must
    match that key set.  Raises :class:`PresentationError` naming the first
    failed axiom of the composition-first presentation.
    """
    m = arrow_count
    tab = {(int(a), int(b)): int(c) for (a, b), c in dict(compose).items()}
    inv = [int(x) for x in inverse]
    if len(inv) != m:
        raise GroupoidStructureError(f"inverse has length {len(inv)}, expected {m}")
    for key, val in tab.items():
        if any(not 0 <= v < m for v in (*key, val)):
            raise GroupoidStructureError(f"composition entry {key} -> {val} is out of range")
    if any(not 0 <= v < m for v in inv):
        raise GroupoidStructureError("inverse entry out of range")
    if composable is not None:
        pairs = {(int(a), int(b)) for a, b in composable}
        extra = pairs.symmetric_difference(tab)
        if extra:
            raise PresentationError("composable-set", min(extra), "composable set and product table disagree")
    for a in range(m):
        if inv[inv[a]] != a:
            raise PresentationError("G1'", (a,), "inversion is not an involution")
    for a in range(m):
        if (a, inv[a]) not in tab:
            raise PresentationError("G3'", (a,), "an arrow is not composable with its inverse")
    after: dict[int, list[int]] = {}
    for a, b in tab:
        after.setdefault(a, []).append(b)
    for (a, b), ab in tab.items():
        for c in after.get(b, ()):
            bc = tab[(b, c)]
            if (ab, c) not in tab or (a, bc) not in tab:
                raise PresentationError("G2'", (a, b, c), "composable chain does not stay composable")
            if tab[(ab, c)] != tab[(a, bc)]:
                raise PresentationError("G2'", (a, b, c), "composition is not associative")
    for (a, b), ab in tab.items():
        if (inv[a], ab) not in tab or tab[(inv[a], ab)] != b:
            raise PresentationError("G4'", (a, b), "left cancellation fails")
        if (ab, inv[b]) not in tab or tab[(ab, inv[b])] != a:
            raise PresentationError("G4'", (a, b), "right cancellation fails")
    rng = [tab[(a, inv[a])] for a in range(m)]
    src = [tab[(inv[a], a)] for a in range(m)]
    g = FiniteGroupoid(m, sorted(set(rng)), src, rng, inv, [(a, b, c) for (a, b), c in tab.items()], labels)
    bad = validate_groupoid(g)
    if bad:
        raise PresentationError(bad[0].axiom, bad[0].witness, bad[0].message)
    return g


def forget_units(g: FiniteGroupoid) -> tuple[int, dict[tuple[int, int], int], tuple[int, ...]]:
    """The composition-first data that :func:`derive_structure` consumes."""
    return g.arrow_count, dict(g.table), g.inverse


# -- standard constructors ----------------------------------------------------

def _check_group_table(table: Sequence[Sequence[int]]) -> int:
    n = len(table)
    if n == 0:
        raise ConstructionError("a group needs at least one element")
    if any(len(row) != n for row in table):
        raise ConstructionError("group table must be square")
    if any(not 0 <= v < n for row in table for v in row):
        raise ConstructionError("group table entry out of range")
    ident = [e for e in range(n) if all(table[e][x] == x and table[x][e] == x for x in range(n))]
    if not ident:
        raise ConstructionError("group table has no identity element")
    e = ident[0]
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise ConstructionError(f"group table is not associative at {(a, b, c)}")
    for a in range(n):
        if not any(table[a][b] == e for b in range(n)):
            raise ConstructionError(f"element {a} has no inverse")
    return e


def group_inverse(table: Sequence[Sequence[int]], e: int) -> list[int]:
    n = len(table)
    return [next(b for b in range(n) if table[a][b] == e) for a in range(n)]


def cyclic_group_table(n: int) -> list[list[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def group_groupoid(table: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """One-object groupoid of a group; arrow ``a`` is group element ``a``."""
    e = _check_group_table(table)
    n = len(table)
    comp = [(a, b, table[a][b]) for a in range(n) for b in range(n)]
    return FiniteGroupoid(n, [e], [e] * n, [e] * n, group_inverse(table, e), comp, tuple(range(n)))


def unit_groupoid(n: int) -> FiniteGroupoid:
    return FiniteGroupoid(n, range(n), range(n), range(n), range(n), [(x, x, x) for x in range(n)], tuple(range(n)))


def pair_groupoid(n: int) -> FiniteGroupoid:
    """Arrow ``(i, j)`` has index ``i*n + j``, range ``(i, i)`` and source ``(j, j)``."""
    idx = lambda i, j: i * n + j  # noqa: E731
    pts = range(n)
    comp = [(idx(i, k), idx(k, j), idx(i, j)) for i in pts for k in pts for j in pts]
    return FiniteGroupoid(
        n * n,
        [idx(i, i) for i in pts],
        [idx(j, j) for i in pts for j in pts],
        [idx(i, i) for i in pts for j in pts],
        [idx(j, i) for i in pts for j in pts],
        comp,
        tuple((i, j) for i in pts for j in pts),
    )


def transformation_groupoid(table: Sequence[Sequence[int]], action: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """Arrows ``(g, x)`` indexed ``g*|X| + x``; ``action[g][x]`` is ``g.x``."""
    e = _check_group_table(table)
    n = len(table)
    if len(action) != n:
        raise ConstructionError("action needs one row per group element")
    k = len(action[0])
    if any(len(row) != k for row in action) or any(not 0 <= v < k for row in action for v in row):
        raise ConstructionError("action rows must be maps of one finite set")
    if any(action[e][x] != x for x in range(k)):
        raise ConstructionError("identity element does not act trivially")
    for h, g, x in product(range(n), range(n), range(k)):
        if action[h][action[g][x]] != action[table[h][g]][x]:
            raise ConstructionError(f"action is not compatible at {(h, g, x)}")
    inv = group_inverse(table, e)
    idx = lambda g, x: g * k + x  # noqa: E731
    arrows = [(g, x) for g in range(n) for x in range(k)]
    comp = [
        (idx(h, action[g][x]), idx(g, x), idx(table[h][g], x))
        for h in range(n) for g in range(n) for x in range(k)
    ]
    return FiniteGroupoid(
        n * k,
        [idx(e, x) for x in range(k)],
        [idx(e, x) for g, x in arrows],
        [idx(e, action[g][x]) for g, x in arrows],
        [idx(inv[g], action[g][x]) for g, x in arrows],
        comp,
        tuple(arrows),
    )


def equivalence_relation_groupoid(blocks: Sequence[Sequence[int]]) -> FiniteGroupoid:
    """Arrows are the related pairs ``(x, y)`` in lexicographic order."""
    points = sorted(x for b in blocks for x in b)
    if points != list(range(len(points))):
        raise ConstructionError("blocks must partition 0..n-1")
    block_of = {x: i for i, b in enumerate(blocks) for x in b}
    pairs = [(x, y) for x in points for y in points if block_of[x] == block_of[y]]
    index = {p: i for i, p in enumerate(pairs)}
    comp = [
        (index[(x, z)], index[(z, y)], index[(x, y)])
        for (x, z) in pairs for y in points if block_of[y] == block_of[z]
    ]
    return FiniteGroupoid(
        len(pairs),
        [index[(x, x)] for x in points],
        [index[(y, y)] for x, y in pairs],
        [index[(x, x)] for x, y in pairs],
        [index[(y, x)] for x, y in pairs],
        comp,
        tuple(pairs),
    )


def disjoint_union(parts: Sequence[FiniteGroupoid]) -> FiniteGroupoid:
    units, src, rng, inv, comp, labels = [], [], [], [], [], []
    off = 0
    for k, g in enumerate(parts):
        units += [x + off for x in g.units]
        src += [x + off for x in g.source]
        rng += [x + off for x in g.range]
        inv += [x + off for x in g.inverse]
        comp += [(a + off, b + off, c + off) for a, b, c in g.compose]
        labels += [(k, g.label(a)) for a in range(g.arrow_count)]
        off += g.arrow_count
    return FiniteGroupoid(off, units, src, rng, inv, comp, tuple(labels))


def group_bundle(tables: Sequence[Sequence[Sequence[int]]]) -> FiniteGroupoid:
    return disjoint_union([group_groupoid(t) for t in tables])


def construct(kind: str, data: Any) -> FiniteGroupoid:
    """Dispatch to a standard constructor by name."""
    builders = {
        "group": group_groupoid,
        "cyclic_group": lambda n: group_groupoid(cyclic_group_table(_positive(n))),
        "pair": pair_groupoid,
        "unit": unit_groupoid,
        "transformation": lambda d: transformation_groupoid(d["table"], d["action"]),
        "equivalence_relation": equivalence_relation_groupoid,
        "group_bundle": group_bundle,
        "disjoint_union": disjoint_union,
    }
    if kind not in builders:
        raise ConstructionError(f"unknown groupoid kind {kind!r}")
    return builders[kind](data)


def _positive(n: int) -> int:
    if n < 1:
        raise ConstructionError("a cyclic group needs at least one element")
    return n


# -- orbits, reductions, isotropy ---------------------------------------------

def orbits(g: FiniteGroupoid) -> list[tuple[int, ...]]:
    """Orbit partition of the units, each block sorted, blocks ordered by least unit."""
    parent = {x: x for x in g.units}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in range(g.arrow_count):
        ra, sa = find(g.range[a]), find(g.source[a])
        if ra != sa:
            parent[max(ra, sa)] = min(ra, sa)
    blocks: dict[int, list[int]] = {}
    for x in g.units:
        blocks.setdefault(find(x), []).append(x)
    return sorted(tuple(b) for b in blocks.values())


def is_minimal(g: FiniteGroupoid) -> bool:
    return len(orbits(g)) == 1


def is_saturated(g: FiniteGroupoid, u: Iterable[int]) -> bool:
    u = set(u)
    return all(set(b) <= u or not (set(b) & u) for b in orbits(g))


class Restriction(NamedTuple):
    groupoid: FiniteGroupoid
    arrows: tuple[int, ...]  # original index of each arrow of ``groupoid``
    full: bool


def restrict_to_arrows(g: FiniteGroupoid, arrows: Iterable[int]) -> tuple[FiniteGroupoid, tuple[int, ...]]:
    """Induced structure on an arrow subset closed under the groupoid operations."""
    keep = tuple(sorted(set(arrows)))
    new = {a: i for i, a in enumerate(keep)}
    for a in keep:
        for b in (g.range[a], g.source[a], g.inverse[a]):
            if b not in new:
                raise ConstructionError(f"arrow subset is not closed: {a} needs {b}")
    comp = []
    for a, b, c in g.compose:
        if a in new and b in new:
            if c not in new:
                raise ConstructionError(f"arrow subset is not closed under composition at {(a, b)}")
            comp.append((new[a], new[b], new[c]))
    sub = FiniteGroupoid(
        len(keep),
        [new[a] for a in keep if g.is_unit(a)],
        [new[g.source[a]] for a in keep],
        [new[g.range[a]] for a in keep],
        [new[g.inverse[a]] for a in keep],
        comp,
        tuple(g.label(a) for a in keep),
    )
    return sub, keep


def reduction(g: FiniteGroupoid, u: Iterable[int]) -> Restriction:
    u = set(u)
    if not u <= g.unit_set:
        raise ValueError(f"{sorted(u - g.unit_set)} are not units")
    arrows = [a for a in range(g.arrow_count) if g.range[a] in u and g.source[a] in u]
    sub, keep = restrict_to_arrows(g, arrows)
    reached = {g.range[a] for x in u for a in g.arrows_by_source[x]}
    return Restriction(sub, keep, reached == g.unit_set)


class Isotropy(NamedTuple):
    groupoid: FiniteGroupoid
    arrows: tuple[int, ...]
    principal: bool
    minimal: bool


def isotropy(g: FiniteGroupoid) -> Isotropy:
    arrows = [a for a in range(g.arrow_count) if g.range[a] == g.source[a]]
    sub, keep = restrict_to_arrows(g, arrows)
    return Isotropy(sub, keep, len(keep) == len(g.units), is_minimal(g))


# -- functors -----------------------------------------------------------------

@dataclass(frozen=True)
class EtaleFunctor:
    """Structure-preserving map; ``unit_map[k]`` is the image of ``domain.units[k]``."""

    domain: FiniteGroupoid
    codomain: FiniteGroupoid
    arrow_map: tuple[int, ...]
    unit_map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "arrow_map", tuple(int(x) for x in self.arrow_map))
        object.__setattr__(self, "unit_map", tuple(int(x) for x in self.unit_map))
        if len(self.arrow_map) != self.domain.arrow_count:
            raise GroupoidStructureError("arrow_map needs one entry per domain arrow")
        if len(self.unit_map) != len(self.domain.units):
            raise GroupoidStructureError("unit_map needs one entry per domain unit")
        m = self.codomain.arrow_count
        if any(not 0 <= v < m for v in self.arrow_map + self.unit_map):
            raise GroupoidStructureError("functor image outside the codomain")

    @classmethod
    def from_arrow_map(cls, domain: FiniteGroupoid, codomain: FiniteGroupoid, arrow_map: Sequence[int]) -> EtaleFunctor:
        return cls(domain, codomain, tuple(arrow_map), tuple(arrow_map[x] for x in domain.units))

    @classmethod
    def identity(cls, g: FiniteGroupoid) -> EtaleFunctor:
        return cls.from_arrow_map(g, g, range(g.arrow_count))

    def then(self, other: EtaleFunctor) -> EtaleFunctor:
        """``other`` after ``self``."""
        if other.domain != self.codomain:
            raise ValueError("functors are not composable")
        pos = {x: k for k, x in enumerate(other.domain.units)}
        return EtaleFunctor(
            self.domain,
            other.codomain,
            tuple(other.arrow_map[a] for a in self.arrow_map),
            tuple(other.unit_map[pos[x]] if x in pos else other.arrow_map[x] for x in self.unit_map),
        )

    def on_unit(self, x: int) -> int:
        return self.unit_map[self.domain.units.index(x)]


def validate_functor(f: EtaleFunctor) -> list[Violation]:
    out: list[Violation] = []
    dom, cod, F = f.domain, f.codomain, f.arrow_map
    unit_image = dict(zip(dom.units, f.unit_map))
    for x in dom.units:
        if not cod.is_unit(unit_image[x]):
            out.append(Violation("F1", (x,), "unit image is not a unit"))
        if F[x] != unit_image[x]:
            out.append(Violation("F1", (x,), "arrow map and unit map disagree on a unit"))
    for a in range(dom.arrow_count):
        if cod.range[F[a]] != unit_image[dom.range[a]] or cod.source[F[a]] != unit_image[dom.source[a]]:
            out.append(Violation("F2", (a,), "range or source not intertwined"))
    for a, b, c in dom.compose:
        if cod.table.get((F[a], F[b])) != F[c]:
            out.append(Violation("F3", (a, b), "composition not preserved"))
    return out


def require_valid_functor(f: EtaleFunctor) -> EtaleFunctor:
    bad = validate_functor(f)
    if bad:
        v = bad[0]
        raise ValueError(f"invalid functor: {v.axiom} fails at {v.witness}: {v.message}")
    return f


# -- quotients ------------------------------------------------------------------

def _normal_isotropy_classes(g: FiniteGroupoid, n: Iterable[int]) -> list[int]:
    n = set(n)
    if not g.unit_set <= n:
        raise ValueError("normal subgroupoid must contain every unit")
    for a in n:
        if g.range[a] != g.source[a]:
            raise ValueError(f"arrow {a} of the subgroupoid is not isotropy")
    restrict_to_arrows(g, n)
    at: dict[int, list[int]] = {x: [] for x in g.units}
    for a in sorted(n):
        at[g.source[a]].append(a)
    for c in range(g.arrow_count):
        for a in at[g.source[c]]:
            conj = g.mul(g.mul(c, a), g.inverse[c])
            if conj not in n:
                raise ValueError(f"subgroupoid is not normal: conjugating {a} by {c} leaves it")
    cls = [-1] * g.arrow_count
    for c in range(g.arrow_count):
        if cls[c] >= 0:
            continue
        coset = {g.mul(g.mul(p, c), q) for p in at[g.range[c]] for q in at[g.source[c]]}
        rep = min(coset)
        for d in coset:
            cls[d] = rep
    return cls


def quotient_functor(g: FiniteGroupoid, n: Iterable[int]) -> EtaleFunctor:
    """Quotient map onto the groupoid of double cosets ``N gamma N``.

    Each class is represented by its least arrow, and classes are indexed in
    increasing order of that representative.
    """
    cls = _normal_isotropy_classes(g, n)
    reps = sorted(set(cls))
    idx = {c: i for i, c in enumerate(reps)}
    amap = [idx[c] for c in cls]
    comp = {}
    for a, b, c in g.compose:
        key = (amap[a], amap[b])
        if comp.setdefault(key, amap[c]) != amap[c]:
            raise ValueError("double-coset product is not well defined")
    q = FiniteGroupoid(
        len(reps),
        sorted({amap[x] for x in g.units}),
        [amap[g.source[c]] for c in reps],
        [amap[g.range[c]] for c in reps],
        [amap[g.inverse[c]] for c in reps],
        [(a, b, c) for (a, b), c in comp.items()],
        tuple(g.label(c) for c in reps),
    )
    return EtaleFunctor.from_arrow_map(g, q, amap)


def quotient_by_normal_isotropy(g: FiniteGroupoid, n: Iterable[int]) -> FiniteGroupoid:
    return quotient_functor(g, n).codomain
