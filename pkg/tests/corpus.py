"""Seeded random corpus of small groupoids (at most 12 arrows)."""

from __future__ import annotations

import itertools
import random

from groupoid_homology.groupoid import (
    FiniteGroupoid,
    cyclic_group_table,
    disjoint_union,
    equivalence_relation_groupoid,
    group_bundle,
    group_groupoid,
    pair_groupoid,
    transformation_groupoid,
    unit_groupoid,
)

MAX_ARROWS = 12


def s3_table() -> list[list[int]]:
    perms = list(itertools.permutations(range(3)))
    idx = {p: k for k, p in enumerate(perms)}
    return [[idx[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]


def klein_table() -> list[list[int]]:
    return [[a ^ b for b in range(4)] for a in range(4)]


def _random_partition(rng: random.Random, n: int) -> list[list[int]]:
    labels = [rng.randrange(n) for _ in range(n)]
    blocks: dict[int, list[int]] = {}
    for x, b in enumerate(labels):
        blocks.setdefault(b, []).append(x)
    return list(blocks.values())


def _rotation_action(order: int, points: int) -> list[list[int]]:
    """``Z/order`` acting on ``points`` by rotating the first ``order`` points in blocks."""
    return [[(x // order) * order + (x % order + g) % order if x < points - points % order else x
             for x in range(points)] for g in range(order)]


def random_groupoid(rng: random.Random) -> FiniteGroupoid:
    kind = rng.choice(["cyclic", "s3", "klein", "pair", "unit", "transformation", "equivalence", "bundle", "union"])
    if kind == "cyclic":
        return group_groupoid(cyclic_group_table(rng.randint(1, 6)))
    if kind == "s3":
        return group_groupoid(s3_table())
    if kind == "klein":
        return group_groupoid(klein_table())
    if kind == "pair":
        return pair_groupoid(rng.randint(1, 3))
    if kind == "unit":
        return unit_groupoid(rng.randint(1, 6))
    if kind == "transformation":
        order = rng.choice([2, 3])
        points = rng.randint(order, MAX_ARROWS // order)
        return transformation_groupoid(cyclic_group_table(order), _rotation_action(order, points))
    if kind == "equivalence":
        while True:
            blocks = _random_partition(rng, rng.randint(1, 6))
            if sum(len(b) ** 2 for b in blocks) <= MAX_ARROWS:
                return equivalence_relation_groupoid(blocks)
    if kind == "bundle":
        sizes = [rng.randint(1, 4) for _ in range(rng.randint(1, 3))]
        while sum(sizes) > MAX_ARROWS:
            sizes.pop()
        return group_bundle([cyclic_group_table(k) for k in sizes])
    parts: list[FiniteGroupoid] = []
    budget = MAX_ARROWS
    for _ in range(rng.randint(2, 3)):
        piece = rng.choice([unit_groupoid(1), pair_groupoid(2), group_groupoid(cyclic_group_table(2)),
                            group_groupoid(cyclic_group_table(3))])
        if piece.arrow_count <= budget:
            parts.append(piece)
            budget -= piece.arrow_count
    return disjoint_union(parts)


def corpus(size: int = 30, seed: int = 20240611) -> list[FiniteGroupoid]:
    rng = random.Random(seed)
    fixed = [
        group_groupoid(cyclic_group_table(2)),
        group_groupoid(cyclic_group_table(4)),
        group_groupoid(s3_table()),
        pair_groupoid(3),
        unit_groupoid(3),
        transformation_groupoid(cyclic_group_table(2), _rotation_action(2, 5)),
        disjoint_union([group_groupoid(cyclic_group_table(2)), pair_groupoid(2), unit_groupoid(1)]),
    ]
    out = fixed + [random_groupoid(rng) for _ in range(size - len(fixed))]
    assert all(g.arrow_count <= MAX_ARROWS for g in out)
    return out


def relabel(g: FiniteGroupoid, rng: random.Random) -> FiniteGroupoid:
    """Same groupoid with arrow indices permuted at random."""
    perm = list(range(g.arrow_count))
    rng.shuffle(perm)
    inv = [0] * len(perm)
    for old, new in enumerate(perm):
        inv[new] = old
    return FiniteGroupoid(
        g.arrow_count,
        [perm[x] for x in g.units],
        [perm[g.source[inv[a]]] for a in range(g.arrow_count)],
        [perm[g.range[inv[a]]] for a in range(g.arrow_count)],
        [perm[g.inverse[inv[a]]] for a in range(g.arrow_count)],
        [(perm[a], perm[b], perm[c]) for a, b, c in g.compose],
    )


# -- random short exact sequences of free complexes ------------------------------

def _rand_matrix(rng: random.Random, rows: int, cols: int, spread: int = 2):
    from groupoid_homology.abelian import IntMatrix

    return IntMatrix.from_rows([[rng.randint(-spread, spread) for _ in range(cols)] for _ in range(rows)], cols=cols)


def random_complex(rng: random.Random, ranks: list[int]):
    """Complex with the given ranks whose boundaries square to zero by construction."""
    from groupoid_homology.abelian import IntMatrix, integer_kernel
    from groupoid_homology.moore import ChainComplex

    bds = [_rand_matrix(rng, ranks[0], ranks[1])]
    for n in range(2, len(ranks)):
        ker = integer_kernel(bds[-1])
        mix = _rand_matrix(rng, ker.cols, ranks[n])
        bds.append(ker @ mix if ker.cols else IntMatrix.zeros(ranks[n - 1], ranks[n]))
    return ChainComplex(tuple(ranks), tuple(bds), truncated=False)


def random_ses(rng: random.Random, max_rank: int = 4, length: int = 4):
    """``0 -> A -> A + D -> D -> 0`` with a random twist making connecting maps nontrivial.

    The middle boundary is ``[[dA, Y], [0, dD]]`` with
    ``Y_n = dA h_n - h_{n-1} dD + K R L`` where ``K`` spans cycles of ``A`` and
    ``L`` kills boundaries of ``D``; this satisfies ``dA Y + Y dD = 0``.
    """
    from groupoid_homology.abelian import IntMatrix, hstack, integer_kernel, vstack
    from groupoid_homology.moore import ChainComplex, ChainMap
    from groupoid_homology.sequences import ChainSES

    ra = [rng.randint(0, max_rank) for _ in range(length)]
    rd = [rng.randint(0, max_rank) for _ in range(length)]
    a, d = random_complex(rng, ra), random_complex(rng, rd)
    h = [_rand_matrix(rng, ra[n], rd[n], 1) for n in range(length)]
    twists = []
    for n in range(1, length):
        y = a.boundary(n) @ h[n] - h[n - 1] @ d.boundary(n)
        cyc = integer_kernel(a.boundary(n - 1)) if n > 1 else IntMatrix.identity(ra[0])
        nxt = d.boundary(n + 1)
        left = integer_kernel(nxt.T).T if n + 1 < length else IntMatrix.identity(rd[n])
        if cyc.cols and left.rows:
            y = y + cyc @ _rand_matrix(rng, cyc.cols, left.rows) @ left
        twists.append(y)
    mids = []
    for n in range(1, length):
        top = hstack([a.boundary(n), twists[n - 1]], rows=ra[n - 1])
        bottom = hstack([IntMatrix.zeros(rd[n - 1], ra[n]), d.boundary(n)], rows=rd[n - 1])
        mids.append(vstack([top, bottom], cols=ra[n] + rd[n]))
    mid = ChainComplex(tuple(x + y for x, y in zip(ra, rd)), tuple(mids), truncated=False)
    inject = ChainMap(a, mid, tuple(vstack([IntMatrix.identity(ra[n]), IntMatrix.zeros(rd[n], ra[n])], cols=ra[n])
                                    for n in range(length)))
    project = ChainMap(mid, d, tuple(hstack([IntMatrix.zeros(rd[n], ra[n]), IntMatrix.identity(rd[n])], rows=rd[n])
                                     for n in range(length)))
    return ChainSES(a, mid, d, inject, project)
