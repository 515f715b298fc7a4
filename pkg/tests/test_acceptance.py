"""Acceptance criteria, one test per criterion.

Each test prints a ``PASS`` or ``FAIL`` line and checks its own wall-clock
budget.  Run directly with ``python3 tests/test_acceptance.py`` for just
the summary lines.
"""

import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from corpus import corpus, random_ses  # noqa: E402
from oracles import cyclic_group_homology, group_homology_mod_p  # noqa: E402
from groupoid_homology.abelian import FgAbGroup, IntMatrix, hermite_solve, smith_normal_form  # noqa: E402
from groupoid_homology.algebra import GroupoidFunction, convolve, local_unit  # noqa: E402
from groupoid_homology.groupoid import (  # noqa: E402
    EtaleFunctor,
    cyclic_group_table,
    group_groupoid,
    isotropy,
    orbits,
    pair_groupoid,
    unit_groupoid,
)
from groupoid_homology.moore import (  # noqa: E402
    cycles_mod_boundaries,
    groupoid_homology,
    homology_result,
    homology_with_coefficients,
    moore_complex,
    similarity_chain_homotopy,
)
from groupoid_homology.nerve import build_nerve, check_simplicial_identities  # noqa: E402
from groupoid_homology.sequences import (  # noqa: E402
    MvCover,
    connecting_class,
    cohomology,
    dual_cochain_complex,
    mv_les,
    pullback_coboundary,
    snake_les,
    subgroupoid_ses,
    uct_cohomology,
    uct_homology,
    uct_naturality_check,
    verify_exactness,
)
from groupoid_homology.sft import SftSpec, sft_disjoint_union, sft_homology, sft_homology_with_coefficients  # noqa: E402

BUDGET_SECONDS = 10.0
Z, Z2 = FgAbGroup(1), FgAbGroup(0, (2,))
TRIVIAL = FgAbGroup()


def _sft_goldens():
    a = SftSpec.from_rows([[2, 1], [1, 0]])
    b = SftSpec.from_rows([[2, 1], [1, 2]])
    c = SftSpec.from_rows([[3]])
    bad = []
    for name, spec, want in (("A", a, (Z2, TRIVIAL)), ("B", b, (Z, Z)), ("C", c, (Z2, TRIVIAL))):
        got = sft_homology(spec).groups[:2]
        if got != want:
            bad.append(f"{name}: {got}")
    union = sft_disjoint_union([a, b, c])
    if union.groups[:2] != (FgAbGroup(1, (2, 2)), Z):
        bad.append(f"union: {union.groups[:2]}")
    for n in (0, 1):
        if sft_homology_with_coefficients([a, b, c], "Z/2", n) != FgAbGroup(0, (2, 2, 2)):
            bad.append(f"mod 2 degree {n}")
        for p in (3, 5, 7, 11):
            if sft_homology_with_coefficients([a, b, c], f"Z/{p}", n) != FgAbGroup(0, (p,)):
                bad.append(f"mod {p} degree {n}")
    return bad


def _smith_golden():
    m = IntMatrix.from_rows([[-1, -1], [-1, 1]])
    snf = smith_normal_form(m)
    bad = []
    if snf.diagonal != (1, 2):
        bad.append(f"diagonal {snf.diagonal}")
    if snf.u @ m @ snf.v != snf.s:
        bad.append("u*M*v != s")
    if abs(snf.u.determinant()) != 1 or abs(snf.v.determinant()) != 1:
        bad.append("transforms not unimodular")
    return bad


def _unit_groupoids():
    bad = []
    for k in (1, 3, 5):
        h = groupoid_homology(unit_groupoid(k), 2)
        if h.groups != (FgAbGroup(k), TRIVIAL, TRIVIAL):
            bad.append(f"k={k}: {h.groups}")
    return bad


def _cyclic_two():
    table = cyclic_group_table(2)
    c = moore_complex(build_nerve(group_groupoid(table), 4))
    bad = []
    got = homology_result(c, 3).groups
    frozen = (Z, Z2, TRIVIAL, Z2)
    periodic = tuple(FgAbGroup(r, tuple(t)) for r, t in (cyclic_group_homology(2, n) for n in range(4)))
    if periodic != frozen:
        bad.append(f"periodic resolution oracle {periodic}")
    if got != frozen:
        bad.append(f"integral {got}")
    h = homology_result(c, 2)
    for n in range(3):
        oracle = FgAbGroup(0, (2,) * group_homology_mod_p(table, 2, n))
        for route in ("prime_field", "chain"):
            if homology_with_coefficients(c, "Z/2", n, route) != oracle:
                bad.append(f"mod 2 degree {n} via {route}")
        if uct_homology(h, "Z/2", n).middle != oracle or oracle != Z2:
            bad.append(f"mod 2 degree {n} via uct")
    return bad


def _property_suite():
    bad = []
    rng = random.Random(7)
    for k, g in enumerate(corpus()):
        nv = build_nerve(g, 3)
        c = moore_complex(nv)
        for n in range(1, 3):
            if not (c.boundary(n) @ c.boundary(n + 1)).is_zero():
                bad.append(f"#{k}: boundary squared in degree {n}")
        if check_simplicial_identities(nv):
            bad.append(f"#{k}: simplicial identities")
        if verify_exactness(snake_les(subgroupoid_ses(g, isotropy(g).arrows, 2), 2)):
            bad.append(f"#{k}: subgroupoid sequence")
        blocks = orbits(g)
        u1 = {x for b in blocks if rng.random() < 0.6 for x in b}
        u2 = (set(g.units) - u1) | {x for b in blocks if rng.random() < 0.5 for x in b}
        if verify_exactness(mv_les(MvCover(g, u1, u2), 2)):
            bad.append(f"#{k}: Mayer-Vietoris sequence")
        fs = [GroupoidFunction(g, [rng.randint(-3, 3) for _ in range(g.arrow_count)]) for _ in range(3)]
        if convolve(g, convolve(g, fs[0], fs[1]), fs[2]) != convolve(g, fs[0], convolve(g, fs[1], fs[2])):
            bad.append(f"#{k}: associativity")
        e = local_unit(g)
        if not convolve(g, e, fs[0]) == fs[0] == convolve(g, fs[0], e):
            bad.append(f"#{k}: unit law")
    for trial in range(60):
        ses = random_ses(rng)
        if verify_exactness(snake_les(ses)):
            bad.append(f"random sequence {trial}: not exact")
        for n in range(1, ses.top_homology_degree + 1):
            for z in cycles_mod_boundaries(ses.quot, n).generators:
                lift = hermite_solve(ses.project.matrices[n], z)
                shift = ses.inject.matrices[n].apply([rng.randint(-3, 3) for _ in range(ses.sub.ranks[n])])
                other = [x + y for x, y in zip(lift, shift)]
                if connecting_class(ses, n, z, lift=other) != connecting_class(ses, n, z):
                    bad.append(f"random sequence {trial}: lift dependence in degree {n}")
    for n in range(1, 5):
        g = pair_groupoid(n)
        for _ in range(10):
            a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            b = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            prod = tuple(sum(a[i][k] * b[k][j] for k in range(n)) for i in range(n) for j in range(n))
            fa = GroupoidFunction(g, [v for row in a for v in row])
            fb = GroupoidFunction(g, [v for row in b for v in row])
            if convolve(g, fa, fb).values != prod:
                bad.append(f"pair({n}) product")
    return bad


def _pair_groupoids_are_points():
    bad = []
    point = groupoid_homology(unit_groupoid(1), 2)
    for n in (2, 3):
        if groupoid_homology(pair_groupoid(n), 2) != point:
            bad.append(f"pair({n}) differs from a point")
    g = pair_groupoid(2)
    rho = EtaleFunctor.identity(g)
    sigma = EtaleFunctor.from_arrow_map(g, g, [0, 0, 0, 0])
    h = similarity_chain_homotopy(rho, sigma, {0: 0, 3: 1}, 2)
    if h.failures():
        bad.append(f"homotopy identity fails in degrees {h.failures()}")
    return bad


def _uct():
    bad = []
    for k, g in enumerate(corpus()):
        c = moore_complex(build_nerve(g, 3))
        h = homology_result(c, 2)
        for coeff in ("Z/2", "Z/3", "Z/4", "FG:2+r1"):
            for n in range(3):
                seq = uct_homology(h, coeff, n)
                if seq.middle != homology_with_coefficients(c, coeff, n, "chain") or seq.failures():
                    bad.append(f"#{k} {coeff} degree {n}")
    ses = subgroupoid_ses(group_groupoid(cyclic_group_table(4)), [0, 2], 2)
    for coeff in ("Z/2", "Z/3", "Z/4", "FG:2+r1"):
        if uct_naturality_check(ses, coeff):
            bad.append(f"naturality with {coeff}")
    return bad


def _cohomology():
    bad = []
    nv = build_nerve(group_groupoid(cyclic_group_table(2)), 3)
    c = moore_complex(nv)
    cc = dual_cochain_complex(c)
    got = tuple(cohomology(cc, n) for n in range(3))
    if got != (Z, TRIVIAL, Z2):
        bad.append(f"Z/2 cohomology {got}")
    h = homology_result(c, 2)
    if tuple(uct_cohomology(h, "Z", n).middle for n in range(3)) != got:
        bad.append("universal coefficient route disagrees")
    rng = random.Random(1)
    for k, g in enumerate(corpus()):
        nvg = build_nerve(g, 3)
        ccg = dual_cochain_complex(moore_complex(nvg))
        for n in range(3):
            zeta = [rng.randint(-4, 4) for _ in nvg.levels[n]]
            if pullback_coboundary(nvg, n, zeta) != tuple(ccg.coboundary(n).apply(zeta)):
                bad.append(f"#{k}: coboundary degree {n}")
    return bad


CRITERIA = [
    (1, "shift of finite type golden values", _sft_goldens),
    (2, "Smith form golden example", _smith_golden),
    (3, "unit groupoids", _unit_groupoids),
    (4, "cyclic group of order two, integral and mod 2", _cyclic_two),
    (5, "property suite over the random corpus", _property_suite),
    (6, "pair groupoids look like a point", _pair_groupoids_are_points),
    (7, "universal coefficients and naturality", _uct),
    (8, "cohomology of the cyclic group of order two", _cohomology),
]


def run_criterion(number: int, title: str, check) -> tuple[bool, str]:
    start = time.perf_counter()
    try:
        problems = check()
    except Exception as exc:  # report, do not mask
        problems = [f"{type(exc).__name__}: {exc}"]
    elapsed = time.perf_counter() - start
    if elapsed > BUDGET_SECONDS:
        problems.append(f"took {elapsed:.1f}s")
    ok = not problems
    detail = "" if ok else " :: " + "; ".join(problems[:5])
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f}s){detail}"
    return ok, line


@pytest.mark.parametrize("number, title, check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_acceptance(number, title, check, capsys):
    ok, line = run_criterion(number, title, check)
    with capsys.disabled():
        print(f"\n{line}")
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
