import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus, relabel, s3_table
from groupoid_homology.abelian import AbHom, FgAbGroup, IntMatrix
from groupoid_homology.groupoid import (
    EtaleFunctor,
    cyclic_group_table,
    group_groupoid,
    pair_groupoid,
    quotient_functor,
    unit_groupoid,
)
from groupoid_homology.moore import (
    ChainComplex,
    ChainHomotopy,
    CoefficientSpec,
    DegreeError,
    SimilarityError,
    groupoid_homology,
    homology,
    homology_with_coefficients,
    identity_chain_map,
    induced_chain_map,
    induced_homology_map,
    moore_complex,
    pushforward_matrix,
    similarity_chain_homotopy,
)
from groupoid_homology.nerve import build_nerve
from oracles import cyclic_group_homology, group_homology_mod_p

Z2 = group_groupoid(cyclic_group_table(2))
Z4 = group_groupoid(cyclic_group_table(4))
POINT = unit_groupoid(1)


def groups(result):
    return [str(g) for g in result.groups]


def test_pushforward_matrix():
    assert pushforward_matrix([0, 1, 2], 3) == IntMatrix.identity(3)
    assert pushforward_matrix([0, 0], 1).apply([2, 3]) == [5]
    a, b = [1, 0, 1], [1, 1]
    assert pushforward_matrix(b, 2) @ pushforward_matrix(a, 2) == pushforward_matrix([b[x] for x in a], 2)


def test_boundary_examples():
    c = moore_complex(build_nerve(unit_groupoid(3), 4))
    for n in range(1, 5):
        expected = IntMatrix.identity(3) if n % 2 == 0 else IntMatrix.zeros(3, 3)
        assert c.boundary(n) == expected
    assert moore_complex(build_nerve(Z2, 1)).boundary(1).is_zero()
    assert moore_complex(build_nerve(pair_groupoid(2), 1)).boundary(1).tolist() == [[0, -1, 1, 0], [0, 1, -1, 0]]


def test_boundary_squares_to_zero_on_corpus():
    for g in corpus():
        c = moore_complex(build_nerve(g, 3))
        for n in range(1, 3):
            assert (c.boundary(n) @ c.boundary(n + 1)).is_zero()


def test_chain_complex_rejects_nonzero_square():
    d = IntMatrix.from_rows([[1]])
    with pytest.raises(ValueError):
        ChainComplex((1, 1, 1), (d, d))


def test_known_homology():
    assert groups(groupoid_homology(Z2, 3)) == ["Z", "Z/2", "0", "Z/2"]
    assert groups(groupoid_homology(unit_groupoid(5), 1)) == ["Z^5", "0"]
    assert groups(groupoid_homology(pair_groupoid(3), 2)) == ["Z", "0", "0"]
    assert groups(groupoid_homology(group_groupoid(cyclic_group_table(6)), 3)) == ["Z", "Z/6", "0", "Z/6"]
    # S3: H1 is the abelianization Z/2, H2 vanishes
    assert groups(groupoid_homology(group_groupoid(s3_table()), 2)) == ["Z", "Z/2", "0"]


def test_degree_out_of_range():
    c = moore_complex(build_nerve(Z2, 2))
    homology(c, 1)
    with pytest.raises(DegreeError):
        homology(c, 2)


def test_untruncated_complex_has_homology_at_top():
    c = ChainComplex((1, 1), (IntMatrix.from_rows([[2]]),), truncated=False)
    assert homology(c, 1) == FgAbGroup() and homology(c, 0) == FgAbGroup(0, (2,))


def test_coefficient_parsing():
    assert CoefficientSpec.parse("Z").is_integers
    assert CoefficientSpec.parse("Z/6").group == FgAbGroup(0, (6,))
    assert CoefficientSpec.parse("FG:2,4").group == FgAbGroup(0, (2, 4))
    assert CoefficientSpec.parse("FG:2,4+r1").group == FgAbGroup(1, (2, 4))
    assert CoefficientSpec.parse("Z/7").prime == 7 and CoefficientSpec.parse("Z/6").prime is None
    for bad in ("Q", "Z/1", "FG:", "FG:1,2"):
        with pytest.raises(ValueError):
            CoefficientSpec.parse(bad)


def test_mod_two_against_bar_complex_oracle():
    table = cyclic_group_table(2)
    c = moore_complex(build_nerve(Z2, 3))
    for n in range(3):
        dim = group_homology_mod_p(table, 2, n)
        for route in ("prime_field", "uct", "chain"):
            assert homology_with_coefficients(c, "Z/2", n, route) == FgAbGroup(0, (2,) * dim)


def test_unit_groupoid_mod_three():
    c = moore_complex(build_nerve(unit_groupoid(5), 2))
    assert homology_with_coefficients(c, "Z/3", 0) == FgAbGroup(0, (3,) * 5)


@pytest.mark.parametrize("coeff", ["Z/2", "Z/3", "Z/4", "Z/6", "FG:2+r1", "FG:2,4"])
def test_coefficient_routes_agree_on_corpus(coeff):
    for g in corpus():
        c = moore_complex(build_nerve(g, 3))
        for n in range(3):
            uct = homology_with_coefficients(c, coeff, n, "uct")
            assert homology_with_coefficients(c, coeff, n, "chain") == uct
            if CoefficientSpec.parse(coeff).prime:
                assert homology_with_coefficients(c, coeff, n, "prime_field") == uct


def test_prime_route_rejects_composite():
    c = moore_complex(build_nerve(Z2, 2))
    with pytest.raises(ValueError):
        homology_with_coefficients(c, "Z/4", 0, "prime_field")


def test_homology_invariant_under_relabeling():
    rng = random.Random(7)
    for g in corpus(20):
        h = groupoid_homology(g, 2)
        assert groupoid_homology(relabel(g, rng), 2) == h


def test_induced_maps_examples():
    nv2, nv4 = build_nerve(Z2, 3), build_nerve(Z4, 3)
    inc = EtaleFunctor.from_arrow_map(Z2, Z4, [0, 2])
    cm = induced_chain_map(inc, nv2, nv4)
    assert cm.matrices[1].tolist() == [[1, 0], [0, 0], [0, 1], [0, 0]]
    ident = induced_chain_map(EtaleFunctor.identity(Z4), nv4, nv4)
    assert ident == identity_chain_map(moore_complex(nv4))
    for n in range(3):
        h = induced_homology_map(ident, n)
        assert h == AbHom.identity(h.domain)


def test_quotient_functor_surjective_on_h1():
    q = quotient_functor(Z4, [0, 2])
    cm = induced_chain_map(q, build_nerve(Z4, 2), build_nerve(q.codomain, 2))
    h1 = induced_homology_map(cm, 1)
    assert h1.domain == FgAbGroup(0, (4,)) and h1.codomain == FgAbGroup(0, (2,))
    assert h1.is_surjective()


def test_functoriality_on_homology():
    inc = EtaleFunctor.from_arrow_map(Z2, Z4, [0, 2])
    q = quotient_functor(Z4, [0, 2])
    nv2, nv4, nvq = build_nerve(Z2, 3), build_nerve(Z4, 3), build_nerve(q.codomain, 3)
    a = induced_chain_map(inc, nv2, nv4)
    b = induced_chain_map(q, nv4, nvq)
    ab = induced_chain_map(inc.then(q), nv2, nvq)
    for n in range(3):
        assert ab.matrices[n] == b.matrices[n] @ a.matrices[n]
        assert induced_homology_map(ab, n) == induced_homology_map(b, n) @ induced_homology_map(a, n)


def _pair_retraction():
    g = pair_groupoid(2)
    rho = EtaleFunctor.identity(g)
    sigma = EtaleFunctor.from_arrow_map(g, g, [0, 0, 0, 0])
    theta = {0: 0, 3: 1}  # theta(x) is the arrow (0, x), from x to 0
    return rho, sigma, theta


def test_similarity_homotopy_for_pair_retraction():
    rho, sigma, theta = _pair_retraction()
    h = similarity_chain_homotopy(rho, sigma, theta, 2)
    assert isinstance(h, ChainHomotopy) and h.failures() == []
    for n in range(2):
        assert induced_homology_map(h.f, n) == induced_homology_map(h.g, n)


def test_similarity_with_identical_functors():
    g = group_groupoid(s3_table())
    ident = EtaleFunctor.identity(g)
    h = similarity_chain_homotopy(ident, ident, [0], 2)
    assert h.failures() == []


def test_similarity_rejects_non_natural_theta():
    g = Z2
    ident = EtaleFunctor.identity(g)
    conj = EtaleFunctor.from_arrow_map(g, g, [0, 1])
    similarity_chain_homotopy(ident, conj, [1], 1)  # abelian: conjugation by 1 is natural
    rho, sigma, _ = _pair_retraction()
    with pytest.raises(SimilarityError) as exc:
        similarity_chain_homotopy(rho, sigma, {0: 0, 3: 3}, 1)
    assert exc.value.witness == 3


def test_pair_groupoids_have_point_homology():
    point = groupoid_homology(POINT, 2)
    assert groupoid_homology(pair_groupoid(2), 2) == point
    assert groupoid_homology(pair_groupoid(3), 2) == point


def test_chain_homotopic_to_zero_gives_zero_map():
    # identity of the contractible complex Z --1--> Z is null-homotopic
    c = ChainComplex((1, 1), (IntMatrix.identity(1),), truncated=False)
    ident = identity_chain_map(c)
    assert all(induced_homology_map(ident, n).is_zero() for n in range(2))


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(range(30)), st.sampled_from([2, 3, 5]))
def test_prime_dimension_formula(k, p):
    g = corpus()[k]
    c = moore_complex(build_nerve(g, 3))
    for n in range(3):
        h, prev = homology(c, n), homology(c, n - 1) if n else FgAbGroup()
        expected = h.free_rank + sum(1 for d in h.torsion if d % p == 0) + sum(1 for d in prev.torsion if d % p == 0)
        assert homology_with_coefficients(c, f"Z/{p}", n, "prime_field") == FgAbGroup(0, (p,) * expected)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
def test_cyclic_groups_match_periodic_resolution(m):
    c = moore_complex(build_nerve(group_groupoid(cyclic_group_table(m)), 4))
    for n in range(4):
        rank, torsion = cyclic_group_homology(m, n)
        assert homology(c, n) == FgAbGroup(rank, tuple(torsion))
