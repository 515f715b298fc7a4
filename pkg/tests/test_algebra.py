import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from corpus import corpus
from groupoid_homology.abelian import FgAbGroup
from groupoid_homology.algebra import (
    GroupoidFunction,
    convolve,
    local_unit,
    pull_values,
    push_values,
    scalar_pair,
)
from groupoid_homology.groupoid import FiniteGroupoid, cyclic_group_table, group_groupoid, pair_groupoid

CORPUS = corpus()
values = st.integers(-4, 4)


@st.composite
def groupoid_with_functions(draw, count=3):
    g = draw(st.sampled_from(CORPUS))
    fs = [GroupoidFunction(g, draw(st.lists(values, min_size=g.arrow_count, max_size=g.arrow_count)))
          for _ in range(count)]
    return g, fs


def triple_sum(g, f1, f2, f3):
    out = [0] * g.arrow_count
    for (a, b), ab in g.table.items():
        for c in g.arrows_by_range[g.source[b]]:
            out[g.mul(ab, c)] += f1.values[a] * f2.values[b] * f3.values[c]
    return tuple(out)


def test_matrix_unit_example():
    g = pair_groupoid(2)
    e12, e21 = GroupoidFunction.indicator(g, [1]), GroupoidFunction.indicator(g, [2])
    assert convolve(g, e12, e21) == GroupoidFunction.indicator(g, [0])


def test_group_ring_example():
    g = group_groupoid(cyclic_group_table(2))
    t = GroupoidFunction.indicator(g, [1])
    assert convolve(g, t, t) == GroupoidFunction.indicator(g, [0])
    assert local_unit(g) == GroupoidFunction.indicator(g, [0])


def test_zero_and_unit_examples():
    g = pair_groupoid(2)
    f = GroupoidFunction(g, (1, 2, 3, 4))
    assert convolve(g, f, GroupoidFunction.zero(g)) == GroupoidFunction.zero(g)
    assert local_unit(g) == GroupoidFunction.indicator(g, [0, 3])
    empty = FiniteGroupoid(0, [], [], [], [], [])
    assert local_unit(empty).values == ()


@settings(max_examples=80, deadline=None)
@given(groupoid_with_functions())
def test_convolution_associative_against_triple_sum(data):
    g, (f1, f2, f3) = data
    left = convolve(g, convolve(g, f1, f2), f3)
    assert left == convolve(g, f1, convolve(g, f2, f3))
    assert left.values == triple_sum(g, f1, f2, f3)


@settings(max_examples=80, deadline=None)
@given(groupoid_with_functions())
def test_convolution_bilinear_and_unital(data):
    g, (f1, f2, f3) = data
    e = local_unit(g)
    assert convolve(g, e, f1) == f1 == convolve(g, f1, e)
    assert convolve(g, e, e) == e
    assert convolve(g, f1 + f2, f3) == convolve(g, f1, f3) + convolve(g, f2, f3)
    assert convolve(g, f1.scale(3), f2) == convolve(g, f1, f2).scale(3)


@settings(max_examples=80, deadline=None)
@given(groupoid_with_functions(2))
def test_support_of_product(data):
    g, (f1, f2) = data
    allowed = {g.table[(a, b)] for a in f1.support() for b in f2.support() if (a, b) in g.table}
    assert convolve(g, f1, f2).support() <= allowed


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pair_groupoid_matches_matrix_multiplication(n):
    rng = random.Random(n)
    g = pair_groupoid(n)
    for _ in range(20):
        a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        b = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        fa = GroupoidFunction(g, [a[i][j] for i in range(n) for j in range(n)])
        fb = GroupoidFunction(g, [b[i][j] for i in range(n) for j in range(n)])
        prod = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        assert convolve(g, fa, fb).values == tuple(prod[i][j] for i in range(n) for j in range(n))


def test_groupoid_mismatch_is_rejected():
    g1, g2 = pair_groupoid(2), pair_groupoid(3)
    with pytest.raises(ValueError):
        convolve(g1, GroupoidFunction.zero(g1), GroupoidFunction.zero(g2))
    with pytest.raises(ValueError):
        GroupoidFunction(g1, (1, 2))


def test_scalar_pair_examples():
    z6 = FgAbGroup(0, (6,))
    g = pair_groupoid(2)
    f = GroupoidFunction.indicator(g, [0, 3]).scale(2)
    zeta = GroupoidFunction(g, [(5,)] * 4, z6)
    paired = scalar_pair(f, zeta)
    assert paired.values == ((4,), (0,), (0,), (4,))
    assert paired.support() <= f.support()
    assert scalar_pair(GroupoidFunction.zero(g), zeta).support() == set()
    with pytest.raises(ValueError):
        scalar_pair([1, 2], [1], None)


def test_push_then_pair_equals_pair_then_push():
    z4 = FgAbGroup(1, (4,))
    for size_x, size_y in [(3, 2), (4, 4), (5, 1)]:
        for pi in itertools.product(range(size_y), repeat=size_x):
            f = [x - 2 for x in range(size_x)]
            zeta = [(y + 1, 3 * y - 1) for y in range(size_y)]
            lhs = scalar_pair(push_values(pi, size_y, f), zeta, z4)
            rhs = push_values(pi, size_y, scalar_pair(f, pull_values(pi, zeta), z4), z4)
            assert tuple(z4.normalize(v) for v in lhs) == rhs
