from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from picardlab.cremona import enumerate_neg1
from picardlab.errors import DimensionError, InvalidInputError
from picardlab.lattice import (
    DivisorClass,
    LatticeContext,
    QRegion,
    adjunction_genus,
    k_degree,
    pair,
    primitive,
    q_membership,
    self_int,
    support_count,
)


def C(d, *m):
    return DivisorClass(d, tuple(m))


def classes(n, lo=-20, hi=20):
    return st.builds(
        lambda d, m: DivisorClass(d, tuple(m)),
        st.integers(lo, hi),
        st.lists(st.integers(lo, hi), min_size=n, max_size=n),
    )


@st.composite
def ctx_and_classes(draw, count=3):
    n = draw(st.integers(1, 14))
    return (LatticeContext(n), *[draw(classes(n)) for _ in range(count)])


def test_canonical_class():
    ctx = LatticeContext(10)
    assert ctx.canonical == C(-3, *[-1] * 10)
    assert pair(ctx, ctx.canonical, ctx.canonical) == -1


def test_pair_examples():
    assert pair(LatticeContext(3), C(1, 1, 1, 0), C(0, 0, 0, -1)) == 0
    ctx2 = LatticeContext(2)
    assert pair(ctx2, C(1, 1, 1), ctx2.canonical) == -1


def test_pair_dimension_error():
    with pytest.raises(DimensionError):
        pair(LatticeContext(3), C(1, 1, 1), C(1, 0, 0))


def test_self_int_examples():
    assert self_int(LatticeContext(10), C(3, *[1] * 9, 0)) == 0
    assert self_int(LatticeContext(4), C(0, -1, 0, 0, 0)) == -1
    assert self_int(LatticeContext(12), C(6, 3, 3, 3, *[1] * 9)) == 0


def test_k_degree_examples():
    assert k_degree(LatticeContext(4), C(1, 1, 1, 0, 0)) == -1
    assert k_degree(LatticeContext(9), C(3, *[1] * 9)) == 0
    assert k_degree(LatticeContext(10), C(9, *[3] * 10)) == 3


def test_adjunction_genus_examples():
    assert adjunction_genus(LatticeContext(9), C(3, *[1] * 9)) == 1
    assert adjunction_genus(LatticeContext(3), C(0, -1, 0, 0)) == 0
    assert adjunction_genus(LatticeContext(2), C(1, 1, 1)) == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: classes(n)))
def test_adjunction_genus_is_exact_integer(x):
    # x^2 + K.x = d(d-3) - sum m(m-1) is even, so integral classes never give half-integers
    g = adjunction_genus(LatticeContext(x.n), x)
    assert isinstance(g, Fraction)
    assert g.denominator == 1


def test_primitive_examples():
    ctx = LatticeContext(4)
    assert primitive(ctx, C(4, 2, 2, 2, 2)) == C(2, 1, 1, 1, 1)
    assert primitive(LatticeContext(9), C(3, *[1] * 9)) == C(3, *[1] * 9)
    assert primitive(LatticeContext(2), C(-6, -3, -3)) == C(-2, -1, -1)
    with pytest.raises(InvalidInputError):
        primitive(ctx, C(0, 0, 0, 0, 0))


def test_support_count_examples():
    assert support_count(LatticeContext(14), C(6, 3, 3, 3, *[1] * 9, 0, 0)) == 12
    assert support_count(LatticeContext(5), C(1, 0, 0, 0, 0, 0)) == 0
    ctx = LatticeContext(5)
    assert support_count(ctx, ctx.canonical) == 5


def test_q_membership_examples():
    assert q_membership(LatticeContext(9), C(3, *[1] * 9)) is QRegion.BOUNDARY
    assert q_membership(LatticeContext(3), C(1, 0, 0, 0)) is QRegion.INTERIOR
    assert q_membership(LatticeContext(3), C(0, -1, 0, 0)) is QRegion.OUTSIDE
    assert q_membership(LatticeContext(3), C(0, 0, 0, 0)) is QRegion.ZERO
    assert q_membership(LatticeContext(1), C(-1, 0)) is QRegion.OUTSIDE


def test_arbitrary_size_integers():
    big = 10**40
    ctx = LatticeContext(2)
    x = C(big, big, 1)
    assert self_int(ctx, x) == -1
    assert primitive(ctx, C(2 * big, 2 * big, 2 * big)) == C(1, 1, 1)


@settings(max_examples=300, deadline=None)
@given(ctx_and_classes())
def test_pair_bilinear_symmetric(data):
    ctx, x, y, z = data
    a, b = 3, -7
    assert pair(ctx, x, y) == pair(ctx, y, x)
    assert pair(ctx, x.scale(a) + y.scale(b), z) == a * pair(ctx, x, z) + b * pair(ctx, y, z)


@settings(max_examples=300, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: classes(n)))
def test_nonnegative_square_with_zero_degree_is_zero(x):
    ctx = LatticeContext(x.n)
    y = DivisorClass(0, x.m)
    if self_int(ctx, y) >= 0:
        assert y.is_zero()


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: classes(n, 0, 30)), st.integers(1, 9))
def test_primitive_ray_and_cone_properties(x, k):
    ctx = LatticeContext(x.n)
    if x.is_zero():
        return
    p = primitive(ctx, x)
    assert primitive(ctx, p) == p
    assert primitive(ctx, x.scale(k)) == p
    if q_membership(ctx, x) is QRegion.BOUNDARY:
        assert q_membership(ctx, x.scale(k)) is QRegion.BOUNDARY


def test_neg1_classes_have_genus_zero():
    for n in (3, 6, 8):
        ctx = LatticeContext(n)
        for x in enumerate_neg1(ctx, 6):
            assert adjunction_genus(ctx, x) == 0
