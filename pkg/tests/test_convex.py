from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from okx.convex import (
    ConvexBody,
    contains_body,
    contains_origin,
    contains_point,
    has_orthant_neighborhood,
    hull_2d,
    max_subsimplex,
    minkowski_sum,
    scale,
    slice_first_zero,
    translate,
    volume,
)
from okx.errors import DimensionError, OrthantViolation
from okx.okounkov import area

coord = st.fractions(min_value=0, max_value=5, max_denominator=4)
points2 = st.lists(st.tuples(coord, coord), min_size=1, max_size=8)


def body(*pts):
    return ConvexBody.from_points(len(pts[0]), pts)


def test_canonical_form_drops_interior_and_sorts():
    b = body((1, 1), (0, 0), (2, 0), (0, 2), (2, 2), (1, 0))
    assert b.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))
    assert b == body((2, 2), (0, 2), (2, 0), (0, 0))


def test_canonical_form_in_three_dimensions():
    cube = [p for p in product((0, 1), repeat=3)]
    b = ConvexBody.from_points(3, cube + [(Fraction(1, 2),) * 3])
    assert len(b.vertices) == 8


def test_rejects_points_outside_orthant():
    with pytest.raises(OrthantViolation):
        body((0, 0), (-1, 1))


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        ConvexBody.from_points(2, [(0, 0, 0)])
    with pytest.raises(DimensionError):
        minkowski_sum(body((0, 0)), body((0, 0, 0)))


def test_membership():
    tri = body((0, 0), (1, 0), (0, 1))
    assert contains_point(tri, (Fraction(1, 3), Fraction(1, 3)))
    assert contains_point(tri, (Fraction(1, 2), Fraction(1, 2)))
    assert not contains_point(tri, (Fraction(1, 2), Fraction(2, 3)))
    assert contains_origin(tri)
    assert not contains_origin(body((1, 0), (2, 0), (2, 1)))
    assert not contains_origin(ConvexBody.empty(2))


def test_max_subsimplex_and_orthant():
    b = body((0, 0), (1, 0), (0, 1))
    assert max_subsimplex(b).lengths == (1, 1)
    p2 = body((0, 0), (Fraction(1, 4), 0), (0, 2))
    assert max_subsimplex(p2).lengths == (Fraction(1, 4), 2)
    assert has_orthant_neighborhood(p2)
    segment = body((0, 0), (0, 1))
    assert max_subsimplex(segment).lengths == (0, 1)
    assert contains_origin(segment) and not has_orthant_neighborhood(segment)
    off = body((1, 0), (2, 0), (2, 1))
    assert max_subsimplex(off).lengths == (0, 0)


def test_max_subsimplex_of_square_uses_axis_extent():
    sq = body((0, 0), (3, 0), (0, 2), (3, 2))
    assert max_subsimplex(sq).lengths == (3, 2)


def test_slice_translate_scale_minkowski():
    b = body((0, 1), (0, 2), (1, 2))
    assert slice_first_zero(b, 1) == body((1,), (2,))
    assert slice_first_zero(body((1, 0), (2, 0), (2, 1)), 1).is_empty
    assert translate(b, (1, 0)) == body((1, 1), (1, 2), (2, 2))
    assert scale(b, 2) == body((0, 2), (0, 4), (2, 4))
    s = minkowski_sum(body((0, 0), (1, 0)), body((0, 0), (0, 1)))
    assert s == body((0, 0), (1, 0), (0, 1), (1, 1))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_unit_cube_volume(n):
    assert volume(ConvexBody.from_points(n, product((0, 1), repeat=n))) == 1


def test_simplex_volumes():
    assert volume(body((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1))) == Fraction(1, 6)
    assert volume(body((0, 0), (1, 0), (0, 1))) == Fraction(1, 2)
    assert volume(body((0, 0), (1, 1))) == 0


@settings(max_examples=80, deadline=None)
@given(points2)
def test_area_matches_triangulated_volume(pts):
    b = ConvexBody.from_points(2, pts)
    assert area(b) == volume(b)
    assert list(b.ccw()) == hull_2d(b.vertices)


@settings(max_examples=60, deadline=None)
@given(points2, points2)
def test_minkowski_contains_translates(p, q):
    A, B = ConvexBody.from_points(2, p), ConvexBody.from_points(2, q)
    S = minkowski_sum(A, B)
    for v in B.vertices:
        assert contains_body(S, translate(A, v))
    assert area(S) >= area(A) + area(B)
