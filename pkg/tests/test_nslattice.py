from fractions import Fraction

import pytest

from okx.errors import AmpleClassError, DimensionError, GeometryError, NotPseudoeffective, SignatureError, UnknownCurve
from okx.nslattice import (
    CurveClass,
    PointOnSurface,
    SurfaceGeometry,
    intersect,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    pseff_threshold,
    validate_geometry,
)

from conftest import Q


def _geom(Q, curves, gens, ample, points=()):
    return SurfaceGeometry("t", len(Q), Q, curves, gens, ample, points)


def test_positive_definite_form_is_rejected():
    g = _geom(((1, 0), (0, 1)), [CurveClass("a", (1, 0))], ("a",), (1, 1))
    with pytest.raises(SignatureError):
        validate_geometry(g)


def test_degenerate_form_is_rejected():
    g = _geom(((1, 0), (0, 0)), [CurveClass("a", (1, 0))], ("a",), (1, 0))
    with pytest.raises(SignatureError):
        validate_geometry(g)


def test_ample_class_must_be_positive_on_catalog():
    g = _geom(((1, 0), (0, -1)), [CurveClass("E", (0, 1)), CurveClass("L", (1, -1))],
              ("E", "L"), (1, 1))
    with pytest.raises(AmpleClassError):
        validate_geometry(g)


def test_point_on_unknown_curve_is_rejected():
    g = _geom(((1,),), [CurveClass("L", (1,))], ("L",), (1,),
              (PointOnSurface("x", {"M": (1, {})}),))
    with pytest.raises(GeometryError):
        validate_geometry(g)


def test_intersections(blp2, f2):
    g = blp2.geometry
    assert intersect(g, Q(1, 1), Q(0, 1)) == -1
    assert intersect(g, Q(1, 0), Q(1, 0)) == 1
    assert intersect(f2.geometry, Q(1, 1), Q(1, 0)) == -1


def test_wrong_length_vector(blp2):
    with pytest.raises(DimensionError):
        intersect(blp2.geometry, Q(1), Q(1, 0))


def test_unknown_curve(blp2):
    with pytest.raises(UnknownCurve):
        blp2.geometry.curve("nope")


def test_cone_membership_blp2(blp2):
    g = blp2.geometry
    H, E = Q(1, 0), Q(0, 1)
    assert is_pseudoeffective(g, H) and is_nef(g, H) and not is_ample(g, H)
    assert is_big(g, H)
    assert is_ample(g, Q(2, -1))
    assert is_pseudoeffective(g, E) and not is_big(g, E) and not is_nef(g, E)
    assert is_pseudoeffective(g, Q(1, -1)) and is_nef(g, Q(1, -1)) and not is_big(g, Q(1, -1))
    assert not is_pseudoeffective(g, Q(-1, 0))
    assert not is_pseudoeffective(g, Q(0, -1))


def test_pseff_thresholds(p2, blp2):
    assert pseff_threshold(p2.geometry, Q(1), "conic") == Fraction(1, 2)
    assert pseff_threshold(blp2.geometry, Q(1, 0), "E") == 1
    assert pseff_threshold(blp2.geometry, Q(1, 1), "E") == 2
    with pytest.raises(NotPseudoeffective):
        pseff_threshold(blp2.geometry, Q(-1, 0), "E")
