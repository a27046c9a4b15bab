from fractions import Fraction

import pytest

from okx.errors import IsolatedPoint, NotNef
from okx.fixtures import build_fixture
from okx.nslattice import PointOnSurface
from okx.seshadri import SeshadriBounds, lambda_lengths, moving_seshadri_bounds, seshadri_curve_oracle

from conftest import Q


def test_p2_line_at_general_point(p2):
    b = moving_seshadri_bounds(p2.geometry, Q(1), p2.points["xgen"])
    assert (b.lower, b.upper, b.oracle) == (1, 1, 1)


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_fake_plane_bounds(k):
    fx = build_fixture("fpp", k=k)
    b = moving_seshadri_bounds(fx.geometry, Q(1), fx.points["x"])
    assert (b.lower, b.upper) == (Fraction(1, k), k)
    assert lambda_lengths(fx.geometry, Q(1), fx.flags["C:x"]) == (Fraction(1, k), k)


def test_point_in_augmented_base_locus(blp2):
    b = moving_seshadri_bounds(blp2.geometry, Q(1, 0), blp2.points["xE"])
    assert b.lower == 0 and b.oracle == 0


def test_general_point_blp2(blp2):
    b = moving_seshadri_bounds(blp2.geometry, Q(2, -1), blp2.points["xgen"])
    assert b.lower <= b.oracle <= b.upper
    assert b.oracle == 2


def test_oracle_errors(blp2):
    with pytest.raises(NotNef):
        seshadri_curve_oracle(blp2.geometry, Q(1, 1), blp2.points["xE"])
    with pytest.raises(IsolatedPoint):
        seshadri_curve_oracle(blp2.geometry, Q(1, 0), PointOnSurface("lonely"))


def test_bounds_must_be_ordered():
    with pytest.raises(ValueError):
        SeshadriBounds(Fraction(2), Fraction(1))
