"""Maximal sub-simplex lengths and the resulting bounds on moving Seshadri constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .convex import max_subsimplex
from .errors import IsolatedPoint, NotNef
from .numbers import format_vector
from .nslattice import PointOnSurface, _coerce, SurfaceGeometry, intersect, is_nef, require_pseudoeffective
from .okounkov import Flag2D, limiting_body


@dataclass(frozen=True)
class SeshadriBounds:
    lower: Fraction
    upper: Fraction
    oracle: Fraction | None = None
    flags: tuple = ()

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError(f"lower bound {self.lower} exceeds upper bound {self.upper}")


def lambda_lengths(geom: SurfaceGeometry, D, flag: Flag2D) -> tuple[Fraction, Fraction]:
    return max_subsimplex(limiting_body(geom, D, flag)).lengths


def seshadri_curve_oracle(geom: SurfaceGeometry, D, x: PointOnSurface) -> Fraction:
    """min over catalog curves C through x of D.C / mult_x(C).

    Only catalog curves are visited, so this is the true Seshadri constant
    only when the catalog contains a curve computing it.
    """
    if not is_nef(geom, D):
        raise NotNef(f"{format_vector(_coerce(geom, D))} is not nef")
    ratios = [intersect(geom, D, geom.curve(lab).vector) / m.mult for lab, m in x.memberships]
    if not ratios:
        raise IsolatedPoint(f"{x.label} lies on no catalog curve")
    return min(ratios)


def flags_at(geom: SurfaceGeometry, x: PointOnSurface) -> list[Flag2D]:
    return [Flag2D(lab, x) for lab in geom.labels if x.mult(lab) == 1]


def moving_seshadri_bounds(geom: SurfaceGeometry, D, x: PointOnSurface) -> SeshadriBounds:
    """sup over flags of lambda_min and inf over flags of lambda_2, flags centered at x."""
    require_pseudoeffective(geom, D)
    flags = flags_at(geom, x)
    if not flags:
        raise IsolatedPoint(f"no catalog curve is smooth at {x.label}")
    lengths = [lambda_lengths(geom, D, f) for f in flags]
    lower = max(min(l) for l in lengths)
    upper = min(l[-1] for l in lengths)
    oracle = seshadri_curve_oracle(geom, D, x) if is_nef(geom, D) else None
    return SeshadriBounds(lower, upper, oracle, tuple(zip((f.label for f in flags), lengths)))
