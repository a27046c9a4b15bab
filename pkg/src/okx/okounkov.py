"""Okounkov polygons and limiting bodies of divisors on surfaces.

For a big class D and a flag (C, x) the body is

    {(t, y) : nu <= t <= mu,  alpha(t) <= y <= beta(t)}

where nu = ord_C(||D||), mu = sup{t : D - tC pseudoeffective}, and on each
chamber of D - tC = P(t) + N(t)

    alpha(t) = sum_i a_i(t) ord_x(E_i|C),   beta(t) = alpha(t) + P(t).C.

Boundary (pseudoeffective, not big) classes are handled through D + eps*A:
concrete dyadic eps until the chamber supports stabilize, then one symbolic
pass with eps infinitesimal whose limit eps -> 0 is taken exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .convex import ConvexBody
from .errors import InadmissibleFlag, NotBig, StabilizationError
from .nslattice import (
    PointOnSurface,
    SurfaceGeometry,
    _coerce,
    _pseff,
    intersect,
    vec_add,
    vec_scale,
)
from .numbers import Eps, format_vector, limit, to_fraction
from .zariski import _decompose, _walk

DEFAULT_K_MAX = 32


@dataclass(frozen=True)
class Flag2D:
    curve: str
    point: PointOnSurface

    @property
    def label(self) -> str:
        return f"{self.curve}:{self.point.label}"


@dataclass(frozen=True)
class EffectiveCombination:
    coeffs: tuple[tuple[str, Fraction], ...]

    def __post_init__(self):
        items = self.coeffs.items() if isinstance(self.coeffs, Mapping) else self.coeffs
        norm = tuple(sorted((str(k), to_fraction(v)) for k, v in items))
        if any(v < 0 for _, v in norm):
            raise ValueError("effective combinations need nonnegative coefficients")
        object.__setattr__(self, "coeffs", norm)

    def coefficient(self, label: str) -> Fraction:
        return dict(self.coeffs).get(label, Fraction(0))

    def divisor_class(self, geom: SurfaceGeometry) -> tuple:
        out = tuple(Fraction(0) for _ in range(geom.rank))
        for lab, a in self.coeffs:
            out = vec_add(out, vec_scale(a, geom.curve(lab).vector))
        return out


def check_flag(geom: SurfaceGeometry, flag: Flag2D) -> None:
    geom.curve(flag.curve)
    if flag.point.mult(flag.curve) != 1:
        raise InadmissibleFlag(f"{flag.curve} must pass through {flag.point.label} "
                               "with multiplicity one")


def general_point(label: str) -> PointOnSurface:
    """A point on ``label`` and on no other catalog curve."""
    return PointOnSurface(f"gen_{label}", {label: (1, {})})


def nu_vector(geom: SurfaceGeometry, divisor: EffectiveCombination | Mapping, flag: Flag2D):
    """Valuation vector (nu_1, nu_2) of an explicit catalog-supported effective divisor."""
    if not isinstance(divisor, EffectiveCombination):
        divisor = EffectiveCombination(divisor)
    check_flag(geom, flag)
    for lab, _ in divisor.coeffs:
        geom.curve(lab)
    nu1 = divisor.coefficient(flag.curve)
    nu2 = Fraction(0)
    for lab, a in divisor.coeffs:
        if lab != flag.curve and a:
            nu2 += a * flag.point.ord_on(lab, flag.curve)
    return nu1, nu2


@dataclass(frozen=True)
class PolygonSegment:
    t_lo: object
    t_hi: object
    support: tuple[str, ...]
    alpha: tuple[object, object]  # (constant, slope)
    beta: tuple[object, object]

    def alpha_at(self, t):
        return self.alpha[0] + self.alpha[1] * t

    def beta_at(self, t):
        return self.beta[0] + self.beta[1] * t


@dataclass(frozen=True)
class OkounkovPolygon:
    segments: tuple[PolygonSegment, ...]
    body: ConvexBody

    @property
    def vertices(self):
        return self.body.vertices

    @property
    def combinatorics(self) -> tuple[tuple[str, ...], ...]:
        return tuple(s.support for s in self.segments)


def _segments(geom: SurfaceGeometry, D: tuple, flag: Flag2D) -> tuple[PolygonSegment, ...]:
    C = geom.curve(flag.curve).vector
    nu = _decompose(geom, D).coefficient(flag.curve)
    x = flag.point
    out = []
    walk = _walk(geom, D, C)
    for ch in walk:
        lo = ch.t_lo if ch.t_lo > nu else nu
        hi = ch.t_hi
        if lo > hi or (lo == hi and len(walk) > 1):
            continue
        a0 = a1 = Fraction(0)
        for lab, p, q in ch.coeff_fns:
            if lab == flag.curve:
                continue
            o = x.ord_on(lab, flag.curve)
            if o:
                a0 = a0 + o * p
                a1 = a1 + o * q
        P0, P1 = ch.positive_fn
        b0 = a0 + intersect(geom, P0, C)
        b1 = a1 + intersect(geom, P1, C)
        out.append(PolygonSegment(lo, hi, ch.support, (a0, a1), (b0, b1)))
    if not out:
        # nu == mu: the body lies on the single vertical line t = nu
        ch = next(c for c in reversed(walk) if c.t_lo <= nu <= c.t_hi)
        a0 = sum((x.ord_on(lab, flag.curve) * (p + q * nu) for lab, p, q in ch.coeff_fns
                  if lab != flag.curve), Fraction(0))
        b0 = a0 + intersect(geom, ch.positive(nu), C)
        out.append(PolygonSegment(nu, nu, ch.support, (a0, Fraction(0)), (b0, Fraction(0))))
    return tuple(out)


def _segment_points(segments):
    for s in segments:
        for t in (s.t_lo, s.t_hi):
            yield (t, s.alpha_at(t))
            yield (t, s.beta_at(t))


def _limit_segment(s: PolygonSegment) -> PolygonSegment:
    return PolygonSegment(limit(s.t_lo), limit(s.t_hi), s.support,
                          (limit(s.alpha[0]), limit(s.alpha[1])),
                          (limit(s.beta[0]), limit(s.beta[1])))


@lru_cache(maxsize=65536)
def _polygon(geom: SurfaceGeometry, D: tuple, flag: Flag2D) -> OkounkovPolygon:
    segs = _segments(geom, D, flag)
    if any(isinstance(v, Eps) for s in segs for v in (s.t_lo, s.t_hi, *s.alpha, *s.beta)):
        segs_lim = tuple(_limit_segment(s) for s in segs)
    else:
        segs_lim = segs
    pts = [tuple(limit(c) for c in p) for p in _segment_points(segs)]
    return OkounkovPolygon(segs_lim, ConvexBody.from_points(2, pts))


def _big(geom: SurfaceGeometry, D: tuple) -> bool:
    if not _pseff(geom, D):
        return False
    P = _decompose(geom, D).positive
    return intersect(geom, P, P) > 0


def okounkov_polygon(geom: SurfaceGeometry, D, flag: Flag2D) -> OkounkovPolygon:
    """Okounkov polygon of a big class with respect to an admissible flag."""
    check_flag(geom, flag)
    v = _coerce(geom, D)
    if not _big(geom, v):
        raise NotBig(f"{format_vector(v)} is not big on {geom.name}")
    return _polygon(geom, v, flag)


def _perturb(geom: SurfaceGeometry, D: tuple, eps) -> tuple:
    return tuple(d + eps * a for d, a in zip(D, geom.ample_class))


@lru_cache(maxsize=65536)
def _limiting(geom: SurfaceGeometry, D: tuple, flag: Flag2D, k_max: int) -> ConvexBody:
    if not _pseff(geom, D):
        return ConvexBody.empty(2)
    if _big(geom, D):
        return _polygon(geom, D, flag).body
    previous = None
    for k in range(4, k_max + 1):
        comb = _polygon(geom, _perturb(geom, D, Fraction(1, 2 ** k)), flag).combinatorics
        if comb == previous:
            symbolic = _polygon(geom, _perturb(geom, D, Eps.infinitesimal()), flag)
            if symbolic.combinatorics == comb:
                return symbolic.body
        previous = comb
    raise StabilizationError(f"chamber supports of {D} + eps*A did not stabilize by k = {k_max}")


def limiting_body(geom: SurfaceGeometry, D, flag: Flag2D, k_max: int = DEFAULT_K_MAX) -> ConvexBody:
    """Limiting Okounkov body: the polygon for big D, the eps -> 0 limit on the
    pseudoeffective boundary, and the empty body otherwise."""
    check_flag(geom, flag)
    return _limiting(geom, _coerce(geom, D), flag, k_max)


def area(body: ConvexBody) -> Fraction:
    """Shoelace area of a planar body (zero for points, segments and the empty body)."""
    pts = body.ccw()
    if len(pts) < 3:
        return Fraction(0)
    s = Fraction(0)
    for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]):
        s += x0 * y1 - x1 * y0
    return abs(s) / 2
