"""Asymptotic base loci two ways: from Zariski data, and from Okounkov bodies.

The intersection-theoretic side is the oracle: B_-(D) is the support of the
negative part, B_+(D) is the null locus {E : P.E = 0} of the positive part
(or everything when D is not big).  The body side only looks at limiting
bodies: origin membership, orthant neighborhoods and the x_1 = 0 slice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .convex import contains_origin, has_orthant_neighborhood, slice_first_zero, translate
from .errors import NotPseudoeffective
from .nslattice import SurfaceGeometry, _coerce, is_big, is_pseudoeffective, intersect, vec_scale, vec_sub
from .numbers import format_vector
from .okounkov import Flag2D, general_point, limiting_body, check_flag
from .zariski import ZariskiDecomposition, zariski_decompose


class LocusKind(str, Enum):
    EMPTY = "EMPTY"
    CURVES = "CURVES"
    ALL = "ALL"


@dataclass(frozen=True)
class BaseLocus:
    kind: LocusKind
    curves: frozenset = frozenset()

    @classmethod
    def of_curves(cls, curves) -> "BaseLocus":
        curves = frozenset(curves)
        return cls(LocusKind.CURVES, curves) if curves else cls(LocusKind.EMPTY)

    @property
    def is_empty(self) -> bool:
        return self.kind is LocusKind.EMPTY

    def contains_point(self, point) -> bool:
        if self.kind is LocusKind.ALL:
            return True
        return any(point.passes_through(c) for c in self.curves)

    def __str__(self):
        if self.kind is LocusKind.ALL:
            return "X"
        if self.kind is LocusKind.EMPTY:
            return "{}"
        return "{" + ", ".join(sorted(self.curves)) + "}"


ALL = BaseLocus(LocusKind.ALL)


def restricted_base_locus(geom: SurfaceGeometry, D) -> BaseLocus:
    if not is_pseudoeffective(geom, D):
        return ALL
    return BaseLocus.of_curves(zariski_decompose(geom, D).support)


def augmented_base_locus(geom: SurfaceGeometry, D) -> BaseLocus:
    if not is_big(geom, D):
        return ALL
    P = zariski_decompose(geom, D).positive
    return BaseLocus.of_curves(c.label for c in geom.curves if intersect(geom, P, c.vector) == 0)


def enumerate_flags(geom: SurfaceGeometry) -> list[Flag2D]:
    """Every catalog curve with each named point on it (smoothly) plus one general point."""
    flags = []
    for c in geom.curves:
        for p in geom.points:
            if p.mult(c.label) == 1:
                flags.append(Flag2D(c.label, p))
        flags.append(Flag2D(c.label, general_point(c.label)))
    return flags


def criterion_Bminus(geom: SurfaceGeometry, D, flag: Flag2D) -> bool:
    """True when the flag's center lies in B_-(D) according to the body."""
    return not contains_origin(limiting_body(geom, D, flag))


def criterion_Bplus(geom: SurfaceGeometry, D, flag: Flag2D) -> bool:
    """True when the flag's center lies in B_+(D) according to the body."""
    return not has_orthant_neighborhood(limiting_body(geom, D, flag))


def nef_via_bodies(geom: SurfaceGeometry, D) -> bool:
    return all(contains_origin(limiting_body(geom, D, f)) for f in enumerate_flags(geom))


def ample_via_bodies(geom: SurfaceGeometry, D) -> bool:
    return all(has_orthant_neighborhood(limiting_body(geom, D, f)) for f in enumerate_flags(geom))


def movable_via_bodies(geom: SurfaceGeometry, D) -> bool:
    return all(not slice_first_zero(limiting_body(geom, D, f), 1).is_empty
               for f in enumerate_flags(geom))


@dataclass(frozen=True)
class ZDStep:
    """One pass of the body-based procedure: remove a_1 E_1 from the current class."""

    curve: str
    coefficient: Fraction
    before: tuple
    after: tuple
    body_before: object
    body_after: object

    @property
    def translation_holds(self) -> bool:
        return self.body_after == translate(self.body_before, (-self.coefficient, 0))


def divisor_components_via_bodies(geom: SurfaceGeometry, D) -> list[str]:
    """div(Delta^lim(D)): curves whose flag body misses the x_1 = 0 line."""
    return [c.label for c in geom.curves
            if slice_first_zero(limiting_body(geom, D, Flag2D(c.label, general_point(c.label))), 1).is_empty]


def zd_steps_via_bodies(geom: SurfaceGeometry, D) -> list[ZDStep]:
    v = _coerce(geom, D)
    if not is_pseudoeffective(geom, v):
        raise NotPseudoeffective(f"{format_vector(v)} is not pseudoeffective")
    steps = []
    current = v
    while True:
        qualifying = divisor_components_via_bodies(geom, current)
        if not qualifying:
            return steps
        E1 = qualifying[0]
        flag = Flag2D(E1, general_point(E1))
        body = limiting_body(geom, current, flag)
        a1 = min(p[0] for p in body.vertices)
        nxt = vec_sub(current, vec_scale(a1, geom.curve(E1).vector))
        steps.append(ZDStep(E1, a1, current, nxt, body, limiting_body(geom, nxt, flag)))
        current = nxt


def divisorial_zd_via_bodies(geom: SurfaceGeometry, D) -> ZariskiDecomposition:
    """Recover D = P + N by repeatedly peeling off the curve whose body avoids x_1 = 0."""
    v = _coerce(geom, D)
    steps = zd_steps_via_bodies(geom, v)
    coeffs: dict[str, Fraction] = {}
    for s in steps:
        coeffs[s.curve] = coeffs.get(s.curve, Fraction(0)) + s.coefficient
    P = steps[-1].after if steps else v
    negative = tuple((lab, coeffs[lab]) for lab in geom.labels if coeffs.get(lab, 0) != 0)
    return ZariskiDecomposition(P, negative)


def flag_criteria(geom: SurfaceGeometry, D):
    """Per-flag rows (flag, Bminus-criterion, Bplus-criterion, oracle Bminus, oracle Bplus)."""
    bm = restricted_base_locus(geom, D)
    bp = augmented_base_locus(geom, D)
    rows = []
    for f in enumerate_flags(geom):
        check_flag(geom, f)
        rows.append((f, criterion_Bminus(geom, D, f), criterion_Bplus(geom, D, f),
                     bm.contains_point(f.point), bp.contains_point(f.point)))
    return rows
