"""Numerical lattice of a surface and exact cone-membership queries.

A :class:`SurfaceGeometry` is a Néron-Severi lattice with its intersection
form, a finite catalog of irreducible curves whose classes generate the
effective cone, a distinguished ample class and (optionally) named points
with local multiplicity data.  Cone queries are exact LPs over the catalog.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence, Union

from . import lp
from .errors import (
    AmpleClassError,
    DimensionError,
    GeometryError,
    LabelError,
    NotPseudoeffective,
    SignatureError,
    UnknownCurve,
)
from .linalg import inertia
from .numbers import as_vector, format_vector, to_fraction

DivisorClass = tuple  # rational (or Eps) coordinates in the lattice basis


@dataclass(frozen=True)
class CurveClass:
    label: str
    cls: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cls", tuple(int(c) for c in self.cls))
        if not any(self.cls):
            raise GeometryError(f"curve {self.label!r} has zero class")

    @property
    def vector(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in self.cls)


@dataclass(frozen=True)
class Membership:
    """Local data of one curve E at a point x: mult_x(E) and ord_x(E|C) per flag curve C."""

    mult: int = 1
    ord_on: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        ords = self.ord_on.items() if isinstance(self.ord_on, Mapping) else self.ord_on
        object.__setattr__(self, "ord_on", tuple(sorted((str(k), int(v)) for k, v in ords)))
        object.__setattr__(self, "mult", int(self.mult))


@dataclass(frozen=True)
class PointOnSurface:
    label: str
    memberships: tuple[tuple[str, Membership], ...] = ()

    def __post_init__(self):
        items = self.memberships.items() if isinstance(self.memberships, Mapping) else self.memberships
        norm = []
        for lab, m in items:
            if not isinstance(m, Membership):
                if isinstance(m, Mapping):
                    m = Membership(m.get("mult", 1), m.get("ord_on", {}))
                else:
                    mult, ords = m
                    m = Membership(mult, ords)
            norm.append((str(lab), m))
        object.__setattr__(self, "memberships", tuple(sorted(norm)))

    @property
    def curves(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.memberships)

    def passes_through(self, label: str) -> bool:
        return any(lab == label for lab, _ in self.memberships)

    def mult(self, label: str) -> int:
        for lab, m in self.memberships:
            if lab == label:
                return m.mult
        return 0

    def ord_on(self, curve: str, flag_curve: str) -> int:
        """ord_x(E|_C); defaults to mult_x(E), the transverse value."""
        for lab, m in self.memberships:
            if lab == curve:
                return dict(m.ord_on).get(flag_curve, m.mult)
        return 0


@dataclass(frozen=True)
class SurfaceGeometry:
    name: str
    rank: int
    intersection_matrix: tuple[tuple[int, ...], ...]
    curves: tuple[CurveClass, ...]
    effective_generators: tuple[str, ...]
    ample_class: tuple[Fraction, ...]
    points: tuple[PointOnSurface, ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "intersection_matrix",
                           tuple(tuple(int(x) for x in row) for row in self.intersection_matrix))
        object.__setattr__(self, "curves", tuple(self.curves))
        object.__setattr__(self, "effective_generators", tuple(self.effective_generators))
        object.__setattr__(self, "ample_class", tuple(to_fraction(x) for x in self.ample_class))
        object.__setattr__(self, "points", tuple(self.points))

    @cached_property
    def _curve_index(self) -> dict[str, CurveClass]:
        return {c.label: c for c in self.curves}

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(c.label for c in self.curves)

    def curve(self, label: str) -> CurveClass:
        try:
            return self._curve_index[label]
        except KeyError:
            raise UnknownCurve(label) from None

    def point(self, label: str) -> PointOnSurface:
        for p in self.points:
            if p.label == label:
                return p
        raise KeyError(f"unknown point {label!r}")

    @cached_property
    def generator_vectors(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(self.curve(g).vector for g in self.effective_generators)

    def with_curve_order(self, order: Sequence[str]) -> "SurfaceGeometry":
        """Same geometry with the catalog permuted (used by uniqueness checks)."""
        return SurfaceGeometry(self.name, self.rank, self.intersection_matrix,
                               tuple(self.curve(l) for l in order), self.effective_generators,
                               self.ample_class, self.points)


def _coerce(geom: SurfaceGeometry, D) -> tuple:
    if isinstance(D, CurveClass):
        D = D.vector
    v = as_vector(D)
    if len(v) != geom.rank:
        raise DimensionError(f"expected a vector of length {geom.rank}, got {len(v)}")
    return v


def validate_geometry(geom: SurfaceGeometry) -> SurfaceGeometry:
    """Check all SurfaceGeometry invariants; return ``geom`` unchanged if they hold."""
    rho = geom.rank
    Q = geom.intersection_matrix
    if rho < 1 or len(Q) != rho or any(len(row) != rho for row in Q):
        raise DimensionError("intersection matrix must be rank x rank")
    if any(Q[i][j] != Q[j][i] for i in range(rho) for j in range(rho)):
        raise SignatureError("intersection matrix is not symmetric")
    sig = inertia(Q)
    if sig != (1, rho - 1, 0):
        raise SignatureError(f"signature {sig[:2]} (zero eigenvalues: {sig[2]}) "
                             f"violates the Hodge index theorem; expected (1, {rho - 1})")
    labels = [c.label for c in geom.curves]
    if len(set(labels)) != len(labels):
        raise LabelError("duplicate curve labels in catalog")
    for c in geom.curves:
        if len(c.cls) != rho:
            raise DimensionError(f"curve {c.label!r} has class of wrong length")
    if not geom.effective_generators:
        raise GeometryError("effective_generators is empty")
    for g in geom.effective_generators:
        if g not in labels:
            raise LabelError(f"generator {g!r} is not a catalog curve")
    A = _coerce(geom, geom.ample_class)
    if intersect(geom, A, A) <= 0:
        raise AmpleClassError("ample class has non-positive self-intersection")
    for c in geom.curves:
        if intersect(geom, A, c.vector) <= 0:
            raise AmpleClassError(f"ample class is not positive on {c.label!r}")
    point_labels = [p.label for p in geom.points]
    if len(set(point_labels)) != len(point_labels):
        raise LabelError("duplicate point labels")
    for p in geom.points:
        for lab, m in p.memberships:
            if lab not in labels:
                raise LabelError(f"point {p.label!r} lies on unknown curve {lab!r}")
            if m.mult < 1:
                raise GeometryError(f"mult_{p.label}({lab}) must be positive")
            for flag_curve, o in m.ord_on:
                if not p.passes_through(flag_curve):
                    raise GeometryError(f"ord_on at {p.label!r} refers to {flag_curve!r}, "
                                        "which does not pass through the point")
                if flag_curve == lab:
                    continue
                if o < m.mult:
                    raise GeometryError(f"ord_{p.label}({lab}|{flag_curve}) < mult")
                bound = intersect(geom, geom.curve(lab).vector, geom.curve(flag_curve).vector)
                if o > bound:
                    raise GeometryError(f"ord_{p.label}({lab}|{flag_curve}) exceeds "
                                        f"{lab}.{flag_curve} = {bound}")
    return geom


def intersect(geom: SurfaceGeometry, D1, D2):
    """Bilinear form D1^T Q D2."""
    u = _coerce(geom, D1)
    v = _coerce(geom, D2)
    Q = geom.intersection_matrix
    total = Fraction(0)
    for i, ui in enumerate(u):
        if ui == 0:
            continue
        row = Q[i]
        s = Fraction(0)
        for j, vj in enumerate(v):
            if row[j] and vj != 0:
                s = s + row[j] * vj
        if s != 0:
            total = total + ui * s
    return total


def _cone_matrix(geom: SurfaceGeometry, extra: Iterable[Sequence] = ()) -> list[list[Fraction]]:
    cols = list(geom.generator_vectors) + [tuple(Fraction(x) for x in e) for e in extra]
    return [[col[i] for col in cols] for i in range(geom.rank)]


@lru_cache(maxsize=65536)
def _pseff(geom: SurfaceGeometry, D: tuple) -> bool:
    return lp.feasible_point(_cone_matrix(geom), list(D)) is not None


def is_pseudoeffective(geom: SurfaceGeometry, D) -> bool:
    """D is a nonnegative combination of the effective generators."""
    return _pseff(geom, _coerce(geom, D))


def require_pseudoeffective(geom: SurfaceGeometry, D) -> tuple:
    v = _coerce(geom, D)
    if not _pseff(geom, v):
        raise NotPseudoeffective(f"{format_vector(v)} is not pseudoeffective on {geom.name}")
    return v


def is_big(geom: SurfaceGeometry, D) -> bool:
    """Pseudoeffective with positive volume P.P."""
    from .zariski import zariski_decompose

    v = _coerce(geom, D)
    if not _pseff(geom, v):
        return False
    P = zariski_decompose(geom, v).positive
    return intersect(geom, P, P) > 0


def is_nef(geom: SurfaceGeometry, D) -> bool:
    v = _coerce(geom, D)
    return all(intersect(geom, v, c.vector) >= 0 for c in geom.curves)


def is_ample(geom: SurfaceGeometry, D) -> bool:
    """Nakai-type test: strictly positive on the catalog and D.D > 0."""
    v = _coerce(geom, D)
    return (all(intersect(geom, v, c.vector) > 0 for c in geom.curves)
            and intersect(geom, v, v) > 0)


def curve_vector(geom: SurfaceGeometry, C: Union[str, CurveClass, Sequence]) -> tuple:
    if isinstance(C, str):
        return geom.curve(C).vector
    if isinstance(C, CurveClass):
        return C.vector
    return _coerce(geom, C)


@lru_cache(maxsize=65536)
def _threshold(geom: SurfaceGeometry, D: tuple, C: tuple):
    A = _cone_matrix(geom, [C])
    ncols = len(A[0])
    c = [Fraction(0)] * (ncols - 1) + [Fraction(1)]
    res = lp.maximize(c, A, list(D))
    if not res.ok:
        raise NotPseudoeffective(f"{format_vector(D)} is not pseudoeffective")
    return res.value


def pseff_threshold(geom: SurfaceGeometry, D, C):
    """max{t >= 0 : D - tC pseudoeffective}; finite because A.C > 0."""
    v = require_pseudoeffective(geom, D)
    return _threshold(geom, v, curve_vector(geom, C))


def vec_add(u, v) -> tuple:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def combination(geom: SurfaceGeometry, coeffs: Mapping[str, object]) -> tuple:
    """Class of sum(coeff * curve) over catalog labels."""
    out = tuple(Fraction(0) for _ in range(geom.rank))
    for lab, a in coeffs.items():
        out = vec_add(out, vec_scale(a, geom.curve(lab).vector))
    return out
