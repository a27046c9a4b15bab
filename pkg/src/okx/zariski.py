"""Zariski decompositions, asymptotic valuations and the chamber walk along D - tC."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NotPseudoeffective, SupportError, UnknownCurve
from .linalg import inverse, is_negative_definite, mat_vec
from .nslattice import (
    SurfaceGeometry,
    _coerce,
    curve_vector,
    intersect,
    pseff_threshold,
    require_pseudoeffective,
    vec_add,
    vec_scale,
    vec_sub,
)


@dataclass(frozen=True)
class ZariskiDecomposition:
    positive: tuple
    negative: tuple[tuple[str, object], ...]

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(lab for lab, _ in self.negative)

    def coefficient(self, label: str):
        return dict(self.negative).get(label, Fraction(0))

    def negative_class(self, geom: SurfaceGeometry) -> tuple:
        out = tuple(Fraction(0) for _ in range(geom.rank))
        for lab, a in self.negative:
            out = vec_add(out, vec_scale(a, geom.curve(lab).vector))
        return out


def _gram(geom: SurfaceGeometry, labels):
    vecs = [geom.curve(l).vector for l in labels]
    return [[intersect(geom, u, v) for v in vecs] for u in vecs]


def _solve_support(geom, D, support):
    """Coefficients a with sum_j a_j (E_i.E_j) = D.E_i on the given support."""
    if not support:
        return ()
    G = _gram(geom, support)
    if not is_negative_definite(G):
        raise SupportError(f"Gram matrix of {support} is not negative definite")
    rhs = [intersect(geom, D, geom.curve(l).vector) for l in support]
    return mat_vec(inverse(G), rhs)


@lru_cache(maxsize=65536)
def _decompose(geom: SurfaceGeometry, D: tuple) -> ZariskiDecomposition:
    support: list[str] = []
    while True:
        coeffs = _solve_support(geom, D, support)
        N = tuple(Fraction(0) for _ in D)
        for lab, a in zip(support, coeffs):
            N = vec_add(N, vec_scale(a, geom.curve(lab).vector))
        P = vec_sub(D, N)
        new = [c.label for c in geom.curves
               if c.label not in support and intersect(geom, P, c.vector) < 0]
        if not new:
            break
        support.extend(new)
    if any(a < 0 for a in coeffs):
        raise SupportError("negative Zariski coefficient; the curve catalog is inconsistent")
    negative = tuple((lab, a) for lab, a in zip(support, coeffs) if a != 0)
    if len(negative) != len(support):
        # a curve entered with coefficient zero: re-solve on the genuine support
        keep = [lab for lab, _ in negative]
        coeffs = _solve_support(geom, D, keep)
        negative = tuple(zip(keep, coeffs))
        N = tuple(Fraction(0) for _ in D)
        for lab, a in negative:
            N = vec_add(N, vec_scale(a, geom.curve(lab).vector))
        P = vec_sub(D, N)
        if any(intersect(geom, P, c.vector) < 0 for c in geom.curves):
            raise SupportError("positive part is not nef after support reduction")
    order = {lab: i for i, lab in enumerate(geom.labels)}
    negative = tuple(sorted(negative, key=lambda item: order[item[0]]))
    return ZariskiDecomposition(P, negative)


def zariski_decompose(geom: SurfaceGeometry, D) -> ZariskiDecomposition:
    """Zariski decomposition D = P + N of a pseudoeffective class.

    The support grows in catalog order by every curve on which the current
    positive part is negative; the coefficients solve the Gram system of the
    support.  Coefficients are the asymptotic valuations ord_E(||D||).
    """
    v = require_pseudoeffective(geom, D)
    return _decompose(geom, v)


def asymptotic_valuation(geom: SurfaceGeometry, D, label: str):
    """ord_E(||D||) for a catalog curve E."""
    geom.curve(label)
    return zariski_decompose(geom, D).coefficient(label)


def is_movable(geom: SurfaceGeometry, D) -> bool:
    return not zariski_decompose(geom, D).negative


@dataclass(frozen=True)
class ChamberSegment:
    """Zariski data of D - tC on [t_lo, t_hi]: a_i(t) = p_i + q_i t, P(t) = P0 + t P1."""

    t_lo: object
    t_hi: object
    support: tuple[str, ...]
    coeff_fns: tuple[tuple[str, object, object], ...]
    positive_fn: tuple[tuple, tuple]

    def coefficient(self, label: str, t):
        for lab, p, q in self.coeff_fns:
            if lab == label:
                return p + q * t
        return Fraction(0)

    def positive(self, t) -> tuple:
        P0, P1 = self.positive_fn
        return tuple(a + t * b for a, b in zip(P0, P1))

    def decomposition(self, t) -> ZariskiDecomposition:
        neg = tuple((lab, p + q * t) for lab, p, q in self.coeff_fns if p + q * t != 0)
        return ZariskiDecomposition(self.positive(t), neg)


def _probe(geom, D, C, t, mu) -> ChamberSegment:
    Dt = vec_sub(D, vec_scale(t, C))
    support = _decompose(geom, Dt).support
    if support:
        G = _gram(geom, support)
        Ginv = inverse(G)
        d = [intersect(geom, D, geom.curve(l).vector) for l in support]
        c = [intersect(geom, C, geom.curve(l).vector) for l in support]
        p = mat_vec(Ginv, d)
        q = tuple(-x for x in mat_vec(Ginv, c))
    else:
        p = q = ()
    P0, P1 = D, tuple(-x for x in C)
    for lab, pi, qi in zip(support, p, q):
        E = geom.curve(lab).vector
        P0 = vec_sub(P0, vec_scale(pi, E))
        P1 = vec_sub(P1, vec_scale(qi, E))
    constraints = list(zip(p, q))
    for curve in geom.curves:
        if curve.label not in support:
            constraints.append((intersect(geom, P0, curve.vector), intersect(geom, P1, curve.vector)))
    lo, hi = Fraction(0), mu
    for c0, c1 in constraints:
        if c1 > 0:
            bound = -c0 / c1
            if bound > lo:
                lo = bound
        elif c1 < 0:
            bound = -c0 / c1
            if bound < hi:
                hi = bound
        elif c0 < 0:
            raise SupportError("chamber constraint violated at its own probe point")
    if not (lo <= t <= hi):
        raise SupportError("probe point falls outside its own chamber")
    return ChamberSegment(lo, hi, support, tuple(zip(support, p, q)), (P0, P1))


@lru_cache(maxsize=16384)
def _walk(geom: SurfaceGeometry, D: tuple, C: tuple) -> tuple[ChamberSegment, ...]:
    mu = pseff_threshold(geom, D, C)
    if mu == 0:
        return (_probe(geom, D, C, Fraction(0), mu),)

    def cover(a, b):
        m = (a + b) / 2
        seg = _probe(geom, D, C, m, mu)
        lo = seg.t_lo if seg.t_lo > a else a
        hi = seg.t_hi if seg.t_hi < b else b
        out = cover(a, lo) if lo > a else []
        if hi > lo:
            out.append(ChamberSegment(lo, hi, seg.support, seg.coeff_fns, seg.positive_fn))
        if hi < b:
            out.extend(cover(hi, b))
        return out

    merged: list[ChamberSegment] = []
    for seg in cover(Fraction(0), mu):
        if merged and merged[-1].support == seg.support:
            prev = merged.pop()
            seg = ChamberSegment(prev.t_lo, seg.t_hi, seg.support, seg.coeff_fns, seg.positive_fn)
        merged.append(seg)
    return tuple(merged)


def chamber_walk(geom: SurfaceGeometry, D, C) -> tuple[ChamberSegment, ...]:
    """Contiguous chambers of D - tC covering [0, mu], mu = pseff_threshold(D, C).

    Each probe decomposes D - t*C at one point, solves the support's Gram
    system with t symbolic and intersects the affine sign conditions to get
    the maximal interval on which that support persists.  Gaps to the left
    and right are covered recursively by midpoint probes.
    """
    v = require_pseudoeffective(geom, D)
    return _walk(geom, v, curve_vector(geom, C))
