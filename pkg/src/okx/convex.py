"""Exact convex bodies in the nonnegative orthant, stored as vertex lists.

Bodies are canonicalized on construction: duplicate and non-extreme points
are removed and the remaining vertices sorted lexicographically, so two
bodies are equal as sets exactly when their ``vertices`` tuples are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

from . import lp
from .errors import DimensionError, OrthantViolation
from .linalg import det, nullspace, rank
from .numbers import to_fraction

Point = tuple[Fraction, ...]


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_2d(points: Iterable[Sequence[Fraction]]) -> list[Point]:
    """Extreme points of a planar set in counter-clockwise order (monotone chain)."""
    pts = sorted(set(tuple(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower: list[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _in_hull(points: Sequence[Point], p: Point) -> bool:
    if not points:
        return False
    n = len(p)
    A = [[v[i] for v in points] for i in range(n)] + [[Fraction(1)] * len(points)]
    b = list(p) + [Fraction(1)]
    return lp.feasible_point(A, b) is not None


def _extreme_points(points: Sequence[Point]) -> list[Point]:
    pts = sorted(set(points))
    if not pts:
        return []
    n = len(pts[0])
    if n == 1:
        return sorted({pts[0], pts[-1]})
    if n == 2:
        return sorted(hull_2d(pts))
    keep = []
    for i, p in enumerate(pts):
        others = pts[:i] + pts[i + 1:]
        if not _in_hull(others, p):
            keep.append(p)
    return keep


@dataclass(frozen=True)
class ConvexBody:
    dim: int
    vertices: tuple[Point, ...] = ()

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Sequence], *, check_orthant: bool = True) -> "ConvexBody":
        pts = []
        for p in points:
            q = tuple(to_fraction(x) for x in p)
            if len(q) != dim:
                raise DimensionError(f"point {q} is not in dimension {dim}")
            if check_orthant and any(x < 0 for x in q):
                raise OrthantViolation(f"point {q} leaves the nonnegative orthant")
            pts.append(q)
        return cls(dim, tuple(_extreme_points(pts)))

    @classmethod
    def empty(cls, dim: int) -> "ConvexBody":
        return cls(dim, ())

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def affine_dim(self) -> int:
        if not self.vertices:
            return -1
        v0 = self.vertices[0]
        return rank([[a - b for a, b in zip(v, v0)] for v in self.vertices[1:]]) if len(self.vertices) > 1 else 0

    def ccw(self) -> list[Point]:
        """Planar vertices in counter-clockwise order."""
        if self.dim != 2:
            raise DimensionError("ccw ordering only exists in the plane")
        return hull_2d(self.vertices)

    def axis_range(self, i: int) -> tuple[Fraction, Fraction] | None:
        if not self.vertices:
            return None
        xs = [v[i] for v in self.vertices]
        return min(xs), max(xs)

    def __repr__(self):
        if not self.vertices:
            return f"ConvexBody(dim={self.dim}, empty)"
        vs = ", ".join("(" + ",".join(str(x) for x in v) + ")" for v in self.vertices)
        return f"ConvexBody(dim={self.dim}, [{vs}])"


@dataclass(frozen=True)
class SubSimplex:
    """Simplex with vertices 0 and lengths[i] * e_i."""

    lengths: tuple[Fraction, ...]

    @property
    def minimum(self) -> Fraction:
        return min(self.lengths)

    def body(self) -> ConvexBody:
        n = len(self.lengths)
        pts = [tuple(Fraction(0) for _ in range(n))]
        for i, l in enumerate(self.lengths):
            pts.append(tuple(l if j == i else Fraction(0) for j in range(n)))
        return ConvexBody.from_points(n, pts)


def _check_dim(body: ConvexBody, p: Sequence) -> Point:
    q = tuple(to_fraction(x) for x in p)
    if len(q) != body.dim:
        raise DimensionError(f"point of length {len(q)} against body of dimension {body.dim}")
    return q


def contains_point(body: ConvexBody, p: Sequence) -> bool:
    q = _check_dim(body, p)
    return _contains(body, q)


@lru_cache(maxsize=65536)
def _contains(body: ConvexBody, q: Point) -> bool:
    if body.is_empty:
        return False
    if q in body.vertices:
        return True
    for i in range(body.dim):
        lo, hi = body.axis_range(i)
        if not (lo <= q[i] <= hi):
            return False
    return _in_hull(body.vertices, q)


def contains_origin(body: ConvexBody) -> bool:
    return contains_point(body, (0,) * body.dim)


def contains_body(outer: ConvexBody, inner: ConvexBody) -> bool:
    """inner is a subset of outer (vertex test)."""
    return all(_contains(outer, v) for v in inner.vertices)


@lru_cache(maxsize=65536)
def _axis_extent(body: ConvexBody, i: int) -> Fraction:
    """max{s : s * e_i in body}, assuming the origin is in the body."""
    n = body.dim
    m = len(body.vertices)
    # variables: lambda_1..lambda_m, s
    A = []
    for k in range(n):
        row = [v[k] for v in body.vertices] + [Fraction(-1) if k == i else Fraction(0)]
        A.append(row)
    A.append([Fraction(1)] * m + [Fraction(0)])
    b = [Fraction(0)] * n + [Fraction(1)]
    c = [Fraction(0)] * m + [Fraction(1)]
    res = lp.maximize(c, A, b)
    return res.value


def max_subsimplex(body: ConvexBody) -> SubSimplex:
    """Axis lengths of the maximal sub-simplex; all zero when the origin is excluded."""
    if not contains_origin(body):
        return SubSimplex(tuple(Fraction(0) for _ in range(body.dim)))
    return SubSimplex(tuple(_axis_extent(body, i) for i in range(body.dim)))


def has_orthant_neighborhood(body: ConvexBody) -> bool:
    """Some U_{>=0} = U intersected with the orthant lies in the body.

    By convexity this is origin membership plus positive axis extents: the
    simplex spanned by the axis segments then contains a small orthant corner.
    """
    return contains_origin(body) and all(l > 0 for l in max_subsimplex(body).lengths)


def minkowski_sum(b1: ConvexBody, b2: ConvexBody) -> ConvexBody:
    if b1.dim != b2.dim:
        raise DimensionError("Minkowski sum of bodies of different dimension")
    if b1.is_empty or b2.is_empty:
        return ConvexBody.empty(b1.dim)
    return ConvexBody.from_points(b1.dim, (tuple(a + b for a, b in zip(u, v))
                                           for u in b1.vertices for v in b2.vertices))


def slice_first_zero(body: ConvexBody, k: int) -> ConvexBody:
    """Intersection with {x_1 = ... = x_k = 0}, projected to the last n - k coordinates.

    The hyperplanes x_i = 0 support a body in the nonnegative orthant, so the
    slice is a face: the hull of the vertices lying on it.
    """
    if not 0 <= k <= body.dim:
        raise DimensionError(f"slice index {k} out of range for dimension {body.dim}")
    if k == 0:
        return body
    pts = [v[k:] for v in body.vertices if all(x == 0 for x in v[:k])]
    return ConvexBody.from_points(body.dim - k, pts)


def translate(body: ConvexBody, v: Sequence) -> ConvexBody:
    shift = _check_dim(body, v)
    return ConvexBody.from_points(body.dim, (tuple(a + b for a, b in zip(p, shift))
                                             for p in body.vertices))


def scale(body: ConvexBody, c) -> ConvexBody:
    c = to_fraction(c)
    return ConvexBody.from_points(body.dim, (tuple(c * a for a in p) for p in body.vertices))


def _affine_chart(points: Sequence[Point]) -> tuple[list[Point], int]:
    """Coordinates of points inside their affine hull (projection onto pivot axes)."""
    v0 = points[0]
    diffs = [[a - b for a, b in zip(p, v0)] for p in points[1:]]
    from .linalg import row_reduce

    _, pivots = row_reduce(diffs) if diffs else ([], [])
    d = len(pivots)
    return [tuple(p[i] for i in pivots) for p in points], d


def _facets(points: Sequence[Point], d: int) -> list[tuple[int, ...]]:
    """Facets (as index tuples) of a full-dimensional point set in R^d."""
    found: set[tuple[int, ...]] = set()
    idx = range(len(points))
    for subset in combinations(idx, d):
        base = points[subset[0]]
        rows = [[a - b for a, b in zip(points[j], base)] for j in subset[1:]]
        if rows and rank(rows) < d - 1:
            continue
        ns = nullspace(rows, d) if rows else [tuple(Fraction(int(i == 0)) for i in range(d))]
        if len(ns) != 1:
            continue
        w = ns[0]
        vals = [sum((wi * (pi - bi) for wi, pi, bi in zip(w, p, base)), Fraction(0)) for p in points]
        if all(x >= 0 for x in vals) or all(x <= 0 for x in vals):
            face = tuple(i for i, x in enumerate(vals) if x == 0)
            found.add(face)
    return sorted(found)


def _triangulate(points: Sequence[Point]) -> list[tuple[Point, ...]]:
    """Pulling triangulation of the hull of ``points`` (in its own affine hull)."""
    pts = sorted(set(points))
    chart, d = _affine_chart(pts)
    if d == 0:
        return [(pts[0],)]
    simplices = []
    for face in _facets(chart, d):
        if 0 in face:
            continue
        for s in _triangulate([pts[i] for i in face]):
            simplices.append((pts[0],) + s)
    return simplices


def volume(body: ConvexBody) -> Fraction:
    """Exact n-volume via a pulling triangulation; zero for lower-dimensional bodies."""
    n = body.dim
    if body.affine_dim < n:
        return Fraction(0)
    total = Fraction(0)
    for s in _triangulate(body.vertices):
        v0 = s[0]
        total += abs(det([[a - b for a, b in zip(v, v0)] for v in s[1:]]))
    return total / factorial(n)
