"""Geometry JSON files, CSV vertex dumps and SVG plots.

Rationals are written as ``"p/q"`` strings and floats are rejected on input.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any
from xml.sax.saxutils import escape

from .convex import ConvexBody, SubSimplex
from .errors import GeometryError
from .nslattice import CurveClass, Membership, PointOnSurface, SurfaceGeometry, validate_geometry
from .numbers import format_rational, to_fraction


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise GeometryError(f"{where}: expected an integer, got {value!r}")
    try:
        return int(value)
    except ValueError:
        raise GeometryError(f"{where}: expected an integer, got {value!r}") from None


def _rational(value, where: str) -> Fraction:
    if isinstance(value, float):
        raise GeometryError(f"{where}: floats are not accepted ({value!r}); use \"p/q\"")
    try:
        return to_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GeometryError(f"{where}: {exc}") from None


def geometry_from_dict(doc: dict[str, Any], validate: bool = True) -> SurfaceGeometry:
    try:
        rank = _int(doc["rank"], "rank")
        Q = tuple(tuple(_int(x, "intersection_matrix") for x in row) for row in doc["intersection_matrix"])
        curves = []
        point_data: dict[str, dict[str, Membership]] = {}
        for entry in doc["curves"]:
            label = str(entry["label"])
            curves.append(CurveClass(label, tuple(_int(x, f"class of {label}") for x in entry["class"])))
            for pt in entry.get("points", []) or []:
                ords = {str(k): _int(v, f"ord_on at {pt['point_label']}")
                        for k, v in (pt.get("ord_on") or {}).items()}
                point_data.setdefault(str(pt["point_label"]), {})[label] = Membership(
                    _int(pt.get("mult", 1), "mult"), ords)
        points = tuple(PointOnSurface(lab, mem) for lab, mem in point_data.items())
        geom = SurfaceGeometry(
            name=str(doc.get("name", "unnamed")),
            rank=rank,
            intersection_matrix=Q,
            curves=tuple(curves),
            effective_generators=tuple(str(g) for g in doc["effective_generators"]),
            ample_class=tuple(_rational(x, "ample_class") for x in doc["ample_class"]),
            points=points,
        )
    except KeyError as exc:
        raise GeometryError(f"missing key {exc.args[0]!r} in geometry document") from None
    except TypeError as exc:
        raise GeometryError(f"malformed geometry document: {exc}") from None
    return validate_geometry(geom) if validate else geom


def geometry_to_dict(geom: SurfaceGeometry) -> dict[str, Any]:
    curves = []
    for c in geom.curves:
        pts = []
        for p in geom.points:
            for lab, m in p.memberships:
                if lab == c.label:
                    pts.append({"point_label": p.label, "mult": m.mult, "ord_on": dict(m.ord_on)})
        entry: dict[str, Any] = {"label": c.label, "class": list(c.cls)}
        if pts:
            entry["points"] = pts
        curves.append(entry)
    return {
        "name": geom.name,
        "rank": geom.rank,
        "intersection_matrix": [list(row) for row in geom.intersection_matrix],
        "curves": curves,
        "effective_generators": list(geom.effective_generators),
        "ample_class": [format_rational(x) for x in geom.ample_class],
    }


def load_geometry(path: str | Path) -> SurfaceGeometry:
    with open(path, encoding="utf-8") as handle:
        try:
            doc = json.load(handle)
        except json.JSONDecodeError as exc:
            raise GeometryError(f"{path}: invalid JSON ({exc})") from None
    return geometry_from_dict(doc)


def dump_geometry(geom: SurfaceGeometry, path: str | Path) -> None:
    Path(path).write_text(json.dumps(geometry_to_dict(geom), indent=2) + "\n", encoding="utf-8")


def vertices_json(body: ConvexBody) -> list[list[str]]:
    return [[format_rational(x) for x in v] for v in body.vertices]


def body_csv(body: ConvexBody) -> str:
    header = ",".join(f"x{i + 1}" for i in range(body.dim))
    rows = [",".join(format_rational(x) for x in v) for v in body.vertices]
    return "\n".join([header, *rows]) + "\n"


def parse_body_csv(text: str) -> ConvexBody:
    lines = [l for l in text.strip().splitlines() if l.strip()]
    dim = len(lines[0].split(","))
    return ConvexBody.from_points(dim, [[to_fraction(c) for c in l.split(",")] for l in lines[1:]])


def _fmt_point(v) -> str:
    return "(" + ",".join(format_rational(x) for x in v) + ")"


def body_svg(body: ConvexBody, simplex: SubSimplex | None = None, title: str = "", size: int = 360) -> str:
    """SVG 1.1 drawing of a planar body with axes and the maximal sub-simplex.

    Float coordinates are only used for drawing; the exact vertex list is
    embedded verbatim in a comment.
    """
    pad = 40
    pts = body.ccw() if body.vertices else []
    xs = [v[0] for v in pts] + ([simplex.lengths[0]] if simplex else []) + [Fraction(1)]
    ys = [v[1] for v in pts] + ([simplex.lengths[1]] if simplex else []) + [Fraction(1)]
    span = max(max(xs), max(ys))
    unit = (size - 2 * pad) / float(span)

    def sx(x):
        return f"{pad + float(x) * unit:.3f}"

    def sy(y):
        return f"{size - pad - float(y) * unit:.3f}"

    exact = " ".join(_fmt_point(v) for v in body.vertices) if body.vertices else "empty"
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<!-- vertices: {exact} -->",
    ]
    if simplex is not None:
        out.append(f"<!-- max-subsimplex: {_fmt_point(simplex.lengths)} -->")
    if title:
        out.append(f"<title>{escape(title)}</title>")
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{size - pad / 2}" y2="{sy(0)}" stroke="black"/>')
    out.append(f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(0)}" y2="{pad / 2}" stroke="black"/>')
    out.append(f'<text x="{size - pad / 2}" y="{float(sy(0)) + 15:.3f}" font-size="12">x1</text>')
    out.append(f'<text x="{float(sx(0)) - 20:.3f}" y="{pad / 2}" font-size="12">x2</text>')
    if len(pts) >= 3:
        poly = " ".join(f"{sx(x)},{sy(y)}" for x, y in pts)
        out.append(f'<polygon points="{poly}" fill="#8fb8de" fill-opacity="0.6" stroke="#1f4e79"/>')
    elif len(pts) == 2:
        (x0, y0), (x1, y1) = pts
        out.append(f'<line x1="{sx(x0)}" y1="{sy(y0)}" x2="{sx(x1)}" y2="{sy(y1)}" '
                   'stroke="#1f4e79" stroke-width="3"/>')
    elif len(pts) == 1:
        (x0, y0), = pts
        out.append(f'<circle cx="{sx(x0)}" cy="{sy(y0)}" r="4" fill="#1f4e79"/>')
    if simplex is not None and any(simplex.lengths):
        l1, l2 = simplex.lengths
        tri = f"{sx(0)},{sy(0)} {sx(l1)},{sy(0)} {sx(0)},{sy(l2)}"
        out.append(f'<polygon points="{tri}" fill="none" stroke="#c0392b" stroke-dasharray="4 3"/>')
    for x, y in pts:
        out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="2.5" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
