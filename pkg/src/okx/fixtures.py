"""Built-in surfaces: P2(m), the blow-up of P2 at a point, Hirzebruch F_e, and a
fake projective plane model FPP(k)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParameterError
from .nslattice import CurveClass, PointOnSurface, SurfaceGeometry, validate_geometry
from .okounkov import Flag2D

DEFAULT_PARAMS = {"p2": {"m": 1}, "blp2": {}, "f_e": {"e": 2}, "fpp": {"k": 2}}
_ALIASES = {"p2": "p2", "blp2": "blp2", "f_e": "f_e", "fe": "f_e", "hirzebruch": "f_e", "fpp": "fpp"}


@dataclass(frozen=True)
class FixtureSpec:
    name: str
    params: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        key = _ALIASES.get(self.name.lower())
        if key is None:
            raise ParameterError(f"unknown fixture {self.name!r}; choose from {sorted(DEFAULT_PARAMS)}")
        params = dict(DEFAULT_PARAMS[key])
        given = dict(self.params.items() if isinstance(self.params, dict) else self.params)
        for k in given:
            if k not in params:
                raise ParameterError(f"fixture {key} has no parameter {k!r}")
        params.update({k: int(v) for k, v in given.items()})
        object.__setattr__(self, "name", key)
        object.__setattr__(self, "params", tuple(sorted(params.items())))


@dataclass(frozen=True)
class Fixture:
    spec: FixtureSpec
    geometry: SurfaceGeometry
    points: dict = field(hash=False)
    flags: dict = field(hash=False)


def p2_degree_label(m: int) -> str:
    return {1: "line", 2: "conic"}.get(m, f"deg{m}")


def _p2(m: int):
    if m < 1:
        raise ParameterError("P2 fixture needs m >= 1")
    degrees = sorted({1, 2, m})
    labels = {d: p2_degree_label(d) for d in degrees}
    curves = [CurveClass(labels[d], (d,)) for d in degrees]
    # x is general: every catalog curve passes through it, pairwise transversally
    x = PointOnSurface("xgen", {labels[d]: (1, {}) for d in degrees})
    geom = SurfaceGeometry(f"P2(m={m})", 1, ((1,),), curves, ("line",), (1,), (x,))
    flags = {f"{labels[d]}:xgen": Flag2D(labels[d], x) for d in degrees}
    flags["degree_m"] = flags[f"{labels[m]}:xgen"]
    return geom, flags


def _blp2():
    E = CurveClass("E", (0, 1))
    Lx = CurveClass("Lx", (1, -1))
    H = CurveClass("H_line", (1, 0))
    xE = PointOnSurface("xE", {"E": (1, {"Lx": 1}), "Lx": (1, {"E": 1})})
    xgen = PointOnSurface("xgen", {"H_line": (1, {})})
    geom = SurfaceGeometry("BLP2", 2, ((1, 0), (0, -1)), (E, Lx, H), ("E", "Lx"), (2, -1), (xE, xgen))
    flags = {"E:xE": Flag2D("E", xE), "Lx:xE": Flag2D("Lx", xE), "H_line:xgen": Flag2D("H_line", xgen)}
    return geom, flags


def _f_e(e: int):
    if e < 0:
        raise ParameterError("F_e fixture needs e >= 0")
    C0 = CurveClass("C0", (1, 0))
    f = CurveClass("f", (0, 1))
    x0 = PointOnSurface("x0", {"C0": (1, {"f": 1}), "f": (1, {"C0": 1})})
    geom = SurfaceGeometry(f"F_{e}", 2, ((-e, 1), (1, 0)), (C0, f), ("C0", "f"),
                           (1, e + 1), (x0,))
    flags = {"f:x0": Flag2D("f", x0), "C0:x0": Flag2D("C0", x0)}
    return geom, flags


def _fpp(k: int):
    if k < 2:
        raise ParameterError("FPP fixture needs k > 1: the model has no curve in |H|")
    C = CurveClass("C", (k,))
    x = PointOnSurface("x", {"C": (1, {})})
    geom = SurfaceGeometry(f"FPP(k={k})", 1, ((1,),), (C,), ("C",), (1,), (x,))
    return geom, {"C:x": Flag2D("C", x)}


def build_fixture(spec: FixtureSpec | str, **params) -> Fixture:
    """Construct a validated fixture geometry with its named points and flags."""
    if isinstance(spec, str):
        spec = FixtureSpec(spec, tuple(params.items()))
    elif params:
        raise ParameterError("pass parameters either in the FixtureSpec or as keywords")
    p = dict(spec.params)
    if spec.name == "p2":
        geom, flags = _p2(p["m"])
    elif spec.name == "blp2":
        geom, flags = _blp2()
    elif spec.name == "f_e":
        geom, flags = _f_e(p["e"])
    else:
        geom, flags = _fpp(p["k"])
    validate_geometry(geom)
    return Fixture(spec, geom, {pt.label: pt for pt in geom.points}, flags)


def hyperplane_class(fixture: Fixture) -> tuple[Fraction, ...]:
    """H for P2/FPP/BLP2; C0 + (e+1) f (the ample class) for F_e."""
    if fixture.spec.name == "blp2":
        return (Fraction(1), Fraction(0))
    return fixture.geometry.ample_class
