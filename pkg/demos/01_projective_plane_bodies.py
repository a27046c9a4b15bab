#!/usr/bin/env python3
"""Okounkov bodies of a line on P2, taken along curves of growing degree."""

from fractions import Fraction

from okx.convex import max_subsimplex
from okx.fixtures import build_fixture
from okx.okounkov import area, okounkov_polygon
from okx.seshadri import moving_seshadri_bounds


def show(m):
    fx = build_fixture("p2", m=m)
    flag = fx.flags["degree_m"]
    body = okounkov_polygon(fx.geometry, (Fraction(1),), flag).body
    lam = max_subsimplex(body).lengths
    print(f"m={m}  flag {flag.label:<12} vertices {[tuple(map(str, v)) for v in body.vertices]}")
    print(f"      area {area(body)}   sub-simplex lengths {tuple(map(str, lam))}")


# 1. A degree-m curve through a general point gives the triangle m^2 x1 + x2 <= m.
#    The area stays 1/2 (= L.L / 2) while the shape stretches.
for m in range(1, 6):
    show(m)

# 2. Seshadri bounds at the general point: flags by lines and conics are both available,
#    and the line flag already pins the constant down.
fx = build_fixture("p2", m=1)
b = moving_seshadri_bounds(fx.geometry, (Fraction(1),), fx.points["xgen"])
print(f"\nSeshadri bounds for L at a general point: {b.lower} <= eps <= {b.upper} (curve oracle {b.oracle})")
