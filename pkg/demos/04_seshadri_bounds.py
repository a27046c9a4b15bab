#!/usr/bin/env python3
"""Seshadri bounds from sub-simplices, with the fake projective plane as the warning case."""

from fractions import Fraction

from okx.fixtures import build_fixture
from okx.seshadri import moving_seshadri_bounds

F = Fraction

# 1. On the fake projective plane model the only catalog curve through x lies in |kH|.
#    The body of H is {k^2 x1 + x2 <= k}, so lambda = (1/k, k) straddles eps(H; x) = 1.
for k in range(2, 6):
    fx = build_fixture("fpp", k=k)
    b = moving_seshadri_bounds(fx.geometry, (F(1),), fx.points["x"])
    print(f"k={k}: {b.lower} <= eps <= {b.upper}   (catalog oracle {b.oracle}, true value 1)")

# 2. On the blow-up, x on the exceptional curve lies in B+(H), so the lower bound collapses to 0.
#    At xgen the oracle sees only H_line; the uncatalogued line through xgen and the
#    blown-up point (class H - E) would give eps(2H - E; xgen) = 1, still inside the bounds.
fx = build_fixture("blp2")
for name, D in {"H": (F(1), F(0)), "2H-E": (F(2), F(-1)), "3H-E": (F(3), F(-1))}.items():
    for x in fx.geometry.points:
        b = moving_seshadri_bounds(fx.geometry, D, x)
        print(f"BLP2 {name:<5} at {x.label:<5} lower={b.lower!s:<4} oracle={b.oracle!s:<4} upper={b.upper}")
