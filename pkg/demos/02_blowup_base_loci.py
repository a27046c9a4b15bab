#!/usr/bin/env python3
"""Base loci on the blow-up of P2 at a point, read off from limiting bodies."""

from fractions import Fraction

from okx.fixtures import build_fixture
from okx.loci import augmented_base_locus, enumerate_flags, flag_criteria, restricted_base_locus
from okx.okounkov import limiting_body
from okx.zariski import zariski_decompose

fx = build_fixture("blp2")
g = fx.geometry
F = Fraction

# 1. Classes in the basis (H, E): an ample class, H, H + E, the exceptional curve and the pencil class H - E.
classes = {"2H-E": (F(2), F(-1)), "H": (F(1), F(0)), "H+E": (F(1), F(1)), "E": (F(0), F(1)), "H-E": (F(1), F(-1))}

for name, D in classes.items():
    zd = zariski_decompose(g, D)
    print(f"{name:<5} P={tuple(map(str, zd.positive))}  N={[(l, str(a)) for l, a in zd.negative]}  "
          f"B-={restricted_base_locus(g, D)}  B+={augmented_base_locus(g, D)}")

# 2. The same loci seen through bodies. Missing origin means the center lies in B-;
#    no orthant corner at the origin means it lies in B+.
print()
for name, D in classes.items():
    for flag, in_bminus, in_bplus, oracle_m, oracle_p in flag_criteria(g, D):
        mark = "ok" if (in_bminus, in_bplus) == (oracle_m, oracle_p) else "MISMATCH"
        print(f"{name:<5} {flag.label:<18} in B-: {in_bminus!s:<5} in B+: {in_bplus!s:<5} {mark}")

# 3. A body off the origin: H + E along the exceptional curve is shifted right by ord_E = 1.
body = limiting_body(g, classes["H+E"], fx.flags["E:xE"])
print("\nH+E along E:", [tuple(map(str, v)) for v in body.vertices])
print("flags enumerated:", [f.label for f in enumerate_flags(g)])
