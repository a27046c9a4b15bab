"""Seeded cross-check suite: body criteria against intersection-theoretic oracles.

:func:`run_verification` samples divisor classes on one geometry and evaluates
every property pairing below, producing a JSON-serializable report with one
record per (claim, sample).  Identical seeds give byte-identical reports.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Any, Callable

from .convex import contains_body, contains_point, minkowski_sum, scale, slice_first_zero
from .errors import OkxError
from .linalg import is_negative_definite
from .nslattice import (
    SurfaceGeometry,
    combination,
    intersect,
    is_ample,
    is_big,
    is_nef,
    is_pseudoeffective,
    pseff_threshold,
    vec_add,
    vec_scale,
    vec_sub,
)
from .numbers import format_rational
from .okounkov import EffectiveCombination, area, limiting_body, nu_vector
from .loci import (
    ALL,
    ample_via_bodies,
    augmented_base_locus,
    criterion_Bminus,
    criterion_Bplus,
    divisorial_zd_via_bodies,
    enumerate_flags,
    movable_via_bodies,
    nef_via_bodies,
    restricted_base_locus,
    zd_steps_via_bodies,
)
from .seshadri import moving_seshadri_bounds
from .zariski import chamber_walk, zariski_decompose


ASSUMPTIONS = [
    "effective cone spanned by the declared generators",
    "curve catalog complete for the curve-based oracles (B+ null locus, Seshadri oracle)",
    "flags limited to catalog curves at named points plus one general point per curve",
    "classes taken up to numerical equivalence",
]


def random_rational(rng: random.Random, hi: int = 8, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(0, hi), rng.randint(1, max_den))


def sample_pseudoeffective(geom: SurfaceGeometry, rng: random.Random, zero_prob: float = 0.25) -> tuple:
    """Nonzero random nonnegative rational combination of the effective generators."""
    while True:
        coeffs = {g: (random_rational(rng) if rng.random() >= zero_prob else Fraction(0))
                  for g in geom.effective_generators}
        D = combination(geom, coeffs)
        if any(D):
            return D


def sample_effective(geom: SurfaceGeometry, rng: random.Random) -> EffectiveCombination:
    while True:
        coeffs = {c.label: random_rational(rng, 4, 3) for c in geom.curves if rng.random() < 0.6}
        if any(coeffs.values()):
            return EffectiveCombination(coeffs)


def sample_non_pseudoeffective(geom: SurfaceGeometry, rng: random.Random) -> tuple:
    D = sample_pseudoeffective(geom, rng)
    A = geom.ample_class
    # push far enough along -A that A.D' < 0, which rules out pseudoeffectivity
    s = intersect(geom, A, D) / intersect(geom, A, A) + random_rational(rng, 4, 2) + 1
    return vec_sub(D, vec_scale(s, A))


def _fmt(v) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (tuple, list)):
        return [_fmt(x) for x in v]
    if isinstance(v, dict):
        return {k: _fmt(x) for k, x in v.items()}
    return v


class _Report:
    def __init__(self, geom: SurfaceGeometry):
        self.geom = geom
        self.records: list[dict[str, Any]] = []

    def claim(self, claim_id: str, inputs: dict, oracle, body, ok: bool):
        rec = {"claim": claim_id, "inputs": _fmt(inputs), "oracle": _fmt(oracle),
               "body": _fmt(body), "verdict": "PASS" if ok else "FAIL"}
        if not ok:
            rec["reproduce"] = {"geometry": self.geom.name, **_fmt(inputs)}
        self.records.append(rec)

    def guarded(self, claim_id: str, inputs: dict, fn: Callable[[], tuple]):
        try:
            oracle, body, ok = fn()
        except OkxError as exc:
            oracle, body, ok = None, f"{type(exc).__name__}: {exc}", False
        self.claim(claim_id, inputs, oracle, body, ok)


def _check_sample(rep: _Report, geom: SurfaceGeometry, D: tuple, idx: int, rng: random.Random):
    inputs = {"sample": idx, "D": D}
    flags = enumerate_flags(geom)
    big = is_big(geom, D)

    def positivity():
        a, n, p = is_ample(geom, D), is_nef(geom, D), is_pseudoeffective(geom, D)
        return [a, n, p], None, (not a or n) and (not n or p)
    rep.guarded("nslattice.ample_nef_pseff_chain", inputs, positivity)

    zd = zariski_decompose(geom, D)
    P = zd.positive

    def zariski_invariants():
        supp = zd.support
        G = [[intersect(geom, geom.curve(a).vector, geom.curve(b).vector) for b in supp] for a in supp]
        ok = (all(intersect(geom, P, geom.curve(l).vector) == 0 for l in supp)
              and all(intersect(geom, P, c.vector) >= 0 for c in geom.curves)
              and is_negative_definite(G)
              and vec_add(P, zd.negative_class(geom)) == D)
        return list(zd.negative), P, ok
    rep.guarded("zariski.invariants", inputs, zariski_invariants)

    def uniqueness():
        order = list(geom.labels)
        rng.shuffle(order)
        other = zariski_decompose(geom.with_curve_order(order), D)
        return [list(zd.negative), P], [sorted(other.negative), other.positive], \
            (other.positive == P and dict(other.negative) == dict(zd.negative))
    rep.guarded("zariski.permutation_uniqueness", inputs, uniqueness)

    def scaling():
        c = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        zc = zariski_decompose(geom, vec_scale(c, D))
        return c, list(zc.negative), (zc.positive == vec_scale(c, P)
                                      and dict(zc.negative) == {k: c * v for k, v in zd.negative})
    rep.guarded("zariski.scaling", inputs, scaling)

    def chambers():
        label = geom.labels[rng.randrange(len(geom.labels))]
        C = geom.curve(label).vector
        segs = chamber_walk(geom, D, label)
        mu = pseff_threshold(geom, D, label)
        ok = segs[0].t_lo == 0 and segs[-1].t_hi == mu
        ok &= all(a.t_hi == b.t_lo for a, b in zip(segs, segs[1:]))
        for _ in range(5):
            t = mu * Fraction(rng.randint(0, 64), 64)
            seg = next(s for s in segs if s.t_lo <= t <= s.t_hi)
            fresh = zariski_decompose(geom, vec_sub(D, vec_scale(t, C)))
            ok &= seg.decomposition(t).positive == fresh.positive
            ok &= dict(seg.decomposition(t).negative) == dict(fresh.negative)
        return [label, mu], len(segs), ok
    rep.guarded("zariski.chamber_consistency", inputs, chambers)

    bm = restricted_base_locus(geom, D)
    bp = augmented_base_locus(geom, D)
    centers: dict[str, set] = {}
    for f in flags:
        fin = {**inputs, "flag": f.label}
        body = limiting_body(geom, D, f)

        def bminus(f=f):
            crit = criterion_Bminus(geom, D, f)
            centers.setdefault(f.point.label, set()).add(crit)
            return bm.contains_point(f.point), crit, crit == bm.contains_point(f.point)
        rep.guarded("loci.bminus_body_criterion", fin, bminus)

        def bplus(f=f):
            crit = criterion_Bplus(geom, D, f)
            return bp.contains_point(f.point), crit, crit == bp.contains_point(f.point)
        rep.guarded("loci.bplus_body_criterion", fin, bplus)

        def volume_identity(body=body):
            a = area(body)
            vol = intersect(geom, P, P) if big else Fraction(0)
            return vol, 2 * a, 2 * a == vol
        rep.guarded("okounkov.volume_identity", fin, volume_identity)

        def slice_valuation(f=f, body=body):
            nonempty = not slice_first_zero(body, 1).is_empty
            return zd.coefficient(f.curve), nonempty, nonempty == (zd.coefficient(f.curve) == 0)
        rep.guarded("okounkov.slice_valuation", fin, slice_valuation)

        def additivity(f=f, body=body):
            N = zd.negative_class(geom)
            total = minkowski_sum(limiting_body(geom, P, f), limiting_body(geom, N, f))
            ok = total == body
            if not any(f.point.passes_through(l) for l in zd.support):
                ok &= limiting_body(geom, P, f) == body
            return total.vertices, body.vertices, ok
        rep.guarded("okounkov.zariski_additivity", fin, additivity)

        if big:
            def homogeneity(f=f, body=body):
                c = Fraction(rng.randint(1, 4), rng.randint(1, 3))
                scaled = limiting_body(geom, vec_scale(c, D), f)
                return scale(body, c).vertices, scaled.vertices, scaled == scale(body, c)
            rep.guarded("okounkov.homogeneity", fin, homogeneity)

    for center, verdicts in centers.items():
        rep.claim("loci.flag_independence", {**inputs, "center": center}, None, sorted(verdicts),
                  len(verdicts) == 1)

    def zd_bodies():
        z2 = divisorial_zd_via_bodies(geom, D)
        steps = zd_steps_via_bodies(geom, D)
        ok = z2.positive == P and dict(z2.negative) == dict(zd.negative)
        ok &= all(s.translation_holds for s in steps)
        return list(zd.negative), list(z2.negative), ok
    rep.guarded("loci.zariski_via_bodies", inputs, zd_bodies)

    def three_way():
        oracle = [is_nef(geom, D), is_ample(geom, D), not zd.negative]
        body = [nef_via_bodies(geom, D), ample_via_bodies(geom, D), movable_via_bodies(geom, D)]
        loci = [bm.is_empty, bp.is_empty, not bm.curves]
        return oracle, body, oracle == body == loci
    rep.guarded("loci.nef_ample_movable_agreement", inputs, three_way)

    if big:
        rep.claim("loci.bminus_in_bplus", inputs, str(bm), str(bp),
                  bp.kind == ALL.kind or bm.curves <= bp.curves)

    nef_class = P if any(P) else None
    if nef_class is not None:
        for x in geom.points:
            xin = {**inputs, "nef_class": nef_class, "point": x.label}

            def sandwich(x=x):
                b = moving_seshadri_bounds(geom, nef_class, x)
                ok = b.lower <= b.oracle <= b.upper
                if augmented_base_locus(geom, nef_class).contains_point(x):
                    ok &= b.lower == 0
                return b.oracle, [b.lower, b.upper], ok
            rep.guarded("seshadri.sandwich", xin, sandwich)

            def homog(x=x):
                c = Fraction(rng.randint(1, 4), rng.randint(1, 3))
                b1 = moving_seshadri_bounds(geom, nef_class, x)
                b2 = moving_seshadri_bounds(geom, vec_scale(c, nef_class), x)
                return [c * b1.lower, c * b1.upper], [b2.lower, b2.upper], \
                    (b2.lower, b2.upper) == (c * b1.lower, c * b1.upper)
            rep.guarded("seshadri.homogeneity", xin, homog)


def run_verification(geom: SurfaceGeometry, samples: int = 200, seed: int = 0) -> dict[str, Any]:
    rng = random.Random(seed)
    rep = _Report(geom)
    flags = enumerate_flags(geom)
    pool = []
    for idx in range(samples):
        D = sample_pseudoeffective(geom, rng)
        pool.append(D)
        _check_sample(rep, geom, D, idx, rng)

        E = sample_effective(geom, rng)
        cls = E.divisor_class(geom)
        for f in flags:
            def membership(f=f):
                nu = nu_vector(geom, E, f)
                body = limiting_body(geom, cls, f)
                return list(nu), body.vertices, contains_point(body, nu)
            rep.guarded("okounkov.valuative_membership",
                        {"sample": idx, "effective": dict(E.coeffs), "flag": f.label}, membership)

        if idx % 4 == 0:
            bad = sample_non_pseudoeffective(geom, rng)
            rep.claim("loci.non_pseudoeffective", {"sample": idx, "D": bad}, "X",
                      str(restricted_base_locus(geom, bad)),
                      restricted_base_locus(geom, bad) == ALL
                      and all(limiting_body(geom, bad, f).is_empty for f in flags))

    for idx in range(min(samples, 50)):
        D1, D2 = pool[rng.randrange(len(pool))], pool[rng.randrange(len(pool))]
        for f in flags:
            inputs = {"pair": idx, "D1": D1, "D2": D2, "flag": f.label}

            def superadd(f=f):
                s = minkowski_sum(limiting_body(geom, D1, f), limiting_body(geom, D2, f))
                whole = limiting_body(geom, vec_add(D1, D2), f)
                return whole.vertices, s.vertices, contains_body(whole, s)
            rep.guarded("okounkov.superadditivity", inputs, superadd)

        C = geom.labels[rng.randrange(len(geom.labels))]
        s = random_rational(rng, 4, 2)
        rep.guarded("nslattice.threshold_shift", {"pair": idx, "D": D1, "curve": C, "s": s},
                    lambda: ((pseff_threshold(geom, D1, C) + s),
                             pseff_threshold(geom, vec_add(D1, vec_scale(s, geom.curve(C).vector)), C),
                             pseff_threshold(geom, D1, C) + s ==
                             pseff_threshold(geom, vec_add(D1, vec_scale(s, geom.curve(C).vector)), C)))
        rep.claim("nslattice.intersect_symmetric", {"pair": idx, "D1": D1, "D2": D2},
                  intersect(geom, D1, D2), intersect(geom, D2, D1),
                  intersect(geom, D1, D2) == intersect(geom, D2, D1))

    fails = sum(r["verdict"] == "FAIL" for r in rep.records)
    claims = sorted({r["claim"] for r in rep.records})
    return {
        "tool": "okx verify",
        "geometry": geom.name,
        "samples": samples,
        "seed": seed,
        "assumptions": ASSUMPTIONS,
        "flags": [f.label for f in flags],
        "summary": {"records": len(rep.records), "pass": len(rep.records) - fails, "fail": fails,
                    "claims": claims, "verdict": "PASS" if fails == 0 else "FAIL"},
        "records": rep.records,
    }
