"""Acceptance gate: ten exact criteria, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -v``; the verdict lines are written
straight to the terminal so they survive output capture.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction

import pytest

from okx.convex import (
    ConvexBody,
    contains_body,
    contains_origin,
    contains_point,
    minkowski_sum,
    slice_first_zero,
    translate,
)
from okx.fixtures import build_fixture
from okx.loci import (
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
from okx.nslattice import intersect, is_ample, is_big, is_nef, vec_add
from okx.okounkov import area, limiting_body, nu_vector, okounkov_polygon
from okx.seshadri import moving_seshadri_bounds
from okx.verify import sample_effective, sample_pseudoeffective
from okx.zariski import zariski_decompose

SAMPLES = 200
SEED = 20240
SAMPLED_FIXTURES = [("blp2", {}), ("f_e", {"e": 2})]
ALL_FIXTURES = [("p2", {"m": 1}), ("p2", {"m": 3}), ("blp2", {}), ("f_e", {"e": 2}), ("fpp", {"k": 3})]


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}")
        return ok
    return emit


def _samples(name, params):
    fx = build_fixture(name, **params)
    rng = random.Random(f"{SEED}:{name}:{sorted(params.items())}")
    return fx, [sample_pseudoeffective(fx.geometry, rng) for _ in range(SAMPLES)]


@pytest.fixture(scope="module")
def shared_samples():
    return [_samples(n, p) for n, p in SAMPLED_FIXTURES]


def _vertex_set(*pts):
    return ConvexBody.from_points(2, pts).vertices


def test_criterion_01_p2_golden_polygons(verdict):
    start = time.perf_counter()
    failures = []
    for m in range(1, 6):
        fx = build_fixture("p2", m=m)
        g, flag = fx.geometry, fx.flags["degree_m"]
        body = okounkov_polygon(g, (Fraction(1),), flag).body
        # {m^2 x1 + x2 <= m} in the orthant
        if body.vertices != _vertex_set((0, 0), (Fraction(1, m), 0), (0, m)):
            failures.append(f"m={m} body {body.vertices}")
        b = moving_seshadri_bounds(g, (Fraction(1),), fx.points["xgen"])
        lam = dict(b.flags)[flag.label]
        if lam != (Fraction(1, m), m):
            failures.append(f"m={m} lambda {lam}")
        if m == 1 and (b.lower, b.upper, b.oracle) != (1, 1, 1):
            failures.append(f"m=1 bounds {(b.lower, b.upper, b.oracle)}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1
    verdict(1, ok, f"P2 m=1..5 bodies and lambdas exact, {elapsed:.3f}s {failures}")
    assert ok


def test_criterion_02_fake_projective_plane(verdict):
    start = time.perf_counter()
    failures = []
    for k in range(2, 6):
        fx = build_fixture("fpp", k=k)
        g = fx.geometry
        body = limiting_body(g, (Fraction(1),), fx.flags["C:x"])
        if body.vertices != _vertex_set((0, 0), (Fraction(1, k), 0), (0, k)):
            failures.append(f"k={k} body {body.vertices}")
        b = moving_seshadri_bounds(g, (Fraction(1),), fx.points["x"])
        # the Seshadri constant of H at x is 1 on this model (H.H = 1, no curve in |H|)
        if not (b.lower == Fraction(1, k) < 1 < b.upper == k):
            failures.append(f"k={k} bounds {(b.lower, b.upper)}")
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1
    verdict(2, ok, f"FPP k=2..5 bodies exact, 1/k < 1 < k, {elapsed:.3f}s {failures}")
    assert ok


def test_criterion_03_restricted_base_locus(verdict, shared_samples):
    start = time.perf_counter()
    checks = mismatches = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        flags = enumerate_flags(g)
        for D in samples:
            bm = restricted_base_locus(g, D)
            by_center: dict[str, set] = {}
            for f in flags:
                crit = criterion_Bminus(g, D, f)
                checks += 1
                mismatches += crit != bm.contains_point(f.point)
                by_center.setdefault(f.point.label, set()).add(crit)
            mismatches += sum(len(v) != 1 for v in by_center.values())
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 30
    verdict(3, ok, f"B- criterion on {checks} (class, flag) pairs, {mismatches} mismatches, {elapsed:.2f}s")
    assert ok


def test_criterion_04_augmented_base_locus(verdict, shared_samples):
    start = time.perf_counter()
    checks = mismatches = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        flags = enumerate_flags(g)
        for D in samples:
            big = is_big(g, D)
            P = zariski_decompose(g, D).positive
            null = {c.label for c in g.curves if intersect(g, P, c.vector) == 0}
            for f in flags:
                expected = (not big) or any(f.point.passes_through(lab) for lab in null)
                checks += 1
                mismatches += criterion_Bplus(g, D, f) != expected
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 30
    verdict(4, ok, f"B+ criterion on {checks} (class, flag) pairs, {mismatches} mismatches, {elapsed:.2f}s")
    assert ok


def test_criterion_05_zariski_via_bodies(verdict, shared_samples):
    mismatches = steps_seen = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        for D in samples:
            mismatches += divisorial_zd_via_bodies(g, D) != zariski_decompose(g, D)
            for s in zd_steps_via_bodies(g, D):
                steps_seen += 1
                mismatches += s.body_after != translate(s.body_before, (-s.coefficient, 0))
    ok = mismatches == 0
    verdict(5, ok, f"body-based decomposition equals the oracle, {steps_seen} translation steps, "
                   f"{mismatches} mismatches")
    assert ok


def test_criterion_06_volume_identity(verdict, shared_samples):
    mismatches = big_checks = boundary_checks = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        flags = enumerate_flags(g)
        for D in samples:
            big = is_big(g, D)
            P = zariski_decompose(g, D).positive
            for f in flags:
                a = area(limiting_body(g, D, f))
                if big:
                    big_checks += 1
                    mismatches += 2 * a != intersect(g, P, P)
                else:
                    boundary_checks += 1
                    mismatches += a != 0
    ok = mismatches == 0 and big_checks > 0 and boundary_checks > 0
    verdict(6, ok, f"2*area = P.P on {big_checks} big pairs, area 0 on {boundary_checks} boundary pairs, "
                   f"{mismatches} mismatches")
    assert ok


def test_criterion_07_structure_properties(verdict, shared_samples):
    mismatches = checks = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        flags = enumerate_flags(g)
        for D, D2 in zip(samples, samples[1:] + samples[:1]):
            zd = zariski_decompose(g, D)
            N = zd.negative_class(g)
            for f in flags:
                body = limiting_body(g, D, f)
                checks += 1
                total = limiting_body(g, vec_add(D, D2), f)
                mismatches += not contains_body(total, minkowski_sum(body, limiting_body(g, D2, f)))
                body_P = limiting_body(g, zd.positive, f)
                mismatches += minkowski_sum(body_P, limiting_body(g, N, f)) != body
                if not any(f.point.passes_through(lab) for lab in zd.support):
                    mismatches += body_P != body
                slice_nonempty = not slice_first_zero(body, 1).is_empty
                mismatches += slice_nonempty != (zd.coefficient(f.curve) == 0)
    ok = mismatches == 0
    verdict(7, ok, f"superadditivity, Zariski additivity, slice test on {checks} pairs, {mismatches} mismatches")
    assert ok


def test_criterion_08_three_way_agreement(verdict, shared_samples):
    mismatches = 0
    seen = {"nef": 0, "ample": 0, "movable": 0}
    for fx, samples in shared_samples:
        g = fx.geometry
        for D in samples:
            zd = zariski_decompose(g, D)
            bm, bp = restricted_base_locus(g, D), augmented_base_locus(g, D)
            rows = {
                "nef": (is_nef(g, D), nef_via_bodies(g, D), bm.is_empty),
                "ample": (is_ample(g, D), ample_via_bodies(g, D), bp.is_empty),
                "movable": (not zd.negative, movable_via_bodies(g, D), not bm.curves),
            }
            for key, triple in rows.items():
                mismatches += len(set(triple)) != 1
                seen[key] += triple[0]
    ok = mismatches == 0 and all(seen.values())
    verdict(8, ok, f"oracle = bodies = loci, positives seen {seen}, {mismatches} mismatches")
    assert ok


def test_criterion_09_seshadri_sandwich(verdict, shared_samples):
    mismatches = checks = zero_checks = 0
    for fx, samples in shared_samples:
        g = fx.geometry
        nef_classes = {D for D in samples if is_nef(g, D)}
        nef_classes |= {zariski_decompose(g, D).positive for D in samples}
        for D in sorted(nef_classes):
            if not any(D):
                continue
            bp = augmented_base_locus(g, D)
            for x in g.points:
                b = moving_seshadri_bounds(g, D, x)
                checks += 1
                mismatches += not (b.lower <= b.oracle <= b.upper)
                if bp.contains_point(x):
                    zero_checks += 1
                    mismatches += b.lower != 0
    ok = mismatches == 0 and zero_checks > 0
    verdict(9, ok, f"lower <= oracle <= upper on {checks} (class, point) pairs, "
                   f"lower = 0 on {zero_checks} points of B+, {mismatches} mismatches")
    assert ok


def test_criterion_10_valuative_points(verdict):
    mismatches = checks = 0
    for name, params in ALL_FIXTURES:
        fx = build_fixture(name, **params)
        g = fx.geometry
        flags = enumerate_flags(g)
        rng = random.Random(f"{SEED}:nu:{name}:{sorted(params.items())}")
        for _ in range(100):
            div = sample_effective(g, rng)
            D = div.divisor_class(g)
            for f in flags:
                checks += 1
                mismatches += not contains_point(limiting_body(g, D, f), nu_vector(g, div, f))
    ok = mismatches == 0
    verdict(10, ok, f"nu vectors inside bodies on {checks} (divisor, flag) pairs, {mismatches} misses")
    assert ok


def test_boundary_samples_are_present(shared_samples):
    # the suite is only meaningful if both big and boundary classes are drawn
    for fx, samples in shared_samples:
        kinds = {is_big(fx.geometry, D) for D in samples}
        assert kinds == {True, False}
        assert any(not contains_origin(limiting_body(fx.geometry, D, f))
                   for D in samples[:20] for f in enumerate_flags(fx.geometry))
