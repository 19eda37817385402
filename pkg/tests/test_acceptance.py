"""The eight acceptance criteria, each printing one PASS/FAIL line."""

import cmath
import math
import time

import numpy as np
import pytest

from cafcc import irf
from cafcc.abs_verify import P1_CASES, a4_discriminant_degrees, verify_p1
from cafcc.catalog import check_symmetries, fourleg_residual, solve_corner
from cafcc.checker import run_trials, sample_params, sample_value
from cafcc.edges import edge_a
from cafcc.errors import MatchFailed
from cafcc.ids import FaceConfig, Kind, SuiteId, all_ids, all_suites, parse_id
from cafcc.lattice import evolve, max_face_residual, seed_initial
from cafcc.numeric import Tolerance, dilog, principal_log, xbar

TOL = Tolerance(1e-9, 1e-9)
PI2_6 = math.pi**2 / 6


@pytest.fixture
def verdict(capsys):
    def emit(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[acceptance {number}] {'PASS' if ok else 'FAIL'}: {detail}")
        assert ok, detail
    return emit


def random_nondegenerate_curve(rng):
    while True:
        g2, g3 = sample_value(rng), sample_value(rng)
        if abs(g2**3 - 27 * g3**2) > 0.1:
            return g2, g3


def test_1_cafcc_suites(verdict):
    g2, g3 = random_nondegenerate_curve(np.random.default_rng(2024))
    suites = all_suites() + [SuiteId(a_only=parse_id("A4", g2, g3))]
    start = time.perf_counter()
    worst, failed = 0.0, []
    for suite in suites:
        rep = run_trials(suite, 100, 1, TOL)
        worst = max(worst, rep.residuals.max)
        if not rep.passed:
            failed.append(str(suite))
    elapsed = time.perf_counter() - start
    verdict(1, not failed, f"{len(suites)} suite runs x 100 trials, worst residual {worst:.2e}, "
                           f"{elapsed:.1f}s, failing: {failed or 'none'}")


def test_2_negative_control(verdict):
    hits = []
    for suite in all_suites():
        rep = run_trials(suite, 100, 1, TOL, corrupt="y0")
        if rep.failures_above(1e-3) >= 95:
            hits.append(str(suite))
    verdict(2, len(hits) >= 3, f"corrupted y0 fails >= 95/100 trials in {len(hits)} suites: {', '.join(hits)}")


def test_3_p1_abs(verdict):
    failed, literal = [], 0
    for label in P1_CASES:
        try:
            verify_p1(label, n_points=200)
        except MatchFailed:
            failed.append(label)
        try:
            verify_p1(label, n_points=200, literal=True)
            literal += 1
        except MatchFailed:
            pass
    rng = np.random.default_rng(7)
    degrees = [a4_discriminant_degrees(*random_nondegenerate_curve(rng), seed=k) for k in range(5)]
    a4_ok = all(d == [4, 4, 4, 4] for d in degrees)
    verdict(3, not failed and a4_ok,
            f"{len(P1_CASES) - len(failed)}/{len(P1_CASES)} P1 matches ({literal} with the stated substitution "
            f"as written), A4 discriminant degrees {degrees}")


def test_4_symmetries(verdict):
    rng = np.random.default_rng(4)
    failed = set()
    for eq in all_ids():
        for _ in range(100):
            al, be = sample_params(rng, 2)
            cfg = FaceConfig(*(sample_value(rng) for _ in range(5)), al, be)
            if not check_symmetries(eq, cfg, rel=1e-9).passed:
                failed.add(str(eq))
    verdict(4, not failed, f"{len(all_ids())} equations x 100 points, failing: {sorted(failed) or 'none'}")


def test_5_fourleg_and_reflection(verdict):
    rng = np.random.default_rng(5)
    worst_leg, worst_refl = 0.0, 0.0
    for eq in all_ids():
        for _ in range(100):
            al, be = sample_params(rng, 2)
            cfg = FaceConfig(*(sample_value(rng) for _ in range(5)), al, be)
            cfg = cfg.with_corner("d", solve_corner(eq, cfg, "d"))
            worst_leg = max(worst_leg, abs(fourleg_residual(eq, cfg)))
            if eq.kind is Kind.A:
                x, y = sample_value(rng), sample_value(rng)
                a, b = al
                fwd, back = edge_a(eq, x, y, a, b), edge_a(eq, x, y, b, a)
                err = abs(fwd + back) if eq.additive else abs(fwd * back - 1)
                worst_refl = max(worst_refl, err)
    ok = worst_leg < 1e-9 and worst_refl < 1e-11
    verdict(5, ok, f"four-leg residual on solved corners {worst_leg:.2e}, reflection identity {worst_refl:.2e}")


def test_6_lattice(verdict):
    worst, worst_order, runs = 0.0, 0.0, 0
    for label in ("A2_00", "A3d0", "A3d1", "D1"):
        eq = parse_id(label)
        for kind in ("staircase", "corner"):
            for seed in range(1, 6):
                init = seed_initial(kind, 16, seed)
                a = evolve(eq, init, "diagonal")
                b = evolve(eq, init, "rowmajor")
                assert not a.unset()
                worst = max(worst, max_face_residual(eq, a))
                worst_order = max(worst_order, max(abs(a.values[p] - b.values[p]) for p in a.values))
                runs += 1
    verdict(6, worst < 1e-9 and worst_order < 1e-12,
            f"{runs} 16x16 evolutions, max scaled face residual {worst:.2e}, order difference {worst_order:.2e}")


def test_7_derivations(verdict):
    reports = [irf.derivation_check(r.label, 50, 0, case=name, rel=1e-9)
               for name in ("hyperbolic2", "rational3", "algebraic1")
               for r in irf.CASES[name].rows.values()]
    legs = [irf.three_leg_check(c, 50, 0, 1e-9, raise_on_fail=False) for c in ("Q2-rational", "Q1d1-rational")]
    quad, exact = irf.q1d1_exact_point()
    ok = all(r.passed for r in reports + legs) and quad == 0 and exact < 1e-9
    worst = max(r.max_error for r in reports + legs)
    verdict(7, ok, f"{len(reports)} derivation rows and 2 three-leg checks, worst {worst:.2e}; "
                   f"exact Q1 point quad {abs(quad):.1e}, three-leg {exact:.1e}")


def test_8_special_functions(verdict):
    rng = np.random.default_rng(8)
    errs = {"reflection": 0.0, "inversion": 0.0, "log round trip": 0.0, "xbar": 0.0}
    for _ in range(100):
        z = rng.uniform(0.01, 0.99) * cmath.exp(2j * math.pi * rng.uniform())
        errs["reflection"] = max(errs["reflection"], abs(
            dilog(z) + dilog(1 - z) - (PI2_6 - principal_log(z) * principal_log(1 - z))))
        w = complex(rng.uniform(0.5, 3), rng.uniform(-math.pi, math.pi)) * cmath.exp(2j * math.pi * rng.uniform())
        errs["inversion"] = max(errs["inversion"], abs(
            dilog(w) + dilog(1 / w) + PI2_6 + 0.5 * principal_log(-w) ** 2))
        v = complex(rng.uniform(-5, 5), rng.uniform(-math.pi, math.pi) * 0.999)
        errs["log round trip"] = max(errs["log round trip"], abs(principal_log(cmath.exp(v)) - v))
        x = complex(*rng.normal(size=2))
        xb = xbar(x)
        errs["xbar"] = max(errs["xbar"], abs(xb + 1 / xb - 2 * x))
    ok = all(e < 1e-11 for e in errs.values())
    verdict(8, ok, ", ".join(f"{k} {v:.1e}" for k, v in errs.items()))
