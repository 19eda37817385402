import cmath
import math

import numpy as np
import pytest

from cafcc import irf
from cafcc.errors import DomainError, MatchFailed
from cafcc.ids import SpectralPair, parse_id
from cafcc.irf import CASES, COVSHIFT_PAIRS, IrfType, LagKind, ThreeLegCase
from cafcc.numeric import dilog, gamma_fn, principal_log

I = 1j
PI = math.pi


def li2m(z):
    """Li2(-e^z)."""
    return dilog(-cmath.exp(z))


# Lagrangian values, written independently of the derivative code, for the finite-difference oracle.
VALUES = {
    ("hyperbolic2", "L"): lambda a, xi, xj: li2m(xi - xj + I * a) + li2m(xj - xi + I * a) + (xi - xj) ** 2 / 2,
    ("hyperbolic1", "Lhat"): lambda a, xi, xj: (sum(li2m(s1 * xi + s2 * xj + I * a) for s1 in (1, -1) for s2 in (1, -1))
                                                + xi**2 + xj**2),
    ("hyperbolic2", "Lam"): lambda a, xi, xj: (li2m(xi + xj + I * a) + li2m(xi - xj + I * a)
                                               + (xi**2 + xj**2) / 2 + I * a * xi),
    ("hyperbolic3", "Lam"): lambda a, xi, xj: li2m(xi + xj + I * a) + I * a * (xi + xj) + xi**2 + xj**2,
    ("hyperbolic4", "Lam"): lambda a, xi, xj: -xi * xj,
    ("rational3", "L"): lambda a, xi, xj: gamma_fn(xi - xj + I * a) - gamma_fn(xi - xj - I * a),
    ("rational1", "Lhat"): lambda a, xi, xj: sum(gamma_fn(xi + s * xj + I * a) - gamma_fn(xi + s * xj - I * a)
                                                for s in (1, -1)),
    ("rational2", "Lam"): lambda a, xi, xj: gamma_fn(xi + xj + I * a) + gamma_fn(xi - xj + I * a),
    ("rational3", "Lam"): lambda a, xi, xj: gamma_fn(xi + xj + I * a),
    ("algebraic1", "L"): lambda a, xi, xj: -2 * a * principal_log(xi + xj),
    ("algebraic1", "Lam"): lambda a, xi, xj: (I * xj - a) * principal_log(xi),
    ("algebraic1", "Lbar"): lambda a, xi, xj: gamma_fn(xi - xj - I * a) + gamma_fn(xj - xi - I * a),
    ("algebraic2", "L"): lambda a, xi, xj: -2 * I * a * principal_log(xi - xj),
    ("algebraic2", "Lam"): lambda a, xi, xj: I * xi * xj,
}


@pytest.mark.parametrize("case, kind", sorted(VALUES))
def test_lagrangian_derivative_finite_difference(case, kind, rng):
    value = VALUES[(case, kind)]
    h = 1e-6
    checked = 0
    while checked < 20:
        a = complex(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))
        xi, xj = (complex(rng.uniform(0.2, 0.9), rng.uniform(-0.6, 0.6)) for _ in range(2))
        try:
            di = irf.lagrangian_dx(case, kind, a, xi, xj, "i")
            dj = irf.lagrangian_dx(case, kind, a, xi, xj, "j")
        except DomainError:
            continue
        fi = (value(a, xi + h, xj) - value(a, xi - h, xj)) / (2 * h)
        fj = (value(a, xi, xj + h) - value(a, xi, xj - h)) / (2 * h)
        assert abs(fi - di) <= 1e-6 * max(1, abs(di))
        assert abs(fj - dj) <= 1e-6 * max(1, abs(dj))
        checked += 1


def test_rational_l_example():
    # i(1 + Log(i * 1)) - i(1 + Log(i * -1)) at w = 0, a = -i: i(Log 1 - Log(-1)) = -pi, not +pi
    d = irf.lagrangian_dx("rational3", "L", -I, 0.4, 0.4, guard=False)
    assert abs(d - (-PI)) < 1e-14


def test_hyperbolic_lambda_example():
    d = irf.lagrangian_dx("hyperbolic3", "Lam", PI / 2, 0, 0)
    assert abs(d - (-cmath.log(1 + cmath.exp(I * PI / 2)) + I * PI / 2)) < 1e-14


@pytest.mark.parametrize("case, kind", [("hyperbolic2", "L"), ("hyperbolic3", "Lbar"), ("algebraic1", "Lbar")])
def test_antisymmetric_kind_vanishes_on_diagonal(case, kind):
    for a in (0.7, 0.3 + 0.1j, -0.4):
        for x in (0.5, 0.2 - 0.3j):
            assert abs(irf.lagrangian_dx(case, kind, a, x, x, guard=False)) < 1e-14


def test_missing_lagrangian_kind():
    with pytest.raises(ValueError):
        irf.lagrangian_dx("rational3", "Lhat", 0.2, 0.3, 0.4)


@pytest.mark.parametrize("name", list(CASES))
def test_eta0(name):
    expected = PI if name.startswith("hyperbolic") else 0
    assert irf.eta0(name) == expected


def test_unknown_case():
    with pytest.raises(ValueError):
        irf.get_case("elliptic1")


@pytest.mark.parametrize("name", list(CASES))
def test_case_rows(name):
    reports = irf.case_check(name, n_points=30, seed=4)
    assert len(reports) == 3
    for rep in reports:
        assert rep.passed, rep
        assert rep.max_error < 1e-9


def test_every_non_elliptic_row_is_generated():
    generated = {r.label for c in CASES.values() for r in c.rows.values()}
    from cafcc.ids import SUITE_ROWS
    assert generated == {lbl for row in SUITE_ROWS for lbl in row}


def test_derivation_check_specific_cases():
    rep = irf.derivation_check("A3d0", 50, 0, case="hyperbolic2")
    assert rep.passed and rep.cases == ["hyperbolic2"]
    rep = irf.derivation_check("B2_100", 50, 0)
    assert rep.passed and rep.cases == ["rational3"]
    assert irf.derivation_check("A3d0").cases == ["hyperbolic2", "hyperbolic3", "hyperbolic4"]


def test_derivation_check_rejects_unrelated():
    with pytest.raises(ValueError):
        irf.derivation_check("A4", 5)
    with pytest.raises(ValueError):
        irf.derivation_check("C1", 5, case="rational3")


def test_derivation_check_detects_wrong_row():
    # swap rational3's type-C display for rational2's: the check must fail
    case = CASES["rational3"]
    bad_rows = dict(case.rows)
    bad_rows[IrfType.C] = irf.TypeRow("C2_100", CASES["rational2"].rows[IrfType.C].display, I)
    bad = irf.LagrangianCase("bad", case.arithmetic, case.family, case.cov, bad_rows)
    with pytest.raises(MatchFailed):
        irf.derivation_check("C2_100", 20, 0, case=bad)


def test_algebraic_type_b_forms(rng):
    for _ in range(10):
        xa, xb, xc, xd = (complex(rng.uniform(0.2, 0.9), rng.uniform(-0.6, 0.6)) for _ in range(4))
        zero = SpectralPair(0.3, -0.2)
        ctx = irf.DerivationContext(CASES["algebraic1"], zero, zero, (xa, xb, xc, xd), 0.5)
        expected = I * (cmath.log(xb) + cmath.log(xc) - cmath.log(xa) - cmath.log(xd))
        assert abs(irf.irf_dx(ctx, "B") - expected) < 1e-13
        ctx = irf.DerivationContext(CASES["algebraic2"], zero, zero, (xa, xb, xc, xd), 0.5)
        assert abs(irf.irf_dx(ctx, "B") - (xa - xb - xc + xd)) < 1e-13


def test_d1_link(rng):
    for _ in range(20):
        xs = [complex(*rng.normal(size=2)) for _ in range(4)]
        derived, poly = irf.d1_link(*xs)
        assert derived == poly


@pytest.mark.parametrize("name", ["rational1", "rational2", "rational3"])
def test_type_a_vanishes_for_equal_parameters(name, rng):
    # u1 = u2 = v1 = v2: every leg parameter difference is zero
    case = CASES[name]
    for _ in range(5):
        w = complex(rng.uniform(-1, 1))
        u = SpectralPair(w, w)
        corners = tuple(complex(rng.uniform(0.2, 0.9), rng.uniform(-0.6, 0.6)) for _ in range(4))
        ctx = irf.DerivationContext(case, u, u, corners, 0.5 + 0.1j)
        assert abs(irf.irf_dx(ctx, "A", guard=False)) < 1e-13


GENERIC = [(n, w) for n in ("hyperbolic1", "hyperbolic2", "hyperbolic3", "hyperbolic4",
                            "rational1", "rational2", "rational3") for w in (IrfType.A, IrfType.B)]


@pytest.mark.parametrize("name, which", GENERIC, ids=lambda v: getattr(v, "value", v))
def test_generic_sum_matches_display(name, which, rng):
    case = CASES[name]
    scale = case.rows[which].scale
    done = 0
    while done < 30:
        ctx = irf.sample_context(case, rng)
        try:
            diff = irf.generic_sum_dx(ctx, which) - irf.irf_dx(ctx, which)
        except DomainError:
            continue
        assert abs(cmath.exp(scale * diff) - 1) < 1e-10
        done += 1


def test_generic_sum_type_c_not_offered(rng):
    ctx = irf.sample_context("rational3", rng)
    with pytest.raises(ValueError):
        irf.generic_sum_dx(ctx, IrfType.C)


COVSHIFT = [(fam, bar, plain, scale) for fam, pairs in COVSHIFT_PAIRS.items() for bar, plain, scale in pairs]


@pytest.mark.parametrize("family, bar, plain, scale", COVSHIFT, ids=lambda v: getattr(v, "value", str(v)))
def test_covshift(family, bar, plain, scale, rng):
    shift = PI if family.startswith("hyperbolic") else 0.0
    done = 0
    while done < 100:
        alpha = complex(rng.uniform(-1, 1), rng.uniform(-0.3, 0.3))
        xi, xj = (complex(rng.uniform(0.2, 0.9), rng.uniform(-0.6, 0.6)) for _ in range(2))
        try:
            errs = [irf.covshift_error(family, bar, plain, scale, alpha, xi, xj, wrt, sign, shift)
                    for wrt in (0, 1) for sign in (1, -1)]
        except DomainError:
            continue
        assert max(errs) < 1e-10
        done += 1


# three-leg checks

def test_q1d1_exact_point():
    quad, err = irf.q1d1_exact_point()
    assert quad == 0
    assert err < 1e-9


@pytest.mark.parametrize("case", list(ThreeLegCase), ids=lambda c: c.value)
def test_three_leg(case):
    rep = irf.three_leg_check(case, 50, 0)
    assert rep.passed and rep.max_error < 1e-9


@pytest.mark.parametrize("case", list(ThreeLegCase), ids=lambda c: c.value)
def test_three_leg_negative_control(case):
    rep = irf.three_leg_check(case, 100, 1, perturb=0.3 + 0.2j, raise_on_fail=False)
    assert not rep.passed
    assert sum(e > 1e-3 for e in rep.errors) >= 95


def test_three_leg_names():
    assert irf.parse_three_leg("Q1δ1-rational") is ThreeLegCase.Q1D1
    assert irf.parse_three_leg("h3e1_a") is ThreeLegCase.H3E1_A
    with pytest.raises(ValueError):
        irf.parse_three_leg("Q4-elliptic")


def test_rational_params():
    assert irf.rational_params(2j, -1j) == (2, 1)


def test_q1d1_check_includes_exact_point():
    rep = irf.three_leg_check("Q1d1-rational", 10, 0)
    assert rep.points == 11 and "exact point" in rep.note
