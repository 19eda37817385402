import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from cafcc import affine
from cafcc.abs_verify import AbsQuadId, QuadPoint, abs_eval
from cafcc.catalog import (affine_eval, check_symmetries, coeff_in_x, fourleg_residual, probe_x_degree,
                           solve_corner, x_coefficients)
from cafcc.checker import sample_params, sample_value
from cafcc.edges import edge_a, edge_b, edge_c
from cafcc.errors import DegenerateLinearSolve
from cafcc.ids import EquationId, FaceConfig, Family, Kind, SpectralPair, all_ids, parse_id

P = parse_id
S = SpectralPair
ALPHA, BETA = S(1, 2), S(3, 5)
NON_ELLIPTIC = all_ids(include_a4=False)
MULTIPLICATIVE_A = [e for e in all_ids() if e.kind is Kind.A and not e.additive]

seeds = st.integers(0, 2**32 - 1)


def random_cfg(rng) -> FaceConfig:
    al, be = sample_params(rng, 2)
    return FaceConfig(*(sample_value(rng) for _ in range(5)), al, be)


# edge functions

@pytest.mark.parametrize("label, x, y, al, be, expected", [
    ("A3d0", 2, 3, 1, 2, -0.25),
    ("A2_00", 5, 3, 7, 4, 1.5),
])
def test_edge_a_examples(label, x, y, al, be, expected):
    assert abs(edge_a(P(label), x, y, al, be) - expected) < 1e-15


@pytest.mark.parametrize("label, x, y, al, be, expected", [
    ("B2_100", 1, 2, 3, 4, 2),
    ("B3_000", 1.3, 0.7, 2, 5, 0.7),
    ("B3_100", 2, 3, 1, 5, -1),
])
def test_edge_b_examples(label, x, y, al, be, expected):
    assert abs(edge_b(P(label), x, y, al, be) - expected) < 1e-15


@pytest.mark.parametrize("label, x, y, al, be, expected", [
    ("C2_100", 1, 2, 3, 4, 4),
    ("C1", 1.3, 0.7, 2, 5, 0.7),
    ("C3_100", 2, 3, 4, 2, 4),
])
def test_edge_c_examples(label, x, y, al, be, expected):
    assert abs(edge_c(P(label), x, y, al, be) - expected) < 1e-15


@pytest.mark.parametrize("eq", MULTIPLICATIVE_A, ids=str)
def test_edge_a_equal_parameters(eq, rng):
    # the tabulated A2_10 function is -1, not 1, at equal parameters
    expected = -1 if eq.label == "A2_10" else 1
    for _ in range(10):
        x, y, al = (sample_value(rng) for _ in range(3))
        assert abs(edge_a(eq, x, y, al, al) - expected) < 1e-12


@pytest.mark.parametrize("eq", MULTIPLICATIVE_A, ids=str)
@given(seed=seeds)
def test_reflection_identity(eq, seed):
    rng = np.random.default_rng(seed)
    x, y = sample_value(rng), sample_value(rng)
    al, be = sample_params(rng, 1)[0]
    assert abs(edge_a(eq, x, y, al, be) * edge_a(eq, x, y, be, al) - 1) < 1e-11


@given(seed=seeds)
def test_reflection_identity_additive(seed):
    rng = np.random.default_rng(seed)
    x, y = sample_value(rng), sample_value(rng)
    al, be = sample_params(rng, 1)[0]
    eq = P("A2_00")
    assert abs(edge_a(eq, x, y, al, be) + edge_a(eq, x, y, be, al)) < 1e-11


def test_wrong_kind_edges_rejected():
    with pytest.raises(ValueError):
        edge_a(P("B2_100"), 1, 2, 3, 4)
    with pytest.raises(ValueError):
        edge_b(P("A3d0"), 1, 2, 3, 4)
    with pytest.raises(ValueError):
        edge_c(P("B2_100"), 1, 2, 3, 4)


# four-leg and affine forms

def test_fourleg_additive_example():
    cfg = FaceConfig(0, 1, 1, 1, 1, ALPHA, BETA)
    assert fourleg_residual(P("A2_00"), cfg) == 0


@pytest.mark.parametrize("eq", MULTIPLICATIVE_A, ids=str)
def test_fourleg_symmetric_legs_cancel(eq, rng):
    for _ in range(10):
        x, p, q = (sample_value(rng) for _ in range(3))
        a, b = sample_params(rng, 1)[0]
        cfg = FaceConfig(x, p, p, q, q, S(a, a), S(b, b))
        assert abs(fourleg_residual(eq, cfg)) < 1e-11


@pytest.mark.parametrize("eq", all_ids(), ids=str)
@given(seed=seeds)
def test_fourleg_vanishes_on_solved_corner(eq, seed):
    cfg = random_cfg(np.random.default_rng(seed))
    cfg = cfg.with_corner("d", solve_corner(eq, cfg, "d"))
    assert abs(fourleg_residual(eq, cfg)) < 1e-9


def test_c1_affine_value():
    # C1 is stored in the form cleared from its four-leg equation with c = y
    cfg = FaceConfig(1, 0, 0, 1, 2, ALPHA, BETA)
    assert affine_eval(P("C1"), cfg) == 3
    expected = (2 - 1) * 1 * 1 + (2 - 3) * 1 - (2 - 5) * 1
    assert affine_eval(P("C1"), cfg) == expected


def test_d1_affine_example():
    cfg = FaceConfig(0.3, 5, 2, 4, 1, ALPHA, BETA)
    assert affine_eval(P("D1"), cfg) == 0


@pytest.mark.parametrize("eq", all_ids(), ids=str)
def test_solver_closure(eq, rng):
    for _ in range(20):
        cfg = random_cfg(rng)
        for which in "abcd":
            solved = cfg.with_corner(which, solve_corner(eq, cfg, which))
            scale = max(abs(affine_eval(eq, cfg.with_corner(which, v))) for v in (0, 1))
            assert abs(affine_eval(eq, solved)) < 1e-10 * max(1.0, scale)


def test_solve_corner_examples():
    cfg = FaceConfig(0, 1, 1, 99, 1, ALPHA, BETA)
    assert abs(solve_corner(P("A2_00"), cfg, "c") - 1) < 1e-14
    cfg = FaceConfig(0.3, 99, 2, 4, 1, ALPHA, BETA)
    assert abs(solve_corner(P("D1"), cfg, "a") - 5) < 1e-14


def test_solve_corner_a4(rng):
    eq = P("A4", 1, 0)
    cfg = random_cfg(rng)
    solved = cfg.with_corner("d", solve_corner(eq, cfg, "d"))
    scale = max(abs(affine_eval(eq, cfg.with_corner("d", v))) for v in (0, 1))
    assert abs(affine_eval(eq, solved)) < 1e-8 * max(scale, 1.0)


def test_degenerate_solve():
    cfg = FaceConfig(0.4, 1, 2, 3, 4, S(2, 2), S(2, 2))
    with pytest.raises(DegenerateLinearSolve):
        solve_corner(P("A2_00"), cfg, "a")


def test_solve_corner_rejects_bad_name():
    with pytest.raises(ValueError):
        solve_corner(P("D1"), FaceConfig(0, 1, 2, 3, 4, ALPHA, BETA), "e")


# coefficients in the face variable

def test_c1_leading_coefficient():
    # leading coefficient of the four-leg C1 form is x_d - x_c
    assert abs(coeff_in_x(P("C1"), (0.3, 0.8, 1, 2), ALPHA, BETA, 2) - 1) < 1e-14
    assert abs(coeff_in_x(P("C1"), (-1.1, 2.4j, 1, 2), S(0.3, 7), S(-2, 1j), 2) - 1) < 1e-14


def test_d1_has_no_x_dependence(rng):
    for _ in range(5):
        corners = [sample_value(rng) for _ in range(4)]
        assert coeff_in_x(P("D1"), corners, ALPHA, BETA, 1) == 0


def test_a2_11_p1_is_q2_variant(rng):
    al, be = sample_params(rng, 2)
    for _ in range(10):
        corners = [sample_value(rng) for _ in range(4)]
        p1 = coeff_in_x(P("A2_11"), corners, al, be, 1)
        q2 = abs_eval(AbsQuadId.Q2, QuadPoint(*corners, al, be), (1, 1))
        assert abs(p1 - q2) < 1e-10 * max(1, abs(q2))


def test_coeff_index_range():
    with pytest.raises(ValueError):
        coeff_in_x(P("A3d0"), (1, 2, 3, 4), ALPHA, BETA, 3)


@pytest.mark.parametrize("eq", all_ids(), ids=str)
def test_coefficients_reproduce_affine(eq, rng):
    for _ in range(10):
        cfg = random_cfg(rng)
        coeffs = x_coefficients(eq, cfg.corners, cfg.alpha, cfg.beta)
        value = np.polyval(coeffs[::-1], cfg.x)
        ref = affine_eval(eq, cfg)
        assert abs(value - ref) < 1e-10 * max(1, abs(ref))


def test_a4_degree_is_stable(rng):
    degrees = set()
    for _ in range(5):
        g2, g3 = sample_value(rng), sample_value(rng)
        cfg = random_cfg(rng)
        degrees.add(probe_x_degree(P("A4", g2, g3), cfg.corners, cfg.alpha, cfg.beta))
    assert len(degrees) == 1 and degrees.pop() > 2


# symmetries

@pytest.mark.parametrize("eq", all_ids(), ids=str)
def test_symmetries_hold(eq, rng):
    for _ in range(5):
        rep = check_symmetries(eq, random_cfg(rng))
        assert rep.passed, rep


def test_symmetry_names_by_kind(rng):
    cfg = random_cfg(rng)
    assert set(check_symmetries(P("A3d1"), cfg).factors) == {"params", "hat_alpha", "hat_beta"}
    assert set(check_symmetries(P("B2_100"), cfg).factors) == {"hat_alpha", "hat_beta"}
    assert set(check_symmetries(P("C2_100"), cfg).factors) == {"hat_beta"}


def test_type_b_fixed_point_is_self_symmetric():
    eq = P("B2_000")
    cfg = FaceConfig(0.7, 1.1, 1.1, 0.4j, 0.4j, S(0.5, 2), S(1.5, 1.5))
    rep = check_symmetries(eq, cfg)
    assert abs(affine_eval(eq, cfg)) < 1e-12 or rep.self_symmetric["hat_beta"]
    assert rep.passed


# helper polynomials

def test_d1_d4():
    assert affine.d1(5, 2, 4, 1) == 0
    assert affine.d4(2, 3, 4, 6) == 0


def test_id_validation():
    with pytest.raises(ValueError):
        EquationId(Kind.A, Family.E1)
    with pytest.raises(ValueError):
        P("A4")
    with pytest.raises(ValueError):
        P("A4", 1, 1 / 27**0.5 * 1)  # singular curve
    assert str(P("A4", 1, 0)).startswith("A4[")
    assert str(P("C3_h_h_0")) == "C3_h_h_0"
    assert P("D1").face_independent


def test_spectral_pair_hat():
    assert S(1, 2).hat() == S(2, 1)
