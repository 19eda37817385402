"""Edge functions a, b, c of the four-leg forms.

Every edge function is a ratio of two polynomials of degree at most one in the
corner variable y, so each is stored as a (numerator, denominator) pair.
"""

from __future__ import annotations

import cmath
from typing import Callable

from .errors import SingularPoint
from .ids import EquationId, Family, Kind
from .numeric import weierstrass_dot, xbar

Leg = tuple[complex, complex]
LegFn = Callable[[complex, complex, complex, complex], Leg]


def elliptic_derivative(t: complex, g2: complex, g3: complex) -> complex:
    """The value of wp' on the curve over t: principal sqrt of 4t^3 - g2 t - g3."""
    return cmath.sqrt(weierstrass_dot(t, g2, g3))


def a4_parts(x, y, al, be, g2, g3):
    """F, G+, G-, S+, S- of the A4 edge function."""
    xd = elliptic_derivative(x, g2, g3)
    ad = elliptic_derivative(al, g2, g3)
    bd = elliptic_derivative(be, g2, g3)
    diff = al - be
    q = (ad + bd) ** 2 - 4 * (al + be) * diff**2
    r = 4 * (ad * be + bd * al) * diff**2 - (ad + bd) * q
    f = (4 * (x + y) * diff**2 + q) * (4 * x * diff**2 - q) ** 2
    g_plus = (4 * xd * diff**3 + r) ** 2
    g_minus = (4 * xd * diff**3 - r) ** 2
    s_plus = xd * (be - al) + x * (ad + bd) - (bd * al + ad * be)
    s_minus = xd * (be - al) - x * (ad + bd) + (bd * al + ad * be)
    return f, g_plus, g_minus, s_plus, s_minus


def _a4(g2, g3) -> LegFn:
    def leg(x, y, al, be):
        f, gp, gm, sp, sm = a4_parts(x, y, al, be, g2, g3)
        return (gp - f) * sm * sm, (gm - f) * sp * sp
    return leg


def _a3d1(x, y, al, be):
    xb = xbar(x)
    return al * al + be * be * xb * xb - 2 * al * be * xb * y, be * be + al * al * xb * xb - 2 * al * be * xb * y


def _a3d0(x, y, al, be):
    return be * x - al * y, al * x - be * y


def _a2_11(x, y, al, be):
    r = cmath.sqrt(x)
    return (r + al - be) ** 2 - y, (r - al + be) ** 2 - y


def _a2_10(x, y, al, be):
    return -x + y + al - be, x - y + al - be


def _a2_00(x, y, al, be):
    return al - be, x - y


def _b3_hh0(x, y, al, be):
    return be * be + al * al * x * x - 2 * al * be * x * y, 1


def _b3_h0h(x, y, al, be):
    xb = xbar(x)
    return al * y - be * xb, al * xb * y - be


def _b3_100(x, y, al, be):
    return be - al * x * y, 1


def _ident(x, y, al, be):
    return y, 1


def _b2_110(x, y, al, be):
    return (x + al - be) ** 2 - y, 1


def _b2_101(x, y, al, be):
    r = cmath.sqrt(x)
    return r + y + al - be, -r + y + al - be


def _b2_100(x, y, al, be):
    return x + y + al - be, 1


def _c3_hh0(x, y, al, be):
    xb = xbar(x)
    return al - be * xb * y, al * xb - be * y


def _c3_h0h(x, y, al, be):
    return al * al / be + be * x * x - 2 * al * x * y, 1


def _c3_100(x, y, al, be):
    return x * y - al / be, 1


def _c2_110(x, y, al, be):
    r = cmath.sqrt(x)
    return -r + y - al + be, r + y - al + be


def _c2_101(x, y, al, be):
    return (x - al + be) ** 2 - y, 1


def _c2_100(x, y, al, be):
    return x + y - al + be, 1


def _c2_000(x, y, al, be):
    return -(y + be), 2 * x


_A_LEGS: dict[str, LegFn] = {
    "A3d1": _a3d1, "A3d0": _a3d0, "A2_11": _a2_11, "A2_10": _a2_10, "A2_00": _a2_00,
}
_B_LEGS: dict[str, LegFn] = {
    "B3_h_h_0": _b3_hh0, "B3_h_0_h": _b3_h0h, "B3_100": _b3_100, "B3_000": _ident,
    "B2_110": _b2_110, "B2_101": _b2_101, "B2_100": _b2_100, "B2_000": _ident, "D1": _ident,
}
_C_LEGS: dict[str, LegFn] = {
    "C3_h_h_0": _c3_hh0, "C3_h_0_h": _c3_h0h, "C3_100": _c3_100, "C3_000": _ident,
    "C2_110": _c2_110, "C2_101": _c2_101, "C2_100": _c2_100, "C2_000": _c2_000, "C1": _ident,
}


def a_leg(eq: EquationId) -> LegFn:
    a = eq.paired_a
    if a.family is Family.E4:
        return _a4(a.elliptic.g2, a.elliptic.g3)
    return _A_LEGS[a.label]


def second_leg(eq: EquationId) -> LegFn:
    """The edge function on the x_c, x_d legs: a, b or c by kind."""
    if eq.kind is Kind.A:
        return a_leg(eq)
    if eq.kind is Kind.B:
        return _B_LEGS[eq.label]
    return _C_LEGS[eq.label]


def first_leg(eq: EquationId) -> LegFn:
    """The edge function on the x_a, x_b legs."""
    return _B_LEGS[eq.label] if eq.kind is Kind.B else a_leg(eq)


def _ratio(leg: Leg) -> complex:
    num, den = leg
    if den == 0:
        raise SingularPoint("edge function denominator vanishes")
    return complex(num / den)


def edge_a(eq: EquationId, x, y, alpha, beta) -> complex:
    if eq.kind is Kind.B:
        raise ValueError("edge_a needs a type-A or type-C id")
    return _ratio(a_leg(eq)(x, y, alpha, beta))


def edge_b(eq: EquationId, x, y, alpha, beta) -> complex:
    if eq.kind is not Kind.B:
        raise ValueError("edge_b needs a type-B id")
    return _ratio(_B_LEGS[eq.label](x, y, alpha, beta))


def edge_c(eq: EquationId, x, y, alpha, beta) -> complex:
    if eq.kind is not Kind.C:
        raise ValueError("edge_c needs a type-C id")
    return _ratio(_C_LEGS[eq.label](x, y, alpha, beta))
