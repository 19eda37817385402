"""Affine-linear polynomials of the catalogued equations.

Each function takes the face value x, the corners xa..xd and the parameter
components (a1, a2) and (b1, b2) as plain complex numbers.
"""

from __future__ import annotations

from fractions import Fraction

from .edges import a4_parts, elliptic_derivative


def d1(xa, xb, xc, xd):
    return xa - xb - xc + xd


def d4(xa, xb, xc, xd):
    return xa * xd - xb * xc


def lin(xs, cs):
    return sum(x * c for x, c in zip(xs, cs))


def theta(a1, a2, b1, b2):
    return (a1 - a2) * (b1 - b2)


def phi(a1, a2, b1, b2):
    return a1 + a2 - b1 - b2


def _pw(base, e):
    """base**e with the convention that a zero exponent gives 1."""
    return 1 if e == 0 else base ** int(e)


def _f(d) -> float:
    return float(Fraction(d))


# four-parameter ABS-type polynomials

def q3_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta):
    dl = _f(delta)
    return (
        dl / 4 * theta(a1**2, a2**2, b1**2, b2**2) * (b1 * b2 / (a1 * a2) - a1 * a2 / (b1 * b2))
        + b1 * b2 * (a1**2 - a2**2) * d4(xa, xb, xd, xc)
        + a1 * a2 * (b1**2 - b2**2) * d4(xa, xd, xc, xb)
        - (a1**2 * a2**2 - b1**2 * b2**2) * d4(xa, xb, xc, xd)
    )


def q2_rho(a1, a2, b1, b2):
    p = phi(a1, a2, b1, b2)
    return (
        p * (a2 * (b2 - b1) + a1 * (b1 + b2)) - 2 * (a1 * a2 * (a1 - b1) + b1 * b2 * (a2 - b2)),
        p * (a2 * (b2 - b1) - a1 * (b1 + b2)) + 2 * (a1 * a2 * (a1 - b2) + b1 * b2 * (a2 - b1)),
        p * (a1 * (b1 - b2) - a2 * (b1 + b2)) + 2 * (a1 * a2 * (a2 - b1) + b1 * b2 * (a1 - b2)),
        p * (a1 * (b1 - b2) + a2 * (b1 + b2)) - 2 * (a1 * a2 * (a2 - b2) + b1 * b2 * (a1 - b1)),
    )


def q2_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2):
    d1_, d2_ = _f(delta1), _f(delta2)
    th, ph = theta(a1, a2, b1, b2), phi(a1, a2, b1, b2)
    out = (
        (a1 - a2) * d4(xa, xb, xd, xc)
        + (b1 - b2) * d4(xa, xd, xc, xb)
        - ph * d4(xa, xb, xc, xd)
    )
    if d2_:
        out += d2_ * lin((xa, xb, xc, xd), q2_rho(a1, a2, b1, b2))
    bracket = theta(a1, -a2, b1, -b2) - phi(a1**2, a2**2, -b1**2, -b2**2)
    out += d1_ * th * ph * _pw(bracket, delta2)
    return out


def h3_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    return (
        b1 * b2 * d4(xa, xb, xd, xc)
        - a2**2 * d4(xa, xb, xc, xd)
        + (b2 / b1 - b1 / b2) * (d1_ * a1 * a2 + a2 * b1 * b2 / a1 * (d2_ * xc * xd - d3_ * xa * xb))
    )


def h2_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    phi1 = phi(a1, a1, b1, b2)
    phi2 = phi(a2, a2, b1, b2)
    return (
        (xb - xa) * phi2 * _pw(phi1, delta3)
        + (xa + xb) * (xc - xd)
        - d1_ * (b1 - b2) * (phi1 * _pw(-b1 - b2, delta2 + delta3) - (xc + xd) * _pw(phi1, delta2))
        + 2 * d2_ * ((b2 - b1) * (xc * xd - b1 * b2 + a1**2) + (a2 - b1) * (a2 - b2) * (xc - xd))
        + 2 * d3_ * (b1 - b2) * (xa * xb - a1**2 - a2 * (a2 - b1 - b2))
    )


def h1_poly(xa, xb, xc, xd, a1, a2, b1, b2):
    return 2 * phi(b1, b2, a2, a2) - (xa + xb) * (xc + xd)


# type A

def a4_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, g2, g3):
    """The A4 product form divided by wp'(x).

    The product form is odd under wp'(x) -> -wp'(x); dividing by wp'(x) leaves
    a polynomial in x.
    """
    def parts(y, al, be):
        f, gp, gm, sp, sm = a4_parts(x, y, al, be, g2, g3)
        return gp - f, gm - f, sp, sm

    pb, mb, spb, smb = parts(xb, a2, b2)
    pc, mc, spc, smc = parts(xc, a1, b1)
    pa, ma, spa, sma = parts(xa, a2, b1)
    pd, md, spd, smd = parts(xd, a1, b2)
    first = pb * pc * ma * md * (smb * smc * spa * spd) ** 2
    second = mb * mc * pa * pd * (spb * spc * sma * smd) ** 2
    xdot = elliptic_derivative(x, g2, g3)
    if xdot == 0:
        # odd function of xdot: use the derivative limit via symmetric difference
        raise ZeroDivisionError("A4 affine form evaluated on a branch point of the curve")
    return (first - second) / xdot


def a3_rho_gamma(a1, a2, b1, b2):
    rho = (
        a1 * b2 * (a2**2 - b1**2),
        a1 * b1 * (b2**2 - a2**2),
        a2 * b2 * (b1**2 - a1**2),
        a2 * b1 * (a1**2 - b2**2),
    )
    gam = (
        (a1**2 - b1**2) * (a2**2 - b2**2) * (a1 / b2 - b2 / a1),
        (a1**2 - b2**2) * (a2**2 - b1**2) * (b1 / a1 - a1 / b1),
        (a1**2 - b2**2) * (a2**2 - b1**2) * (b2 / a2 - a2 / b2),
        (a1**2 - b1**2) * (a2**2 - b2**2) * (a2 / b1 - b1 / a2),
    )
    return rho, gam


def _reciprocal_lin(xa, xb, xc, xd, c1, c2, c3, c4):
    """xa xb xc xd * L(1/xd, 1/xc, 1/xb, 1/xa; c1..c4) without division."""
    return c1 * xa * xb * xc + c2 * xa * xb * xd + c3 * xa * xc * xd + c4 * xb * xc * xd


def a3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta):
    rho, gam = a3_rho_gamma(a1, a2, b1, b2)
    corners = (xa, xb, xc, xd)
    return (
        lin(corners, rho) * x * x
        + q3_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta) * x
        - _reciprocal_lin(xa, xb, xc, xd, rho[3], rho[2], rho[1], rho[0])
        + _f(delta) / 4 * lin(corners, gam)
    )


def a2_rho_gamma(a1, a2, b1, b2):
    rho = (
        (b1 - a1) * (b2 - a2) * (b2 - a1),
        (a1 - b2) * (a2 - b1) * (a1 - b1),
        (a1 - b2) * (a2 - b1) * (a2 - b2),
        (b1 - a1) * (b2 - a2) * (b1 - a2),
    )
    gam = (
        a1 * (b1 + b2) - a2 * (b1 - b2) - a1**2 - b2**2,
        a1 * (b1 + b2) - a2 * (b2 - b1) - a1**2 - b1**2,
        a2 * (b1 + b2) - a1 * (b1 - b2) - a2**2 - b2**2,
        a2 * (b1 + b2) - a1 * (b2 - b1) - a2**2 - b1**2,
    )
    return rho, gam


# Which gamma multiplies each rho in the delta1 term of A2 (index into gamma).
A2_GAMMA_SLOTS = (0, 1, 2, 3)


def a2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2):
    d1_, d2_ = _f(delta1), _f(delta2)
    th, ph = theta(a1, a2, b1, b2), phi(a1, a2, b1, b2)
    corners = (xa, xb, xc, xd)
    rho, gam = a2_rho_gamma(a1, a2, b1, b2)
    out = (lin(corners, (a2 - b1, b2 - a2, b1 - a1, a1 - b2)) + d2_ * th * ph) * x * x
    out += q2_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2) * x
    if d1_:
        coeffs = [r * _pw(gam[s], delta2) for r, s in zip(rho, A2_GAMMA_SLOTS)]
        out += d1_ * lin(corners, coeffs)
    if d2_:
        out += d2_ * (
            (a1 - a2) * ((a1 - b1) * (a2 - b1) * xb * xd - (a1 - b2) * (a2 - b2) * xa * xc)
            + (b1 - b2) * ((a2 - b1) * (a2 - b2) * xc * xd - (a1 - b1) * (a1 - b2) * xa * xb)
            + ph * ((a2 - b1) * (a1 - b2) * xb * xc - (a1 - b1) * (a2 - b2) * xa * xd)
            + (a1 - b1) * (a2 - b1) * (a1 - b2) * (a2 - b2) * ph * th
        )
    out += _reciprocal_lin(xa, xb, xc, xd, b2 - a1, a1 - b1, a2 - b2, b1 - a2)
    return out


# type B

def b3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    """The B3 Laurent polynomial multiplied through by x."""
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    corners = (xa, xb, xc, xd)
    return (
        d2_ * lin(corners, (a1 / b2, -a1 / b1, -a2 / b2, a2 / b1)) * x * x
        - d2_ / 2 * theta(a1**2, a2**2, b1**2, b2**2) / (a1 * a2 * b1 * b2) * x
        + d3_ * (xa * xb * a2 * (xd / b2 - xc / b1) + xc * xd * a1 * (xa / b1 - xb / b2))
        + d1_ * lin(corners, (b2 / a1, -b1 / a1, -b2 / a2, b1 / a2))
        - d4(xa, xb, xc, xd) * x
    )


def b2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    th, ph = theta(a1, a2, b1, b2), phi(a1, a2, b1, b2)
    corners = (xa, xb, xc, xd)
    out = d1_ * d1(xa, xb, xc, xd) * x * _pw(-x, delta2)
    out += (d3_ - 2 * d2_) * ph * th * _pw(x, delta2)
    if d1_:
        out += d1_ * (
            (1 - d3_) * lin(corners, (a1 - b2, b1 - a1, b2 - a2, a2 - b1)) * _pw(-2 * x, delta2)
            - th
            * _pw(2 * (x * x + (a1 * a2 + b1 * b2)) - theta(a1, -a2, b1, -b2), delta2)
            * _pw(d1(-xa, xb, xc, -xd), delta3)
        )
    out -= (d2_ + d3_) * lin(corners, ((a1 - b2) ** 2, -(a1 - b1) ** 2, -(a2 - b2) ** 2, (a2 - b1) ** 2))
    if d3_:
        out += d3_ * (
            xb * xc * (xa + xd)
            - xa * xd * (xb + xc)
            - d4(xa, xb, xd, xc) * (a1 - a2)
            - d4(xa, xc, xd, xb) * (b1 - b2)
        )
    out += d4(xa, xb, xc, xd) * _pw(phi(b1, b2, a1, a2), delta3)
    return out


def d1_affine(x, xa, xb, xc, xd, a1, a2, b1, b2):
    return d1(xa, xb, xc, xd)


# type C

def c3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    lead = a2 * (b1 * xd - b2 * xc) - d3_ / a1 * (a2**2 * (b1 * xb - b2 * xa) + b1 * b2 * (b1 * xa - b2 * xb))
    return (
        lead * x * x
        + h3_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3) * x
        + a2 * xa * xb * (b2 * xd - b1 * xc)
        + d1_ * (a1 * (b1 * xb - b2 * xa) + a1 * a2**2 * (xa / b2 - xb / b1))
        + d2_ / 2 * (
            a2 * (a2 / b1 - b1 / a2) * (a2 / b2 - b2 / a2) * (b2 * xd - b1 * xc)
            + 2 * xc * xd / a1 * (b1 * b2 * (b1 * xb - b2 * xa) + a2**2 * (b1 * xa - b2 * xb))
        )
    )


def c2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3):
    d1_, d2_, d3_ = _f(delta1), _f(delta2), _f(delta3)
    ph = phi(a1, a2, b1, b2)
    phi1 = phi(a1, a1, b1, b2)
    phi2 = phi(a2, a2, b1, b2)
    p1d3 = _pw(phi1, delta3)
    lead = (b1 - b2) * p1d3 - xc + xd + 2 * d3_ * ((a2 - b1) * xa - (a2 - b2) * xb)
    out = lead * x * x
    out += h2_poly(xa, xb, xc, xd, a1, a2, b1, b2, delta1, delta2, delta3) * x
    out += xa * xb * ((b2 - b1) * p1d3 + xd - xc)
    if d1_:
        out += d1_ * (
            (a2 - b1) * xb * xd * _pw(2 * (a1 - xc) - a2 - b1, delta2)
            - (a2 - b2) * xa * xc * _pw(2 * (a1 - xd) - a2 - b2, delta2)
            - (a2 - b2) * xa * xd * _pw(2 * (a1 - b1) + a2 - b2, delta2)
            + (a2 - b1) * xb * xc * _pw(2 * (a1 - b2) + a2 - b1, delta2)
            + phi1 * (b1 * xb - b2 * xa + a2 * (xa - xb)) * _pw(-b1 - b2, delta2 + delta3)
            + (a2 - b1) * (a2 - b2) * (xc - xd) * _pw((a2 - b1) * (b2 - a2) - (b1 - b2) ** 2, delta2)
            + (a2 - b1) * (a2 - b2) * (b1 - b2)
            * _pw(b1 * b2 - a1 * a2 + (2 * a1 - a2) * ph, delta2)
            * p1d3
        )
    if d2_:
        out += d2_ * (
            2 * (a2 - b1) * (a2 - b2) * (b1 - b2) * xc * xd
            + (b1 - b2) * (a1**2 + a2**2 - a2 * (b1 + b2)) * (xa + xb)
            + phi2 * (a1**2 - b1 * b2) * (xa - xb)
            - (a2 - b1) * (a2 - b2) * (b1 - b2) * phi1 * (xc + xd)
        )
    out += 2 * d3_ * (a1**2 - b1 * b2) * (b1 * xb - b2 * xa + a2 * (xa - xb))
    return out


def c1_affine(x, xa, xb, xc, xd, a1, a2, b1, b2):
    """C1 cleared of denominators from its additive four-leg form with c = y."""
    return (
        (xd - xc) * (x - xa) * (x - xb)
        + (a2 - b1) * (x - xb)
        - (a2 - b2) * (x - xa)
    )
