"""IRF Lagrangian sums, their x-derivatives and the derivation cross-checks.

Every Lagrangian here is built from three kernels whose derivatives are
logarithms:

    d/dz Li2(e^z)  = -Log(1 - e^z)
    d/dz gamma(z)  = i (1 + Log(i z))
    d/dz Log(z)    = 1 / z

The IRF sums are coded term by term with the kernels' derivatives, so no
dilogarithm is evaluated on the derivation path.  A ``_Trace`` records each
logarithm argument so that samples near a cut can be rejected.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .catalog import fourleg_residual
from .errors import DomainError, MatchFailed
from .ids import EquationId, FaceConfig, SpectralPair, parse_id
from .numeric import principal_log, xbar

I = 1j
PM = (1, -1)

# cut avoidance: reject Log arguments within this angle of the cut or below this modulus
CUT_ANGLE = 0.1
MIN_MODULUS = 1e-3


class Arithmetic(enum.Enum):
    HYPERBOLIC = "hyperbolic"
    RATIONAL = "rational"
    ALGEBRAIC = "algebraic"


class IrfType(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class _Trace:
    """Logarithm evaluator that remembers how close each argument came to the cut."""

    def __init__(self, guard: bool = True) -> None:
        self.guard = guard

    def log(self, w: complex) -> complex:
        w = complex(w)
        if self.guard and (abs(w) < MIN_MODULUS or abs(abs(cmath.phase(w)) - math.pi) < CUT_ANGLE):
            raise DomainError(f"logarithm argument {w:.4g} is near the cut")
        return principal_log(w)

    def li2(self, z: complex, s: complex) -> complex:
        """d/dx Li2(e^z) where dz/dx = s."""
        return -s * self.log(1 - cmath.exp(z))

    def gam(self, z: complex, s: complex) -> complex:
        """d/dx gamma(z) where dz/dx = s."""
        return s * I * (1 + self.log(I * z))

    def dlog(self, w: complex, s: complex) -> complex:
        """d/dx Log(w) where dw/dx = s."""
        if abs(w) < MIN_MODULUS:
            raise DomainError(f"logarithm argument {w:.4g} is too small")
        return s / w


@dataclass(frozen=True)
class IrfPoint:
    """Face variable, corners and IRF parameters u = (u1, u2), v = (v1, v2)."""

    x: complex
    xa: complex
    xb: complex
    xc: complex
    xd: complex
    u: SpectralPair
    v: SpectralPair


Display = Callable[[_Trace, IrfPoint], complex]


# Hyperbolic case 1: the hatted sums.

def _h1_a(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 8 * p.x
    for c, xi in ((u2 - v1, p.xa), (v2 - u2, p.xb), (v1 - u1, p.xc), (u1 - v2, p.xd)):
        for s1 in PM:
            for s2 in PM:
                out += t.li2(I * c + s1 * p.x + s2 * xi, s1)
    return out


def _h1_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 2 * I * (u1 + u2 - v1 - v2) + 4 * p.x - 2 * I * math.pi
    for c, s1, xi in ((u2 - v1, 1, p.xa), (v2 - u2, -1, p.xb), (v1 - u1, -1, p.xc), (u1 - v2, 1, p.xd)):
        for s2 in PM:
            out += t.li2(I * c + s1 * p.x + s2 * xi, s1)
    return out


def _h1_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = -2 * p.x
    for s1 in PM:
        for s2 in PM:
            out += t.li2(I * (u2 - v1) + s1 * p.x + s2 * p.xa, s1)
            out -= t.li2(I * (u2 - v2) + s1 * p.x + s2 * p.xb, s1)
        out -= t.li2(I * (u1 - v1) + s1 * p.x - p.xc, s1)
        out -= t.li2(I * (v2 - u1) + s1 * p.x + p.xd, s1)
    return out


# Hyperbolic case 2 and the type-A sum shared by cases 3 and 4.

def _h2_a(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 4 * p.x - p.xa - p.xb - p.xc - p.xd
    for c, xi in ((u2 - v1, p.xa), (v2 - u2, p.xb), (v1 - u1, p.xc), (u1 - v2, p.xd)):
        for s in PM:
            out += t.li2(I * c + s * (p.x - xi), s)
    return out


def _h2_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 4 * p.x
    for c, xi in ((u2 - v1, p.xa), (v2 - u2, -p.xb), (v1 - u1, -p.xc), (u1 - v2, p.xd)):
        for s in PM:
            out += t.li2(I * c + s * p.x + xi, s)
    return out


def _h2_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = I * (2 * (math.pi + u1) - v1 - v2) - (2 * p.x + p.xa - p.xb)
    for s in PM:
        out += t.li2(I * (u2 - v1) + s * (p.x - p.xa), s)
        out -= t.li2(I * (u2 - v2) + s * (p.x - p.xb), s)
        out -= t.li2(I * (u1 - v1) + s * p.xc - p.x, -1)
        out -= t.li2(I * (v2 - u1) + s * p.xd + p.x, 1)
    return out


# Hyperbolic case 3.

def _h3_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    return (2 * math.pi * I
            + t.li2(I * (u2 - v1) + p.x + p.xa, 1)
            - t.li2(I * (u2 - v2) + p.x + p.xb, 1)
            - t.li2(I * (u1 - v1) + p.x + p.xc, 1)
            + t.li2(I * (u1 - v2) + p.x + p.xd, 1))


def _h3_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = p.xb - p.xa - I * (v2 - v1)
    for s in PM:
        out += t.li2(I * (u2 - v1) + s * (p.x - p.xa), s)
        out -= t.li2(I * (u2 - v2) + s * (p.x - p.xb), s)
    out += t.li2(I * (v1 - u1) + p.x + p.xc, 1)
    out -= t.li2(I * (v2 - u1) + p.x + p.xd, 1)
    return out


# Hyperbolic case 4.

def _h4_b(t: _Trace, p: IrfPoint) -> complex:
    return p.xb + p.xc - p.xa - p.xd


def _h4_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = p.xb + p.xd - p.xa - p.xc
    for s in PM:
        out += t.li2(I * (u2 - v1) + s * (p.x - p.xa), s)
        out -= t.li2(I * (u2 - v2) + s * (p.x - p.xb), s)
    return out


# Rational case 1: the hatted sums.

def _r1_a(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 0j
    for s in PM:
        out += t.gam(I * (u2 - v1) + s * p.x + p.xa, s) - t.gam(I * (v1 - u2) + s * p.x + p.xa, s)
        out += t.gam(I * (v2 - u2) + p.x + s * p.xb, 1) - t.gam(I * (u2 - v2) + p.x + s * p.xb, 1)
        out += t.gam(I * (v1 - u1) + s * p.x + p.xc, s) - t.gam(I * (u1 - v1) + s * p.x + p.xc, s)
        out += t.gam(I * (u1 - v2) + p.x + s * p.xd, 1) - t.gam(I * (v2 - u1) + p.x + s * p.xd, 1)
    return out


def _r1_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 0j
    for s in PM:
        out += t.gam(I * (u2 - v1) + p.x + s * p.xa, 1)
        out += t.gam(I * (v2 - u2) - p.x + s * p.xb, -1)
        out += t.gam(I * (v1 - u1) - p.x + s * p.xc, -1)
        out += t.gam(I * (u1 - v2) + p.x + s * p.xd, 1)
    return out


def _r1_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 0j
    for s in PM:
        out += t.gam(I * (u2 - v1) + p.x + s * p.xa, 1) - t.gam(I * (v1 - u2) + p.x + s * p.xa, 1)
        out += t.gam(I * (v2 - u2) + p.x + s * p.xb, 1) - t.gam(I * (u2 - v2) + p.x + s * p.xb, 1)
        out -= t.gam(I * (u1 - v1) - p.xc + s * p.x, s)
        out -= t.gam(I * (v2 - u1) + p.xd + s * p.x, s)
    return out


# Rational case 2 and the type-A sum shared by case 3.

def _r2_a(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 0j
    for c, sign, xi in ((u2 - v1, 1, p.xa), (u2 - v2, -1, p.xb), (u1 - v1, -1, p.xc), (u1 - v2, 1, p.xd)):
        out += sign * (t.gam(I * c - p.x + xi, -1) - t.gam(-I * c - p.x + xi, -1))
    return out


def _r2_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = 0j
    for c, xi in ((u2 - v1, p.xa), (v2 - u2, -p.xb), (v1 - u1, -p.xc), (u1 - v2, p.xd)):
        for s in PM:
            out += t.gam(I * c + s * p.x + xi, s)
    return out


def _r2_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = t.gam(I * (u2 - v1) + p.x - p.xa, 1) - t.gam(I * (v1 - u2) + p.x - p.xa, 1)
    out += t.gam(I * (v2 - u2) + p.x - p.xb, 1) - t.gam(I * (u2 - v2) + p.x - p.xb, 1)
    for s in PM:
        out -= t.gam(I * (u1 - v1) - p.x + s * p.xc, -1)
        out -= t.gam(I * (v2 - u1) + p.x + s * p.xd, 1)
    return out


# Rational case 3.

def _r3_b(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    return (t.gam(I * (u2 - v1) + p.x + p.xa, 1)
            + t.gam(I * (v2 - u2) - p.x - p.xb, -1)
            + t.gam(I * (v1 - u1) - p.x - p.xc, -1)
            + t.gam(I * (u1 - v2) + p.x + p.xd, 1))


def _r3_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    out = sum(t.gam(I * (u2 - v1) + s * (p.x - p.xa), s) for s in PM)
    out += t.gam(I * (v2 - u2) + p.x - p.xb, 1) - t.gam(I * (u2 - v2) + p.x - p.xb, 1)
    out -= t.gam(I * (u1 - v1) - p.x - p.xc, -1) + t.gam(I * (v2 - u1) + p.x + p.xd, 1)
    return out


# Algebraic cases.

def _g1_a(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    return sum(k * t.dlog(p.x + xi, 1) for k, xi in
               ((u2 - v1, p.xa), (v2 - u2, p.xb), (v1 - u1, p.xc), (u1 - v2, p.xd)))


def _g1_b(t: _Trace, p: IrfPoint) -> complex:
    return I * (t.log(p.xb) + t.log(p.xc) - t.log(p.xa) - t.log(p.xd))


def _g1_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    return ((v1 - v2 - I * (p.xc - p.xd)) * t.dlog(p.x, 1)
            + 2 * (u2 - v1) * t.dlog(p.x + p.xa, 1) - 2 * (u2 - v2) * t.dlog(p.x + p.xb, 1))


def _g2_b(t: _Trace, p: IrfPoint) -> complex:
    return p.xa - p.xb - p.xc + p.xd


def _g2_c(t: _Trace, p: IrfPoint) -> complex:
    (u1, u2), (v1, v2) = p.u, p.v
    return p.xc - p.xd + 2 * (v1 - u2) * t.dlog(p.x - p.xa, 1) + 2 * (u2 - v2) * t.dlog(p.x - p.xb, 1)


# Edge Lagrangians.  Each entry returns (d/dxi, d/dxj) of the function at (alpha, xi, xj).

class LagKind(enum.Enum):
    L = "L"
    LBAR = "Lbar"
    LHAT = "Lhat"
    LHATBAR = "Lhatbar"
    LAM = "Lam"
    LAMBAR = "Lambar"


Grad = tuple[complex, complex]


def _dli2m(t: _Trace, z: complex) -> complex:
    """d/dz Li2(-e^z)."""
    return -t.log(1 + cmath.exp(z))


def _dgam(t: _Trace, z: complex) -> complex:
    return I * (1 + t.log(I * z))


def _hyp_l(t, al, xi, xj) -> Grad:
    d = _dli2m(t, xi - xj + I * al) - _dli2m(t, xj - xi + I * al) + (xi - xj)
    return d, -d


def _hyp_lhat(t, al, xi, xj) -> Grad:
    di = dj = 0j
    for s1 in PM:
        for s2 in PM:
            k = _dli2m(t, s1 * xi + s2 * xj + I * al)
            di += s1 * k
            dj += s2 * k
    return di + 2 * xi, dj + 2 * xj


def _hyp_lam1(t, al, xi, xj) -> Grad:
    di = dj = 0j
    for s in PM:
        k = _dli2m(t, xi + s * xj + I * al)
        di += k
        dj += s * k
    return di + xi + I * al, dj + xj


def _hyp_lam3(t, al, xi, xj) -> Grad:
    k = _dli2m(t, xi + xj + I * al)
    return k + I * al + 2 * xi, k + I * al + 2 * xj


def _hyp_lam4(t, al, xi, xj) -> Grad:
    return -xj, -xi


def _rat_l(t, al, xi, xj) -> Grad:
    d = _dgam(t, xi - xj + I * al) - _dgam(t, xi - xj - I * al)
    return d, -d


def _rat_lhat(t, al, xi, xj) -> Grad:
    di = dj = 0j
    for s in PM:
        k = _dgam(t, xi + s * xj + I * al) - _dgam(t, xi + s * xj - I * al)
        di += k
        dj += s * k
    return di, dj


def _rat_lam1(t, al, xi, xj) -> Grad:
    p, m = _dgam(t, xi + xj + I * al), _dgam(t, xi - xj + I * al)
    return p + m, p - m


def _rat_lam3(t, al, xi, xj) -> Grad:
    k = _dgam(t, xi + xj + I * al)
    return k, k


def _alg1_lam(t, al, xi, xj) -> Grad:
    return (I * xj - al) / xi, I * t.log(xi)


def _alg1_l(t, al, xi, xj) -> Grad:
    k = -2 * al * t.dlog(xi + xj, 1)
    return k, k


def _alg1_lbar(t, al, xi, xj) -> Grad:
    d = _dgam(t, xi - xj - I * al) - _dgam(t, xj - xi - I * al)
    return d, -d


def _alg2_lam(t, al, xi, xj) -> Grad:
    return I * xj, I * xi


def _alg2_l(t, al, xi, xj) -> Grad:
    d = -2 * I * al * t.dlog(xi - xj, 1)
    return d, -d


def _neg(grad: Grad) -> Grad:
    return -grad[0], -grad[1]


def _reflect_first(fn):
    """F(xi, xj) = G(-xi, xj)."""
    def g(t, al, xi, xj):
        di, dj = fn(t, al, -xi, xj)
        return -di, dj
    return g


def _reflect_both(fn):
    def g(t, al, xi, xj):
        di, dj = fn(t, al, -xi, -xj)
        return -di, -dj
    return g


def _at(fn, shift: Callable[[complex], complex]):
    return lambda t, al, xi, xj: fn(t, shift(al), xi, xj)


def _negated(fn):
    return lambda t, al, xi, xj: _neg(fn(t, al, xi, xj))


_PI = math.pi
_HYP_BAR = (lambda a: _PI - a)
_RAT_BAR = (lambda a: -a)

# Lagrangian families, one per distinct set of edge functions.
LAGRANGIANS: dict[str, dict[LagKind, Callable]] = {
    "hyperbolic-askey": {
        LagKind.L: _hyp_l, LagKind.LBAR: _at(_hyp_l, _HYP_BAR),
        LagKind.LHAT: _hyp_lhat, LagKind.LHATBAR: _at(_hyp_lhat, _HYP_BAR),
        LagKind.LAM: _hyp_lam1, LagKind.LAMBAR: _at(_reflect_first(_hyp_lam1), _HYP_BAR),
    },
    "hyperbolic-barnes1": {
        LagKind.L: _hyp_l, LagKind.LBAR: _at(_hyp_l, _HYP_BAR),
        LagKind.LAM: _hyp_lam3, LagKind.LAMBAR: _negated(_at(_hyp_lam3, lambda a: a - _PI)),
    },
    "hyperbolic-2f1": {
        LagKind.L: _hyp_l, LagKind.LBAR: _at(_hyp_l, _HYP_BAR),
        LagKind.LAM: _hyp_lam4, LagKind.LAMBAR: _negated(_hyp_lam4),
    },
    "rational-wilson": {
        LagKind.L: _rat_l, LagKind.LBAR: _at(_rat_l, _RAT_BAR),
        LagKind.LHAT: _rat_lhat, LagKind.LHATBAR: _at(_rat_lhat, _RAT_BAR),
        LagKind.LAM: _rat_lam1, LagKind.LAMBAR: _at(_reflect_first(_rat_lam1), _RAT_BAR),
    },
    "rational-barnes1": {
        LagKind.L: _rat_l, LagKind.LBAR: _at(_rat_l, _RAT_BAR),
        LagKind.LAM: _rat_lam3, LagKind.LAMBAR: _at(_reflect_both(_rat_lam3), _RAT_BAR),
    },
    "algebraic-2f1": {
        LagKind.L: _alg1_l, LagKind.LBAR: _alg1_lbar,
        LagKind.LAM: _alg1_lam, LagKind.LAMBAR: _negated(_alg1_lam),
    },
    "algebraic-euler": {
        LagKind.L: _alg2_l, LagKind.LBAR: _negated(_alg2_l),
        LagKind.LAM: _alg2_lam, LagKind.LAMBAR: _negated(_alg2_lam),
    },
}


class SumForm(enum.Enum):
    """Which IRF sum: unhatted or hatted, for each equation type."""

    LAG1 = "L"
    LAG2 = "Lhat"
    LAM1 = "Lam"
    LAM2 = "Lamhat"
    XI = "Xi"
    XIHAT = "Xihat"


def irf_sum_dx(t: _Trace, lags: dict, form: SumForm, p: IrfPoint, eta0: float = 0.0) -> complex:
    """d/dx of an IRF sum built from edge Lagrangians, after shifting u1, v1 by ``eta0``."""
    u1, u2 = p.u
    v1, v2 = p.v
    u1, v1 = u1 + eta0, v1 + eta0
    x, xa, xb, xc, xd = p.x, p.xa, p.xb, p.xc, p.xd
    K = LagKind

    def second(kind, al, xi):
        return lags[kind](t, al, xi, x)[1]

    def first(kind, al, xj):
        return lags[kind](t, al, x, xj)[0]

    if form is SumForm.LAG1:
        return (second(K.L, u2 - v1, xa) + second(K.LBAR, u2 - v2, xb)
                + second(K.LBAR, u1 - v1, xc) + second(K.L, u1 - v2, xd))
    if form is SumForm.LAG2:
        return (first(K.LHAT, u2 - v1, xa) + first(K.LHATBAR, u2 - v2, xb)
                + first(K.LHATBAR, u1 - v1, xc) + first(K.LHAT, u1 - v2, xd))
    if form is SumForm.LAM1:
        return (second(K.LAM, u2 - v1, xa) + second(K.LAMBAR, u2 - v2, xb)
                + second(K.LAMBAR, u1 - v1, xc) + second(K.LAM, u1 - v2, xd))
    if form is SumForm.LAM2:
        return (first(K.LAM, u2 - v1, xa) + first(K.LAMBAR, u2 - v2, xb)
                + first(K.LAMBAR, u1 - v1, xc) + first(K.LAM, u1 - v2, xd))
    if form is SumForm.XI:
        return (first(K.LBAR, v1 - u2, xa) + first(K.L, v2 - u2, xb)
                - first(K.LAMBAR, v1 - u1, xc) - first(K.LAM, v2 - u1, xd))
    return (second(K.LBAR, v1 - u2, xa) + second(K.L, v2 - u2, xb)
            - second(K.LAMBAR, v1 - u1, xc) - second(K.LAM, v2 - u1, xd))


# Changes of variables.  f maps type-A vertices, g the vertices that carry the
# other edge kind, h maps the IRF parameters u, v to the catalogue's alpha, beta.

def _identity(x: complex) -> complex:
    return x


def _square(x: complex) -> complex:
    return x * x


def _hyp_param(u: complex) -> complex:
    return cmath.exp(I * u)


def _rat_param(u: complex) -> complex:
    return I * u


def _double(u: complex) -> complex:
    return 2 * u


@dataclass(frozen=True)
class ChangeOfVariables:
    name: str
    f: Callable[[complex], complex]
    g: Callable[[complex], complex]
    h: Callable[[complex], complex]

    def vertex_maps(self, which: IrfType) -> tuple[Callable, tuple[Callable, ...]]:
        """(face map, corner maps a..d) for one equation type."""
        f, g = self.f, self.g
        if which is IrfType.A:
            return f, (f, f, f, f)
        if which is IrfType.B:
            return g, (f, f, f, f)
        return f, (f, f, g, g)


COV_COSH_EXP = ChangeOfVariables("y=cosh x, z=e^x, alpha=e^(iu)", cmath.cosh, cmath.exp, _hyp_param)
COV_EXP_COSH = ChangeOfVariables("y=e^x, z=cosh x, alpha=e^(iu)", cmath.exp, cmath.cosh, _hyp_param)
COV_EXP = ChangeOfVariables("y=e^x, alpha=e^(iu)", cmath.exp, cmath.exp, _hyp_param)
COV_SQUARE_ID = ChangeOfVariables("y=x^2, z=x, alpha=iu", _square, _identity, _rat_param)
COV_ID_SQUARE = ChangeOfVariables("y=x, z=x^2, alpha=iu", _identity, _square, _rat_param)
COV_ID = ChangeOfVariables("y=x, alpha=iu", _identity, _identity, _rat_param)
COV_ID_DOUBLE = ChangeOfVariables("y=x, alpha=2u", _identity, _identity, _double)


@dataclass(frozen=True)
class TypeRow:
    """One catalogue row generated by a case.

    ``scale`` is the factor with exp(scale * d/dx) equal to the four-leg
    ratio (or scale * d/dx equal to the additive four-leg sum).  ``negate``
    lists the corners whose mapped values change sign.
    """

    label: str
    display: Display
    scale: complex = 1
    negate: str = ""

    @property
    def eq(self) -> EquationId:
        return parse_id(self.label)


@dataclass(frozen=True)
class LagrangianCase:
    name: str
    arithmetic: Arithmetic
    family: str
    cov: ChangeOfVariables
    rows: dict[IrfType, TypeRow]
    hatted: bool = False

    @property
    def eta0(self) -> float:
        return math.pi if self.arithmetic is Arithmetic.HYPERBOLIC else 0.0

    @property
    def lagrangians(self) -> dict[LagKind, Callable]:
        return LAGRANGIANS[self.family]


def _rows(a: TypeRow, b: TypeRow, c: TypeRow) -> dict[IrfType, TypeRow]:
    return {IrfType.A: a, IrfType.B: b, IrfType.C: c}


_H, _R, _G = Arithmetic.HYPERBOLIC, Arithmetic.RATIONAL, Arithmetic.ALGEBRAIC

CASES: dict[str, LagrangianCase] = {c.name: c for c in (
    LagrangianCase("hyperbolic1", _H, "hyperbolic-askey", COV_COSH_EXP, _rows(
        TypeRow("A3d1", _h1_a), TypeRow("B3_h_h_0", _h1_b, -1), TypeRow("C3_h_h_0", _h1_c)), hatted=True),
    LagrangianCase("hyperbolic2", _H, "hyperbolic-askey", COV_EXP_COSH, _rows(
        TypeRow("A3d0", _h2_a), TypeRow("B3_h_0_h", _h2_b), TypeRow("C3_h_0_h", _h2_c))),
    LagrangianCase("hyperbolic3", _H, "hyperbolic-barnes1", COV_EXP, _rows(
        TypeRow("A3d0", _h2_a), TypeRow("B3_100", _h3_b, -1), TypeRow("C3_100", _h3_c))),
    LagrangianCase("hyperbolic4", _H, "hyperbolic-2f1", COV_EXP, _rows(
        TypeRow("A3d0", _h2_a), TypeRow("B3_000", _h4_b, -1), TypeRow("C3_000", _h4_c))),
    LagrangianCase("rational1", _R, "rational-wilson", COV_SQUARE_ID, _rows(
        TypeRow("A2_11", _r1_a, -I), TypeRow("B2_110", _r1_b, -I), TypeRow("C2_110", _r1_c, -I)), hatted=True),
    LagrangianCase("rational2", _R, "rational-wilson", COV_ID_SQUARE, _rows(
        TypeRow("A2_10", _r2_a, I), TypeRow("B2_101", _r2_b, -I), TypeRow("C2_101", _r2_c, I))),
    LagrangianCase("rational3", _R, "rational-barnes1", COV_ID, _rows(
        TypeRow("A2_10", _r2_a, I), TypeRow("B2_100", _r3_b, -I), TypeRow("C2_100", _r3_c, I))),
    LagrangianCase("algebraic1", _G, "algebraic-2f1", COV_ID, _rows(
        TypeRow("A2_00", _g1_a, I, "abcd"), TypeRow("B2_000", _g1_b, I), TypeRow("C2_000", _g1_c, I / 2, "ab"))),
    LagrangianCase("algebraic2", _G, "algebraic-euler", COV_ID_DOUBLE, _rows(
        TypeRow("A2_00", _g1_a, 2, "abcd"), TypeRow("D1", _g2_b), TypeRow("C1", _g2_c, -1))),
)}


def get_case(case: LagrangianCase | str) -> LagrangianCase:
    if isinstance(case, LagrangianCase):
        return case
    try:
        return CASES[case]
    except KeyError:
        raise ValueError(f"unknown Lagrangian case {case!r}; expected one of {sorted(CASES)}") from None


def eta0(case: LagrangianCase | str) -> float:
    """Parameter shift: pi for the hyperbolic cases, 0 otherwise."""
    return get_case(case).eta0


def cases_for(eq: EquationId | str) -> list[LagrangianCase]:
    """Every case whose IRF sums generate the catalogue row ``eq``."""
    label = eq.label if isinstance(eq, EquationId) else parse_id(eq).label
    return [c for c in CASES.values() if any(r.label == label for r in c.rows.values())]


@dataclass(frozen=True)
class DerivationContext:
    case: LagrangianCase
    u: SpectralPair
    v: SpectralPair
    corners: tuple[complex, complex, complex, complex]
    x: complex

    @property
    def point(self) -> IrfPoint:
        return IrfPoint(self.x, *self.corners, self.u, self.v)

    def face_config(self, which: IrfType) -> FaceConfig:
        """The catalogue configuration reached through the case's change of variables."""
        row = self.case.rows[which]
        fx, fc = self.case.cov.vertex_maps(which)
        corners = [m(c) for m, c in zip(fc, self.corners)]
        corners = [-y if name in row.negate else y for name, y in zip("abcd", corners)]
        h = self.case.cov.h
        return FaceConfig(fx(self.x), *corners,
                          SpectralPair(h(self.u.a1), h(self.u.a2)), SpectralPair(h(self.v.a1), h(self.v.a2)))


def irf_dx(ctx: DerivationContext, which: IrfType | str, guard: bool = True) -> complex:
    """d/dx of the case's IRF sum for one equation type.

    The sums are the case displays with the parameter shift already applied
    to the first components of u and v.
    """
    which = IrfType(which) if isinstance(which, str) else which
    return ctx.case.rows[which].display(_Trace(guard), ctx.point)


def lagrangian_dx(case: LagrangianCase | str, kind: LagKind | str, alpha: complex, xi: complex, xj: complex,
                  wrt: str = "i", guard: bool = True) -> complex:
    """Partial derivative of one edge Lagrangian of the case, in ``xi`` or ``xj``."""
    lags = get_case(case).lagrangians
    kind = LagKind(kind) if isinstance(kind, str) else kind
    if kind not in lags:
        raise ValueError(f"{get_case(case).name} has no {kind.value} Lagrangian")
    grad = lags[kind](_Trace(guard), alpha, xi, xj)
    return grad[0] if wrt == "i" else grad[1]


def generic_sum_dx(ctx: DerivationContext, which: IrfType, guard: bool = True) -> complex:
    """d/dx of the type-A or type-B IRF sum assembled from the edge Lagrangians."""
    case = ctx.case
    if which is IrfType.A:
        form = SumForm.LAG2 if case.hatted else SumForm.LAG1
    elif which is IrfType.B:
        form = SumForm.LAM2 if case.hatted else SumForm.LAM1
    else:
        raise ValueError("generic sums are cross-checked for type A and type B only")
    return irf_sum_dx(_Trace(guard), case.lagrangians, form, ctx.point, case.eta0)


# Sampling boxes: Re x in [0.2, 0.9] keeps the principal square roots on the
# branch the displays assume.
_X_RE, _X_IM = (0.2, 0.9), 0.6
_U_RE, _U_IM = 1.0, 0.3
_RESAMPLE_BUDGET = 200


def sample_context(case: LagrangianCase | str, rng: np.random.Generator) -> DerivationContext:
    case = get_case(case)

    def xval() -> complex:
        return complex(rng.uniform(*_X_RE), rng.uniform(-_X_IM, _X_IM))

    def uval() -> complex:
        return complex(rng.uniform(-_U_RE, _U_RE), rng.uniform(-_U_IM, _U_IM))

    x, xa, xb, xc, xd = (xval() for _ in range(5))
    return DerivationContext(case, SpectralPair(uval(), uval()), SpectralPair(uval(), uval()), (xa, xb, xc, xd), x)


@dataclass
class CheckReport:
    name: str
    passed: bool
    points: int
    max_error: float
    rel: float
    resampled: int = 0
    cases: list[str] = field(default_factory=list)
    note: str = ""
    worst: dict = field(default_factory=dict)
    errors: list[float] = field(default_factory=list, repr=False)

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "pass": self.passed,
            "points": self.points,
            "max_error": self.max_error,
            "rel": self.rel,
            "resampled": self.resampled,
            "cases": self.cases,
            "note": self.note,
        }


def row_error(ctx: DerivationContext, which: IrfType, guard: bool = True) -> float:
    """Relative mismatch between the exponentiated derivative and the catalogue's four legs."""
    row = ctx.case.rows[which]
    eq = row.eq
    d = irf_dx(ctx, which, guard)
    r = fourleg_residual(eq, ctx.face_config(which))
    if eq.additive:
        lhs, rhs = row.scale * d, r
        return abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
    lhs, rhs = cmath.exp(row.scale * d), r + 1
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs))


def _sampled(case: LagrangianCase, fn: Callable[[DerivationContext], float], n_points: int,
             rng: np.random.Generator) -> tuple[list[tuple[float, DerivationContext]], int]:
    out, skipped = [], 0
    while len(out) < n_points:
        if skipped > _RESAMPLE_BUDGET * n_points:
            raise DomainError(f"{case.name}: could not find {n_points} points away from the cuts")
        ctx = sample_context(case, rng)
        try:
            out.append((fn(ctx), ctx))
        except (DomainError, ZeroDivisionError, OverflowError):
            skipped += 1
    return out, skipped


def _worst(ctx: DerivationContext, err: float) -> dict:
    return {"case": ctx.case.name, "x": ctx.x, "corners": ctx.corners,
            "u": tuple(ctx.u), "v": tuple(ctx.v), "error": err}


def derivation_check(eqid: EquationId | str, n_points: int = 50, seed: int = 0,
                     case: LagrangianCase | str | None = None, rel: float = 1e-9) -> CheckReport:
    """Compare exp(d/dx IRF sum) with the catalogued four-leg form of ``eqid``.

    Every case generating ``eqid`` is checked unless ``case`` picks one.
    """
    eq = parse_id(eqid) if isinstance(eqid, str) else eqid
    chosen = [get_case(case)] if case is not None else cases_for(eq)
    if not chosen:
        raise ValueError(f"{eq}: no non-elliptic Lagrangian case generates this equation")
    rng = np.random.default_rng(seed)
    report = CheckReport(str(eq), True, 0, 0.0, rel, cases=[c.name for c in chosen])
    for c in chosen:
        which = next((w for w, r in c.rows.items() if r.label == eq.label), None)
        if which is None:
            raise ValueError(f"{c.name} does not generate {eq}")
        samples, skipped = _sampled(c, lambda ctx: row_error(ctx, which), n_points, rng)
        report.points += len(samples)
        report.resampled += skipped
        for err, ctx in samples:
            if err > report.max_error or not report.worst:
                report.max_error = max(report.max_error, err)
                report.worst = _worst(ctx, err)
    report.passed = report.max_error <= rel
    if not report.passed:
        raise MatchFailed(f"{eq}: derivative does not reproduce the four-leg form "
                          f"(max error {report.max_error:.3g})", report.worst)
    return report


def case_check(case: LagrangianCase | str, n_points: int = 50, seed: int = 0, rel: float = 1e-9) -> list[CheckReport]:
    """derivation_check for the three rows of one case; failures are reported, not raised."""
    case = get_case(case)
    out = []
    for row in case.rows.values():
        try:
            out.append(derivation_check(row.label, n_points, seed, case, rel))
        except MatchFailed as exc:
            err = exc.worst.get("error", float("inf"))
            out.append(CheckReport(row.label, False, n_points, err, rel, cases=[case.name], worst=exc.worst))
    return out


# Derivative symmetry under the parameter shift: d/dx Lbar_a + d/dx L_(+-eta0 + a)
# lies in (pi i / scale) Z.  The scale undoes the i carried by gamma-based edges.

COVSHIFT_PAIRS: dict[str, tuple[tuple[LagKind, LagKind, complex], ...]] = {
    "hyperbolic-askey": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LHATBAR, LagKind.LHAT, 1),
                         (LagKind.LAMBAR, LagKind.LAM, 1)),
    "hyperbolic-barnes1": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LAMBAR, LagKind.LAM, 1)),
    "hyperbolic-2f1": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LAMBAR, LagKind.LAM, 1)),
    "rational-wilson": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LHATBAR, LagKind.LHAT, 1),
                        (LagKind.LAMBAR, LagKind.LAM, I)),
    "rational-barnes1": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LAMBAR, LagKind.LAM, I)),
    # L is a logarithm and Lbar is gamma-based here, so only the Lambda pair is related
    "algebraic-2f1": ((LagKind.LAMBAR, LagKind.LAM, 1),),
    "algebraic-euler": ((LagKind.LBAR, LagKind.L, 1), (LagKind.LAMBAR, LagKind.LAM, 1)),
}


def covshift_error(family: str, bar: LagKind, plain: LagKind, scale: complex, alpha: complex,
                   xi: complex, xj: complex, wrt: int, sign: int, shift: float, guard: bool = True) -> float:
    """|exp(2 scale (d Lbar_alpha + d L_(sign*shift + alpha))) - 1| for one derivative slot."""
    lags = LAGRANGIANS[family]
    t = _Trace(guard)
    total = lags[bar](t, alpha, xi, xj)[wrt] + lags[plain](t, sign * shift + alpha, xi, xj)[wrt]
    return abs(cmath.exp(2 * scale * total) - 1)


# Three-leg saddle-point equations against their ABS quads.  Each case fixes
# a quad display in (y_a, y_b, y_c, y_d; beta1, beta3), a map x -> y per
# corner, and the x_d-derivative of its three Lagrangian legs.  Parameters
# follow beta1 = -i alpha1, beta3 = -i (alpha1 + alpha3).

class ThreeLegCase(enum.Enum):
    Q2 = "Q2-rational"
    Q1D1 = "Q1d1-rational"
    H2E0 = "H2e0-rational"
    H3E1_A = "H3e1-hyperbolic-a"
    H3E1_B = "H3e1-hyperbolic-b"


def _q2_quad(ya, yb, yc, yd, b1, b3):
    # sign of the parameter term flipped against the display, see the decisions ledger
    return (b1 * (ya - yc) * (yb - yd) - b3 * (ya - yd) * (yb - yc)
            - b1 * b3 * (b1 - b3) * (ya + yb + yc + yd - b1**2 - b3**2 + b1 * b3))


def _q1d1_quad(ya, yb, yc, yd, b1, b3):
    return b1 * (ya - yc) * (yb - yd) - b3 * (ya - yd) * (yb - yc) + b1 * b3 * (b1 - b3)


def _h2e0_quad(ya, yb, yc, yd, b1, b3):
    return (ya - yb) * (yc - yd) + (b1 - b3) * (b1 + b3 - ya - yb - yc - yd)


def _h3e1_a_quad(ya, yb, yc, yd, b1, b3):
    return (ya - yb) * (yc - yd) - (b1 - b3) * (yc + yd - 2 * ya * yb + (b1 + b3) * (ya + yb) - b1**2 - b3**2)


def _h3e1_b_quad(ya, yb, yc, yd, b1, b3):
    return (ya - yb) * (yc - yd) - (b1 - b3) * (ya + yb - 2 * yc * yd + (b1 + b3) * (yc + yd) - b1**2 - b3**2)


def _legs_q2(t: _Trace, xa, xb, xc, xd, a1, a3) -> complex:
    # Lbar_a1(xa, xd) + L_(a1+a3)(xb, xd) + Lbar_a3(xd, xc), L = sum over +-xj of gamma(xi +- xj + i a) - gamma(xi +- xj - i a)
    out = 0j
    for s in PM:
        for al, xi in ((-a1, xa), (a1 + a3, xb)):
            out += t.gam(xi + s * xd + I * al, s) - t.gam(xi + s * xd - I * al, s)
        out += t.gam(xd + s * xc - I * a3, 1) - t.gam(xd + s * xc + I * a3, 1)
    return out


def _legs_q1d1(t: _Trace, xa, xb, xc, xd, a1, a3) -> complex:
    out = 0j
    for al, xi in ((-a1, xa), (a1 + a3, xb)):
        out += t.gam(xi - xd + I * al, -1) - t.gam(xi - xd - I * al, -1)
    return out + t.gam(xd - xc - I * a3, 1) - t.gam(xd - xc + I * a3, 1)


def _legs_h2e0(t: _Trace, xa, xb, xc, xd, a1, a3) -> complex:
    return (t.gam(-xa - xd - I * a1, -1) + t.gam(xb + xd + I * (a1 + a3), 1)
            + t.gam(xd - xc - I * a3, 1) + t.gam(xc - xd - I * a3, -1))


def _legs_h3e1_a(t: _Trace, xa, xb, xc, xd, a1, a3) -> complex:
    out = t.gam(-xa + xd - I * a1, 1) + t.gam(-xa - xd - I * a1, -1)
    out += t.gam(xb + xd + I * (a1 + a3), 1) + t.gam(xb - xd + I * (a1 + a3), -1)
    for s in PM:
        out += t.gam(xd + s * xc - I * a3, 1) + t.gam(-xd + s * xc - I * a3, -1)
    return out


def _legs_h3e1_b(t: _Trace, xa, xb, xc, xd, a1, a3) -> complex:
    out = t.gam(xa - xd - I * a1, -1) + t.gam(-(xa + xd + I * a1), -1)
    out += t.gam(xb + xd + I * (a1 + a3), 1) - t.gam(xb - xd - I * (a1 + a3), -1)
    return out + t.gam(xd - xc - I * a3, 1) + t.gam(xc - xd - I * a3, -1)


@dataclass(frozen=True)
class ThreeLegSpec:
    quad: Callable[..., complex]
    legs: Callable[..., complex]
    squared: str            # corners whose y is x^2
    prescale: complex = 1   # y = prescale * x on the linear corners

    def to_y(self, corner: str, x: complex) -> complex:
        return x * x if corner in self.squared else self.prescale * x

    def from_y(self, corner: str, y: complex) -> complex:
        return cmath.sqrt(y) if corner in self.squared else y / self.prescale


THREE_LEG: dict[ThreeLegCase, ThreeLegSpec] = {
    ThreeLegCase.Q2: ThreeLegSpec(_q2_quad, _legs_q2, "abcd"),
    # y = -i x is the one map under which the display holds as printed
    ThreeLegCase.Q1D1: ThreeLegSpec(_q1d1_quad, _legs_q1d1, "", -I),
    ThreeLegCase.H2E0: ThreeLegSpec(_h2e0_quad, _legs_h2e0, ""),
    ThreeLegCase.H3E1_A: ThreeLegSpec(_h3e1_a_quad, _legs_h3e1_a, "cd"),
    ThreeLegCase.H3E1_B: ThreeLegSpec(_h3e1_b_quad, _legs_h3e1_b, "ab"),
}

# the three-leg sums are i times sums of logarithms
THREE_LEG_SCALE = -I


def parse_three_leg(case: ThreeLegCase | str) -> ThreeLegCase:
    if isinstance(case, ThreeLegCase):
        return case
    key = case.replace("δ", "d").replace("ε", "e")
    for c in ThreeLegCase:
        if c.value.lower() == key.lower() or c.name.lower() == key.lower():
            return c
    raise ValueError(f"unknown three-leg case {case!r}; expected one of {[c.value for c in ThreeLegCase]}")


def rational_params(a1: complex, a3: complex) -> tuple[complex, complex]:
    """beta1 = -i alpha1, beta3 = -i (alpha1 + alpha3)."""
    return -I * a1, -I * (a1 + a3)


def solve_quad_xd(case: ThreeLegCase | str, xa: complex, xb: complex, xc: complex,
                  a1: complex, a3: complex) -> complex:
    """x_d from the quad, which is linear in y_d."""
    spec = THREE_LEG[parse_three_leg(case)]
    b1, b3 = rational_params(a1, a3)
    ya, yb, yc = (spec.to_y(k, v) for k, v in zip("abc", (xa, xb, xc)))
    q0, q1 = spec.quad(ya, yb, yc, 0, b1, b3), spec.quad(ya, yb, yc, 1, b1, b3)
    if abs(q1 - q0) < 1e-12 * max(1.0, abs(q0)):
        raise DomainError("quad is degenerate in y_d")
    return spec.from_y("d", -q0 / (q1 - q0))


def three_leg_error(case: ThreeLegCase | str, xa, xb, xc, xd, a1, a3, guard: bool = True) -> float:
    """|exp(-i * three-leg sum) - 1| at the given point."""
    spec = THREE_LEG[parse_three_leg(case)]
    total = spec.legs(_Trace(guard), xa, xb, xc, xd, a1, a3)
    return abs(cmath.exp(THREE_LEG_SCALE * total) - 1)


def q1d1_exact_point() -> tuple[complex, float]:
    """Quad value and three-leg error at y = (1, 0, 0, 1), beta1 = 2, beta3 = 1."""
    spec = THREE_LEG[ThreeLegCase.Q1D1]
    ys, b1, b3 = (1, 0, 0, 1), 2, 1
    quad = spec.quad(*ys, b1, b3)
    xa, xb, xc, xd = (spec.from_y(k, y) for k, y in zip("abcd", ys))
    a1, a13 = I * b1, I * b3
    return quad, three_leg_error(ThreeLegCase.Q1D1, xa, xb, xc, xd, a1, a13 - a1, guard=False)


def three_leg_check(case: ThreeLegCase | str, n_points: int = 50, seed: int = 0, tol: float = 1e-9,
                    perturb: complex = 0, raise_on_fail: bool = True) -> CheckReport:
    """Solve the quad for x_d at random (x_a, x_b, x_c) and test the saddle-point equation.

    ``perturb`` shifts x_d off the quad solution, as a negative control.
    """
    case = parse_three_leg(case)
    rng = np.random.default_rng(seed)
    report = CheckReport(case.value, True, 0, 0.0, tol)

    def val(im: float) -> complex:
        return complex(rng.uniform(-1, 1), rng.uniform(-im, im))

    errors = []
    while len(errors) < n_points:
        if report.resampled > _RESAMPLE_BUDGET * n_points:
            raise DomainError(f"{case.value}: could not find {n_points} points away from the cuts")
        xa, xb, xc = val(1), val(1), val(1)
        a1, a3 = val(0.5), val(0.5)
        try:
            xd = solve_quad_xd(case, xa, xb, xc, a1, a3) + perturb
            err = three_leg_error(case, xa, xb, xc, xd, a1, a3)
        except (DomainError, ZeroDivisionError, OverflowError):
            report.resampled += 1
            continue
        errors.append(err)
        if err >= report.max_error:
            report.max_error = err
            report.worst = {"x": (xa, xb, xc, xd), "alpha": (a1, a3), "error": err}
    if case is ThreeLegCase.Q1D1 and perturb == 0:
        quad, err = q1d1_exact_point()
        errors.append(max(err, abs(quad)))
        report.note = f"exact point: quad {abs(quad):.1e}, three-leg {err:.1e}"
        report.max_error = max(report.max_error, errors[-1])
    report.points = len(errors)
    report.errors = errors
    report.passed = report.max_error <= tol
    if raise_on_fail and not report.passed:
        raise MatchFailed(f"{case.value}: three-leg equation fails on the quad (max error {report.max_error:.3g})",
                          report.worst)
    return report


def d1_link(xa: complex, xb: complex, xc: complex, xd: complex) -> tuple[complex, complex]:
    """(algebraic case 2 type-B derivative, D1 polynomial) at the same corners."""
    from .affine import d1
    p = IrfPoint(0j, xa, xb, xc, xd, SpectralPair(0j, 0j), SpectralPair(0j, 0j))
    return _g2_b(_Trace(False), p), d1(xa, xb, xc, xd)
