"""Complex scalar kernel: logarithm, gamma-type Lagrangian kernel, dilogarithm,
the x-bar map, the Weierstrass cubic and the tolerance policy."""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass

from .errors import DomainError

PI2_6 = math.pi**2 / 6

# Bernoulli numbers B_2..B_40 (odd ones beyond B_1 vanish).
_BERNOULLI = {
    2: 1 / 6, 4: -1 / 30, 6: 1 / 42, 8: -1 / 30, 10: 5 / 66, 12: -691 / 2730,
    14: 7 / 6, 16: -3617 / 510, 18: 43867 / 798, 20: -174611 / 330,
    22: 854513 / 138, 24: -236364091 / 2730, 26: 8553103 / 6,
    28: -23749461029 / 870, 30: 8615841276005 / 14322,
    32: -7709321041217 / 510, 34: 2577687858367 / 6,
    36: -26315271553053477373 / 1919190, 38: 2929993913841559 / 6,
    40: -261082718496449122051 / 13530,
}
# Coefficients B_n / (n+1)! for the series in u = -Log(1-z).
_BERNOULLI_COEFFS = [(n, b / math.factorial(n + 1)) for n, b in sorted(_BERNOULLI.items())]


def principal_log(z: complex) -> complex:
    """Log z with imaginary part in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("principal_log(0) is undefined")
    w = cmath.log(z)
    # cmath returns -pi for negative reals carrying a -0.0 imaginary part
    if w.imag == -math.pi:
        w = complex(w.real, math.pi)
    return w


def gamma_fn(z: complex, strict: bool = False) -> complex:
    """gamma(z) = i z Log(i z).

    On the cut (i z negative real) the principal value Im Log = pi is used;
    ``strict`` raises DomainError there instead.
    """
    z = complex(z)
    if z == 0:
        return 0j
    iz = 1j * z
    if strict and iz.imag == 0 and iz.real < 0:
        raise DomainError(f"gamma_fn: i*z = {iz} lies on the logarithm cut")
    return iz * principal_log(iz)


def gamma_fn_dz(z: complex) -> complex:
    """d/dz gamma(z) = i (1 + Log(i z))."""
    iz = 1j * complex(z)
    if iz.imag == 0 and iz.real <= 0:
        raise DomainError(f"gamma_fn_dz: i*z = {iz} lies on the logarithm cut")
    return 1j * (1 + principal_log(iz))


def _li2_series(z: complex) -> complex:
    total = 0j
    term = z
    k = 1
    while True:
        contrib = term / (k * k)
        total += contrib
        if abs(contrib) < 1e-17 * max(abs(total), 1e-300):
            return total
        k += 1
        term *= z
        if k > 200:
            return total


def _li2_bernoulli(z: complex) -> complex:
    u = -principal_log(1 - z)
    total = u - u * u / 4
    u2 = u * u
    power = u
    for n, coeff in _BERNOULLI_COEFFS:
        power *= u2
        contrib = coeff * power
        total += contrib
        if abs(contrib) < 1e-17 * abs(total):
            break
    return total


def dilog(z: complex) -> complex:
    """Li2(z) on the principal sheet, cut along [1, inf).

    Power series on |z| <= 0.5, reflection z -> 1 - z near 1, inversion z -> 1/z
    outside the unit disk and the Bernoulli series in -Log(1-z) on the rest.
    """
    z = complex(z)
    if z.imag == 0 and z.real >= 1:
        if z.real == 1:
            return complex(PI2_6)
        raise DomainError(f"dilog: {z} lies on the cut [1, inf)")
    if abs(z) <= 0.5:
        return _li2_series(z)
    if abs(1 - z) < 0.5:
        return PI2_6 - principal_log(z) * principal_log(1 - z) - _li2_series(1 - z)
    if abs(z) > 1:
        lmz = principal_log(-z)
        return -PI2_6 - 0.5 * lmz * lmz - dilog(1 / z)
    return _li2_bernoulli(z)


def dilog_exp_dz(z: complex) -> complex:
    """d/dz Li2(-e^z) = -Log(1 + e^z)."""
    return -principal_log(1 + cmath.exp(z))


def xbar(x: complex) -> complex:
    """x + sqrt(x^2 - 1) with the principal square root."""
    x = complex(x)
    return x + cmath.sqrt(x * x - 1)


def weierstrass_dot(x: complex, g2: complex, g3: complex) -> complex:
    """The Weierstrass cubic 4x^3 - g2 x - g3."""
    return 4 * x**3 - g2 * x - g3


@dataclass(frozen=True)
class Tolerance:
    """Mixed absolute/relative closeness test."""

    abs_tol: float = 1e-9
    rel_tol: float = 1e-9

    def __post_init__(self) -> None:
        if self.abs_tol < 0 or self.rel_tol < 0:
            raise ValueError("tolerances must be non-negative")

    def close(self, a: complex, b: complex) -> bool:
        return abs(a - b) <= self.abs_tol + self.rel_tol * max(abs(a), abs(b))

    @classmethod
    def parse(cls, text: str) -> "Tolerance":
        """Parse "1e-9" (both parts) or "abs,rel"."""
        parts = [float(p) for p in text.split(",")]
        if len(parts) == 1:
            return cls(parts[0], parts[0])
        if len(parts) == 2:
            return cls(parts[0], parts[1])
        raise ValueError(f"cannot parse tolerance {text!r}")

    @classmethod
    def default(cls) -> "Tolerance":
        env = os.environ.get("CAFCC_DEFAULT_TOL")
        return cls.parse(env) if env else cls()


def rel_diff(a: complex, b: complex) -> float:
    """|a - b| scaled by max(1, |a|, |b|)."""
    return abs(a - b) / max(1.0, abs(a), abs(b))
