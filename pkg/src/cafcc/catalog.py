"""Catalogue operations: four-leg residuals, affine forms, corner solves, symmetries."""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

import numpy as np

from . import affine
from .edges import edge_a, edge_b, edge_c, first_leg, second_leg
from .errors import DegenerateLinearSolve, SingularPoint
from .ids import EquationId, FaceConfig, Family, Kind, SpectralPair

CORNERS = ("a", "b", "c", "d")

# |lambda| below this fraction of max(|lambda|, |mu|, 1) counts as a vanishing coefficient
DEGENERACY_THRESHOLD = 1e-8

__all__ = [
    "CORNERS",
    "SymmetryReport",
    "affine_eval",
    "check_symmetries",
    "coeff_in_x",
    "corner_coefficients",
    "edge_a",
    "edge_b",
    "edge_c",
    "fourleg_residual",
    "solve_corner",
    "x_degree",
]


def _raw(eq: EquationId, x, xa, xb, xc, xd, a1, a2, b1, b2) -> complex:
    d = eq.deltas
    if eq.kind is Kind.A:
        if eq.family is Family.E4:
            g = eq.elliptic
            return affine.a4_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, g.g2, g.g3)
        if eq.family is Family.E3:
            return affine.a3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)
        return affine.a2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)
    if eq.kind is Kind.B:
        if eq.family is Family.E1:
            return affine.d1_affine(x, xa, xb, xc, xd, a1, a2, b1, b2)
        if eq.family is Family.E3:
            return affine.b3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)
        return affine.b2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)
    if eq.family is Family.E1:
        return affine.c1_affine(x, xa, xb, xc, xd, a1, a2, b1, b2)
    if eq.family is Family.E3:
        return affine.c3_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)
    return affine.c2_affine(x, xa, xb, xc, xd, a1, a2, b1, b2, *d)


def affine_eval(eq: EquationId, cfg: FaceConfig) -> complex:
    """Value of the affine-linear polynomial of ``eq`` at ``cfg``."""
    a1, a2 = cfg.alpha
    b1, b2 = cfg.beta
    return complex(_raw(eq, cfg.x, *cfg.corners, a1, a2, b1, b2))


def fourleg_residual(eq: EquationId, cfg: FaceConfig) -> complex:
    """Ratio minus one for multiplicative forms, signed leg sum for additive ones."""
    a1, a2 = cfg.alpha
    b1, b2 = cfg.beta
    outer, inner = first_leg(eq), second_leg(eq)
    legs = (
        outer(cfg.x, cfg.xa, a2, b1),
        outer(cfg.x, cfg.xb, a2, b2),
        inner(cfg.x, cfg.xc, a1, b1),
        inner(cfg.x, cfg.xd, a1, b2),
    )
    if any(den == 0 for _, den in legs):
        raise SingularPoint(f"{eq}: edge function denominator vanishes")
    la, lb, lc, ld = (num / den for num, den in legs)
    if eq.additive:
        return complex(la + ld - lb - lc)
    if lb * lc == 0:
        raise SingularPoint(f"{eq}: four-leg denominator vanishes")
    return complex(la * ld / (lb * lc) - 1)


def corner_coefficients(eq: EquationId, cfg: FaceConfig, which: str) -> tuple[complex, complex]:
    """(lambda, mu) with affine_eval = lambda * x_which + mu."""
    mu = affine_eval(eq, cfg.with_corner(which, 0))
    lam = affine_eval(eq, cfg.with_corner(which, 1)) - mu
    return lam, mu


def solve_corner(eq: EquationId, cfg: FaceConfig, which: str) -> complex:
    """Solve the affine polynomial for corner ``which``; the current value of that corner is ignored."""
    if which not in CORNERS:
        raise ValueError(f"corner must be one of {CORNERS}, got {which!r}")
    lam, mu = corner_coefficients(eq, cfg, which)
    if abs(lam) < DEGENERACY_THRESHOLD * max(abs(lam), abs(mu), 1.0):
        raise DegenerateLinearSolve(f"{eq}: coefficient of x_{which} vanishes ({abs(lam):.3g})")
    return -mu / lam


# Degree in x used for interpolation; the A4 value is found by probing and pinned here.
_SMALL_DEGREE = 2
A4_DEGREE = 18
_A4_NODES = 32


def x_degree(eq: EquationId) -> int:
    return A4_DEGREE if eq.family is Family.E4 else _SMALL_DEGREE


@functools.lru_cache(maxsize=None)
def _integer_nodes(n: int) -> tuple[np.ndarray, np.ndarray]:
    k = np.arange(1, n + 2) // 2
    nodes = np.where(np.arange(n + 1) % 2 == 1, k, -k).astype(float)
    return nodes, np.linalg.inv(np.vander(nodes, increasing=True))


def _unit_circle_nodes(m: int) -> np.ndarray:
    return np.exp(2j * np.pi * np.arange(m) / m)


def x_coefficients(eq: EquationId, corners, alpha: SpectralPair, beta: SpectralPair) -> np.ndarray:
    """All coefficients P_0..P_n of the affine polynomial as a polynomial in x."""
    a1, a2 = alpha
    b1, b2 = beta
    if eq.family is Family.E4:
        # roots of unity keep the degree-18 interpolation well conditioned
        nodes = _unit_circle_nodes(_A4_NODES)
        vals = np.array([_raw(eq, t, *corners, a1, a2, b1, b2) for t in nodes], dtype=complex)
        return (np.fft.fft(vals) / _A4_NODES)[: A4_DEGREE + 1]
    nodes, inv = _integer_nodes(_SMALL_DEGREE)
    vals = np.array([_raw(eq, t, *corners, a1, a2, b1, b2) for t in nodes], dtype=complex)
    return inv @ vals


def coeff_in_x(eq: EquationId, corners, alpha: SpectralPair, beta: SpectralPair, i: int) -> complex:
    """The coefficient P_i of x**i in the affine polynomial."""
    n = x_degree(eq)
    if not 0 <= i <= n:
        raise ValueError(f"{eq}: coefficient index {i} outside 0..{n}")
    return complex(x_coefficients(eq, corners, alpha, beta)[i])


def probe_x_degree(eq: EquationId, corners, alpha, beta, nodes: int = 64, rel: float = 1e-11) -> int:
    """Highest power of x with a coefficient above ``rel`` of the largest one."""
    a1, a2 = alpha
    b1, b2 = beta
    t = _unit_circle_nodes(nodes)
    vals = np.array([_raw(eq, s, *corners, a1, a2, b1, b2) for s in t], dtype=complex)
    c = np.abs(np.fft.fft(vals) / nodes)
    return int(np.nonzero(c > rel * c.max())[0].max())


# Symmetry identities: each maps cfg to a transformed cfg with A(transformed) = -A(cfg).

def _swap_ad_params(cfg: FaceConfig) -> FaceConfig:
    return FaceConfig(cfg.x, cfg.xd, cfg.xb, cfg.xc, cfg.xa, cfg.beta, cfg.alpha)


def _hat_alpha(cfg: FaceConfig) -> FaceConfig:
    return FaceConfig(cfg.x, cfg.xc, cfg.xd, cfg.xa, cfg.xb, cfg.alpha.hat(), cfg.beta)


def _hat_beta(cfg: FaceConfig) -> FaceConfig:
    return FaceConfig(cfg.x, cfg.xb, cfg.xa, cfg.xd, cfg.xc, cfg.alpha, cfg.beta.hat())


SYMMETRIES = {
    "params": _swap_ad_params,
    "hat_alpha": _hat_alpha,
    "hat_beta": _hat_beta,
}
_BY_KIND = {
    Kind.A: ("params", "hat_alpha", "hat_beta"),
    Kind.B: ("hat_alpha", "hat_beta"),
    Kind.C: ("hat_beta",),
}


@dataclass
class SymmetryReport:
    eq: str
    factors: dict[str, complex] = field(default_factory=dict)
    constant: dict[str, bool] = field(default_factory=dict)
    self_symmetric: dict[str, bool] = field(default_factory=dict)

    def sign_ok(self, name: str, rel: float = 1e-9) -> bool:
        return self.constant[name] and abs(self.factors[name] + 1) <= rel

    @property
    def passed(self) -> bool:
        return all(self.self_symmetric[n] or self.sign_ok(n) for n in self.factors)


def _factor(eq, cfg, name):
    lhs = affine_eval(eq, cfg)
    rhs = affine_eval(eq, SYMMETRIES[name](cfg))
    return lhs, rhs


def check_symmetries(eq: EquationId, cfg: FaceConfig, rel: float = 1e-9) -> SymmetryReport:
    """Check the sign/permutation identities of ``eq``'s kind.

    Each factor rhs/lhs is estimated at ``cfg`` and at a second corner sample
    (corners rotated and rescaled) and must agree between the two; the
    expected factor is -1.
    """
    report = SymmetryReport(str(eq))
    alt = cfg.with_corners(cfg.xb * 1.3 + 0.2j, cfg.xc * 0.7 - 0.1, cfg.xd * 1.1j + 0.3, cfg.xa * 0.9 + 0.25)
    for name in _BY_KIND[eq.kind]:
        lhs, rhs = _factor(eq, cfg, name)
        scale = max(abs(lhs), abs(rhs), 1e-300)
        if abs(lhs) <= 1e-12 * scale and abs(rhs) <= 1e-12 * max(scale, 1.0):
            report.factors[name] = complex("nan")
            report.constant[name] = False
            report.self_symmetric[name] = True
            continue
        if lhs == 0:
            report.factors[name] = complex("inf")
            report.constant[name] = False
            report.self_symmetric[name] = False
            continue
        f1 = rhs / lhs
        lhs2, rhs2 = _factor(eq, alt, name)
        f2 = rhs2 / lhs2 if lhs2 != 0 else complex("inf")
        report.factors[name] = f1
        report.constant[name] = abs(f1 - f2) <= rel * max(abs(f1), abs(f2), 1.0)
        report.self_symmetric[name] = False
    return report
