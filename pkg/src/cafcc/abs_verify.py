"""ABS quad polynomials, the x-coefficient correspondence and the discriminant test.

Quad polynomials are handled as evaluation closures.  Partial derivatives
come from exact polynomial interpolation in one variable, which is enough
because every polynomial here has degree at most four in each variable.
"""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from . import affine
from .catalog import coeff_in_x
from .checker import sample_value
from .errors import MatchFailed
from .ids import EquationId, Family, Kind, SpectralPair, parse_id

CORNER_INDEX = {"a": 0, "b": 1, "c": 2, "d": 3}


class AbsQuadId(enum.Enum):
    Q1D0 = "Q1d0"
    Q1D1 = "Q1d1"
    Q2 = "Q2"
    Q3D0 = "Q3d0"
    Q3D1 = "Q3d1"
    Q4 = "Q4"
    H1E0 = "H1e0"
    H1E1 = "H1e1"
    H2E0 = "H2e0"
    H2E1 = "H2e1"
    H3 = "H3"
    D4 = "D4"
    D1 = "D1"
    LINEAR = "L"


Param = complex | SpectralPair


@dataclass(frozen=True)
class QuadPoint:
    xa: complex
    xb: complex
    xc: complex
    xd: complex
    alpha: Param = 0j
    beta: Param = 0j

    @property
    def corners(self) -> tuple[complex, complex, complex, complex]:
        return (self.xa, self.xb, self.xc, self.xd)


# Displays with scalar parameters, corners (a, b, c, d).

def _q1(a, b, c, d, al, be, delta=0):
    return al * (a - c) * (b - d) - be * (a - b) * (c - d) - delta * al * be * (al - be)


def _q11_three_leg(ya, yb, yc, yd, b1, b3):
    return b1 * (ya - yc) * (yb - yd) - b3 * (ya - yd) * (yb - yc) + b1 * b3 * (b1 - b3)


def _q2_three_leg(ya, yb, yc, yd, b1, b3):
    return (b1 * (ya - yc) * (yb - yd) - b3 * (ya - yd) * (yb - yc)
            + b1 * b3 * (b1 - b3) * (ya + yb + yc + yd - b1**2 - b3**2 + b1 * b3))


def _q3(a, b, c, d, al, be, delta):
    return (4 * be * (al**2 - 1) * (a * b + c * d) - 4 * al * (be**2 - 1) * (a * c + b * d)
            - 4 * (al**2 - be**2) * (a * d + b * c) - delta * (al**2 - 1) * (be**2 - 1) * (al / be - be / al))


def _h1e0(a, b, c, d, al, be):
    return (a - d) * (b - c) - 2 * (al - be)


def _h1e1(a, b, c, d, al, be):
    return (a - d) * (b - c) - (al - be) * (b + c)


def _h2e0(a, b, c, d, al, be):
    return (a - d) * (b - c) - (al - be) * (a + b + c + d) - al**2 + be**2


def _h2e1(a, b, c, d, al, be):
    return ((a - d) * (b - c) + (al**2 - be**2) * (a + d)
            - (al - be) * (b + c - 2 * a * d - al**2 - be**2))


def _h3_d1_e1(a, b, c, d, al, be):
    return 2 * al * (a * c + b * d) - 2 * be * (a * b + c * d) - (al / be - be / al) * (1 + al * be * a * d)


def _h3_single_flag(a, b, c, d, al, be):
    return al**2 * be * (a * c + b * d) - al * be**2 * (a * b + c * d) + be**2 - al**2


def _h3_d0_e0(a, b, c, d, al, be):
    return al * (a * c + b * d) - be * (a * b + c * d)


_H3_DISPLAYS = {(1, 1): _h3_d1_e1, (1, 0): _h3_single_flag, (0, 1): _h3_single_flag, (0, 0): _h3_d0_e0}

_SCALAR = {
    AbsQuadId.Q1D0: lambda a, b, c, d, al, be: _q1(a, b, c, d, al, be),
    AbsQuadId.Q1D1: _q11_three_leg,
    AbsQuadId.Q2: _q2_three_leg,
    AbsQuadId.Q3D0: lambda a, b, c, d, al, be: _q3(a, b, c, d, al, be, 0) / 4,
    AbsQuadId.Q3D1: lambda a, b, c, d, al, be: _q3(a, b, c, d, al, be, 1),
    AbsQuadId.H1E0: _h1e0,
    AbsQuadId.H1E1: _h1e1,
    AbsQuadId.H2E0: _h2e0,
    AbsQuadId.H2E1: _h2e1,
    AbsQuadId.D4: lambda a, b, c, d, al, be: affine.d4(a, b, c, d),
    AbsQuadId.D1: lambda a, b, c, d, al, be: affine.d1(a, b, c, d),
}

# default delta flags of the four-parameter variants
_FOUR_PARAM_FLAGS = {
    AbsQuadId.Q1D0: (0, 0),
    AbsQuadId.Q1D1: (1, 0),
    AbsQuadId.Q2: (1, 1),
    AbsQuadId.Q3D0: (0,),
    AbsQuadId.Q3D1: (1,),
    AbsQuadId.H1E1: (0, 0, 0),
    AbsQuadId.H2E0: (1, 0, 0),
    AbsQuadId.H2E1: (1, 1, 0),
    AbsQuadId.H3: (0, 0, 0),
}


def abs_eval(qid: AbsQuadId, p: QuadPoint, flags: Sequence | None = None) -> complex:
    """Value of quad polynomial ``qid`` at ``p``.

    Scalar parameters select the displayed ABS forms; Q1d1 and Q2 use the
    three-leg labelling (y_a..y_d, beta_1 = alpha, beta_3 = beta).  For H3
    ``flags`` is (delta, epsilon).  SpectralPair parameters select the
    four-parameter variants, with ``flags`` the delta tuple.
    """
    a, b, c, d = p.corners
    if qid is AbsQuadId.Q4:
        raise ValueError("Q4 is identified through discriminant_r, not evaluated")
    if qid is AbsQuadId.LINEAR:
        al, be = _as_pair(p.alpha), _as_pair(p.beta)
        return complex(affine.lin(p.corners, (*al, *be)))
    if isinstance(p.alpha, SpectralPair) or isinstance(p.beta, SpectralPair):
        return _four_param(qid, p, flags)
    al, be = complex(p.alpha), complex(p.beta)
    if qid is AbsQuadId.H3:
        key = tuple(int(f) for f in (flags or (0, 0)))
        if key not in _H3_DISPLAYS:
            raise ValueError(f"H3 flags must be two of 0/1, got {flags!r}")
        return complex(_H3_DISPLAYS[key](a, b, c, d, al, be))
    return complex(_SCALAR[qid](a, b, c, d, al, be))


def _as_pair(v: Param) -> tuple[complex, complex]:
    return tuple(v) if isinstance(v, SpectralPair) else (complex(v), 0j)


def _four_param(qid: AbsQuadId, p: QuadPoint, flags) -> complex:
    a1, a2 = _as_pair(p.alpha)
    b1, b2 = _as_pair(p.beta)
    xs = p.corners
    if qid is AbsQuadId.H1E0:
        return complex(affine.h1_poly(*xs, a1, a2, b1, b2))
    if qid in (AbsQuadId.D4, AbsQuadId.D1):
        return abs_eval(qid, QuadPoint(*xs))
    fl = tuple(flags) if flags is not None else _FOUR_PARAM_FLAGS[qid]
    if qid in (AbsQuadId.Q3D0, AbsQuadId.Q3D1):
        return complex(affine.q3_poly(*xs, a1, a2, b1, b2, *fl))
    if qid in (AbsQuadId.Q1D0, AbsQuadId.Q1D1, AbsQuadId.Q2):
        return complex(affine.q2_poly(*xs, a1, a2, b1, b2, *fl))
    if qid is AbsQuadId.H3:
        return complex(affine.h3_poly(*xs, a1, a2, b1, b2, *fl))
    return complex(affine.h2_poly(*xs, a1, a2, b1, b2, *fl))


def abs_list_eval(qid: AbsQuadId, p: QuadPoint, delta: int = 0, epsilon: int = 0) -> complex:
    """The ABS-list normalization with (x, x1, x2, x12) = (xa, xb, xc, xd), p = alpha, q = beta.

    Differs from the displays of ``abs_eval`` for Q1d1 and Q2 by the sign of
    the parameter-only terms relative to the corner terms.
    """
    x, x1, x2, x12 = p.corners
    pp, q = complex(p.alpha), complex(p.beta)
    core = pp * (x - x2) * (x1 - x12) - q * (x - x1) * (x2 - x12)
    if qid is AbsQuadId.Q1D0:
        return complex(core)
    if qid is AbsQuadId.Q1D1:
        return complex(core + pp * q * (pp - q))
    if qid is AbsQuadId.Q2:
        return complex(core + pp * q * (pp - q) * (x + x1 + x2 + x12) - pp * q * (pp - q) * (pp**2 - pp * q + q**2))
    if qid in (AbsQuadId.Q3D0, AbsQuadId.Q3D1):
        dl = 1 if qid is AbsQuadId.Q3D1 else 0
        return complex((q**2 - pp**2) * (x * x12 + x1 * x2) + q * (pp**2 - 1) * (x * x1 + x2 * x12)
                       - pp * (q**2 - 1) * (x * x2 + x1 * x12)
                       - dl * (pp**2 - q**2) * (pp**2 - 1) * (q**2 - 1) / (4 * pp * q))
    if qid is AbsQuadId.H3:
        return complex(pp * (x * x1 + x2 * x12) - q * (x * x2 + x1 * x12)
                       + (pp**2 - q**2) * (delta + epsilon * x1 * x2 / (pp * q)))
    raise ValueError(f"no ABS-list normalization implemented for {qid.value}")


# Substitutions from P1 to the target polynomial.

@dataclass(frozen=True)
class Substitution:
    """New corner k takes sign * (old corner source[k]); parameters from tokens.

    Parameter tokens are "alpha", "beta" or a numeric literal.
    """

    corners: tuple[tuple[str, int], ...]
    params: tuple[str, str, str, str]

    def apply(self, xs: Sequence[complex], al: complex, be: complex):
        named = dict(zip("abcd", xs))
        corners = tuple(sign * named[src] for src, sign in self.corners)
        vals = tuple(al if t == "alpha" else be if t == "beta" else complex(t) for t in self.params)
        return corners, SpectralPair(vals[0], vals[1]), SpectralPair(vals[2], vals[3])

    def describe(self) -> str:
        parts = []
        for dst, (src, sign) in zip("abcd", self.corners):
            if (src, sign) != (dst, 1):
                parts.append(f"x_{dst}->{'-' if sign < 0 else ''}x_{src}")
        names = ("alpha1", "alpha2", "beta1", "beta2")
        parts += [f"{n}->{t}" for n, t in zip(names, self.params)]
        return ", ".join(parts)


def _sub(corners: str, params: tuple[str, str, str, str]) -> Substitution:
    out = []
    for tok in corners.split():
        sign = -1 if tok.startswith("-") else 1
        out.append((tok.lstrip("-"), sign))
    return Substitution(tuple(out), params)


Target = Callable[[complex, complex, complex, complex, complex, complex], complex]


@dataclass(frozen=True)
class P1Case:
    label: str
    target: str
    literal_sub: Substitution
    literal_target: Target
    sub: Substitution
    target_fn: Target
    note: str = ""

    @property
    def literal(self) -> bool:
        return self.sub == self.literal_sub and self.target_fn is self.literal_target


def _display(qid: AbsQuadId, flags=None, order: str = "abcd") -> Target:
    idx = [CORNER_INDEX[ch] for ch in order]

    def f(a, b, c, d, al, be):
        xs = (a, b, c, d)
        return abs_eval(qid, QuadPoint(*(xs[i] for i in idx), al, be), flags)
    return f


def _abs_list(qid: AbsQuadId) -> Target:
    def f(a, b, c, d, al, be):
        return abs_list_eval(qid, QuadPoint(a, b, c, d, al, be))
    return f


def _halved(target: Target) -> Target:
    def f(a, b, c, d, al, be):
        return target(a, b, c, d, be / 2, al / 2)
    return f


def _a_sub(one: str) -> Substitution:
    return _sub("a -b c d", ("beta", one, "alpha", one))


def _c_sub_paper(one: str) -> Substitution:
    return _sub("c -b a d", (one, "alpha", "beta", "beta"))


def _c_sub(one: str) -> Substitution:
    return _sub("c -b a d", (one, "beta", "alpha", "beta"))


_C_NOTE = ("alpha2 and beta1 exchanged against the stated substitution; "
           "with beta1 = beta2 every delta-term of the four-parameter form vanishes")


def _q1_display_delta1(a, b, c, d, al, be):
    return _q1(a, b, c, d, al, be, delta=1)


def _q2_display(a, b, c, d, al, be):
    return (al * (a - c) * (b - d) - be * (a - b) * (c - d)
            - al * be * (al - be) * (a + b + c + d - al**2 + al * be - be**2))


P1_CASES: dict[str, P1Case] = {
    c.label: c
    for c in [
        P1Case("A3d1", "Q3d1", _a_sub("1"), _display(AbsQuadId.Q3D1), _a_sub("1"), _display(AbsQuadId.Q3D1)),
        P1Case("A3d0", "Q3d0", _a_sub("1"), _display(AbsQuadId.Q3D0), _a_sub("1"), _display(AbsQuadId.Q3D0)),
        P1Case("A2_11", "Q2", _a_sub("0"), _q2_display, _a_sub("0"), _abs_list(AbsQuadId.Q2),
               "target in the ABS-list normalization; the display flips the sign of the parameter terms"),
        P1Case("A2_10", "Q1d1", _a_sub("0"), _q1_display_delta1, _a_sub("0"), _abs_list(AbsQuadId.Q1D1),
               "target in the ABS-list normalization; the display flips the sign of the parameter term"),
        P1Case("A2_00", "Q1d0", _a_sub("0"), _display(AbsQuadId.Q1D0), _a_sub("0"), _display(AbsQuadId.Q1D0)),
        P1Case("C3_h_h_0", "H3_d1_e1", _c_sub_paper("1"), _display(AbsQuadId.H3, (1, 1)), _c_sub("1"),
               _display(AbsQuadId.H3, (1, 1)), _C_NOTE),
        P1Case("C3_h_0_h", "H3_d1_e1", _c_sub_paper("1"), _display(AbsQuadId.H3, (1, 1), "badc"), _c_sub("1"),
               _display(AbsQuadId.H3, (1, 1), "badc"), _C_NOTE),
        P1Case("C3_100", "H3_d1_e0", _c_sub_paper("1"), _display(AbsQuadId.H3, (1, 0)), _c_sub("1"),
               _display(AbsQuadId.H3, (1, 0)), _C_NOTE),
        P1Case("C3_000", "H3_d0_e0", _c_sub_paper("1"), _display(AbsQuadId.H3, (0, 0)), _c_sub("1"),
               _display(AbsQuadId.H3, (0, 0)), _C_NOTE),
        P1Case("C2_110", "H2e1", _c_sub_paper("0"), _display(AbsQuadId.H2E1), _c_sub("0"),
               _display(AbsQuadId.H2E1), _C_NOTE),
        P1Case("C2_101", "H2e1", _c_sub_paper("0"), _display(AbsQuadId.H2E1, None, "badc"), _c_sub("0"),
               _display(AbsQuadId.H2E1, None, "badc"), _C_NOTE),
        P1Case("C2_100", "H2e0", _c_sub_paper("0"), _display(AbsQuadId.H2E0), _c_sub("0"),
               _display(AbsQuadId.H2E0), _C_NOTE),
        P1Case("C2_000", "H1e1", _c_sub_paper("0"), _display(AbsQuadId.H1E1), _c_sub("0"),
               _display(AbsQuadId.H1E1), _C_NOTE),
        P1Case("C1", "H1e0", _sub("c -b -a d", ("0", "alpha", "beta", "beta")), _display(AbsQuadId.H1E0),
               _c_sub("0"), _halved(_display(AbsQuadId.H1E0)),
               _C_NOTE + "; x_c is not negated and the display parameters are (beta/2, alpha/2), "
               "from the c-leg normalization of the table form"),
    ]
}


@dataclass
class MatchReport:
    eq: str
    target: str
    substitution: str
    literal: bool
    matched: bool
    constants: list[complex] = field(default_factory=list)
    spread: float = 0.0
    points: int = 0
    note: str = ""
    worst: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "eq": self.eq,
            "target": self.target,
            "substitution": self.substitution,
            "literal": self.literal,
            "match": self.matched,
            "constants": [[c.real, c.imag] for c in self.constants],
            "spread": self.spread,
            "points": self.points,
            "note": self.note,
        }


def _p1(eq: EquationId, corners, alpha: SpectralPair, beta: SpectralPair) -> complex:
    return coeff_in_x(eq, corners, alpha, beta, 1)


def verify_p1(eq: EquationId | str, n_points: int = 200, seed: int = 0, param_draws: int = 3,
              rel: float = 1e-9, literal: bool = False) -> MatchReport:
    """Check that P1 of ``eq``, after the case substitution, is proportional to its ABS target.

    Parameters are drawn ``param_draws`` times; for each draw the ratio
    target / P1 must be constant over ``n_points`` random corner points.
    ``literal`` uses the substitution and display exactly as stated with
    the equation; the default uses the amended case table.
    """
    eq = parse_id(eq) if isinstance(eq, str) else eq
    if eq.kind is Kind.B or eq.family is Family.E4:
        raise ValueError(f"{eq}: verify_p1 covers the non-elliptic type-A and type-C equations")
    case = P1_CASES[eq.label]
    sub, target = (case.literal_sub, case.literal_target) if literal else (case.sub, case.target_fn)
    rng = np.random.default_rng(seed)
    constants, spread, worst = [], 0.0, {}
    for _ in range(param_draws):
        al, be = _distinct_pair(rng)
        ratios = []
        for _ in range(n_points):
            xs = [sample_value(rng) for _ in range(4)]
            corners, alpha, beta = sub.apply(xs, al, be)
            p1 = _p1(eq, corners, alpha, beta)
            t = target(*xs, al, be)
            ratios.append((t / p1 if p1 != 0 else complex("inf"), xs))
        r0 = ratios[0][0]
        constants.append(r0)
        for r, xs in ratios:
            s = abs(r - r0) / max(abs(r0), 1e-300) if np.isfinite(r) else float("inf")
            if not np.isfinite(r0) or abs(r0) < 1e-12:
                s = float("inf")
            if s > spread or not worst:
                spread = max(spread, s)
                worst = {"corners": xs, "alpha": al, "beta": be, "ratio": r, "reference": r0}
    matched = spread <= rel
    report = MatchReport(str(eq), case.target, sub.describe(), literal or case.literal, matched, constants,
                         spread, n_points * param_draws, "" if literal else case.note, worst)
    if not matched:
        raise MatchFailed(f"{eq}: P1 is not proportional to {case.target} (spread {spread:.3g})", worst)
    return report


def _distinct_pair(rng: np.random.Generator) -> tuple[complex, complex]:
    while True:
        al, be = sample_value(rng), sample_value(rng)
        if abs(al - be) >= 0.05 and abs(al + be) >= 0.05:
            return al, be


def h3_single_flag_labels(n_points: int = 50, seed: int = 0, rel: float = 1e-9) -> list[tuple[int, int]]:
    """Which ABS-list H3 flags (delta, epsilon) the single-flag H3 display matches.

    The display is compared with the ABS-list form under the corner order
    (x, x1, x2, x12) = (a, c, b, d) and the parameters (-1/beta, -1/alpha).
    """
    rng = np.random.default_rng(seed)
    found = []
    for flags in ((1, 0), (0, 1)):
        ratios = []
        for _ in range(n_points):
            a, b, c, d = (sample_value(rng) for _ in range(4))
            al, be = _distinct_pair(rng)
            disp = _h3_single_flag(a, b, c, d, al, be)
            std = abs_list_eval(AbsQuadId.H3, QuadPoint(a, c, b, d, -1 / be, -1 / al), *flags)
            ratios.append(disp / std / (al * be) ** 2)
        r = np.array(ratios)
        if np.all(np.abs(r - r[0]) <= rel * abs(r[0])):
            found.append(flags)
    return found


# Polynomial handles.

@functools.lru_cache(maxsize=None)
def _derivative_weights(degree: int, order: int) -> np.ndarray:
    """Weights w with sum w_j f(t_j) = f^(order)(0) for polynomials of this degree."""
    nodes = np.arange(degree + 1) - degree // 2
    vander = np.vander(nodes.astype(float), increasing=True).T
    rhs = np.zeros(degree + 1)
    rhs[order] = float(np.prod(np.arange(1, order + 1)))
    return nodes, np.linalg.solve(vander, rhs)


@dataclass(frozen=True)
class PolyHandle:
    """A polynomial in (x_a, x_b, x_c, x_d) given by evaluation, of degree <= ``degree`` per variable."""

    fn: Callable[[tuple[complex, ...]], complex]
    degree: int

    def __call__(self, xs: Sequence[complex]) -> complex:
        return complex(self.fn(tuple(xs)))

    def partial(self, k: int | str, order: int = 1) -> "PolyHandle":
        k = CORNER_INDEX[k] if isinstance(k, str) else k
        if order > self.degree:
            return PolyHandle(lambda xs: 0j, self.degree)
        nodes, w = _derivative_weights(self.degree, order)

        def f(xs):
            total = 0j
            for t, wt in zip(nodes, w):
                shifted = list(xs)
                shifted[k] = xs[k] + t
                total += wt * self.fn(tuple(shifted))
            return total
        # degree is a per-variable bound, so it is unchanged in the other variables
        return PolyHandle(f, self.degree)


_ML_NODES = (0.31 + 0.17j, 1.13 - 0.42j)


def multilinear(fn: Callable[[tuple[complex, ...]], complex],
                nodes: tuple[complex, complex] = _ML_NODES) -> PolyHandle:
    """Interpolate a polynomial that is affine in each variable from its 16 values on nodes^4.

    Generic complex nodes keep clear of special points of the sampled function.
    """
    n0, n1 = nodes
    table = np.zeros((2,) * 4, dtype=complex)
    for idx in itertools.product((0, 1), repeat=4):
        table[idx] = fn(tuple(nodes[i] for i in idx))

    def f(xs):
        out = table
        for x in xs:
            t = (x - n0) / (n1 - n0)
            out = out[0] * (1 - t) + out[1] * t
        return complex(out)
    return PolyHandle(f, 1)


def p1_handle(eq: EquationId, alpha: SpectralPair, beta: SpectralPair) -> PolyHandle:
    """P1 of ``eq`` at fixed parameters, as an interpolated multilinear handle."""
    return multilinear(lambda xs: coeff_in_x(eq, xs, alpha, beta, 1))


def display_handle(qid: AbsQuadId, alpha: Param, beta: Param, flags=None) -> PolyHandle:
    return PolyHandle(lambda xs: abs_eval(qid, QuadPoint(*xs, alpha, beta), flags), 1)


def biquadratic(p: PolyHandle, i: int | str, j: int | str) -> PolyHandle:
    """d_i P d_j P - P d_i d_j P."""
    i = CORNER_INDEX[i] if isinstance(i, str) else i
    j = CORNER_INDEX[j] if isinstance(j, str) else j
    if i == j:
        raise ValueError("biquadratic needs two distinct variables")
    di, dj = p.partial(i), p.partial(j)
    dij = di.partial(j)
    return PolyHandle(lambda xs: di(xs) * dj(xs) - p(xs) * dij(xs), 2 * p.degree)


def discriminant_r(p: PolyHandle, k: int | str, pair: tuple[int | str, int | str] | None = None) -> PolyHandle:
    """(d_l P^{ij})^2 - 2 P^{ij} d_l^2 P^{ij}, with {i, j, k, l} = {a, b, c, d}.

    ``pair`` picks (i, j); by default the first two of the remaining variables.
    """
    k = CORNER_INDEX[k] if isinstance(k, str) else k
    rest = [m for m in range(4) if m != k]
    if pair is None:
        i, j = rest[0], rest[1]
    else:
        i, j = (CORNER_INDEX[v] if isinstance(v, str) else v for v in pair)
        if k in (i, j) or i == j:
            raise ValueError("pair must be two distinct variables other than k")
    (l,) = [m for m in rest if m not in (i, j)]
    pij = biquadratic(p, i, j)
    dl, dll = pij.partial(l), pij.partial(l, 2)
    return PolyHandle(lambda xs: dl(xs) ** 2 - 2 * pij(xs) * dll(xs), 2 * pij.degree)


def degree_in(p: PolyHandle, k: int | str, at: Sequence[complex], nodes: int = 16, rel: float = 1e-9,
              atol: float = 1e-12) -> int:
    """Degree of ``p`` in variable ``k`` with the others held at ``at``.

    Coefficients come from an FFT on the unit circle; those below ``rel`` of
    the largest, or below ``atol``, count as zero.  The zero polynomial has
    degree 0.
    """
    k = CORNER_INDEX[k] if isinstance(k, str) else k
    ts = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    vals = []
    for t in ts:
        xs = list(at)
        xs[k] = t
        vals.append(p(xs))
    coeffs = np.abs(np.fft.fft(np.array(vals)) / nodes)
    top = coeffs.max()
    if top <= atol or not np.isfinite(top):
        return 0
    return int(np.nonzero(coeffs > max(rel * top, atol))[0].max())


def a4_discriminant_degrees(g2: complex, g3: complex, seed: int = 0) -> list[int]:
    """Degree of r_k in x_k for k = a..d, for A4's P1 at random parameters."""
    rng = np.random.default_rng(seed)
    eq = parse_id("A4", g2, g3)
    pairs = [SpectralPair(sample_value(rng), sample_value(rng)) for _ in range(2)]
    p1 = p1_handle(eq, *pairs)
    at = [sample_value(rng) for _ in range(4)]
    return [degree_in(discriminant_r(p1, k), k, at) for k in range(4)]
