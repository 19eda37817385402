"""Consistency around a face-centered cube.

The fourteen equations live on the unit cell with corner vertices
x_a..x_f, y_0, z_0 and face vertices y_1..y_3, z_1..z_3.  Given
y_0..y_3, x_b, x_d and three parameter pairs, six solving steps fill in
the rest; the unknowns solved more than once must agree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .catalog import solve_corner
from .errors import DegenerateLinearSolve, DegenerateSuite
from .ids import EquationId, FaceConfig, SpectralPair, SuiteId
from .numeric import Tolerance, rel_diff

RETRY_BUDGET = 16
MIN_PARAM_GAP = 0.05
INIT_NAMES = ("y0", "y1", "y2", "y3", "xb", "xd")
FACE_VERTICES = ("y1", "y2", "y3", "z1", "z2", "z3")
CORNER_VERTICES = ("y0", "z0", "xa", "xb", "xc", "xd", "xe", "xf")


@dataclass(frozen=True)
class Equation:
    """One equation of the cell: centre, corners (a, b, c, d) and parameter pairs."""

    eq: EquationId
    center: str
    corners: tuple[str, str, str, str]
    alpha: SpectralPair
    beta: SpectralPair

    def solve(self, values: dict[str, complex], unknown: str) -> complex:
        which = "abcd"[self.corners.index(unknown)]
        fill = [0j if v == unknown else values[v] for v in self.corners]
        cfg = FaceConfig(values[self.center], *fill, self.alpha, self.beta)
        return solve_corner(self.eq, cfg, which)


EquationSystem = dict[str, Equation]


def build_system(suite: SuiteId, alpha: SpectralPair, beta: SpectralPair, gamma: SpectralPair,
                 corrupt: str | None = None) -> EquationSystem:
    """The fourteen equations keyed by their centre vertex.

    ``corrupt`` names one centre whose equation gets a wrong parameter pair:
    for corner equations the beta component of the first pair is switched,
    for face equations the first pair is hatted.  Used as a negative control.
    """
    eq_a, eq_b, eq_c = suite.equations
    a1, a2 = alpha
    b1, b2 = beta
    g1, g2 = gamma
    sp = SpectralPair
    system = {
        "y1": Equation(eq_a, "y1", ("xf", "y0", "xa", "xb"), alpha, gamma),
        "y2": Equation(eq_b, "y2", ("y0", "xd", "xb", "xc"), alpha, beta),
        "y3": Equation(eq_b, "y3", ("xf", "xe", "y0", "xd"), gamma, beta),
        "z1": Equation(eq_a, "z1", ("xe", "xd", "z0", "xc"), alpha, gamma),
        "z2": Equation(eq_b, "z2", ("xf", "xe", "xa", "z0"), alpha, beta),
        "z3": Equation(eq_b, "z3", ("xa", "z0", "xb", "xc"), gamma, beta),
        "y0": Equation(eq_c, "y0", ("y1", "xf", "y2", "y3"), sp(b1, g2), sp(a2, g1)),
        "z0": Equation(eq_c, "z0", ("z1", "xc", "z2", "z3"), sp(b2, g1), sp(a1, g2)),
        "xa": Equation(eq_c, "xa", ("y1", "xb", "z2", "z3"), sp(b1, g1), sp(a1, g2)),
        "xb": Equation(eq_c, "xb", ("y1", "xa", "y2", "z3"), sp(b1, g2), sp(a1, g1)),
        "xc": Equation(eq_c, "xc", ("z1", "z0", "y2", "z3"), sp(b2, g2), sp(a1, g1)),
        "xd": Equation(eq_c, "xd", ("z1", "xe", "y2", "y3"), sp(b2, g2), sp(a2, g1)),
        "xe": Equation(eq_c, "xe", ("z1", "xd", "z2", "y3"), sp(b2, g1), sp(a2, g2)),
        "xf": Equation(eq_c, "xf", ("y1", "y0", "z2", "y3"), sp(b1, g1), sp(a2, g2)),
    }
    if corrupt is not None:
        if corrupt not in system:
            raise ValueError(f"unknown vertex {corrupt!r}")
        e = system[corrupt]
        if corrupt in CORNER_VERTICES:
            first = e.alpha.a1
            swapped = b2 if first == b1 else b1
            bad = sp(swapped, e.alpha.a2)
        else:
            bad = e.alpha.hat()
        system[corrupt] = Equation(e.eq, e.center, e.corners, bad, e.beta)
    return system


@dataclass
class StepResiduals:
    step3: float = 0.0
    step4: float = 0.0
    step5: float = 0.0
    step6: float = 0.0

    @property
    def max(self) -> float:
        return max(self.step3, self.step4, self.step5, self.step6)

    def merge(self, other: "StepResiduals") -> "StepResiduals":
        return StepResiduals(*(max(getattr(self, k), getattr(other, k)) for k in ("step3", "step4", "step5", "step6")))

    def as_dict(self) -> dict[str, float]:
        return {"step3": self.step3, "step4": self.step4, "step5": self.step5, "step6": self.step6, "max": self.max}


@dataclass
class CafccReport:
    suite: str
    trials: int
    residuals: StepResiduals
    degenerate_retries: int
    passed: bool
    tol: Tolerance = field(default_factory=Tolerance)
    per_trial_max: list[float] = field(default_factory=list)

    def failures_above(self, level: float) -> int:
        return sum(r > level for r in self.per_trial_max)


def solve_cell(system: EquationSystem, init: dict[str, complex]) -> tuple[dict[str, complex], StepResiduals]:
    """Run the six steps on one initial datum; returns the filled cell and disagreements."""
    v = dict(init)
    # step 1
    v["xf"] = system["y0"].solve(v, "xf")
    v["xc"] = system["y2"].solve(v, "xc")
    # step 2
    v["xa"] = system["y1"].solve(v, "xa")
    v["xe"] = system["y3"].solve(v, "xe")
    v["z2"] = system["xf"].solve(v, "z2")
    # step 3
    z1 = system["xd"].solve(v, "z1")
    z1_alt = system["xe"].solve(v, "z1")
    v["z1"] = z1
    # step 4
    z3 = system["xa"].solve(v, "z3")
    z3_alt = system["xb"].solve(v, "z3")
    v["z3"] = z3
    # step 5
    z0s = [
        system["z1"].solve(v, "z0"),
        system["z2"].solve(v, "z0"),
        system["z3"].solve(v, "z0"),
        system["xc"].solve(v, "z0"),
    ]
    v["z0"] = z0s[0]
    # step 6: the residual of the z0 equation, measured on the scale of the corner it fixes
    z1_back = system["z0"].solve(v, "z1")
    for val in v.values():
        if not (math.isfinite(val.real) and math.isfinite(val.imag)):
            raise DegenerateLinearSolve("non-finite value while solving the cell")
    res = StepResiduals(
        step3=rel_diff(z1, z1_alt),
        step4=rel_diff(z3, z3_alt),
        step5=max(rel_diff(a, b) for i, a in enumerate(z0s) for b in z0s[i + 1:]),
        step6=rel_diff(z1_back, z1),
    )
    return v, res


def sample_value(rng: np.random.Generator) -> complex:
    """Modulus uniform in [0.5, 2], phase uniform."""
    return complex(rng.uniform(0.5, 2.0) * np.exp(2j * np.pi * rng.uniform()))


def sample_params(rng: np.random.Generator, count: int = 3) -> list[SpectralPair]:
    """Parameter pairs whose components are pairwise at least MIN_PARAM_GAP apart."""
    while True:
        vals = [sample_value(rng) for _ in range(2 * count)]
        gaps = [abs(a - b) for i, a in enumerate(vals) for b in vals[i + 1:]]
        if min(gaps) >= MIN_PARAM_GAP:
            return [SpectralPair(vals[2 * i], vals[2 * i + 1]) for i in range(count)]


def sample_init(rng: np.random.Generator) -> dict[str, complex]:
    return {name: sample_value(rng) for name in INIT_NAMES}


def run_cafcc(suite: SuiteId, init: dict[str, complex] | tuple, params: tuple[SpectralPair, SpectralPair, SpectralPair],
              tol: Tolerance | None = None, rng: np.random.Generator | None = None,
              corrupt: str | None = None) -> CafccReport:
    """One CAFCC trial; degenerate initial data is resampled up to RETRY_BUDGET times."""
    tol = tol or Tolerance.default()
    if not isinstance(init, dict):
        init = dict(zip(INIT_NAMES, init))
    rng = rng if rng is not None else np.random.default_rng(0)
    system = build_system(suite, *params, corrupt=corrupt)
    retries = 0
    while True:
        try:
            _, res = solve_cell(system, init)
            break
        except (DegenerateLinearSolve, ZeroDivisionError) as exc:
            retries += 1
            if retries > RETRY_BUDGET:
                raise DegenerateSuite(f"{suite}: {RETRY_BUDGET} resamples all degenerate ({exc})") from exc
            init = sample_init(rng)
    return CafccReport(str(suite), 1, res, retries, res.max <= tol.rel_tol, tol, [res.max])


def run_trials(suite: SuiteId, n: int, seed: int, tol: Tolerance | None = None,
               corrupt: str | None = None) -> CafccReport:
    """``n`` seeded trials, each with fresh parameters and initial data."""
    if n < 1:
        raise ValueError("n must be at least 1")
    tol = tol or Tolerance.default()
    rng = np.random.default_rng(seed)
    total = StepResiduals()
    retries = 0
    per_trial = []
    for _ in range(n):
        params = tuple(sample_params(rng))
        rep = run_cafcc(suite, sample_init(rng), params, tol, rng, corrupt)
        total = total.merge(rep.residuals)
        retries += rep.degenerate_retries
        per_trial.append(rep.residuals.max)
    return CafccReport(str(suite), n, total, retries, total.max <= tol.rel_tol, tol, per_trial)
