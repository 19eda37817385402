"""Evolution of one face-centered quad equation on the rotated square lattice.

Vertices are the integer points (i, j) with i = j mod 2 inside
[0, 2w] x [0, 2h].  Points with both coordinates even carry the "face"
role, both odd the "corner" role.  Every vertex is the centre of an
equation whose corners are its diagonal neighbours, laid out as

    x_a = (i-1, j+1)    x_b = (i+1, j+1)
    x_c = (i-1, j-1)    x_d = (i+1, j-1)

Both initial patterns are evolved towards the upper right, so each unknown
vertex (p, q) is the x_b corner of the equation centred at (p-1, q-1).
"""

from __future__ import annotations

import csv
import enum
import io
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .catalog import affine_eval, solve_corner
from .checker import sample_params, sample_value
from .errors import DegenerateLinearSolve, EvolutionStuck
from .ids import EquationId, FaceConfig, SpectralPair


class InitKind(enum.Enum):
    CORNER = "corner"
    STAIRCASE = "staircase"


Point = tuple[int, int]


@dataclass
class LatticeState:
    width: int
    height: int
    alpha: SpectralPair
    beta: SpectralPair
    kind: InitKind
    values: dict[Point, complex | None] = field(default_factory=dict)

    @property
    def extent(self) -> tuple[int, int]:
        return 2 * self.width, 2 * self.height

    def in_domain(self, p: Point) -> bool:
        return p in self.values

    def role(self, p: Point) -> str:
        if self.values.get(p) is None:
            return "unset"
        return "face" if p[0] % 2 == 0 else "corner"

    def unset(self) -> list[Point]:
        return [p for p, v in self.values.items() if v is None]

    def copy(self) -> "LatticeState":
        return LatticeState(self.width, self.height, self.alpha, self.beta, self.kind, dict(self.values))

    def face_config(self, center: Point) -> FaceConfig:
        i, j = center
        corners = [self.values[q] for q in ((i - 1, j + 1), (i + 1, j + 1), (i - 1, j - 1), (i + 1, j - 1))]
        return FaceConfig(self.values[center], *corners, self.alpha, self.beta)

    def faces(self) -> list[Point]:
        """Centres whose four corners lie in the domain."""
        out = []
        for (i, j) in self.values:
            nbrs = ((i - 1, j + 1), (i + 1, j + 1), (i - 1, j - 1), (i + 1, j - 1))
            if all(q in self.values for q in nbrs):
                out.append((i, j))
        return sorted(out)

    def to_csv(self, target: str | Path | io.TextIOBase | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["i", "j", "role", "re", "im"])
        for (i, j) in sorted(self.values, key=lambda p: (p[1], p[0])):
            v = self.values[(i, j)]
            w.writerow([i, j, self.role((i, j)), *(("", "") if v is None else (repr(v.real), repr(v.imag)))])
        text = buf.getvalue()
        if isinstance(target, (str, Path)):
            Path(target).write_text(text)
        elif target is not None:
            target.write(text)
        return text


def _domain(kind: InitKind, w: int, h: int) -> list[Point]:
    pts = [(i, j) for j in range(2 * h + 1) for i in range(2 * w + 1) if (i - j) % 2 == 0]
    if kind is InitKind.STAIRCASE:
        pts = [p for p in pts if p[0] + p[1] >= 2 * w - 2]
    return pts


def _filled(kind: InitKind, p: Point, w: int) -> bool:
    i, j = p
    if kind is InitKind.CORNER:
        return i <= 1 or j <= 1
    return i + j <= 2 * w


def seed_initial(kind: InitKind | str, size: int | tuple[int, int], rng_seed: int,
                 alpha: SpectralPair | None = None, beta: SpectralPair | None = None) -> LatticeState:
    """Fill the initial-value pattern with seeded random values.

    Corner: the two boundary lines i in {0, 1} and j in {0, 1}.
    Staircase (square only): the double anti-diagonal i + j in {2w - 2, 2w};
    vertices below it are outside the evolution domain.
    Parameters are drawn from the same stream unless given.
    """
    kind = InitKind(kind) if isinstance(kind, str) else kind
    w, h = (size, size) if isinstance(size, int) else size
    if w < 2 or h < 2:
        raise ValueError(f"lattice needs at least 2x2 faces, got {w}x{h}")
    if kind is InitKind.STAIRCASE and w != h:
        raise ValueError("staircase initial data needs a square lattice")
    rng = np.random.default_rng(rng_seed)
    if alpha is None or beta is None:
        alpha, beta = sample_params(rng, 2)
    state = LatticeState(w, h, alpha, beta, kind)
    for p in _domain(kind, w, h):
        state.values[p] = sample_value(rng) if _filled(kind, p, w) else None
    return state


def _order(state: LatticeState, order: str) -> list[Point]:
    todo = state.unset()
    if order == "diagonal":
        return sorted(todo, key=lambda p: (p[0] + p[1], p[0]))
    if order == "rowmajor":
        return sorted(todo, key=lambda p: (p[1], p[0]))
    raise ValueError(f"unknown order {order!r}")


def evolve(eq: EquationId, state: LatticeState, order: str = "diagonal") -> LatticeState:
    """Fill every unset vertex by a corner solve; certify with ``max_face_residual``.

    Each unset vertex (p, q) is the x_b corner of the face centred at
    (p-1, q-1), whose other vertices are set earlier in either sweep order.
    """
    out = state.copy()
    for (p, q) in _order(out, order):
        center = (p - 1, q - 1)
        try:
            cfg = _config_for(out, center)
            out.values[(p, q)] = solve_corner(eq, cfg, "b")
        except DegenerateLinearSolve as exc:
            raise EvolutionStuck(center, f"{eq}: {exc}") from exc
        except (KeyError, TypeError) as exc:
            raise EvolutionStuck(center, f"{eq}: face at {center} has an unset neighbour") from exc
    return out


def _config_for(state: LatticeState, center: Point) -> FaceConfig:
    i, j = center
    vals = [state.values[q] for q in ((i, j), (i - 1, j + 1), (i - 1, j - 1), (i + 1, j - 1))]
    if any(v is None for v in vals):
        raise TypeError("unset neighbour")
    x, xa, xc, xd = vals
    return FaceConfig(x, xa, 0j, xc, xd, state.alpha, state.beta)


def face_residual(eq: EquationId, state: LatticeState, center: Point) -> float:
    """|affine_eval| scaled by max(1, largest of the five values)."""
    cfg = state.face_config(center)
    scale = max(1.0, abs(cfg.x), *(abs(c) for c in cfg.corners))
    return abs(affine_eval(eq, cfg)) / scale


def max_face_residual(eq: EquationId, state: LatticeState) -> float:
    return max((face_residual(eq, state, c) for c in state.faces()), default=0.0)
