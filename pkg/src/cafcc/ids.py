"""Equation and suite identifiers with their string serialization."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from fractions import Fraction

HALF = Fraction(1, 2)


class Kind(enum.Enum):
    A = "A"
    B = "B"
    C = "C"


class Family(enum.Enum):
    E4 = 4
    E3 = 3
    E2 = 2
    E1 = 1


@dataclass(frozen=True)
class EllipticInvariants:
    g2: complex
    g3: complex

    def __post_init__(self) -> None:
        if abs(self.discriminant) < 1e-12:
            raise ValueError(f"singular curve: g2^3 - 27 g3^2 = {self.discriminant}")

    @property
    def discriminant(self) -> complex:
        return complex(self.g2) ** 3 - 27 * complex(self.g3) ** 2


@dataclass(frozen=True)
class SpectralPair:
    a1: complex
    a2: complex

    def hat(self) -> "SpectralPair":
        return SpectralPair(self.a2, self.a1)

    def __iter__(self):
        yield self.a1
        yield self.a2


@dataclass(frozen=True)
class FaceConfig:
    x: complex
    xa: complex
    xb: complex
    xc: complex
    xd: complex
    alpha: SpectralPair
    beta: SpectralPair

    @property
    def corners(self) -> tuple[complex, complex, complex, complex]:
        return (self.xa, self.xb, self.xc, self.xd)

    def with_corner(self, which: str, value: complex) -> "FaceConfig":
        return FaceConfig(**{**self.__dict__, "x" + which: value})

    def with_corners(self, xa, xb, xc, xd) -> "FaceConfig":
        return FaceConfig(self.x, xa, xb, xc, xd, self.alpha, self.beta)

    def with_params(self, alpha: SpectralPair, beta: SpectralPair) -> "FaceConfig":
        return FaceConfig(self.x, self.xa, self.xb, self.xc, self.xd, alpha, beta)


Deltas = tuple[Fraction, ...]


@dataclass(frozen=True)
class EquationId:
    kind: Kind
    family: Family
    deltas: Deltas = ()
    additive: bool = False
    elliptic: EllipticInvariants | None = field(default=None, compare=True)

    def __post_init__(self) -> None:
        key = (self.kind, self.family, self.deltas)
        if key not in _ROWS:
            raise ValueError(f"no catalogued equation {self.kind.value}{self.family.value} {self.deltas}")
        if _ROWS[key].additive != self.additive:
            raise ValueError(f"additive flag mismatch for {_ROWS[key].label}")
        if (self.family is Family.E4) != (self.elliptic is not None):
            raise ValueError("elliptic invariants are required for A4 and only for A4")

    @property
    def info(self) -> "_Row":
        return _ROWS[(self.kind, self.family, self.deltas)]

    @property
    def label(self) -> str:
        return self.info.label

    def __str__(self) -> str:
        if self.elliptic is not None:
            return f"A4[g2={_fmt(self.elliptic.g2)},g3={_fmt(self.elliptic.g3)}]"
        return self.label

    @property
    def face_independent(self) -> bool:
        return self.info.label == "D1" or self.info.face_independent

    @property
    def paired_a(self) -> "EquationId":
        """The type-A equation whose a-function the legs x_a, x_b use."""
        if self.kind is Kind.B:
            raise ValueError("type-B equations do not carry an a-function")
        if self.kind is Kind.A:
            return self
        return parse_id(self.info.paired_a)


@dataclass(frozen=True)
class _Row:
    label: str
    kind: Kind
    family: Family
    deltas: Deltas
    additive: bool
    target: str
    paired_a: str = ""
    face_independent: bool = False


def _d(*vals) -> Deltas:
    return tuple(Fraction(v) for v in vals)


_ROW_LIST = [
    _Row("A4", Kind.A, Family.E4, (), False, "Q4"),
    _Row("A3d1", Kind.A, Family.E3, _d(1), False, "Q3d1"),
    _Row("A3d0", Kind.A, Family.E3, _d(0), False, "Q3d0"),
    _Row("A2_11", Kind.A, Family.E2, _d(1, 1), False, "Q2"),
    _Row("A2_10", Kind.A, Family.E2, _d(1, 0), False, "Q1d1"),
    _Row("A2_00", Kind.A, Family.E2, _d(0, 0), True, "Q1d0"),
    _Row("B3_h_h_0", Kind.B, Family.E3, _d(HALF, HALF, 0), False, ""),
    _Row("B3_h_0_h", Kind.B, Family.E3, _d(HALF, 0, HALF), False, ""),
    _Row("B3_100", Kind.B, Family.E3, _d(1, 0, 0), False, ""),
    _Row("B3_000", Kind.B, Family.E3, _d(0, 0, 0), False, "", face_independent=True),
    _Row("B2_110", Kind.B, Family.E2, _d(1, 1, 0), False, ""),
    _Row("B2_101", Kind.B, Family.E2, _d(1, 0, 1), False, ""),
    _Row("B2_100", Kind.B, Family.E2, _d(1, 0, 0), False, ""),
    _Row("B2_000", Kind.B, Family.E2, _d(0, 0, 0), False, "", face_independent=True),
    _Row("D1", Kind.B, Family.E1, (), True, "", face_independent=True),
    _Row("C3_h_h_0", Kind.C, Family.E3, _d(HALF, HALF, 0), False, "H3_d1_e1", "A3d1"),
    _Row("C3_h_0_h", Kind.C, Family.E3, _d(HALF, 0, HALF), False, "H3_d1_e1", "A3d0"),
    _Row("C3_100", Kind.C, Family.E3, _d(1, 0, 0), False, "H3_d1_e0", "A3d0"),
    _Row("C3_000", Kind.C, Family.E3, _d(0, 0, 0), False, "H3_d0_e0", "A3d0"),
    _Row("C2_110", Kind.C, Family.E2, _d(1, 1, 0), False, "H2e1", "A2_11"),
    _Row("C2_101", Kind.C, Family.E2, _d(1, 0, 1), False, "H2e1", "A2_10"),
    _Row("C2_100", Kind.C, Family.E2, _d(1, 0, 0), False, "H2e0", "A2_10"),
    _Row("C2_000", Kind.C, Family.E2, _d(0, 0, 0), True, "H1e1", "A2_00"),
    _Row("C1", Kind.C, Family.E1, (), True, "H1e0", "A2_00"),
]
_ROWS = {(r.kind, r.family, r.deltas): r for r in _ROW_LIST}
_BY_LABEL = {r.label: r for r in _ROW_LIST}


def _fmt(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    return repr(z).strip("()")


def _delta_token(t: str) -> Fraction:
    return {"0": Fraction(0), "1": Fraction(1), "h": HALF}[t]


_A4_RE = re.compile(r"^A4\[g2=([^,\]]+),g3=([^\]]+)\]$")


def parse_id(text: str, g2: complex | None = None, g3: complex | None = None) -> EquationId:
    """Parse labels such as "A3d1", "A2_00", "B2_110", "C3_h_h_0", "D1", "A4[g2=1,g3=0]"."""
    s = text.strip()
    m = _A4_RE.match(s)
    if m:
        g2, g3 = complex(m.group(1).replace(" ", "")), complex(m.group(2).replace(" ", ""))
        s = "A4"
    if s == "A4":
        if g2 is None or g3 is None:
            raise ValueError("A4 requires g2 and g3")
        return EquationId(Kind.A, Family.E4, (), False, EllipticInvariants(complex(g2), complex(g3)))
    if s in ("D1", "C1"):
        row = _BY_LABEL[s]
        return EquationId(row.kind, row.family, (), row.additive)
    m = re.fullmatch(r"A3_?d?([01])", s)
    if m:
        row = _BY_LABEL[f"A3d{m.group(1)}"]
        return EquationId(row.kind, row.family, row.deltas, row.additive)
    m = re.fullmatch(r"([ABC])([23])_?((?:[01h]_?){2,3})", s)
    if not m:
        raise ValueError(f"unrecognized equation id {text!r}")
    tokens = [t for t in m.group(3).replace("_", "")]
    deltas = tuple(_delta_token(t) for t in tokens)
    key = (Kind(m.group(1)), Family(int(m.group(2))), deltas)
    if key not in _ROWS:
        raise ValueError(f"unrecognized equation id {text!r}")
    row = _ROWS[key]
    return EquationId(row.kind, row.family, row.deltas, row.additive)


def all_ids(g2: complex = 1.0, g3: complex = 0.0, include_a4: bool = True) -> list[EquationId]:
    """Every catalogued equation, A4 at the given invariants."""
    out = []
    for row in _ROW_LIST:
        if row.label == "A4":
            if include_a4:
                out.append(parse_id("A4", g2, g3))
            continue
        out.append(EquationId(row.kind, row.family, row.deltas, row.additive))
    return out


def abs_target(eq: EquationId) -> str:
    """The ABS label listed for the x-coefficient P1 (empty for type B)."""
    return eq.info.target


@dataclass(frozen=True)
class SuiteId:
    """A Table-1 row (1..9) or a type-A-only suite."""

    row: int | None = None
    a_only: EquationId | None = None

    def __post_init__(self) -> None:
        if (self.row is None) == (self.a_only is None):
            raise ValueError("exactly one of row / a_only must be given")
        if self.row is not None and not 1 <= self.row <= 9:
            raise ValueError(f"row must be in 1..9, got {self.row}")
        if self.a_only is not None and self.a_only.kind is not Kind.A:
            raise ValueError("type-A-only suites need a type-A equation")

    @property
    def equations(self) -> tuple[EquationId, EquationId, EquationId]:
        if self.a_only is not None:
            return (self.a_only,) * 3
        return tuple(parse_id(s) for s in SUITE_ROWS[self.row - 1])  # type: ignore[return-value]

    def __str__(self) -> str:
        if self.a_only is not None:
            return f"{self.a_only}-only"
        return f"row{self.row}"

    @property
    def target(self) -> str:
        if self.a_only is not None:
            return abs_target(self.a_only)
        return abs_target(self.equations[2])


SUITE_ROWS = [
    ("A3d1", "B3_h_h_0", "C3_h_h_0"),
    ("A3d0", "B3_h_0_h", "C3_h_0_h"),
    ("A3d0", "B3_100", "C3_100"),
    ("A3d0", "B3_000", "C3_000"),
    ("A2_11", "B2_110", "C2_110"),
    ("A2_10", "B2_101", "C2_101"),
    ("A2_10", "B2_100", "C2_100"),
    ("A2_00", "B2_000", "C2_000"),
    ("A2_00", "D1", "C1"),
]

A_ONLY_LABELS = ["A4", "A3d1", "A3d0", "A2_11", "A2_10", "A2_00"]


def all_suites(g2: complex = 1.0, g3: complex = 0.0) -> list[SuiteId]:
    suites = [SuiteId(row=i) for i in range(1, 10)]
    suites += [SuiteId(a_only=parse_id(lbl, g2, g3)) for lbl in A_ONLY_LABELS]
    return suites


def parse_suite(text: str, g2: complex | None = None, g3: complex | None = None) -> SuiteId:
    """Parse "row1".."row9", a Table-1 triple's C label, or a type-A label (type-A-only suite)."""
    s = text.strip()
    m = re.fullmatch(r"row([1-9])", s)
    if m:
        return SuiteId(row=int(m.group(1)))
    if s.endswith("-only"):
        s = s[: -len("-only")]
    eq = parse_id(s, g2, g3)
    if eq.kind is Kind.A:
        return SuiteId(a_only=eq)
    for i, triple in enumerate(SUITE_ROWS, start=1):
        if eq == parse_id(triple[1]) or eq == parse_id(triple[2]):
            if eq.kind is Kind.C or sum(parse_id(t[1]) == eq for t in SUITE_ROWS) == 1:
                return SuiteId(row=i)
    raise ValueError(f"{text!r} does not name a unique suite")
