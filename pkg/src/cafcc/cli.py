"""Command-line entry point: ``cafcc list|check|evolve|verify-abs|derive-check``.

Exit codes: 0 pass, 1 verification failure, 2 degenerate input, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Sequence

from . import irf
from .abs_verify import a4_discriminant_degrees, verify_p1
from .checker import run_trials
from .errors import DegenerateSuite, DomainError, EvolutionStuck, MatchFailed
from .ids import Family, Kind, all_ids, all_suites, parse_id, parse_suite
from .lattice import evolve, max_face_residual, seed_initial
from .numeric import Tolerance

SCHEMA = "cafcc-report/1"
EXIT_PASS, EXIT_FAIL, EXIT_DEGENERATE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which means "degenerate" here
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


@dataclass
class RunConfig:
    command: str
    ident: str | None = None
    trials: int = 100
    seed: int = 1
    size: int = 8
    tol: Tolerance = Tolerance()
    init: str = "staircase"
    g2: complex | None = None
    g3: complex | None = None
    json_path: Path | None = None
    csv_path: Path | None = None
    corrupt: str | None = None
    case: str | None = None
    three_leg: str | None = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> "RunConfig":
        tol = Tolerance.parse(ns.tol) if getattr(ns, "tol", None) else Tolerance.default()
        return cls(
            command=ns.command,
            ident=getattr(ns, "suite", None) or getattr(ns, "equation", None),
            trials=getattr(ns, "trials", 100),
            seed=getattr(ns, "seed", 1),
            size=getattr(ns, "size", 8),
            tol=tol,
            init=getattr(ns, "init", "staircase"),
            g2=_complex_or_none(getattr(ns, "g2", None)),
            g3=_complex_or_none(getattr(ns, "g3", None)),
            json_path=getattr(ns, "json", None),
            csv_path=getattr(ns, "csv", None),
            corrupt=getattr(ns, "corrupt", None),
            case=getattr(ns, "case", None),
            three_leg=getattr(ns, "three_leg", None),
        )


def _complex_or_none(text: str | None) -> complex | None:
    return None if text is None else complex(text.replace(" ", ""))


def _parse_eq(cfg: RunConfig):
    try:
        return parse_id(cfg.ident or "", cfg.g2, cfg.g3)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _report(cfg: RunConfig, passed: bool, **extra: Any) -> dict:
    out = {
        "schema": SCHEMA,
        "command": cfg.command,
        "id": cfg.ident,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "tol": [cfg.tol.abs_tol, cfg.tol.rel_tol],
        "residuals": extra.pop("residuals", {}),
        "pass": passed,
        "retries": extra.pop("retries", 0),
    }
    out.update(extra)
    return out


def _emit(cfg: RunConfig, report: dict) -> None:
    text = json.dumps(report, indent=2, default=_json_default)
    print(text)
    if cfg.json_path:
        Path(cfg.json_path).write_text(text + "\n")


def _json_default(obj: Any) -> Any:
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return str(obj)


def cmd_list() -> str:
    lines = ["suites:"]
    for s in all_suites():
        eqs = ", ".join(str(e) for e in s.equations[: 1 if s.a_only else 3])
        name = "A4-only" if s.a_only is not None and s.a_only.family is Family.E4 else str(s)
        lines.append(f"  {name:<14} {eqs:<32} P1 -> {s.target or '-'}")
    lines.append("equations:")
    for eq in all_ids():
        label = eq.label
        flags = []
        if eq.family is Family.E4:
            flags.append("requires --g2 --g3")
        if eq.face_independent:
            flags.append("face-independent")
        target = eq.info.target if eq.kind is not Kind.B else ""
        lines.append(f"  {label:<10} {target or '-':<10} {'; '.join(flags)}".rstrip())
    return "\n".join(lines)


def cmd_check(cfg: RunConfig) -> int:
    try:
        suite = parse_suite(cfg.ident or "", cfg.g2, cfg.g3)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    try:
        rep = run_trials(suite, cfg.trials, cfg.seed, cfg.tol, corrupt=cfg.corrupt)
    except DegenerateSuite as exc:
        _emit(cfg, _report(cfg, False, error=str(exc)))
        return EXIT_DEGENERATE
    _emit(cfg, _report(cfg, rep.passed, residuals=rep.residuals.as_dict(), retries=rep.degenerate_retries,
                       suite=str(suite), corrupt=cfg.corrupt))
    return EXIT_PASS if rep.passed else EXIT_FAIL


def default_csv_path(cfg: RunConfig) -> Path:
    return Path(f"lattice_{(cfg.ident or 'eq').replace('[', '_').replace(']', '')}_{cfg.init}_{cfg.size}.csv")


def cmd_evolve(cfg: RunConfig) -> int:
    eq = _parse_eq(cfg)
    if cfg.init not in ("corner", "staircase"):
        raise UsageError(f"--init must be corner or staircase, got {cfg.init!r}")
    try:
        state = evolve(eq, seed_initial(cfg.init, cfg.size, cfg.seed))
    except EvolutionStuck as exc:
        _emit(cfg, _report(cfg, False, error=str(exc), face=list(exc.face)))
        return EXIT_DEGENERATE
    worst = max_face_residual(eq, state)
    path = cfg.csv_path or default_csv_path(cfg)
    state.to_csv(path)
    passed = worst <= cfg.tol.rel_tol
    _emit(cfg, _report(cfg, passed, residuals={"max": worst}, csv=str(path), size=cfg.size, init=cfg.init))
    return EXIT_PASS if passed else EXIT_FAIL


def cmd_verify_abs(cfg: RunConfig) -> int:
    eq = _parse_eq(cfg)
    if eq.kind is Kind.B:
        raise UsageError(f"{eq}: type-B equations have no ABS target for P1")
    if eq.family is Family.E4:
        degrees = a4_discriminant_degrees(eq.elliptic.g2, eq.elliptic.g3, cfg.seed)
        passed = all(d == 4 for d in degrees)
        _emit(cfg, _report(cfg, passed, match=passed, target="Q4", discriminant_degrees=degrees))
        return EXIT_PASS if passed else EXIT_FAIL
    try:
        rep = verify_p1(eq, n_points=cfg.trials, seed=cfg.seed, rel=cfg.tol.rel_tol)
    except MatchFailed as exc:
        _emit(cfg, _report(cfg, False, match=False, error=str(exc)))
        return EXIT_FAIL
    d = rep.as_dict()
    _emit(cfg, _report(cfg, True, residuals={"max": rep.spread}, **d))
    return EXIT_PASS


def cmd_derive_check(cfg: RunConfig) -> int:
    try:
        if cfg.three_leg:
            rep = irf.three_leg_check(cfg.three_leg, cfg.trials, cfg.seed, cfg.tol.rel_tol, raise_on_fail=False)
            reports = [rep]
        elif cfg.case:
            reports = irf.case_check(cfg.case, cfg.trials, cfg.seed, cfg.tol.rel_tol)
        elif cfg.ident:
            eq = _parse_eq(cfg)
            try:
                reports = [irf.derivation_check(eq, cfg.trials, cfg.seed, rel=cfg.tol.rel_tol)]
            except MatchFailed as exc:
                reports = [irf.CheckReport(str(eq), False, cfg.trials, exc.worst.get("error", float("inf")),
                                           cfg.tol.rel_tol, worst=exc.worst)]
        else:
            raise UsageError("derive-check needs --case, --equation or --three-leg")
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    except DomainError as exc:
        _emit(cfg, _report(cfg, False, error=str(exc)))
        return EXIT_DEGENERATE
    passed = all(r.passed for r in reports)
    ident = cfg.three_leg or cfg.case or cfg.ident
    _emit(cfg, _report(RunConfig(**{**cfg.__dict__, "ident": ident}), passed,
                       residuals={"max": max(r.max_error for r in reports)},
                       checks=[r.as_dict() for r in reports]))
    return EXIT_PASS if passed else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cafcc", description="Face-centered quad equations: catalogue, CAFCC checks, evolution.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, ident: str, trials: int = 100, seed: int = 1) -> None:
        sp.add_argument(f"--{ident}", required=ident == "suite")
        sp.add_argument("--trials", type=int, default=trials)
        sp.add_argument("--seed", type=int, default=seed)
        sp.add_argument("--tol", help='"1e-9" or "abs,rel"; default from CAFCC_DEFAULT_TOL')
        sp.add_argument("--g2")
        sp.add_argument("--g3")
        sp.add_argument("--json", type=Path)

    sub.add_parser("list", help="list suites and equations")
    sp = sub.add_parser("check", help="run CAFCC trials on a suite")
    common(sp, "suite")
    sp.add_argument("--corrupt", metavar="VERTEX", help="negative control: swap one corner equation's parameters")
    sp = sub.add_parser("evolve", help="evolve an equation on the lattice and write CSV")
    common(sp, "equation", seed=3)
    sp.add_argument("--init", default="staircase")
    sp.add_argument("--size", type=int, default=8)
    sp.add_argument("--csv", type=Path)
    sp = sub.add_parser("verify-abs", help="compare P1 with its ABS target")
    common(sp, "equation", trials=200, seed=0)
    sp = sub.add_parser("derive-check", help="IRF derivation and three-leg checks")
    common(sp, "equation", trials=50, seed=0)
    sp.add_argument("--case", help=f"one of {', '.join(irf.CASES)}")
    sp.add_argument("--three-leg", dest="three_leg", help=", ".join(c.value for c in irf.ThreeLegCase))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    if ns.command == "list":
        print(cmd_list())
        return EXIT_PASS
    try:
        cfg = RunConfig.from_args(ns)
        if cfg.trials < 1 or cfg.size < 2:
            raise UsageError("--trials must be positive and --size at least 2")
        handler = {"check": cmd_check, "evolve": cmd_evolve, "verify-abs": cmd_verify_abs,
                   "derive-check": cmd_derive_check}[ns.command]
        return handler(cfg)
    except (UsageError, ValueError) as exc:
        print(f"cafcc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
