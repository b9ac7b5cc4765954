"""Command-line driver emitting deterministic CSV/JSON tables.

Each subcommand runs one analysis and writes a flat table plus a JSON
metadata sidecar (full run configuration, working precision, and package
version) so every number in an emitted file can be regenerated from the
sidecar alone.  Output is byte-identical for identical configurations.

Exit codes: 0 success, 2 validation failure (a check the run itself
performs did not pass), 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, asdict, field

import numpy as np

from . import __version__, analysis, model, shape_invariance, spectrum
from .errors import SwkbError, PrecisionInsufficient
from .quad import QuadratureConfig

#: (n, ell) pairs of the reference slope table, in row order.
TABLE1_PAIRS = ((1, 1), (2, 1), (2, 2), (3, 1), (3, 2), (3, 3),
                (4, 1), (4, 2), (4, 3), (4, 4),
                (4, 10), (4, 100), (4, 1000), (1000, 1000))

DIGITS_ENV = "SWKBLAB_DIGITS"

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_COMPUTATION = 3


@dataclass(frozen=True)
class RunConfig:
    """Everything needed to reproduce one CLI run, JSON round-trippable."""

    subcommand: str
    n: tuple[int, ...] = (1,)
    ell: tuple[float, ...] = (1.0,)
    alpha: tuple[float, ...] = ()
    lambdas: tuple[float, ...] = ()
    delta_alpha: float = 1e-5
    tol: float = 1e-13
    digits: int = 0
    output_format: str = "csv"
    output_path: str = ""
    extra_pairs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        if not self.n or not self.ell:
            raise ValueError("parameter ranges must be non-empty")

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        raw = json.loads(text)
        raw["n"] = tuple(raw["n"])
        raw["ell"] = tuple(raw["ell"])
        raw["alpha"] = tuple(raw["alpha"])
        raw["lambdas"] = tuple(raw["lambdas"])
        raw["extra_pairs"] = tuple(tuple(p) for p in raw["extra_pairs"])
        return cls(**raw)

    def quad_config(self, digits: int | None = None) -> QuadratureConfig:
        d = self.digits if digits is None else digits
        cfg = QuadratureConfig.for_digits(d) if d else QuadratureConfig()
        if self.tol < cfg.abs_tol:
            cfg = QuadratureConfig(abs_tol=self.tol,
                                   precision_digits=cfg.precision_digits)
        return cfg


def _fmt(value) -> str:
    """Full-precision decimal rendering with an 'E' exponent marker."""
    if value is None:
        return "undefined"
    if isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    # repr gives the shortest decimal that round-trips the double exactly.
    return repr(float(value)).replace("e", "E")


def _emit(header, rows, cfg: RunConfig, metadata: dict) -> None:
    """Write the table and its sidecar atomically, or print to stdout."""
    if cfg.output_format == "json":
        body = json.dumps(
            {"columns": list(header),
             "rows": [[_fmt(v) for v in row] for row in rows]},
            indent=2) + "\n"
    else:
        lines = [",".join(header)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        body = "\n".join(lines) + "\n"

    if not cfg.output_path:
        sys.stdout.write(body)
        return

    sidecar = json.dumps(
        {"config": json.loads(cfg.to_json()),
         "version": __version__, **metadata},
        indent=2, sort_keys=True) + "\n"
    for path, text in ((cfg.output_path, body),
                       (cfg.output_path + ".meta.json", sidecar)):
        directory = os.path.dirname(os.path.abspath(path))
        fd, tmp = tempfile.mkstemp(dir=directory, suffix=".partial")
        try:
            with os.fdopen(fd, "w") as handle:
                handle.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.remove(tmp)
            raise


def cmd_table1(cfg: RunConfig) -> int:
    pairs = TABLE1_PAIRS + cfg.extra_pairs
    rows = []
    status = EXIT_OK
    for n, ell in pairs:
        if n == 0:
            rows.append((n, ell, 0.0, None, None))
            continue
        digits = max(30, cfg.digits, analysis.recommended_digits(ell, 5))
        qcfg = cfg.quad_config(digits)
        cf = analysis.slope_closed_form(n, ell)
        try:
            fd = float(analysis.slope_finite_difference(
                n, ell, cfg.delta_alpha, qcfg))
            rows.append((n, ell, cf, fd, fd / cf))
        except PrecisionInsufficient:
            rows.append((n, ell, cf, None, None))
            status = EXIT_VALIDATION
    _emit(("n", "ell", "analytical", "numerical", "ratio"), rows, cfg,
          {"delta_alpha": cfg.delta_alpha})
    return status


def cmd_sweep_alpha(cfg: RunConfig) -> int:
    alphas = cfg.alpha or tuple(np.round(np.arange(0.0, 1.0001, 0.01), 10))
    rows = []
    for ell in cfg.ell:
        qcfg = cfg.quad_config(max(cfg.digits,
                                   analysis.recommended_digits(ell)))
        for n in cfg.n:
            series = analysis.alpha_sweep(n, ell, alphas, qcfg)
            rows += [(n, ell, a, v, r) for a, v, r in series.records]
    _emit(("n", "ell", "alpha", "integral", "residual"), rows, cfg, {})
    return EXIT_OK


def cmd_sweep_n(cfg: RunConfig) -> int:
    alpha = cfg.alpha[0] if cfg.alpha else 1.0
    rows = []
    for ell in cfg.ell:
        series = analysis.n_sweep(ell, cfg.n, alpha, cfg.quad_config())
        rows += [(int(n), ell, alpha, v, r) for n, v, r in series.records]
    _emit(("n", "ell", "alpha", "integral", "residual"), rows, cfg, {})
    return EXIT_OK


def cmd_convergence(cfg: RunConfig) -> int:
    lambdas = cfg.lambdas or (2.0, 3.0, 4.0, 5.0)
    n, ell = cfg.n[0], cfg.ell[0]
    series, slope = analysis.convergence_sweep(n, ell, lambdas,
                                               cfg.quad_config())
    rows = [(n, ell, lam, log_g, g) for lam, log_g, g in series.records]
    _emit(("n", "ell", "lambda", "log10_gamma", "gamma"), rows, cfg,
          {"fitted_slope": slope})
    return EXIT_OK


def cmd_spectrum(cfg: RunConfig) -> int:
    alpha = cfg.alpha[0] if cfg.alpha else 0.0
    ell = cfg.ell[0]
    n_max = max(cfg.n)
    p = model.ModelParams(ell, 1.0, alpha)
    e_tol = max(cfg.tol, 1e-9)
    result = spectrum.numerov_solve(p, n_max, e_tol=e_tol)
    rows = [(k, ell, alpha, e, float(model.energy_level(k, p)))
            for k, e in zip(result.node_counts, result.eigenvalues)]
    _emit(("n", "ell", "alpha", "eigenvalue", "exact"), rows, cfg,
          {"grid": list(result.grid), "achieved_tol": result.achieved_tol})
    return EXIT_OK


def cmd_si_check(cfg: RunConfig) -> int:
    alphas = cfg.alpha or (0.0, 0.5, 1.0)
    rows = []
    invariant = True
    for ell in cfg.ell:
        for alpha in alphas:
            report = shape_invariance.si_max_residual(ell, alpha)
            ok = report.max_abs_residual < 1e-10
            invariant = invariant and ok
            rows.append((ell, alpha, report.max_abs_residual,
                         report.argmax_x, "yes" if ok else "no"))
    _emit(("ell", "alpha", "max_residual", "argmax_x", "shape_invariant"),
          rows, cfg, {"threshold": 1e-10})
    if not invariant:
        print("not shape invariant", file=sys.stderr)
        return EXIT_VALIDATION
    return EXIT_OK


_COMMANDS = {
    "table1": cmd_table1,
    "sweep-alpha": cmd_sweep_alpha,
    "sweep-n": cmd_sweep_n,
    "convergence": cmd_convergence,
    "spectrum": cmd_spectrum,
    "si-check": cmd_si_check,
}


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        n, ell = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected N,L integer pair, got {text!r}")
    return n, ell


def build_parser() -> argparse.ArgumentParser:
    default_digits = int(os.environ.get(DIGITS_ENV, "0"))
    parser = argparse.ArgumentParser(
        prog="swkblab",
        description="Deterministic tables for the SWKB quantization study.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for name, helptext in (
            ("table1", "slope table: analytical vs finite difference"),
            ("sweep-alpha", "residual versus deformation"),
            ("sweep-n", "residual versus quantum number"),
            ("convergence", "slope defect versus difference step"),
            ("spectrum", "Numerov eigenvalues of the minus partner"),
            ("si-check", "shape-invariance residual scan")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--n", type=int, nargs="+", default=[1],
                       help="quantum numbers (default: 1)")
        p.add_argument("--l", type=float, nargs="+", default=[1.0],
                       dest="ell", help="angular parameters (default: 1)")
        p.add_argument("--alpha", type=float, nargs="+", default=[],
                       help="deformation values (subcommand-specific default)")
        p.add_argument("--delta-alpha", type=float, default=1e-5,
                       help="finite-difference step (default: 1e-5)")
        p.add_argument("--lambda", type=float, nargs="+", default=[],
                       dest="lambdas",
                       help="difference-step exponents (default: 2 3 4 5)")
        p.add_argument("--tol", type=float, default=1e-13,
                       help="quadrature absolute tolerance (default: 1e-13)")
        p.add_argument("--digits", type=int, default=default_digits,
                       help=f"working precision digits; 0 means double "
                            f"(default: ${DIGITS_ENV} or 0)")
        p.add_argument("--format", choices=("csv", "json"), default="csv",
                       dest="output_format", help="table format")
        p.add_argument("--out", default="", dest="output_path",
                       help="output file (stdout if omitted); a .meta.json "
                            "sidecar is written next to it")
        if name == "table1":
            p.add_argument("--pair", type=_parse_pair, action="append",
                           default=[], dest="extra_pairs",
                           help="extra N,L row appended to the table")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(
        subcommand=args.subcommand,
        n=tuple(args.n),
        ell=tuple(args.ell),
        alpha=tuple(args.alpha),
        lambdas=tuple(args.lambdas),
        delta_alpha=args.delta_alpha,
        tol=args.tol,
        digits=args.digits,
        output_format=args.output_format,
        output_path=args.output_path,
        extra_pairs=tuple(getattr(args, "extra_pairs", ())),
    )
    try:
        return _COMMANDS[cfg.subcommand](cfg)
    except (SwkbError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
