"""Command-line front end.

Usage::

    mobius-orbits [--log-level L] decompose --zeta RE,IM --omega RE,IM
    mobius-orbits orbit --angles PHI,LAMBDA,TAU --z0 1,0 --n 8 --format csv
    mobius-orbits rotmat --quaternion Q0,Q1,Q2,Q3
    mobius-orbits convert --angles PHI,LAMBDA,TAU
    mobius-orbits check --seed 7 --n-iters 200

Data goes to stdout (or ``--output``), diagnostics to stderr. Exit codes are
0 on success, 1 when an invariant fails and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import math
import sys
from collections.abc import Sequence
from typing import Literal, Self

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, model_validator

from mobius_orbits._version import __version__
from mobius_orbits.adapters.report_io import (
    check_report,
    convert_report,
    decompose_report,
    dump_csv,
    dump_json,
    orbit_report,
    rotmat_report,
    save_report,
)
from mobius_orbits.config.settings import MobiusOrbitsSettings
from mobius_orbits.domain.bridge import gamma
from mobius_orbits.domain.exceptions import (
    ConfigurationError,
    DegenerateOrbitError,
    MobiusOrbitsError,
)
from mobius_orbits.domain.extplane import INFINITY, ExtComplex
from mobius_orbits.domain.lie import so3_generator
from mobius_orbits.domain.mobius import QuatMobius
from mobius_orbits.domain.orbits import sample_invariant_curve
from mobius_orbits.domain.polar import angles_to_params
from mobius_orbits.domain.quaternion import Quaternion
from mobius_orbits.domain.verification import SuiteReport, run_invariant_suite

EXIT_OK = 0
EXIT_INVARIANT_FAILURE = 1
EXIT_USAGE = 2

Subcommand = Literal["decompose", "orbit", "rotmat", "convert", "check"]


# ──────────────────────────────────────────────────────────────────────────────
# Argument types
# ──────────────────────────────────────────────────────────────────────────────


def _floats(text: str, count: int) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != count:
        msg = f"expected {count} comma-separated numbers, got {text!r}"
        raise argparse.ArgumentTypeError(msg)
    try:
        values = tuple(float(p) for p in parts)
    except ValueError as e:
        msg = f"malformed number in {text!r}"
        raise argparse.ArgumentTypeError(msg) from e
    if not all(math.isfinite(v) for v in values):
        msg = f"non-finite number in {text!r}"
        raise argparse.ArgumentTypeError(msg)
    return values


def complex_pair(text: str) -> complex:
    """Parse ``RE,IM``."""
    re, im = _floats(text, 2)
    return complex(re, im)


def four_reals(text: str) -> tuple[float, float, float, float]:
    q0, q1, q2, q3 = _floats(text, 4)
    return q0, q1, q2, q3


def three_reals(text: str) -> tuple[float, float, float]:
    a, b, c = _floats(text, 3)
    return a, b, c


def ext_point(text: str) -> ExtComplex:
    """Parse ``RE,IM`` or ``inf``."""
    if text.strip().lower() in ("inf", "infinity"):
        return INFINITY
    return ExtComplex.finite(complex_pair(text))


# ──────────────────────────────────────────────────────────────────────────────
# Validated invocation
# ──────────────────────────────────────────────────────────────────────────────


class CliConfig(BaseModel, frozen=True):
    """One validated CLI invocation."""

    subcommand: Subcommand
    zeta: complex | None = None
    omega: complex | None = None
    quaternion: tuple[float, float, float, float] | None = None
    angles: tuple[float, float, float] | None = Field(
        default=None, description="(φ, λ, τ) with λ = arg ω"
    )
    z0: ExtComplex = Field(default_factory=lambda: ExtComplex.finite(1))
    n_samples: int | None = None
    tolerance_scale: float = Field(default=1.0, gt=0)
    seed: int | None = None
    n_iters: int | None = Field(default=None, ge=1)
    perturbation: float = 0.0

    @model_validator(mode="after")
    def _one_input_form(self) -> Self:
        if self.subcommand == "check":
            return self
        if (self.zeta is None) != (self.omega is None):
            msg = "--zeta and --omega must be given together"
            raise ValueError(msg)
        forms = [
            self.zeta is not None,
            self.quaternion is not None,
            self.angles is not None,
        ]
        if sum(forms) != 1:
            msg = "give exactly one of --zeta/--omega, --quaternion, --angles"
            raise ValueError(msg)
        if self.n_samples is not None and self.n_samples < 2:
            msg = f"--n must be at least 2, got {self.n_samples}"
            raise ValueError(msg)
        return self

    def transformation(self) -> QuatMobius:
        """The input as a canonical quaternionic transformation.

        Raises:
            ValidationError: If the input is the zero pair or quaternion.
        """
        if self.quaternion is not None:
            return gamma(Quaternion.from_array(list(self.quaternion))).to_quat_mobius()
        if self.angles is not None:
            phi, lam, tau = self.angles
            return angles_to_params(tau, phi, lam)
        if self.zeta is None or self.omega is None:
            msg = "no transformation given"
            raise ConfigurationError(msg)
        return QuatMobius.of(self.zeta, self.omega)


# ──────────────────────────────────────────────────────────────────────────────
# Commands
# ──────────────────────────────────────────────────────────────────────────────


def cmd_decompose(q: QuatMobius) -> str:
    return dump_json(decompose_report(q))


def cmd_rotmat(q: QuatMobius) -> str:
    try:
        generator = so3_generator(q)
    except DegenerateOrbitError:
        logger.info("Identity input: no orbit generator")
        generator = None
    return dump_json(rotmat_report(q, generator))


def cmd_convert(q: QuatMobius) -> str:
    return dump_json(convert_report(q))


def cmd_orbit(
    q: QuatMobius, z0: ExtComplex, n: int, output_format: Literal["json", "csv"]
) -> str:
    samples = sample_invariant_curve(q, z0, n)
    if output_format == "csv":
        return dump_csv(samples)
    return dump_json(orbit_report(q, z0, samples))


def cmd_check(
    settings: MobiusOrbitsSettings, tolerance_scale: float, perturbation: float
) -> tuple[str, SuiteReport]:
    tolerances = settings.tolerances.scaled(tolerance_scale)
    suite = run_invariant_suite(
        seed=settings.seed,
        n_iters=settings.n_iters,
        tolerances=tolerances,
        perturbation=perturbation,
        fd_step=settings.lie.fd_step,
    )
    return dump_json(check_report(suite)), suite


# ──────────────────────────────────────────────────────────────────────────────
# Parser and entry point
# ──────────────────────────────────────────────────────────────────────────────


def _add_input_options(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("transformation (exactly one form)")
    group.add_argument("--zeta", type=complex_pair, metavar="RE,IM")
    group.add_argument("--omega", type=complex_pair, metavar="RE,IM")
    group.add_argument("--quaternion", type=four_reals, metavar="Q0,Q1,Q2,Q3")
    group.add_argument(
        "--angles",
        type=three_reals,
        metavar="PHI,LAMBDA,TAU",
        help="declination, arg ω and rotation angle in radians",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mobius-orbits",
        description="Quaternionic Möbius transformations, orbits and generators.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument(
        "--log-level",
        choices=["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR"],
        default=None,
        help="stderr log level (default: settings, WARNING)",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    commands = {
        "decompose": "axis, angles, W∘D∘W* factors and fixed points",
        "orbit": "sample the invariant curve of a point",
        "rotmat": "induced rotation, [C_q] and orbit generator",
        "convert": "all representations of one transformation",
        "check": "run the seeded invariant suite",
    }
    for name, help_text in commands.items():
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--output", metavar="PATH", help="write the report here")
        if name != "check":
            _add_input_options(sub)

    orbit = subparsers.choices["orbit"]
    orbit.add_argument("--z0", type=ext_point, default=None, metavar="RE,IM|inf")
    orbit.add_argument("--n", type=int, default=None, dest="n_samples")
    orbit.add_argument(
        "--format", choices=["json", "csv"], default=None, dest="output_format"
    )

    check = subparsers.choices["check"]
    check.add_argument("--seed", type=int, default=None)
    check.add_argument("--n-iters", type=int, default=None)
    check.add_argument("--tolerance-scale", type=float, default=1.0)
    check.add_argument(
        "--perturb",
        type=float,
        default=0.0,
        dest="perturbation",
        help=argparse.SUPPRESS,
    )
    return parser


def _configure_logging(level: str) -> None:
    logger.remove()
    logger.add(
        sys.stderr,
        level=level,
        format="<level>{level: <8}</level> | {name}:{function} - {message}",
    )


def _orbit_overrides(args: argparse.Namespace) -> dict[str, int] | None:
    n_samples = getattr(args, "n_samples", None)
    return None if n_samples is None else {"n_samples": n_samples}


def _settings(args: argparse.Namespace) -> MobiusOrbitsSettings:
    """Settings with the flags as keyword arguments; environment variables win."""
    overrides = {
        key: value
        for key, value in (
            ("seed", getattr(args, "seed", None)),
            ("n_iters", getattr(args, "n_iters", None)),
            ("output_format", getattr(args, "output_format", None)),
            ("log_level", args.log_level),
            ("orbit", _orbit_overrides(args)),
        )
        if value is not None
    }
    return MobiusOrbitsSettings(**overrides)


def _config(args: argparse.Namespace) -> CliConfig:
    fields = {
        name: value
        for name, value in vars(args).items()
        if name in CliConfig.model_fields and value is not None
    }
    return CliConfig(**fields)


def _run(config: CliConfig, settings: MobiusOrbitsSettings) -> tuple[str, int]:
    if config.subcommand == "check":
        text, suite = cmd_check(settings, config.tolerance_scale, config.perturbation)
        if not suite.passed:
            return text, EXIT_INVARIANT_FAILURE
        logger.info("All invariants passed")
        return text, EXIT_OK

    q = config.transformation()
    if config.subcommand == "decompose":
        return cmd_decompose(q), EXIT_OK
    if config.subcommand == "rotmat":
        return cmd_rotmat(q), EXIT_OK
    if config.subcommand == "convert":
        return cmd_convert(q), EXIT_OK
    return (
        cmd_orbit(q, config.z0, settings.orbit.n_samples, settings.output_format),
        EXIT_OK,
    )


def main(argv: Sequence[str] | None = None) -> int:
    """Run the CLI and return its exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        settings = _settings(args)
    except ValidationError as e:
        _configure_logging("ERROR")
        logger.error(f"Invalid settings: {e}")
        return EXIT_USAGE
    _configure_logging(settings.log_level)

    try:
        config = _config(args)
        text, code = _run(config, settings)
    except (MobiusOrbitsError, ValueError) as e:
        logger.error(f"{args.subcommand} failed: {e}")
        return EXIT_USAGE

    if args.output:
        try:
            path = save_report(text, args.output)
        except MobiusOrbitsError as e:
            logger.error(str(e))
            return EXIT_USAGE
        logger.info(f"Report written to {path}")
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
