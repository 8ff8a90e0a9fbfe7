"""Command-line interface.

Subcommands
-----------
``list``
    every catalog algebra/variant with dimension, classes and parameter slots;
``verify``
    Jacobi, Casimir-residual and omega*theta=1 suites with a pass/fail table;
``orbit``
    the restricted pairing matrix, its inverse, the canonical bracket
    matrix and the G/F scalars of a standard orbit;
``classify``
    the phase-space taxonomy of all standard orbits (plus their h = 0
    reductions, which are canonical);
``simulate``
    RK4 trajectory of the modified Hamilton equations;
``realize``
    closed-form time evolution of an extended-Static orbit state with its
    two invariants.

Options can come from flags or an INI file (section ``[run]``, parameters
as ``param.NAME`` keys); flags win.  Output is deterministic: floats are
printed with %.17g, exact rationals as fraction strings, and no
timestamps are emitted.  Exit status: 0 all passed, 1 verification or
integration failure (including degenerate charts), 2 configuration error.
"""

from __future__ import annotations

import argparse
import configparser
import io
import json
import random
import sys
from dataclasses import dataclass, field, replace
from fractions import Fraction

import numpy as np

from .algebra_core import StructureConstants
from .catalog import (
    CatalogError,
    KinematicalParams,
    build,
    list_catalog,
)
from .coadjoint import (
    DegenerateChartError,
    STANDARD_ORBIT_NAMES,
    classify,
    standard_orbit,
)
from .mechanics import (
    HamiltonianSpec,
    IntegrationError,
    NCPhaseSpace2D,
    hamiltonian_value,
    integrate,
)
from .rational_linalg import rat, reye
from .static_group import (
    StaticConstants,
    StaticOrbitState,
    noncentral_algebra,
    noncentral_invariants,
    static_invariants,
    static_symplectic,
    time_evolution,
)

__all__ = ["ConfigError", "RunConfig", "run", "main"]

_FORMATS = ("csv", "json-lines")
_COMMANDS = ("list", "verify", "orbit", "classify", "simulate", "realize")
_SEED = 20260823


class ConfigError(ValueError):
    """Raised for malformed configuration input."""


@dataclass
class RunConfig:
    """A fully resolved run request."""

    command: str
    algebra: str | None = None
    variant: str | None = None
    params: dict[str, str] = field(default_factory=dict)
    t_end: float = 10.0
    dt: float = 0.01
    out: str | None = None
    format: str = "csv"

    def __post_init__(self) -> None:
        if self.command not in _COMMANDS:
            raise ConfigError(
                f"unknown command {self.command!r}; valid: {', '.join(_COMMANDS)}"
            )
        if self.format not in _FORMATS:
            raise ConfigError(
                f"unknown format {self.format!r}; valid: {', '.join(_FORMATS)}"
            )
        if self.t_end <= 0 or self.dt <= 0:
            raise ConfigError("t_end and dt must be positive")

    def to_ini(self) -> str:
        """Serialize to the INI layout accepted by :meth:`from_ini`."""
        lines = ["[run]"]
        lines.append(f"command = {self.command}")
        if self.algebra is not None:
            lines.append(f"algebra = {self.algebra}")
        if self.variant is not None:
            lines.append(f"variant = {self.variant}")
        lines.append(f"t_end = {self.t_end!r}")
        lines.append(f"dt = {self.dt!r}")
        lines.append(f"format = {self.format}")
        if self.out is not None:
            lines.append(f"out = {self.out}")
        for key in sorted(self.params):
            lines.append(f"param.{key} = {self.params[key]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_ini(cls, text: str) -> "RunConfig":
        parser = configparser.ConfigParser()
        parser.optionxform = str  # param names are case sensitive (G vs g)
        try:
            parser.read_string(text)
        except configparser.Error as exc:
            raise ConfigError(f"malformed INI configuration: {exc}") from None
        if "run" not in parser:
            raise ConfigError("configuration must contain a [run] section")
        section = parser["run"]
        known = {"command", "algebra", "variant", "t_end", "dt", "format", "out"}
        fields: dict = {}
        params: dict[str, str] = {}
        for key, value in section.items():
            if key in known:
                fields[key] = value
            elif key.startswith("param."):
                params[key[len("param."):]] = value
            else:
                raise ConfigError(
                    f"unknown configuration key {key!r} in [run] section"
                )
        if "command" not in fields:
            raise ConfigError("configuration must set 'command'")
        try:
            t_end = float(fields.get("t_end", 10.0))
            dt = float(fields.get("dt", 0.01))
        except ValueError as exc:
            raise ConfigError(f"bad numeric value in configuration: {exc}") from None
        return cls(
            command=fields["command"],
            algebra=fields.get("algebra"),
            variant=fields.get("variant"),
            params=params,
            t_end=t_end,
            dt=dt,
            out=fields.get("out"),
            format=fields.get("format", "csv"),
        )


def _parse_cli_params(pairs: list[str]) -> dict[str, str]:
    params: dict[str, str] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ConfigError(
                f"--param expects key=value, got {pair!r}"
            )
        key, value = pair.split("=", 1)
        key = key.strip()
        if not key:
            raise ConfigError(f"--param expects key=value, got {pair!r}")
        params[key] = value.strip()
    return params


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    if args.config is not None:
        try:
            with open(args.config, "r", encoding="utf-8") as handle:
                config = RunConfig.from_ini(handle.read())
        except OSError as exc:
            raise ConfigError(f"cannot read configuration file: {exc}") from None
        config = replace(config, command=args.command)
    else:
        config = RunConfig(command=args.command)
    overrides: dict = {}
    if args.algebra is not None:
        overrides["algebra"] = args.algebra
    if args.variant is not None:
        overrides["variant"] = args.variant
    if args.t_end is not None:
        overrides["t_end"] = args.t_end
    if args.dt is not None:
        overrides["dt"] = args.dt
    if args.out is not None:
        overrides["out"] = args.out
    if args.format is not None:
        overrides["format"] = args.format
    if overrides:
        config = replace(config, **overrides)
    if args.param:
        merged = dict(config.params)
        merged.update(_parse_cli_params(args.param))
        config = replace(config, params=merged)
    return config


def _param_fraction(config: RunConfig, key: str, default) -> Fraction:
    raw = config.params.get(key)
    if raw is None:
        return rat(default)
    try:
        return rat(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad value for parameter {key!r}: {exc}") from None


def _param_float(config: RunConfig, key: str, default: float) -> float:
    return float(_param_fraction(config, key, rat(str(default))))


def _format_value(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (bool, str)):
        return str(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return "%.17g" % float(value)
    return str(value)


def _emit(config: RunConfig, fieldnames: list[str], rows: list[dict]) -> None:
    buffer = io.StringIO()
    if config.format == "csv":
        buffer.write(",".join(fieldnames) + "\n")
        for row in rows:
            buffer.write(
                ",".join(_format_value(row.get(name, "")) for name in fieldnames)
                + "\n"
            )
    else:
        for row in rows:
            obj = {name: _format_value(row.get(name, "")) for name in fieldnames}
            buffer.write(json.dumps(obj, sort_keys=True) + "\n")
    text = buffer.getvalue()
    if config.out is None:
        sys.stdout.write(text)
    else:
        with open(config.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


# -- subcommands ------------------------------------------------------------


def _cmd_list(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    rows = []
    for record in list_catalog():
        if config.algebra is not None and record.name != config.algebra:
            continue
        if config.variant is not None and record.variant != config.variant:
            continue
        rows.append(
            {
                "name": record.name,
                "label": record.label,
                "variant": record.variant,
                "dim": record.dim,
                "time_class": record.time_class,
                "space_class": record.space_class,
                "param_slots": " ".join(record.param_slots) or "-",
            }
        )
    return 0, ["name", "label", "variant", "dim", "time_class", "space_class", "param_slots"], rows


def _max_violation(algebra: StructureConstants) -> Fraction:
    worst = Fraction(0)
    for violation in algebra.jacobi_violations():
        worst = max(worst, violation.magnitude)
    return worst


def _random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def _cmd_verify(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    omega = _param_fraction(config, "omega", 1)
    kappa = _param_fraction(config, "kappa", 1)
    rows = []
    failed = False

    def add(suite: str, subject: str, residual: Fraction) -> None:
        nonlocal failed
        ok = residual == 0
        failed = failed or not ok
        rows.append(
            {
                "suite": suite,
                "subject": subject,
                "status": "pass" if ok else "fail",
                "max_residual": residual,
            }
        )

    for record in list_catalog():
        if config.algebra is not None and record.name != config.algebra:
            continue
        if config.variant is not None and record.variant != config.variant:
            continue
        algebra = build(record.name, record.variant, omega=omega, kappa=kappa)
        add("jacobi", f"{record.name}:{record.variant}", _max_violation(algebra))

    rng = random.Random(_SEED)
    for name in STANDARD_ORBIT_NAMES:
        if config.algebra is not None and name != config.algebra:
            continue
        orbit = standard_orbit(
            name, m=Fraction(2), h=Fraction(1), E=Fraction(2),
            omega=omega, kappa=kappa,
        )
        worst = Fraction(0)
        for invariant in orbit.invariants:
            for _ in range(5):
                point = orbit.point.replace(
                    **{
                        coord: _random_fraction(rng)
                        for coord in ("K1", "K2", "P1", "P2")
                    }
                )
                residual = invariant.residual(orbit.algebra, point)
                worst = max(worst, max(abs(r) for r in residual))
        add("casimir", f"{name}:central_ext", worst)
        product = orbit.structure.omega @ orbit.structure.theta
        identity = reye(orbit.structure.dim)
        add(
            "omega_theta",
            f"{name}:central_ext",
            max(
                abs(product[a, b] - identity[a, b])
                for a in range(orbit.structure.dim)
                for b in range(orbit.structure.dim)
            ),
        )

    if config.algebra is None or config.algebra == "S":
        constants = StaticConstants(m=1, mu=2, beta=1, kappa=1)
        algebra = noncentral_algebra()
        worst = Fraction(0)
        for invariant in noncentral_invariants():
            for _ in range(5):
                coords = [_random_fraction(rng) for _ in range(algebra.dim)]
                coords[algebra.index("M'")] = Fraction(2)
                coords[algebra.index("B")] = Fraction(1)
                coords[algebra.index("Lambda")] = Fraction(1)
                residual = invariant.residual(algebra, coords)
                worst = max(worst, max(abs(r) for r in residual))
        add("casimir", "S:noncentral_ext", worst)
        structure = static_symplectic(constants)
        product = structure.omega @ structure.theta
        identity = reye(structure.dim)
        add(
            "omega_theta",
            "S:noncentral_ext",
            max(
                abs(product[a, b] - identity[a, b])
                for a in range(structure.dim)
                for b in range(structure.dim)
            ),
        )

    return (1 if failed else 0), ["suite", "subject", "status", "max_residual"], rows


def _orbit_request(config: RunConfig):
    name = config.algebra
    if name is None:
        raise ConfigError(
            f"this command needs --algebra (one of {', '.join(STANDARD_ORBIT_NAMES)})"
        )
    return standard_orbit(
        name,
        m=_param_fraction(config, "m", 2),
        h=_param_fraction(config, "h", 1),
        E=_param_fraction(config, "E", 2),
        omega=_param_fraction(config, "omega", 1),
        kappa=_param_fraction(config, "kappa", 1),
    )


def _orbit_report(orbit) -> dict:
    worst = Fraction(0)
    for invariant in orbit.invariants:
        residual = invariant.residual(orbit.algebra, orbit.point)
        worst = max(worst, max(abs(r) for r in residual))
    return {
        "name": orbit.name,
        "variant": orbit.variant,
        "dim": orbit.structure.dim,
        "class": orbit.phase_space_class,
        "G": orbit.structure.G_field,
        "F": orbit.structure.F_field,
        "max_residual": worst,
    }


def _cmd_orbit(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    orbit = _orbit_request(config)
    report = _orbit_report(orbit)
    fieldnames = ["record", "key", "value1", "value2", "value3", "value4"]
    rows = [
        {
            "record": "report",
            "key": orbit.name,
            "value1": report["variant"],
            "value2": report["dim"],
            "value3": report["class"],
            "value4": report["max_residual"],
        },
        {"record": "field", "key": "G", "value1": report["G"]},
        {"record": "field", "key": "F", "value1": report["F"]},
    ]
    matrices = (
        ("omega", orbit.structure.omega),
        ("theta", orbit.structure.theta),
        ("canonical_theta", orbit.structure.canonical_theta),
    )
    for label, matrix in matrices:
        for i in range(matrix.shape[0]):
            row = {"record": label, "key": f"row{i}"}
            for j in range(matrix.shape[1]):
                row[f"value{j + 1}"] = matrix[i, j]
            rows.append(row)
    return 0, fieldnames, rows


def _cmd_classify(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    rows = []
    h = _param_fraction(config, "h", 1)
    for name in STANDARD_ORBIT_NAMES:
        if config.algebra is not None and name != config.algebra:
            continue
        for h_value in (h, Fraction(0)):
            orbit = standard_orbit(
                name,
                m=_param_fraction(config, "m", 2),
                h=h_value,
                E=_param_fraction(config, "E", 2),
                omega=_param_fraction(config, "omega", 1),
                kappa=_param_fraction(config, "kappa", 1),
            )
            report = _orbit_report(orbit)
            report["h"] = h_value
            rows.append(report)
    fieldnames = ["name", "variant", "dim", "class", "G", "F", "max_residual", "h"]
    return 0, fieldnames, rows


def _cmd_simulate(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    if config.algebra is not None:
        orbit = _orbit_request(config)
        g_default = orbit.structure.G_field
        f_default = orbit.structure.F_field
        mass_default = orbit.masses["m"]
    else:
        g_default = Fraction(0)
        f_default = Fraction(0)
        mass_default = Fraction(1)
    space = NCPhaseSpace2D(
        G_field=_param_fraction(config, "G", g_default),
        F_field=_param_fraction(config, "F", f_default),
        mass=_param_fraction(config, "mass", mass_default),
    )
    ham = HamiltonianSpec(
        linear=(
            _param_float(config, "a1", 0.0),
            _param_float(config, "a2", 0.0),
        ),
        quadratic=(
            _param_float(config, "k11", 0.0),
            _param_float(config, "k12", 0.0),
            _param_float(config, "k22", 0.0),
        ),
    )
    state0 = [
        _param_float(config, "q1", 0.0),
        _param_float(config, "q2", 0.0),
        _param_float(config, "p1", 1.0),
        _param_float(config, "p2", 0.0),
    ]
    trajectory = integrate(space, ham, state0, config.t_end, config.dt)
    rows = []
    for i in range(trajectory.times.size):
        q1, q2, p1, p2 = trajectory.states[i]
        rows.append(
            {
                "t": trajectory.times[i],
                "q1": q1,
                "q2": q2,
                "p1": p1,
                "p2": p2,
                "H": trajectory.energies[i],
                "drift": trajectory.invariant_drift[i],
            }
        )
    return 0, ["t", "q1", "q2", "p1", "p2", "H", "drift"], rows


def _cmd_realize(config: RunConfig) -> tuple[int, list[str], list[dict]]:
    constants = StaticConstants(
        m=_param_fraction(config, "m", 1),
        mu=_param_fraction(config, "mu", 2),
        beta=_param_fraction(config, "beta", 1),
        kappa=_param_fraction(config, "kappa", 1),
        nu=_param_fraction(config, "nu", 0),
        h=_param_fraction(config, "h", 0),
    )
    state = StaticOrbitState(
        constants=constants,
        position=(_param_float(config, "q1", 1.0), _param_float(config, "q2", 0.0)),
        velocity=(_param_float(config, "u1", 0.0), _param_float(config, "u2", 1.0)),
        momentum=(_param_float(config, "p1", 0.0), _param_float(config, "p2", 0.0)),
        boost_momentum=(
            _param_float(config, "k1", 0.0),
            _param_float(config, "k2", 0.0),
        ),
        energy=_param_float(config, "E", 0.0),
        angular_momentum=_param_float(config, "j", 0.0),
    )
    n_steps = max(1, int(round(config.t_end / config.dt)))
    h_step = config.t_end / n_steps
    rows = []
    for i in range(n_steps + 1):
        t = i * h_step
        evolved = time_evolution(state, t)
        s_inv, u_inv = static_invariants(evolved)
        rows.append(
            {
                "t": t,
                "q1": evolved.position[0],
                "q2": evolved.position[1],
                "u1": evolved.velocity[0],
                "u2": evolved.velocity[1],
                "p1": evolved.momentum[0],
                "p2": evolved.momentum[1],
                "k1": evolved.boost_momentum[0],
                "k2": evolved.boost_momentum[1],
                "E": evolved.energy,
                "s_inv": s_inv,
                "U": u_inv,
            }
        )
    fieldnames = [
        "t", "q1", "q2", "u1", "u2", "p1", "p2", "k1", "k2", "E", "s_inv", "U",
    ]
    return 0, fieldnames, rows


_DISPATCH = {
    "list": _cmd_list,
    "verify": _cmd_verify,
    "orbit": _cmd_orbit,
    "classify": _cmd_classify,
    "simulate": _cmd_simulate,
    "realize": _cmd_realize,
}


def run(config: RunConfig) -> int:
    """Execute a resolved run request; returns the process exit status."""
    try:
        code, fieldnames, rows = _DISPATCH[config.command](config)
    except (ConfigError, CatalogError) as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 2
    except (DegenerateChartError, IntegrationError) as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return 1
    except ValueError as exc:
        sys.stderr.write(f"verification failure: {exc}\n")
        return 1
    _emit(config, fieldnames, rows)
    return code


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kinorbit",
        description=(
            "Exact catalog of planar kinematical Lie algebras, their "
            "coadjoint-orbit phase spaces and noncommutative mechanics."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)
    helps = {
        "list": "list catalog algebras, variants, dimensions and parameter slots",
        "verify": "run Jacobi / Casimir / inverse-pairing suites",
        "orbit": "emit the symplectic data of a standard orbit",
        "classify": "emit the phase-space taxonomy of the standard orbits",
        "simulate": "integrate the modified Hamilton equations",
        "realize": "trace the time evolution of an extended-Static orbit state",
    }
    for command in _COMMANDS:
        p = sub.add_parser(command, help=helps[command])
        p.add_argument("--config", help="INI file with a [run] section")
        p.add_argument("--algebra", help="catalog algebra name (e.g. G, NH+, S)")
        p.add_argument("--variant", help="catalog variant name")
        p.add_argument(
            "--param",
            action="append",
            default=[],
            metavar="KEY=VALUE",
            help="set a model parameter (repeatable); values may be rational",
        )
        p.add_argument("--t-end", type=float, dest="t_end", help="integration horizon")
        p.add_argument("--dt", type=float, help="integration step")
        p.add_argument("--out", help="output file (default: stdout)")
        p.add_argument("--format", choices=_FORMATS, help="output format")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        config = _config_from_args(args)
    except ConfigError as exc:
        sys.stderr.write(f"configuration error: {exc}\n")
        return 2
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
