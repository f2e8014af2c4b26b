"""``bellwit`` command line interface.

Exit status is 0 on success, 1 when a computation or input file fails, 2 on usage errors.
Worker count and compute backend come from ``BELLWIT_THREADS`` and ``BELLWIT_COMPUTE``.
"""

import argparse
import sys
from enum import Enum
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple
from typing_extensions import Annotated

from loguru import logger
from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from bellwit import exceptions, serialization
from bellwit.bell_tensor import BellTensor
from bellwit.bisep import bounds_report
from bellwit.compute import ComputeBackend
from bellwit.family import Family
from bellwit.optimize import DEFAULT_RESTARTS, DEFAULT_TOL, seesaw_quantum_max
from bellwit.quantum import ghz_correlators
from bellwit.settings import Settings
from bellwit.state_spec import StateSpec
from bellwit.tensor import DEFAULT_DELTA, build_cosine_tensor, build_parity_tensor
from bellwit.witness import certify, simulate_noisy_ghz, sweep


class Subcommand(Enum):
    BUILD = "build"
    BOUNDS = "bounds"
    OPTIMIZE = "optimize"
    CERTIFY = "certify"
    SWEEP = "sweep"
    SIMULATE = "simulate"


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"


_TENSOR_SOURCE = {Subcommand.BOUNDS, Subcommand.OPTIMIZE, Subcommand.SIMULATE}
_JSON_ONLY = {Subcommand.BUILD, Subcommand.OPTIMIZE, Subcommand.SIMULATE}


class Config(BaseModel):
    """Validated flags of one ``bellwit`` invocation.

    Flag combinations are checked here, before any computation runs.
    """
    subcommand: Subcommand
    verbose: bool = False
    family: Optional[Family] = None
    m: Optional[int] = None
    m_range: Optional[Tuple[int, int]] = None
    delta: Optional[Annotated[float, Field(allow_inf_nan=False)]] = None
    tensor: Optional[Path] = None
    data: Optional[Path] = None
    angles: Optional[Path] = None
    out: Optional[Path] = None
    format: OutputFormat = OutputFormat.JSON
    bruteforce: bool = True
    restarts: Annotated[int, Field(ge=1)] = DEFAULT_RESTARTS
    seed: Annotated[int, Field(ge=0)] = 0
    tol: Annotated[float, Field(gt=0, allow_inf_nan=False)] = DEFAULT_TOL
    stat_tol: Annotated[float, Field(ge=0, allow_inf_nan=False)] = 1e-9
    V: Optional[Annotated[float, Field(allow_inf_nan=False)]] = None


    @field_validator("family", mode="before")
    @classmethod
    def family_closed_form(cls, v: Any) -> Any:
        if v == Family.CUSTOM.value or v is Family.CUSTOM:
            raise ValueError("--family must be cosine or parity; pass custom tensors with --tensor")

        return v


    @model_validator(mode="after")
    def check_flags(self) -> "Config":
        sub = self.subcommand
        if sub in _JSON_ONLY and self.format is OutputFormat.CSV:
            raise ValueError(f"{sub.value} only writes json")

        if self.delta is not None and self.family is Family.PARITY:
            raise ValueError("--delta only applies to the cosine family")

        if sub is Subcommand.SWEEP:
            if self.family is None or self.m_range is None:
                raise ValueError("sweep needs --family and --m a..b")

            return self

        if sub is Subcommand.CERTIFY:
            if self.tensor is None or self.data is None:
                raise ValueError("certify needs --tensor and --data")

            return self

        if sub is Subcommand.BUILD:
            if self.family is None or self.m is None:
                raise ValueError("build needs --family and --m")

            return self

        if sub in _TENSOR_SOURCE:
            if self.tensor is not None and (self.family is not None or self.m is not None):
                raise ValueError(f"{sub.value} takes either --tensor or --family with --m, not both")

            if self.tensor is None and (self.family is None or self.m is None):
                raise ValueError(f"{sub.value} needs --tensor or --family with --m")

        if sub is Subcommand.SIMULATE:
            if self.V is None:
                raise ValueError("simulate needs --V")

            if not 0.0 <= self.V <= 1.0:
                raise ValueError(f"--V must lie in [0, 1], got {self.V}")

        return self


def parse_m_range(text: str) -> Tuple[int, int]:
    """Parse the inclusive ``a..b`` range syntax. A bare ``m`` means ``m..m``.
    """
    low, sep, high = text.partition("..")
    try:
        if sep == "":
            return int(low), int(low)

        return int(low), int(high)
    except ValueError:
        raise ValueError(f"--m must be an integer or a range a..b, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bellwit",
        description="Multisetting tripartite Bell inequalities and device independent "
                    "genuine tripartite entanglement witnesses."
    )
    parser.add_argument("--verbose", action="store_true", help="Log progress to stderr.")
    subparsers = parser.add_subparsers(dest="subcommand", required=True)

    def family_flags(sub: argparse.ArgumentParser, m_help: str = "Settings per party.") -> None:
        sub.add_argument("--family", choices=[Family.COSINE.value, Family.PARITY.value])
        sub.add_argument("--m", help=m_help)
        sub.add_argument("--delta", type=float, help=f"Cosine phase offset. Default {DEFAULT_DELTA}.")

    def out_flags(sub: argparse.ArgumentParser, formats: bool) -> None:
        sub.add_argument("--out", help="Output file. Default stdout.")
        if formats is True:
            sub.add_argument("--format", choices=[f.value for f in OutputFormat])

    build = subparsers.add_parser(Subcommand.BUILD.value, help="Write a Bell tensor.")
    family_flags(build)
    out_flags(build, formats=False)

    bounds = subparsers.add_parser(Subcommand.BOUNDS.value, help="Quantum, biseparable and no-signalling bounds.")
    family_flags(bounds)
    bounds.add_argument("--tensor", help="Bell tensor JSON file.")
    bounds.add_argument("--no-bruteforce", action="store_true", help="Skip the brute-force search.")
    out_flags(bounds, formats=True)

    optimize = subparsers.add_parser(Subcommand.OPTIMIZE.value, help="See-saw search of the quantum maximum.")
    family_flags(optimize)
    optimize.add_argument("--tensor", help="Bell tensor JSON file.")
    optimize.add_argument("--restarts", type=int, default=DEFAULT_RESTARTS)
    optimize.add_argument("--seed", type=int, default=0)
    optimize.add_argument("--tol", type=float, default=DEFAULT_TOL)
    out_flags(optimize, formats=False)

    cert = subparsers.add_parser(Subcommand.CERTIFY.value, help="Certify genuine tripartite entanglement.")
    cert.add_argument("--tensor", required=True, help="Bell tensor JSON file.")
    cert.add_argument("--data", required=True, help="Correlation tensor JSON file.")
    cert.add_argument("--stat-tol", type=float, default=1e-9, help="Certification tolerance.")
    out_flags(cert, formats=True)

    sweep_parser = subparsers.add_parser(Subcommand.SWEEP.value, help="Closed form bounds over a range of m.")
    family_flags(sweep_parser, m_help="Inclusive range a..b.")
    out_flags(sweep_parser, formats=True)

    simulate = subparsers.add_parser(Subcommand.SIMULATE.value, help="Correlators of a noisy GHZ state.")
    family_flags(simulate)
    simulate.add_argument("--tensor", help="Bell tensor JSON file.")
    simulate.add_argument("--V", type=float, help="Visibility in [0, 1].")
    simulate.add_argument("--angles", help="Measurement angles JSON file. Default canonical angles.")
    out_flags(simulate, formats=False)

    return parser


def make_config(args: argparse.Namespace) -> Config:
    """Turn parsed arguments into a validated ``Config``.

    Raises
    ------
    ValueError
        ``--m`` is malformed.
    pydantic.ValidationError
        Invalid flag values or combinations.
    """
    sub = Subcommand(args.subcommand)
    values: Dict[str, Any] = {
        key: value
        for key, value in vars(args).items()
        if value is not None and key not in ("m", "no_bruteforce", "format")
    }
    values["subcommand"] = sub
    values["bruteforce"] = not getattr(args, "no_bruteforce", False)
    fmt = getattr(args, "format", None)
    values["format"] = fmt if fmt is not None else (
        OutputFormat.CSV if sub is Subcommand.SWEEP else OutputFormat.JSON
    )
    m_text = getattr(args, "m", None)
    if m_text is not None:
        if sub is Subcommand.SWEEP:
            values["m_range"] = parse_m_range(m_text)
        else:
            try:
                values["m"] = int(m_text)
            except ValueError:
                raise ValueError(f"--m must be an integer, got '{m_text}'")

    return Config.model_validate(values)


def run(config: Config, compute: ComputeBackend) -> str:
    """Execute a validated command and return its output text.

    Raises
    ------
    bellwit.exceptions.BellwitError
        The computation or an input file failed.
    """
    return _COMMANDS[config.subcommand](config, compute)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return 0 if error.code in (0, None) else 2

    _configure_logging(args.verbose)
    try:
        config = make_config(args)
        settings = Settings.from_env()
    except (ValueError, ValidationError) as error:
        print(f"bellwit: usage error: {_describe(error)}", file=sys.stderr)
        return 2

    try:
        with settings.compute_backend() as compute:
            text = run(config, compute)

        serialization.write_text(text, config.out)
    except exceptions.BellwitError as error:
        print(f"bellwit: error: {error}", file=sys.stderr)
        return 1

    return 0


def _configure_logging(verbose: bool) -> None:
    logger.remove()
    logger.add(sys.stderr, level="DEBUG" if verbose is True else "WARNING")
    logger.enable("bellwit")


def _describe(error: Exception) -> str:
    if isinstance(error, ValidationError):
        return "; ".join(e["msg"] for e in error.errors())

    return str(error)


def _tensor(config: Config) -> BellTensor:
    if config.tensor is not None:
        return serialization.read_tensor(config.tensor)

    if config.family is Family.PARITY:
        return build_parity_tensor(config.m)

    delta = DEFAULT_DELTA if config.delta is None else config.delta

    return build_cosine_tensor(config.m, delta)


def _build(config: Config, compute: ComputeBackend) -> str:
    return serialization.dumps(_tensor(config))


def _bounds(config: Config, compute: ComputeBackend) -> str:
    report = bounds_report(_tensor(config), compute=compute, bruteforce=config.bruteforce)
    if config.format is OutputFormat.CSV:
        return serialization.record_to_csv(report)

    return serialization.dumps(report)


def _optimize(config: Config, compute: ComputeBackend) -> str:
    result = seesaw_quantum_max(
        _tensor(config),
        restarts=config.restarts,
        seed=config.seed,
        tol=config.tol,
        compute=compute
    )

    return serialization.dumps(result)


def _certify(config: Config, compute: ComputeBackend) -> str:
    result = certify(
        serialization.read_tensor(config.tensor),
        serialization.read_correlations(config.data),
        tol=config.stat_tol,
        compute=compute
    )
    if config.format is OutputFormat.CSV:
        return serialization.record_to_csv(result)

    return serialization.dumps(result)


def _sweep(config: Config, compute: ComputeBackend) -> str:
    delta = DEFAULT_DELTA if config.delta is None else config.delta
    table = sweep(config.family, config.m_range, delta=delta)
    if config.format is OutputFormat.CSV:
        return serialization.table_to_csv(table)

    return serialization.dumps(serialization.table_to_records(table))


def _simulate(config: Config, compute: ComputeBackend) -> str:
    t = _tensor(config)
    if config.angles is None:
        return serialization.dumps(simulate_noisy_ghz(t, config.V))

    angles = serialization.read_angles(config.angles)
    if angles.m != t.m:
        raise exceptions.DimensionMismatchError(f"Bell tensor has m={t.m} but angles have m={angles.m}")

    return serialization.dumps(ghz_correlators(angles, StateSpec(visibility=config.V)))


_COMMANDS: Dict[Subcommand, Callable[[Config, ComputeBackend], str]] = {
    Subcommand.BUILD: _build,
    Subcommand.BOUNDS: _bounds,
    Subcommand.OPTIMIZE: _optimize,
    Subcommand.CERTIFY: _certify,
    Subcommand.SWEEP: _sweep,
    Subcommand.SIMULATE: _simulate,
}


if __name__ == "__main__":
    sys.exit(main())
