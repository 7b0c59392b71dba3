"""Command-line interface: ``spin-ring-discord``."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

import argparse
import logging
import math
from pathlib import Path
import shlex
import sys
from typing import TYPE_CHECKING, Final, NoReturn

from spin_ring.discord._errors import DomainError, StateValidityError, UsageError
from spin_ring.discord.harness._emit import EMIT_REGISTRY, STDOUT, emit, emit_metadata
from spin_ring.discord.harness._region import region_map
from spin_ring.discord.harness._spec import Mode, SweepSpec
from spin_ring.discord.harness._sweep import run_sweep
from spin_ring.discord.qinfo import SearchSettings

if TYPE_CHECKING:
    from collections.abc import Sequence

logger = logging.getLogger(__name__)

EXIT_OK: Final = 0
EXIT_USAGE: Final = 1
EXIT_INVALID_STATE: Final = 2
EXIT_IO: Final = 3

REGION_FIELDS: Final = ("N", "gamma", "tau", "regime", "near_boundary", "numeric_axis")
_DEFAULT_SEARCH: Final = SearchSettings()


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    """Parser of the ``spin-ring-discord`` flags."""
    parser = _Parser(
        prog="spin-ring-discord",
        description=(
            "Quantum discord and classical correlations of a spin ring with a "
            "central spin: parameter sweeps, numeric-vs-analytic comparisons "
            "and regime maps."
        ),
    )
    parser.add_argument("--config", type=Path, help="file of 'key = value' lines mirroring the flags")

    phys = parser.add_argument_group("system")
    phys.add_argument("--num-spins", type=int, nargs="+", default=[3], help="values of N")
    phys.add_argument("--beta", type=float, default=1.0)
    phys.add_argument("--omega-a", type=float, default=0.06, help="ring Larmor frequency")
    phys.add_argument("--omega-b", type=float, default=0.03, help="central Larmor frequency")
    phys.add_argument("--coupling-g", type=float, default=1.0, help="ring-centre zz coupling")
    phys.add_argument(
        "--gamma",
        type=float,
        nargs="+",
        default=[],
        help="omega_a / omega_b values overriding --omega-a; in region-map mode, LO HI",
    )
    phys.add_argument("--unchecked", action="store_true", help="skip the high-temperature checks")
    phys.add_argument("--with-dipolar", action="store_true", help="evolve with the ring's dipolar interaction")
    phys.add_argument("--dipolar-d0", type=float, default=1.0)
    phys.add_argument("--seed", type=int, default=None, help="seed of random ring geometries")

    grid = parser.add_argument_group("grid")
    grid.add_argument("--tau-start", type=float, default=0.0, help="radians")
    grid.add_argument("--tau-end", type=float, default=math.pi / 2, help="radians")
    grid.add_argument("--tau-steps", type=int, default=21)
    grid.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.COMPARE.value)
    grid.add_argument("--resolution", type=int, default=40, help="regime-map cells per axis")
    grid.add_argument("--u-max", type=float, default=0.05, help="regime-map u")
    grid.add_argument("--numeric-axes", action="store_true", help="regime map: also run the optimizer")

    search = parser.add_argument_group("sphere search")
    search.add_argument("--grid-theta", type=int, default=_DEFAULT_SEARCH.n_theta)
    search.add_argument("--grid-phi", type=int, default=_DEFAULT_SEARCH.n_phi)
    search.add_argument("--top-k", type=int, default=_DEFAULT_SEARCH.top_k)

    out = parser.add_argument_group("output")
    out.add_argument("--format", choices=sorted(EMIT_REGISTRY), default="csv")
    out.add_argument("--output", default=STDOUT, help="path, or '-' for stdout")
    out.add_argument("--jobs", type=int, default=1)
    out.add_argument("--progress", action="store_true")
    out.add_argument("-v", "--verbose", action="count", default=0)
    out.add_argument("-q", "--quiet", action="store_true")
    return parser


def read_config(path: Path, parser: argparse.ArgumentParser) -> list[str]:
    """Translate a ``key = value`` file into command-line tokens.

    Keys are long flag names without the dashes. Values of list flags are
    separated by commas or blanks; switches take a boolean.
    """
    switches = {
        opt: action
        for action in parser._actions
        for opt in action.option_strings
    }
    tokens: list[str] = []
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        flag = "--" + key.strip().replace("_", "-")
        if not sep or flag not in switches or flag == "--config":
            msg = f"config {path}:{lineno}: cannot parse {raw!r}"
            raise UsageError(msg)

        value = value.strip()
        if switches[flag].nargs == 0:
            if value.lower() in {"1", "true", "yes", "on"}:
                tokens.append(flag)
            elif value.lower() not in {"0", "false", "no", "off"}:
                msg = f"config {path}:{lineno}: {key.strip()} expects a boolean"
                raise UsageError(msg)
            continue
        tokens += [flag, *shlex.split(value.replace(",", " "))]
    return tokens


def parse_args(argv: Sequence[str] | None = None) -> argparse.Namespace:
    """Parse ``argv``; flags override the ``--config`` file."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is None:
        return args
    tokens = read_config(args.config, parser)
    given = sys.argv[1:] if argv is None else list(argv)
    return parser.parse_args([*tokens, *given])


def spec_from_args(args: argparse.Namespace) -> SweepSpec:
    """Build the sweep spec of parsed arguments."""
    try:
        search = SearchSettings(n_theta=args.grid_theta, n_phi=args.grid_phi, top_k=args.top_k)
    except DomainError as err:
        msg = f"grid-theta/grid-phi/top-k: {err}"
        raise UsageError(msg) from err

    mode = Mode(args.mode)
    gamma_kwargs: dict[str, tuple[float, ...]] = {"gammas": tuple(args.gamma)}
    if mode is Mode.REGION_MAP:
        if args.gamma and len(args.gamma) != 2:  # noqa: PLR2004
            msg = "gamma: region-map mode takes a range LO HI"
            raise UsageError(msg)
        gamma_kwargs = {"gamma_range": tuple(args.gamma)} if args.gamma else {}

    return SweepSpec(
        tuple(args.num_spins),
        args.beta,
        args.omega_a,
        args.omega_b,
        args.coupling_g,
        args.tau_start,
        args.tau_end,
        args.tau_steps,
        mode=mode,
        checked=not args.unchecked,
        include_dipolar=args.with_dipolar,
        dipolar_d0=args.dipolar_d0,
        seed=args.seed,
        search=search,
        resolution=args.resolution,
        u_max=args.u_max,
        jobs=args.jobs,
        **gamma_kwargs,  # type: ignore[arg-type]
    )


def _run_region_map(spec: SweepSpec, args: argparse.Namespace) -> None:
    maps = [
        region_map(
            n,
            spec.gamma_range,
            (spec.tau_start, spec.tau_end),
            spec.resolution,
            numeric=args.numeric_axes,
            u_max=spec.u_max,
            settings=spec.search,
            jobs=spec.jobs,
            progress=args.progress,
        )
        for n in spec.num_spins
    ]
    rows = [row for m in maps for row in m.rows()]
    emit(rows, args.format, args.output, fieldnames=REGION_FIELDS)
    emit_metadata({str(m.num_spins): m.boundaries for m in maps}, args.output)

    if args.numeric_axes:
        for m in maps:
            for miss in m.mismatches():
                logger.warning(
                    "N=%d gamma=%.4g tau=%.4g: tag %s but numeric axis %s",
                    m.num_spins,
                    miss.gamma,
                    miss.tau,
                    miss.tag.value,
                    miss.numeric_axis,
                )


def _configure_logging(args: argparse.Namespace) -> None:
    level = logging.ERROR if args.quiet else max(logging.DEBUG, logging.WARNING - 10 * args.verbose)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def main(argv: Sequence[str] | None = None) -> int:
    """Entry point; returns the process exit code.

    Exit codes: 0 success, 1 usage error, 2 invalid state, 3 I/O error.
    """
    try:
        args = parse_args(argv)
        _configure_logging(args)
        spec = spec_from_args(args)
        if spec.mode is Mode.REGION_MAP:
            _run_region_map(spec, args)
        else:
            emit(run_sweep(spec, progress=args.progress), args.format, args.output)
    except StateValidityError as err:
        logger.error("invalid state: %s", err)  # noqa: TRY400
        return EXIT_INVALID_STATE
    except (UsageError, DomainError) as err:
        logger.error("usage: %s", err)  # noqa: TRY400
        return EXIT_USAGE
    except OSError as err:
        logger.error("I/O: %s", err)  # noqa: TRY400
        return EXIT_IO
    return EXIT_OK
