"""Evaluation of a sweep grid."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import astuple, dataclass, fields
import logging
import math
from multiprocessing import Pool
from typing import TYPE_CHECKING, Any, TypeVar

from spin_ring.discord._errors import DomainError, RegimeError
from spin_ring.discord.analytic import Regime, ht_classical, ht_discord
from spin_ring.discord.harness._spec import Mode
from spin_ring.discord.qinfo import numeric_correlations

if TYPE_CHECKING:
    from collections.abc import Callable, Iterable, Iterator, Sequence

    from spin_ring.discord.harness._spec import SweepSpec

logger = logging.getLogger(__name__)

A = TypeVar("A")
T = TypeVar("T")

# floor of the relative-deviation denominator
_REL_FLOOR = 1e-30


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep; absent values are NaN."""

    N: int  # noqa: N815
    gamma: float
    tau: float
    D_numeric: float = math.nan  # noqa: N815
    C_numeric: float = math.nan  # noqa: N815
    I_numeric: float = math.nan  # noqa: N815
    D_ht: float = math.nan  # noqa: N815
    C_ht: float = math.nan  # noqa: N815
    regime: str = Regime.UNCLASSIFIED.value
    n_opt_x: float = math.nan
    n_opt_y: float = math.nan
    n_opt_z: float = math.nan
    abs_dev: float = math.nan
    rel_dev: float = math.nan

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def values(self) -> tuple[Any, ...]:
        return astuple(self)

    def as_dict(self) -> dict[str, Any]:
        return dict(zip(self.field_names(), self.values(), strict=True))


def evaluate_point(spec: SweepSpec, num_spins: int, gamma: float | None, tau: float) -> SweepRow:
    """Row of one ``(N, gamma, tau)`` point.

    The numeric side runs first so that an invalid state surfaces as a
    `StateValidityError` before any closed form is tried.
    """
    config = spec.config_for(num_spins, gamma)
    row: dict[str, Any] = {"N": num_spins, "gamma": config.gamma, "tau": tau}

    if spec.mode in (Mode.NUMERIC, Mode.COMPARE):
        report = numeric_correlations(
            config,
            tau,
            settings=spec.search,
            include_dipolar=spec.include_dipolar,
            geometry=spec.geometry_for(num_spins),
        )
        nx, ny, nz = report.optimal_direction.vector
        row |= {
            "D_numeric": report.discord,
            "C_numeric": report.classical,
            "I_numeric": report.mutual_information,
            "n_opt_x": float(nx),
            "n_opt_y": float(ny),
            "n_opt_z": float(nz),
        }

    if spec.mode in (Mode.ANALYTIC, Mode.COMPARE):
        try:
            d_ht, tag = ht_discord(config, tau)
            c_ht, _ = ht_classical(config, tau, regime=tag.tag)
        except (RegimeError, DomainError) as err:
            logger.debug("no closed form at N=%d tau=%.6g: %s", num_spins, tau, err)
        else:
            row |= {"D_ht": d_ht, "C_ht": c_ht, "regime": tag.tag.value}

    if spec.mode is Mode.COMPARE and not math.isnan(row.get("D_ht", math.nan)):
        dev = abs(row["D_numeric"] - row["D_ht"])
        row |= {"abs_dev": dev, "rel_dev": dev / max(row["D_ht"], _REL_FLOOR)}

    return SweepRow(**row)


def _evaluate_star(args: tuple[SweepSpec, int, float | None, float]) -> SweepRow:
    return evaluate_point(*args)


def _progress(
    iterable: Iterable[T], total: int, *, enabled: bool, desc: str = "sweep"
) -> Iterable[T]:
    if not enabled:
        return iterable
    try:
        from tqdm import tqdm
    except ImportError:
        logger.info("tqdm is not installed; running without a progress bar")
        return iterable
    return tqdm(iterable, total=total, desc=desc)


def imap_ordered(
    func: Callable[[A], T],
    items: Sequence[A],
    *,
    jobs: int = 1,
    progress: bool = False,
    desc: str = "sweep",
) -> Iterator[T]:
    """Apply ``func`` to ``items`` on ``jobs`` workers, preserving order.

    Parameters
    ----------
    func : callable
        Picklable when ``jobs > 1``.
    items : sequence
    jobs : int, optional keyword-only
        Worker processes; ``1`` runs in this process.
    progress : bool, optional keyword-only
        Show a ``tqdm`` bar when ``tqdm`` is installed.
    desc : str, optional keyword-only
        Progress bar label.

    Yields
    ------
    object
        ``func(item)`` in the order of ``items``.

    Raises
    ------
    DomainError
        If ``jobs < 1``.
    """
    if jobs < 1:
        msg = f"jobs must be >= 1, got {jobs}"
        raise DomainError(msg)

    if jobs == 1:
        yield from _progress(map(func, items), len(items), enabled=progress, desc=desc)
        return

    with Pool(processes=jobs) as pool:
        yield from _progress(
            pool.imap(func, items), len(items), enabled=progress, desc=desc
        )


def run_sweep(spec: SweepSpec, *, progress: bool = False) -> Iterator[SweepRow]:
    """Evaluate every ``(N, gamma, tau)`` point of ``spec``.

    Parameters
    ----------
    spec : SweepSpec
        A non-region-map spec.
    progress : bool, optional keyword-only
        Show a ``tqdm`` bar when ``tqdm`` is installed.

    Yields
    ------
    SweepRow
        In lexicographic grid order, also with ``spec.jobs > 1``.

    Raises
    ------
    StateValidityError
        From an unchecked spec whose state is not positive.
    """
    if spec.mode is Mode.REGION_MAP:
        msg = "mode: region-map specs are evaluated by region_map"
        raise DomainError(msg)

    points = [(spec, n, gamma, tau) for n, gamma, tau in spec.grid()]
    logger.info("sweeping %d points in %s mode", len(points), spec.mode.value)
    yield from imap_ordered(_evaluate_star, points, jobs=spec.jobs, progress=progress)
