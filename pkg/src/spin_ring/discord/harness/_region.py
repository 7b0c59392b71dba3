"""Regime map over the ``(gamma, tau)`` plane."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass, field
import logging
from typing import TYPE_CHECKING, Any, NamedTuple

import numpy as np

from spin_ring.discord._errors import DomainError
from spin_ring.discord.analytic import Regime, classify_regime, regime_boundaries
from spin_ring.discord.analytic._regime import HALF_TURN
from spin_ring.discord.harness._sweep import imap_ordered
from spin_ring.discord.qinfo import minimize_conditional_entropy
from spin_ring.discord.state import SystemConfig, evolved_sector_state

if TYPE_CHECKING:
    from spin_ring.discord.analytic import RegimeTag
    from spin_ring.discord.qinfo import SearchSettings
    from spin_ring.discord.typing import Axis, RealArray

logger = logging.getLogger(__name__)


class RegionMismatch(NamedTuple):
    """A cell whose numeric argmin axis disagrees with its analytic tag."""

    gamma: float
    tau: float
    tag: Regime
    numeric_axis: Axis


@dataclass(frozen=True)
class RegionMap:
    """Analytic regime tags, and optionally numeric argmin axes, on a grid.

    Parameters
    ----------
    num_spins : int
    gammas, taus : ndarray
        Cell centers.
    tags : tuple[tuple[RegimeTag, ...], ...]
        ``tags[i][j]`` at ``(gammas[i], taus[j])``.
    numeric_axes : tuple[tuple[Axis, ...], ...] or None
        Dominant axis of the numeric argmin, same layout.
    boundaries : dict
        Boundary curves, as returned by ``regime_boundaries``.
    """

    num_spins: int
    gammas: RealArray
    taus: RealArray
    tags: tuple[tuple[RegimeTag, ...], ...]
    numeric_axes: tuple[tuple[Axis, ...], ...] | None = None
    boundaries: dict[str, dict[str, float]] = field(default_factory=dict)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.gammas), len(self.taus)

    def counts(self) -> dict[Regime, int]:
        """Number of cells per tag."""
        out = dict.fromkeys(Regime, 0)
        for row in self.tags:
            for tag in row:
                out[tag.tag] += 1
        return out

    def _cell_width(self, values: RealArray) -> float:
        return float(values[1] - values[0]) if len(values) > 1 else float("inf")

    def near_boundary(self, i: int, j: int, margin_cells: float = 1) -> bool:
        """Whether cell ``(i, j)`` lies within ``margin_cells`` widths of a boundary."""
        dg = margin_cells * self._cell_width(self.gammas)
        dt = margin_cells * self._cell_width(self.taus)
        gamma, tau = self.gammas[i], self.taus[j]
        return any(
            abs(gamma - b) < dg for b in self.boundaries["gamma"].values()
        ) or any(abs(tau - b) < dt for b in self.boundaries["tau"].values())

    def mismatches(self, margin_cells: float = 1) -> list[RegionMismatch]:
        """Classified cells away from every boundary whose axes disagree.

        Raises
        ------
        DomainError
            If the map was built without numeric axes.
        """
        if self.numeric_axes is None:
            msg = "the map has no numeric axes; build it with numeric=True"
            raise DomainError(msg)

        out: list[RegionMismatch] = []
        for i, j in np.ndindex(*self.shape):
            tag = self.tags[i][j]
            if not tag.is_classified or self.near_boundary(i, j, margin_cells):
                continue
            axis = self.numeric_axes[i][j]
            if axis != tag.axis:
                out.append(RegionMismatch(float(self.gammas[i]), float(self.taus[j]), tag.tag, axis))
        return out

    def rows(self) -> list[dict[str, Any]]:
        """One flat record per cell, ``gamma`` major."""
        return [
            {
                "N": self.num_spins,
                "gamma": float(self.gammas[i]),
                "tau": float(self.taus[j]),
                "regime": self.tags[i][j].tag.value,
                "near_boundary": self.tags[i][j].near_boundary,
                "numeric_axis": None if self.numeric_axes is None else self.numeric_axes[i][j],
            }
            for i, j in np.ndindex(*self.shape)
        ]


def _centers(lo: float, hi: float, resolution: int) -> RealArray:
    edges = np.linspace(lo, hi, resolution + 1)
    return (edges[:-1] + edges[1:]) / 2


def _argmin_axis(cell: tuple[SystemConfig, float, SearchSettings | None]) -> Axis:
    config, tau, settings = cell
    direction, _ = minimize_conditional_entropy(evolved_sector_state(config, tau), settings)
    return direction.dominant_axis


def region_map(
    num_spins: int,
    gamma_range: tuple[float, float] = (0.1, 3.0),
    tau_range: tuple[float, float] = (0.0, HALF_TURN),
    resolution: int = 40,
    *,
    numeric: bool = False,
    u_max: float = 0.05,
    settings: SearchSettings | None = None,
    jobs: int = 1,
    progress: bool = False,
) -> RegionMap:
    """Tag every cell of a ``resolution x resolution`` grid with its regime.

    Cells are centered, so no cell sits on a window edge. The closed forms
    depend on ``u`` and ``v`` only through ``gamma``, so every cell uses
    ``u = u_max``.

    Parameters
    ----------
    num_spins : int
        ``N >= 3``.
    gamma_range, tau_range : (float, float), optional
    resolution : int, optional
        Cells per axis.
    numeric : bool, optional keyword-only
        Also record the dominant axis of the numeric argmin.
    u_max : float, optional keyword-only
        ``u`` of every cell.
    settings : SearchSettings or None, optional keyword-only
        Sphere-search resolution of the numeric argmin.
    jobs : int, optional keyword-only
        Worker processes for the numeric cells.
    progress : bool, optional keyword-only
        Show a ``tqdm`` bar over the numeric cells.

    Examples
    --------
    >>> m = region_map(5, (1.5, 3.0), resolution=4)
    >>> set(m.counts()[r] for r in (Regime.IZ_SY, Regime.IZ_SX))
    {0}
    """
    if num_spins < 3:  # noqa: PLR2004
        msg = f"the regime map needs N >= 3, got {num_spins}"
        raise DomainError(msg)

    gammas = _centers(*gamma_range, resolution)
    taus = _centers(*tau_range, resolution)
    configs = [SystemConfig.from_u(num_spins, float(gamma), u_max) for gamma in gammas]
    tags = tuple(
        tuple(classify_regime(config, float(tau)) for tau in taus) for config in configs
    )

    axes: tuple[tuple[Axis, ...], ...] | None = None
    if numeric:
        cells = [(config, float(tau), settings) for config in configs for tau in taus]
        flat = list(
            imap_ordered(_argmin_axis, cells, jobs=jobs, progress=progress, desc="region map")
        )
        width = len(taus)
        axes = tuple(tuple(flat[i : i + width]) for i in range(0, len(flat), width))

    boundaries = regime_boundaries(num_spins)
    logger.info("regime map N=%d boundaries: %s", num_spins, boundaries)
    return RegionMap(num_spins, gammas, taus, tags, axes, boundaries)
