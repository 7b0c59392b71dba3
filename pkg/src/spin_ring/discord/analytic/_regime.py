"""Which interaction carries the quantum correlations."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass
from enum import Enum
import logging
import math
from typing import TYPE_CHECKING, Final

from spin_ring.discord._errors import DomainError
from spin_ring.discord.setup_package import BOUNDARY_GUARD
from spin_ring.discord.utils import within_bounds

if TYPE_CHECKING:
    from spin_ring.discord.state import SystemConfig
    from spin_ring.discord.typing import Axis

logger = logging.getLogger(__name__)

QUARTER_TURN: Final = math.pi / 4
ARCTAN_SQRT2: Final = math.atan(math.sqrt(2))
HALF_TURN: Final = math.pi / 2


class Regime(Enum):
    """Interaction component responsible for the quantum correlations."""

    IY_SZ = "IySz"
    IZ_SY = "IzSy"
    IZ_SX = "IzSx"
    UNCLASSIFIED = "Unclassified"

    @property
    def axis(self) -> Axis | None:
        """Measurement axis minimizing the conditional entropy."""
        return _AXIS[self]


_AXIS: Final[dict[Regime, Axis | None]] = {
    Regime.IY_SZ: "z",
    Regime.IZ_SY: "y",
    Regime.IZ_SX: "x",
    Regime.UNCLASSIFIED: None,
}


@dataclass(frozen=True, slots=True)
class RegimeTag:
    """Classification of one ``(config, tau)`` point.

    Parameters
    ----------
    tag : Regime
    condition_citation : str
        The condition that assigned the tag.
    near_boundary : bool
        The deciding margin lies within the ``1e-12`` guard band.
    margin : float
        Smallest slack among the deciding inequalities; for an unclassified
        point, the largest (negative) slack over all candidate regimes.
    """

    tag: Regime
    condition_citation: str
    near_boundary: bool = False
    margin: float = math.nan

    @property
    def axis(self) -> Axis | None:
        return self.tag.axis

    @property
    def is_classified(self) -> bool:
        return self.tag is not Regime.UNCLASSIFIED


def mid_window_ratio(num_spins: int, /) -> float:
    """``(4/3) (N-1) / (1 - 3**-(N-1))``, the bound on ``u**2 / v**2``."""
    n = num_spins - 1
    return 4 / 3 * n / (1 - 3.0**-n)


def regime_boundaries(num_spins: int, /) -> dict[str, dict[str, float]]:
    """Boundary curves of the regime map in the ``(gamma, tau)`` plane.

    Examples
    --------
    >>> b = regime_boundaries(5)
    >>> b["gamma"]["small_tau_y"], round(b["gamma"]["large_tau_x"], 4)
    (0.5, 0.3536)
    """
    n = num_spins - 1
    return {
        "gamma": {
            "ring_dominant": 1.0,
            "small_tau_y": 1 / math.sqrt(n),
            "mid_tau_y": 1 / math.sqrt(mid_window_ratio(num_spins)),
            "large_tau_x": 1 / math.sqrt(2 * n),
        },
        "tau": {
            "window_start": 0.0,
            "quarter_turn": QUARTER_TURN,
            "arctan_sqrt2": ARCTAN_SQRT2,
            "window_end": HALF_TURN,
        },
    }


def _candidates(
    config: SystemConfig, tau: float
) -> list[tuple[Regime, str, list[float], list[float]]]:
    """Regimes with their strict and non-strict slacks."""
    u, v = config.u, config.v
    n = config.num_ring_spins
    out: list[tuple[Regime, str, list[float], list[float]]] = [
        (Regime.IY_SZ, "v > u", [v - u], []),
    ]
    if n < 2:  # noqa: PLR2004
        return out

    out.append(
        (
            Regime.IZ_SY,
            "u^2 > (N-1) v^2, 0 < tau < pi/4",
            [u**2 - n * v**2, tau, QUARTER_TURN - tau],
            [],
        )
    )
    out.append(
        (
            Regime.IZ_SY,
            "u^2 > (4/3)(N-1)/(1-3^-(N-1)) v^2, pi/4 <= tau < arctan(sqrt 2)",
            [u**2 - mid_window_ratio(config.total_spins) * v**2, ARCTAN_SQRT2 - tau],
            [tau - QUARTER_TURN],
        )
    )
    if config.total_spins % 2 == 1:
        out.append(
            (
                Regime.IZ_SX,
                "u^2 > 2(N-1) v^2, N odd, arctan(sqrt 2) < tau < pi/2",
                [u**2 - 2 * n * v**2, tau - ARCTAN_SQRT2, HALF_TURN - tau],
                [],
            )
        )
    return out


def classify_regime(config: SystemConfig, tau: float) -> RegimeTag:
    """Assign the closed-form regime of ``(config, tau)``.

    Parameters
    ----------
    config : SystemConfig
    tau : float
        Dimensionless time in ``[0, pi/2]``.

    Returns
    -------
    RegimeTag
        ``Regime.UNCLASSIFIED`` when no condition holds strictly; such points
        need the numeric optimizer.

    Raises
    ------
    DomainError
        If ``tau`` is outside ``[0, pi/2]``.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> classify_regime(SystemConfig.from_u(5, 2.0, 0.05), 0.3).tag
    <Regime.IY_SZ: 'IySz'>
    """
    if not within_bounds(tau, 0.0, HALF_TURN):
        msg = f"tau = {tau} is outside the classification window [0, pi/2]"
        raise DomainError(msg)

    best_margin = -math.inf
    for regime, condition, strict, loose in _candidates(config, tau):
        margin = min(strict + loose)
        if all(s > 0 for s in strict) and all(s >= 0 for s in loose):
            near = margin < BOUNDARY_GUARD
            if near:
                logger.warning(
                    "tau=%.6g N=%d gamma=%.6g lies within %g of the %s boundary",
                    tau,
                    config.total_spins,
                    config.gamma,
                    BOUNDARY_GUARD,
                    regime.value,
                )
            return RegimeTag(regime, condition, near_boundary=near, margin=margin)
        best_margin = max(best_margin, margin)

    near = abs(best_margin) < BOUNDARY_GUARD
    if near:
        logger.warning(
            "tau=%.6g N=%d gamma=%.6g is unclassified at a regime boundary",
            tau,
            config.total_spins,
            config.gamma,
        )
    return RegimeTag(
        Regime.UNCLASSIFIED,
        "no closed-form condition holds",
        near_boundary=near,
        margin=best_margin,
    )
