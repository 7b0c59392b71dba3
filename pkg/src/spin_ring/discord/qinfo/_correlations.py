"""Discord, classical correlations and mutual information of one state."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import KW_ONLY, dataclass
from enum import Enum
import logging
from typing import TYPE_CHECKING

from spin_ring.discord._errors import StateValidityError
from spin_ring.discord.operators import SubsystemLabel, partial_trace
from spin_ring.discord.qinfo._entropy import von_neumann_entropy
from spin_ring.discord.qinfo._optimize import minimize_conditional_entropy
from spin_ring.discord.setup_package import REPORT_TOLERANCE
from spin_ring.discord.state import evolved_sector_state, evolved_state

if TYPE_CHECKING:
    from spin_ring.discord.analytic import RegimeTag
    from spin_ring.discord.operators import DenseOperator, SectorOperator
    from spin_ring.discord.qinfo._measure import MeasurementDirection
    from spin_ring.discord.qinfo._optimize import SearchSettings
    from spin_ring.discord.state import RingGeometry, SystemConfig

logger = logging.getLogger(__name__)


class CorrelationMethod(Enum):
    """How a report was obtained."""

    NUMERIC = "Numeric"
    ANALYTIC_HT = "AnalyticHT"


@dataclass(frozen=True, slots=True)
class CorrelationReport:
    """Correlations of the spin system at one time, in bits.

    Raises
    ------
    StateValidityError
        If the discord or the classical correlations are below ``-1e-9``,
        or if ``D + C`` differs from ``I`` by more than ``1e-9``.
    """

    tau: float
    discord: float
    classical: float
    mutual_information: float
    optimal_direction: MeasurementDirection
    conditional_entropy_min: float
    method: CorrelationMethod
    _: KW_ONLY
    regime: RegimeTag | None = None

    def __post_init__(self) -> None:
        for name in ("discord", "classical"):
            value = getattr(self, name)
            if value < -REPORT_TOLERANCE:
                msg = f"{name} = {value:.3e} is negative"
                raise StateValidityError(msg)
        drift = abs(self.discord + self.classical - self.mutual_information)
        if drift > REPORT_TOLERANCE:
            msg = f"D + C differs from I by {drift:.3e}"
            raise StateValidityError(msg)


def numeric_correlations(
    config: SystemConfig,
    tau: float,
    *,
    settings: SearchSettings | None = None,
    include_dipolar: bool = False,
    geometry: RingGeometry | None = None,
) -> CorrelationReport:
    """Exact discord and classical correlations of the evolved state.

    ``C = S(rho_A) - min_n S_cond(n)`` and ``D = I - C``.

    Parameters
    ----------
    config : SystemConfig
    tau : float
        Dimensionless time.
    settings : SearchSettings or None, optional keyword-only
        Sphere-search resolution.
    include_dipolar : bool, optional keyword-only
        Evolve with the ring's dipolar interaction as well.
    geometry : RingGeometry or None, optional keyword-only
        Required with ``include_dipolar``.

    Returns
    -------
    CorrelationReport
        With ``method = CorrelationMethod.NUMERIC``.

    Notes
    -----
    Without dipolar couplings the state is block diagonal in the total
    ring spin and every entropy, including the sphere search, runs on the
    blocks (`evolved_sector_state`). The dipolar interaction is not
    collective, so that path evolves the dense ``2**N`` state.
    """
    rho: DenseOperator | SectorOperator
    if include_dipolar:
        rho = evolved_state(config, tau, include_dipolar=True, geometry=geometry)
    else:
        rho = evolved_sector_state(config, tau)
    s_a = von_neumann_entropy(partial_trace(rho, SubsystemLabel.RING_A, config))
    s_b = von_neumann_entropy(partial_trace(rho, SubsystemLabel.CENTRAL_B, config))
    s_ab = von_neumann_entropy(rho)
    mutual = s_a + s_b - s_ab

    direction, s_min = minimize_conditional_entropy(rho, settings)
    classical = s_a - s_min
    discord = mutual - classical
    logger.debug(
        "N=%d tau=%.6g: D=%.6e C=%.6e I=%.6e n=%s",
        config.total_spins,
        tau,
        discord,
        classical,
        mutual,
        direction,
    )

    return CorrelationReport(
        tau=tau,
        discord=discord,
        classical=classical,
        mutual_information=mutual,
        optimal_direction=direction,
        conditional_entropy_min=s_min,
        method=CorrelationMethod.NUMERIC,
    )
