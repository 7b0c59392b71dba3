"""Closed-form discord and classical correlations in each regime."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from typing import TYPE_CHECKING

import numpy as np

from spin_ring.discord._errors import DomainError, RegimeError
from spin_ring.discord.analytic._entropy import (
    ht_conditional_entropy,
    ht_mutual_information,
)
from spin_ring.discord.analytic._params import LN2, trig_terms
from spin_ring.discord.analytic._regime import (
    HALF_TURN,
    Regime,
    RegimeTag,
    classify_regime,
)
from spin_ring.discord.qinfo import (
    CorrelationMethod,
    CorrelationReport,
    MeasurementDirection,
)
from spin_ring.discord.utils import within_bounds

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from spin_ring.discord.state import SystemConfig


def discord_formula(
    regime: Regime, num_ring_spins: int, u: ArrayLike, v: ArrayLike, tau: ArrayLike
) -> NDArray[np.float64]:
    """High-temperature discord of ``regime``; broadcasts over ``u, v, tau``."""
    c2, k2, s2 = trig_terms(num_ring_spins, tau)
    u2, v2 = np.square(u), np.square(v)
    pre = 1 / (2 * LN2 * num_ring_spins**2)
    if regime is Regime.IY_SZ:
        return pre * u2 * (1 - k2)
    if regime is Regime.IZ_SY:
        return pre * (num_ring_spins * v2 * s2 + u2 / 2 * (c2 + 1 - 2 * k2))
    if regime is Regime.IZ_SX:
        return pre * (num_ring_spins * v2 * s2 + u2 / 2 * (1 - c2))
    msg = "no closed-form discord outside the classified regimes"
    raise RegimeError(msg)


def classical_formula(
    regime: Regime, num_ring_spins: int, u: ArrayLike, v: ArrayLike, tau: ArrayLike
) -> NDArray[np.float64]:
    """High-temperature classical correlations of ``regime``."""
    c2, k2, s2 = trig_terms(num_ring_spins, tau)
    u2, v2 = np.square(u), np.square(v)
    if regime is Regime.IY_SZ:
        return v2 * s2 / (2 * LN2 * num_ring_spins)
    pre = u2 / (4 * LN2 * num_ring_spins**2)
    if regime is Regime.IZ_SX:
        return pre * (1 + c2 - 2 * k2)
    if regime is Regime.IZ_SY:
        return pre * (1 - c2)
    msg = "no closed-form classical correlations outside the classified regimes"
    raise RegimeError(msg)


def _resolve_regime(
    config: SystemConfig, tau: float, regime: Regime | str | None
) -> RegimeTag:
    if regime is None:
        tag = classify_regime(config, tau)
        if not tag.is_classified:
            msg = (
                f"no closed-form regime at N={config.total_spins}, "
                f"gamma={config.gamma:.6g}, tau={tau:.6g}; use numeric_correlations"
            )
            raise RegimeError(msg)
        return tag

    regime = Regime(regime)
    if regime is Regime.UNCLASSIFIED:
        msg = "cannot evaluate the closed forms for an unclassified regime"
        raise RegimeError(msg)
    if not within_bounds(tau, 0.0, HALF_TURN):
        msg = f"tau = {tau} is outside [0, pi/2]"
        raise DomainError(msg)
    return RegimeTag(regime, "explicit override")


def ht_discord(
    config: SystemConfig, tau: float, *, regime: Regime | str | None = None
) -> tuple[float, RegimeTag]:
    """Closed-form high-temperature discord.

    Parameters
    ----------
    config : SystemConfig
    tau : float
        Dimensionless time in ``[0, pi/2]``.
    regime : Regime or str or None, optional keyword-only
        Evaluate this regime's formula instead of classifying the point.

    Returns
    -------
    float
        Discord in bits.
    RegimeTag

    Raises
    ------
    RegimeError
        If the point is unclassified and no ``regime`` is given.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> d, tag = ht_discord(SystemConfig(3, 1.0, 0.06, 0.03), np.pi / 2)
    >>> round(d * 1e4, 4), tag.tag.value
    (1.623, 'IySz')
    """
    tag = _resolve_regime(config, tau, regime)
    d = discord_formula(tag.tag, config.num_ring_spins, config.u, config.v, tau)
    return float(d), tag


def ht_classical(
    config: SystemConfig, tau: float, *, regime: Regime | str | None = None
) -> tuple[float, RegimeTag]:
    """Closed-form high-temperature classical correlations.

    Same arguments and errors as :func:`ht_discord`.
    """
    tag = _resolve_regime(config, tau, regime)
    c = classical_formula(tag.tag, config.num_ring_spins, config.u, config.v, tau)
    return float(c), tag


def ht_correlations(
    config: SystemConfig, tau: float, *, regime: Regime | str | None = None
) -> CorrelationReport:
    """All high-temperature correlations of one point as a report."""
    tag = _resolve_regime(config, tau, regime)
    discord, _ = ht_discord(config, tau, regime=tag.tag)
    classical, _ = ht_classical(config, tau, regime=tag.tag)
    direction = MeasurementDirection.along(tag.axis)  # type: ignore[arg-type]
    return CorrelationReport(
        tau=tau,
        discord=discord,
        classical=classical,
        mutual_information=ht_mutual_information(config, tau),
        optimal_direction=direction,
        conditional_entropy_min=ht_conditional_entropy(config, tau, direction),
        method=CorrelationMethod.ANALYTIC_HT,
        regime=tag,
    )
