"""Times at which quantum and classical correlations exchange dominance."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

import logging
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import bisect, brentq

from spin_ring.discord._errors import DomainError
from spin_ring.discord.analytic._correlations import classical_formula, discord_formula
from spin_ring.discord.analytic._regime import QUARTER_TURN, Regime

if TYPE_CHECKING:
    from spin_ring.discord.typing import RealArray

logger = logging.getLogger(__name__)

# D - C of a regime is proportional to u**2 at fixed gamma = v / u
_REFERENCE_U = 0.5


def discord_minus_classical(
    gamma: float, num_spins: int, regime: Regime | str, tau: RealArray | float
) -> RealArray:
    """``D - C`` of ``regime`` at unit scale, as a function of ``tau``."""
    regime = Regime(regime)
    u, v = _REFERENCE_U, gamma * _REFERENCE_U
    n = num_spins - 1
    return (
        discord_formula(regime, n, u, v, tau) - classical_formula(regime, n, u, v, tau)
    ) / _REFERENCE_U**2


def correlation_crossing(
    gamma: float,
    num_spins: int,
    regime: Regime | str = Regime.IZ_SY,
    window: tuple[float, float] = (0.0, QUARTER_TURN),
    resolution: int = 2001,
) -> float | None:
    """First time in ``window`` where discord and classical correlations cross.

    The window's interior is scanned at ``resolution`` points for a sign
    change of ``D - C``, which is then refined by Brent's method. The
    crossing depends on ``gamma`` only.

    Parameters
    ----------
    gamma : float
        Larmor-frequency ratio ``v / u``.
    num_spins : int
        ``N``.
    regime : Regime or str, optional
        Formula family for ``D`` and ``C``.
    window : (float, float), optional
        Open interval of ``tau`` to scan.
    resolution : int, optional
        Number of scan points.

    Returns
    -------
    float or None
        `None` if ``D - C`` keeps its sign on the scan.
    """
    lo, hi = window
    if not hi > lo or resolution < 2:  # noqa: PLR2004
        msg = f"invalid window {window} or resolution {resolution}"
        raise DomainError(msg)

    def f(tau: float) -> float:
        return float(discord_minus_classical(gamma, num_spins, regime, tau))

    taus = lo + (hi - lo) * np.arange(1, resolution + 1) / (resolution + 1)
    values = discord_minus_classical(gamma, num_spins, regime, taus)
    signs = np.sign(values)
    (hits,) = np.nonzero(signs[:-1] * signs[1:] <= 0)
    if hits.size == 0:
        return None

    i = int(hits[0])
    if values[i] == 0:
        return float(taus[i])
    return float(brentq(f, taus[i], taus[i + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps))


def fit_crossing_ratio(
    num_spins: int,
    target_tau: float = 0.521,
    bracket: tuple[float, float] = (0.05, 0.3),
    *,
    regime: Regime | str = Regime.IZ_SY,
    window: tuple[float, float] = (0.0, QUARTER_TURN),
    resolution: int = 2001,
) -> float:
    """Ratio ``gamma = v / u`` that puts the first crossing at ``target_tau``.

    Bisection over ``gamma``; a ratio with no crossing in ``window`` counts as
    crossing at the window's end.

    Raises
    ------
    DomainError
        If ``bracket`` does not enclose the target.
    """

    def residual(gamma: float) -> float:
        tau = correlation_crossing(gamma, num_spins, regime, window, resolution)
        return (window[1] if tau is None else tau) - target_tau

    lo, hi = bracket
    if residual(lo) * residual(hi) > 0:
        msg = f"bracket {bracket} does not enclose a crossing at tau = {target_tau}"
        raise DomainError(msg)

    gamma = float(bisect(residual, lo, hi, xtol=1e-13))
    logger.info("crossing at tau=%.6g for gamma=%.10g (N=%d)", target_tau, gamma, num_spins)
    return gamma
