"""Second-order high-temperature entropies."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from typing import TYPE_CHECKING

import numpy as np

from spin_ring.discord.analytic._params import LN2, HTParameters, brackets

if TYPE_CHECKING:
    from spin_ring.discord.qinfo import MeasurementDirection
    from spin_ring.discord.state import SystemConfig


def ht_entropy_total(config: SystemConfig) -> float:
    """``S(rho) = N - [(N-1) (b omega_A)**2 + (b omega_B)**2] / (8 ln 2)``.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> round(ht_entropy_total(SystemConfig(3, 1.0, 0.1, 0.1)), 5)
    2.99459
    """
    a, b = config.beta_omega_a, config.beta_omega_b
    return config.total_spins - (config.num_ring_spins * a**2 + b**2) / (8 * LN2)


def ht_entropy_A(config: SystemConfig, tau: float) -> float:  # noqa: N802
    """``S(rho_A) = N - 1 - (N-1) (b omega_A)**2 cos(tau)**2 / (8 ln 2)``."""
    n = config.num_ring_spins
    return float(n - n * (config.beta_omega_a * np.cos(tau)) ** 2 / (8 * LN2))


def ht_entropy_B(config: SystemConfig, tau: float) -> float:  # noqa: N802
    """``S(rho_B) = 1 - (b omega_B)**2 cos(tau)**(2(N-1)) / (8 ln 2)``."""
    k2 = np.cos(tau) ** (2 * config.num_ring_spins)
    return float(1 - config.beta_omega_b**2 * k2 / (8 * LN2))


def ht_mutual_information(config: SystemConfig, tau: float) -> float:
    """Total correlations from the three high-temperature entropies."""
    return float(
        ht_entropy_A(config, tau) + ht_entropy_B(config, tau) - ht_entropy_total(config)
    )


def ht_coefficients(config: SystemConfig, tau: float) -> tuple[float, float]:
    """Brackets multiplying ``n_x**2`` and ``n_y**2`` in the conditional entropy."""
    bx, by = brackets(config.num_ring_spins, config.u, config.v, tau)
    return float(bx), float(by)


def ht_conditional_entropy(
    config: SystemConfig, tau: float, n: MeasurementDirection
) -> float:
    """Second-order conditional entropy after measuring along ``n``.

    ``-{n_x**2 b_x + n_y**2 b_y + a(u, v)} / (2 ln 2 (N-1)**2)``; the
    direction enters only through ``n_x**2`` and ``n_y**2``.
    """
    params = HTParameters.from_config(config)
    bx, by = ht_coefficients(config, tau)
    return -params.prefactor * (n.n_x**2 * bx + n.n_y**2 * by + params.a_uv)
