"""Dimensionless high-temperature parameters and the conditional-entropy brackets."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass
import math
from typing import TYPE_CHECKING

import numpy as np

from spin_ring.discord._errors import DomainError

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from spin_ring.discord.state import SystemConfig

LN2 = math.log(2)


@dataclass(frozen=True, slots=True)
class HTParameters:
    """``u = (N-1) beta omega_b / 2`` and ``v = (N-1) beta omega_a / 2``.

    Examples
    --------
    >>> p = HTParameters(u=0.5, v=0.25, num_spins=3)
    >>> round(p.a_uv, 10) == round(2 * 0.0625 - 16 * LN2, 10)
    True
    """

    u: float
    v: float
    num_spins: int

    def __post_init__(self) -> None:
        if self.num_spins < 2:  # noqa: PLR2004
            msg = f"num_spins must be >= 2, got {self.num_spins}"
            raise DomainError(msg)
        for name in ("u", "v"):
            value = getattr(self, name)
            if not 0 < value < 1:
                msg = f"{name} must be in (0, 1), got {value}"
                raise DomainError(msg)

    @classmethod
    def from_config(cls, config: SystemConfig, /) -> HTParameters:
        return cls(u=config.u, v=config.v, num_spins=config.total_spins)

    @property
    def num_ring_spins(self) -> int:
        return self.num_spins - 1

    @property
    def a_uv(self) -> float:
        """Direction-independent constant ``(N-1) v**2 - 2 (N-1)**3 ln 2``."""
        n = self.num_ring_spins
        return n * self.v**2 - 2 * n**3 * LN2

    @property
    def prefactor(self) -> float:
        """``1 / (2 ln 2 (N-1)**2)``."""
        return 1 / (2 * LN2 * self.num_ring_spins**2)


def trig_terms(
    num_ring_spins: int, tau: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64], NDArray[np.float64]]:
    """``cos(2 tau)**n``, ``cos(tau)**(2n)`` and ``sin(tau)**2``."""
    tau = np.asarray(tau, dtype=float)
    n = num_ring_spins
    return np.cos(2 * tau) ** n, np.cos(tau) ** (2 * n), np.sin(tau) ** 2


def brackets(
    num_ring_spins: int, u: ArrayLike, v: ArrayLike, tau: ArrayLike
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """Coefficients of ``n_x**2`` and ``n_y**2`` in the conditional entropy.

    ``b_x = u**2 (1 + cos(2tau)**n - 2 cos(tau)**(2n)) / 2 - n v**2 sin(tau)**2``
    and ``b_y = u**2 (1 - cos(2tau)**n) / 2 - n v**2 sin(tau)**2`` with
    ``n = N - 1``. Broadcasts over its array arguments.
    """
    c2, k2, s2 = trig_terms(num_ring_spins, tau)
    u2 = np.square(u)
    ring = num_ring_spins * np.square(v) * s2
    return u2 * (1 + c2 - 2 * k2) / 2 - ring, u2 * (1 - c2) / 2 - ring
