"""Minimization of the conditional entropy over the Bloch sphere."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass
import logging
from typing import TYPE_CHECKING

import numpy as np
from scipy.optimize import minimize

from spin_ring.discord._errors import DomainError
from spin_ring.discord.qinfo._measure import (
    MeasurementDirection,
    conditional_entropies,
    direction_vectors,
)
from spin_ring.discord.setup_package import TIE_TOLERANCE

if TYPE_CHECKING:
    from spin_ring.discord.operators import DenseOperator, SectorOperator
    from spin_ring.discord.typing import RealArray

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchSettings:
    """Knobs of the two-stage sphere search.

    Parameters
    ----------
    n_theta, n_phi : int
        Polar and azimuthal grid sizes over the upper half-sphere. The polar
        grid includes the pole and the equator.
    top_k : int
        Number of best grid points refined by Nelder-Mead. ``0`` keeps the
        grid result.
    xatol, fatol : float
        Nelder-Mead convergence on the angles and on the entropy.
    max_iter : int
        Nelder-Mead iteration cap per start.
    """

    n_theta: int = 64
    n_phi: int = 128
    top_k: int = 5
    xatol: float = 1e-8
    fatol: float = 1e-12
    max_iter: int = 2000

    def __post_init__(self) -> None:
        if self.n_theta < 2:  # noqa: PLR2004
            msg = f"n_theta must be >= 2, got {self.n_theta}"
            raise DomainError(msg)
        if self.n_phi < 1:
            msg = f"n_phi must be >= 1, got {self.n_phi}"
            raise DomainError(msg)
        if self.top_k < 0:
            msg = f"top_k must be >= 0, got {self.top_k}"
            raise DomainError(msg)
        if not (self.xatol > 0 and self.fatol > 0 and self.max_iter > 0):
            msg = "xatol, fatol and max_iter must be positive"
            raise DomainError(msg)

    def scaled(self, factor: int, /) -> SearchSettings:
        """Grid refined by ``factor`` in both angles."""
        return SearchSettings(
            n_theta=(self.n_theta - 1) * factor + 1,
            n_phi=self.n_phi * factor,
            top_k=self.top_k,
            xatol=self.xatol,
            fatol=self.fatol,
            max_iter=self.max_iter,
        )


def half_sphere_grid(settings: SearchSettings) -> tuple[RealArray, RealArray]:
    """Polar and azimuthal angles of the search grid, the pole listed once."""
    theta = np.linspace(0, np.pi / 2, settings.n_theta)
    phi = 2 * np.pi * np.arange(settings.n_phi) / settings.n_phi
    tt, pp = np.meshgrid(theta[1:], phi, indexing="ij")
    return (
        np.concatenate(([0.0], tt.ravel())),
        np.concatenate(([0.0], pp.ravel())),
    )


def _tie_key(vec: RealArray) -> tuple[float, float, float]:
    return (abs(vec[2]), abs(vec[1]), abs(vec[0]))


def minimize_conditional_entropy(
    rho: DenseOperator | SectorOperator, settings: SearchSettings | None = None
) -> tuple[MeasurementDirection, float]:
    """Global minimum of the conditional entropy over measurement directions.

    A grid over the half-sphere (``n`` and ``-n`` are the same measurement)
    is followed by Nelder-Mead in ``(theta, phi)`` from the ``top_k`` best
    grid points. Among candidates within ``1e-12`` of the best value the one
    with the largest ``(|n_z|, |n_y|, |n_x|)`` wins, so the result does not
    depend on evaluation order.

    Parameters
    ----------
    rho : DenseOperator or SectorOperator
        State on the full space.
    settings : SearchSettings or None, optional
        Defaults to ``SearchSettings()``.

    Returns
    -------
    MeasurementDirection
        Minimizer, sign-canonicalized.
    float
        Minimal conditional entropy in bits.
    """
    settings = SearchSettings() if settings is None else settings
    theta, phi = half_sphere_grid(settings)
    values = conditional_entropies(rho, direction_vectors(theta, phi))

    candidates: list[tuple[float, RealArray]] = [
        (float(val), vec)
        for val, vec in zip(values, direction_vectors(theta, phi), strict=True)
    ]

    def objective(x: RealArray) -> float:
        vec = direction_vectors(x[0:1], x[1:2])
        return float(conditional_entropies(rho, vec)[0])

    order = np.argsort(values, kind="stable")[: settings.top_k]
    for i in order:
        res = minimize(
            objective,
            np.array([theta[i], phi[i]]),
            method="Nelder-Mead",
            options={
                "xatol": settings.xatol,
                "fatol": settings.fatol,
                "maxiter": settings.max_iter,
            },
        )
        vec = direction_vectors(res.x[0:1], res.x[1:2])[0]
        candidates.append((float(res.fun), vec))
        logger.debug(
            "polish from (%.4f, %.4f): %.15g after %d evaluations",
            theta[i],
            phi[i],
            res.fun,
            res.nfev,
        )

    best = min(val for val, _ in candidates)
    tied = [vec for val, vec in candidates if val <= best + TIE_TOLERANCE]
    winner = max(tied, key=_tie_key)
    direction = MeasurementDirection.from_vector(winner).canonical()
    return direction, best
