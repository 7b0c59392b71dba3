"""Dipolar couplings of the ring spins."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import KW_ONLY, dataclass
from typing import TYPE_CHECKING

import numpy as np

from spin_ring.discord._errors import DomainError
from spin_ring.discord.setup_package import HERMITIAN_ATOL
from spin_ring.discord.utils import pairwise_distance

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from spin_ring.discord.typing import RealArray


@dataclass(frozen=True, slots=True, eq=False)
class RingGeometry:
    """Symmetric matrix of secular dipolar couplings ``d_ij`` between ring sites.

    Parameters
    ----------
    couplings : (M, M) array-like
        Real, symmetric, zero diagonal. Angular-frequency units.
    radius : float, optional keyword-only
        Ring radius, informational.

    Raises
    ------
    DomainError
        If the coupling matrix is not square, symmetric, with zero diagonal.
    """

    couplings: RealArray
    _: KW_ONLY
    radius: float = 1.0

    def __post_init__(self) -> None:
        d = np.asarray(self.couplings, dtype=float)
        if d.ndim != 2 or d.shape[0] != d.shape[1] or d.shape[0] < 1:  # noqa: PLR2004
            msg = f"couplings must be a square matrix, got shape {d.shape}"
            raise DomainError(msg)
        if not np.allclose(d, d.T, rtol=0, atol=HERMITIAN_ATOL):
            msg = "couplings must be symmetric"
            raise DomainError(msg)
        if np.any(np.diagonal(d) != 0):
            msg = "couplings must have a zero diagonal"
            raise DomainError(msg)
        if not self.radius > 0:
            msg = f"radius must be positive, got {self.radius}"
            raise DomainError(msg)

        d = 0.5 * (d + d.T)
        d.setflags(write=False)
        object.__setattr__(self, "couplings", d)

    @property
    def num_sites(self) -> int:
        """Number of ring sites."""
        return int(self.couplings.shape[0])

    # =========================================================================
    # Alternate constructors

    @classmethod
    def from_angles(
        cls, angles: ArrayLike, d0: float = 1.0, radius: float = 1.0
    ) -> RingGeometry:
        """Sites on a circle at the given polar angles, field normal to the ring.

        ``d_ij = d0 / r_ij**3`` with ``r_ij`` the chord between sites.

        Raises
        ------
        DomainError
            If two sites coincide.
        """
        theta = np.asarray(angles, dtype=float).ravel()
        points = radius * np.stack((np.cos(theta), np.sin(theta)), axis=-1)
        r = pairwise_distance(points)

        off = ~np.eye(len(theta), dtype=bool)
        if np.any(r[off] <= 0):
            msg = "ring sites must be distinct"
            raise DomainError(msg)

        d = np.zeros_like(r)
        d[off] = d0 / r[off] ** 3
        return cls(d, radius=radius)

    @classmethod
    def regular(
        cls, num_sites: int, d0: float = 1.0, radius: float = 1.0
    ) -> RingGeometry:
        """Equally spaced sites; ``r_ij = 2 R sin(pi |i - j| / M)``.

        Examples
        --------
        >>> RingGeometry.regular(2, d0=8.0).couplings
        array([[0., 1.],
               [1., 0.]])
        """
        if num_sites < 1:
            msg = f"num_sites must be >= 1, got {num_sites}"
            raise DomainError(msg)
        return cls.from_angles(
            2 * np.pi * np.arange(num_sites) / num_sites, d0=d0, radius=radius
        )

    @classmethod
    def random(
        cls,
        num_sites: int,
        rng: np.random.Generator,
        *,
        d0: float = 1.0,
        radius: float = 1.0,
    ) -> RingGeometry:
        """Irregular ring: each site moved off its regular angle by up to a
        quarter of the spacing, so neighbours stay at least half a spacing apart.
        """
        if num_sites < 1:
            msg = f"num_sites must be >= 1, got {num_sites}"
            raise DomainError(msg)
        spacing = 2 * np.pi / num_sites
        jitter = rng.uniform(-0.25, 0.25, num_sites) * spacing
        return cls.from_angles(
            spacing * np.arange(num_sites) + jitter, d0=d0, radius=radius
        )
