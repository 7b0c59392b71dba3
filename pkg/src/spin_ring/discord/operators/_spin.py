"""Spin-1/2 operators and the trace identities of the collective z-projection."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from collections.abc import Iterable
from functools import lru_cache
from typing import TYPE_CHECKING, Final

import numpy as np
from scipy.special import comb

from spin_ring.discord._errors import DomainError
from spin_ring.discord.operators._core import DenseOperator, tensor

if TYPE_CHECKING:
    from spin_ring.discord.typing import Axis, ComplexMatrix, RealArray


PAULI: Final[dict[str, ComplexMatrix]] = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}
AXES: Final[tuple[Axis, ...]] = ("x", "y", "z")


def _check_axis(axis: str, /) -> None:
    if axis not in PAULI:
        msg = f"axis must be one of 'x', 'y', 'z', got {axis!r}"
        raise DomainError(msg)


def spin_half(axis: Axis, /) -> DenseOperator:
    """Single spin-1/2 operator ``sigma_axis / 2``."""
    _check_axis(axis)
    return DenseOperator(0.5 * PAULI[axis], hermitian=True)


def single_spin_operator(site: int, axis: Axis, num_spins: int) -> DenseOperator:
    """Spin projection of one site, embedded in the ``num_spins`` space.

    Parameters
    ----------
    site : int
        1-based site index; the central spin is site ``num_spins``.
    axis : {'x', 'y', 'z'}
        Projection axis.
    num_spins : int
        Number of tensor factors.

    Returns
    -------
    DenseOperator
        ``1 x ... x sigma_axis/2 x ... x 1``.

    Raises
    ------
    DomainError
        If ``site`` is not in ``1..num_spins``.

    Examples
    --------
    >>> single_spin_operator(1, "z", 1).matrix.real
    array([[ 0.5,  0. ],
           [ 0. , -0.5]])
    """
    _check_axis(axis)
    if num_spins < 1:
        msg = f"num_spins must be >= 1, got {num_spins}"
        raise DomainError(msg)
    if not 1 <= site <= num_spins:
        msg = f"site must be in 1..{num_spins}, got {site}"
        raise DomainError(msg)

    eye = DenseOperator(np.eye(2), hermitian=True)
    factors = [eye] * num_spins
    factors[site - 1] = spin_half(axis)
    return tensor(*factors)


def collective_operator(
    axis: Axis, sites: Iterable[int], num_spins: int
) -> DenseOperator:
    """Sum of the ``axis`` projections over ``sites``.

    Raises
    ------
    DomainError
        If ``sites`` is empty or contains an index outside ``1..num_spins``.
    """
    sites = tuple(sites)
    if not sites:
        msg = "collective operator needs at least one site"
        raise DomainError(msg)

    out = single_spin_operator(sites[0], axis, num_spins)
    for site in sites[1:]:
        out = out + single_spin_operator(site, axis, num_spins)
    return out


#####################################################################
# Collective z-projection


@lru_cache(maxsize=32)
def _z_projection_diagonal(num_spins: int, /) -> RealArray:
    bits = (np.arange(2**num_spins)[:, None] >> np.arange(num_spins)[::-1]) & 1
    out = num_spins / 2 - bits.sum(axis=1).astype(float)
    out.setflags(write=False)
    return out


def z_projection_diagonal(num_spins: int, /) -> RealArray:
    """Eigenvalues of the collective ``I_z`` in the computational basis.

    The leftmost factor is the most significant bit; bit ``0`` is spin up.

    Examples
    --------
    >>> z_projection_diagonal(2)
    array([ 1.,  0.,  0., -1.])
    """
    if num_spins < 1:
        msg = f"num_spins must be >= 1, got {num_spins}"
        raise DomainError(msg)
    return _z_projection_diagonal(num_spins)


def trace_cos_sin_identities(num_ring_spins: int, tau: float) -> tuple[float, float]:
    """Traces of ``cos(2 tau I_z)`` and ``sin(2 tau I_z)`` over the ring.

    The collective ``I_z`` is built explicitly and is diagonal, so the matrix
    functions act on its diagonal. The results equal
    ``2**n cos(tau)**n`` and ``0``.

    Parameters
    ----------
    num_ring_spins : int
        Number of ring spins ``n = N - 1 >= 1``.
    tau : float
        Dimensionless time.

    Returns
    -------
    tuple[float, float]

    Examples
    --------
    >>> trace_cos_sin_identities(4, 0.0)
    (16.0, 0.0)
    """
    iz = collective_operator("z", range(1, num_ring_spins + 1), num_ring_spins)
    m = np.diagonal(iz.matrix).real
    return float(np.cos(2 * tau * m).sum()), float(np.sin(2 * tau * m).sum())


def binomial_cos_trace(num_ring_spins: int, tau: float) -> float:
    """``sum_k C(n, k) cos(2 tau (n/2 - k))``, the binomial form of ``Tr cos``.

    Examples
    --------
    >>> round(binomial_cos_trace(2, np.pi / 3), 12)
    1.0
    """
    if num_ring_spins < 1:
        msg = f"num_ring_spins must be >= 1, got {num_ring_spins}"
        raise DomainError(msg)
    k = np.arange(num_ring_spins + 1)
    weights = comb(num_ring_spins, k)
    return float(np.sum(weights * np.cos(2 * tau * (num_ring_spins / 2 - k))))
