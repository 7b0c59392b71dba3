"""Thermal state, pi/2 pulse, and the time-evolved density matrices."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from functools import lru_cache, reduce
import logging
from typing import TYPE_CHECKING

import numpy as np
import scipy.linalg

from spin_ring.discord._errors import DomainError, StateValidityError
from spin_ring.discord.operators import (
    DenseOperator,
    SectorOperator,
    collective_operator,
    identity,
    single_spin_operator,
    spin_half,
    spin_matrix,
    spin_sectors,
    z_projection_diagonal,
)
from spin_ring.discord.state._hamiltonian import (
    hamiltonian_dz,
    hamiltonian_zz,
    zz_energies,
)

if TYPE_CHECKING:
    from spin_ring.discord.state._config import SystemConfig
    from spin_ring.discord.state._geometry import RingGeometry
    from spin_ring.discord.typing import ComplexMatrix

logger = logging.getLogger(__name__)

# exp(-i pi/2 S_y) on one spin
_PULSE = np.array([[1.0, -1.0], [1.0, 1.0]], dtype=np.complex128) / np.sqrt(2)


def initial_state(config: SystemConfig) -> DenseOperator:
    """High-temperature thermal state ``2**-N (1 + b_A I_z + b_B S_z)``.

    Parameters
    ----------
    config : SystemConfig

    Returns
    -------
    DenseOperator
        Diagonal, trace one.

    Raises
    ------
    StateValidityError
        If an eigenvalue is not positive; only reachable from an unchecked
        configuration.
    """
    ring = z_projection_diagonal(config.num_ring_spins)
    diag = (
        1
        + config.beta_omega_a * np.kron(ring, np.ones(2))
        + config.beta_omega_b * np.tile([0.5, -0.5], ring.size)
    ) / 2**config.total_spins

    if diag.min() <= 0:
        msg = f"initial state has a non-positive eigenvalue {diag.min():.6g}"
        raise StateValidityError(msg)

    return DenseOperator(np.diag(diag), hermitian=True)


def pulse_unitary(num_spins: int, /) -> ComplexMatrix:
    """``exp(-i (pi/2) (I_y + S_y))`` as a product of single-spin rotations."""
    return reduce(np.kron, [_PULSE] * num_spins)


def apply_pulse(rho: DenseOperator) -> DenseOperator:
    """Rotate every spin by ``pi/2`` about ``y``, turning z-terms into x-terms."""
    return rho.conjugate_by(pulse_unitary(rho.num_spins))


def _check_full_space(rho: DenseOperator, config: SystemConfig) -> None:
    if rho.dim != 2**config.total_spins:
        msg = f"state of dim {rho.dim} does not act on {config.total_spins} spins"
        raise DomainError(msg)


def evolve_exact(
    rho0: DenseOperator,
    config: SystemConfig,
    tau: float,
    *,
    include_dipolar: bool = False,
    geometry: RingGeometry | None = None,
) -> DenseOperator:
    """Evolve under ``H_zz`` (and optionally ``H_dz``) for ``t = 2 tau / g``.

    Parameters
    ----------
    rho0 : DenseOperator
        State on the full ``2**N`` space, usually the pulsed thermal state.
    config : SystemConfig
    tau : float
        Dimensionless time ``g t / 2``.
    include_dipolar : bool, optional keyword-only
        Add the secular dipolar interaction of the ring.
    geometry : RingGeometry or None, optional keyword-only
        Required with ``include_dipolar``.

    Returns
    -------
    DenseOperator

    Raises
    ------
    DomainError
        If ``include_dipolar`` is set without a geometry, or on a
        dimension mismatch.
    """
    _check_full_space(rho0, config)
    t = 2 * tau / config.g

    if not include_dipolar:
        phases = np.exp(-1j * zz_energies(config) * t)
        out = phases[:, None] * rho0.matrix * phases.conj()[None, :]
        return DenseOperator(out, hermitian=rho0.hermitian)

    if geometry is None:
        msg = "include_dipolar requires a ring geometry"
        raise DomainError(msg)

    logger.debug("evolving with dipolar couplings via eigendecomposition")
    h = hamiltonian_zz(config) + hamiltonian_dz(geometry, config)
    w, vecs = scipy.linalg.eigh(h.matrix)
    unitary = (vecs * np.exp(-1j * w * t)[None, :]) @ vecs.conj().T
    return rho0.conjugate_by(unitary)


def evolved_state(
    config: SystemConfig,
    tau: float,
    *,
    include_dipolar: bool = False,
    geometry: RingGeometry | None = None,
) -> DenseOperator:
    """Thermal state, pulse, evolution: the state at time ``tau``."""
    return evolve_exact(
        apply_pulse(initial_state(config)),
        config,
        tau,
        include_dipolar=include_dipolar,
        geometry=geometry,
    )



@lru_cache(maxsize=32)
def _sector_pulse(two_j: int, /) -> ComplexMatrix:
    """``exp(-i (pi/2) (J_y + S_y))`` on ``V_j x C^2``."""
    out = np.kron(scipy.linalg.expm(-0.5j * np.pi * spin_matrix(two_j, "y")), _PULSE)
    out.setflags(write=False)
    return out


def evolved_sector_state(config: SystemConfig, tau: float) -> SectorOperator:
    """State at time ``tau`` under ``H_zz``, block by total ring spin.

    The thermal state, the pulse and ``H_zz`` involve the ring only through
    its collective spin, so the state is ``sum_j rho_j x 1_{m_j}`` and every
    entropy follows from the blocks ``rho_j`` of size ``2(2j+1)``. The
    largest block is ``2N x 2N``.

    Parameters
    ----------
    config : SystemConfig
    tau : float
        Dimensionless time ``g t / 2``.

    Returns
    -------
    SectorOperator
        Unitarily equivalent to ``evolved_state(config, tau)`` by a unitary
        acting on the ring only.

    Raises
    ------
    StateValidityError
        If the thermal state has a non-positive eigenvalue.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> rho = evolved_sector_state(SystemConfig(5, 1.0, 0.05, 0.05), 0.3)
    >>> [b.shape[0] for b in rho.blocks], round(rho.trace().real, 12)
    ([10, 6, 2], 1.0)
    """
    n = config.num_ring_spins
    t = 2 * tau / config.g
    centre = np.array([0.5, -0.5])

    blocks = []
    for two_j, _ in spin_sectors(n):
        m = np.diagonal(spin_matrix(two_j, "z")).real
        diag = (
            1
            + config.beta_omega_a * np.kron(m, np.ones(2))
            + config.beta_omega_b * np.tile(centre, m.size)
        ) / 2**config.total_spins
        # the top sector holds every I_z eigenvalue
        if two_j == n and diag.min() <= 0:
            msg = f"initial state has a non-positive eigenvalue {diag.min():.6g}"
            raise StateValidityError(msg)

        pulse = _sector_pulse(two_j)
        rho = (pulse * diag[None, :]) @ pulse.conj().T
        phases = np.exp(-1j * config.g * np.kron(m, centre) * t)
        rho = phases[:, None] * rho * phases.conj()[None, :]
        blocks.append(0.5 * (rho + rho.conj().T))

    return SectorOperator(tuple(blocks), n, hermitian=True)


#####################################################################
# Closed forms


def closed_form_state(config: SystemConfig, tau: float) -> DenseOperator:
    """Evolved state assembled from operators.

    ``2**-N {1 + b_A [I_x cos(tau) + 2 I_y S_z sin(tau)]
    + b_B [S_x cos(2 tau I_z) + S_y sin(2 tau I_z)]}``.
    """
    n_total = config.total_spins
    ring = range(1, n_total)
    ix = collective_operator("x", ring, n_total)
    iy = collective_operator("y", ring, n_total)
    sx = single_spin_operator(n_total, "x", n_total)
    sy = single_spin_operator(n_total, "y", n_total)
    sz = single_spin_operator(n_total, "z", n_total)

    angle = 2 * tau * z_projection_diagonal(config.num_ring_spins)
    cos_iz = DenseOperator(np.diag(np.cos(angle)), hermitian=True).kron(identity(1))
    sin_iz = DenseOperator(np.diag(np.sin(angle)), hermitian=True).kron(identity(1))

    rho = (
        identity(n_total)
        + config.beta_omega_a * (np.cos(tau) * ix + 2 * np.sin(tau) * (iy @ sz))
        + config.beta_omega_b * (sx @ cos_iz + sy @ sin_iz)
    ) / 2**n_total
    return DenseOperator(rho.matrix, hermitian=True)


def reduced_state_A(config: SystemConfig, tau: float) -> DenseOperator:  # noqa: N802
    """Ring state ``2**-(N-1) [1 + b_A I_x cos(tau)]``."""
    n = config.num_ring_spins
    ix = collective_operator("x", range(1, n + 1), n)
    return (identity(n) + config.beta_omega_a * np.cos(tau) * ix) / 2**n


def reduced_state_B(config: SystemConfig, tau: float) -> DenseOperator:  # noqa: N802
    """Central-spin state ``[1 + b_B S_x cos(tau)**(N-1)] / 2``.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> rho_b = reduced_state_B(SystemConfig(3, 1.0, 0.1, 0.1), np.pi / 2)
    >>> np.allclose(rho_b.matrix, np.eye(2) / 2)
    True
    """
    k = np.cos(tau) ** config.num_ring_spins
    return (identity(1) + config.beta_omega_b * k * spin_half("x")) / 2
