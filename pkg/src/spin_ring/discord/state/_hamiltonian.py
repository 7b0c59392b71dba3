"""Hamiltonians of the ring-centre system."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from itertools import combinations
from typing import TYPE_CHECKING

import numpy as np

from spin_ring.discord._errors import DomainError
from spin_ring.discord.operators import (
    DenseOperator,
    identity,
    single_spin_operator,
    z_projection_diagonal,
)

if TYPE_CHECKING:
    from spin_ring.discord.state._config import SystemConfig
    from spin_ring.discord.state._geometry import RingGeometry
    from spin_ring.discord.typing import RealArray


def zz_energies(config: SystemConfig, /) -> RealArray:
    """Diagonal of ``H_zz = g sum_i I_iz S_z`` in the computational basis."""
    ring = z_projection_diagonal(config.num_ring_spins)
    return config.g * np.kron(ring, np.array([0.5, -0.5]))


def hamiltonian_zz(config: SystemConfig) -> DenseOperator:
    """Ising coupling between every ring spin and the central spin.

    Examples
    --------
    >>> from spin_ring.discord.state import SystemConfig
    >>> hamiltonian_zz(SystemConfig(2, 0.1, 0.1, 0.1, g=1.0)).matrix.real.diagonal()
    array([ 0.25, -0.25, -0.25,  0.25])
    """
    return DenseOperator(np.diag(zz_energies(config)), hermitian=True)


def ring_dipolar_hamiltonian(geometry: RingGeometry) -> DenseOperator:
    """Secular dipolar Hamiltonian on the ring space only.

    ``sum_{i<j} d_ij (3 I_iz I_jz - I_i . I_j)``.
    """
    n = geometry.num_sites
    out = np.zeros((2**n, 2**n), dtype=np.complex128)
    for i, j in combinations(range(1, n + 1), 2):
        d = geometry.couplings[i - 1, j - 1]
        if d == 0:
            continue
        for axis, weight in (("x", -1.0), ("y", -1.0), ("z", 2.0)):
            term = single_spin_operator(i, axis, n) @ single_spin_operator(j, axis, n)
            out += weight * d * term.matrix
    return DenseOperator(out, hermitian=True)


def hamiltonian_dz(geometry: RingGeometry, config: SystemConfig) -> DenseOperator:
    """Secular dipolar Hamiltonian of the ring, identity on the central spin.

    Raises
    ------
    DomainError
        If the geometry does not have ``N - 1`` sites.
    """
    if geometry.num_sites != config.num_ring_spins:
        msg = (
            f"geometry has {geometry.num_sites} sites, "
            f"config has {config.num_ring_spins} ring spins"
        )
        raise DomainError(msg)
    return ring_dipolar_hamiltonian(geometry).kron(identity(1))
