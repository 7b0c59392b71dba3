"""Configuration, Hamiltonians and density matrices of the spin system."""

__all__ = (
    # config
    "SystemConfig",
    "RingGeometry",
    # hamiltonians
    "hamiltonian_zz",
    "hamiltonian_dz",
    "ring_dipolar_hamiltonian",
    # states
    "initial_state",
    "apply_pulse",
    "pulse_unitary",
    "evolve_exact",
    "evolved_state",
    "evolved_sector_state",
    "closed_form_state",
    "reduced_state_A",
    "reduced_state_B",
)

from spin_ring.discord.state._config import SystemConfig
from spin_ring.discord.state._evolve import (
    apply_pulse,
    closed_form_state,
    evolve_exact,
    evolved_sector_state,
    evolved_state,
    initial_state,
    pulse_unitary,
    reduced_state_A,
    reduced_state_B,
)
from spin_ring.discord.state._geometry import RingGeometry
from spin_ring.discord.state._hamiltonian import (
    hamiltonian_dz,
    hamiltonian_zz,
    ring_dipolar_hamiltonian,
)
