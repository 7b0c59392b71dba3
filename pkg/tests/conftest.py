"""Shared fixtures."""

import numpy as np
import pytest

from spin_ring.discord.qinfo import SearchSettings
from spin_ring.discord.state import SystemConfig


@pytest.fixture()
def rng():
    """Seeded generator, so every randomized battery is reproducible."""
    return np.random.default_rng(20240521)


@pytest.fixture(scope="session")
def coarse_search():
    """Sphere search resolved enough for axis-aligned optima."""
    return SearchSettings(n_theta=9, n_phi=16, top_k=2)


@pytest.fixture()
def ring_dominant():
    """``N = 3``, ``gamma = 2``: the ring carries the larger Larmor frequency."""
    return SystemConfig(3, 1.0, 0.06, 0.03)


@pytest.fixture()
def centre_dominant():
    """``N = 5``, ``gamma = 0.3``."""
    return SystemConfig.from_gamma(5, 0.3, beta=1.0, omega_b=0.03)


@pytest.fixture()
def random_config(rng):
    """Factory of high-temperature-valid configurations with ``2 <= N <= max_spins``."""

    def make(max_spins=8):
        n_total = int(rng.integers(2, max_spins + 1))
        bound = 0.9 / (n_total - 1)
        omega_a, omega_b = rng.uniform(0.05, 1.0, size=2) * bound
        return SystemConfig(n_total, 1.0, omega_a, omega_b, g=rng.uniform(0.5, 2.0))

    return make
