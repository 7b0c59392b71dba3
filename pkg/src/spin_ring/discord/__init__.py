"""Quantum discord in a spin ring with a central spin."""

__all__ = (
    # modules
    "operators",
    "state",
    "qinfo",
    "analytic",
    "harness",
    # classes
    "SystemConfig",
    "RingGeometry",
    "CorrelationReport",
    "SearchSettings",
    "Regime",
    # functions
    "numeric_correlations",
    "ht_correlations",
    "classify_regime",
    # errors
    "DomainError",
    "StateValidityError",
    "NotAStateError",
    "RegimeError",
    "InequalityViolationError",
    "UsageError",
)

from spin_ring.discord import analytic, harness, operators, qinfo, state
from spin_ring.discord._errors import (
    DomainError,
    InequalityViolationError,
    NotAStateError,
    RegimeError,
    StateValidityError,
    UsageError,
)
from spin_ring.discord.analytic import Regime, classify_regime, ht_correlations
from spin_ring.discord.qinfo import (
    CorrelationReport,
    SearchSettings,
    numeric_correlations,
)
from spin_ring.discord.state import RingGeometry, SystemConfig
