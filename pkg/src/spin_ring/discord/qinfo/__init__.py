"""Exact quantum-information quantities of the spin system."""

__all__ = (
    # types
    "MeasurementDirection",
    "MeasurementEnsemble",
    "CorrelationMethod",
    "CorrelationReport",
    "SearchSettings",
    # entropy
    "von_neumann_entropy",
    "mutual_information",
    # measurement
    "projectors",
    "measure_B",
    "conditional_entropy",
    "conditional_entropies",
    "minimize_conditional_entropy",
    # correlations
    "numeric_correlations",
)

from spin_ring.discord.qinfo._correlations import (
    CorrelationMethod,
    CorrelationReport,
    numeric_correlations,
)
from spin_ring.discord.qinfo._entropy import mutual_information, von_neumann_entropy
from spin_ring.discord.qinfo._measure import (
    MeasurementDirection,
    MeasurementEnsemble,
    conditional_entropies,
    conditional_entropy,
    measure_B,
    projectors,
)
from spin_ring.discord.qinfo._optimize import (
    SearchSettings,
    minimize_conditional_entropy,
)
