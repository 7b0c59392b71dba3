"""Closed-form high-temperature correlations and regime classification."""

__all__ = (
    # types
    "HTParameters",
    "Regime",
    "RegimeTag",
    "AppendixReport",
    "InequalityViolation",
    # entropies
    "ht_entropy_total",
    "ht_entropy_A",
    "ht_entropy_B",
    "ht_mutual_information",
    "ht_coefficients",
    "ht_conditional_entropy",
    # regimes
    "classify_regime",
    "regime_boundaries",
    # correlations
    "ht_discord",
    "ht_classical",
    "ht_correlations",
    "correlation_crossing",
    "fit_crossing_ratio",
    # inequalities
    "verify_appendix_inequalities",
)

from spin_ring.discord.analytic._correlations import (
    ht_classical,
    ht_correlations,
    ht_discord,
)
from spin_ring.discord.analytic._crossing import (
    correlation_crossing,
    fit_crossing_ratio,
)
from spin_ring.discord.analytic._entropy import (
    ht_coefficients,
    ht_conditional_entropy,
    ht_entropy_A,
    ht_entropy_B,
    ht_entropy_total,
    ht_mutual_information,
)
from spin_ring.discord.analytic._inequalities import (
    AppendixReport,
    InequalityViolation,
    verify_appendix_inequalities,
)
from spin_ring.discord.analytic._params import HTParameters
from spin_ring.discord.analytic._regime import (
    Regime,
    RegimeTag,
    classify_regime,
    regime_boundaries,
)
