"""Spin operators, tensor products and partial traces."""

__all__ = (
    # types
    "DenseOperator",
    "SectorOperator",
    "SubsystemLabel",
    # construction
    "identity",
    "tensor",
    "spin_half",
    "single_spin_operator",
    "collective_operator",
    "z_projection_diagonal",
    # total-spin sectors
    "spin_matrix",
    "spin_sectors",
    # traces
    "partial_trace",
    "trace_cos_sin_identities",
    "binomial_cos_trace",
)

from spin_ring.discord.operators._core import (
    DenseOperator,
    SubsystemLabel,
    identity,
    tensor,
)
from spin_ring.discord.operators._sectors import (
    SectorOperator,
    spin_matrix,
    spin_sectors,
)
from spin_ring.discord.operators._spin import (
    binomial_cos_trace,
    collective_operator,
    single_spin_operator,
    spin_half,
    trace_cos_sin_identities,
    z_projection_diagonal,
)
from spin_ring.discord.operators._trace import partial_trace
