"""Von Neumann entropy and mutual information, in bits."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

import math
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import xlogy

from spin_ring.discord._errors import NotAStateError
from spin_ring.discord.operators import SubsystemLabel, partial_trace
from spin_ring.discord.setup_package import EIGEN_CLAMP

if TYPE_CHECKING:
    from numpy.typing import NDArray

    from spin_ring.discord.operators import DenseOperator, SectorOperator
    from spin_ring.discord.typing import HasTotalSpins

LN2 = math.log(2)


def shannon_bits(weights: NDArray[np.float64], /, axis: int = -1) -> NDArray[np.float64]:
    """``-sum w log2 w`` along ``axis``, with ``0 log 0 = 0``.

    Negative weights are clamped to zero.
    """
    w = np.clip(weights, 0, None)
    return -xlogy(w, w).sum(axis=axis) / LN2


def von_neumann_entropy(rho: DenseOperator | SectorOperator) -> float:
    """Entropy ``-Tr rho log2 rho`` in bits.

    Parameters
    ----------
    rho : DenseOperator or SectorOperator
        Hermitian, unit trace. A `SectorOperator` counts each block
        spectrum with its multiplicity.

    Returns
    -------
    float

    Raises
    ------
    NotAStateError
        If the operator is not Hermitian, or if an eigenvalue is below
        ``-1e-10``. Eigenvalues in ``[-1e-10, 0)`` are clamped to zero.

    Examples
    --------
    >>> from spin_ring.discord.operators import DenseOperator
    >>> von_neumann_entropy(DenseOperator(np.eye(2) / 2, hermitian=True))
    1.0
    """
    if not (rho.hermitian or rho.is_hermitian()):
        msg = "operator is not Hermitian"
        raise NotAStateError(msg)
    w = rho.eigvalsh()
    if w[0] < -EIGEN_CLAMP:
        msg = f"operator has eigenvalue {w[0]:.3e} < -{EIGEN_CLAMP:g}"
        raise NotAStateError(msg)
    return float(shannon_bits(w))


def mutual_information(
    rho: DenseOperator | SectorOperator, config: HasTotalSpins | int | None = None
) -> float:
    """Total correlations ``S(rho_A) + S(rho_B) - S(rho)``."""
    s_a = von_neumann_entropy(partial_trace(rho, SubsystemLabel.RING_A, config))
    s_b = von_neumann_entropy(partial_trace(rho, SubsystemLabel.CENTRAL_B, config))
    return s_a + s_b - von_neumann_entropy(rho)
