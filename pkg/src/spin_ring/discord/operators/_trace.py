"""Partial traces over the ring or the central spin."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from typing import TYPE_CHECKING, overload

import numpy as np

from spin_ring.discord._errors import DomainError
from spin_ring.discord.operators._core import DenseOperator, SubsystemLabel
from spin_ring.discord.operators._sectors import SectorOperator

if TYPE_CHECKING:
    from spin_ring.discord.typing import HasTotalSpins


def _total_spins(
    op: DenseOperator | SectorOperator, config: HasTotalSpins | int | None
) -> int:
    if config is None:
        return op.num_spins
    if isinstance(config, int):
        return config
    return config.total_spins


def _sector_partial_trace(
    op: SectorOperator, keep: SubsystemLabel
) -> DenseOperator | SectorOperator:
    blocks = op.centre_blocks()
    if keep is SubsystemLabel.RING_A:
        return SectorOperator(
            tuple(b[0, 0] + b[1, 1] for b in blocks),
            op.num_ring_spins,
            with_centre=False,
            hermitian=op.hermitian,
        )
    reduced = sum(
        m * np.einsum("stii->st", b)
        for m, b in zip(op.multiplicities, blocks, strict=True)
    )
    return DenseOperator(reduced, hermitian=op.hermitian)


@overload
def partial_trace(
    op: DenseOperator,
    keep: SubsystemLabel,
    config: HasTotalSpins | int | None = ...,
) -> DenseOperator: ...


@overload
def partial_trace(
    op: SectorOperator,
    keep: SubsystemLabel,
    config: HasTotalSpins | int | None = ...,
) -> DenseOperator | SectorOperator: ...


def partial_trace(
    op: DenseOperator | SectorOperator,
    keep: SubsystemLabel,
    config: HasTotalSpins | int | None = None,
) -> DenseOperator | SectorOperator:
    """Trace out the complement of ``keep``.

    Parameters
    ----------
    op : DenseOperator or SectorOperator
        Operator on the full ``2**N`` space.
    keep : SubsystemLabel
        Subsystem to keep: the ring (``RING_A``) or the central spin
        (``CENTRAL_B``).
    config : SystemConfig or int or None, optional
        Supplies ``N``. If `None`, ``N`` is inferred from ``op``.

    Returns
    -------
    DenseOperator or SectorOperator
        ``2**(N-1)`` or ``2`` dimensional. The ring part of a
        `SectorOperator` stays block diagonal.

    Raises
    ------
    DomainError
        If ``op.dim != 2**N`` or ``N < 2``.

    Examples
    --------
    >>> rho = DenseOperator(np.eye(4) / 4, hermitian=True)
    >>> partial_trace(rho, SubsystemLabel.CENTRAL_B).matrix.real
    array([[0.5, 0. ],
           [0. , 0.5]])
    """
    num_spins = _total_spins(op, config)
    if num_spins < 2 or op.dim != 2**num_spins:  # noqa: PLR2004
        msg = f"operator of dim {op.dim} does not act on {num_spins} spins"
        raise DomainError(msg)
    if keep not in (SubsystemLabel.RING_A, SubsystemLabel.CENTRAL_B):
        msg = f"unknown subsystem {keep!r}"
        raise DomainError(msg)

    if isinstance(op, SectorOperator):
        return _sector_partial_trace(op, keep)

    dim_a = op.dim // 2
    blocks = op.matrix.reshape(dim_a, 2, dim_a, 2)
    if keep is SubsystemLabel.RING_A:
        reduced = np.einsum("ibjb->ij", blocks)
    else:
        reduced = np.einsum("aiaj->ij", blocks)
    return DenseOperator(reduced, hermitian=op.hermitian)
