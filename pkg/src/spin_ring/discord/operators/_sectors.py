"""Block-diagonal operators over the total-spin sectors of the ring.

``n`` spins-1/2 decompose as ``sum_j V_j x C^{m_j}``, with ``V_j`` the
spin-``j`` irreducible representation and ``m_j`` its multiplicity. A
collective ring operator acts as ``J^(j) x 1`` on every sector, so any
operator built from collective ring operators and central-spin operators
is fixed by one ``(2j+1)``- or ``2(2j+1)``-dimensional block per ``j``.
"""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import KW_ONLY, dataclass
from functools import lru_cache
from typing import TYPE_CHECKING

import numpy as np
from scipy.special import comb

from spin_ring.discord._errors import DomainError
from spin_ring.discord.operators._core import _hermitian_defect
from spin_ring.discord.setup_package import HERMITIAN_ATOL

if TYPE_CHECKING:
    from spin_ring.discord.typing import Axis, ComplexMatrix, RealArray


@lru_cache(maxsize=64)
def _spin_matrices(two_j: int, /) -> dict[str, ComplexMatrix]:
    j = two_j / 2
    m = j - np.arange(two_j + 1)
    # <m+1| J_+ |m> on the superdiagonal, basis ordered m = j, ..., -j
    up = np.diag(np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1)), k=1).astype(np.complex128)
    out = {
        "x": (up + up.T) / 2,
        "y": (up - up.T) / 2j,
        "z": np.diag(m).astype(np.complex128),
    }
    for matrix in out.values():
        matrix.setflags(write=False)
    return out


def spin_matrix(two_j: int, axis: Axis) -> ComplexMatrix:
    """Spin-``j`` projection matrix, ``j = two_j / 2``.

    The basis is ordered by decreasing ``J_z``, with the Condon-Shortley
    phases, so ``two_j = 1`` reproduces ``sigma / 2``.

    Raises
    ------
    DomainError
        If ``two_j < 0`` or the axis is unknown.

    Examples
    --------
    >>> spin_matrix(2, "z").real
    array([[ 1.,  0.,  0.],
           [ 0.,  0.,  0.],
           [ 0.,  0., -1.]])
    """
    if two_j < 0:
        msg = f"two_j must be >= 0, got {two_j}"
        raise DomainError(msg)
    if axis not in ("x", "y", "z"):
        msg = f"axis must be one of 'x', 'y', 'z', got {axis!r}"
        raise DomainError(msg)
    return _spin_matrices(int(two_j))[axis]


def spin_sectors(num_spins: int, /) -> tuple[tuple[int, int], ...]:
    """``(2j, m_j)`` of every total-spin sector, largest ``j`` first.

    ``m_j = C(n, n/2 - j) - C(n, n/2 - j - 1)``.

    Examples
    --------
    >>> spin_sectors(4)
    ((4, 1), (2, 3), (0, 2))
    """
    if num_spins < 1:
        msg = f"num_spins must be >= 1, got {num_spins}"
        raise DomainError(msg)
    out = []
    for two_j in range(num_spins, -1, -2):
        k = (num_spins - two_j) // 2
        mult = comb(num_spins, k, exact=True) - comb(num_spins, k - 1, exact=True)
        out.append((two_j, int(mult)))
    return tuple(out)


#####################################################################


@dataclass(frozen=True, slots=True, eq=False)
class SectorOperator:
    """Operator on the ring (and optionally the central spin), block by sector.

    Parameters
    ----------
    blocks : tuple of ndarray
        One block per sector of ``spin_sectors(num_ring_spins)``, in that
        order. With the central spin a block acts on ``V_j x C^2``, central
        spin last.
    num_ring_spins : int
        ``n >= 1``.
    with_centre : bool, optional keyword-only
        Whether the central spin is a tensor factor.
    hermitian : bool, optional keyword-only
        Assert that every block is Hermitian. The assertion is verified.

    Raises
    ------
    DomainError
        If the number or the shapes of the blocks do not match the sectors.
    """

    blocks: tuple[ComplexMatrix, ...]
    num_ring_spins: int
    _: KW_ONLY
    with_centre: bool = True
    hermitian: bool = False

    def __post_init__(self) -> None:
        blocks = tuple(np.asarray(b, dtype=np.complex128) for b in self.blocks)
        sectors = spin_sectors(self.num_ring_spins)
        if len(blocks) != len(sectors):
            msg = f"{len(sectors)} sectors need as many blocks, got {len(blocks)}"
            raise DomainError(msg)

        factor = 2 if self.with_centre else 1
        for (two_j, _), block in zip(sectors, blocks, strict=True):
            d = factor * (two_j + 1)
            if block.shape != (d, d):
                msg = f"block of sector 2j={two_j} must be {d}x{d}, got {block.shape}"
                raise DomainError(msg)

        if self.hermitian and not _blocks_hermitian(blocks, HERMITIAN_ATOL):
            msg = "operator asserted Hermitian but a block is not"
            raise DomainError(msg)

        object.__setattr__(self, "blocks", blocks)

    # =========================================================================

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in spin_sectors(self.num_ring_spins))

    @property
    def num_spins(self) -> int:
        """Number of spin-1/2 tensor factors of the full space."""
        return self.num_ring_spins + int(self.with_centre)

    @property
    def dim(self) -> int:
        """Hilbert-space dimension, ``2**num_spins``."""
        return 2**self.num_spins

    def __repr__(self) -> str:
        return (
            f"{type(self).__name__}(num_ring_spins={self.num_ring_spins}, "
            f"with_centre={self.with_centre}, hermitian={self.hermitian})"
        )

    # =========================================================================

    def trace(self) -> complex:
        """Return the trace, counting every block ``m_j`` times."""
        return complex(
            sum(m * np.trace(b) for m, b in zip(self.multiplicities, self.blocks, strict=True))
        )

    def is_hermitian(self, atol: float = HERMITIAN_ATOL) -> bool:
        """Check Hermiticity blockwise to ``atol``."""
        return _blocks_hermitian(self.blocks, atol)

    def eigvalsh(self) -> RealArray:
        """Full spectrum in ascending order, block eigenvalues repeated ``m_j`` times."""
        parts = [
            np.repeat(np.linalg.eigvalsh(b), m)
            for m, b in zip(self.multiplicities, self.blocks, strict=True)
        ]
        return np.sort(np.concatenate(parts))

    def centre_blocks(self) -> tuple[ComplexMatrix, ...]:
        """``B[s, t]`` of every block, shape ``(2, 2, 2j+1, 2j+1)``.

        Raises
        ------
        DomainError
            If the central spin is not a factor.
        """
        if not self.with_centre:
            msg = "operator has no central-spin factor"
            raise DomainError(msg)
        return tuple(split_centre(b) for b in self.blocks)


def _blocks_hermitian(blocks: tuple[ComplexMatrix, ...], atol: float, /) -> bool:
    return all(_hermitian_defect(b) < atol for b in blocks)


def split_centre(matrix: ComplexMatrix, /) -> ComplexMatrix:
    """``B[s, t] = M[(., s), (., t)]`` for a matrix with the central spin last."""
    dim_a = matrix.shape[0] // 2
    return matrix.reshape(dim_a, 2, dim_a, 2).transpose(1, 3, 0, 2)
