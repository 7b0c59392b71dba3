"""Dense operators on tensor products of spin-1/2 spaces."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import KW_ONLY, dataclass
from enum import Enum
from functools import reduce
from numbers import Number
from typing import TYPE_CHECKING, Any

import numpy as np

from spin_ring.discord._errors import DomainError
from spin_ring.discord.setup_package import HERMITIAN_ATOL

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from spin_ring.discord.typing import ComplexMatrix, RealArray


class SubsystemLabel(Enum):
    """Subsystems of the spin system.

    The ring spins occupy the leftmost tensor factors, the central spin the
    last one.
    """

    RING_A = "RingA"
    CENTRAL_B = "CentralB"


#####################################################################


@dataclass(frozen=True, slots=True, eq=False)
class DenseOperator:
    """Complex square matrix on a space of ``k`` spins-1/2.

    Parameters
    ----------
    matrix : array-like
        ``2**k x 2**k`` matrix, ``k >= 1``. Stored as ``complex128``.
    hermitian : bool, optional keyword-only
        Assert that the matrix is Hermitian. The assertion is verified.

    Raises
    ------
    DomainError
        If the matrix is not square with a power-of-two dimension, or if
        ``hermitian`` is asserted for a non-Hermitian matrix.

    Examples
    --------
    >>> op = DenseOperator(np.eye(2) / 2, hermitian=True)
    >>> op.dim, op.num_spins
    (2, 1)
    """

    matrix: ComplexMatrix
    _: KW_ONLY
    hermitian: bool = False

    # numpy scalars must defer to the reflected operators below
    __array_ufunc__ = None

    def __post_init__(self) -> None:
        matrix = np.asarray(self.matrix, dtype=np.complex128)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:  # noqa: PLR2004
            msg = f"operator must be a square matrix, got shape {matrix.shape}"
            raise DomainError(msg)

        dim = matrix.shape[0]
        if dim < 2 or dim & (dim - 1):  # noqa: PLR2004
            msg = f"operator dimension must be 2**k with k >= 1, got {dim}"
            raise DomainError(msg)

        if self.hermitian and _hermitian_defect(matrix) >= HERMITIAN_ATOL:
            msg = (
                "operator asserted Hermitian but max|M - M^H| = "
                f"{_hermitian_defect(matrix):.3e}"
            )
            raise DomainError(msg)

        object.__setattr__(self, "matrix", matrix)

    # =========================================================================

    @property
    def dim(self) -> int:
        """Hilbert-space dimension."""
        return int(self.matrix.shape[0])

    @property
    def num_spins(self) -> int:
        """Number of spin-1/2 tensor factors."""
        return self.dim.bit_length() - 1

    def __array__(self, dtype: Any = None, copy: bool | None = None) -> ComplexMatrix:
        return np.asarray(self.matrix, dtype=dtype)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(dim={self.dim}, hermitian={self.hermitian})"

    # =========================================================================

    def trace(self) -> complex:
        """Return the trace."""
        return complex(np.trace(self.matrix))

    def is_hermitian(self, atol: float = HERMITIAN_ATOL) -> bool:
        """Check Hermiticity entrywise to ``atol``."""
        return bool(_hermitian_defect(self.matrix) < atol)

    def eigvalsh(self) -> RealArray:
        """Eigenvalues in ascending order, treating the operator as Hermitian."""
        return np.linalg.eigvalsh(self.matrix)

    def max_abs(self) -> float:
        """Largest entry modulus."""
        return float(np.abs(self.matrix).max())

    def kron(self, other: DenseOperator, /) -> DenseOperator:
        """Tensor product with ``other`` as the right-hand factor."""
        return DenseOperator(
            np.kron(self.matrix, other.matrix),
            hermitian=self.hermitian and other.hermitian,
        )

    def commutator(self, other: DenseOperator, /) -> DenseOperator:
        """Return ``[self, other]``."""
        return DenseOperator(
            self.matrix @ other.matrix - other.matrix @ self.matrix
        )

    def conjugate_by(self, unitary: ArrayLike, /) -> DenseOperator:
        """Return ``U M U^H``."""
        u = np.asarray(unitary, dtype=np.complex128)
        out = u @ self.matrix @ u.conj().T
        if self.hermitian:
            out = 0.5 * (out + out.conj().T)
        return DenseOperator(out, hermitian=self.hermitian)

    # =========================================================================
    # Arithmetic

    def __add__(self, other: object) -> DenseOperator:
        if isinstance(other, DenseOperator):
            return DenseOperator(
                self.matrix + other.matrix,
                hermitian=self.hermitian and other.hermitian,
            )
        if isinstance(other, Number):
            scalar = complex(other)  # type: ignore[arg-type]
            return DenseOperator(
                self.matrix + scalar * np.eye(self.dim),
                hermitian=self.hermitian and scalar.imag == 0,
            )
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> DenseOperator:
        return DenseOperator(-self.matrix, hermitian=self.hermitian)

    def __sub__(self, other: object) -> DenseOperator:
        if isinstance(other, DenseOperator | Number):
            return self + (-other)  # type: ignore[operator]
        return NotImplemented

    def __mul__(self, other: object) -> DenseOperator:
        if isinstance(other, Number):
            scalar = complex(other)  # type: ignore[arg-type]
            return DenseOperator(
                scalar * self.matrix,
                hermitian=self.hermitian and scalar.imag == 0,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> DenseOperator:
        if isinstance(other, Number):
            return self * (1 / complex(other))  # type: ignore[arg-type]
        return NotImplemented

    def __matmul__(self, other: object) -> DenseOperator:
        if isinstance(other, DenseOperator):
            return DenseOperator(self.matrix @ other.matrix)
        return NotImplemented


def _hermitian_defect(matrix: ComplexMatrix, /) -> float:
    return float(np.abs(matrix - matrix.conj().T).max())


def identity(num_spins: int, /) -> DenseOperator:
    """Identity on ``num_spins`` spins."""
    return DenseOperator(np.eye(2**num_spins), hermitian=True)


def tensor(*ops: DenseOperator) -> DenseOperator:
    """Tensor product of operators, leftmost factor first."""
    if not ops:
        msg = "tensor product of no operators"
        raise DomainError(msg)
    return reduce(DenseOperator.kron, ops)
