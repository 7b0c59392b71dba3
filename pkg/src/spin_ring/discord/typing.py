"""Type hints."""

from __future__ import annotations

__all__ = (
    "Axis",
    "ComplexMatrix",
    "RealArray",
    "BoolArray",
    "HasTotalSpins",
)

from typing import Literal, Protocol, TypeAlias, runtime_checkable

import numpy as np
from numpy.typing import NDArray

Axis: TypeAlias = Literal["x", "y", "z"]

ComplexMatrix: TypeAlias = NDArray[np.complex128]
RealArray: TypeAlias = NDArray[np.float64]
BoolArray: TypeAlias = NDArray[np.bool_]


@runtime_checkable
class HasTotalSpins(Protocol):
    """Protocol for objects that know the total number of spins."""

    @property
    def total_spins(self) -> int:
        """Number of spins, ring plus central."""
        ...
