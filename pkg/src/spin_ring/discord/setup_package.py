"""Package Setup."""

__all__: tuple[str, ...] = ()

from typing import Final

MAX_SPINS: Final = 14
"""Largest total number of spins; matrices are dense ``2**N x 2**N``."""

HERMITIAN_ATOL: Final = 1e-12
EIGEN_CLAMP: Final = 1e-10
DEGENERATE_BRANCH: Final = 1e-14
TIE_TOLERANCE: Final = 1e-12
BOUNDARY_GUARD: Final = 1e-12
REPORT_TOLERANCE: Final = 1e-9

ENTROPY_BATCH_ELEMENTS: Final = 2**22
"""Upper bound on the number of complex entries per batched eigen-solve."""
