"""Projective measurements of the central spin."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass
import logging
from typing import TYPE_CHECKING, TypeAlias

import numpy as np
from scipy.special import xlogy

from spin_ring.discord._errors import DomainError, StateValidityError
from spin_ring.discord.operators import DenseOperator, SectorOperator, spin_half
from spin_ring.discord.operators._sectors import split_centre
from spin_ring.discord.qinfo._entropy import LN2, shannon_bits, von_neumann_entropy
from spin_ring.discord.setup_package import (
    DEGENERATE_BRANCH,
    ENTROPY_BATCH_ELEMENTS,
    HERMITIAN_ATOL,
)

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from spin_ring.discord.typing import Axis, ComplexMatrix, RealArray

logger = logging.getLogger(__name__)

_UNIT_ATOL = 1e-12

RingState: TypeAlias = DenseOperator | SectorOperator


@dataclass(frozen=True, slots=True)
class MeasurementDirection:
    """Unit vector on the Bloch sphere of the central spin.

    Raises
    ------
    DomainError
        If the vector is not unit length within ``1e-12``.

    Examples
    --------
    >>> MeasurementDirection.along("y")
    MeasurementDirection(n_x=0.0, n_y=1.0, n_z=0.0)
    """

    n_x: float
    n_y: float
    n_z: float

    def __post_init__(self) -> None:
        norm2 = self.n_x**2 + self.n_y**2 + self.n_z**2
        if not abs(norm2 - 1) < _UNIT_ATOL:
            msg = f"measurement direction must be a unit vector, |n|^2 = {norm2!r}"
            raise DomainError(msg)

    @classmethod
    def along(cls, axis: Axis, /) -> MeasurementDirection:
        """Direction of a coordinate axis."""
        vec = {"x": (1.0, 0.0, 0.0), "y": (0.0, 1.0, 0.0), "z": (0.0, 0.0, 1.0)}
        if axis not in vec:
            msg = f"axis must be one of 'x', 'y', 'z', got {axis!r}"
            raise DomainError(msg)
        return cls(*vec[axis])

    @classmethod
    def from_angles(cls, theta: float, phi: float) -> MeasurementDirection:
        """Direction at polar angle ``theta`` and azimuth ``phi``."""
        return cls(*_angles_to_vectors(np.array([theta]), np.array([phi]))[0])

    @classmethod
    def from_vector(cls, vector: ArrayLike, /) -> MeasurementDirection:
        """Normalize a nonzero 3-vector."""
        v = np.asarray(vector, dtype=float).reshape(3)
        norm = float(np.linalg.norm(v))
        if norm == 0:
            msg = "cannot normalize the zero vector"
            raise DomainError(msg)
        return cls(*(float(x) for x in v / norm))

    # =========================================================================

    @property
    def vector(self) -> RealArray:
        return np.array([self.n_x, self.n_y, self.n_z])

    @property
    def dominant_axis(self) -> Axis:
        """Coordinate axis with the largest component magnitude."""
        return ("x", "y", "z")[int(np.argmax(np.abs(self.vector)))]  # type: ignore[return-value]

    def overlap(self, other: MeasurementDirection, /) -> float:
        """``|n . m|``; directions ``n`` and ``-n`` define the same measurement."""
        return abs(float(self.vector @ other.vector))

    def canonical(self) -> MeasurementDirection:
        """Representative of ``{n, -n}`` whose last nonzero of (z, y, x) is positive."""
        for component in (self.n_z, self.n_y, self.n_x):
            if component != 0:
                sign = 1.0 if component > 0 else -1.0
                return MeasurementDirection(
                    sign * self.n_x + 0.0, sign * self.n_y + 0.0, sign * self.n_z + 0.0
                )
        return self  # pragma: no cover


def _angles_to_vectors(theta: RealArray, phi: RealArray) -> RealArray:
    st = np.sin(theta)
    return np.stack((st * np.cos(phi), st * np.sin(phi), np.cos(theta)), axis=-1)


#####################################################################


@dataclass(frozen=True, slots=True)
class MeasurementEnsemble:
    """Outcome probabilities and conditional ring states of one measurement.

    ``rho0`` or ``rho1`` is `None` when the branch probability is below
    ``1e-14``; such a branch carries no weight.
    """

    p0: float
    p1: float
    rho0: RingState | None
    rho1: RingState | None

    def __post_init__(self) -> None:
        if min(self.p0, self.p1) < -HERMITIAN_ATOL:
            msg = f"negative outcome probability ({self.p0}, {self.p1})"
            raise StateValidityError(msg)
        if not abs(self.p0 + self.p1 - 1) < HERMITIAN_ATOL:
            msg = f"outcome probabilities sum to {self.p0 + self.p1!r}, not 1"
            raise StateValidityError(msg)

    @property
    def probabilities(self) -> tuple[float, float]:
        return (self.p0, self.p1)

    @property
    def states(self) -> tuple[RingState | None, RingState | None]:
        return (self.rho0, self.rho1)


def _projector_matrices(vectors: RealArray) -> tuple[ComplexMatrix, ComplexMatrix]:
    """Batched ``1/2 +- n.S`` for directions of shape ``(M, 3)``."""
    s = np.stack([spin_half(a).matrix for a in ("x", "y", "z")])
    ns = np.einsum("ma,aij->mij", vectors, s)
    half = 0.5 * np.eye(2)
    return half + ns, half - ns


def projectors(n: MeasurementDirection) -> tuple[DenseOperator, DenseOperator]:
    """Projectors ``Pi_0 = 1/2 + n.S`` and ``Pi_1 = 1/2 - n.S``.

    Examples
    --------
    >>> p0, p1 = projectors(MeasurementDirection.along("z"))
    >>> p0.matrix.real
    array([[1., 0.],
           [0., 0.]])
    """
    p0, p1 = _projector_matrices(n.vector[None, :])
    return DenseOperator(p0[0], hermitian=True), DenseOperator(p1[0], hermitian=True)


def _ring_blocks(
    rho: DenseOperator | SectorOperator,
) -> list[tuple[int, ComplexMatrix]]:
    """``(m, B)`` pairs, ``B[s, t] = rho[(., s), (., t)]`` of shape ``(2, 2, dA, dA)``.

    A dense state is a single pair with ``m = 1``; a sector state has one
    pair per total-spin sector, ``m`` its multiplicity.
    """
    if isinstance(rho, SectorOperator):
        return list(zip(rho.multiplicities, rho.centre_blocks(), strict=True))
    if rho.num_spins < 2:  # noqa: PLR2004
        msg = f"state of dim {rho.dim} has no ring subsystem"
        raise DomainError(msg)
    return [(1, split_centre(rho.matrix))]


def _ring_state(
    rho: DenseOperator | SectorOperator, parts: list[ComplexMatrix], p: float
) -> DenseOperator | SectorOperator:
    if isinstance(rho, SectorOperator):
        return SectorOperator(
            tuple(s / p for s in parts),
            rho.num_ring_spins,
            with_centre=False,
            hermitian=True,
        )
    return DenseOperator(parts[0] / p, hermitian=True)


def measure_B(  # noqa: N802
    rho: DenseOperator | SectorOperator, n: MeasurementDirection
) -> MeasurementEnsemble:
    """Measure the central spin along ``n``.

    ``p_k = Tr[(1 x Pi_k) rho (1 x Pi_k)]`` and ``rho_k`` is the ring state
    conditioned on outcome ``k``.

    Parameters
    ----------
    rho : DenseOperator or SectorOperator
        State on the full space, central spin last.
    n : MeasurementDirection

    Returns
    -------
    MeasurementEnsemble
        Ring states of the same kind as ``rho``.
    """
    blocks = _ring_blocks(rho)
    probs: list[float] = []
    states: list[RingState | None] = []
    for proj in _projector_matrices(n.vector[None, :]):
        # Tr_B[(1 x P) rho (1 x P)] = sum_{s,t} P[t, s] B[s, t]
        parts = [np.einsum("ts,stij->ij", proj[0], b) for _, b in blocks]
        parts = [0.5 * (s + s.conj().T) for s in parts]
        p = float(sum(m * np.trace(s).real for (m, _), s in zip(blocks, parts, strict=True)))
        probs.append(p)
        if p < DEGENERATE_BRANCH:
            logger.warning("degenerate measurement branch, p = %.3e", p)
            states.append(None)
        else:
            states.append(_ring_state(rho, parts, p))
    return MeasurementEnsemble(probs[0], probs[1], states[0], states[1])


def conditional_entropy(
    rho: DenseOperator | SectorOperator, n: MeasurementDirection
) -> float:
    """``p_0 S(rho_0) + p_1 S(rho_1)`` in bits; degenerate branches add zero."""
    ensemble = measure_B(rho, n)
    return sum(
        p * von_neumann_entropy(state)
        for p, state in zip(ensemble.probabilities, ensemble.states, strict=True)
        if state is not None
    )


def conditional_entropies(
    rho: DenseOperator | SectorOperator, vectors: ArrayLike
) -> RealArray:
    """Conditional entropies for many directions at once.

    Parameters
    ----------
    rho : DenseOperator or SectorOperator
        State on the full space.
    vectors : (M, 3) array-like
        Unit vectors.

    Returns
    -------
    (M,) ndarray
        Bits.

    Notes
    -----
    With ``mu`` the spectrum of the unnormalized branch state ``p rho_k``,
    ``p S(rho_k) = H(mu) + p log2 p``. For a sector state ``H`` and ``p``
    sum over the sectors with their multiplicities. Directions are
    processed in chunks so that the stacked branch states stay below a
    fixed number of entries.
    """
    vecs = np.atleast_2d(np.asarray(vectors, dtype=float))
    blocks = _ring_blocks(rho)
    dim_a = max(b.shape[-1] for _, b in blocks)

    chunk = max(1, ENTROPY_BATCH_ELEMENTS // (2 * dim_a * dim_a))
    out = np.empty(len(vecs))
    for start in range(0, len(vecs), chunk):
        proj0, _ = _projector_matrices(vecs[start : start + chunk])
        h = np.zeros((len(proj0), 2))
        p = np.zeros((len(proj0), 2))
        for mult, b in blocks:
            sigma0 = np.einsum("mts,stij->mij", proj0, b)
            sigma = np.stack((sigma0, (b[0, 0] + b[1, 1])[None] - sigma0), axis=1)
            sigma = 0.5 * (sigma + sigma.conj().swapaxes(-1, -2))

            mu = np.linalg.eigvalsh(sigma)  # (m, 2, dA)
            h += mult * shannon_bits(mu)
            p += mult * mu.sum(axis=-1)

        p = np.clip(p, 0, None)
        terms = h + xlogy(p, p) / LN2
        terms = np.where(p < DEGENERATE_BRANCH, 0.0, terms)
        out[start : start + chunk] = terms.sum(axis=-1)
    return out


def direction_vectors(theta: ArrayLike, phi: ArrayLike) -> RealArray:
    """Unit vectors from polar and azimuthal angles, shape ``(..., 3)``."""
    return _angles_to_vectors(np.asarray(theta, dtype=float), np.asarray(phi, dtype=float))

