"""Core feature."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from typing import TYPE_CHECKING, Any

import numpy as np

if TYPE_CHECKING:
    from numpy.typing import ArrayLike, NDArray

    from spin_ring.discord.typing import BoolArray, RealArray


def within_bounds(
    value: ArrayLike,
    /,
    lower_bound: float | None,
    upper_bound: float | None,
    *,
    lower_inclusive: bool = True,
    upper_inclusive: bool = True,
) -> BoolArray:
    """Check if a value is within the given bounds.

    Parameters
    ----------
    value : array-like
        Value to check.
    lower_bound, upper_bound : float | None
        Bounds to check against. `None` means unbounded.
    lower_inclusive, upper_inclusive : bool, optional
        Whether to include the bounds in the check, by default `True`.

    Returns
    -------
    ndarray
        Boolean array indicating whether the value is within the bounds.

    Examples
    --------
    >>> within_bounds([0.0, 0.5, 1.0], 0.0, 1.0, lower_inclusive=False)
    array([False,  True,  True])
    """
    value = np.asarray(value, dtype=float)
    out = np.ones_like(value, dtype=bool)
    if lower_bound is not None:
        out &= value >= lower_bound if lower_inclusive else value > lower_bound
    if upper_bound is not None:
        out &= value <= upper_bound if upper_inclusive else value < upper_bound
    return out


def pairwise_distance(points: NDArray[Any], /, axis: int = -1) -> RealArray:
    """Return the matrix of Euclidean distances between all pairs of points.

    Parameters
    ----------
    points : (M, D) array, positional-only
        Coordinates, one point per row when ``axis=-1``.
    axis : int
        Axis holding the coordinate components.

    Returns
    -------
    (M, M) ndarray
        Symmetric, with zeros on the diagonal.

    Examples
    --------
    >>> pairwise_distance(np.array([[0.0, 0.0], [3.0, 4.0]]))
    array([[0., 5.],
           [5., 0.]])
    """
    x = np.moveaxis(np.asarray(points, dtype=float), axis, -1)
    diff = x[:, None, :] - x[None, :, :]
    return np.sqrt(np.square(diff).sum(-1))
