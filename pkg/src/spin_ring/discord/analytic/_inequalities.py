"""Grid checks of the coefficient inequalities behind the regime conditions."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import dataclass, field
import logging
import math
from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from spin_ring.discord._errors import DomainError, InequalityViolationError
from spin_ring.discord.analytic._params import brackets, trig_terms
from spin_ring.discord.analytic._regime import (
    ARCTAN_SQRT2,
    HALF_TURN,
    QUARTER_TURN,
    mid_window_ratio,
)
from spin_ring.discord.setup_package import BOUNDARY_GUARD

if TYPE_CHECKING:
    from numpy.typing import ArrayLike

    from spin_ring.discord.typing import BoolArray, RealArray

logger = logging.getLogger(__name__)


class InequalityViolation(NamedTuple):
    """One failing grid point."""

    name: str
    tau: float
    gamma: float
    margin: float


@dataclass(frozen=True)
class AppendixReport:
    """Worst margin per inequality and every violating grid point.

    Margins are ``lhs - rhs`` of inequalities written as ``lhs >= rhs``, in
    units where ``u = 1`` and ``v = gamma``. A check with no grid point in its
    region has margin ``inf``.
    """

    num_spins: int
    margins: dict[str, float] = field(default_factory=dict)
    violations: tuple[InequalityViolation, ...] = ()

    @property
    def worst_margin(self) -> float:
        return min(self.margins.values(), default=math.inf)

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self) -> AppendixReport:
        """Raise if any inequality failed; return ``self`` otherwise."""
        if self.violations:
            first = self.violations[0]
            msg = (
                f"{len(self.violations)} violations for N={self.num_spins}; first: "
                f"{first.name} at tau={first.tau:.6g}, gamma={first.gamma:.6g} "
                f"(margin {first.margin:.3e})"
            )
            raise InequalityViolationError(msg)
        return self


def verify_appendix_inequalities(
    num_spins: int,
    tau_grid: ArrayLike | None = None,
    gamma_grid: ArrayLike | None = None,
) -> AppendixReport:
    """Check the bracket inequalities of the conditional entropy on a grid.

    Everywhere in ``[0, pi/2]``:

    - ``x_bracket_bound``: ``1 + cos(2t)**n - 2 cos(t)**(2n) <= 2 n sin(t)**2``
    - ``y_bracket_bound``: ``1 - cos(2t)**n <= 2 n sin(t)**2``

    In the ``y``-regime windows (``n >= 2``, ``0 < t < arctan(sqrt 2)``, gamma
    below the window's threshold):

    - ``y_exceeds_x``: ``b_y >= b_x``
    - ``y_bracket_positive``: ``b_y > 0``
    - ``tan_power_below_one``: ``1 > (1 - tan(t)**2)**n``

    In the ``x``-regime window (``N`` odd, ``arctan(sqrt 2) < t < pi/2``,
    ``gamma < 1/sqrt(2n)``):

    - ``x_exceeds_y``: ``b_x >= b_y``
    - ``x_bracket_positive``: ``b_x > 0``
    - ``tan_square_above_one``: ``(1 - tan(t)**2)**2 > 1``

    Here ``n = N - 1``. A point violates a check when its margin is below
    ``-1e-12``.

    Parameters
    ----------
    num_spins : int
        ``N >= 2``.
    tau_grid, gamma_grid : array-like or None, optional
        Defaults: 200 points on ``[0, pi/2]`` and on ``[0.01, 3]``.

    Returns
    -------
    AppendixReport
        Call :meth:`AppendixReport.check` to raise on violations.

    Examples
    --------
    >>> verify_appendix_inequalities(5).passed
    True
    """
    if num_spins < 2:  # noqa: PLR2004
        msg = f"num_spins must be >= 2, got {num_spins}"
        raise DomainError(msg)

    taus = np.linspace(0, HALF_TURN, 200) if tau_grid is None else tau_grid
    gammas = np.linspace(0.01, 3.0, 200) if gamma_grid is None else gamma_grid
    tt, gg = np.meshgrid(
        np.asarray(taus, dtype=float), np.asarray(gammas, dtype=float), indexing="ij"
    )

    n = num_spins - 1
    c2, k2, s2 = trig_terms(n, tt)
    t2 = np.tan(np.where(tt < HALF_TURN, tt, 0.0)) ** 2  # tan diverges at pi/2
    bx, by = brackets(n, 1.0, gg, tt)
    everywhere = np.ones_like(tt, dtype=bool)

    checks: list[tuple[str, RealArray, BoolArray]] = [
        ("x_bracket_bound", 2 * n * s2 - (1 + c2 - 2 * k2), everywhere),
        ("y_bracket_bound", 2 * n * s2 - (1 - c2), everywhere),
    ]

    if n >= 2:  # noqa: PLR2004
        threshold = np.where(
            tt < QUARTER_TURN,
            1 / math.sqrt(n),
            1 / math.sqrt(mid_window_ratio(num_spins)),
        )
        y_region = (tt > 0) & (tt < ARCTAN_SQRT2) & (gg < threshold)
        checks += [
            ("y_exceeds_x", by - bx, y_region),
            ("y_bracket_positive", by, y_region),
            ("tan_power_below_one", 1 - (1 - t2) ** n, y_region),
        ]

    if n >= 2 and num_spins % 2 == 1:  # noqa: PLR2004
        x_region = (tt > ARCTAN_SQRT2) & (tt < HALF_TURN) & (gg < 1 / math.sqrt(2 * n))
        checks += [
            ("x_exceeds_y", bx - by, x_region),
            ("x_bracket_positive", bx, x_region),
            ("tan_square_above_one", (1 - t2) ** 2 - 1, x_region),
        ]

    margins: dict[str, float] = {}
    violations: list[InequalityViolation] = []
    for name, margin, region in checks:
        values = margin[region]
        margins[name] = float(values.min()) if values.size else math.inf
        for i, j in zip(*np.nonzero(region & (margin < -BOUNDARY_GUARD)), strict=True):
            violations.append(
                InequalityViolation(name, float(tt[i, j]), float(gg[i, j]), float(margin[i, j]))
            )

    if violations:
        logger.warning("%d inequality violations for N=%d", len(violations), num_spins)
    return AppendixReport(num_spins, margins, tuple(violations))
