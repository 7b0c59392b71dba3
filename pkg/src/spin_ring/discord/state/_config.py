"""Physical configuration of the ring plus central spin."""

from __future__ import annotations

__all__: tuple[str, ...] = ()

from dataclasses import KW_ONLY, dataclass, replace
import math

from spin_ring.discord._errors import DomainError
from spin_ring.discord.setup_package import MAX_SPINS


@dataclass(frozen=True, slots=True)
class SystemConfig:
    """Parameters of the heteronuclear ring with a central spin.

    Parameters
    ----------
    total_spins : int
        ``N``: ``N - 1`` ring spins plus the central spin, ``2 <= N <= 14``.
    beta : float
        Inverse temperature, in inverse angular-frequency units.
    omega_a, omega_b : float
        Larmor frequencies of the ring spins and of the central spin.
    g : float, optional
        Ring-centre zz coupling, nonzero.
    checked : bool, optional keyword-only
        Enforce the high-temperature conditions
        ``(N-1) beta omega_a < 1`` and ``(N-1) beta omega_b < 1``.
        Use :meth:`unchecked` to build exploratory configurations.

    Raises
    ------
    DomainError
        If a parameter is out of range.

    Examples
    --------
    >>> cfg = SystemConfig(3, 1.0, 0.06, 0.03)
    >>> round(cfg.u, 12), round(cfg.v, 12), round(cfg.gamma, 12)
    (0.03, 0.06, 2.0)
    """

    total_spins: int
    beta: float
    omega_a: float
    omega_b: float
    g: float = 1.0
    _: KW_ONLY
    checked: bool = True

    def __post_init__(self) -> None:
        if not 2 <= self.total_spins <= MAX_SPINS:  # noqa: PLR2004
            msg = f"total_spins must be in 2..{MAX_SPINS}, got {self.total_spins}"
            raise DomainError(msg)

        for name in ("beta", "omega_a", "omega_b"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                msg = f"{name} must be positive and finite, got {value}"
                raise DomainError(msg)

        if self.g == 0 or not math.isfinite(self.g):
            msg = f"g must be nonzero and finite, got {self.g}"
            raise DomainError(msg)

        if not self.checked:
            return

        n = self.num_ring_spins
        for name, bw in (("omega_a", self.beta_omega_a), ("omega_b", self.beta_omega_b)):
            if n * bw >= 1:
                msg = (
                    f"high-temperature condition violated: (N-1) beta {name} = "
                    f"{n * bw:.6g} must be < 1"
                )
                raise DomainError(msg)

    # =========================================================================
    # Alternate constructors

    @classmethod
    def unchecked(
        cls,
        total_spins: int,
        beta: float,
        omega_a: float,
        omega_b: float,
        g: float = 1.0,
    ) -> SystemConfig:
        """Build without the high-temperature checks."""
        return cls(total_spins, beta, omega_a, omega_b, g, checked=False)

    @classmethod
    def from_gamma(
        cls,
        total_spins: int,
        gamma: float,
        *,
        beta: float,
        omega_b: float,
        g: float = 1.0,
        checked: bool = True,
    ) -> SystemConfig:
        """Build with ``omega_a = gamma * omega_b``."""
        return cls(
            total_spins, beta, gamma * omega_b, omega_b, g, checked=checked
        )

    @classmethod
    def from_u(
        cls, total_spins: int, gamma: float, u: float, *, g: float = 1.0
    ) -> SystemConfig:
        """Build at ``beta = 1`` from the central-spin parameter ``u``."""
        omega_b = 2 * u / (total_spins - 1)
        return cls.from_gamma(total_spins, gamma, beta=1.0, omega_b=omega_b, g=g)

    def with_beta_scaled(self, factor: float, /) -> SystemConfig:
        """Same configuration at inverse temperature ``factor * beta``."""
        return replace(self, beta=self.beta * factor)

    # =========================================================================
    # Derived quantities

    @property
    def num_ring_spins(self) -> int:
        """``N - 1``."""
        return self.total_spins - 1

    @property
    def beta_omega_a(self) -> float:
        return self.beta * self.omega_a

    @property
    def beta_omega_b(self) -> float:
        return self.beta * self.omega_b

    @property
    def u(self) -> float:
        """``(N-1) beta omega_b / 2``."""
        return self.num_ring_spins * self.beta_omega_b / 2

    @property
    def v(self) -> float:
        """``(N-1) beta omega_a / 2``."""
        return self.num_ring_spins * self.beta_omega_a / 2

    @property
    def gamma(self) -> float:
        """Larmor-frequency ratio ``omega_a / omega_b``."""
        return self.omega_a / self.omega_b
