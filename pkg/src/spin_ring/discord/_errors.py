"""Exceptions."""

from __future__ import annotations

__all__ = (
    "DomainError",
    "StateValidityError",
    "NotAStateError",
    "RegimeError",
    "InequalityViolationError",
    "UsageError",
)


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class StateValidityError(ValueError):
    """A density matrix or correlation report is not physical."""


class NotAStateError(StateValidityError):
    """An operator has an eigenvalue too negative to be a density matrix."""


class RegimeError(ValueError):
    """No closed-form regime applies; use the numeric path instead."""


class InequalityViolationError(AssertionError):
    """A coefficient inequality failed on the checked grid."""


class UsageError(ValueError):
    """Invalid sweep specification or command-line arguments."""
