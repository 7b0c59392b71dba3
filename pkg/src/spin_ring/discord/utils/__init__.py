"""Utilities."""

__all__ = (
    "within_bounds",
    "pairwise_distance",
)

from spin_ring.discord.utils.funcs import pairwise_distance, within_bounds
