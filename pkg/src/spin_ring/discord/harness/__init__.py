"""Parameter sweeps, regime maps and their machine-readable output."""

__all__ = (
    # specs
    "Mode",
    "SweepSpec",
    "SweepRow",
    "RegionMap",
    "RegionMismatch",
    # runs
    "run_sweep",
    "region_map",
    # output
    "emit",
    "EMIT_REGISTRY",
    # cli
    "main",
)

from spin_ring.discord.harness._cli import main
from spin_ring.discord.harness._emit import EMIT_REGISTRY, emit
from spin_ring.discord.harness._region import RegionMap, RegionMismatch, region_map
from spin_ring.discord.harness._spec import Mode, SweepSpec
from spin_ring.discord.harness._sweep import SweepRow, run_sweep
