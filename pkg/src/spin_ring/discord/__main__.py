"""``python -m spin_ring.discord``."""

from spin_ring.discord.harness import main

raise SystemExit(main())
