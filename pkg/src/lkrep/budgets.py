"""Enumeration budgets for the brute-force oracles.

Every exhaustive search in the package (closed-subset scans, positive-word
enumeration, Weyl group closure, Charney-length BFS) is capped by a single
object-count budget so that a careless type/rank choice fails fast instead of
exploding.  The default is 4096 objects; the ``LK_BUDGET`` environment
variable overrides it.
"""

from __future__ import annotations

import os

DEFAULT_BUDGET = 4096


def enumeration_budget(override: int | None = None) -> int:
    if override is not None:
        return int(override)
    env = os.environ.get("LK_BUDGET")
    return int(env) if env else DEFAULT_BUDGET
