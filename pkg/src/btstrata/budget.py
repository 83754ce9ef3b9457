"""Enumeration caps shared by the brute-force kernels."""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_VAR = "BT_STRATA_BUDGET"


class BudgetExceeded(RuntimeError):
    """An enumeration would examine more candidates than its cap allows."""


@dataclass(frozen=True)
class Budget:
    subspaces: int = 10**7  # candidate subspaces scanned by one enumeration
    subsets: int = 10**6  # subset-search nodes visited per multiplicity value

    @classmethod
    def from_env(cls) -> "Budget":
        raw = os.environ.get(ENV_VAR)
        if not raw:
            return cls()
        cap = int(raw)
        if cap <= 0:
            raise ValueError("%s must be a positive integer" % ENV_VAR)
        return cls(subspaces=cap, subsets=cap)

    def with_caps(self, **kw) -> "Budget":
        return replace(self, **kw)


def default_budget() -> Budget:
    return Budget.from_env()
