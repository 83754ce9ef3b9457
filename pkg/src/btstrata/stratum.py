"""Cohomology tables of closed strata M_Lambda and of their tubes U_Lambda."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .counts import RangeError, max_theta
from .intpoly import IntPoly
from .partitions import Partition, UnipotentRepLabel, degree


@dataclass(frozen=True)
class FrobWeight:
    """The scalar sign * p^exponent."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1, got %r" % (self.sign,))

    @classmethod
    def of_degree(cls, b: int) -> "FrobWeight":
        """(-p)^b."""
        return cls(-1 if b % 2 else 1, b)

    def __str__(self) -> str:
        return "%sp^%d" % ("+" if self.sign > 0 else "-", self.exponent)

    def to_json(self) -> dict:
        return {"sign": self.sign, "exponent": self.exponent}

    @classmethod
    def from_json(cls, d: dict) -> "FrobWeight":
        return cls(int(d["sign"]), int(d["exponent"]))


@dataclass(frozen=True)
class GradedRepTable:
    rows: Dict[int, Tuple[Tuple[UnipotentRepLabel, ...], FrobWeight]] = field(default_factory=dict)

    def degrees(self) -> List[int]:
        return sorted(self.rows)

    def reps(self, j: int) -> Tuple[UnipotentRepLabel, ...]:
        return self.rows[j][0] if j in self.rows else ()

    def weight(self, j: int) -> FrobWeight:
        return self.rows[j][1]

    def partitions(self, j: int) -> List[Partition]:
        return [r.partition for r in self.reps(j)]

    def to_json(self) -> dict:
        return {
            str(j): {
                "reps": [list(r.partition.parts) for r in reps],
                "weight": w.to_json(),
            }
            for j, (reps, w) in sorted(self.rows.items())
        }


def _labels(parts_list) -> Tuple[UnipotentRepLabel, ...]:
    return tuple(UnipotentRepLabel(Partition(tuple(p))) for p in parts_list)


def stratum_reps(theta: int, j: int) -> List[Tuple[int, int]]:
    """Two-row partitions occurring in H^j_c(M_Lambda) for dim M_Lambda = theta."""
    if j < 0 or j > 2 * theta:
        return []
    if j % 2 == 0:
        h = j // 2
        return [(2 * theta + 1 - 2 * s, 2 * s) for s in range(min(h, theta - h) + 1)]
    h = (j - 1) // 2
    return [(2 * theta - 2 * s, 2 * s + 1) for s in range(min(h, theta - 1 - h) + 1)]


def stratum_cohomology(theta: int) -> GradedRepTable:
    if theta < 0:
        raise RangeError("theta=%d must be >= 0" % theta)
    rows = {}
    for j in range(2 * theta + 1):
        reps = stratum_reps(theta, j)
        if reps:
            rows[j] = (_labels(reps), FrobWeight.of_degree(j))
    return GradedRepTable(rows)


def betti(theta: int) -> List[IntPoly]:
    """dim H^j_c(M_Lambda) for j = 0..2 theta, as polynomials in p."""
    table = stratum_cohomology(theta)
    out = []
    for j in range(2 * theta + 1):
        total = IntPoly.zero()
        for r in table.reps(j):
            total = total + degree(r.partition)
        out.append(total)
    return out


def betti_at(theta: int, p: int) -> List[int]:
    return [b.eval(p) for b in betti(theta)]


def tube_cohomology(n: int, theta: int) -> GradedRepTable:
    """H^b_c(U_Lambda) = H^{b - 2(n-1-theta)}_c(M_Lambda) with weight (-p)^b."""
    m = max_theta(n)
    if not (0 <= theta <= m):
        raise RangeError("theta=%d outside [0, %d] for n=%d" % (theta, m, n))
    shift = 2 * (n - 1 - theta)
    base = stratum_cohomology(theta)
    return GradedRepTable(
        {j + shift: (reps, FrobWeight.of_degree(j + shift)) for j, (reps, _) in base.rows.items()}
    )
