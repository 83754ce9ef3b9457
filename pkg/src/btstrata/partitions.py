"""Young diagrams, unipotent degrees and 2-cores."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .intpoly import IntPoly, signed_power


class PartitionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts if int(x) != 0)
        if any(x < 0 for x in parts):
            raise PartitionError("parts must be positive: %r" % (self.parts,))
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise PartitionError("parts must be weakly decreasing: %r" % (self.parts,))
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        text = text.strip()
        if text in ("", "()", "0"):
            return cls(())
        try:
            return cls(tuple(int(x) for x in text.strip("()").split(",") if x.strip()))
        except ValueError as exc:
            raise PartitionError("cannot parse partition %r" % text) from exc

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0])))

    def boxes(self) -> Iterator[Tuple[int, int]]:
        for i, row in enumerate(self.parts):
            for j in range(row):
                yield i, j

    def __str__(self) -> str:
        return ",".join(map(str, self.parts)) if self.parts else "()"


def staircase(t: int) -> Partition:
    return Partition(tuple(range(t, 0, -1)))


def partitions_of(k: int) -> Iterator[Partition]:
    """All partitions of k in reverse lexicographic order."""

    def rec(rest: int, cap: int) -> Iterator[Tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first):
                yield (first,) + tail

    for parts in rec(k, k):
        yield Partition(parts)


def hook_lengths(lam: Partition) -> List[int]:
    """Hook lengths row by row, left to right."""
    conj = lam.conjugate().parts
    return [lam.parts[i] - j + conj[j] - i - 1 for i, j in lam.boxes()]


def a_stat(lam: Partition) -> int:
    return sum(i * x for i, x in enumerate(lam.parts))


@lru_cache(maxsize=None)
def degree(lam: Partition) -> IntPoly:
    """Degree of the unipotent representation as a polynomial in q."""
    k = lam.size
    num = IntPoly.monomial(a_stat(lam))
    for i in range(1, k + 1):
        num = num * signed_power(i)
    for h, mult in sorted(Counter(hook_lengths(lam)).items()):
        num = num.exact_div(signed_power(h) ** mult)
    return num


def beta_set(lam: Partition, length: int) -> List[int]:
    """First-column hook lengths, padded to ``length`` beads."""
    parts = list(lam.parts) + [0] * (length - len(lam))
    return [parts[i] + length - 1 - i for i in range(length)]


def two_core(lam: Partition) -> Partition:
    """2-core through the beta-set: slide beads down by 2 on each runner."""
    length = len(lam) + (len(lam) % 2)
    beads = beta_set(lam, length)
    runners = [sum(1 for b in beads if b % 2 == r) for r in (0, 1)]
    packed = sorted([2 * k for k in range(runners[0])] + [2 * k + 1 for k in range(runners[1])], reverse=True)
    parts = [b - (length - 1 - i) for i, b in enumerate(packed)]
    return Partition(tuple(x for x in parts if x > 0))


def _removable_dominoes(parts: List[int]) -> Iterator[List[int]]:
    r = len(parts)
    for i in range(r):
        nxt = parts[i + 1] if i + 1 < r else 0
        if parts[i] - nxt >= 2:
            new = parts[:]
            new[i] -= 2
            yield new
        if i + 1 < r and parts[i] == parts[i + 1] and (i + 2 >= r or parts[i + 2] < parts[i]):
            new = parts[:]
            new[i] -= 1
            new[i + 1] -= 1
            yield new


def two_core_greedy(lam: Partition) -> Partition:
    """2-core by removing the first removable domino until none is left."""
    parts = list(lam.parts)
    while True:
        nxt = next(_removable_dominoes(parts), None)
        if nxt is None:
            return Partition(tuple(x for x in parts if x > 0))
        parts = [x for x in nxt if x > 0]


def staircase_index(core: Partition) -> int:
    t = len(core)
    if core != staircase(t):
        raise PartitionError("%s is not a staircase" % core)
    return t


def cuspidal_support(lam: Partition) -> Tuple[int, int]:
    t = staircase_index(two_core(lam))
    rest = lam.size - t * (t + 1) // 2
    if rest < 0 or rest % 2:
        raise PartitionError("inconsistent 2-core for %s" % lam)
    return t, rest // 2


def inertial_class(lam: Partition) -> int:
    if lam.size % 2 == 0:
        raise PartitionError("inertial class needs |lambda| odd, got %d" % lam.size)
    t, _ = cuspidal_support(lam)
    tri = t * (t + 1) // 2
    return (tri - 1) // 2


def is_cuspidal(lam: Partition) -> bool:
    """Unipotent cuspidal exactly for staircase shapes."""
    return lam == staircase(len(lam))


@dataclass(frozen=True)
class UnipotentRepLabel:
    partition: Partition

    @property
    def rank(self) -> int:
        return self.partition.size

    def __str__(self) -> str:
        return "rho(%s)" % self.partition


def two_row(first: int, second: int) -> Partition:
    return Partition((first, second))


def label(parts: Sequence[int]) -> UnipotentRepLabel:
    return UnipotentRepLabel(Partition(tuple(parts)))
