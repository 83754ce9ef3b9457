"""The first page of the Cech spectral sequence of the tube cover.

E_1^{a,b} is a sum over theta of (c-Ind_{J_theta}^J H^b_c(U_theta))^{k_{1-a,theta}}.
Terms are stored symbolically: a parahoric label, a unipotent partition and a
multiplicity.  Differentials are not modelled, so E_2 is represented by the
few terms known exactly together with E_1 upper bounds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .budget import Budget, BudgetExceeded, default_budget
from .counts import RangeError, max_theta, nu_eval
from .fieldgeom import (
    FieldDescriptor,
    HermitianSpace,
    HermitianSubspace,
    iter_N,
    orthogonal,
)
from .partitions import Partition, inertial_class, is_cuspidal
from .stratum import FrobWeight, tube_cohomology

JCIRC = "J°"
Position = Tuple[int, int]


class ModeError(ValueError):
    pass


@dataclass(frozen=True)
class InducedRepTerm:
    """(c-Ind_{J_theta}^J rho_lambda)^multiplicity; theta=None stands for J°."""

    theta: Optional[int]
    partition: Optional[Partition]
    multiplicity: int

    def __post_init__(self):
        if self.multiplicity <= 0:
            raise ValueError("stored multiplicities must be positive")
        if (self.theta is None) != (self.partition is None):
            raise ValueError("J° carries the trivial character and nothing else")

    @property
    def parahoric(self) -> str:
        return JCIRC if self.theta is None else "J_%d" % self.theta

    @property
    def rep(self) -> str:
        return "1" if self.partition is None else "rho(%s)" % self.partition

    def __str__(self) -> str:
        base = "c-Ind_%s %s" % (self.parahoric, self.rep)
        return base if self.multiplicity == 1 else "(%s)^%d" % (base, self.multiplicity)

    def to_json(self) -> dict:
        return {
            "parahoric": JCIRC if self.theta is None else self.theta,
            "rep": "1" if self.partition is None else list(self.partition.parts),
            "multiplicity": self.multiplicity,
        }

    @classmethod
    def from_json(cls, d: dict) -> "InducedRepTerm":
        if d["parahoric"] == JCIRC:
            return cls(None, None, int(d["multiplicity"]))
        return cls(int(d["parahoric"]), Partition(tuple(d["rep"])), int(d["multiplicity"]))


@dataclass(frozen=True)
class VirtualInducedRep:
    terms: Tuple[InducedRepTerm, ...]
    weight: FrobWeight

    def __str__(self) -> str:
        return " + ".join(map(str, self.terms)) + "  [Frob %s]" % self.weight

    def to_json(self) -> dict:
        return {"terms": [t.to_json() for t in self.terms], "weight": self.weight.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "VirtualInducedRep":
        return cls(tuple(InducedRepTerm.from_json(t) for t in d["terms"]), FrobWeight.from_json(d["weight"]))


@dataclass(frozen=True)
class SpectralPage:
    n: int
    p: int
    entries: Dict[Position, VirtualInducedRep] = field(default_factory=dict)

    def support(self) -> List[Position]:
        return sorted(self.entries, key=lambda ab: (ab[1], -ab[0]))

    def __getitem__(self, ab: Position) -> VirtualInducedRep:
        return self.entries[ab]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "entries": [
                {"a": a, "b": b, **self.entries[(a, b)].to_json()} for a, b in self.support()
            ],
        }

    @classmethod
    def from_json(cls, d: dict) -> "SpectralPage":
        entries = {(int(e["a"]), int(e["b"])): VirtualInducedRep.from_json(e) for e in d["entries"]}
        return cls(int(d["n"]), int(d["p"]), entries)


# ----------------------------------------------------------------- multiplicities


def _check_theta(n: int, theta: int) -> int:
    m = max_theta(n)
    if not (0 <= theta <= m):
        raise RangeError("theta=%d outside [0, %d] for n=%d" % (theta, m, n))
    return m


def local_space_dim(n: int, theta: int) -> int:
    """dim V_theta^1 = n - 2 theta - 1."""
    _check_theta(n, theta)
    return n - 2 * theta - 1


def local_rank(n: int, theta: int) -> int:
    """Dimension of the subspaces U in V_theta^1 that index maximal neighbours."""
    return n - theta - max_theta(n) - 1


def nu_theta(n: int, theta: int, p: int) -> int:
    """Number of maximal-type neighbours of a type-(2 theta + 1) lattice."""
    return nu_eval(local_rank(n, theta), local_space_dim(n, theta), p)


def _projective_points(U: HermitianSubspace, index: Dict[Tuple[int, ...], int]) -> int:
    """Bitmask of the lines of U, each line keyed by its normalized vector.

    Two subspaces meet in {0} exactly when their masks are disjoint, and the
    mask of an intersection is the AND of the masks.
    """
    T = U.ambient.field.tables
    q, d = U.ambient.field.q, U.ambient.d
    mask = 0
    for coeffs in itertools.product(range(q), repeat=U.dim):
        v = [0] * d
        for c, row in zip(coeffs, U.basis):
            if c:
                v = [T.add[x][T.mul[c][y]] for x, y in zip(v, row)]
        lead = next((x for x in v if x), 0)
        if not lead:
            continue
        s = T.inv[lead]
        key = tuple(T.mul[s][x] for x in v)
        mask |= 1 << index.setdefault(key, len(index))
    return mask


@lru_cache(maxsize=None)
def _local_orthogonal_masks(n: int, theta: int, p: int, subspace_cap: int) -> Tuple[int, ...]:
    """Masks of U^perp for U in N(n - theta - m - 1, V_theta^1), in canonical order."""
    S = HermitianSpace(FieldDescriptor(p), local_space_dim(n, theta))
    budget = Budget(subspaces=subspace_cap)
    index: Dict[Tuple[int, ...], int] = {}
    return tuple(_projective_points(orthogonal(U), index) for U in iter_N(local_rank(n, theta), S, budget))


class _SubsetCounter:
    """Counts, for every s, the s-subsets whose orthogonals meet in {0}.

    Subsets are grown in index order.  As soon as the running intersection
    is zero, every completion by later elements counts, which is added as a
    binomial coefficient instead of being enumerated.
    """

    def __init__(self, masks: Sequence[int], cap: int):
        self.masks = masks
        self.cap = cap
        self.nodes = 0

    def _visit(self) -> None:
        self.nodes += 1
        if self.nodes > self.cap:
            raise BudgetExceeded("subset search exceeded %d nodes" % self.cap)

    def _rec(self, start: int, chosen: int, W: int, table: Dict[int, int]) -> None:
        self._visit()
        N = len(self.masks)
        if W == 0:
            rest = N - start
            for extra in range(rest + 1):
                table[chosen + extra] = table.get(chosen + extra, 0) + comb(rest, extra)
            return
        for i in range(start, N):
            self._rec(i + 1, chosen + 1, W & self.masks[i], table)

    def count_from(self, first: int) -> Dict[int, int]:
        """Table s -> count over subsets whose smallest index is ``first``.

        This is the unit of work splitting: the full table is the sum over
        ``first`` of these, in any order.
        """
        table: Dict[int, int] = {}
        self._rec(first + 1, 1, self.masks[first], table)
        return table

    def table(self) -> Dict[int, int]:
        total: Dict[int, int] = {}
        for first in range(len(self.masks)):
            for s, k in self.count_from(first).items():
                total[s] = total.get(s, 0) + k
        return dict(sorted(total.items()))


@lru_cache(maxsize=None)
def _k_bruteforce_table(n: int, theta: int, p: int, budget: Budget) -> Dict[int, int]:
    masks = _local_orthogonal_masks(n, theta, p, budget.subspaces)
    return _SubsetCounter(masks, budget.subsets).table()


def k_mult_bruteforce(n: int, theta: int, s: int, p: int, budget: Optional[Budget] = None) -> int:
    _check_theta(n, theta)
    if s < 1:
        raise RangeError("s=%d must be >= 1" % s)
    budget = budget or default_budget()
    return _k_bruteforce_table(n, theta, p, budget).get(s, 0)


def k_mult_closed(n: int, theta: int, s: int, p: int) -> int:
    if n not in (3, 4):
        raise ModeError("closed multiplicities are only known for n in {3, 4}, got n=%d" % n)
    _check_theta(n, theta)
    if s < 1:
        raise RangeError("s=%d must be >= 1" % s)
    return _k_closed_small(n, theta, s, p)


def _k_closed_small(n: int, theta: int, s: int, p: int) -> int:
    if theta == max_theta(n):
        return 1 if s == 1 else 0
    # n in {3, 4} and theta = 0: any two distinct neighbours already suffice
    if s == 1:
        return 0
    return comb(p + 1 if n == 3 else p**3 + 1, s)


def _k_table(n: int, theta: int, p: int, mode: str, budget: Optional[Budget]) -> Dict[int, int]:
    if mode == "bruteforce":
        table = _k_bruteforce_table(n, theta, p, budget or default_budget())
        return {s: k for s, k in table.items() if k}
    out = {}
    for s in range(1, nu_theta(n, theta, p) + 1):
        k = _k_closed_small(n, theta, s, p)
        if k:
            out[s] = k
    return out


# ----------------------------------------------------------------- locus and pages


def nonzero_locus(n: int, p: int) -> List[Position]:
    """Positions (a, b) allowed to carry a non-zero E_1 term, sorted by (b, -a)."""
    m = max_theta(n)
    out = []
    for b in range(2 * (n - 1 - m), 2 * (n - 1) + 1):
        h = b // 2
        lo = 1 - nu_eval(h - m, 2 * h - (n - 1), p)
        out.extend((a, b) for a in range(0, lo - 1, -1))
    return out


def in_nonzero_locus(n: int, p: int, a: int, b: int) -> bool:
    m = max_theta(n)
    if not (2 * (n - 1 - m) <= b <= 2 * (n - 1)) or a > 0:
        return False
    h = b // 2
    return a >= 1 - nu_eval(h - m, 2 * h - (n - 1), p)


def e1_page(n: int, p: int, mode: str = "closed", budget: Optional[Budget] = None) -> SpectralPage:
    m = max_theta(n)
    FieldDescriptor(p)  # validates p
    if mode not in ("closed", "bruteforce"):
        raise ModeError("mode must be 'closed' or 'bruteforce', got %r" % mode)
    if mode == "closed" and n > 4:
        raise ModeError("closed mode requires n <= 4, got n=%d" % n)
    cells: Dict[Position, List[InducedRepTerm]] = {}
    for theta in range(m + 1):
        ks = _k_table(n, theta, p, mode, budget)
        tube = tube_cohomology(n, theta)
        for b in tube.degrees():
            for s, k in sorted(ks.items()):
                for lam in tube.partitions(b):
                    cells.setdefault((1 - s, b), []).append(InducedRepTerm(theta, lam, k))
    entries = {ab: VirtualInducedRep(tuple(ts), FrobWeight.of_degree(ab[1])) for ab, ts in cells.items()}
    return SpectralPage(n, p, entries)


def e2_known_terms(n: int) -> Dict[Position, VirtualInducedRep]:
    m = max_theta(n)
    top = 2 * (n - 1)
    out = {(0, top): VirtualInducedRep((InducedRepTerm(None, None, 1),), FrobWeight.of_degree(top))}
    if n <= 2:
        # here J° = J_m and the bottom term coincides with the top one
        return out
    low = 2 * (n - 1 - m)
    out[(0, low)] = VirtualInducedRep(
        (InducedRepTerm(m, Partition((2 * m + 1,)), 1),), FrobWeight.of_degree(low)
    )
    if m >= 1:
        out[(0, low + 1)] = VirtualInducedRep(
            (InducedRepTerm(m, Partition((2 * m, 1)), 1),), FrobWeight.of_degree(low + 1)
        )
    return dict(sorted(out.items(), key=lambda kv: (kv[0][1], -kv[0][0])))


@dataclass(frozen=True)
class ReportEntry:
    a: int
    b: int
    rep: VirtualInducedRep

    def to_json(self) -> dict:
        return {"a": self.a, "b": self.b, **self.rep.to_json()}

    @classmethod
    def from_json(cls, d: dict) -> "ReportEntry":
        return cls(int(d["a"]), int(d["b"]), VirtualInducedRep.from_json(d))


def cohomology_report(n: int, p: int, mode: str = "closed", budget: Optional[Budget] = None):
    """Per degree b: exactly known E_2 summands and E_1 bounds for the rest.

    H^b_c is filtered with graded pieces E_2^{b-b', b'} for b <= b' <= 2(n-1).
    """
    page = e1_page(n, p, mode, budget)
    known = e2_known_terms(n)
    top = 2 * (n - 1)
    out: Dict[int, Dict[str, List[ReportEntry]]] = {}
    for b in range(0, top + 1):
        row: Dict[str, List[ReportEntry]] = {"known": [], "bounded_by": []}
        for b2 in range(b, top + 1):
            pos = (b - b2, b2)
            if not (0 <= pos[0] + pos[1] <= top):
                continue
            if pos in known:
                row["known"].append(ReportEntry(pos[0], pos[1], known[pos]))
            elif pos in page.entries:
                row["bounded_by"].append(ReportEntry(pos[0], pos[1], page.entries[pos]))
        if row["known"] or row["bounded_by"]:
            out[b] = row
    return out


def report_to_json(report) -> dict:
    return {
        str(b): {key: [e.to_json() for e in row[key]] for key in ("known", "bounded_by")}
        for b, row in sorted(report.items())
    }


def report_from_json(d: dict):
    return {
        int(b): {key: [ReportEntry.from_json(e) for e in row[key]] for key in ("known", "bounded_by")}
        for b, row in d.items()
    }


# ----------------------------------------------------------------- inertial classes


@dataclass(frozen=True)
class InertialFlag:
    a: int
    b: int
    theta: int
    partition: Partition
    f: int
    supercuspidal: bool

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "theta": self.theta,
            "rep": list(self.partition.parts),
            "f": self.f,
            "supercuspidal": self.supercuspidal,
        }


class InertialMismatch(AssertionError):
    pass


def iter_terms(page: SpectralPage) -> Iterator[Tuple[Position, InducedRepTerm]]:
    for ab in page.support():
        for t in page.entries[ab].terms:
            yield ab, t


def inertial_report(page: SpectralPage) -> List[InertialFlag]:
    m = max_theta(page.n)
    out = []
    for (a, b), t in iter_terms(page):
        if t.partition is None:
            continue
        f = inertial_class(t.partition)
        if f != b % 2:
            raise InertialMismatch("term %s at (%d,%d) has f=%d against parity %d" % (t, a, b, f, b % 2))
        flag = page.n <= 4 and t.theta == m and is_cuspidal(t.partition)
        out.append(InertialFlag(a, b, t.theta, t.partition, f, flag))
    return out
