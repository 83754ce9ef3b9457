"""Vertex lattices in the standard apartment.

A lattice is recorded by its level i and the exponents r_{-m..-1}, r_{1..m}
of the isotropic basis vectors; the anisotropic exponents are forced by i.
Inclusion is reverse coordinate-wise order, so intersection takes the
coordinate maximum and sum the minimum.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .counts import max_theta


class LatticeError(ValueError):
    pass


@dataclass(frozen=True)
class OrbitType:
    t: int

    def __post_init__(self):
        if self.t < 1 or self.t % 2 == 0:
            raise LatticeError("orbit type must be a positive odd integer, got %d" % self.t)

    @property
    def theta(self) -> int:
        return (self.t - 1) // 2

    def __int__(self) -> int:
        return self.t


@dataclass(frozen=True)
class ApartmentLattice:
    n: int
    level_i: int
    neg: Tuple[int, ...]  # r_{-m}, ..., r_{-1}
    pos: Tuple[int, ...]  # r_1, ..., r_m

    @property
    def m(self) -> int:
        return max_theta(self.n)

    @property
    def coords(self) -> Tuple[int, ...]:
        return self.neg + self.pos

    def r(self, j: int) -> int:
        """r_j for j in {-m..-1, 1..m}."""
        m = self.m
        if j < 0 and -j <= m:
            return self.neg[m + j]
        if 0 < j <= m:
            return self.pos[j - 1]
        raise LatticeError("index j=%d outside +-[1, %d]" % (j, m))

    def pair_sums(self) -> Tuple[int, ...]:
        return tuple(self.r(-j) + self.r(j) for j in range(1, self.m + 1))

    @property
    def s0(self) -> int:
        return (self.level_i + 1) // 2

    @property
    def s1(self) -> Optional[int]:
        return self.level_i // 2 if self.n % 2 == 0 else None

    def __le__(self, other: "ApartmentLattice") -> bool:
        """Lattice inclusion self <= other (same level)."""
        _same_level(self, other)
        return all(a >= b for a, b in zip(self.coords, other.coords))

    def __lt__(self, other: "ApartmentLattice") -> bool:
        return self <= other and self != other

    def __str__(self) -> str:
        return "Lambda(%s | %s)@i=%d" % (
            ",".join(map(str, self.neg)),
            ",".join(map(str, self.pos)),
            self.level_i,
        )

    def to_json(self) -> dict:
        return {"n": self.n, "i": self.level_i, "neg": list(self.neg), "pos": list(self.pos)}


def make_lattice(n: int, i: int, coords: Sequence[int]) -> ApartmentLattice:
    """Validate coordinates (r_{-m}, ..., r_{-1}, r_1, ..., r_m) at level i."""
    if n < 1:
        raise LatticeError("n=%d must be >= 1" % n)
    if (n * i) % 2:
        raise LatticeError("n*i must be even, got n=%d, i=%d" % (n, i))
    m = max_theta(n)
    coords = tuple(int(c) for c in coords)
    if len(coords) != 2 * m:
        raise LatticeError("expected %d coordinates for n=%d, got %d" % (2 * m, n, len(coords)))
    L = ApartmentLattice(n, i, coords[:m], coords[m:])
    for j, s in enumerate(L.pair_sums(), start=1):
        if s not in (i, i + 1):
            raise LatticeError("r_{-%d} + r_%d = %d not in {%d, %d}" % (j, j, s, i, i + 1))
    return L


def _try_make(n: int, i: int, coords: Sequence[int]) -> Optional[ApartmentLattice]:
    try:
        return make_lattice(n, i, coords)
    except LatticeError:
        return None


def standard_lattice(n: int, theta: int) -> ApartmentLattice:
    """Lambda_theta: zeros, then theta zeros and m - theta ones on the positive side."""
    m = max_theta(n)
    if not (0 <= theta <= m):
        raise LatticeError("theta=%d outside [0, %d]" % (theta, m))
    return make_lattice(n, 0, (0,) * m + (0,) * theta + (1,) * (m - theta))


def orbit_type(L: ApartmentLattice) -> OrbitType:
    return OrbitType(1 + 2 * sum(1 for s in L.pair_sums() if s == L.level_i))


def dual(L: ApartmentLattice) -> Optional[ApartmentLattice]:
    """The dual lattice if it lies in the family, else None.

    Coordinates: r'_{-j} = -r_j and r'_j = -r_{-j}.  Level -i-1 for even n,
    level -i for odd n of maximal type.
    """
    m = L.m
    neg = tuple(-L.r(j) for j in range(m, 0, -1))
    pos = tuple(-L.r(-j) for j in range(1, m + 1))
    if L.n % 2 == 0:
        return make_lattice(L.n, -L.level_i - 1, neg + pos)
    if orbit_type(L).t != 2 * m + 1:
        return None
    return make_lattice(L.n, -L.level_i, neg + pos)


def _same_level(L: ApartmentLattice, M: ApartmentLattice) -> None:
    if L.n != M.n or L.level_i != M.level_i:
        raise LatticeError(
            "lattices must share n and level, got (n=%d, i=%d) and (n=%d, i=%d)"
            % (L.n, L.level_i, M.n, M.level_i)
        )


def intersect(L: ApartmentLattice, M: ApartmentLattice) -> Optional[ApartmentLattice]:
    _same_level(L, M)
    return _try_make(L.n, L.level_i, [max(a, b) for a, b in zip(L.coords, M.coords)])


def lattice_sum(L: ApartmentLattice, M: ApartmentLattice) -> Optional[ApartmentLattice]:
    _same_level(L, M)
    return _try_make(L.n, L.level_i, [min(a, b) for a, b in zip(L.coords, M.coords)])


def scaled_dual(L: ApartmentLattice) -> Tuple[int, ...]:
    """Coordinates of p^{i+1} L^dual (a lattice outside the family in general)."""
    m = L.m
    i = L.level_i
    neg = tuple(i + 1 - L.r(j) for j in range(m, 0, -1))
    pos = tuple(i + 1 - L.r(-j) for j in range(1, m + 1))
    return neg + pos


def is_simplex(lattices: Iterable[ApartmentLattice]) -> bool:
    Ls = list(dict.fromkeys(lattices))
    if not Ls:
        return False
    levels = {(L.n, L.level_i) for L in Ls}
    if len(levels) > 1:
        raise LatticeError("simplex members must share n and level")
    # a strict chain forces distinct orbit types, hence at most m + 1 vertices
    chain = sorted(Ls, key=lambda L: orbit_type(L).t)
    for a, b in zip(chain, chain[1:]):
        if not a < b:
            return False
    bottom = scaled_dual(chain[-1])
    # p^{i+1} L_s^dual is strictly inside L_0: the anisotropic part always
    # contributes, so only the coordinate comparison matters
    return all(x >= y for x, y in zip(bottom, chain[0].coords))


def parahoric_class(n: int, t: int) -> int:
    m = max_theta(n)
    if t < 1 or t % 2 == 0 or t > 2 * m + 1:
        raise LatticeError("orbit type t=%d invalid for n=%d" % (t, n))
    theta = (t - 1) // 2
    if n % 2:
        return theta
    return min(theta, m - theta)


def parahoric_class_count(n: int) -> int:
    m = max_theta(n)
    return m + 1 if n % 2 else m // 2 + 1


def normalizer_note(n: int, t: int) -> str:
    """Documented normalizer statement; group elements are not modelled."""
    parahoric_class(n, t)
    return "N_J(J_Lambda) = Z(J) J_Lambda"


def maximal_neighbors_in_apartment(L: ApartmentLattice):
    """Maximal-type lattices of the apartment containing L, at L's level."""
    m, i = L.m, L.level_i
    out = []
    # Lambda' >= L needs r'_j <= r_j; maximal type needs every pair sum = i
    free = list(range(1, m + 1))
    choices = []
    for j in free:
        opts = []
        for a in (L.r(-j) - 1, L.r(-j)):
            b = i - a
            if a <= L.r(-j) and b <= L.r(j):
                opts.append((a, b))
        choices.append(opts)
    for combo in itertools.product(*choices):
        neg = [0] * m
        pos = [0] * m
        for j, (a, b) in zip(free, combo):
            neg[m - j] = a
            pos[j - 1] = b
        M = _try_make(L.n, i, neg + pos)
        if M is not None and L <= M:
            out.append(M)
    return out
