"""Finite hermitian geometry over F_{p^2}.

F_{p^2} is modelled as F_p[x]/(x^2 - c) with c the smallest quadratic
non-residue mod p.  Internally an element a0 + a1*x is the integer code
``a0 + a1*p``; vectors are tuples of codes.  The hermitian form on
F_{p^2}^d has the antidiagonal Gram matrix, is linear in the first argument
and conjugate-linear in the second.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple

from .budget import Budget, BudgetExceeded, default_budget

Vector = Tuple[int, ...]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def smallest_nonresidue(p: int) -> int:
    squares = {(a * a) % p for a in range(1, p)}
    for c in range(2, p):
        if c not in squares:
            return c
    raise ValueError("no quadratic non-residue mod %d" % p)


class _Tables:
    """Addition/multiplication tables over F_{p^2} indexed by element codes."""

    def __init__(self, p: int, c: int):
        q = p * p
        self.p, self.q = p, q
        self.add = [[0] * q for _ in range(q)]
        self.mul = [[0] * q for _ in range(q)]
        self.neg = [0] * q
        self.conj = [0] * q
        self.inv = [0] * q
        for x in range(q):
            a0, a1 = x % p, x // p
            self.neg[x] = (-a0) % p + ((-a1) % p) * p
            self.conj[x] = a0 + ((-a1) % p) * p
            for y in range(q):
                b0, b1 = y % p, y // p
                self.add[x][y] = (a0 + b0) % p + ((a1 + b1) % p) * p
                self.mul[x][y] = (a0 * b0 + c * a1 * b1) % p + ((a0 * b1 + a1 * b0) % p) * p
        for x in range(1, q):
            for y in range(1, q):
                if self.mul[x][y] == 1:
                    self.inv[x] = y
                    break


@lru_cache(maxsize=None)
def _tables(p: int, c: int) -> _Tables:
    return _Tables(p, c)


@dataclass(frozen=True)
class FieldDescriptor:
    p: int
    nonresidue_c: int = field(default=0)

    def __post_init__(self):
        if self.p == 2 or not _is_prime(self.p):
            raise ValueError("p=%d must be an odd prime" % self.p)
        c = smallest_nonresidue(self.p)
        if self.nonresidue_c == 0:
            object.__setattr__(self, "nonresidue_c", c)
        elif self.nonresidue_c != c:
            raise ValueError("c must be the smallest non-residue mod %d, i.e. %d" % (self.p, c))

    @property
    def q(self) -> int:
        return self.p * self.p

    @property
    def tables(self) -> _Tables:
        return _tables(self.p, self.nonresidue_c)

    def element(self, code: int) -> "Fq2Element":
        return Fq2Element(code % self.p, code // self.p)


@dataclass(frozen=True)
class Fq2Element:
    a0: int
    a1: int = 0

    def code(self, F: FieldDescriptor) -> int:
        if not (0 <= self.a0 < F.p and 0 <= self.a1 < F.p):
            raise ValueError("coefficients must lie in [0, %d)" % F.p)
        return self.a0 + self.a1 * F.p

    def __str__(self) -> str:
        return "%d+%dx" % (self.a0, self.a1)


def conj(x: Fq2Element, F: FieldDescriptor) -> Fq2Element:
    """Frobenius x -> x^p."""
    return F.element(F.tables.conj[x.code(F)])


@dataclass(frozen=True)
class HermitianSpace:
    field: FieldDescriptor
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise ValueError("dimension must be >= 0")

    def basis_vector(self, i: int) -> Vector:
        """e_i, 1-based."""
        return tuple(1 if k == i - 1 else 0 for k in range(self.d))

    def full(self) -> "HermitianSubspace":
        return HermitianSubspace(self, tuple(self.basis_vector(i) for i in range(1, self.d + 1)))

    def zero(self) -> "HermitianSubspace":
        return HermitianSubspace(self, ())

    def span(self, vectors: Sequence[Sequence[int]]) -> "HermitianSubspace":
        for v in vectors:
            if len(v) != self.d:
                raise ValueError("vector length %d != d=%d" % (len(v), self.d))
        return HermitianSubspace(self, tuple(rref(self.field.tables, [tuple(v) for v in vectors])))


def pair_codes(T: _Tables, u: Sequence[int], v: Sequence[int]) -> int:
    d = len(u)
    add, mul, cj = T.add, T.mul, T.conj
    acc = 0
    for i in range(d):
        a = u[i]
        if a:
            b = v[d - 1 - i]
            if b:
                acc = add[acc][mul[a][cj[b]]]
    return acc


def pair(u: Sequence[int], v: Sequence[int], S: HermitianSpace) -> int:
    """(u, v) for vectors given as element codes; returns a code."""
    if len(u) != S.d or len(v) != S.d:
        raise ValueError("dimension mismatch: %d, %d vs d=%d" % (len(u), len(v), S.d))
    return pair_codes(S.field.tables, u, v)


def rref(T: _Tables, rows: List[Vector]) -> List[Vector]:
    """Reduced row-echelon form with unit pivots; zero rows dropped."""
    mat = [list(r) for r in rows]
    if not mat:
        return []
    ncol = len(mat[0])
    add, mul, neg, inv = T.add, T.mul, T.neg, T.inv
    piv_row = 0
    for col in range(ncol):
        sel = None
        for i in range(piv_row, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[piv_row], mat[sel] = mat[sel], mat[piv_row]
        s = inv[mat[piv_row][col]]
        mat[piv_row] = [mul[s][a] for a in mat[piv_row]]
        prow = mat[piv_row]
        for i in range(len(mat)):
            if i != piv_row and mat[i][col]:
                f = neg[mat[i][col]]
                row = mat[i]
                mat[i] = [add[row[k]][mul[f][prow[k]]] for k in range(ncol)]
        piv_row += 1
        if piv_row == len(mat):
            break
    return [tuple(r) for r in mat[:piv_row]]


def rank(T: _Tables, rows: List[Sequence[int]]) -> int:
    mat = [list(r) for r in rows]
    if not mat:
        return 0
    ncol = len(mat[0])
    add, mul, neg, inv = T.add, T.mul, T.neg, T.inv
    rk = 0
    for col in range(ncol):
        sel = None
        for i in range(rk, len(mat)):
            if mat[i][col]:
                sel = i
                break
        if sel is None:
            continue
        mat[rk], mat[sel] = mat[sel], mat[rk]
        prow = mat[rk]
        s = inv[prow[col]]
        for i in range(rk + 1, len(mat)):
            if mat[i][col]:
                f = neg[mul[mat[i][col]][s]]
                row = mat[i]
                mat[i] = [add[row[k]][mul[f][prow[k]]] for k in range(ncol)]
        rk += 1
    return rk


def nullspace(T: _Tables, rows: List[Vector], ncol: int) -> List[Vector]:
    """Basis of {v : sum_k row[k] v[k] = 0 for every row}."""
    R = rref(T, rows)
    pivots = []
    for r in R:
        pivots.append(next(k for k, a in enumerate(r) if a))
    free = [k for k in range(ncol) if k not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncol
        v[fcol] = 1
        for r, pc in zip(R, pivots):
            v[pc] = T.neg[r[fcol]]
        basis.append(tuple(v))
    return basis


@dataclass(frozen=True)
class HermitianSubspace:
    ambient: HermitianSpace
    basis: Tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(next(k for k, a in enumerate(r) if a) for r in self.basis)

    def contains(self, other: "HermitianSubspace") -> bool:
        T = self.ambient.field.tables
        return rank(T, list(self.basis) + list(other.basis)) == self.dim

    def contains_vector(self, v: Sequence[int]) -> bool:
        T = self.ambient.field.tables
        return rank(T, list(self.basis) + [tuple(v)]) == self.dim

    def gram(self) -> List[List[int]]:
        T = self.ambient.field.tables
        return [[pair_codes(T, u, v) for v in self.basis] for u in self.basis]


def orthogonal(U: HermitianSubspace) -> HermitianSubspace:
    S = U.ambient
    T = S.field.tables
    d = S.d
    # (v, u) = sum_k v_k conj(u_{d-1-k}) is linear in v
    rows = [tuple(T.conj[u[d - 1 - k]] for k in range(d)) for u in U.basis]
    if not rows:
        return S.full()
    return S.span(nullspace(T, rows, d))


def intersect_subspaces(spaces: Sequence[HermitianSubspace]) -> HermitianSubspace:
    """Intersection via orthogonals: cap U_i = (sum U_i^perp)^perp."""
    S = spaces[0].ambient
    rows: List[Vector] = []
    for U in spaces:
        rows.extend(orthogonal(U).basis)
    return orthogonal(S.span(rows))


# enumeration of N(r, V)


def gaussian_binomial(d: int, r: int, q: int) -> int:
    if r < 0 or r > d:
        return 0
    num = den = 1
    for i in range(r):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _check_r(r: int, d: int) -> None:
    if not (-(-d // 2) <= r <= d):
        raise ValueError("need ceil(d/2) <= r <= d, got r=%d, d=%d" % (r, d))


def pivot_patterns(r: int, d: int) -> List[Tuple[int, ...]]:
    """Pivot-column patterns in the canonical order; the unit of work splitting."""
    return list(itertools.combinations(range(d), r))


def _free_slots(pattern: Tuple[int, ...], d: int) -> List[Tuple[int, int]]:
    piv = set(pattern)
    return [(i, j) for i, c in enumerate(pattern) for j in range(c + 1, d) if j not in piv]


def iter_rref(S: HermitianSpace, pattern: Tuple[int, ...]) -> Iterator[Tuple[Vector, ...]]:
    """All RREF bases with the given pivot columns, free entries in product order."""
    d, r = S.d, len(pattern)
    slots = _free_slots(pattern, d)
    template = [[0] * d for _ in range(r)]
    for i, c in enumerate(pattern):
        template[i][c] = 1
    for values in itertools.product(range(S.field.q), repeat=len(slots)):
        for (i, j), a in zip(slots, values):
            template[i][j] = a
        yield tuple(tuple(row) for row in template)


def contains_orthogonal(T: _Tables, basis: Sequence[Vector], d: int) -> bool:
    """U^perp <= U  iff  the Gram matrix of U has rank 2r - d."""
    g = [[pair_codes(T, u, v) for v in basis] for u in basis]
    return rank(T, g) == 2 * len(basis) - d


def enumerate_N_pattern(r: int, S: HermitianSpace, pattern: Tuple[int, ...]) -> Iterator[HermitianSubspace]:
    T = S.field.tables
    d = S.d
    for basis in iter_rref(S, pattern):
        if contains_orthogonal(T, basis, d):
            yield HermitianSubspace(S, basis)


def _guard(r: int, S: HermitianSpace, budget: Optional[Budget]) -> None:
    _check_r(r, S.d)
    budget = budget or default_budget()
    total = gaussian_binomial(S.d, r, S.field.q)
    if total > budget.subspaces:
        raise BudgetExceeded(
            "Grassmannian Gr(%d, %d) over F_%d has %d points, cap is %d"
            % (r, S.d, S.field.q, total, budget.subspaces)
        )


def iter_N(r: int, S: HermitianSpace, budget: Optional[Budget] = None) -> Iterator[HermitianSubspace]:
    _guard(r, S, budget)
    for pattern in pivot_patterns(r, S.d):
        yield from enumerate_N_pattern(r, S, pattern)


def enumerate_N(r: int, S: HermitianSpace, budget: Optional[Budget] = None) -> List[HermitianSubspace]:
    return list(iter_N(r, S, budget))


def count_N(r: int, S: HermitianSpace, budget: Optional[Budget] = None) -> int:
    _guard(r, S, budget)
    T = S.field.tables
    d = S.d
    total = 0
    for pattern in pivot_patterns(r, d):
        for basis in iter_rref(S, pattern):
            if contains_orthogonal(T, basis, d):
                total += 1
    return total


def unitary_order_bruteforce(d: int, F: FieldDescriptor) -> int:
    """Count g in GL_d(F_{p^2}) with (gu, gv) = (u, v), by column search."""
    if d > 2:
        raise ValueError("brute force limited to d <= 2, got d=%d" % d)
    if d < 0:
        raise ValueError("d must be >= 0")
    if d == 0:
        return 1
    T = F.tables
    vectors = list(itertools.product(range(F.q), repeat=d))

    def gram(i: int, j: int) -> int:
        return 1 if i + j == d - 1 else 0

    count = 0

    def extend(cols: List[Vector]) -> None:
        nonlocal count
        k = len(cols)
        if k == d:
            count += 1
            return
        for v in vectors:
            if pair_codes(T, v, v) != gram(k, k):
                continue
            if all(
                pair_codes(T, v, c) == gram(k, i) and pair_codes(T, c, v) == gram(i, k)
                for i, c in enumerate(cols)
            ):
                cols.append(v)
                extend(cols)
                cols.pop()

    extend([])
    return count
