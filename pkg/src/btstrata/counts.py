"""Closed counting formulas as exact polynomials in p.

``nu_symbolic(r, d)`` is the number of r-dimensional subspaces of a
d-dimensional hermitian space over F_{p^2} that contain their orthogonal.
It is computed as a quotient of products and the division is checked to be
exact, so a transcription error surfaces as ``NonExactDivision``.
"""

from __future__ import annotations

from functools import lru_cache

from .intpoly import IntPoly, signed_power


class RangeError(ValueError):
    """A parameter lies outside the domain of a counting formula."""


def _check_r(r: int, d: int) -> None:
    if d < 0:
        raise RangeError("dimension d=%d must be >= 0" % d)
    if not (-(-d // 2) <= r <= d):
        raise RangeError("need ceil(d/2) <= r <= d, got r=%d, d=%d" % (r, d))


def _prod(factors) -> IntPoly:
    out = IntPoly.one()
    for f in factors:
        out = out * f
    return out


@lru_cache(maxsize=None)
def nu_symbolic(r: int, d: int) -> IntPoly:
    _check_r(r, d)
    shift = 2 * r - d
    num = _prod(signed_power(shift + j) for j in range(1, 2 * (d - r) + 1))
    den = _prod(IntPoly({2 * j: 1}) - 1 for j in range(1, d - r + 1))
    return num.exact_div(den)


def nu_eval(r: int, d: int, p: int) -> int:
    return nu_symbolic(r, d).eval(p)


@lru_cache(maxsize=None)
def unitary_order(d: int) -> IntPoly:
    """#U_d(F_p) = p^{d(d-1)/2} prod_{j=1}^d (p^j - (-1)^j)."""
    if d < 0:
        raise RangeError("dimension d=%d must be >= 0" % d)
    return IntPoly.monomial(d * (d - 1) // 2) * _prod(signed_power(j) for j in range(1, d + 1))


@lru_cache(maxsize=None)
def parabolic_order(r: int, d: int) -> IntPoly:
    """Order of the stabilizer in U_d(F_p) of a standard element of N(r, V)."""
    _check_r(r, d)
    return (
        IntPoly.monomial(d * (d - 1) // 2)
        * _prod(IntPoly({2 * j: 1}) - 1 for j in range(1, d - r + 1))
        * _prod(signed_power(j) for j in range(1, 2 * r - d + 1))
    )


def max_theta(n: int) -> int:
    """m = floor((n-1)/2)."""
    if n < 1:
        raise RangeError("n=%d must be >= 1" % n)
    return (n - 1) // 2


def strata_below(theta: int, theta2: int) -> IntPoly:
    """Strata of dimension theta2 inside a stratum of dimension theta."""
    if not (0 <= theta2 <= theta):
        raise RangeError("need 0 <= theta' <= theta, got theta=%d, theta'=%d" % (theta, theta2))
    return nu_symbolic(theta + theta2 + 1, 2 * theta + 1)


def strata_above(n: int, theta: int, theta2: int) -> IntPoly:
    """Strata of dimension theta2 containing a stratum of dimension theta."""
    m = max_theta(n)
    if not (0 <= theta <= theta2 <= m):
        raise RangeError(
            "need 0 <= theta <= theta' <= m=%d, got theta=%d, theta'=%d" % (m, theta, theta2)
        )
    return nu_symbolic(n - theta - theta2 - 1, n - 2 * theta - 1)


def maximal_neighbors_product(n: int, theta: int) -> IntPoly:
    """Factored form of strata_above(n, theta, m).

    prod_{j=0}^{m-theta-1}(p^{2j+1}+1) for odd n and
    prod_{j=1}^{m-theta}(p^{2j+1}+1) for even n.
    """
    m = max_theta(n)
    if not (0 <= theta <= m):
        raise RangeError("theta=%d outside [0, %d]" % (theta, m))
    js = range(0, m - theta) if n % 2 else range(1, m - theta + 1)
    return _prod(IntPoly({2 * j + 1: 1}) + 1 for j in js)
