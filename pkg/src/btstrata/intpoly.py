"""Exact integer polynomials in one variable.

Every count and degree in the package is first built as an ``IntPoly`` in
the formal prime variable and only evaluated afterwards.
"""

from __future__ import annotations

from typing import Dict, Iterable, Mapping, Union


class NonExactDivision(ArithmeticError):
    """Raised when a polynomial quotient leaves a remainder."""


Coercible = Union["IntPoly", int]


class IntPoly:
    """Sparse polynomial with arbitrary-precision integer coefficients.

    Coefficients are stored as ``{exponent: coefficient}`` without zero
    entries.  Instances are immutable and hashable.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Union[Mapping[int, int], Iterable[int], int, None] = None):
        if coeffs is None:
            data: Dict[int, int] = {}
        elif isinstance(coeffs, int):
            data = {0: coeffs} if coeffs else {}
        elif isinstance(coeffs, Mapping):
            data = {}
            for e, c in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent %d" % e)
                if c:
                    data[int(e)] = data.get(int(e), 0) + int(c)
            data = {e: c for e, c in data.items() if c}
        else:
            data = {e: int(c) for e, c in enumerate(coeffs) if c}
        self._c = data
        self._hash = None

    # construction helpers

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPoly":
        return cls({exponent: coeff})

    @classmethod
    def var(cls) -> "IntPoly":
        return cls({1: 1})

    @classmethod
    def one(cls) -> "IntPoly":
        return cls({0: 1})

    @classmethod
    def zero(cls) -> "IntPoly":
        return cls()

    @staticmethod
    def _coerce(other: Coercible) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly(other)
        return NotImplemented

    # inspection

    @property
    def coeffs(self) -> Dict[int, int]:
        return dict(self._c)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return max(self._c) if self._c else -1

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def leading(self) -> int:
        return self._c[self.degree] if self._c else 0

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # arithmetic

    def __neg__(self) -> "IntPoly":
        return IntPoly({e: -c for e, c in self._c.items()})

    def __add__(self, other: Coercible) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._c)
        for e, c in other._c.items():
            out[e] = out.get(e, 0) + c
        return IntPoly(out)

    __radd__ = __add__

    def __sub__(self, other: Coercible) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Coercible) -> "IntPoly":
        return (-self) + other

    def __mul__(self, other: Coercible) -> "IntPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[int, int] = {}
        for e1, c1 in self._c.items():
            for e2, c2 in other._c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if k < 0:
            raise ValueError("negative power")
        result = IntPoly.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: Coercible):
        """Long division; requires exact leading-coefficient divisibility."""
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = dict(self._c)
        quot: Dict[int, int] = {}
        dd, lc = other.degree, other.leading()
        while rem:
            top = max(rem)
            if top < dd:
                break
            c = rem[top]
            if c % lc:
                raise NonExactDivision("leading coefficient %d not divisible by %d" % (c, lc))
            q = c // lc
            shift = top - dd
            quot[shift] = q
            for e, oc in other._c.items():
                k = e + shift
                v = rem.get(k, 0) - q * oc
                if v:
                    rem[k] = v
                else:
                    rem.pop(k, None)
        return IntPoly(quot), IntPoly(rem)

    def exact_div(self, other: Coercible) -> "IntPoly":
        q, r = self.divmod(other)
        if r:
            raise NonExactDivision("(%s) / (%s) leaves remainder %s" % (self, other, r))
        return q

    def __floordiv__(self, other: Coercible) -> "IntPoly":
        return self.exact_div(other)

    def __call__(self, x: int) -> int:
        return self.eval(x)

    def eval(self, x: int) -> int:
        # Horner over the dense range; exponents are small here
        total = 0
        for e in range(self.degree, -1, -1):
            total = total * x + self._c.get(e, 0)
        return total

    # rendering

    def to_str(self, var: str = "p") -> str:
        if not self._c:
            return "0"
        parts = []
        for i, e in enumerate(sorted(self._c, reverse=True)):
            c = self._c[e]
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = var if e == 1 else "%s^%d" % (var, e)
                body = mono if a == 1 else "%d*%s" % (a, mono)
            if i == 0:
                parts.append(body if sign == "+" else "-" + body)
            else:
                parts.append("%s %s" % (sign, body))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.to_str()

    def __repr__(self) -> str:
        return "IntPoly(%r)" % (self._c,)

    def to_json(self) -> Dict[str, int]:
        """Exponent keys as strings, highest first; JSON-safe."""
        return {str(e): self._c[e] for e in sorted(self._c, reverse=True)}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "IntPoly":
        return cls({int(e): int(c) for e, c in data.items()})


P = IntPoly.var()


def poly_exact_div(a: IntPoly, b: IntPoly) -> IntPoly:
    """Return q with a == q*b, or raise NonExactDivision."""
    return a.exact_div(b)


def signed_power(k: int) -> IntPoly:
    """The factor x^k - (-1)^k."""
    return IntPoly({k: 1}) - (-1) ** k
