import pytest
from hypothesis import given, strategies as st

from btstrata.intpoly import P, IntPoly, NonExactDivision, poly_exact_div, signed_power

polys = st.dictionaries(st.integers(0, 6), st.integers(-20, 20), max_size=5).map(IntPoly)


@st.composite
def unit_leading(draw):
    k = draw(st.integers(0, 4))
    low = draw(st.dictionaries(st.integers(0, max(k - 1, 0)), st.integers(-9, 9), max_size=k))
    lead = draw(st.sampled_from([1, -1]))
    return IntPoly(low if k else {}) * (1 if k else 0) + IntPoly.monomial(k, lead)


def test_exact_div_examples():
    assert poly_exact_div(P**2 - 1, P + 1) == P - 1
    assert poly_exact_div(P + 1, P + 1) == IntPoly.one()
    with pytest.raises(NonExactDivision):
        poly_exact_div(P**3 + 1, P**2 - 1)


def test_zero_divisor_rejected():
    with pytest.raises(ZeroDivisionError):
        poly_exact_div(P, IntPoly.zero())


def test_rendering():
    assert (P**3 + 1).to_str() == "p^3 + 1"
    assert (-(P**2) + 3).to_str() == "-p^2 + 3"
    assert (2 * P).to_str() == "2*p"
    assert IntPoly.zero().to_str() == "0"
    assert (P**2 - P).to_str("q") == "q^2 - q"


def test_signed_power():
    assert signed_power(1) == P + 1
    assert signed_power(2) == P**2 - 1


@given(polys, polys)
def test_ring_laws(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) - b == a
    for x in (-2, 0, 3, 5):
        assert (a * b).eval(x) == a.eval(x) * b.eval(x)


@given(polys, unit_leading())
def test_divmod_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.degree < b.degree
    assert (a * b).exact_div(b) == a


@given(polys)
def test_json_round_trip(a):
    assert IntPoly.from_json(a.to_json()) == a
    assert hash(IntPoly.from_json(a.to_json())) == hash(a)
