import pytest

from btstrata.counts import (
    RangeError,
    maximal_neighbors_product,
    max_theta,
    nu_eval,
    nu_symbolic,
    parabolic_order,
    strata_above,
    strata_below,
    unitary_order,
)
from btstrata.intpoly import P, signed_power


def test_nu_examples():
    assert nu_symbolic(1, 2) == P + 1
    assert nu_symbolic(2, 3) == P**3 + 1
    for d in range(8):
        assert nu_symbolic(d, d) == 1
    assert nu_eval(1, 2, 3) == 4
    assert nu_eval(2, 3, 3) == 28
    assert nu_eval(3, 3, 5) == 1


@pytest.mark.parametrize("d", range(2, 10))
def test_nu_corank_one(d):
    expected = (signed_power(d - 1) * signed_power(d)).exact_div(P**2 - 1)
    assert nu_symbolic(d - 1, d) == expected


def test_nu_range():
    with pytest.raises(RangeError):
        nu_symbolic(1, 3)
    with pytest.raises(RangeError):
        nu_symbolic(4, 3)
    with pytest.raises(RangeError):
        nu_symbolic(0, -1)


def test_group_orders():
    assert unitary_order(1) == P + 1
    assert unitary_order(2).eval(3) == 96
    assert unitary_order(3) == P**3 * (P + 1) * (P**2 - 1) * (P**3 + 1)
    assert parabolic_order(1, 2) == P * (P**2 - 1)
    assert parabolic_order(2, 3).eval(3) * 28 == unitary_order(3).eval(3)
    for d in range(6):
        assert parabolic_order(d, d) == unitary_order(d)


@pytest.mark.parametrize("d", range(13))
def test_coset_identity(d):
    for r in range((d + 1) // 2, d + 1):
        assert nu_symbolic(r, d) * parabolic_order(r, d) == unitary_order(d)


def test_strata_examples():
    assert strata_above(3, 0, 1) == P + 1
    assert strata_above(5, 0, 2) == (P + 1) * (P**3 + 1)
    for theta in range(6):
        assert strata_below(theta, theta) == 1


@pytest.mark.parametrize("n", range(1, 11))
def test_product_form(n):
    m = max_theta(n)
    for theta in range(m + 1):
        assert strata_above(n, theta, m) == maximal_neighbors_product(n, theta)


def test_strata_ranges():
    with pytest.raises(RangeError):
        strata_below(1, 2)
    with pytest.raises(RangeError):
        strata_above(5, 2, 1)
    with pytest.raises(RangeError):
        strata_above(5, 0, 3)
    with pytest.raises(RangeError):
        max_theta(0)


def test_nu_values_positive():
    for d in range(9):
        for r in range((d + 1) // 2, d + 1):
            assert all(nu_eval(r, d, p) > 0 for p in (3, 5, 7))
