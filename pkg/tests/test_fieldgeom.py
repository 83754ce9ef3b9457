import random

import pytest
from hypothesis import given, settings, strategies as st

from btstrata.budget import Budget, BudgetExceeded
from btstrata.counts import nu_eval
from btstrata.fieldgeom import (
    FieldDescriptor,
    Fq2Element,
    HermitianSpace,
    conj,
    count_N,
    enumerate_N,
    gaussian_binomial,
    intersect_subspaces,
    iter_N,
    orthogonal,
    pair,
    pivot_patterns,
    enumerate_N_pattern,
    smallest_nonresidue,
    unitary_order_bruteforce,
)

F3, F5 = FieldDescriptor(3), FieldDescriptor(5)


def test_field_descriptor():
    assert F3.nonresidue_c == 2
    assert F5.nonresidue_c == 2
    assert FieldDescriptor(7).nonresidue_c == 3
    assert smallest_nonresidue(17) == 3
    for bad in (2, 4, 9, 1, 0):
        with pytest.raises(ValueError):
            FieldDescriptor(bad)
    with pytest.raises(ValueError):
        FieldDescriptor(5, nonresidue_c=3)


def test_conj_examples():
    assert conj(Fq2Element(2, 0), F3) == Fq2Element(2, 0)
    assert conj(Fq2Element(0, 1), F3) == Fq2Element(0, 2)


@given(st.integers(0, 24))
def test_conj_involution_and_frobenius(code):
    T = F5.tables
    x = F5.element(code)
    assert conj(conj(x, F5), F5) == x
    # conj agrees with x -> x^5
    y = 1
    for _ in range(5):
        y = T.mul[y][code]
    assert T.conj[code] == y


def test_field_axioms_small():
    T = F3.tables
    for x in range(1, 9):
        assert T.mul[x][T.inv[x]] == 1
        assert T.add[x][T.neg[x]] == 0


def _vec(rng, S):
    return tuple(rng.randrange(S.field.q) for _ in range(S.d))


def test_pair_examples():
    S = HermitianSpace(F3, 3)
    assert pair(S.basis_vector(1), S.basis_vector(3), S) == 1
    assert pair(S.basis_vector(1), S.basis_vector(1), S) == 0
    with pytest.raises(ValueError):
        pair((1, 0), (1, 0, 0), S)


def test_pair_hermitian_symmetry():
    S = HermitianSpace(F3, 3)
    T = F3.tables
    rng = random.Random(7)
    for _ in range(100):
        u, v = _vec(rng, S), _vec(rng, S)
        assert pair(u, v, S) == T.conj[pair(v, u, S)]


def test_pair_sesquilinear():
    S = HermitianSpace(F5, 3)
    T = F5.tables
    rng = random.Random(11)
    for _ in range(100):
        u, v = _vec(rng, S), _vec(rng, S)
        a = rng.randrange(25)
        au = tuple(T.mul[a][x] for x in u)
        av = tuple(T.mul[a][x] for x in v)
        assert pair(au, v, S) == T.mul[a][pair(u, v, S)]
        assert pair(u, av, S) == T.mul[T.conj[a]][pair(u, v, S)]


def test_orthogonal_examples():
    S = HermitianSpace(F3, 3)
    assert orthogonal(S.full()) == S.zero()
    assert orthogonal(S.zero()) == S.full()
    assert orthogonal(S.span([S.basis_vector(1)])) == S.span([S.basis_vector(1), S.basis_vector(2)])


def _random_subspace(rng, S):
    k = rng.randrange(S.d + 1)
    return S.span([_vec(rng, S) for _ in range(k)])


@pytest.mark.parametrize("p,d", [(3, 1), (3, 2), (3, 3), (3, 4), (5, 2), (5, 3), (5, 4)])
def test_biduality(p, d):
    S = HermitianSpace(FieldDescriptor(p), d)
    rng = random.Random(p * 100 + d)
    for _ in range(200):
        U = _random_subspace(rng, S)
        W = orthogonal(U)
        assert W.dim == d - U.dim
        assert orthogonal(W) == U
        for u in U.basis:
            for w in W.basis:
                assert pair(u, w, S) == 0


@settings(max_examples=100)
@given(st.data())
def test_intersection_is_contained(data):
    S = HermitianSpace(F3, 4)
    seed = data.draw(st.integers(0, 10**6))
    rng = random.Random(seed)
    U, V = _random_subspace(rng, S), _random_subspace(rng, S)
    W = intersect_subspaces([U, V])
    assert U.contains(W) and V.contains(W)
    assert W.dim >= U.dim + V.dim - S.d


def test_enumerate_examples():
    for d in range(5):
        S = HermitianSpace(F3, d)
        assert enumerate_N(d, S) == [S.full()]
    assert len(enumerate_N(1, HermitianSpace(F3, 2))) == 4
    assert len(enumerate_N(2, HermitianSpace(F3, 3))) == 28
    assert count_N(1, HermitianSpace(F3, 2)) == 4
    assert count_N(2, HermitianSpace(F3, 3)) == 28


@pytest.mark.parametrize("p,d,r", [(3, 2, 1), (3, 3, 2), (3, 4, 2), (5, 2, 1), (5, 3, 2)])
def test_enumerated_members_contain_orthogonal(p, d, r):
    S = HermitianSpace(FieldDescriptor(p), d)
    Ns = enumerate_N(r, S)
    assert len(Ns) == len(set(Ns)) == nu_eval(r, d, p)
    for U in Ns:
        W = orthogonal(U)
        assert W.dim == d - r
        assert U.contains(W)


def test_enumeration_order_is_partitionable():
    S = HermitianSpace(F3, 4)
    whole = list(iter_N(2, S))
    pieces = [U for pat in pivot_patterns(2, 4) for U in enumerate_N_pattern(2, S, pat)]
    assert whole == pieces


def test_range_and_budget():
    S = HermitianSpace(F3, 4)
    with pytest.raises(ValueError):
        enumerate_N(1, S)
    assert gaussian_binomial(4, 2, 9) > 100
    with pytest.raises(BudgetExceeded):
        count_N(2, S, Budget(subspaces=100))


def test_budget_env(monkeypatch):
    monkeypatch.setenv("BT_STRATA_BUDGET", "5")
    with pytest.raises(BudgetExceeded):
        count_N(1, HermitianSpace(F3, 2))
    monkeypatch.setenv("BT_STRATA_BUDGET", "junk")
    with pytest.raises(ValueError):
        Budget.from_env()


def test_unitary_bruteforce_examples():
    assert unitary_order_bruteforce(0, F3) == 1
    assert unitary_order_bruteforce(1, F3) == 4
    assert unitary_order_bruteforce(2, F3) == 96
    with pytest.raises(ValueError):
        unitary_order_bruteforce(3, F3)
