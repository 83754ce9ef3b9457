import pytest
from hypothesis import given, settings, strategies as st

from btstrata.counts import max_theta, nu_eval
from btstrata.lattice import (
    LatticeError,
    OrbitType,
    dual,
    intersect,
    is_simplex,
    lattice_sum,
    make_lattice,
    maximal_neighbors_in_apartment,
    orbit_type,
    parahoric_class,
    parahoric_class_count,
    standard_lattice,
)


@st.composite
def lattices(draw, n=None, i=None):
    n = draw(st.integers(1, 6)) if n is None else n
    if i is None:
        i = draw(st.integers(-3, 3))
        if n % 2:
            i = 2 * (i // 2)
    m = max_theta(n)
    neg, pos = [], []
    for _ in range(m):
        a = draw(st.integers(-3, 3))
        s = draw(st.sampled_from([i, i + 1]))
        neg.append(a)
        pos.append(s - a)
    # coords are r_{-m}..r_{-1}; pos[k] pairs with neg[k] as r_{k+1}, r_{-(k+1)}
    return make_lattice(n, i, list(reversed(neg)) + pos)


@st.composite
def lattice_pairs(draw):
    L = draw(lattices())
    M = draw(lattices(n=L.n, i=L.level_i))
    return L, M


def test_make_lattice_examples():
    L0 = make_lattice(3, 0, (0, 1))
    assert L0 == standard_lattice(3, 0)
    with pytest.raises(LatticeError):
        make_lattice(3, 0, (1, 1))
    with pytest.raises(LatticeError):
        make_lattice(3, 1, (0, 1))
    with pytest.raises(LatticeError):
        make_lattice(3, 0, (0, 1, 0))
    L = make_lattice(4, 1, (1, 0))
    assert (L.s0, L.s1) == (1, 0)
    assert make_lattice(3, 0, (0, 1)).s1 is None


def test_orbit_type_examples():
    for n in range(1, 9):
        m = max_theta(n)
        for theta in range(m + 1):
            assert orbit_type(standard_lattice(n, theta)).t == 2 * theta + 1
        assert orbit_type(make_lattice(n, 0, (0,) * (2 * m))).t == 2 * m + 1
    assert orbit_type(make_lattice(5, 0, (0, 1, 0, 0))).t == 3
    with pytest.raises(LatticeError):
        OrbitType(2)


def test_dual_examples():
    L1 = standard_lattice(3, 1)
    D = dual(L1)
    assert D == L1 and orbit_type(D).t == 3
    assert dual(standard_lattice(3, 0)) is None
    D = dual(standard_lattice(4, 0))
    assert D.level_i == -1 and orbit_type(D).t == 3


@settings(max_examples=1200)
@given(lattices())
def test_dual_clauses(L):
    t = orbit_type(L).t
    assert t % 2 == 1 and 1 <= t <= 2 * L.m + 1
    D = dual(L)
    if L.n % 2 == 0:
        assert D.level_i == -L.level_i - 1
        assert orbit_type(D).t == L.n - t
        assert dual(D) == L
    elif t == 2 * L.m + 1:
        assert D.level_i == -L.level_i
        assert orbit_type(D).t == t
        assert dual(D) == L
    else:
        assert D is None


@settings(max_examples=1200)
@given(lattice_pairs())
def test_intersect_and_sum(pair):
    L, M = pair
    assert intersect(L, L) == L and lattice_sum(L, L) == L
    X, Y = intersect(L, M), lattice_sum(L, M)
    assert X == intersect(M, L) and Y == lattice_sum(M, L)
    if X is not None:
        assert X <= L and X <= M
        assert orbit_type(X).t <= min(orbit_type(L).t, orbit_type(M).t)
    if Y is not None:
        assert L <= Y and M <= Y
        assert orbit_type(Y).t >= max(orbit_type(L).t, orbit_type(M).t)
    # membership filtering: None exactly when a pair sum leaves {i, i+1}
    raw = [max(a, b) for a, b in zip(L.coords, M.coords)]
    m = L.m
    sums = [raw[m - j] + raw[m + j - 1] for j in range(1, m + 1)]
    assert (X is None) == any(s not in (L.level_i, L.level_i + 1) for s in sums)


@settings(max_examples=300)
@given(st.data())
def test_intersect_associative(data):
    L = data.draw(lattices())
    M = data.draw(lattices(n=L.n, i=L.level_i))
    N = data.draw(lattices(n=L.n, i=L.level_i))
    LM, MN = intersect(L, M), intersect(M, N)
    if LM is not None and MN is not None:
        left, right = intersect(LM, N), intersect(L, MN)
        assert left == right


def test_intersect_standard():
    for n in (3, 5, 6, 7):
        m = max_theta(n)
        for a in range(m + 1):
            for b in range(m + 1):
                A, B = standard_lattice(n, a), standard_lattice(n, b)
                assert intersect(A, B) == standard_lattice(n, min(a, b))
                assert lattice_sum(A, B) == standard_lattice(n, max(a, b))
    assert intersect(make_lattice(3, 0, (0, 1)), make_lattice(3, 0, (1, 0))) is None


def test_level_mismatch():
    with pytest.raises(LatticeError):
        intersect(make_lattice(4, 0, (0, 1)), make_lattice(4, 1, (1, 0)))


def test_simplex():
    for n in range(1, 9):
        m = max_theta(n)
        chain = [standard_lattice(n, t) for t in range(m + 1)]
        assert is_simplex(chain)
        assert all(is_simplex([L]) for L in chain)
    # m + 2 lattices never form a simplex
    n = 5
    extra = make_lattice(5, 0, (0, 1, 0, 0))
    assert not is_simplex([standard_lattice(5, t) for t in range(3)] + [extra])
    assert not is_simplex([make_lattice(3, 0, (0, 1)), make_lattice(3, 0, (1, 0))])
    with pytest.raises(LatticeError):
        is_simplex([make_lattice(4, 0, (0, 1)), make_lattice(4, 1, (1, 0))])


def test_parahoric_classes():
    assert [parahoric_class(5, t) for t in (1, 3, 5)] == [0, 1, 2]
    assert parahoric_class(4, 1) == parahoric_class(4, 3) == 0
    assert parahoric_class_count(7) == 4
    for n in range(1, 11):
        m = max_theta(n)
        expected = m + 1 if n % 2 else m // 2 + 1
        classes = {parahoric_class(n, t) for t in range(1, 2 * m + 2, 2)}
        assert parahoric_class_count(n) == expected == len(classes)
    with pytest.raises(LatticeError):
        parahoric_class(5, 7)


@pytest.mark.parametrize("n", range(1, 8))
def test_apartment_neighbours_bounded(n):
    m = max_theta(n)
    for theta in range(m + 1):
        L = standard_lattice(n, theta)
        nbrs = maximal_neighbors_in_apartment(L)
        assert all(orbit_type(M).t == 2 * m + 1 and L <= M for M in nbrs)
        assert len(nbrs) >= 1
        assert len(nbrs) <= nu_eval(n - theta - m - 1, n - 2 * theta - 1, 3)
