import pytest
from hypothesis import given, settings, strategies as st

from fermatcycles.kunneth import (
    DIAGONAL_NAMES,
    POINT,
    KunnethClass,
    basis,
    curve_product,
    curve_triple_integral,
    diagonal_class,
    is_null_class,
    modified_diagonal_class,
    monomial_product,
    partial_diagonal_class,
    pullback,
    small_diagonal_class,
)


def curve_pairing(x, y):
    r = curve_product(x, y)
    return 0 if r is None else r[0] * (r[1] == POINT)


def test_curve_product_table():
    assert curve_product("a1", "b1") == (1, POINT)
    assert curve_product("b1", "a1") == (-1, POINT)
    assert curve_product("a1", "a1") is None
    assert curve_product("a1", "b2") is None
    assert curve_product(POINT, "a1") is None
    assert curve_product("1", "b2") == (1, "b2")


@pytest.mark.parametrize("g", range(0, 4))
def test_diagonal_pairing_oracle(g):
    D = diagonal_class(g)
    for x in basis(g):
        for y in basis(g):
            assert (D * KunnethClass.monomial(g, x, y)).integral() == curve_pairing(x, y)


def test_opposite_odd_sign_fails_pairing_oracle():
    g = 1
    flipped = KunnethClass(2, g, {("1", "w"): 1, ("w", "1"): 1, ("a1", "b1"): 1, ("b1", "a1"): -1})
    value = (flipped * KunnethClass.monomial(g, "a1", "b1")).integral()
    assert value == -curve_pairing("a1", "b1")


def test_diagonal_examples():
    assert diagonal_class(0).terms == {("1", "w"): 1, ("w", "1"): 1}
    assert len(diagonal_class(1).terms) == 4
    assert len(diagonal_class(2).terms) == 6


@pytest.mark.parametrize("g", range(0, 4))
def test_diagonal_self_intersection_is_euler_characteristic(g):
    D = diagonal_class(g)
    assert (D * D).integral() == 2 - 2 * g


@pytest.mark.parametrize("g", range(0, 4))
def test_small_diagonal_triple_pairing_oracle(g):
    D = small_diagonal_class(g)
    for x in basis(g):
        for y in basis(g):
            for z in basis(g):
                assert (D * KunnethClass.monomial(g, x, y, z)).integral() == curve_triple_integral(x, y, z)


@pytest.mark.parametrize("g", range(0, 4))
def test_small_diagonal_is_intersection_of_two_big_diagonals(g):
    D = diagonal_class(g)
    assert small_diagonal_class(g) == pullback(D, (0, 1), 3) * pullback(D, (1, 2), 3)


def test_partial_diagonal_examples():
    assert partial_diagonal_class("D12", 0).terms == {("1", "w", "w"): 1, ("w", "1", "w"): 1}
    for g in range(4):
        assert partial_diagonal_class("D1", g).terms == {("1", "w", "w"): 1}
        assert partial_diagonal_class("D3", g).terms == {("w", "w", "1"): 1}
    small = small_diagonal_class(1)
    expected = KunnethClass(3, 1, {("w", "a1", "b1"): -1, ("w", "b1", "a1"): 1})
    assert small.component((2, 1, 1)) == expected


@pytest.mark.parametrize("which", DIAGONAL_NAMES)
@pytest.mark.parametrize("g", range(0, 4))
def test_partial_diagonals_are_homogeneous_of_degree_4(which, g):
    c = partial_diagonal_class(which, g)
    assert c.degrees() == {4}


def test_partial_diagonal_rejects_unknown_name():
    with pytest.raises(ValueError):
        partial_diagonal_class("D4", 1)


@pytest.mark.parametrize("g", range(0, 6))
def test_modified_diagonal_vanishes(g):
    assert is_null_class(modified_diagonal_class(g))
    assert not is_null_class(partial_diagonal_class("D", g))


def test_null_class_examples():
    assert is_null_class(modified_diagonal_class(2))
    assert not is_null_class(partial_diagonal_class("D", 1))
    assert is_null_class(KunnethClass.zero(3, 2))


def test_pullback_sign_when_slots_are_swapped():
    g = 1
    c = KunnethClass.monomial(g, "a1", "b1")
    swapped = pullback(c, (1, 0), 2)
    # pr_2^*(a1) . pr_1^*(b1) = (1 (x) a1)(b1 (x) 1) = -(b1 (x) a1)
    assert swapped.terms == {("b1", "a1"): -1}


def random_monomial(g, m):
    return st.tuples(*[st.sampled_from(basis(g))] * m)


@settings(max_examples=200, deadline=None)
@given(g=st.integers(0, 3), m=st.integers(1, 3), data=st.data())
def test_graded_commutativity(g, m, data):
    xs = data.draw(random_monomial(g, m))
    ys = data.draw(random_monomial(g, m))
    x = KunnethClass(m, g, {xs: 1})
    y = KunnethClass(m, g, {ys: 1})
    deg_x = sum(1 if s[0] in "ab" else (2 if s == POINT else 0) for s in xs)
    deg_y = sum(1 if s[0] in "ab" else (2 if s == POINT else 0) for s in ys)
    assert x * y == (-1) ** (deg_x * deg_y) * (y * x)


@settings(max_examples=100, deadline=None)
@given(g=st.integers(0, 2), data=st.data())
def test_associativity(g, data):
    xs, ys, zs = (data.draw(random_monomial(g, 3)) for _ in range(3))
    x, y, z = (KunnethClass(3, g, {t: 1}) for t in (xs, ys, zs))
    assert (x * y) * z == x * (y * z)


def test_monomial_product_vanishing():
    assert monomial_product(("a1", "w"), ("a1", "1")) is None
