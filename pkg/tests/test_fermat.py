import itertools
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fermatcycles.errors import CapacityError, DomainError, InvalidIndexError
from fermatcycles.fermat import (
    FermatParams,
    enumerate_dual_group,
    expected_size_A,
    griffiths_hodge_number,
    hodge_histogram,
    hodge_type,
    negate,
    set_A,
    set_B,
)


def brute_force_group(d, n):
    """All (n+2)-tuples of residues with zero sum; no shortcut for the last coordinate."""
    return {a for a in itertools.product(range(d), repeat=n + 2) if sum(a) % d == 0}


def brute_force_bounded_compositions(total, parts, cap):
    return sum(
        1
        for m in itertools.product(range(cap + 1), repeat=parts)
        if sum(m) == total
    ) if cap >= 0 and total >= 0 else 0


@pytest.mark.parametrize("d,n", [(3, 1), (1, 1), (4, 2), (2, 3), (5, 1)])
def test_dual_group_matches_brute_force(d, n):
    params = FermatParams(d, n)
    group = enumerate_dual_group(params)
    assert len(group) == d ** (n + 1)
    assert set(group) == brute_force_group(d, n)


def test_dual_group_examples():
    assert len(enumerate_dual_group(FermatParams(3, 1))) == 9
    assert list(enumerate_dual_group(FermatParams(1, 1))) == [(0, 0, 0)]
    assert (1, 1, 1, 1) in enumerate_dual_group(FermatParams(4, 2))


def test_dual_group_is_lexicographic_on_free_coordinates():
    members = list(enumerate_dual_group(FermatParams(4, 2)))
    heads = [chi[:-1] for chi in members]
    assert heads == sorted(heads)
    assert heads == list(itertools.product(range(4), repeat=3))


def test_capacity_guard():
    with pytest.raises(CapacityError):
        enumerate_dual_group(FermatParams(10, 3), max_enum=1000)
    with pytest.raises(CapacityError):
        set_A(FermatParams(10, 3), max_enum=1000)


def test_set_A_examples():
    assert list(set_A(FermatParams(3, 1))) == [(1, 1, 1), (2, 2, 2)]
    assert len(set_A(FermatParams(2, 1))) == 0
    assert len(set_A(FermatParams(4, 2))) == 21


@pytest.mark.parametrize("d", range(1, 8))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_set_A_matches_filtered_brute_force(d, n):
    brute = {a for a in brute_force_group(d, n) if all(a)}
    assert set(set_A(FermatParams(d, n))) == brute
    assert len(brute) == expected_size_A(FermatParams(d, n))


def test_set_B_examples():
    p31 = FermatParams(3, 1)
    assert list(set_B(p31, {0})) == [(0, 0, 0), (0, 1, 2), (0, 2, 1)]
    assert list(set_B(p31, {0, 1, 2})) == [(0, 0, 0)]
    assert len(set_B(FermatParams(5, 1), {1})) == 5


def test_set_B_errors():
    p = FermatParams(3, 1)
    with pytest.raises(InvalidIndexError):
        set_B(p, set())
    with pytest.raises(InvalidIndexError):
        set_B(p, {3})
    with pytest.raises(InvalidIndexError):
        set_B(p, {-1})


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_A_disjoint_from_every_B(d, n):
    params = FermatParams(d, n)
    A = set_A(params)
    for r in range(1, n + 3):
        for I in itertools.combinations(range(n + 2), r):
            B = set_B(params, I)
            assert A.isdisjoint(B)
            assert len(B) == (d ** (n + 2 - r) // d if r < n + 2 else 1)


def test_hodge_type_examples():
    p31 = FermatParams(3, 1)
    assert (hodge_type(p31, (1, 1, 1)).p, hodge_type(p31, (1, 1, 1)).q) == (1, 0)
    assert (hodge_type(p31, (2, 2, 2)).p, hodge_type(p31, (2, 2, 2)).q) == (0, 1)
    t = hodge_type(FermatParams(4, 2), (1, 1, 1, 1))
    assert (t.p, t.q) == (2, 0)


def test_hodge_type_rejects_partially_supported_characters():
    with pytest.raises(DomainError):
        hodge_type(FermatParams(3, 1), (0, 1, 2))


def test_griffiths_examples():
    assert griffiths_hodge_number(FermatParams(4, 2), 0) == 1
    assert griffiths_hodge_number(FermatParams(4, 2), 1) == 19
    assert griffiths_hodge_number(FermatParams(3, 1), 0) == 1


@pytest.mark.parametrize("d", range(1, 7))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_griffiths_matches_brute_force_compositions(d, n):
    params = FermatParams(d, n)
    for q in range(n + 1):
        total = (q + 1) * d - n - 2
        assert griffiths_hodge_number(params, q) == brute_force_bounded_compositions(total, n + 2, d - 2)


def test_griffiths_inclusion_exclusion_quartic_surface():
    # 4 variables, degree 4, exponent cap 2: C(7,3) minus 4 * C(4,3) (one exponent >= 3)
    assert comb(7, 3) - 4 * comb(4, 3) == 19


@pytest.mark.parametrize("d", range(1, 9))
@pytest.mark.parametrize("n", [1, 2, 3])
def test_hodge_histogram_matches_oracle(d, n):
    params = FermatParams(d, n)
    hist = hodge_histogram(params)
    assert hist == {q: griffiths_hodge_number(params, q) for q in range(n + 1)}


@settings(max_examples=60, deadline=None)
@given(d=st.integers(2, 9), n=st.integers(1, 3), data=st.data())
def test_conjugation_swaps_hodge_types(d, n, data):
    params = FermatParams(d, n)
    A = set_A(params)
    if not len(A):
        return
    chi = data.draw(st.sampled_from(A.members))
    conj = negate(params, chi)
    assert conj in A
    assert negate(params, conj) == chi
    t, tc = hodge_type(params, chi), hodge_type(params, conj)
    assert (tc.p, tc.q) == (t.q, t.p)
    hist = hodge_histogram(params)
    assert all(hist[k] == hist[n - k] for k in range(n + 1))
