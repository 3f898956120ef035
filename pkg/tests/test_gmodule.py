from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from fermatcycles.errors import ParameterMismatchError, UnsupportedCaseError
from fermatcycles.fermat import CharacterSet, FermatParams, enumerate_dual_group, set_B
from fermatcycles.gmodule import (
    AVERAGING,
    CHARACTER_SUM,
    GradedVirtualModule,
    ProjectorSpec,
    apply_projector,
    averaging_projector,
    character_sum_projector,
    module_H_middle,
    module_support,
)


def test_middle_examples():
    m = module_H_middle(FermatParams(3, 1))
    assert m.mult == {(1, (1, 1, 1)): 1, (1, (2, 2, 2)): 1}
    assert m.dim == 2
    assert module_H_middle(FermatParams(2, 1)).is_zero()
    assert module_H_middle(FermatParams(4, 2)).dim == 21


def test_middle_non_primitive_adds_hyperplane_class_in_even_dimension():
    p = FermatParams(4, 2)
    full = module_H_middle(p, primitive=False)
    assert full.dim == 22
    assert full.multiplicity(2, p.trivial) == 1
    assert module_H_middle(FermatParams(3, 1), primitive=False) == module_H_middle(FermatParams(3, 1))


def test_support_examples():
    s = module_support(FermatParams(3, 1), 1)
    assert s.dim == 9
    assert s.multiplicity(2, (0, 0, 0)) == 3
    assert s.is_pure(2)
    s3 = module_support(FermatParams(3, 3), 2)
    assert s3.mult == {(4, (0, 0, 0, 0, 0)): 10}
    assert module_support(FermatParams(5, 1), 1).dim == 15


def test_support_multiplicity_counts_index_memberships():
    p = FermatParams(4, 1)
    s = module_support(p, 1)
    for chi in enumerate_dual_group(p):
        expected = sum(1 for i in range(3) if chi[i] == 0)
        assert s.multiplicity(2, chi) == expected


def test_support_refuses_uninteresting_degrees():
    with pytest.raises(UnsupportedCaseError):
        module_support(FermatParams(3, 2), 1)
    with pytest.raises(UnsupportedCaseError):
        module_support(FermatParams(3, 3), 1)


@pytest.mark.parametrize("d", range(1, 13))
@pytest.mark.parametrize("n", [1, 3, 5])
def test_support_dimension_grid(d, n):
    p = (n + 1) // 2
    s = module_support(FermatParams(d, n), p)
    assert s.dim == (3 * d if n == 1 else comb(n + 2, p))
    assert s.is_effective()


def test_projector_examples():
    avg = averaging_projector(FermatParams(3, 1))
    assert apply_projector(avg, module_H_middle(FermatParams(3, 1))).is_zero()
    s = module_support(FermatParams(3, 3), 2)
    assert apply_projector(averaging_projector(FermatParams(3, 3)), s) == s
    p41 = FermatParams(4, 1)
    cs = character_sum_projector(p41, [{0}, {1}, {2}])
    assert apply_projector(cs, module_H_middle(p41)).is_zero()


def test_averaging_scalar_is_group_order():
    assert averaging_projector(FermatParams(3, 3)).scalar == 81


def test_projector_parameter_mismatch():
    with pytest.raises(ParameterMismatchError):
        apply_projector(averaging_projector(FermatParams(3, 1)), module_H_middle(FermatParams(4, 1)))


def test_projector_spec_invariants():
    p = FermatParams(3, 1)
    with pytest.raises(ValueError):
        ProjectorSpec(AVERAGING, set_B(p, {0}))
    with pytest.raises(ValueError):
        ProjectorSpec("bogus", CharacterSet(p, (p.trivial,)))


def test_character_sum_support_is_union_of_B_and_avoids_A():
    p = FermatParams(3, 1)
    spec = character_sum_projector(p, [{0}, {1}])
    assert set(spec.char_support) == set(set_B(p, {0})) | set(set_B(p, {1}))
    assert (1, 1, 1) not in spec.char_support
    # the complement is a valid projector but carries A
    assert (1, 1, 1) in spec.complement().char_support


def _random_module(params, draw):
    chars = enumerate_dual_group(params).members
    entries = draw(st.dictionaries(
        st.tuples(st.integers(0, 4), st.sampled_from(chars)),
        st.integers(1, 5),
        max_size=20,
    ))
    return GradedVirtualModule(params, entries)


@settings(max_examples=50, deadline=None)
@given(d=st.integers(1, 6), n=st.integers(1, 3), data=st.data())
def test_projectors_idempotent_and_complementary(d, n, data):
    params = FermatParams(d, n)
    m = _random_module(params, data.draw)
    I = data.draw(st.sets(st.integers(0, n + 1), min_size=1, max_size=n + 2))
    specs = [averaging_projector(params), ProjectorSpec(CHARACTER_SUM, set_B(params, I))]
    for spec in specs:
        once = apply_projector(spec, m)
        assert apply_projector(spec, once) == once
        assert once + apply_projector(spec.complement(), m) == m


def test_module_arithmetic():
    p = FermatParams(3, 1)
    a = module_H_middle(p)
    b = module_support(p, 1)
    total = a + b
    assert total.dim == a.dim + b.dim
    assert total - b == a
    assert (a - a).is_zero()
    assert not (-a).is_effective()
    assert total.dims_by_weight() == {1: 2, 2: 9}
    assert a.shift_weights(-1).weights() == {0}
