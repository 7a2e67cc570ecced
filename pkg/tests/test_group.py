"""Group arithmetic: exact values plus algebraic laws."""

import pytest
from hypothesis import given, strategies as st

from relheffter.group import (
    GroupElement,
    GroupError,
    GroupSpec,
    from_symmetric,
    neg,
    subgroup_of_order,
    sum_elements,
    symmetric_rep,
)


def test_cyclic_arithmetic_z21():
    spec = GroupSpec.cyclic(21)
    a, b = spec.element(17), spec.element(9)
    assert (a + b).coords == (5,)
    assert (a - b).coords == (8,)
    assert (-a).coords == (4,)
    assert spec.identity.is_identity
    assert sum_elements(spec, [a, b, -a, -b]).is_identity


def test_direct_sum_arithmetic():
    spec = GroupSpec((51, 3))
    a = spec.element(-9, 1)
    assert a.coords == (42, 1)
    assert (a + spec.element(9, -1)).is_identity
    assert (-a).coords == (9, 2)


def test_element_canonicalizes_and_validates():
    spec = GroupSpec.cyclic(7)
    assert spec.element(-1).coords == (6,)
    with pytest.raises(GroupError):
        GroupElement(spec, (7,))
    with pytest.raises(GroupError):
        GroupElement(spec, (1, 2))
    with pytest.raises(GroupError):
        GroupSpec(())


def test_cross_group_operations_rejected():
    a = GroupSpec.cyclic(5).element(1)
    b = GroupSpec.cyclic(7).element(1)
    with pytest.raises(GroupError):
        a + b


def test_subgroup_of_order():
    sub = subgroup_of_order(161, 7)
    assert {e.coords[0] for e in sub} == {0, 23, 46, 69, 92, 115, 138}
    assert subgroup_of_order(21, 1) == frozenset({GroupSpec.cyclic(21).identity})
    with pytest.raises(GroupError):
        subgroup_of_order(10, 3)


def test_subgroup_closure():
    sub = subgroup_of_order(72, 18)
    assert len(sub) == 18
    for a in sub:
        for b in sub:
            assert a + b in sub


def test_symmetric_rep_values():
    spec = GroupSpec.cyclic(161)
    assert symmetric_rep(spec.element(96)) == -65
    assert symmetric_rep(spec.element(65)) == 65
    assert symmetric_rep(spec.element(0)) == 0
    # even order: v/2 maps to +v/2
    assert symmetric_rep(GroupSpec.cyclic(10).element(5)) == 5
    with pytest.raises(GroupError):
        symmetric_rep(GroupSpec((5, 3)).element(1, 1))


def test_from_symmetric_inverts():
    assert from_symmetric(161, -65).coords == (96,)
    assert from_symmetric(161, 65).coords == (65,)


@st.composite
def spec_and_elements(draw, count=2):
    orders = draw(st.lists(st.integers(1, 30), min_size=1, max_size=3))
    spec = GroupSpec(tuple(orders))
    elems = [
        spec.element(*[draw(st.integers(-100, 100)) for _ in orders])
        for _ in range(count)
    ]
    return spec, elems


@given(spec_and_elements(count=3))
def test_group_laws(data):
    spec, (a, b, c) = data
    assert (a + b) == (b + a)
    assert ((a + b) + c) == (a + (b + c))
    assert (a + spec.identity) == a
    assert (a + (-a)).is_identity
    assert neg(neg(a)) == a


@given(st.integers(1, 500), st.integers(-1000, 1000))
def test_symmetric_rep_round_trip(v, x):
    e = GroupSpec.cyclic(v).element(x)
    r = symmetric_rep(e)
    assert -(v // 2) <= r <= v // 2
    assert from_symmetric(v, r) == e


@given(st.integers(1, 500), st.integers(-1000, 1000))
def test_symmetric_rep_antisymmetry(v, x):
    e = GroupSpec.cyclic(v).element(x)
    r, rn = symmetric_rep(e), symmetric_rep(neg(e))
    if v % 2 == 0 and e.coords[0] == v // 2:
        assert r == rn == v // 2  # the unique self-negative element
    else:
        assert rn == -r
