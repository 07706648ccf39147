"""Structural invariants: exhaustive at n <= 4, randomized at n = 5."""

from hypothesis import given, settings
from hypothesis import strategies as st

from fintopo import (
    SetClass,
    build_topology,
    class_table,
    closure,
    complement,
    enumerate_topologies,
    interior,
    is_in_class,
    semi_closure,
    semi_closure_closed_form,
    specialization_preorder,
    topology_from_preorder,
)
from helpers import random_preorder_topology

# every topology on up to three points; cheap enough to sample from freely
ALL_SMALL = [t for n in range(4) for t in enumerate_topologies(n)]

# (smaller, larger) pairs that must hold for every subset of every space
CHAIN = [
    (SetClass.REGULAR_OPEN, SetClass.OPEN),
    (SetClass.REGULAR_CLOSED, SetClass.CLOSED),
    (SetClass.CLOPEN, SetClass.OPEN),
    (SetClass.CLOPEN, SetClass.CLOSED),
    (SetClass.OPEN, SetClass.SEMI_OPEN),
    (SetClass.OPEN, SetClass.PREOPEN),
    (SetClass.SEMI_OPEN, SetClass.BETA_OPEN),
    (SetClass.PREOPEN, SetClass.BETA_OPEN),
    (SetClass.CLOSED, SetClass.SEMI_CLOSED),
    (SetClass.OPEN, SetClass.LOCALLY_CLOSED),
    (SetClass.CLOSED, SetClass.LOCALLY_CLOSED),
    (SetClass.A_SET, SetClass.AB_SET),
    (SetClass.AB_SET, SetClass.B_SET),
    (SetClass.AB_SET, SetClass.SEMI_OPEN),
    (SetClass.A_SET, SetClass.LOCALLY_CLOSED),
    (SetClass.LOCALLY_CLOSED, SetClass.B_SET),
]


seeds5 = st.lists(st.integers(0, 31), min_size=5, max_size=5)
small_space = st.sampled_from(ALL_SMALL)


def test_interior_closure_duality_exhaustive():
    for n in range(5):
        for t in enumerate_topologies(n):
            for a in t.subsets():
                ca = complement(a, t.n)
                assert interior(t, a) == complement(closure(t, ca), t.n)


def test_inclusion_chains_exhaustive():
    for n in range(5):
        for t in enumerate_topologies(n):
            table = class_table(t)
            for smaller, larger in CHAIN:
                gap = table.family_bitmap(smaller) & ~table.family_bitmap(
                    larger
                )
                assert gap == 0, (t.opens, smaller, larger)


def test_preorder_round_trip_exhaustive():
    for n in range(5):
        for t in enumerate_topologies(n):
            assert topology_from_preorder(specialization_preorder(t)) == t


@given(data=st.data())
def test_operator_laws(data):
    t = data.draw(small_space)
    a = data.draw(st.integers(0, t.full))
    b = data.draw(st.integers(0, t.full))
    ia, ca = interior(t, a), closure(t, a)
    assert ia & ~a == 0
    assert a & ~ca == 0
    assert interior(t, ia) == ia
    assert closure(t, ca) == ca
    # monotone on the intersection
    assert interior(t, a & b) & ~interior(t, a) == 0
    assert closure(t, a & b) & ~closure(t, a) == 0


@given(data=st.data())
def test_semi_closure_laws(data):
    t = data.draw(small_space)
    a = data.draw(st.integers(0, t.full))
    s = semi_closure(t, a)
    assert s & ~t.full == 0 and a & ~s == 0
    assert semi_closure(t, s) == s
    assert is_in_class(t, s, SetClass.SEMI_CLOSED)
    assert (s == a) == is_in_class(t, a, SetClass.SEMI_CLOSED)
    assert s == semi_closure_closed_form(t, a)


@given(data=st.data())
def test_complement_dualities(data):
    t = data.draw(small_space)
    a = data.draw(st.integers(0, t.full))
    ca = complement(a, t.n)
    pairs = [
        (SetClass.OPEN, SetClass.CLOSED),
        (SetClass.SEMI_OPEN, SetClass.SEMI_CLOSED),
        (SetClass.PREOPEN, SetClass.PRECLOSED),
        (SetClass.BETA_OPEN, SetClass.BETA_CLOSED),
        (SetClass.REGULAR_OPEN, SetClass.REGULAR_CLOSED),
    ]
    for left, right in pairs:
        assert is_in_class(t, a, left) == is_in_class(t, ca, right)
    # self-dual classes
    for cls in (SetClass.SEMI_REGULAR, SetClass.CLOPEN):
        assert is_in_class(t, a, cls) == is_in_class(t, ca, cls)


@given(data=st.data())
def test_opens_order_does_not_matter(data):
    t = data.draw(small_space)
    shuffled = data.draw(st.permutations(list(t.opens)))
    assert build_topology(t.n, shuffled) == t


@settings(max_examples=40, deadline=None)
@given(seeds=seeds5)
def test_sampled_five_point_spaces(seeds):
    t = random_preorder_topology(seeds)
    assert t.n == 5
    table = class_table(t)
    for smaller, larger in CHAIN:
        assert table.family_bitmap(smaller) & ~table.family_bitmap(
            larger
        ) == 0
    for a in t.subsets():
        ca = complement(a, t.n)
        assert interior(t, a) == complement(closure(t, ca), t.n)
        s = semi_closure(t, a)
        assert semi_closure(t, s) == s
        assert s == semi_closure_closed_form(t, a)
    assert topology_from_preorder(specialization_preorder(t)) == t
