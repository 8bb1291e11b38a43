import pytest

from bitopo.errors import (EmptySubspace, MissingEmptyOrFull,
                           NotClosedUnderIntersection, NotClosedUnderUnion)
from bitopo.enumeration import enum_topologies
from bitopo.sets import full_mask, mask_of, subsets_canonical
from bitopo.topology import (closure, derived_set, interior, min_nbhd,
                             subspace, validate_topology)

from conftest import EX34_T1, EX34_T2, EX222_TAU_1, discrete, indiscrete, m


def test_validate_accepts_example_topology():
    t = validate_topology(3, EX34_T1)
    assert t.opens == (0, m(1), m(2), m(1, 2), m(0, 1, 2))


def test_validate_accepts_indiscrete():
    t = validate_topology(3, [0, 7])
    assert t.opens == (0, 7)


def test_validate_rejects_union_gap():
    with pytest.raises(NotClosedUnderUnion) as exc:
        validate_topology(3, [0, m(0), m(1), 7])
    assert set(exc.value.witness) == {m(0), m(1)}


def test_validate_rejects_intersection_gap():
    with pytest.raises(NotClosedUnderIntersection):
        validate_topology(3, [0, m(0, 1), m(1, 2), m(0, 1, 2)])


def test_validate_requires_empty_and_full():
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(2, [0, m(0)])
    with pytest.raises(MissingEmptyOrFull):
        validate_topology(2, [m(0), m(0, 1)])


def test_validate_collapses_duplicates():
    t = validate_topology(2, [0, 0, 3, 3])
    assert t.opens == (0, 3)


def brute_closure(t, a):
    # independent oracle: scan the closed family for the least superset
    best = full_mask(t.n)
    for f in t.closeds:
        if f & a == a and f.bit_count() < best.bit_count():
            best = f
    return best


def test_closure_examples(ex34):
    t2 = ex34.t2
    assert closure(t2, m(1)) == m(1)
    assert closure(t2, 0) == 0
    assert closure(t2, 7) == 7
    chain = validate_topology(3, [0, m(0), m(0, 1), m(0, 1, 2)])
    assert closure(chain, m(0)) == 7


def test_closure_matches_least_closed_superset_oracle():
    for n in (1, 2, 3):
        for t in enum_topologies(n):
            for a in range(1 << n):
                assert closure(t, a) == brute_closure(t, a)


def test_interior_duality_and_laws():
    for n in (1, 2, 3, 4):
        full = full_mask(n)
        for t in enum_topologies(n):
            cl = t.cl_table
            for a in range(full + 1):
                c = cl[a]
                assert a & ~c == 0                      # extensive
                assert cl[c] == c                       # idempotent
                assert interior(t, a) == full ^ cl[full ^ a]
                assert t.is_closed(c)
            for a in range(full + 1):
                for b_ in range(a, full + 1):
                    if a & ~b_ == 0:
                        assert cl[a] & ~cl[b_] == 0     # monotone


def test_closure_is_self_union_derived():
    for n in (1, 2, 3, 4):
        for t in enum_topologies(n):
            for a in range(1 << n):
                assert closure(t, a) == a | derived_set(t, a)


def test_derived_set_examples(ex34):
    d = discrete(3)
    for a in range(8):
        assert derived_set(d, a) == 0
    assert derived_set(ex34.t2, 7) == m(1, 2)       # X_2^i = {a}
    chain = validate_topology(3, [0, m(0), m(0, 1), m(0, 1, 2)])
    assert derived_set(chain, 7) == m(1, 2)


def test_min_nbhd(ex335_gamma):
    assert min_nbhd(ex335_gamma, 4) == full_mask(5)
    assert min_nbhd(ex335_gamma, 2) == m(0, 1, 2)
    d = discrete(4)
    for x in range(4):
        assert min_nbhd(d, x) == 1 << x
    for n in (2, 3):
        for t in enum_topologies(n):
            for x in range(n):
                u = min_nbhd(t, x)
                assert t.is_open(u) and u & (1 << x)
                for o in t.opens:
                    if o & (1 << x):
                        assert u & ~o == 0


def test_subspace_example_2_22(ex222_tau1, ex222_tau2):
    # Y = {a,b,d} = {0,1,3}; relative opens {∅,{a,b},{d},Y} re-indexed.
    s = subspace(ex222_tau1, m(0, 1, 3))
    assert s.points == (0, 1, 3)
    assert s.opens == (0, m(2), m(0, 1), m(0, 1, 2))
    # Y = {a,d,e} = {0,3,4}; relative opens {∅,{a},{d,e},Y}.
    s2 = subspace(ex222_tau2, m(0, 3, 4))
    assert s2.opens == (0, m(0), m(1, 2), m(0, 1, 2))


def test_subspace_identity_and_transitivity():
    for t in enum_topologies(3):
        assert subspace(t, 7).opens == t.opens
        for y in range(1, 8):
            sy = subspace(t, y)
            for z_rel in range(1, 1 << sy.n):
                z_parent = mask_of(sy.points[i] for i in range(sy.n)
                                   if z_rel & (1 << i))
                assert subspace(sy, z_rel).opens == subspace(t, z_parent).opens


def test_subspace_rejects_empty():
    with pytest.raises(EmptySubspace):
        subspace(indiscrete(2), 0)


def test_canonical_subset_order():
    assert subsets_canonical(2) == (0, 1, 2, 3)
    assert subsets_canonical(3)[:5] == (0, 1, 2, 4, 3)
