from itertools import combinations

import pytest

from bitopo.bispace import (BiSpace, bi_subspace, di_member, family,
                            frontier_ij, lc_member, make_bispace, nd_member,
                            p_closed, p_open, relation, relation_witness,
                            st_member)
from bitopo.enumeration import enum_topologies
from bitopo.errors import ArityMismatch, EmptySubspace
from bitopo.sets import full_mask, mask_of, subsets_canonical
from bitopo.topology import validate_topology

from conftest import EX222_TAU_1, discrete, indiscrete, m


def all_bispaces(n):
    tops = list(enum_topologies(n))
    for t1 in tops:
        for t2 in tops:
            yield BiSpace(t1, t2)


def test_ground_sets_must_match():
    with pytest.raises(ArityMismatch):
        BiSpace(discrete(2), discrete(3))


def test_p_open_examples(ex34, chain217):
    for b in all_bispaces(2):
        assert p_open(b, 0) and p_open(b, full_mask(2))
    # tau1 within tau2 makes the p-open family exactly tau2
    t1 = validate_topology(3, [0, m(0), 7])
    t2 = validate_topology(3, [0, m(0), m(0, 1), 7])
    b = BiSpace(t1, t2)
    assert family(b, "p-open") == t2.opens
    assert family(b, "p-closed") == t2.closeds
    assert p_open(chain217, m(0, 2))


def test_p_open_union_decomposition_oracle():
    # direct definition: A = A1 | A2 with Ai open in tau_i
    for b in all_bispaces(3):
        for a in range(8):
            direct = any(u1 | u2 == a
                         for u1 in b.t1.opens if u1 & ~a == 0
                         for u2 in b.t2.opens if u2 & ~a == 0)
            assert p_open(b, a) == direct


def test_frontier_examples(ex34):
    assert frontier_ij(ex34, 1, 2, 7) == 0
    assert frontier_ij(ex34, 1, 2, m(0)) == 0
    assert frontier_ij(ex34, 2, 1, m(1)) == 0
    for b in all_bispaces(3):
        for a in range(8):
            assert p_closed(b, frontier_ij(b, 1, 2, a))
            assert p_closed(b, frontier_ij(b, 2, 1, a))


def test_family_bd2_example_3_4(ex34):
    assert family(ex34, "bd.2") == (0, m(1), m(2), m(1, 2))
    nonempty = [a for a in family(ex34, "bd.2") if a]
    assert all(not (a & ex34.t1.derived(a)) for a in nonempty)


def test_lc_membership_example_3_4(ex34):
    assert not lc_member(ex34, 1, 2, m(0, 1))   # A = {a,b}
    assert not lc_member(ex34, 1, 2, m(0))


def test_lc_three_way_agreement():
    # pointwise definition / subspace-openness / U&F decomposition
    from bitopo.sets import compress, points
    from bitopo.topology import subspace
    for n in (1, 2, 3, 4):
        for b in all_bispaces(n) if n <= 3 else _incl_sample(n):
            for i, j in ((1, 2), (2, 1)):
                ti, tj = b.top(i), b.top(j)
                for a in range(1 << n):
                    got = lc_member(b, i, j, a)
                    pointwise = all(
                        any(u & (1 << x) and (u & a) == (u & tj.cl_table[a])
                            for u in ti.opens)
                        for x in range(n) if a & (1 << x))
                    assert got == pointwise
                    decomp = any((u & f) == a for u in ti.opens
                                 for f in tj.closeds)
                    assert got == decomp
                    cl_a = tj.cl_table[a]
                    if cl_a:
                        sub = subspace(ti, cl_a)
                        rel = compress(a, tuple(points(cl_a)))
                        assert got == sub.is_open(rel)
                    else:
                        assert got == (a == 0)


def _incl_sample(n):
    tops = list(enum_topologies(n))
    out = []
    for t1 in tops[::7]:
        for t2 in tops[::11]:
            b = BiSpace(t1, t2)
            if relation(b, "inclusion"):
                out.append(b)
    return out[:40]


def test_discrete_nd_collapses():
    b = BiSpace(discrete(3), discrete(3))
    assert family(b, "nd.12") == (0,)
    assert family(b, "catg1.12") == (0,)


def test_catg1_singleton_collapse_vs_union_of_nd_bruteforce():
    # oracle: A is first category iff the union of all its ND subsets is A
    for n in (1, 2, 3):
        for b in all_bispaces(n):
            for i, j in ((1, 2), (2, 1)):
                fam = set(family(b, f"catg1.{i}{j}"))
                for a in range(1 << n):
                    union = 0
                    sub = a
                    while True:
                        if nd_member(b, i, j, sub):
                            union |= sub
                        if sub == 0:
                            break
                        sub = (sub - 1) & a
                    assert (a in fam) == (union == a)


def test_gdelta_fsigma_degenerate():
    for b in all_bispaces(2):
        assert family(b, "gdelta.1") == b.t1.opens
        assert family(b, "fsigma.2") == b.t2.closeds


def test_dense_in_itself_and_scattered():
    b = BiSpace(indiscrete(2), indiscrete(2))
    assert di_member(b, 1, 3)            # whole space has no isolated point
    assert not st_member(b, 1, 3)
    d = BiSpace(discrete(2), discrete(2))
    assert not di_member(d, 1, 3)
    assert st_member(d, 1, 3)
    assert st_member(d, "p", 3)


def test_relation_examples(ex34, chain217):
    for t in enum_topologies(3):
        b = BiSpace(t, t)
        assert relation(b, "C") and relation(b, "N") and relation(b, "S")
    assert not relation(chain217, "inclusion")
    assert not relation(ex34, "C")
    assert relation_witness(ex34, "C") == m(1)
    assert relation_witness(ex34, "inclusion") == m(1)


def test_relation_equivalent_formulations():
    # Each relation has an "equivalently"-phrased second form.
    for b in all_bispaces(3):
        c1, c2 = b.t1.cl_table, b.t2.cl_table
        i1, i2 = b.t1.int_table, b.t2.int_table
        altC = all(c1[i1[a]] & ~c2[i1[a]] == 0 for a in range(8))
        altN = all(c1[i2[a]] & ~c2[i2[a]] == 0 for a in range(8))
        assert relation(b, "C") == altC
        assert relation(b, "N") == altN


def test_flags_cache_matches_recomputation():
    for b in all_bispaces(2):
        flags = b.flags
        for kind in ("inclusion", "C", "N", "S"):
            assert flags[kind] == relation(b, kind)


def test_bi_subspace(ex34, ex222_tau1):
    assert bi_subspace(ex34, 7) == ex34
    b = BiSpace(ex222_tau1, ex222_tau1)
    s = bi_subspace(b, m(0, 1, 3))
    assert s.t1.opens == s.t2.opens == (0, m(2), m(0, 1), m(0, 1, 2))
    assert s.points == (0, 1, 3)
    with pytest.raises(EmptySubspace):
        bi_subspace(ex34, 0)
    # natural chain analogue restricted to {0,1}
    chain = make_bispace(3, [0, m(2), m(1, 2), 7], [0, m(0), m(0, 1), 7])
    s2 = bi_subspace(chain, m(0, 1))
    assert s2.t1.opens == (0, m(1), m(0, 1))
    assert s2.t2.opens == (0, m(0), m(0, 1))


def test_nd_four_corner_diagram_under_inclusion():
    for n in (2, 3, 4):
        spaces = (all_bispaces(n) if n <= 3 else _incl_sample(n))
        for b in spaces:
            if not relation(b, "inclusion"):
                continue
            for a in range(1 << n):
                if nd_member(b, 2, 1, a):
                    assert nd_member(b, 2, 2, a) and nd_member(b, 1, 1, a)
                if nd_member(b, 2, 2, a) or nd_member(b, 1, 1, a):
                    assert nd_member(b, 1, 2, a)


def test_s_relation_forces_boundary_equality():
    for n in (2, 3):
        for b in all_bispaces(n):
            if relation(b, "S"):
                assert family(b, "bd.1") == family(b, "bd.2")
