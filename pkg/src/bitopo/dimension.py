"""Dimension-theoretic machinery: partitions, bidimension zero,
single-topology inductive dimensions, and almost-n-dimensionality.

Only the zero level of the pairwise dimensions is characterized (base
of other-closed sets / empty partitions); the general mixed recursion
stays out of scope.  The single-topology small and large inductive
dimensions use the classical recursions over subspace carriers, which
terminate because the subspace lattice is finite.

Partition pairs follow the convention that the named closed sets are
non-empty: the complement must split into two non-empty open halves,
so a pair with an empty side never has a partition and would break the
documented equivalences with the base characterizations.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .bispace import BiSpace, p_closed
from .errors import GroundSetTooLarge, MalformedQuery
from .properties import holds
from .sets import canon_key, full_mask, points
from .topology import Topology, rel_opens


@dataclass(frozen=True)
class PointPair:
    """Definition-1.4 style query: x against a non-empty i-closed A."""
    x: int          # point index
    a: int          # i-closed set, non-empty
    i: int          # topology owning A (and the open half around x)


@dataclass(frozen=True)
class SetPair:
    """Definition-1.5 style query: disjoint non-empty 1-closed A, 2-closed B."""
    a: int
    b: int


def _validate_query(b: BiSpace, q):
    if isinstance(q, PointPair):
        if q.i not in (1, 2):
            raise MalformedQuery("index must be 1 or 2")
        if not 0 <= q.x < b.n:
            raise MalformedQuery("point outside the ground set")
        if not b.top(q.i).is_closed(q.a):
            raise MalformedQuery("A must be i-closed")
        if q.a & (1 << q.x):
            raise MalformedQuery("x must avoid A")
    elif isinstance(q, SetPair):
        if not b.t1.is_closed(q.a):
            raise MalformedQuery("A must be 1-closed")
        if not b.t2.is_closed(q.b):
            raise MalformedQuery("B must be 2-closed")
        if q.a & q.b:
            raise MalformedQuery("A and B must be disjoint")
    else:
        raise MalformedQuery(f"unsupported query {q!r}")


def is_partition(b: BiSpace, t: int, q) -> bool:
    """T is p-closed and X\\T splits into disjoint non-empty open halves
    H_1 in tau_1, H_2 in tau_2 placed as the query demands."""
    _validate_query(b, q)
    if not p_closed(b, t):
        return False
    rest = full_mask(b.n) ^ t
    for h1 in b.t1.opens:
        if h1 == 0 or h1 & ~rest:
            continue
        h2 = rest ^ h1
        if h2 == 0 or h1 & h2 or h2 not in b.t2.opens_set:
            continue
        if isinstance(q, PointPair):
            hx, ha = (h1, h2) if q.i == 1 else (h2, h1)
            if hx & (1 << q.x) and q.a & ~ha == 0:
                return True
        else:
            if q.a & ~h2 == 0 and q.b & ~h1 == 0:
                return True
    return False


# -- bidimension zero ---------------------------------------------------------

def ij_ind_zero(b: BiSpace, i: int, j: int) -> bool:
    """(i,j)-ind X = 0: tau_i has a base of j-closed sets."""
    ti, tj = b.top(i), b.top(j)
    base = [v for v in ti.opens if v in tj.closeds_set]
    for u in ti.opens:
        cover = 0
        for v in base:
            if v & ~u == 0:
                cover |= v
        if cover != u:
            return False
    return True


def p_ind_zero(b: BiSpace) -> bool:
    return ij_ind_zero(b, 1, 2) and ij_ind_zero(b, 2, 1)


def p_ind_zero_by_partitions(b: BiSpace) -> bool:
    """The empty set is a partition for every point/closed-set pair."""
    for i in (1, 2):
        for a in b.top(i).closeds:
            if a == 0:
                continue
            for x in range(b.n):
                if a & (1 << x):
                    continue
                if not is_partition(b, 0, PointPair(x, a, i)):
                    return False
    return True


def p_Ind_zero(b: BiSpace) -> bool:
    """Every closed set shrinks inside any opposite-open neighborhood to
    an opposite-open, same-closed one."""
    full = full_mask(b.n)
    for ti, tj in ((b.t1, b.t2), (b.t2, b.t1)):
        good = [v for v in tj.opens if v in ti.closeds_set]
        for f in ti.closeds:
            for u in tj.opens:
                if f & ~u:
                    continue
                if not any(f & ~v == 0 and v & ~u == 0 for v in good):
                    return False
    return True


def p_Ind_zero_by_partitions(b: BiSpace) -> bool:
    for a in b.t1.closeds:
        if a == 0:
            continue
        for c in b.t2.closeds:
            if c == 0 or a & c:
                continue
            if not is_partition(b, 0, SetPair(a, c)):
                return False
    return True


# -- classical inductive dimensions over subspace carriers --------------------

@lru_cache(maxsize=None)
def _ind_rel(t: Topology, s: int) -> int:
    if s == 0:
        return -1
    rel = rel_opens(t, s)
    worst = -1
    for x in points(s):
        ux = t.min_nbhd[x] & s
        bx = 1 << x
        best = None
        for v in rel:
            if v & bx and v & ~ux == 0:
                d = _ind_rel(t, (t.cl_table[v] & s) & ~v) + 1
                if best is None or d < best:
                    best = d
                if best == 0:
                    break
        worst = max(worst, best)
    return worst


def top_ind(t: Topology, carrier=None) -> int:
    """Classical small inductive dimension of a finite space."""
    return _ind_rel(t, full_mask(t.n) if carrier is None else carrier)


@lru_cache(maxsize=None)
def _Ind_rel(t: Topology, s: int) -> int:
    if s == 0:
        return -1
    rel = rel_opens(t, s)
    worst = -1
    for f in (s & ~u for u in rel):
        for u in rel:
            if f & ~u:
                continue
            best = None
            for v in rel:
                if f & ~v == 0 and v & ~u == 0:
                    d = _Ind_rel(t, (t.cl_table[v] & s) & ~v) + 1
                    if best is None or d < best:
                        best = d
                    if best == 0:
                        break
            worst = max(worst, best)
    return worst


def top_Ind(t: Topology, carrier=None) -> int:
    """Classical large inductive dimension of a finite space."""
    return _Ind_rel(t, full_mask(t.n) if carrier is None else carrier)


# -- almost n-dimensionality ---------------------------------------------------

AIND_MAX_N = 4


@lru_cache(maxsize=None)
def subtopologies(t: Topology) -> tuple:
    """All topologies on the same ground set whose opens sit inside t's,
    canonically ordered."""
    full = full_mask(t.n)
    middle = [u for u in t.opens if u not in (0, full)]
    out = []
    for r in range(len(middle) + 1):
        for combo in combinations(middle, r):
            fam = set(combo) | {0, full}
            ok = True
            for a in fam:
                for c in fam:
                    if a | c not in fam or a & c not in fam:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(Topology(t.n, tuple(sorted(fam, key=canon_key))))
    out.sort(key=lambda s: (len(s.opens), s.opens))
    return tuple(out)


def aind_leq(t2: Topology, k: int, mode: str = "small"):
    """Almost-k-dimensionality test: some weaker tau_1 has (small or
    large) dimension at most k and the pair satisfies the side
    condition ((2,1)-regularity for small, p-normality for large).
    Returns (bool, least witness topology or None)."""
    if t2.n > AIND_MAX_N:
        raise GroundSetTooLarge(
            f"subtopology search supported for n <= {AIND_MAX_N}")
    if mode not in ("small", "large"):
        raise ValueError("mode must be 'small' or 'large'")
    for t1 in subtopologies(t2):
        dim = top_ind(t1) if mode == "small" else top_Ind(t1)
        if dim > k:
            continue
        pair = BiSpace(t1, t2)
        side = holds(pair, "regular.21" if mode == "small" else "normal.p")
        if side:
            return True, t1
    return False, None


def aind_value(t2: Topology, mode: str = "small"):
    """Least k with aind_leq, or None when no weaker topology ever
    satisfies the side condition."""
    for k in range(t2.n + 1):
        ok, wit = aind_leq(t2, k, mode)
        if ok:
            return k, wit
    return None, None


def aind_witnesses(t2: Topology, k: int, mode: str = "small") -> tuple:
    """All weaker topologies realizing dimension <= k with the side
    condition; used by the theorem checks over every realization."""
    out = []
    for t1 in subtopologies(t2):
        dim = top_ind(t1) if mode == "small" else top_Ind(t1)
        if dim > k:
            continue
        pair = BiSpace(t1, t2)
        if holds(pair, "regular.21" if mode == "small" else "normal.p"):
            out.append(t1)
    return tuple(out)
