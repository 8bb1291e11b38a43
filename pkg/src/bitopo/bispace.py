"""Bitopological structure: a pair of topologies on one ground set.

Implements p-open/p-closed sets, the mixed (i,j)-frontier, the set
families used throughout (boundary, dense, dense-in-itself, scattered,
nowhere dense, first/second category, G-delta, F-sigma, locally closed)
and the inclusion / coupled (C) / near (N) / S inter-topology
relations.

Index arguments i, j always range over {1, 2}.  Families and relation
flags are materialized lazily and memoized per space; on finite
carriers the G-delta family degenerates to the opens and F-sigma to
the closeds, and the first-category family collapses to the subsets of
the nowhere-dense singletons (every countable union is a finite one,
and each piece may be shrunk to a singleton).
"""

from .errors import ArityMismatch, EmptySubspace
from .sets import canon_key, full_mask, points, subsets_canonical
from .topology import Topology, subspace as top_subspace


def check_ij(i: int, j: int):
    if {i, j} - {1, 2} or i == j:
        raise ValueError(f"index pair ({i},{j}) must be (1,2) or (2,1)")


class BiSpace:
    __slots__ = ("t1", "t2", "n", "points", "_flags", "_families", "_props",
                 "_hash")

    def __init__(self, t1: Topology, t2: Topology, points_map=None):
        if t1.n != t2.n:
            raise ArityMismatch("both topologies must share one ground set")
        self.t1 = t1
        self.t2 = t2
        self.n = t1.n
        self.points = points_map
        self._flags = None
        self._families = {}
        self._props = {}
        self._hash = hash((t1, t2))

    def top(self, i: int) -> Topology:
        return self.t1 if i == 1 else self.t2

    def __eq__(self, other):
        return (isinstance(other, BiSpace)
                and self.t1 == other.t1 and self.t2 == other.t2)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return (f"BiSpace(n={self.n}, t1={list(self.t1.opens)}, "
                f"t2={list(self.t2.opens)})")

    def to_bytes(self) -> bytes:
        return self.t1.to_bytes() + self.t2.to_bytes()

    @property
    def flags(self) -> dict:
        """Cached relation flags; always equal to direct recomputation."""
        if self._flags is None:
            self._flags = {k: relation(self, k)
                           for k in ("inclusion", "C", "N", "S")}
        return self._flags


# -- basic operators ----------------------------------------------------

def p_open(b: BiSpace, a: int) -> bool:
    """A is p-open iff it is the union of its two interiors."""
    return (b.t1.int_table[a] | b.t2.int_table[a]) == a


def p_closed(b: BiSpace, a: int) -> bool:
    return (b.t1.cl_table[a] & b.t2.cl_table[a]) == a


def frontier_ij(b: BiSpace, i: int, j: int, a: int) -> int:
    """(i,j)-frontier: i-closure of A meets j-closure of the complement."""
    check_ij(i, j)
    comp = full_mask(b.n) ^ a
    return b.top(i).cl_table[a] & b.top(j).cl_table[comp]


def lc_member(b: BiSpace, i: int, j: int, a: int) -> bool:
    """A in (i,j)-LC(X): some i-open U has U & j-cl(A) == A.

    The largest candidate U is the i-interior of A | ~j-cl(A); testing
    it alone decides membership.  i == j gives the single-topology
    locally closed family.
    """
    cl_a = b.top(j).cl_table[a]
    u = b.top(i).int_table[a | (full_mask(b.n) ^ cl_a)]
    return (u & cl_a) == a


def colc_member(b: BiSpace, i: int, j: int, a: int) -> bool:
    return lc_member(b, i, j, full_mask(b.n) ^ a)


def nd_member(b: BiSpace, i: int, j: int, a: int) -> bool:
    """(i,j)-nowhere dense: i-int of j-cl of A is empty."""
    return b.top(i).int_table[b.top(j).cl_table[a]] == 0


def nd_singletons(b: BiSpace, i: int, j: int) -> int:
    """Mask of points whose singleton is (i,j)-nowhere dense."""
    m = 0
    ti, tj = b.top(i), b.top(j)
    for x in range(b.n):
        if ti.int_table[tj.cl_table[1 << x]] == 0:
            m |= 1 << x
    return m


def catg1_member(b: BiSpace, i: int, j: int, a: int) -> bool:
    """(i,j)-first category: a finite union of (i,j)-ND sets.

    Collapses to: every singleton of A is (i,j)-ND (subsets of ND sets
    are ND, so pieces shrink to singletons; the singleton decomposition
    is itself a finite union).
    """
    return a & ~nd_singletons(b, i, j) == 0


def di_member(b: BiSpace, kind, a: int) -> bool:
    """Dense-in-itself families: kind is 1, 2, (1,2), (2,1) or 'p'."""
    if kind == "p":
        return di_member(b, (1, 2), a) and di_member(b, (2, 1), a)
    if kind in (1, 2):
        return a & ~b.top(kind).derived(a) == 0
    i, j = kind
    iso = a & ~b.top(i).derived(a)
    return iso & ~b.top(j).derived(a) == 0


def st_member(b: BiSpace, kind, a: int) -> bool:
    """Scattered: non-empty, with no non-empty dense-in-itself subset."""
    if a == 0:
        return False
    sub = a
    while sub:  # non-empty submasks of a
        if di_member(b, kind, sub):
            return False
        sub = (sub - 1) & a
    return True


FAMILY_KINDS = tuple(
    ["p-open", "p-closed"]
    + [f"{name}.{ix}" for name in ("bd", "dense", "gdelta", "fsigma")
       for ix in (1, 2)]
    + [f"{name}.{ix}" for name in ("di", "st")
       for ix in (1, 2, "p")] + ["di.12", "di.21"]
    + [f"{name}.{ix}" for name in ("nd", "lc", "colc", "catg1", "catg2")
       for ix in (1, 2, 12, 21)]
)


def family(b: BiSpace, kind: str) -> tuple:
    """Materialize one of the §-family kinds as a canonical mask tuple."""
    memo = b._families
    got = memo.get(kind)
    if got is not None:
        return got
    full = full_mask(b.n)
    masks = subsets_canonical(b.n)
    name, _, ix = kind.partition(".")
    if name in ("bd", "dense", "gdelta", "fsigma", "di", "st", "nd",
                "lc", "colc", "catg1", "catg2") and not ix:
        raise ValueError(f"family kind {kind!r} needs an index suffix")
    if name in ("nd", "lc", "colc", "catg1", "catg2"):
        pair = {"1": (1, 1), "2": (2, 2), "12": (1, 2), "21": (2, 1)}[ix]
    if kind == "p-open":
        fam = tuple(a for a in masks if p_open(b, a))
    elif kind == "p-closed":
        fam = tuple(a for a in masks if p_closed(b, a))
    elif name == "bd":
        t = b.top(int(ix))
        fam = tuple(a for a in masks if t.int_table[a] == 0)
    elif name == "dense":
        t = b.top(int(ix))
        fam = tuple(a for a in masks if t.cl_table[a] == full)
    elif name == "gdelta":
        fam = b.top(int(ix)).opens
    elif name == "fsigma":
        fam = b.top(int(ix)).closeds
    elif name == "di":
        k = "p" if ix == "p" else (int(ix) if ix in ("1", "2")
                                   else (int(ix[0]), int(ix[1])))
        fam = tuple(a for a in masks if di_member(b, k, a))
    elif name == "st":
        k = "p" if ix == "p" else int(ix)
        fam = tuple(a for a in masks if st_member(b, k, a))
    elif name == "nd":
        i, j = pair
        fam = tuple(a for a in masks if nd_member(b, i, j, a))
    elif name == "lc":
        i, j = pair
        fam = tuple(a for a in masks if lc_member(b, i, j, a))
    elif name == "colc":
        i, j = pair
        fam = tuple(a for a in masks if colc_member(b, i, j, a))
    elif name == "catg1":
        i, j = pair
        sing = nd_singletons(b, i, j)
        fam = tuple(a for a in masks if a & ~sing == 0)
    elif name == "catg2":
        i, j = pair
        sing = nd_singletons(b, i, j)
        fam = tuple(a for a in masks if a & ~sing)
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    memo[kind] = fam
    return fam


# -- inter-topology relations -------------------------------------------

def rel_inclusion(b: BiSpace) -> bool:
    return b.t1.opens_set <= b.t2.opens_set


def rel_C(b: BiSpace) -> bool:
    """tau1 coupled to tau2: tau1-cl U inside tau2-cl U for U in tau1."""
    c1, c2 = b.t1.cl_table, b.t2.cl_table
    return all(c1[u] & ~c2[u] == 0 for u in b.t1.opens)


def rel_N(b: BiSpace) -> bool:
    """tau1 near tau2: same closure test taken over U in tau2."""
    c1, c2 = b.t1.cl_table, b.t2.cl_table
    return all(c1[u] & ~c2[u] == 0 for u in b.t2.opens)


def rel_S(b: BiSpace) -> bool:
    i1, i2 = b.t1.int_table, b.t2.int_table
    c1, c2 = b.t1.cl_table, b.t2.cl_table
    return all(i1[a] & ~c1[i2[a]] == 0 and i2[a] & ~c2[i1[a]] == 0
               for a in range(1 << b.n))


_RELATIONS = {"inclusion": rel_inclusion, "C": rel_C, "N": rel_N, "S": rel_S}


def relation(b: BiSpace, kind: str) -> bool:
    try:
        return _RELATIONS[kind](b)
    except KeyError:
        raise ValueError(f"unknown relation {kind!r}") from None


def relation_witness(b: BiSpace, kind: str):
    """None when the relation holds, else the offending set."""
    if kind == "inclusion":
        for u in b.t1.opens:
            if u not in b.t2.opens_set:
                return u
        return None
    c1, c2 = b.t1.cl_table, b.t2.cl_table
    if kind in ("C", "N"):
        for u in (b.t1.opens if kind == "C" else b.t2.opens):
            if c1[u] & ~c2[u]:
                return u
        return None
    if kind == "S":
        i1, i2 = b.t1.int_table, b.t2.int_table
        for a in subsets_canonical(b.n):
            if i1[a] & ~c1[i2[a]] or i2[a] & ~c2[i1[a]]:
                return a
        return None
    raise ValueError(f"unknown relation {kind!r}")


def bi_subspace(b: BiSpace, y: int) -> BiSpace:
    """Component-wise subspace over Y with one shared index map."""
    if y == 0:
        raise EmptySubspace("subspace carrier must be non-empty")
    s1 = top_subspace(b.t1, y)
    s2 = top_subspace(b.t2, y)
    return BiSpace(s1, s2, s1.points)


def make_bispace(n: int, opens1, opens2) -> BiSpace:
    from .topology import validate_topology
    return BiSpace(validate_topology(n, opens1), validate_topology(n, opens2))
