"""Single-topology engine on a finite ground set.

A Topology stores its open family canonically ordered and precomputes
the minimal open neighborhood of every point; closure, interior and
derived-set operators are table lookups derived from those
neighborhoods.  Everything is immutable after construction, so
instances are hashable and safe to share across workers.
"""

from functools import lru_cache

from .errors import (
    EmptySubspace,
    GroundSetTooLarge,
    MissingEmptyOrFull,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
)
from .sets import MAX_GROUND, canon_key, full_mask, points


class Topology:
    __slots__ = ("n", "opens", "opens_set", "closeds", "closeds_set",
                 "min_nbhd", "points", "_cl", "_int", "_hash")

    def __init__(self, n: int, opens: tuple, points_map=None):
        # Private: go through validate_topology / from_opens.
        self.n = n
        self.opens = opens
        self.opens_set = frozenset(opens)
        full = full_mask(n)
        self.closeds = tuple(sorted((full ^ u for u in opens), key=canon_key))
        self.closeds_set = frozenset(self.closeds)
        mins = []
        for x in range(n):
            b = 1 << x
            m = full
            for u in opens:
                if u & b:
                    m &= u
            mins.append(m)
        self.min_nbhd = tuple(mins)
        self.points = points_map  # parent indices when self is a subspace
        self._cl = None
        self._int = None
        self._hash = hash((n, opens))

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Topology)
                and self.n == other.n and self.opens == other.opens)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Topology(n={self.n}, opens={list(self.opens)})"

    def to_bytes(self) -> bytes:
        out = bytearray([self.n, len(self.opens)])
        for u in self.opens:
            out += u.to_bytes(2, "little")
        return bytes(out)

    # -- operator tables -----------------------------------------------

    @property
    def cl_table(self) -> tuple:
        """cl_table[A] = smallest closed superset of A."""
        if self._cl is None:
            mins = self.min_nbhd
            n = self.n
            tbl = []
            for a in range(1 << n):
                c = 0
                for x in range(n):
                    if mins[x] & a:
                        c |= 1 << x
                tbl.append(c)
            self._cl = tuple(tbl)
        return self._cl

    @property
    def int_table(self) -> tuple:
        if self._int is None:
            full = full_mask(self.n)
            cl = self.cl_table
            self._int = tuple(full ^ cl[full ^ a] for a in range(full + 1))
        return self._int

    def cl(self, a: int) -> int:
        return self.cl_table[a]

    def interior(self, a: int) -> int:
        return self.int_table[a]

    def derived(self, a: int) -> int:
        """i-accumulation points of A: every open around x meets A\\{x}."""
        d = 0
        for x in range(self.n):
            if self.min_nbhd[x] & a & ~(1 << x):
                d |= 1 << x
        return d

    def isolated(self, a: int) -> int:
        """A_j^i = A minus its derived set."""
        return a & ~self.derived(a)

    def is_discrete_set(self, a: int) -> bool:
        return not (a & self.derived(a))

    def is_open(self, a: int) -> bool:
        return a in self.opens_set

    def is_closed(self, a: int) -> bool:
        return a in self.closeds_set

    def is_dense(self, a: int) -> bool:
        return self.cl_table[a] == full_mask(self.n)


def validate_topology(n: int, family) -> Topology:
    """Build the canonical Topology for a family of opens, or raise.

    The family must contain the empty set and the full ground set and
    be closed under pairwise union and intersection (on a finite
    carrier that already gives arbitrary unions).  Duplicates collapse.
    """
    if not 1 <= n <= MAX_GROUND:
        raise GroundSetTooLarge(f"ground set size {n} outside 1..{MAX_GROUND}")
    fam = set(family)
    if not fam:
        raise MissingEmptyOrFull("empty family")
    full = full_mask(n)
    for u in fam:
        if u & ~full:
            raise ValueError(f"member {u:#x} leaves the ground set of size {n}")
    if 0 not in fam or full not in fam:
        raise MissingEmptyOrFull("family must contain the empty set and X")
    members = sorted(fam, key=canon_key)
    for i, a in enumerate(members):
        for b in members[i + 1:]:
            if a | b not in fam:
                raise NotClosedUnderUnion(a, b)
            if a & b not in fam:
                raise NotClosedUnderIntersection(a, b)
    return Topology(n, tuple(members))


def min_nbhd(t: Topology, x: int) -> int:
    """Intersection of all opens containing x; itself open."""
    if not 0 <= x < t.n:
        raise ValueError(f"point {x} outside ground set of size {t.n}")
    return t.min_nbhd[x]


def closure(t: Topology, a: int) -> int:
    return t.cl(a)


def interior(t: Topology, a: int) -> int:
    return t.interior(a)


def derived_set(t: Topology, a: int) -> int:
    return t.derived(a)


def subspace(t: Topology, y: int) -> Topology:
    """Relative topology over Y, re-indexed; parent indices kept on .points."""
    if y == 0:
        raise EmptySubspace("subspace carrier must be non-empty")
    pts = tuple(points(y))
    pos = {p: i for i, p in enumerate(pts)}
    rel = set()
    for u in t.opens:
        m = 0
        v = u & y
        for x in points(v):
            m |= 1 << pos[x]
        rel.add(m)
    return Topology(len(pts), tuple(sorted(rel, key=canon_key)), pts)


@lru_cache(maxsize=None)
def _rel_opens(t: Topology, s: int) -> tuple:
    """Relative open masks over carrier s, in parent coordinates."""
    return tuple(sorted({u & s for u in t.opens}, key=canon_key))


def rel_opens(t: Topology, s: int) -> tuple:
    return _rel_opens(t, s)


def rel_cl(t: Topology, s: int, a: int) -> int:
    """Closure of a inside the subspace over s (parent coordinates)."""
    return t.cl_table[a] & s


def rel_closeds(t: Topology, s: int) -> tuple:
    return tuple(sorted({s & ~u for u in _rel_opens(t, s)}, key=canon_key))
