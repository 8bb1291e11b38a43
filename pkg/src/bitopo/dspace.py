"""Neighborhood assignments, D-space deciders, and maps between spaces.

A neighborhood assignment picks an open set around every point.  On a
finite carrier the pointwise-minimal assignment (minimal open
neighborhoods) decides the D-property for all assignments at once:
any cover found for it covers under every larger assignment.  The
brute-force decision over all assignments is kept as an oracle.

Maps are total point functions with class tags (continuity, openness,
closedness per index, compression = d-continuous bijection, locally
closed quotient) recomputed from the definitions.
"""

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .bispace import BiSpace, lc_member
from .errors import ArityMismatch, SearchSpaceTooLarge
from .sets import canon_key, full_mask, points, subsets_canonical
from .topology import Topology

ASSIGNMENT_CAP = 10 ** 6


@dataclass(frozen=True)
class NbhdAssignment:
    side: int                 # 1 or 2: which topology supplies the opens
    phi: tuple                # phi[x] = assigned open mask around x

    def __le__(self, other):
        return all(a & ~b == 0 for a, b in zip(self.phi, other.phi))


def check_assignment(t: Topology, phi) -> None:
    for x, u in enumerate(phi):
        if not (u & (1 << x)) or not t.is_open(u):
            raise ValueError(f"phi({x}) = {u:#x} is not an open neighborhood")


def min_assignment(t: Topology, side: int = 1) -> NbhdAssignment:
    """The pointwise least assignment: minimal open neighborhoods."""
    return NbhdAssignment(side, t.min_nbhd)


def all_assignments(t: Topology, side: int = 1):
    """Every assignment, as the product of the up-sets of the minimal
    neighborhoods; guarded by an instance cap."""
    ups = [[u for u in t.opens if u & (1 << x)] for x in range(t.n)]
    total = 1
    for u in ups:
        total *= len(u)
        if total > ASSIGNMENT_CAP:
            raise SearchSpaceTooLarge(
                f"assignment family exceeds {ASSIGNMENT_CAP}")
    for phi in product(*ups):
        yield NbhdAssignment(side, phi)


def _cover_witness(t_cl, t_disc, phi) -> int | None:
    """Least D with D closed under t_cl, discrete under t_disc, and the
    assigned neighborhoods of D covering everything."""
    n = len(phi)
    full = full_mask(n)
    for d in subsets_canonical(n):
        if t_cl.cl_table[d] != d or d & t_disc.derived(d):
            continue
        u = 0
        for x in points(d):
            u |= phi[x]
        if u == full:
            return d
    return None


def is_D_space(t: Topology):
    """Decide the D-property through the minimal assignment alone."""
    d = _cover_witness(t, t, t.min_nbhd)
    return (True, d) if d is not None else (False, None)


def is_D_space_brute(t: Topology) -> bool:
    """Oracle: quantify over every assignment explicitly."""
    return all(_cover_witness(t, t, a.phi) is not None
               for a in all_assignments(t))


def is_ij_D_space(b: BiSpace, i: int, j: int):
    """(i,j)-D-space: every i-assignment covers from some j-closed
    i-discrete set; decided through the minimal i-assignment."""
    ti, tj = b.top(i), b.top(j)
    d = _cover_witness(tj, ti, ti.min_nbhd)
    return (True, d) if d is not None else (False, None)


def is_ij_D_space_brute(b: BiSpace, i: int, j: int) -> bool:
    ti, tj = b.top(i), b.top(j)
    return all(_cover_witness(tj, ti, a.phi) is not None
               for a in all_assignments(ti, side=i))


def linearly_ordered_assignments(t: Topology) -> bool:
    """Is the family of all assignments a chain under pointwise order?"""
    fam = list(all_assignments(t))
    return all(a <= b or b <= a
               for k, a in enumerate(fam) for b in fam[k + 1:])


# -- maps ---------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteMap:
    n_src: int
    n_tgt: int
    fn: tuple

    def __post_init__(self):
        if len(self.fn) != self.n_src or any(
                not 0 <= y < self.n_tgt for y in self.fn):
            raise ArityMismatch("map must be total into the target ground set")

    @property
    def surjective(self) -> bool:
        return len(set(self.fn)) == self.n_tgt

    @property
    def injective(self) -> bool:
        return len(set(self.fn)) == self.n_src

    @property
    def bijective(self) -> bool:
        return self.injective and self.surjective

    def image(self, mask: int) -> int:
        out = 0
        for x in points(mask):
            out |= 1 << self.fn[x]
        return out

    def preimage(self, mask: int) -> int:
        out = 0
        for x, y in enumerate(self.fn):
            if mask & (1 << y):
                out |= 1 << x
        return out

    def apply(self, x: int) -> int:
        return self.fn[x]


def is_continuous(f: FiniteMap, t_src: Topology, t_tgt: Topology) -> bool:
    return all(f.preimage(v) in t_src.opens_set for v in t_tgt.opens)


def is_open_map(f: FiniteMap, t_src: Topology, t_tgt: Topology) -> bool:
    return all(f.image(u) in t_tgt.opens_set for u in t_src.opens)


def is_closed_map(f: FiniteMap, t_src: Topology, t_tgt: Topology) -> bool:
    return all(f.image(c) in t_tgt.closeds_set for c in t_src.closeds)


def open_violation(f: FiniteMap, t_src: Topology, t_tgt: Topology):
    """Least open set whose image is not open, or None."""
    for u in sorted(t_src.opens, key=canon_key):
        if f.image(u) not in t_tgt.opens_set:
            return u
    return None


def is_lcq(f: FiniteMap, b: BiSpace, b2: BiSpace, i: int, j: int) -> bool:
    """Locally closed quotient: surjective, and locally closed preimages
    only come from locally closed sets."""
    if not f.surjective:
        return False
    for a in range(1 << b2.n):
        if lc_member(b, i, j, f.preimage(a)) and not lc_member(b2, i, j, a):
            return False
    return True


def map_class(f: FiniteMap, b: BiSpace, b2: BiSpace) -> frozenset:
    """Class tags of f between two bispaces."""
    if f.n_src != b.n or f.n_tgt != b2.n:
        raise ArityMismatch("map endpoints do not match the spaces")
    tags = set()
    for i in (1, 2):
        if is_continuous(f, b.top(i), b2.top(i)):
            tags.add(f"{i}-continuous")
        if is_open_map(f, b.top(i), b2.top(i)):
            tags.add(f"{i}-open")
        if is_closed_map(f, b.top(i), b2.top(i)):
            tags.add(f"{i}-closed")
    for kind in ("continuous", "open", "closed"):
        if f"1-{kind}" in tags and f"2-{kind}" in tags:
            tags.add(f"d-{kind}")
    if "d-continuous" in tags and f.bijective:
        tags.add("compression")
    for i, j in ((1, 2), (2, 1)):
        if is_lcq(f, b, b2, i, j):
            tags.add(f"lcq.{i}{j}")
    return frozenset(tags)


def connects(f: FiniteMap, phi: NbhdAssignment, psi: NbhdAssignment) -> bool:
    """psi(f(x)) == f(phi(x)) pointwise; f must be onto the target."""
    if len(phi.phi) != f.n_src or len(psi.phi) != f.n_tgt:
        raise ArityMismatch("assignments do not match the map endpoints")
    if not f.surjective:
        return False
    return all(psi.phi[f.fn[x]] == f.image(phi.phi[x])
               for x in range(f.n_src))


def induced_assignment_open(f: FiniteMap, phi: NbhdAssignment) -> NbhdAssignment:
    """psi(y) = f(union of phi over the fiber of y) for open surjections."""
    out = []
    for y in range(f.n_tgt):
        u = 0
        for x in range(f.n_src):
            if f.fn[x] == y:
                u |= phi.phi[x]
        out.append(f.image(u))
    return NbhdAssignment(phi.side, tuple(out))


def induced_assignment_cont(f: FiniteMap, psi: NbhdAssignment) -> NbhdAssignment:
    """phi(x) = preimage of psi(f(x)) for continuous maps."""
    return NbhdAssignment(psi.side,
                          tuple(f.preimage(psi.phi[f.fn[x]])
                                for x in range(f.n_src)))


def sup_topology(t1: Topology, t2: Topology) -> Topology:
    """Least topology containing both: unions of pairwise intersections."""
    if t1.n != t2.n:
        raise ArityMismatch("both topologies must share one ground set")
    base = {u & v for u in t1.opens for v in t2.opens}
    opens = set(base)
    grew = True
    while grew:
        grew = False
        for a in list(opens):
            for c in list(opens):
                if a | c not in opens:
                    opens.add(a | c)
                    grew = True
    return Topology(t1.n, tuple(sorted(opens, key=canon_key)))


def remark_cover(t: Topology, phi: NbhdAssignment, d: int) -> bool:
    """The open family {phi(x) \\ D : x outside D} plus one-point slices
    of D really covers the space."""
    cover = 0
    for x in range(t.n):
        if not d & (1 << x):
            cover |= phi.phi[x] & ~d
    for x in points(d):
        for u in t.opens:
            if u & (1 << x) and u & d == (1 << x):
                cover |= u
                break
    return cover == full_mask(t.n)
