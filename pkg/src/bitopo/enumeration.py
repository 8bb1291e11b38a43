"""Exhaustive, canonicalized enumeration of topologies, pairs and maps.

Topologies on {0..n-1} are generated through their minimal-neighborhood
systems (the Alexandrov correspondence with preorders): assign each
point x an open kernel U_x containing x subject to y in U_x implying
U_y inside U_x, with full pairwise pruning during backtracking.  The
stream is sorted into one canonical order, so two runs are identical
byte for byte regardless of how the work was partitioned.

Pair enumeration filters ordered pairs by an optional inter-topology
constraint; dedupe keeps exactly the pairs that are their own
canonical form under simultaneous relabelling of both components.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

from .bispace import BiSpace, relation
from .errors import GroundSetTooLarge, SearchSpaceTooLarge
from .sets import canon_key, full_mask, points
from .topology import Topology

ENUM_MAX_N = 6
TOPOLOGY_COUNTS = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942, 6: 209527}

CONSTRAINTS = ("none", "inclusion", "C", "N", "S",
               "inclusion+C", "inclusion+N", "inclusion+S")


@dataclass(frozen=True)
class UniverseSpec:
    n: int
    constraint: str = "none"
    dedupe: bool = False

    def __post_init__(self):
        if not 1 <= self.n <= ENUM_MAX_N:
            raise GroundSetTooLarge(f"pair universes support n <= {ENUM_MAX_N}")
        if self.constraint not in CONSTRAINTS:
            raise ValueError(f"unknown constraint {self.constraint!r}")

    def admits(self, b: BiSpace) -> bool:
        c = self.constraint
        if c == "none":
            return True
        for part in c.split("+"):
            if not relation(b, "inclusion" if part == "inclusion" else part):
                return False
        return True


def _min_nbhd_systems(n: int):
    """Backtrack over minimal-neighborhood assignments."""
    cands = [[m for m in range(1 << n) if m & (1 << x)] for x in range(n)]
    assign = [0] * n

    def rec(x):
        if x == n:
            yield tuple(assign)
            return
        bx = 1 << x
        for u in cands[x]:
            ok = True
            for y in range(x):
                uy = assign[y]
                if (u & (1 << y) and uy & ~u) or (uy & bx and u & ~uy):
                    ok = False
                    break
            if ok:
                assign[x] = u
                yield from rec(x + 1)
        assign[x] = 0

    yield from rec(0)


def _opens_from_mins(n, mins) -> tuple:
    full = full_mask(n)
    opens = []
    for s in range(full + 1):
        u = 0
        for x in points(s):
            u |= mins[x]
        if u == s:
            opens.append(s)
    return tuple(sorted(opens, key=canon_key))


@lru_cache(maxsize=None)
def _all_topologies(n: int) -> tuple:
    fams = sorted((_opens_from_mins(n, mins) for mins in _min_nbhd_systems(n)),
                  key=lambda f: (len(f), f))
    return tuple(Topology(n, f) for f in fams)


def enum_topologies(n: int):
    """Every topology on {0..n-1} exactly once, canonically ordered."""
    if not 1 <= n <= ENUM_MAX_N:
        raise GroundSetTooLarge(f"topology enumeration supports n <= {ENUM_MAX_N}")
    yield from _all_topologies(n)


def count_topologies(n: int) -> int:
    return len(_all_topologies(n))


# -- canonical forms under point relabelling ------------------------------

@lru_cache(maxsize=None)
def _perm_tables(n: int) -> tuple:
    """For each permutation, a 2**n lookup remapping whole masks."""
    tables = []
    for perm in permutations(range(n)):
        tbl = []
        for mask in range(1 << n):
            out = 0
            for x in points(mask):
                out |= 1 << perm[x]
            tbl.append(out)
        tables.append(tuple(tbl))
    return tuple(tables)


def permute_topology(t: Topology, table) -> Topology:
    return Topology(t.n, tuple(sorted((table[u] for u in t.opens),
                                      key=canon_key)))


def canonical_form(b: BiSpace) -> BiSpace:
    """Minimal representative over simultaneous relabellings of the pair."""
    best = None
    best_key = None
    for table in _perm_tables(b.n):
        o1 = tuple(sorted((table[u] for u in b.t1.opens), key=canon_key))
        o2 = tuple(sorted((table[u] for u in b.t2.opens), key=canon_key))
        key = (o1, o2)
        if best_key is None or key < best_key:
            best_key = key
            best = key
    return BiSpace(Topology(b.n, best[0]), Topology(b.n, best[1]))


def is_canonical(b: BiSpace) -> bool:
    ref = (b.t1.opens, b.t2.opens)
    for table in _perm_tables(b.n):
        o1 = tuple(sorted((table[u] for u in b.t1.opens), key=canon_key))
        if o1 > ref[0]:
            continue
        o2 = tuple(sorted((table[u] for u in b.t2.opens), key=canon_key))
        if (o1, o2) < ref:
            return False
    return True


# -- pair universes --------------------------------------------------------

def _pairs_chunk(spec: UniverseSpec, lo: int, hi: int) -> list:
    tops = _all_topologies(spec.n)
    out = []
    for i in range(lo, hi):
        t1 = tops[i]
        for t2 in tops:
            b = BiSpace(t1, t2)
            if not spec.admits(b):
                continue
            if spec.dedupe and not is_canonical(b):
                continue
            out.append(b)
    return out


def enum_bispaces(spec: UniverseSpec, workers: int = 1):
    """All ordered pairs under the constraint, deterministically ordered.

    Work is partitioned by contiguous index ranges of the first
    topology; chunk outputs are concatenated in range order, so the
    stream does not depend on the worker count.
    """
    tops = _all_topologies(spec.n)
    k = len(tops)
    if workers <= 1:
        yield from _pairs_chunk(spec, 0, k)
        return
    bounds = [round(k * w / workers) for w in range(workers + 1)]
    ranges = [(bounds[w], bounds[w + 1]) for w in range(workers)
              if bounds[w] < bounds[w + 1]]
    try:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            chunks = pool.map(_pairs_worker, [(spec, lo, hi)
                                              for lo, hi in ranges])
            for chunk in chunks:
                yield from chunk
    except (OSError, PermissionError):  # sandboxed: fall back in-process
        for lo, hi in ranges:
            yield from _pairs_chunk(spec, lo, hi)


def _pairs_worker(args):
    spec, lo, hi = args
    return _pairs_chunk(spec, lo, hi)


def enum_spaces(n: int):
    """Single topologies wrapped as diagonal bispaces (tau, tau)."""
    for t in enum_topologies(n):
        yield BiSpace(t, t)


# -- map enumeration --------------------------------------------------------

MAP_SPACE_CAP = 10 ** 7


def enum_point_maps(n_src: int, n_tgt: int):
    """All total point functions source -> target as tuples."""
    if n_tgt ** n_src > MAP_SPACE_CAP:
        raise SearchSpaceTooLarge(
            f"{n_tgt}^{n_src} maps exceed the cap of {MAP_SPACE_CAP}")
    yield from product(range(n_tgt), repeat=n_src)


def enum_maps(b: BiSpace, b2: BiSpace, want: str):
    """Total maps between the ground sets filtered by a class tag."""
    from .dspace import FiniteMap, map_class
    for fn in enum_point_maps(b.n, b2.n):
        f = FiniteMap(b.n, b2.n, fn)
        if want == "surjective":
            if f.surjective:
                yield f
            continue
        if want in map_class(f, b, b2):
            yield f
