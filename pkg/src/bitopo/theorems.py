"""The registered statement catalogue.

Every implemented statement becomes a TheoremCheck: an instance
universe, a hypothesis and a conclusion, model-checked exhaustively at
small sizes.  Ids are stable strings; dotted suffixes name sub-items.

Conventions used below:
  * property ids go through the string table, so overrides reach them;
  * instance dicts carry 'b' (space), plus extras ('y', 'u', 'f', ...);
  * map-based universes run over canonical representatives of both
    spaces (the statements are invariant under relabelling either
    side), with every point map in between;
  * statements quantifying over carriers with degenerate readings keep
    the documented finite-form guards (non-empty named sets, proper
    closures where an argument manifestly needs them).
"""

from functools import lru_cache
from itertools import product

from . import dimension as dim
from . import dspace as dsp
from .bispace import (BiSpace, bi_subspace, di_member, family, frontier_ij,
                      lc_member, nd_member, relation)
from .harness import (TheoremCheck, diag_universe, register, space_universe,
                      space_universe_canonical)
from .properties import (check as prop_check, holds, p_normal_rel,
                         subset_str_sigma_disc,
                         p_open_subsets_p_normal, p_separated_pairs_split,
                         rel_holds, normal_in_itself, submaximal_equivalents)
from .relclosure import CoverPair, d_closure, ij_closure_pair, p_separated
from .sets import canon_key, compress, full_mask, points, subsets_canonical
from .topology import Topology, rel_opens


def spaces(n):
    for b in space_universe(n):
        yield {"b": b}


def spaces_canon(n):
    for b in space_universe_canonical(n):
        yield {"b": b}


def diag(n):
    for b in diag_universe(n):
        yield {"b": b}


def space_subsets(n, nonempty=True):
    lo = 1 if nonempty else 0
    for b in space_universe(n):
        for y in subsets_canonical(n)[lo:]:
            yield {"b": b, "y": y}


def diag_subsets(n):
    for b in diag_universe(n):
        for y in subsets_canonical(n)[1:]:
            yield {"b": b, "y": y}


def space_covers(n):
    full = full_mask(n)
    for b in space_universe(n):
        for y in range(full + 1):
            rest = full & ~y
            z = rest
            while True:
                yield {"b": b, "y": y, "z": z}
                if z == full:
                    break
                z = (z + 1) | rest
    return


def _imp(p, q):
    return (not p) or q


def _sub(b, y):
    return bi_subspace(b, y)


def incl(b):
    return b.flags["inclusion"]


def relC(b):
    return b.flags["C"]


def relN(b):
    return b.flags["N"]


def relS(b):
    return b.flags["S"]


# ===================================================================== §1

register(TheoremCheck(
    "def-1.1.5-ed", "the two mixed extremal-disconnectedness variants agree",
    spaces, lambda i: True,
    lambda i: holds(i["b"], "extr-disc.12") == holds(i["b"], "extr-disc.21"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "def-1.1-nodec-incl", "under inclusion: 1-nodec => (2,1)-nodec and "
    "(1,2)-nodec => 2-nodec",
    spaces, lambda i: incl(i["b"]),
    lambda i: (_imp(holds(i["b"], "nodec.1"), holds(i["b"], "nodec.21"))
               and _imp(holds(i["b"], "nodec.12"), holds(i["b"], "nodec.2"))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "def-1.1-nodec-S", "under inclusion + S: the full nodec square",
    spaces, lambda i: incl(i["b"]) and relS(i["b"]),
    lambda i: (_imp(holds(i["b"], "nodec.1"), holds(i["b"], "nodec.21"))
               and _imp(holds(i["b"], "nodec.1"), holds(i["b"], "nodec.12"))
               and _imp(holds(i["b"], "nodec.21"), holds(i["b"], "nodec.2"))
               and _imp(holds(i["b"], "nodec.12"), holds(i["b"], "nodec.2"))),
    universe="bispaces", cheap=True))


def _lc_diagram(i):
    b = i["b"]
    full = full_mask(b.n)
    for a in subsets_canonical(b.n):
        in_t1 = b.t1.is_open(a)
        in_t2 = b.t2.is_open(a)
        co1 = b.t1.is_closed(a)
        co2 = b.t2.is_closed(a)
        l1, l2 = lc_member(b, 1, 1, a), lc_member(b, 2, 2, a)
        l12, l21 = lc_member(b, 1, 2, a), lc_member(b, 2, 1, a)
        if (in_t2 or co2) and not l2:
            return False
        if (in_t2 or co1) and not l21:
            return False
        if (in_t1 or co2) and not l12:
            return False
        if (in_t1 or co1) and not l1:
            return False
        if l21 and not l2:
            return False
        if l1 and not l21:
            return False
        if l12 and not l2:
            return False
        if l1 and not l12:
            return False
    return True


register(TheoremCheck(
    "def-1.3-lc-diagram", "under inclusion: the locally-closed family "
    "inclusion diagram", spaces, lambda i: incl(i["b"]), _lc_diagram,
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "sec1-popen-superset", "tau_1 u tau_2 always sits inside the p-open "
    "family (and dually)",
    spaces, lambda i: True,
    lambda i: (set(i["b"].t1.opens) | set(i["b"].t2.opens)
               <= set(family(i["b"], "p-open"))
               and set(i["b"].t1.closeds) | set(i["b"].t2.closeds)
               <= set(family(i["b"], "p-closed"))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "sec1-popen-inclusion", "under inclusion the p-open family is exactly "
    "tau_2", spaces, lambda i: incl(i["b"]),
    lambda i: (family(i["b"], "p-open") == i["b"].t2.opens
               and family(i["b"], "p-closed") == i["b"].t2.closeds),
    universe="bispaces", cheap=True))


def _nd_diagram(i):
    b = i["b"]
    for a in subsets_canonical(b.n):
        nd21 = nd_member(b, 2, 1, a)
        if nd21 and not (nd_member(b, 2, 2, a) and nd_member(b, 1, 1, a)):
            return False
        if nd_member(b, 2, 2, a) and not nd_member(b, 1, 2, a):
            return False
        if nd_member(b, 1, 1, a) and not nd_member(b, 1, 2, a):
            return False
    return True


register(TheoremCheck(
    "sec1-nd-diagram", "under inclusion: the four-corner nowhere-dense "
    "inclusion diagram", spaces, lambda i: incl(i["b"]), _nd_diagram,
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "sec1-bd-S", "S-related topologies share one boundary family",
    spaces, lambda i: relS(i["b"]),
    lambda i: family(i["b"], "bd.1") == family(i["b"], "bd.2"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "sec1-frontier-pclosed", "mixed frontiers are p-closed",
    spaces, lambda i: True,
    lambda i: all(
        (i["b"].t1.cl_table[f] & i["b"].t2.cl_table[f]) == f
        for a in subsets_canonical(i["b"].n)
        for f in (frontier_ij(i["b"], 1, 2, a), frontier_ij(i["b"], 2, 1, a))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "sec1-pind0-chars", "base-of-other-closed-sets equals the empty-"
    "partition characterization (small)",
    spaces, lambda i: True,
    lambda i: dim.p_ind_zero(i["b"]) == dim.p_ind_zero_by_partitions(i["b"]),
    universe="bispaces"))

register(TheoremCheck(
    "sec1-pInd0-chars", "shrinking-neighborhood form equals the empty-"
    "partition characterization (large)",
    spaces, lambda i: True,
    lambda i: dim.p_Ind_zero(i["b"]) == dim.p_Ind_zero_by_partitions(i["b"]),
    universe="bispaces"))


def _point_pairs(b):
    for i in (1, 2):
        for a in b.top(i).closeds:
            if a == 0:
                continue
            for x in range(b.n):
                if not a & (1 << x):
                    yield i, x, a


def _frontier_partition_point(inst):
    b = inst["b"]
    full = full_mask(b.n)
    for i, x, a in _point_pairs(b):
        j = 3 - i
        for u in b.top(i).opens:
            if u & (1 << x) and b.top(j).cl_table[u] & a == 0:
                t = frontier_ij(b, j, i, u)
                if not dim.is_partition(b, t, dim.PointPair(x, a, i)):
                    return False
        # converse: every partition contains the frontier of its i-half
        for t in family(b, "p-closed"):
            rest = full ^ t
            for h1 in b.t1.opens:
                if h1 == 0 or h1 & ~rest:
                    continue
                h2 = rest ^ h1
                if h2 == 0 or h1 & h2 or not b.t2.is_open(h2):
                    continue
                hx, ha = (h1, h2) if i == 1 else (h2, h1)
                if hx & (1 << x) and a & ~ha == 0:
                    if frontier_ij(b, j, i, hx) & ~t:
                        return False
    return True


register(TheoremCheck(
    "def-1.4-frontier-partition", "small-dimension pairs: frontiers of "
    "separating neighborhoods are partitions, and partitions contain the "
    "splitting frontier", spaces, lambda i: True, _frontier_partition_point,
    universe="bispaces"))


def _frontier_partition_set(inst):
    b = inst["b"]
    full = full_mask(b.n)
    pairs = [(a, c) for a in b.t1.closeds if a
             for c in b.t2.closeds if c and not a & c]
    for a, c in pairs:
        for u in b.t2.opens:  # 2-open U(A) with 1-closure avoiding B
            if a & ~u == 0 and b.t1.cl_table[u] & c == 0:
                if not dim.is_partition(b, frontier_ij(b, 1, 2, u),
                                        dim.SetPair(a, c)):
                    return False
        for u in b.t1.opens:  # 1-open U(B) with 2-closure avoiding A
            if c & ~u == 0 and b.t2.cl_table[u] & a == 0:
                if not dim.is_partition(b, frontier_ij(b, 2, 1, u),
                                        dim.SetPair(a, c)):
                    return False
        for t in family(b, "p-closed"):
            rest = full ^ t
            for h1 in b.t1.opens:
                if h1 == 0 or h1 & ~rest:
                    continue
                h2 = rest ^ h1
                if h2 == 0 or h1 & h2 or not b.t2.is_open(h2):
                    continue
                if a & ~h2 == 0 and c & ~h1 == 0:
                    if (frontier_ij(b, 2, 1, h1) & ~t
                            or frontier_ij(b, 1, 2, h2) & ~t):
                        return False
    return True


register(TheoremCheck(
    "def-1.5-frontier-partition", "large-dimension pairs: the analogous "
    "frontier/partition facts", spaces, lambda i: True,
    _frontier_partition_set, universe="bispaces"))


# ===================================================================== §2

def _prop21(i):
    b = i["b"]
    for a in b.t2.opens:
        for c in b.t1.opens:
            if not p_separated(b, a & ~c, c & ~a):
                return False
    for a in b.t1.closeds:
        for c in b.t2.closeds:
            if not p_separated(b, a & ~c, c & ~a):
                return False
    return True


register(TheoremCheck(
    "prop-2.1", "differences of a 2-open and a 1-open set (and the closed "
    "duals) are p-separated", spaces, lambda i: True, _prop21,
    universe="bispaces", cheap=True))


def _rel_cl_formula(b, a, y, z):
    return ((b.t1.cl_table[a & y] & y) | (b.t2.cl_table[a & z] & z))


register(TheoremCheck(
    "prop-2.3", "p-separated cover halves reduce the D-closure to glued "
    "relative closures",
    space_covers,
    lambda i: p_separated(i["b"], i["y"] & ~i["z"], i["z"] & ~i["y"]),
    lambda i: all(
        d_closure(i["b"], a, CoverPair(i["y"], i["z"], i["b"].n))
        == _rel_cl_formula(i["b"], a, i["y"], i["z"])
        for a in subsets_canonical(i["b"].n)),
    universe="space x cover pairs"))

register(TheoremCheck(
    "cor-2.4", "2-open/1-open (or 1-closed/2-closed) cover halves reduce "
    "the D-closure the same way",
    space_covers,
    lambda i: ((i["b"].t2.is_open(i["y"]) and i["b"].t1.is_open(i["z"]))
               or (i["b"].t1.is_closed(i["y"])
                   and i["b"].t2.is_closed(i["z"]))),
    lambda i: all(
        d_closure(i["b"], a, CoverPair(i["y"], i["z"], i["b"].n))
        == _rel_cl_formula(i["b"], a, i["y"], i["z"])
        for a in subsets_canonical(i["b"].n)),
    universe="space x cover pairs"))

register(TheoremCheck(
    "cor-2.5", "under p-separated halves, D-closedness means both traces "
    "are relatively closed",
    space_covers,
    lambda i: p_separated(i["b"], i["y"] & ~i["z"], i["z"] & ~i["y"]),
    lambda i: all(
        (d_closure(i["b"], a, CoverPair(i["y"], i["z"], i["b"].n)) == a)
        == ((i["b"].t1.cl_table[a & i["y"]] & i["y"]) == (a & i["y"])
            and (i["b"].t2.cl_table[a & i["z"]] & i["z"]) == (a & i["z"]))
        for a in subsets_canonical(i["b"].n)),
    universe="space x cover pairs"))


def _cor26(i):
    b, y, z = i["b"], i["y"], i["z"]
    n = b.n
    full = full_mask(n)
    p = CoverPair(y, z, n)
    q = CoverPair(z, y, n)
    cl1, cl2 = b.t1.cl_table, b.t2.cl_table
    for a in subsets_canonical(n):
        c12 = ij_closure_pair(b, 1, 2, a, p)
        c21 = ij_closure_pair(b, 2, 1, a, q)
        if a & ~(c12 & c21):                                          # (1)
            return False
        if (c12 | c21) != cl1[a & y] | cl2[a & z]:                    # (2)
            return False
        if y & z == 0 and not (c12 == c21 == cl1[a & y] | cl2[a & z]):  # (3)
            return False
        if y == 0 and not (c12 == cl2[a]                              # (4)
                           and ij_closure_pair(b, 2, 1, a, q) == cl2[a]):
            return False
        if z == 0 and not (c12 == cl1[a]                              # (5)
                           and ij_closure_pair(b, 2, 1, a, q) == cl1[a]):
            return False
        if a & ~y == 0 and c12 != cl1[a]:                             # (6)
            return False
        if a & ~(y & ~z) == 0 and not (c12 == cl1[a] == c21):
            return False
        if a & ~z == 0 and c21 != cl2[a]:                             # (7)
            return False
        if a & ~(z & ~y) == 0 and not (c12 == cl2[a] == c21):
            return False
        if y == full and z == full:                                   # (8)
            if not (c12 == cl1[a] and c21 == cl2[a]
                    and d_closure(b, a, p) == (cl1[a] | cl2[a])):
                return False
        if incl(b):
            both = c12 & c21                                          # (10)
            if cl2[a] & ~both or both & ~cl1[a]:
                return False
            if a & ~y == 0:                                           # (11)
                if cl2[a] & ~c21 or c21 & ~c12 or c12 != cl1[a]:
                    return False
            if a & ~z == 0:                                           # (12)
                if cl2[a] != c21 or c21 & ~c12 or c12 & ~cl1[a]:
                    return False
            if y == full and z == full and d_closure(b, a, p) != cl1[a]:
                return False                                          # (13)
    return True


register(TheoremCheck(
    "cor-2.6", "the closure-pair identity suite (items 1-13)",
    space_covers, lambda i: True, _cor26, universe="space x cover pairs"))


def _cor26_frontier(i):
    b = i["b"]
    full = full_mask(b.n)
    for a in subsets_canonical(b.n):
        p = CoverPair(a, full ^ a, b.n)
        q = CoverPair(full ^ a, a, b.n)
        for ii, jj in ((1, 2), (2, 1)):
            lhs = frontier_ij(b, ii, jj, a)
            rhs = (ij_closure_pair(b, ii, jj, a, p)
                   & ij_closure_pair(b, jj, ii, full ^ a, q))
            if lhs != rhs:
                return False
    return True


register(TheoremCheck(
    "cor-2.6.9", "frontiers factor through the closure pair of (A, X-A)",
    spaces, lambda i: True, _cor26_frontier, universe="bispaces",
    cheap=True))

register(TheoremCheck(
    "prop-2.7", "hereditary p-normality, p-normality of p-open subspaces, "
    "and separation of p-separated pairs coincide",
    spaces, lambda i: True,
    lambda i: (prop_check(i["b"], "her-normal.p")[0]
               == p_open_subsets_p_normal(i["b"])[0]
               == p_separated_pairs_split(i["b"])[0]),
    universe="bispaces"))

register(TheoremCheck(
    "cor-2.8", "coupled + hereditarily p-normal implies hereditarily "
    "1-normal",
    spaces, lambda i: (incl(i["b"]) and relC(i["b"])
                       and holds(i["b"], "her-normal.p")),
    lambda i: holds(i["b"], "her-normal.1"), universe="bispaces"))

register(TheoremCheck(
    "cor-2.9", "near + hereditarily 2-normal implies hereditarily p- and "
    "1-normal",
    spaces, lambda i: (incl(i["b"]) and relN(i["b"])
                       and holds(i["b"], "her-normal.2")),
    lambda i: (holds(i["b"], "her-normal.p")
               and holds(i["b"], "her-normal.1")),
    universe="bispaces"))

register(TheoremCheck(
    "prop-2.11", "p-hypernormal iff p-extremally disconnected and "
    "hereditarily p-normal",
    spaces, lambda i: True,
    lambda i: holds(i["b"], "hypernormal.p")
    == (holds(i["b"], "extr-disc.p") and holds(i["b"], "her-normal.p")),
    universe="bispaces"))

register(TheoremCheck(
    "cor-2.12.1", "p-hypernormal implies large bidimension zero",
    spaces, lambda i: holds(i["b"], "hypernormal.p"),
    lambda i: dim.p_Ind_zero(i["b"]), universe="bispaces"))

register(TheoremCheck(
    "cor-2.12.2", "p-hypernormal + double T1 implies both bidimensions "
    "zero",
    spaces, lambda i: holds(i["b"], "hypernormal.p") and holds(i["b"], "t1.d"),
    lambda i: dim.p_ind_zero(i["b"]) and dim.p_Ind_zero(i["b"]),
    universe="bispaces"))

register(TheoremCheck(
    "cor-2.12.3", "adding coupled inclusion gives 1-hypernormality",
    spaces, lambda i: (holds(i["b"], "hypernormal.p") and incl(i["b"])
                       and relC(i["b"])),
    lambda i: holds(i["b"], "hypernormal.1"), universe="bispaces"))

register(TheoremCheck(
    "cor-2.12.4", "and the single/pairwise large dimensions vanish",
    spaces, lambda i: (holds(i["b"], "hypernormal.p") and incl(i["b"])
                       and relC(i["b"])),
    lambda i: (dim.top_Ind(i["b"].t1) <= 0 and dim.p_Ind_zero(i["b"])
               and _imp(holds(i["b"], "t1.1"),
                        dim.top_ind(i["b"].t1) <= 0
                        and dim.top_ind(i["b"].t2) <= 0
                        and dim.p_ind_zero(i["b"]))),
    universe="bispaces"))

register(TheoremCheck(
    "cor-2.13", "near inclusion: 2-hypernormal forces d-, p- and "
    "1-hypernormality",
    spaces, lambda i: incl(i["b"]) and relN(i["b"]),
    lambda i: (_imp(holds(i["b"], "hypernormal.2"),
                    holds(i["b"], "hypernormal.d")
                    and holds(i["b"], "hypernormal.p"))
               and _imp(holds(i["b"], "hypernormal.p"),
                        holds(i["b"], "hypernormal.1"))),
    universe="bispaces"))

register(TheoremCheck(
    "rem-2.14.1", "closed subspaces of a normal space are WS-supernormal "
    "in it",
    diag_subsets,
    lambda i: holds(i["b"], "normal.1") and i["b"].t1.is_closed(i["y"]),
    lambda i: rel_holds(i["b"], i["y"], "ws-supernormal.top"),
    universe="topologies x subsets"))

register(TheoremCheck(
    "rem-2.14.2", "WS-supernormal subspaces are normal in themselves",
    diag_subsets,
    lambda i: rel_holds(i["b"], i["y"], "ws-supernormal.top"),
    lambda i: normal_in_itself(i["b"], i["y"], 1),
    universe="topologies x subsets"))


def _rem216(i):
    b, y = i["b"], i["y"]
    if not holds(b, "normal.p"):
        return True
    for ii, jj in ((1, 2), (2, 1)):
        if b.top(ii).is_closed(y) and not rel_holds(
                b, y, f"ws-supernormal.{ii}{jj}"):
            return False
    if b.t1.is_closed(y) and b.t2.is_closed(y):
        if not rel_holds(b, y, "ws-supernormal.p"):
            return False
    if incl(b) and b.t1.is_closed(y):
        if not rel_holds(b, y, "ws-supernormal.p"):
            return False
    return True


register(TheoremCheck(
    "rem-2.16", "in a p-normal space, i-closed subspaces are (i,j)-WS-"
    "supernormal (and d-closed, or 1-closed under inclusion, pairwise so)",
    space_subsets, lambda i: holds(i["b"], "normal.p"), _rem216,
    universe="space x subsets"))


def _prop218_1(i):
    b, y = i["b"], i["y"]
    w2 = rel_holds(b, y, "ws-supernormal.2")
    w12 = rel_holds(b, y, "ws-supernormal.12")
    w21 = rel_holds(b, y, "ws-supernormal.21")
    w1 = rel_holds(b, y, "ws-supernormal.1")
    return (_imp(w2, w12) and _imp(w2, w21) and _imp(w21, w1)
            and _imp(w12, w1))


register(TheoremCheck(
    "prop-2.18.1", "near inclusion, 2-open Y: the WS-supernormality "
    "square",
    space_subsets,
    lambda i: (incl(i["b"]) and relN(i["b"]) and i["b"].t2.is_open(i["y"])),
    _prop218_1, universe="space x subsets"))


def _prop218_2(i):
    b, y = i["b"], i["y"]
    sp = rel_holds(b, y, "strong-normal.p")
    if relC(b) and sp and not rel_holds(b, y, "strong-normal.1"):
        return False
    if relN(b):
        s2 = rel_holds(b, y, "strong-normal.2")
        sd = rel_holds(b, y, "strong-normal.d")
        s1 = rel_holds(b, y, "strong-normal.1")
        if not (_imp(s2, sd) and _imp(s2, sp) and _imp(sd, s1)
                and _imp(sp, s1)):
            return False
    return True


register(TheoremCheck(
    "prop-2.18.2", "coupled/near inclusion: the strong-normality "
    "implications",
    space_subsets, lambda i: incl(i["b"]), _prop218_2,
    universe="space x subsets"))


def _prop219(i):
    b, y = i["b"], i["y"]
    for ii, jj in ((1, 2), (2, 1)):
        if b.top(ii).is_closed(y) and rel_holds(b, y, "strong-normal.p"):
            if not rel_holds(b, y, f"ws-supernormal.{ii}{jj}"):
                return False
        if b.top(jj).is_open(y) and rel_holds(
                b, y, f"ws-supernormal.{ii}{jj}"):
            if not rel_holds(b, y, "strong-normal.p"):
                return False
    return True


register(TheoremCheck(
    "prop-2.19", "closed carriers turn p-strong normality into WS-"
    "supernormality; open carriers turn it back",
    space_subsets, lambda i: True, _prop219, universe="space x subsets"))


def _cor220(i):
    b, y = i["b"], i["y"]
    closed_both = b.t1.is_closed(y) and b.t2.is_closed(y)
    open_both = b.t1.is_open(y) and b.t2.is_open(y)
    sp = rel_holds(b, y, "strong-normal.p")
    wp = rel_holds(b, y, "ws-supernormal.p")
    if closed_both and sp and not wp:
        return False
    if open_both and wp and not sp:
        return False
    if closed_both and open_both:
        vals = {sp, wp, rel_holds(b, y, "ws-supernormal.12"),
                rel_holds(b, y, "ws-supernormal.21")}
        if len(vals) != 1:
            return False
    if incl(b) and b.t1.is_open(y) and b.t1.is_closed(y):
        vals = {sp, wp, rel_holds(b, y, "ws-supernormal.12"),
                rel_holds(b, y, "ws-supernormal.21")}
        if len(vals) != 1:
            return False
    return True


register(TheoremCheck(
    "cor-2.20", "bi-clopen carriers make all four relative normality "
    "notions coincide",
    space_subsets, lambda i: True, _cor220, universe="space x subsets"))


def _cor221(i):
    b, y = i["b"], i["y"]
    ws = rel_holds(b, y, "ws-supernormal.top")
    st = rel_holds(b, y, "strong-normal.top")
    if b.t1.is_closed(y) and st and not ws:
        return False
    if b.t1.is_open(y) and ws and not st:
        return False
    if b.t1.is_open(y) and b.t1.is_closed(y) and ws != st:
        return False
    return True


register(TheoremCheck(
    "cor-2.21", "topological case: closed carriers upgrade strong "
    "normality, open carriers reverse it, clopen carriers match them",
    diag_subsets, lambda i: True, _cor221, universe="topologies x subsets"))


def _sum_cover(b, member_filter, dim_zero):
    """Union of all non-empty p-closed sets that pass member_filter and
    whose subspace has the requested zero dimension."""
    cover = 0
    for f in family(b, "p-closed"):
        if f == 0:
            continue
        if not member_filter(f):
            continue
        if dim_zero(_sub(b, f)):
            cover |= f
    return cover


def _thm223_hyp(i):
    b = i["b"]
    if not holds(b, "normal.p"):
        return False
    cover = _sum_cover(b, lambda f: rel_holds(b, f, "ws-supernormal.p"),
                       dim.p_ind_zero)
    return cover == full_mask(b.n)


register(TheoremCheck(
    "thm-2.23", "sum theorem: p-normal + a cover by p-WS-supernormal "
    "p-closed pieces of small bidimension zero forces large bidimension "
    "zero",
    spaces, _thm223_hyp, lambda i: dim.p_Ind_zero(i["b"]),
    universe="bispaces"))


def _cor224_hyp(i):
    b = i["b"]
    if not holds(b, "normal.p"):
        return False
    cover = _sum_cover(b, lambda f: rel_holds(b, f, "ws-supernormal.p"),
                       dim.p_Ind_zero)
    return cover == full_mask(b.n)


register(TheoremCheck(
    "cor-2.24", "sum theorem, large-dimension pieces",
    spaces, _cor224_hyp, lambda i: dim.p_Ind_zero(i["b"]),
    universe="bispaces"))


def _cor225_hyp(small):
    def hyp(i):
        b = i["b"]
        if not (incl(b) and holds(b, "normal.p")):
            return False
        zero = dim.p_ind_zero if small else dim.p_Ind_zero
        cover = 0
        for f in b.t2.closeds:
            if f and rel_holds(b, f, "ws-supernormal.12") and zero(_sub(b, f)):
                cover |= f
        return cover == full_mask(b.n)
    return hyp


register(TheoremCheck(
    "cor-2.25a", "sum theorem under inclusion, 2-closed pieces, small "
    "zero pieces", spaces, _cor225_hyp(True),
    lambda i: dim.p_Ind_zero(i["b"]), universe="bispaces"))

register(TheoremCheck(
    "cor-2.25b", "sum theorem under inclusion, 2-closed pieces, large "
    "zero pieces", spaces, _cor225_hyp(False),
    lambda i: dim.p_Ind_zero(i["b"]), universe="bispaces"))


def _cor226_hyp(small):
    def hyp(i):
        b = i["b"]
        if not holds(b, "normal.p"):
            return False
        good = [f for f in family(b, "p-closed")
                if f and rel_holds(b, f, "ws-supernormal.p")]
        zero = dim.p_ind_zero if small else dim.p_Ind_zero
        cover = 0
        for m in subsets_canonical(b.n)[1:]:
            union = 0
            for g in good:
                if g & ~m == 0:
                    union |= g
            if union == m and zero(_sub(b, m)):
                cover |= m
        return cover == full_mask(b.n)
    return hyp


register(TheoremCheck(
    "cor-2.26a", "sum theorem for unions of p-WS-supernormal p-closed "
    "blocks, small zero blocks", spaces, _cor226_hyp(True),
    lambda i: dim.p_Ind_zero(i["b"]), universe="bispaces"))

register(TheoremCheck(
    "cor-2.26b", "same with large zero blocks", spaces, _cor226_hyp(False),
    lambda i: dim.p_Ind_zero(i["b"]), universe="bispaces"))

register(TheoremCheck(
    "cor-2.26c", "adding double T1 also forces small bidimension zero",
    spaces,
    lambda i: _cor226_hyp(False)(i) and holds(i["b"], "t1.d"),
    lambda i: dim.p_ind_zero(i["b"]), universe="bispaces"))


def _cor227(n):
    for b in space_universe(n):
        if not (incl(b) and holds(b, "t1.d") and holds(b, "normal.p")):
            continue
        full = full_mask(n)
        for y in subsets_canonical(n)[1:]:
            for z in subsets_canonical(n)[1:]:
                if y | z == full and (b.t1.is_open(y) or b.t1.is_open(z)):
                    yield {"b": b, "y": y, "z": z}


register(TheoremCheck(
    "cor-2.27", "double T1 + p-normal + inclusion: two large-zero halves, "
    "one 1-open, give large bidimension zero",
    _cor227,
    lambda i: (dim.p_Ind_zero(_sub(i["b"], i["y"]))
               and dim.p_Ind_zero(_sub(i["b"], i["z"]))),
    lambda i: dim.p_Ind_zero(i["b"]),
    universe="filtered space x cover pairs"))

register(TheoremCheck(
    "prop-2.28.1", "coupled + (2,1)-regular forces tau_2 inside tau_1 "
    "(zero case of the dimension inequality)",
    spaces, lambda i: relC(i["b"]) and holds(i["b"], "regular.21"),
    lambda i: (i["b"].t2.opens_set <= i["b"].t1.opens_set
               and _imp(dim.top_ind(i["b"].t2) <= 0,
                        dim.ij_ind_zero(i["b"], 2, 1))),
    universe="bispaces"))

register(TheoremCheck(
    "prop-2.28.2", "near + 2-regular forces tau_2 inside tau_1 (zero case "
    "of the mirrored inequality)",
    spaces, lambda i: relN(i["b"]) and holds(i["b"], "regular.2"),
    lambda i: (i["b"].t2.opens_set <= i["b"].t1.opens_set
               and _imp(dim.ij_ind_zero(i["b"], 1, 2),
                        dim.top_ind(i["b"].t1) <= 0)),
    universe="bispaces"))

register(TheoremCheck(
    "prop-2.28.3", "with inclusion on top, the topologies coincide",
    spaces,
    lambda i: ((incl(i["b"]) and relC(i["b"]) and holds(i["b"], "regular.21"))
               or (incl(i["b"]) and relN(i["b"])
                   and holds(i["b"], "regular.2"))),
    lambda i: i["b"].t1 == i["b"].t2, universe="bispaces"))

register(TheoremCheck(
    "prop-2.28.4", "coupled inclusion + 1-T1 + p-normal also collapses the "
    "pair",
    spaces,
    lambda i: (incl(i["b"]) and relC(i["b"]) and holds(i["b"], "t1.1")
               and holds(i["b"], "normal.p")),
    lambda i: i["b"].t1 == i["b"].t2, universe="bispaces"))


def _aind_instances(n):
    from .enumeration import enum_topologies
    for t in enum_topologies(n):
        yield {"t2": t}


def _thm230_1(i):
    t2 = i["t2"]
    k, _ = dim.aind_value(t2, "small")
    if k is None:
        return True
    for t1 in dim.aind_witnesses(t2, k, "small"):
        pair = BiSpace(t1, t2)
        if not (holds(pair, "regular.d") and holds(pair, "regular.p")):
            return False
        if k == 0 and not dim.ij_ind_zero(pair, 1, 2):
            return False
    return True


register(TheoremCheck(
    "thm-2.30.1", "almost-dimension witnesses give d+p-regular pairs "
    "(and mixed small dimension zero at level zero)",
    _aind_instances, lambda i: dim.aind_value(i["t2"], "small")[0] is not None,
    _thm230_1, universe="topologies"))


def _thm230_2(i):
    t2 = i["t2"]
    k, _ = dim.aind_value(t2, "large")
    if k is None:
        return True
    for t1 in dim.aind_witnesses(t2, k, "large"):
        pair = BiSpace(t1, t2)
        if not holds(pair, "normal.1"):
            return False
        if holds(pair, "t1.1"):
            ks, _ = dim.aind_value(t2, "small")
            if ks is None or ks > k:
                return False
    return True


register(TheoremCheck(
    "thm-2.30.2", "large almost-dimension witnesses give 1-normal pairs; "
    "1-T1 bounds the small variant",
    _aind_instances, lambda i: dim.aind_value(i["t2"], "large")[0] is not None,
    _thm230_2, universe="topologies"))


def _thm230_3(i):
    t2 = i["t2"]
    k, _ = dim.aind_value(t2, "small")
    if k is None:
        return True
    for t1 in dim.aind_witnesses(t2, k, "small"):
        for mid in dim.subtopologies(t2):
            if not (t1.opens_set <= mid.opens_set):
                continue
            outer = BiSpace(mid, t2)
            inner = BiSpace(t1, mid)
            if not (holds(outer, "regular.21") and holds(outer, "regular.2")):
                return False
            if not (holds(inner, "regular.1") and holds(inner, "regular.12")):
                return False
            if k == 0 and not dim.ij_ind_zero(inner, 1, 2):
                return False
    return True


register(TheoremCheck(
    "thm-2.30.3", "every intermediate topology keeps the regularity "
    "pattern of an almost-dimension witness",
    _aind_instances, lambda i: dim.aind_value(i["t2"], "small")[0] is not None,
    _thm230_3, universe="topologies"))


# ===================================================================== §3

register(TheoremCheck(
    "def-3.1-square", "under inclusion: the submaximality square",
    spaces, lambda i: incl(i["b"]),
    lambda i: (_imp(holds(i["b"], "submaximal.1"), holds(i["b"], "submaximal.21"))
               and _imp(holds(i["b"], "submaximal.1"),
                        holds(i["b"], "submaximal.12"))
               and _imp(holds(i["b"], "submaximal.21"),
                        holds(i["b"], "submaximal.2"))
               and _imp(holds(i["b"], "submaximal.12"),
                        holds(i["b"], "submaximal.2"))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "def-3.1-nodec", "under inclusion, any submaximality variant forces "
    "2-nodec",
    spaces,
    lambda i: incl(i["b"]) and any(
        holds(i["b"], p) for p in ("submaximal.1", "submaximal.2",
                                   "submaximal.12", "submaximal.21")),
    lambda i: holds(i["b"], "nodec.2"), universe="bispaces", cheap=True))

register(TheoremCheck(
    "thm-3.2", "the five submaximality conditions agree, both directions",
    spaces, lambda i: True,
    lambda i: (len(set(submaximal_equivalents(i["b"], 1, 2))) == 1
               and len(set(submaximal_equivalents(i["b"], 2, 1))) == 1),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "note-3.2-S", "S-related: mixed and single submaximality collapse and "
    "force nodec",
    spaces, lambda i: relS(i["b"]),
    lambda i: (holds(i["b"], "submaximal.12") == holds(i["b"], "submaximal.1")
               and holds(i["b"], "submaximal.21")
               == holds(i["b"], "submaximal.2")
               and _imp(holds(i["b"], "submaximal.1"),
                        holds(i["b"], "nodec.1"))
               and _imp(holds(i["b"], "submaximal.2"),
                        holds(i["b"], "nodec.2"))),
    universe="bispaces", cheap=True))


def _cor33_cond2(b, i, j):
    ti, tj = b.top(i), b.top(j)
    return all(not ((tj.cl_table[a] & ~a) & ti.derived(tj.cl_table[a] & ~a))
               for a in subsets_canonical(b.n))


def _cor33(sfx):
    i, j = (1, 2) if sfx == "12" else (2, 1)

    def concl(inst):
        b = inst["b"]
        c1 = holds(b, f"bd-discrete.{sfx}")
        c2 = _cor33_cond2(b, i, j)
        if c1 != c2:
            return False
        if holds(b, f"submaximal.{sfx}") and not c1:
            return False
        if b.top(j).isolated(full_mask(b.n)) == 0:
            if c1 != holds(b, f"submaximal.{sfx}"):
                return False
        return True
    return concl


register(TheoremCheck(
    "cor-3.3.12", "2-T1: boundary-discreteness criteria for the (1,2) "
    "direction", spaces, lambda i: holds(i["b"], "t1.2"), _cor33("12"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.3.21", "1-T1: boundary-discreteness criteria for the (2,1) "
    "direction", spaces, lambda i: holds(i["b"], "t1.1"), _cor33("21"),
    universe="bispaces", cheap=True))


def _cor35(inst):
    b = inst["b"]
    full = full_mask(b.n)
    masks = subsets_canonical(b.n)
    t1, t2 = b.t1, b.t2
    c1 = holds(b, "submaximal.21")
    c2 = all(lc_member(b, 2, 1, full ^ a) for a in masks)
    c3 = all(not (t1.int_table[a] == 0 and a not in t2.closeds_set)
             for a in masks)
    c4 = holds(b, "bd-discrete.21")
    c5 = all((t1.cl_table[a] & ~a) in t2.closeds_set for a in masks)
    c6 = _cor33_cond2(b, 2, 1)
    c7 = all(not (t1.cl_table[a] == full and a not in t2.opens_set)
             for a in masks)
    return len({c1, c2, c3, c4, c5, c6, c7}) == 1


register(TheoremCheck(
    "cor-3.5", "1-T1 + inclusion: the seven (2,1)-submaximality "
    "conditions agree",
    spaces, lambda i: holds(i["b"], "t1.1") and incl(i["b"]), _cor35,
    universe="bispaces", cheap=True))


def _cor36(sfx):
    i, j = (1, 2) if sfx == "12" else (2, 1)

    def concl(inst):
        b, y = inst["b"], inst["y"]
        if not holds(_sub(b, y), f"submaximal.{sfx}"):
            return False
        tj, ti = b.top(j), b.top(i)
        if (not y & tj.derived(y)) and (y & tj.isolated(full_mask(b.n)) == 0):
            if not ti.is_closed(y):
                return False
        return True
    return concl


register(TheoremCheck(
    "cor-3.6.12", "subspaces inherit (1,2)-submaximality; j-discrete "
    "carriers missing the isolated points are i-closed",
    space_subsets, lambda i: holds(i["b"], "submaximal.12"), _cor36("12"),
    universe="space x subsets"))

register(TheoremCheck(
    "cor-3.6.21", "the (2,1) direction of the same",
    space_subsets, lambda i: holds(i["b"], "submaximal.21"), _cor36("21"),
    universe="space x subsets"))

register(TheoremCheck(
    "cor-3.7.1", "inclusion: 1-submaximal forces d-nodec and p-nodec",
    spaces, lambda i: incl(i["b"]) and holds(i["b"], "submaximal.1"),
    lambda i: holds(i["b"], "nodec.d") and holds(i["b"], "nodec.p"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.7.2", "inclusion: (1,2)-submaximal forces (2,1)-nodec",
    spaces, lambda i: incl(i["b"]) and holds(i["b"], "submaximal.12"),
    lambda i: holds(i["b"], "nodec.21"), universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.7.3", "coupled inclusion: (1,2)-submaximal forces 1-nodec",
    spaces,
    lambda i: (incl(i["b"]) and relC(i["b"])
               and holds(i["b"], "submaximal.12")),
    lambda i: holds(i["b"], "nodec.1"), universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.7.4", "near or S inclusion: (1,2)-submaximal forces d-nodec "
    "and p-nodec",
    spaces,
    lambda i: (incl(i["b"]) and (relN(i["b"]) or relS(i["b"]))
               and holds(i["b"], "submaximal.12")),
    lambda i: holds(i["b"], "nodec.d") and holds(i["b"], "nodec.p"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "def-3.8-square", "under inclusion: the strong-sigma-discreteness "
    "square",
    spaces, lambda i: incl(i["b"]),
    lambda i: (_imp(holds(i["b"], "str-sigma-disc.1"),
                    holds(i["b"], "str-sigma-disc.21"))
               and _imp(holds(i["b"], "str-sigma-disc.1"),
                        holds(i["b"], "str-sigma-disc.12"))
               and _imp(holds(i["b"], "str-sigma-disc.21"),
                        holds(i["b"], "str-sigma-disc.2"))
               and _imp(holds(i["b"], "str-sigma-disc.12"),
                        holds(i["b"], "str-sigma-disc.2"))),
    universe="bispaces", cheap=True))


def _no_open_ssd(b, open_side, i, j):
    """No non-empty open (by the given side) subset is a finite union of
    ambient-j-closed i-discrete pieces."""
    from .properties import subset_str_sigma_disc
    for u in b.top(open_side).opens:
        if u and subset_str_sigma_disc(b, i, j, u):
            return False
    return True


register(TheoremCheck(
    "thm-3.9", "(1,2)-nodec without (1,2)-sigma-discrete 1-open pieces is "
    "(1,2)-Baire and 1-Baire",
    spaces,
    lambda i: (incl(i["b"]) and holds(i["b"], "nodec.12")
               and _no_open_ssd(i["b"], 1, 1, 2)),
    lambda i: holds(i["b"], "baire.12") and holds(i["b"], "baire.1"),
    universe="bispaces"))


def _space_opens(n, side):
    for b in space_universe(n):
        for u in b.top(side).opens:
            if u:
                yield {"b": b, "u": u}


register(TheoremCheck(
    "cor-3.10.1", "coupled inclusion, (1,2)-nodec: sigma-discreteness of a "
    "1-open set spreads to its closure (which both closures share)",
    lambda n: _space_opens(n, 1),
    lambda i: (incl(i["b"]) and relC(i["b"]) and holds(i["b"], "nodec.12")
               and subset_str_sigma_disc(i["b"], 1, 2, i["u"])),
    lambda i: (i["b"].t2.cl_table[i["u"]] == i["b"].t1.cl_table[i["u"]]
               and subset_str_sigma_disc(i["b"], 2, 2,
                                         i["b"].t2.cl_table[i["u"]])),
    universe="space x non-empty 1-opens"))

register(TheoremCheck(
    "cor-3.10.2a", "coupled inclusion, (2,1)-nodec without (2,1)-sigma-"
    "discrete 1-open pieces: a 1-Baire space",
    spaces,
    lambda i: (incl(i["b"]) and relC(i["b"]) and holds(i["b"], "nodec.21")
               and _no_open_ssd(i["b"], 1, 2, 1)),
    lambda i: holds(i["b"], "baire.1"), universe="bispaces"))

register(TheoremCheck(
    "cor-3.10.2b", "same with 2-open pieces: almost (2,1)-Baire",
    spaces,
    lambda i: (incl(i["b"]) and relC(i["b"]) and holds(i["b"], "nodec.21")
               and _no_open_ssd(i["b"], 2, 2, 1)),
    lambda i: holds(i["b"], "almost-baire.21"), universe="bispaces"))

register(TheoremCheck(
    "prop-3.11", "p-normal coupled inclusion, (1,2)-nodec: (1,2)-sigma-"
    "discreteness also spreads to the closure",
    lambda n: _space_opens(n, 1),
    lambda i: (holds(i["b"], "normal.p") and incl(i["b"]) and relC(i["b"])
               and holds(i["b"], "nodec.12")
               and subset_str_sigma_disc(i["b"], 1, 2, i["u"])),
    lambda i: subset_str_sigma_disc(i["b"], 1, 2,
                                    i["b"].t2.cl_table[i["u"]]),
    universe="space x non-empty 1-opens"))


def _prop312_1(inst):
    b, y = inst["b"], inst["y"]
    t1, t2 = b.t1, b.t2
    z = y & ~t2.isolated(y)
    if z & ~t2.cl_table[t1.int_table[y]]:
        return False
    for a in t1.opens:
        if a & ~y:
            continue
        rest = y & ~a
        bb = rest
        while True:
            if (t2.cl_table[bb] == bb and not bb & t2.derived(bb)
                    and (a | bb) == y):
                return True
            if bb == y:
                break
            bb = (bb + 1) | rest
            if bb & ~y:
                break
    return False


register(TheoremCheck(
    "prop-3.12.1", "(2,1)-submaximal inclusion: subsets lose their "
    "2-isolated part inside the closure of their 1-interior and split "
    "into a 1-open and a 2-closed 2-discrete part",
    space_subsets,
    lambda i: incl(i["b"]) and holds(i["b"], "submaximal.21"),
    _prop312_1, universe="space x subsets"))

register(TheoremCheck(
    "prop-3.12.2", "(2,1)-submaximal inclusion: 2-connected subspaces sit "
    "inside the 2-closure of their 1-interior",
    space_subsets,
    lambda i: (incl(i["b"]) and holds(i["b"], "submaximal.21")
               and i["y"].bit_count() >= 2
               and holds(_sub(i["b"], i["y"]), "connected.2")),
    lambda i: i["y"] & ~i["b"].t2.cl_table[i["b"].t1.int_table[i["y"]]] == 0,
    universe="space x subsets"))


def _all_2closed_ws12(b):
    return all(rel_holds(b, f, "ws-supernormal.12")
               for f in b.t2.closeds if f)


register(TheoremCheck(
    "thm-3.13", "the Baire criterion through relative supernormality of "
    "2-closed sets",
    spaces,
    lambda i: (holds(i["b"], "t1.1") and holds(i["b"], "normal.p")
               and holds(i["b"], "connected.p") and holds(i["b"], "nodec.21")
               and incl(i["b"]) and relC(i["b"])
               and _all_2closed_ws12(i["b"])),
    lambda i: holds(i["b"], "baire.12") and holds(i["b"], "baire.1"),
    universe="bispaces"))


def _lem314_1(n):
    for b in space_universe(n):
        if not incl(b):
            continue
        for f in b.t1.closeds:
            if f == 0:
                continue
            for phi in b.t2.closeds:
                if phi and phi & ~f == 0:
                    yield {"b": b, "f": f, "phi": phi}


register(TheoremCheck(
    "lem-3.14.1", "p-WS-supernormality in the space restricts to "
    "1-closed carriers",
    _lem314_1,
    lambda i: rel_holds(i["b"], i["phi"], "ws-supernormal.p"),
    lambda i: rel_holds(_sub(i["b"], i["f"]),
                        compress(i["phi"], tuple(points(i["f"]))),
                        "ws-supernormal.p"),
    universe="inclusion spaces x closed nests"))

register(TheoremCheck(
    "lem-3.14.2", "a proper 1-closed closure of a 1-open set with small "
    "bidimension zero disconnects the space (finite form: the closure "
    "must be proper, else the indiscrete pair is a counterexample)",
    lambda n: _space_opens(n, 1),
    lambda i: (incl(i["b"])
               and i["b"].t1.cl_table[i["u"]] != full_mask(i["b"].n)
               and dim.p_ind_zero(_sub(i["b"], i["b"].t1.cl_table[i["u"]]))),
    lambda i: not holds(i["b"], "connected.p"),
    universe="space x non-empty 1-opens"))

register(TheoremCheck(
    "cor-3.15", "submaximal variant of the Baire criterion",
    spaces,
    lambda i: (holds(i["b"], "t1.1") and holds(i["b"], "normal.p")
               and holds(i["b"], "connected.p")
               and (holds(i["b"], "submaximal.1")
                    or holds(i["b"], "submaximal.12"))
               and incl(i["b"]) and relC(i["b"])
               and _all_2closed_ws12(i["b"])),
    lambda i: holds(i["b"], "baire.12") and holds(i["b"], "baire.1"),
    universe="bispaces"))

register(TheoremCheck(
    "prop-3.17", "1-T1 inclusion: the I-space square",
    spaces, lambda i: holds(i["b"], "t1.1") and incl(i["b"]),
    lambda i: (_imp(holds(i["b"], "i-space.1"), holds(i["b"], "i-space.21"))
               and _imp(holds(i["b"], "i-space.1"),
                        holds(i["b"], "i-space.12"))
               and _imp(holds(i["b"], "i-space.21"),
                        holds(i["b"], "i-space.2"))
               and _imp(holds(i["b"], "i-space.12"),
                        holds(i["b"], "i-space.2"))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "rem-3.18a", "a non-empty i-I-space is not i-dense-in-itself",
    spaces, lambda i: True,
    lambda i: (_imp(holds(i["b"], "i-space.1"),
                    not holds(i["b"], "dense-in-itself.1"))
               and _imp(holds(i["b"], "i-space.2"),
                        not holds(i["b"], "dense-in-itself.2"))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "rem-3.18b", "under inclusion, any I-space variant leaves the carrier "
    "outside 2-DI",
    spaces,
    lambda i: incl(i["b"]) and any(
        holds(i["b"], p) for p in ("i-space.1", "i-space.2", "i-space.12",
                                   "i-space.21")),
    lambda i: not holds(i["b"], "dense-in-itself.2"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "rem-3.18c", "inclusion + (2,1)-I + 1-DI minus 2-DI: every point is "
    "2-isolated",
    spaces,
    lambda i: (incl(i["b"]) and holds(i["b"], "i-space.21")
               and holds(i["b"], "dense-in-itself.1")
               and not holds(i["b"], "dense-in-itself.2")),
    lambda i: i["b"].t2.derived(full_mask(i["b"].n)) == 0,
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "rem-3.18d", "under inclusion, 1-DI equals p-DI for the whole carrier",
    spaces, lambda i: incl(i["b"]),
    lambda i: holds(i["b"], "dense-in-itself.1")
    == holds(i["b"], "dense-in-itself.p"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "rem-3.18e", "1-T1 inclusion (all finite carriers have finitely many "
    "non-isolated points): every I-space variant holds",
    spaces, lambda i: holds(i["b"], "t1.1") and incl(i["b"]),
    lambda i: all(holds(i["b"], p)
                  for p in ("i-space.1", "i-space.2", "i-space.12",
                            "i-space.21")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.19.0", "under inclusion, 1-scattered and p-scattered agree",
    spaces, lambda i: incl(i["b"]),
    lambda i: holds(i["b"], "scattered.1") == holds(i["b"], "scattered.p"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.19", "for 1-scattered inclusion pairs: 1-I-space, d+p-"
    "submaximality, and 1-nodec coincide",
    spaces, lambda i: incl(i["b"]) and holds(i["b"], "scattered.1"),
    lambda i: (holds(i["b"], "i-space.1")
               == (holds(i["b"], "submaximal.d")
                   and holds(i["b"], "submaximal.p"))
               == holds(i["b"], "nodec.1")),
    universe="bispaces", cheap=True))


def _prop320_1(sfx):
    i_, j_ = (1, 2) if sfx == "12" else (2, 1)

    def concl(inst):
        b = inst["b"]
        ti, tj = b.top(i_), b.top(j_)
        rhs = all((lambda d: d == (d & ~ti.derived(d)))(tj.derived(a))
                  for a in subsets_canonical(b.n))
        return holds(b, f"i-space.{sfx}") == rhs
    return concl


register(TheoremCheck(
    "prop-3.20.1.12", "2-T1: (1,2)-I-space iff all derived sets are "
    "1-discrete", spaces, lambda i: holds(i["b"], "t1.2"),
    _prop320_1("12"), universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.20.1.21", "1-T1: the (2,1) direction", spaces,
    lambda i: holds(i["b"], "t1.1"), _prop320_1("21"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.20.2", "nodec + dense isolated part gives an I-space",
    spaces, lambda i: True,
    lambda i: all(
        _imp(holds(i["b"], f"nodec.{sfx}")
             and holds(i["b"], f"isolated-dense.{sfx}"),
             holds(i["b"], f"i-space.{sfx}"))
        for sfx in ("12", "21")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.21", "1-T1 inclusion (2,1)-I-spaces are (2,1)- and 2-"
    "submaximal, hence 2-nodec",
    spaces,
    lambda i: (holds(i["b"], "t1.1") and incl(i["b"])
               and holds(i["b"], "i-space.21")),
    lambda i: (holds(i["b"], "submaximal.21") and holds(i["b"], "submaximal.2")
               and holds(i["b"], "nodec.2")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.22", "1-T1 inclusion (1,2)-submaximal with 2-dense 1-isolated "
    "part: a (2,1)-I, 2-I and 2-nodec space",
    spaces,
    lambda i: (holds(i["b"], "t1.1") and incl(i["b"])
               and holds(i["b"], "submaximal.12")
               and holds(i["b"], "isolated-dense.21")),
    lambda i: (holds(i["b"], "i-space.21") and holds(i["b"], "i-space.2")
               and holds(i["b"], "nodec.2")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "note-3.23-pre", "1-T1 inclusion I-spaces have 2-dense (hence "
    "1-dense) 2-isolated part; 1-I-spaces have 1-dense 1-isolated part",
    spaces,
    lambda i: holds(i["b"], "t1.1") and incl(i["b"]),
    lambda i: (_imp(any(holds(i["b"], p)
                        for p in ("i-space.1", "i-space.2", "i-space.12",
                                  "i-space.21")),
                    holds(i["b"], "isolated-dense.12")
                    and i["b"].t1.cl_table[
                        i["b"].t2.isolated(full_mask(i["b"].n))]
                    == full_mask(i["b"].n))
               and _imp(holds(i["b"], "i-space.1"),
                        i["b"].t1.cl_table[
                            i["b"].t1.isolated(full_mask(i["b"].n))]
                        == full_mask(i["b"].n))),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.23", "1-T1 inclusion (2,1)-I with 1-dense, not 2-dense "
    "1-isolated part: 2-interior of the 1-derived set is 2-isolated and "
    "the carrier leaves 1-DI and p-DI",
    spaces,
    lambda i: (holds(i["b"], "t1.1") and incl(i["b"])
               and holds(i["b"], "i-space.21")
               and i["b"].t1.cl_table[i["b"].t1.isolated(full_mask(i["b"].n))]
               == full_mask(i["b"].n)
               and i["b"].t2.cl_table[i["b"].t1.isolated(full_mask(i["b"].n))]
               != full_mask(i["b"].n)),
    lambda i: (i["b"].t2.int_table[i["b"].t1.derived(full_mask(i["b"].n))]
               & ~i["b"].t2.isolated(full_mask(i["b"].n)) == 0
               and not holds(i["b"], "dense-in-itself.1")
               and not holds(i["b"], "dense-in-itself.p")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "prop-3.24", "1-T1 inclusion pairs satisfy the whole list of "
    "smallness properties",
    spaces, lambda i: holds(i["b"], "t1.1") and incl(i["b"]),
    lambda i: all(holds(i["b"], p) for p in (
        "i-space.d", "i-space.p", "submaximal.d", "submaximal.p",
        "nodec.d", "nodec.p", "scattered.d", "scattered.p")),
    universe="bispaces", cheap=True))


def _prop325_1(inst):
    b = inst["b"]
    full = full_mask(b.n)
    for y in b.t2.closeds:
        z_needed = full & ~y
        for z in b.t1.closeds:
            if z & ~full or (y | z) != full:
                continue
            if z_needed & ~z:
                continue
            ok_y = y == 0 or holds(_sub(b, y), "i-space.21")
            ok_z = z == 0 or (di_member(b, 1, z)
                              and holds(_sub(b, z), "submaximal.12"))
            if ok_y and ok_z:
                return True
    return False


register(TheoremCheck(
    "prop-3.25.1", "coupled inclusion (1,2)-submaximal spaces split into "
    "a 2-closed (2,1)-I part and a 1-closed dense-in-itself (1,2)-"
    "submaximal part",
    spaces,
    lambda i: (incl(i["b"]) and relC(i["b"])
               and holds(i["b"], "submaximal.12")),
    _prop325_1, universe="bispaces"))


def _prop325_2(inst):
    b = inst["b"]
    full = full_mask(b.n)
    for y in b.t1.closeds:
        for z in b.t2.closeds:
            if (y | z) != full:
                continue
            ok_y = y == 0 or holds(_sub(b, y), "i-space.12")
            ok_z = z == 0 or (di_member(b, 2, z)
                              and holds(_sub(b, z), "nodec.12"))
            if ok_y and ok_z:
                return True
    return False


register(TheoremCheck(
    "prop-3.25.2", "(1,2)-nodec inclusion spaces split analogously",
    spaces, lambda i: incl(i["b"]) and holds(i["b"], "nodec.12"),
    _prop325_2, universe="bispaces"))


# ====================================================== §3: maps and D-spaces

@lru_cache(maxsize=None)
def _surjections(ns: int, nt: int) -> tuple:
    from .dspace import FiniteMap
    if nt > ns:
        return ()
    out = []
    for fn in product(range(nt), repeat=ns):
        if len(set(fn)) == nt:
            out.append(FiniteMap(ns, nt, fn))
    return tuple(out)


@lru_cache(maxsize=None)
def _bijections(n: int) -> tuple:
    return tuple(f for f in _surjections(n, n) if f.injective)


@lru_cache(maxsize=None)
def _open_mask(ts: Topology, tt: Topology) -> int:
    mask = 0
    for k, f in enumerate(_surjections(ts.n, tt.n)):
        if dsp.is_open_map(f, ts, tt):
            mask |= 1 << k
    return mask


@lru_cache(maxsize=None)
def _closed_mask(ts: Topology, tt: Topology) -> int:
    mask = 0
    for k, f in enumerate(_surjections(ts.n, tt.n)):
        if dsp.is_closed_map(f, ts, tt):
            mask |= 1 << k
    return mask


@lru_cache(maxsize=None)
def _cont_bij_mask(ts: Topology, tt: Topology) -> int:
    mask = 0
    for k, f in enumerate(_bijections(ts.n)):
        if dsp.is_continuous(f, ts, tt):
            mask |= 1 << k
    return mask


@lru_cache(maxsize=None)
def _open_bij_mask(ts: Topology, tt: Topology) -> int:
    mask = 0
    for k, f in enumerate(_bijections(ts.n)):
        if dsp.is_open_map(f, ts, tt):
            mask |= 1 << k
    return mask


@lru_cache(maxsize=None)
def _assignment_tuples(t: Topology) -> tuple:
    return tuple(a.phi for a in dsp.all_assignments(t))


def _map_triples_fast(n):
    """Canonical space, surjection, canonical space; targets of any size
    up to the source size."""
    for b in space_universe_canonical(n):
        for m in range(1, n + 1):
            surjs = _surjections(n, m)
            targets = space_universe_canonical(m)
            for k, f in enumerate(surjs):
                for b2 in targets:
                    yield {"b": b, "b2": b2, "f": f, "_k": k}


def _is_d_open(i):
    bit = 1 << i["_k"]
    return ((_open_mask(i["b"].t1, i["b2"].t1) & bit)
            and (_open_mask(i["b"].t2, i["b2"].t2) & bit))


def _is_d_closed(i):
    bit = 1 << i["_k"]
    return ((_closed_mask(i["b"].t1, i["b2"].t1) & bit)
            and (_closed_mask(i["b"].t2, i["b2"].t2) & bit))


register(TheoremCheck(
    "prop-3.27.1", "d-open or d-closed surjections are locally closed "
    "quotients in both directions",
    _map_triples_fast,
    lambda i: bool(_is_d_open(i) or _is_d_closed(i)),
    lambda i: (dsp.is_lcq(i["f"], i["b"], i["b2"], 1, 2)
               and dsp.is_lcq(i["f"], i["b"], i["b2"], 2, 1)),
    universe="canonical space pairs x surjections"))

register(TheoremCheck(
    "prop-3.27.2", "locally closed quotients preserve submaximality",
    _map_triples_fast,
    lambda i: (holds(i["b"], "submaximal.12")
               or holds(i["b"], "submaximal.21")),
    lambda i: all(
        _imp(holds(i["b"], f"submaximal.{s}")
             and dsp.is_lcq(i["f"], i["b"], i["b2"], int(s[0]), int(s[1])),
             holds(i["b2"], f"submaximal.{s}"))
        for s in ("12", "21")),
    universe="canonical space pairs x surjections"))

register(TheoremCheck(
    "cor-3.28", "d-open or d-closed surjections preserve p-submaximality",
    _map_triples_fast,
    lambda i: (holds(i["b"], "submaximal.p")
               and bool(_is_d_open(i) or _is_d_closed(i))),
    lambda i: holds(i["b2"], "submaximal.p"),
    universe="canonical space pairs x surjections"))


def _cor329_instances(n):
    from .enumeration import enum_topologies
    tops = tuple(enum_topologies(n))
    supers = {t: tuple(g for g in tops if t.opens_set <= g.opens_set)
              for t in tops}
    for b in space_universe(n):
        if not holds(b, "submaximal.p"):
            continue
        for g1 in supers[b.t1]:
            for g2 in supers[b.t2]:
                yield {"b": b, "b2": BiSpace(g1, g2)}


register(TheoremCheck(
    "cor-3.29", "componentwise refinement preserves p-submaximality",
    _cor329_instances, lambda i: True,
    lambda i: holds(i["b2"], "submaximal.p"),
    universe="p-submaximal spaces x componentwise refinements"))

register(TheoremCheck(
    "thm-3.30", "d-closed or d-open surjections between inclusion pairs "
    "preserve (2,1)-I-spaces",
    _map_triples_fast,
    lambda i: (incl(i["b"]) and incl(i["b2"])
               and holds(i["b"], "i-space.21")
               and bool(_is_d_open(i) or _is_d_closed(i))),
    lambda i: holds(i["b2"], "i-space.21"),
    universe="canonical space pairs x surjections"))


def _rem332(i):
    t = i["b"].t1
    for phi in _assignment_tuples(t):
        d = dsp._cover_witness(t, t, phi)
        if d is None:
            continue
        if not dsp.remark_cover(t, dsp.NbhdAssignment(1, phi), d):
            return False
    return True


register(TheoremCheck(
    "rem-3.32", "the two-part family built from a D-cover really covers",
    diag, lambda i: holds(i["b"], "d-space.1"), _rem332,
    universe="topologies"))


def _top_pairs(n):
    from .enumeration import enum_topologies
    tops = tuple(t for t in enum_topologies(n) if _canon_top(t))
    for t in tops:
        for t2 in tops:
            yield {"t": t, "t2": t2}


@lru_cache(maxsize=None)
def _canon_top(t: Topology) -> bool:
    from .enumeration import _perm_tables
    ref = t.opens
    for table in _perm_tables(t.n):
        o = tuple(sorted((table[u] for u in ref), key=canon_key))
        if o < ref:
            return False
    return True


def _rem334a(i):
    tx, ty = i["t"], i["t2"]
    for k, f in enumerate(_bijections(tx.n)):
        if not (_open_bij_mask(tx, ty) >> k) & 1:
            continue
        for phi in _assignment_tuples(tx):
            a = dsp.NbhdAssignment(1, phi)
            psi = dsp.induced_assignment_open(f, a)
            if any(not (ty.is_open(u) and u & (1 << y))
                   for y, u in enumerate(psi.phi)):
                return False
            if not dsp.connects(f, a, psi):
                return False
    return True


register(TheoremCheck(
    "rem-3.34a", "open bijections connect an assignment with its pushed "
    "image", _top_pairs, lambda i: True, _rem334a,
    universe="canonical topology pairs"))


def _rem334b(i):
    tx, ty = i["t"], i["t2"]
    for f in _surjections(tx.n, ty.n):
        if not dsp.is_continuous(f, tx, ty):
            continue
        for psi_phi in _assignment_tuples(ty):
            psi = dsp.NbhdAssignment(1, psi_phi)
            phi = dsp.induced_assignment_cont(f, psi)
            if any(not (tx.is_open(u) and u & (1 << x))
                   for x, u in enumerate(phi.phi)):
                return False
            if not dsp.connects(f, phi, psi):
                return False
    return True


register(TheoremCheck(
    "rem-3.34b", "continuous surjections connect the pulled-back "
    "assignment", _top_pairs, lambda i: True, _rem334b,
    universe="canonical topology pairs"))


def _thm336_1_hyp(i):
    tx, ty = i["t"], i["t2"]
    if tx.n != ty.n:
        return False
    mask = _cont_bij_mask(tx, ty)
    if mask == 0:
        return False
    bijs = _bijections(tx.n)
    for phi in _assignment_tuples(tx):
        found = False
        for k, f in enumerate(bijs):
            if not (mask >> k) & 1:
                continue
            inv = f.preimage
            ok = True
            for y in range(ty.n):
                x = inv(1 << y).bit_length() - 1
                if not ty.is_open(f.image(phi[x])):
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            return False
    return True


register(TheoremCheck(
    "thm-3.36.1", "compression-connected assignments pull the D-property "
    "backwards", _top_pairs, _thm336_1_hyp,
    lambda i: _imp(dsp.is_D_space(i["t2"])[0], dsp.is_D_space(i["t"])[0]),
    universe="canonical topology pairs"))


def _thm336_2_hyp(i):
    tx, ty = i["t"], i["t2"]
    if tx.n != ty.n:
        return False
    mask = _open_bij_mask(tx, ty)
    if mask == 0:
        return False
    bijs = _bijections(tx.n)
    for psi in _assignment_tuples(ty):
        found = False
        for k, f in enumerate(bijs):
            if not (mask >> k) & 1:
                continue
            if all(tx.is_open(f.preimage(psi[f.fn[x]]))
                   for x in range(tx.n)):
                found = True
                break
        if not found:
            return False
    return True


register(TheoremCheck(
    "thm-3.36.2", "open-bijection-connected assignments push the "
    "D-property forwards", _top_pairs, _thm336_2_hyp,
    lambda i: _imp(dsp.is_D_space(i["t"])[0], dsp.is_D_space(i["t2"])[0]),
    universe="canonical topology pairs"))

register(TheoremCheck(
    "thm-3.37", "every connected I-space is a D-space",
    diag,
    lambda i: holds(i["b"], "connected.1") and holds(i["b"], "i-space.1"),
    lambda i: holds(i["b"], "d-space.1"),
    universe="topologies", cheap=True))

register(TheoremCheck(
    "cor-3.38", "connected spaces with dense isolated part that are nodec "
    "or submaximal are D-spaces",
    diag,
    lambda i: (holds(i["b"], "connected.1")
               and i["b"].t1.cl_table[i["b"].t1.isolated(
                   full_mask(i["b"].n))] == full_mask(i["b"].n)
               and (holds(i["b"], "nodec.1")
                    or holds(i["b"], "submaximal.1"))),
    lambda i: holds(i["b"], "d-space.1"),
    universe="topologies", cheap=True))

register(TheoremCheck(
    "def-3.39-impl", "under inclusion: 1-D implies (1,2)-D and (2,1)-D "
    "implies 2-D",
    spaces, lambda i: incl(i["b"]),
    lambda i: (_imp(holds(i["b"], "d-space.1"), holds(i["b"], "d-space.12"))
               and _imp(holds(i["b"], "d-space.21"),
                        holds(i["b"], "d-space.2"))),
    universe="bispaces", cheap=True))


def _pairs_of_spaces(n):
    for b in space_universe_canonical(n):
        for b2 in space_universe_canonical(n):
            yield {"b": b, "b2": b2}


def _dcomp_mask(bx, by):
    return _cont_bij_mask(bx.t1, by.t1) & _cont_bij_mask(bx.t2, by.t2)


def _dopen_bij_mask(bx, by):
    return _open_bij_mask(bx.t1, by.t1) & _open_bij_mask(bx.t2, by.t2)


def _340_push_ok(bx, by, side, mask):
    """Every side-assignment on bx admits a d-compression in mask whose
    pushed assignment is valid on by."""
    bijs = _bijections(bx.n)
    tx, ty = bx.top(side), by.top(side)
    for phi in _assignment_tuples(tx):
        found = False
        for k, f in enumerate(bijs):
            if not (mask >> k) & 1:
                continue
            ok = True
            for y in range(ty.n):
                x = f.fn.index(y)
                if not ty.is_open(f.image(phi[x])):
                    ok = False
                    break
            if ok:
                found = True
                break
        if not found:
            return False
    return True


def _340_pull_ok(bx, by, side, mask):
    bijs = _bijections(bx.n)
    tx, ty = bx.top(side), by.top(side)
    for psi in _assignment_tuples(ty):
        found = False
        for k, f in enumerate(bijs):
            if not (mask >> k) & 1:
                continue
            if all(tx.is_open(f.preimage(psi[f.fn[x]]))
                   for x in range(bx.n)):
                found = True
                break
        if not found:
            return False
    return True


def _thm340_1_hyp(i):
    mask = _dcomp_mask(i["b"], i["b2"])
    if not mask:
        return False
    i["_m1"] = _340_push_ok(i["b"], i["b2"], 1, mask)
    i["_m2"] = _340_push_ok(i["b"], i["b2"], 2, mask)
    return i["_m1"] or i["_m2"]


def _thm340_1_concl(i):
    out = True
    if i.get("_m1"):
        out = out and _imp(holds(i["b2"], "d-space.12"),
                           holds(i["b"], "d-space.12"))
    if i.get("_m2"):
        out = out and _imp(holds(i["b2"], "d-space.21"),
                           holds(i["b"], "d-space.21"))
    return out


register(TheoremCheck(
    "thm-3.40.1", "d-compression-connected i-assignments pull the "
    "(i,j)-D-property backwards",
    _pairs_of_spaces, _thm340_1_hyp, _thm340_1_concl,
    universe="canonical bispace pairs"))


def _thm340_2_hyp(i):
    mask = _dopen_bij_mask(i["b"], i["b2"])
    if not mask:
        return False
    i["_m1"] = _340_pull_ok(i["b"], i["b2"], 1, mask)
    i["_m2"] = _340_pull_ok(i["b"], i["b2"], 2, mask)
    return i["_m1"] or i["_m2"]


def _thm340_2_concl(i):
    out = True
    if i.get("_m1"):
        out = out and _imp(holds(i["b"], "d-space.12"),
                           holds(i["b2"], "d-space.12"))
    if i.get("_m2"):
        out = out and _imp(holds(i["b"], "d-space.21"),
                           holds(i["b2"], "d-space.21"))
    return out


register(TheoremCheck(
    "thm-3.40.2", "d-open-bijection-connected i-assignments push the "
    "(i,j)-D-property forwards",
    _pairs_of_spaces, _thm340_2_hyp, _thm340_2_concl,
    universe="canonical bispace pairs"))


def _cor341_1_hyp(i):
    bx, by = i["b"], i["b2"]
    mask = _dcomp_mask(bx, by)
    if not mask:
        return False
    bijs = _bijections(bx.n)
    good = []
    for k, f in enumerate(bijs):
        if not (mask >> k) & 1:
            continue
        v1 = frozenset(
            phi for phi in _assignment_tuples(bx.t1)
            if all(by.t1.is_open(f.image(phi[f.fn.index(y)]))
                   for y in range(by.n)))
        v2 = frozenset(
            phi for phi in _assignment_tuples(bx.t2)
            if all(by.t2.is_open(f.image(phi[f.fn.index(y)]))
                   for y in range(by.n)))
        good.append((v1, v2))
    return all(any(p1 in v1 and p2 in v2 for v1, v2 in good)
               for p1 in _assignment_tuples(bx.t1)
               for p2 in _assignment_tuples(bx.t2))


register(TheoremCheck(
    "cor-3.41.1", "pairs of connected assignments pull the p-D-property "
    "backwards",
    _pairs_of_spaces, _cor341_1_hyp,
    lambda i: _imp(holds(i["b2"], "d-space.p"), holds(i["b"], "d-space.p")),
    universe="canonical bispace pairs"))


def _cor341_2_hyp(i):
    bx, by = i["b"], i["b2"]
    mask = _dopen_bij_mask(bx, by)
    if not mask:
        return False
    bijs = _bijections(bx.n)
    good = []
    for k, f in enumerate(bijs):
        if not (mask >> k) & 1:
            continue
        v1 = frozenset(
            psi for psi in _assignment_tuples(by.t1)
            if all(bx.t1.is_open(f.preimage(psi[f.fn[x]]))
                   for x in range(bx.n)))
        v2 = frozenset(
            psi for psi in _assignment_tuples(by.t2)
            if all(bx.t2.is_open(f.preimage(psi[f.fn[x]]))
                   for x in range(bx.n)))
        good.append((v1, v2))
    return all(any(p1 in v1 and p2 in v2 for v1, v2 in good)
               for p1 in _assignment_tuples(by.t1)
               for p2 in _assignment_tuples(by.t2))


register(TheoremCheck(
    "cor-3.41.2", "pairs of connected assignments push the p-D-property "
    "forwards",
    _pairs_of_spaces, _cor341_2_hyp,
    lambda i: _imp(holds(i["b"], "d-space.p"), holds(i["b2"], "d-space.p")),
    universe="canonical bispace pairs"))

register(TheoremCheck(
    "thm-3.42", "every p-connected (i,j)-I-space is an (i,j)-D-space",
    spaces, lambda i: holds(i["b"], "connected.p"),
    lambda i: all(
        _imp(holds(i["b"], f"i-space.{s}"), holds(i["b"], f"d-space.{s}"))
        for s in ("12", "21")),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.43", "every p-connected p-I-space is a p-D-space",
    spaces,
    lambda i: holds(i["b"], "connected.p") and holds(i["b"], "i-space.p"),
    lambda i: holds(i["b"], "d-space.p"),
    universe="bispaces", cheap=True))

register(TheoremCheck(
    "cor-3.44", "p-connected (i,j)-nodec spaces with i-dense j-isolated "
    "part are (i,j)-D-spaces",
    spaces, lambda i: holds(i["b"], "connected.p"),
    lambda i: all(
        _imp(holds(i["b"], f"nodec.{s}") and holds(i["b"], f"isolated-dense.{s}"),
             holds(i["b"], f"d-space.{s}"))
        for s in ("12", "21")),
    universe="bispaces", cheap=True))


def _thm345_hyp(i):
    b = i["b"]
    if not holds(b, "d-space.p"):
        return False
    sup = dsp.sup_topology(b.t1, b.t2)
    i["_sup"] = sup
    return dsp.linearly_ordered_assignments(sup)


register(TheoremCheck(
    "thm-3.45", "a linearly ordered assignment family over the join of a "
    "p-D pair gives a D-space",
    spaces, _thm345_hyp,
    lambda i: dsp.is_D_space(i.get("_sup")
                             or dsp.sup_topology(i["b"].t1, i["b"].t2))[0],
    universe="bispaces"))
