"""Property predicates over bitopological spaces, with witnesses.

Every predicate answers exactly by quantifier evaluation over the
finite carrier and, on failure, reports a witness that reproduces the
failure.  Witnesses are role-labelled masks, minimal in the canonical
(popcount, value) subset order because every scan walks that order.

Predicates are exposed twice: as named functions, and through a table
of stable string ids ("submaximal.12", "nodec.2", ...) used by the
harness and the command line.  The id suffix names the index data:
.12/.21 the mixed variants, .1/.2 the single-topology collapses, .p
the pairwise conjunction, .d the double (both topologies) conjunction.

T1-type separation collapses on finite carriers (a finite T1 topology
is discrete); the predicates still evaluate the definitions literally.
"""

from .bispace import (BiSpace, bi_subspace, check_ij, lc_member,
                      nd_singletons, st_member)
from .sets import full_mask, points, subsets_canonical
from .topology import rel_opens


def _pass():
    return True, None


# -- separation axioms ---------------------------------------------------

def t1_axiom(b: BiSpace, i: int):
    """Every singleton is i-closed."""
    t = b.top(i)
    for x in range(b.n):
        if not t.is_closed(1 << x):
            return False, {"x": 1 << x}
    return _pass()


def regular_ij(b: BiSpace, i: int, j: int):
    """Points and disjoint i-closed sets split into i-open / j-open."""
    ti, tj = b.top(i), b.top(j)
    full = full_mask(b.n)
    for f in ti.closeds:
        rest = full ^ f
        for x in points(rest):
            # U around x must avoid some j-open V covering f
            if not any(f & ~v == 0 and (1 << x) & ti.int_table[full ^ v]
                       for v in tj.opens):
                return False, {"x": 1 << x, "F": f}
    return _pass()


def _sep_by_opens(b, a, c, t_u, t_v):
    """Disjoint U in t_u covering a and V in t_v covering c exist?"""
    full = full_mask(b.n)
    iv = t_v.int_table
    for u in t_u.opens:
        if a & ~u == 0 and c & ~iv[full ^ u] == 0:
            return True
    return False


def p_normal(b: BiSpace):
    """Disjoint 1-closed / 2-closed sets split into 2-open / 1-open."""
    for a in b.t1.closeds:
        for c in b.t2.closeds:
            if a & c == 0 and not _sep_by_opens(b, a, c, b.t2, b.t1):
                return False, {"A": a, "B": c}
    return _pass()


def normal_i(b: BiSpace, i: int):
    t = b.top(i)
    for a in t.closeds:
        for c in t.closeds:
            if a & c == 0 and not _sep_by_opens(b, a, c, t, t):
                return False, {"A": a, "B": c}
    return _pass()


def _rel_closeds(t, y):
    return [y & ~u for u in rel_opens(t, y)]


def p_normal_rel(b: BiSpace, y: int) -> bool:
    """Is the subspace over y p-normal?  Parent coordinates throughout."""
    o1 = rel_opens(b.t1, y)
    o2 = rel_opens(b.t2, y)
    for a in (y & ~u for u in o1):
        for c in (y & ~u for u in o2):
            if a & c:
                continue
            if not any(a & ~u == 0 and any(c & ~v == 0 and u & v == 0
                                           for v in o1)
                       for u in o2):
                return False
    return True


def her_p_normal(b: BiSpace):
    """Every subspace p-normal; cross-checked against the p-separated
    separation criterion, which must agree."""
    res, wit = None, None
    for y in subsets_canonical(b.n)[1:]:
        if not p_normal_rel(b, y):
            res, wit = False, {"Y": y}
            break
    if res is None:
        res = True
    alt = p_separated_pairs_split(b)[0]
    if alt != res:
        raise AssertionError("hereditary p-normality criteria disagree")
    return res, wit


def p_open_subsets_p_normal(b: BiSpace):
    """Condition (2) of the hereditary-normality equivalence."""
    from .bispace import p_open
    for y in subsets_canonical(b.n)[1:]:
        if p_open(b, y) and not p_normal_rel(b, y):
            return False, {"Y": y}
    return _pass()


def p_separated_pairs_split(b: BiSpace):
    """p-separated pairs admit disjoint 2-open / 1-open envelopes."""
    from .relclosure import p_separated
    masks = subsets_canonical(b.n)
    for a in masks:
        for c in masks:
            if p_separated(b, a, c) and not _sep_by_opens(b, a, c, b.t2, b.t1):
                return False, {"A": a, "B": c}
    return _pass()


# -- connectedness --------------------------------------------------------

def p_connected(b: BiSpace):
    """No proper non-empty set is 1-open and 2-closed."""
    full = full_mask(b.n)
    for a in b.t1.opens:
        if a and a != full and (full ^ a) in b.t2.opens_set:
            return False, {"A": a}
    return _pass()


def connected_i(b: BiSpace, i: int):
    t = b.top(i)
    full = full_mask(b.n)
    for a in t.opens:
        if a and a != full and (full ^ a) in t.opens_set:
            return False, {"A": a}
    return _pass()


# -- extremal disconnectedness ---------------------------------------------

def extr_disc_ij(b: BiSpace, i: int, j: int):
    ti, tj = b.top(i), b.top(j)
    for u in ti.opens:
        c = tj.cl_table[u]
        if ti.int_table[c] != c:
            return False, {"U": u}
    return _pass()


# -- Baire-type properties ---------------------------------------------------

def _rel_int_nonempty(t, carrier, s):
    """Does s have non-empty interior in the subspace over carrier?"""
    for y in points(s):
        if (t.min_nbhd[y] & carrier) & ~s == 0:
            return True
    return False


def baire_ij(b: BiSpace, i: int, j: int):
    """Every non-empty i-open subset is of (i,j)-second category in
    itself (all category notions taken inside the subspace)."""
    ti, tj = b.top(i), b.top(j)
    for u in ti.opens:
        if u == 0:
            continue
        if not any(_rel_int_nonempty(ti, u, tj.cl_table[1 << x] & u)
                   for x in points(u)):
            return False, {"U": u}
    return _pass()


def almost_baire_ij(b: BiSpace, i: int, j: int):
    """Every non-empty i-open subset is of (i,j)-second category in X."""
    sing = nd_singletons(b, i, j)
    for u in b.top(i).opens:
        if u and u & ~sing == 0:
            return False, {"U": u}
    return _pass()


# -- nodec / submaximal / sigma-discrete / I-space ---------------------------

def nodec_ij(b: BiSpace, i: int, j: int):
    """Every (i,j)-nowhere dense set is j-closed and i-discrete."""
    ti, tj = b.top(i), b.top(j)
    for a in subsets_canonical(b.n):
        if ti.int_table[tj.cl_table[a]] == 0:
            if tj.cl_table[a] != a or a & ti.derived(a):
                return False, {"A": a}
    return _pass()


def submaximal_ij(b: BiSpace, i: int, j: int):
    for a in subsets_canonical(b.n):
        if not lc_member(b, i, j, a):
            return False, {"A": a}
    return _pass()


def submaximal_equivalents(b: BiSpace, i: int, j: int) -> tuple:
    """The five equivalent conditions, computed independently."""
    check_ij(i, j)
    ti, tj = b.top(i), b.top(j)
    full = full_mask(b.n)
    masks = subsets_canonical(b.n)
    c1 = all(lc_member(b, i, j, a) for a in masks)
    c2 = all(lc_member(b, i, j, full ^ a) for a in masks)
    c3 = all(not (tj.int_table[a] == 0 and a not in ti.closeds_set)
             for a in masks)
    c4 = all((tj.cl_table[a] & ~a) in ti.closeds_set for a in masks)
    c5 = all(not (tj.cl_table[a] == full and a not in ti.opens_set)
             for a in masks)
    return c1, c2, c3, c4, c5


def str_sigma_disc_ij(b: BiSpace, i: int, j: int):
    """X is a finite union of j-closed i-discrete sets."""
    ti, tj = b.top(i), b.top(j)
    cover = 0
    for a in subsets_canonical(b.n):
        if tj.cl_table[a] == a and not (a & ti.derived(a)):
            cover |= a
    full = full_mask(b.n)
    if cover == full:
        return _pass()
    return False, {"x": (full ^ cover) & -(full ^ cover)}


def subset_str_sigma_disc(b: BiSpace, i: int, j: int, a: int) -> bool:
    """Subset form of strong sigma-discreteness: A is a finite union of
    pieces that are j-closed in the AMBIENT space and i-discrete.

    Ambient closedness is the reading the related proofs rely on; with
    subspace-relative pieces the closure-spreading corollary has a
    two-point counterexample.  Per point: the ambient j-closure of x
    must stay inside A and be i-discrete.
    """
    ti, tj = b.top(i), b.top(j)
    for x in points(a):
        c = tj.cl_table[1 << x]
        if c & ~a or c & ti.derived(c):
            return False
    return True


def i_space_ij(b: BiSpace, i: int, j: int):
    """The j-derived set of X is j-closed and i-discrete."""
    ti, tj = b.top(i), b.top(j)
    d = tj.derived(full_mask(b.n))
    if tj.cl_table[d] == d and not (d & ti.derived(d)):
        return _pass()
    return False, {"D": d}


def scattered(b: BiSpace, kind):
    if st_member(b, kind, full_mask(b.n)):
        return _pass()
    # witness: least non-empty dense-in-itself subset
    from .bispace import di_member
    for a in subsets_canonical(b.n)[1:]:
        if di_member(b, kind, a):
            return False, {"B": a}
    return False, None


def bd_discrete_ij(b: BiSpace, i: int, j: int):
    """Every j-boundary subset is i-discrete (Corollary condition)."""
    ti, tj = b.top(i), b.top(j)
    for a in subsets_canonical(b.n):
        if tj.int_table[a] == 0 and a & ti.derived(a):
            return False, {"A": a}
    return _pass()


# -- hypernormality -----------------------------------------------------------

def _shrinkable(t_v, t_cl_v, c, region):
    """Is there V in t_v with c <= V and t_cl_v-closure of V inside region?"""
    good = 0
    for x in points(region):
        if t_cl_v.cl_table[1 << x] & ~region == 0:
            good |= 1 << x
    return c & ~t_v.int_table[good] == 0


def hypernormal_p(b: BiSpace):
    """p-separated pairs split into opens with disjoint mixed closures."""
    from .relclosure import p_separated
    full = full_mask(b.n)
    masks = subsets_canonical(b.n)
    for a in masks:
        for c in masks:
            if not p_separated(b, a, c):
                continue
            ok = False
            for u in b.t2.opens:
                if a & ~u:
                    continue
                if _shrinkable(b.t1, b.t2, c, full ^ b.t1.cl_table[u]):
                    ok = True
                    break
            if not ok:
                return False, {"A": a, "B": c}
    return _pass()


def hypernormal_i(b: BiSpace, i: int):
    """Topological hypernormality of (X, tau_i)."""
    t = b.top(i)
    full = full_mask(b.n)
    masks = subsets_canonical(b.n)
    for a in masks:
        for c in masks:
            if (t.cl_table[a] & c) or (a & t.cl_table[c]):
                continue
            ok = False
            for u in t.opens:
                if a & ~u:
                    continue
                if _shrinkable(t, t, c, full ^ t.cl_table[u]):
                    ok = True
                    break
            if not ok:
                return False, {"A": a, "B": c}
    return _pass()


# -- relative normality (Definitions of WS-supernormal / strongly normal) ----

def _ws_core(b, y, t_a_sub, t_b_amb, t_u_sub, t_v_amb):
    """Common scheme: A closed-in-Y by one topology, B closed-in-X by
    another, separated by a Y-open and an X-open from the given sides."""
    full = full_mask(b.n)
    u_cands = rel_opens(t_u_sub, y)
    a_sets = [y & ~u for u in rel_opens(t_a_sub, y)]
    for a in sorted(a_sets, key=lambda s: (s.bit_count(), s)):
        for bb in t_b_amb.closeds:
            if a & bb:
                continue
            if not any(a & ~u == 0 and bb & ~t_v_amb.int_table[full ^ u] == 0
                       for u in u_cands):
                return False, {"A": a, "B": bb}
    return _pass()


def ws_supernormal_ij(b: BiSpace, y: int, i: int, j: int):
    """(i,j)-WS-supernormal in X: disjoint A in co tau_i', B in co tau_j
    get disjoint U in tau_j', V in tau_i."""
    check_ij(i, j)
    return _ws_core(b, y, b.top(i), b.top(j), b.top(j), b.top(i))


def ws_supernormal_i(b: BiSpace, y: int, i: int):
    """Topological WS-supernormality of the subspace in (X, tau_i)."""
    t = b.top(i)
    return _ws_core(b, y, t, t, t, t)


def p_strong_normal(b: BiSpace, y: int):
    """Disjoint A in co tau_1', B in co tau_2' split into U in tau_2,
    V in tau_1 taken from the ambient space."""
    full = full_mask(b.n)
    a_sets = sorted((y & ~u for u in rel_opens(b.t1, y)),
                    key=lambda s: (s.bit_count(), s))
    b_sets = sorted((y & ~u for u in rel_opens(b.t2, y)),
                    key=lambda s: (s.bit_count(), s))
    for a in a_sets:
        for c in b_sets:
            if a & c:
                continue
            if not any(a & ~u == 0 and c & ~b.t1.int_table[full ^ u] == 0
                       for u in b.t2.opens):
                return False, {"A": a, "B": c}
    return _pass()


def strong_normal_i(b: BiSpace, y: int, i: int):
    """Both sets closed in Y by tau_i, both envelopes open in X by tau_i."""
    t = b.top(i)
    full = full_mask(b.n)
    rel_cl = sorted((y & ~u for u in rel_opens(t, y)),
                    key=lambda s: (s.bit_count(), s))
    for a in rel_cl:
        for c in rel_cl:
            if a & c:
                continue
            if not any(a & ~u == 0 and c & ~t.int_table[full ^ u] == 0
                       for u in t.opens):
                return False, {"A": a, "B": c}
    return _pass()


def normal_in_itself(b: BiSpace, y: int, i: int) -> bool:
    """Is the subspace over y normal as a plain topological space?"""
    t = b.top(i)
    o = rel_opens(t, y)
    closeds = [y & ~u for u in o]
    for a in closeds:
        for c in closeds:
            if a & c:
                continue
            if not any(a & ~u == 0 and not (c & ~v or u & v)
                       for u in o for v in o):
                return False
    return True


# -- string-id registry -------------------------------------------------------

def _pair_of(suffix):
    return {"12": (1, 2), "21": (2, 1)}[suffix]


PROPERTY_FNS = {}
REL_PROPERTY_FNS = {}


def _conj(*ids):
    def run(b):
        for pid in ids:
            ok, wit = check(b, pid)
            if not ok:
                return False, wit
        return True, None
    return run


def _register_base():
    P = PROPERTY_FNS
    P["t1.1"] = lambda b: t1_axiom(b, 1)
    P["t1.2"] = lambda b: t1_axiom(b, 2)
    P["t1.d"] = _conj("t1.1", "t1.2")
    P["t1.rp"] = P["t1.d"]  # Reilly pairwise T1 is the double axiom
    for sfx in ("12", "21"):
        i, j = _pair_of(sfx)
        P[f"regular.{sfx}"] = lambda b, i=i, j=j: regular_ij(b, i, j)
        P[f"extr-disc.{sfx}"] = lambda b, i=i, j=j: extr_disc_ij(b, i, j)
        P[f"baire.{sfx}"] = lambda b, i=i, j=j: baire_ij(b, i, j)
        P[f"almost-baire.{sfx}"] = lambda b, i=i, j=j: almost_baire_ij(b, i, j)
        P[f"nodec.{sfx}"] = lambda b, i=i, j=j: nodec_ij(b, i, j)
        P[f"submaximal.{sfx}"] = lambda b, i=i, j=j: submaximal_ij(b, i, j)
        P[f"str-sigma-disc.{sfx}"] = (
            lambda b, i=i, j=j: str_sigma_disc_ij(b, i, j))
        P[f"i-space.{sfx}"] = lambda b, i=i, j=j: i_space_ij(b, i, j)
        P[f"bd-discrete.{sfx}"] = lambda b, i=i, j=j: bd_discrete_ij(b, i, j)
    for i in (1, 2):
        P[f"regular.{i}"] = lambda b, i=i: regular_ij(b, i, i)
        P[f"normal.{i}"] = lambda b, i=i: normal_i(b, i)
        P[f"connected.{i}"] = lambda b, i=i: connected_i(b, i)
        P[f"extr-disc.{i}"] = lambda b, i=i: extr_disc_ij(b, i, i)
        P[f"baire.{i}"] = lambda b, i=i: baire_ij(b, i, i)
        P[f"nodec.{i}"] = lambda b, i=i: nodec_ij(b, i, i)
        P[f"submaximal.{i}"] = lambda b, i=i: submaximal_ij(b, i, i)
        P[f"str-sigma-disc.{i}"] = (
            lambda b, i=i: str_sigma_disc_ij(b, i, i))
        P[f"i-space.{i}"] = lambda b, i=i: i_space_ij(b, i, i)
        P[f"scattered.{i}"] = lambda b, i=i: scattered(b, i)
        P[f"hypernormal.{i}"] = lambda b, i=i: hypernormal_i(b, i)
        P[f"her-normal.{i}"] = lambda b, i=i: her_normal_i(b, i)
    P["normal.p"] = p_normal
    P["normal.d"] = _conj("normal.1", "normal.2")
    P["her-normal.p"] = her_p_normal
    P["connected.p"] = p_connected
    P["connected.d"] = _conj("connected.1", "connected.2")
    P["regular.p"] = _conj("regular.12", "regular.21")
    P["regular.d"] = _conj("regular.1", "regular.2")
    P["extr-disc.p"] = _conj("extr-disc.12", "extr-disc.21")
    P["extr-disc.d"] = _conj("extr-disc.1", "extr-disc.2")
    P["nodec.p"] = _conj("nodec.12", "nodec.21")
    P["nodec.d"] = _conj("nodec.1", "nodec.2")
    P["submaximal.p"] = _conj("submaximal.12", "submaximal.21")
    P["submaximal.d"] = _conj("submaximal.1", "submaximal.2")
    P["i-space.p"] = _conj("i-space.12", "i-space.21")
    P["i-space.d"] = _conj("i-space.1", "i-space.2")
    P["scattered.p"] = lambda b: scattered(b, "p")
    P["scattered.d"] = _conj("scattered.1", "scattered.2")
    P["hypernormal.p"] = hypernormal_p
    P["hypernormal.d"] = _conj("hypernormal.1", "hypernormal.2")
    P["dense-in-itself.1"] = lambda b: _space_di(b, 1)
    P["dense-in-itself.2"] = lambda b: _space_di(b, 2)
    P["dense-in-itself.12"] = lambda b: _space_di(b, (1, 2))
    P["dense-in-itself.21"] = lambda b: _space_di(b, (2, 1))
    P["dense-in-itself.p"] = lambda b: _space_di(b, "p")
    P["isolated-dense.12"] = lambda b: _isolated_dense(b, 1, 2)
    P["isolated-dense.21"] = lambda b: _isolated_dense(b, 2, 1)

    # dimension-zero and D-space flags (deferred imports: those modules
    # import this one)
    def _dim(fn):
        def run(b):
            return (True, None) if fn(b) else (False, None)
        return run

    P["ind-zero.12"] = _dim(lambda b: _dimension().ij_ind_zero(b, 1, 2))
    P["ind-zero.21"] = _dim(lambda b: _dimension().ij_ind_zero(b, 2, 1))
    P["ind-zero.p"] = _dim(lambda b: _dimension().p_ind_zero(b))
    P["ind-zero.1"] = _dim(lambda b: _dimension().top_ind(b.t1) <= 0)
    P["ind-zero.2"] = _dim(lambda b: _dimension().top_ind(b.t2) <= 0)
    P["large-ind-zero.p"] = _dim(lambda b: _dimension().p_Ind_zero(b))
    P["large-ind-zero.1"] = _dim(lambda b: _dimension().top_Ind(b.t1) <= 0)
    P["large-ind-zero.2"] = _dim(lambda b: _dimension().top_Ind(b.t2) <= 0)
    for sfx, pair in (("12", (1, 2)), ("21", (2, 1))):
        P[f"d-space.{sfx}"] = (
            lambda b, p=pair: _tag(_dspace().is_ij_D_space(b, *p)))
    P["d-space.1"] = lambda b: _tag(_dspace().is_D_space(b.t1))
    P["d-space.2"] = lambda b: _tag(_dspace().is_D_space(b.t2))
    P["d-space.p"] = _conj("d-space.12", "d-space.21")
    P["d-space.d"] = _conj("d-space.1", "d-space.2")
    P["d-space.sup"] = lambda b: _tag(
        _dspace().is_D_space(_dspace().sup_topology(b.t1, b.t2)))

    R = REL_PROPERTY_FNS
    R["ws-supernormal.12"] = lambda b, y: ws_supernormal_ij(b, y, 1, 2)
    R["ws-supernormal.21"] = lambda b, y: ws_supernormal_ij(b, y, 2, 1)
    R["ws-supernormal.p"] = _rel_conj("ws-supernormal.12", "ws-supernormal.21")
    R["ws-supernormal.1"] = lambda b, y: ws_supernormal_i(b, y, 1)
    R["ws-supernormal.2"] = lambda b, y: ws_supernormal_i(b, y, 2)
    R["ws-supernormal.top"] = R["ws-supernormal.1"]
    R["strong-normal.p"] = p_strong_normal
    R["strong-normal.1"] = lambda b, y: strong_normal_i(b, y, 1)
    R["strong-normal.2"] = lambda b, y: strong_normal_i(b, y, 2)
    R["strong-normal.d"] = _rel_conj("strong-normal.1", "strong-normal.2")
    R["strong-normal.top"] = R["strong-normal.1"]


def _rel_conj(*ids):
    def run(b, y):
        for rid in ids:
            ok, wit = rel_check(b, y, rid)
            if not ok:
                return False, wit
        return True, None
    return run


def _dimension():
    from . import dimension
    return dimension


def _dspace():
    from . import dspace
    return dspace


def _tag(result):
    ok, wit = result
    return (True, None) if ok else (False, None)


def _space_di(b: BiSpace, kind):
    from .bispace import di_member
    if di_member(b, kind, full_mask(b.n)):
        return _pass()
    return False, None


def _isolated_dense(b: BiSpace, i: int, j: int):
    """X_j^i is i-dense in X."""
    iso = b.top(j).isolated(full_mask(b.n))
    if b.top(i).cl_table[iso] == full_mask(b.n):
        return _pass()
    return False, {"iso": iso}


def her_normal_i(b: BiSpace, i: int):
    for y in subsets_canonical(b.n)[1:]:
        if not normal_in_itself(b, y, i):
            return False, {"Y": y}
    return _pass()


_register_base()


def check(b: BiSpace, pid: str):
    """Evaluate a property id; returns (bool, witness-or-None)."""
    try:
        fn = PROPERTY_FNS[pid]
    except KeyError:
        raise ValueError(f"unknown property id {pid!r}") from None
    return fn(b)


def holds(b: BiSpace, pid: str) -> bool:
    memo = b._props
    got = memo.get(pid)
    if got is None:
        got = check(b, pid)[0]
        memo[pid] = got
    return got


def rel_check(b: BiSpace, y: int, rid: str):
    """Evaluate a relative property of the subspace over y inside b."""
    if y == 0:
        from .errors import EmptySubspace
        raise EmptySubspace("relative properties need a non-empty carrier")
    try:
        fn = REL_PROPERTY_FNS[rid]
    except KeyError:
        raise ValueError(f"unknown relative property id {rid!r}") from None
    return fn(b, y)


def rel_holds(b: BiSpace, y: int, rid: str) -> bool:
    return rel_check(b, y, rid)[0]


def property_ids() -> tuple:
    return tuple(sorted(PROPERTY_FNS))


def rel_property_ids() -> tuple:
    return tuple(sorted(REL_PROPERTY_FNS))
