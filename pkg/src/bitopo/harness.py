"""Theorem-checking engine: registered implications run exhaustively
over small universes, with violation re-verification and
counterexample search.

A check owns an instance generator (spaces, space+subset pairs, map
triples, ...), a hypothesis and a conclusion.  Scanning counts every
instance, hypothesis hits separately (so vacuous theorems are visible)
and re-evaluates any violation from freshly rebuilt objects before
reporting it, which guards against memoization bugs.

Property predicates are looked up through the string-id table, so a
test can temporarily override one id (mutation testing) and every
check depending on it feels the change.
"""

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache

from . import properties
from .bispace import BiSpace, make_bispace
from .enumeration import (UniverseSpec, enum_bispaces, enum_topologies,
                          is_canonical)
from .errors import UnknownTheorem
from .sets import subsets_canonical


_UNIVERSES: dict = {}


def space_universe(n: int) -> tuple:
    """All ordered pairs at size n, cached so property memos persist
    across checks within one process."""
    got = _UNIVERSES.get(("pairs", n))
    if got is None:
        tops = tuple(enum_topologies(n))
        got = tuple(BiSpace(t1, t2) for t1 in tops for t2 in tops)
        _UNIVERSES[("pairs", n)] = got
    return got


def space_universe_canonical(n: int) -> tuple:
    got = _UNIVERSES.get(("canon", n))
    if got is None:
        got = tuple(b for b in space_universe(n) if is_canonical(b))
        _UNIVERSES[("canon", n)] = got
    return got


def diag_universe(n: int) -> tuple:
    """Single topologies wrapped as diagonal pairs (tau, tau)."""
    got = _UNIVERSES.get(("diag", n))
    if got is None:
        got = tuple(BiSpace(t, t) for t in enum_topologies(n))
        _UNIVERSES[("diag", n)] = got
    return got


def clear_property_memos():
    """Drop per-space memoized property values (after overrides)."""
    for spaces in _UNIVERSES.values():
        for b in spaces:
            b._props.clear()
            b._families.clear()


@dataclass
class CheckReport:
    id: str
    title: str
    n: int
    universe: str
    scanned: int = 0
    hits: int = 0
    violations: list = field(default_factory=list)
    runtime_ms: int = 0
    complete: bool = True

    def to_json(self) -> dict:
        return {"id": self.id, "universe": self.universe, "n": self.n,
                "scanned": self.scanned, "hits": self.hits,
                "violations": self.violations,
                "runtime_ms": self.runtime_ms, "complete": self.complete}


class TheoremCheck:
    """One registered statement: universe generator + hyp + conclusion."""

    def __init__(self, cid, title, instances, hypothesis, conclusion,
                 universe="bispace pairs", cheap=False, max_n=None):
        self.id = cid
        self.title = title
        self.instances = instances      # callable n -> iterator of dicts
        self.hypothesis = hypothesis    # callable instance -> bool
        self.conclusion = conclusion
        self.universe = universe
        self.cheap = cheap
        self.max_n = max_n              # generator cap, if any


CHECKS: dict = {}


def register(check: TheoremCheck):
    if check.id in CHECKS:
        raise ValueError(f"duplicate check id {check.id}")
    CHECKS[check.id] = check
    return check


def check_ids() -> tuple:
    _ensure_registry()
    return tuple(sorted(CHECKS))


def get_check(cid: str) -> TheoremCheck:
    _ensure_registry()
    try:
        return CHECKS[cid]
    except KeyError:
        raise UnknownTheorem(cid) from None


def _ensure_registry():
    if not CHECKS:
        from . import theorems  # noqa: F401  (registers on import)


@contextmanager
def property_overrides(overrides):
    """Temporarily replace property-id entries (mutation testing)."""
    saved = {}
    try:
        for pid, fn in (overrides or {}).items():
            saved[pid] = properties.PROPERTY_FNS[pid]
            properties.PROPERTY_FNS[pid] = fn
        clear_property_memos()
        yield
    finally:
        for pid, fn in saved.items():
            properties.PROPERTY_FNS[pid] = fn
        clear_property_memos()


# -- instance serialization ---------------------------------------------------

def _ser_value(v):
    if isinstance(v, BiSpace):
        return {"_type": "bispace", "n": v.n,
                "tau1": [list(_bits(u)) for u in v.t1.opens],
                "tau2": [list(_bits(u)) for u in v.t2.opens]}
    if hasattr(v, "opens"):  # Topology
        return {"_type": "topology", "n": v.n,
                "opens": [list(_bits(u)) for u in v.opens]}
    if hasattr(v, "fn"):     # FiniteMap
        return {"_type": "map", "n_src": v.n_src, "n_tgt": v.n_tgt,
                "fn": list(v.fn)}
    if hasattr(v, "phi"):    # NbhdAssignment
        return {"_type": "assignment", "side": v.side, "phi": list(v.phi)}
    return v


def _bits(mask):
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def _reb_value(v):
    from .dspace import FiniteMap, NbhdAssignment
    from .topology import validate_topology
    if isinstance(v, dict) and "_type" in v:
        t = v["_type"]
        if t == "bispace":
            mk = lambda fam: [sum(1 << b for b in u) for u in fam]
            return make_bispace(v["n"], mk(v["tau1"]), mk(v["tau2"]))
        if t == "topology":
            return validate_topology(
                v["n"], [sum(1 << b for b in u) for u in v["opens"]])
        if t == "map":
            return FiniteMap(v["n_src"], v["n_tgt"], tuple(v["fn"]))
        if t == "assignment":
            return NbhdAssignment(v["side"], tuple(v["phi"]))
    return v


def serialize_instance(inst: dict) -> dict:
    return {k: _ser_value(v) for k, v in inst.items()}


def rebuild_instance(desc: dict) -> dict:
    return {k: _reb_value(v) for k, v in desc.items()}


# -- running -------------------------------------------------------------------

def run_check(cid: str, n: int = 3, budget=None) -> CheckReport:
    """Scan one check's universe of size n; violations are re-verified
    from scratch before they are reported."""
    check = get_check(cid)
    rep = CheckReport(cid, check.title, n, check.universe)
    t0 = time.perf_counter()
    if check.max_n is not None and n > check.max_n:
        rep.universe += f" (capped at n={check.max_n})"
        n = check.max_n
        rep.n = n
    for inst in check.instances(n):
        if budget is not None and rep.scanned >= budget:
            rep.complete = False
            break
        rep.scanned += 1
        if not check.hypothesis(inst):
            continue
        rep.hits += 1
        if check.conclusion(inst):
            continue
        desc = serialize_instance(inst)
        fresh = rebuild_instance(desc)
        if not check.hypothesis(fresh) or check.conclusion(fresh):
            raise RuntimeError(
                f"{cid}: violation did not reproduce on a rebuilt instance")
        rep.violations.append(desc)
    rep.runtime_ms = int((time.perf_counter() - t0) * 1000)
    return rep


def run_all(n: int = 3, cheap_only: bool = False, budget=None,
            ids=None) -> list:
    """Run every registered check (or the cheap subset) at size n."""
    _ensure_registry()
    wanted = sorted(ids) if ids else sorted(CHECKS)
    reports = []
    for cid in wanted:
        if cheap_only and not CHECKS[cid].cheap:
            continue
        reports.append(run_check(cid, n, budget=budget))
    return reports


def cheap_ids() -> tuple:
    _ensure_registry()
    return tuple(sorted(cid for cid, c in CHECKS.items() if c.cheap))


# -- predicate expressions -----------------------------------------------------

class ExprParseError(ValueError):
    pass


_ATOM_CHARS = set("abcdefghijklmnopqrstuvwxyz"
                  "ABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789.-_")


def _tokenize(src: str):
    toks = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
        elif c in "()!&|":
            toks.append(c)
            i += 1
        elif c in _ATOM_CHARS:
            j = i
            while j < len(src) and src[j] in _ATOM_CHARS:
                j += 1
            toks.append(src[i:j])
            i = j
        else:
            raise ExprParseError(f"bad character {c!r} at offset {i}")
    return toks


def _atom_fn(name: str):
    low = name.lower()
    if low == "true":
        return lambda b: True
    if low == "false":
        return lambda b: False
    if low.startswith("rel."):
        kind = {"inclusion": "inclusion", "incl": "inclusion",
                "c": "C", "n": "N", "s": "S"}.get(low[4:])
        if kind is None:
            raise ExprParseError(f"unknown relation atom {name!r}")
        return lambda b: b.flags[kind]
    if low.startswith("allsub.") or low.startswith("somesub."):
        qual, _, pid = name.partition(".")
        if pid not in properties.PROPERTY_FNS:
            raise ExprParseError(f"unknown property id {pid!r}")
        every = qual.lower() == "allsub"

        def run(b, pid=pid, every=every):
            from .bispace import bi_subspace
            vals = (properties.check(bi_subspace(b, y), pid)[0]
                    for y in subsets_canonical(b.n)[1:])
            return all(vals) if every else any(vals)
        return run
    if name in properties.PROPERTY_FNS:
        return lambda b: properties.holds(b, name)
    raise ExprParseError(f"unknown atom {name!r}")


def parse_expr(src: str):
    """Parse '&', '|', '!' combinations of property/relation atoms into
    a BiSpace predicate."""
    toks = _tokenize(src)
    pos = [0]

    def peek():
        return toks[pos[0]] if pos[0] < len(toks) else None

    def take(t=None):
        got = peek()
        if got is None or (t is not None and got != t):
            raise ExprParseError(f"expected {t or 'token'}, got {got!r}")
        pos[0] += 1
        return got

    def parse_or():
        left = parse_and()
        while peek() == "|":
            take()
            right = parse_and()
            left = (lambda a, c: lambda b: a(b) or c(b))(left, right)
        return left

    def parse_and():
        left = parse_not()
        while peek() == "&":
            take()
            right = parse_not()
            left = (lambda a, c: lambda b: a(b) and c(b))(left, right)
        return left

    def parse_not():
        if peek() == "!":
            take()
            inner = parse_not()
            return lambda b: not inner(b)
        if peek() == "(":
            take()
            inner = parse_or()
            take(")")
            return inner
        tok = take()
        if tok in ("(", ")", "&", "|", "!"):
            raise ExprParseError(f"unexpected {tok!r}")
        return _atom_fn(tok)

    fn = parse_or()
    if pos[0] != len(toks):
        raise ExprParseError(f"trailing tokens at {toks[pos[0]]!r}")
    return fn


def search_counterexample(hyp, neg_concl, spec: UniverseSpec):
    """Least space in canonical stream order satisfying both predicates,
    or None.  String arguments go through the expression grammar."""
    if isinstance(hyp, str):
        hyp = parse_expr(hyp)
    if isinstance(neg_concl, str):
        neg_concl = parse_expr(neg_concl)
    for b in enum_bispaces(spec):
        if hyp(b) and neg_concl(b):
            return b
    return None


def report_lines(rep: CheckReport) -> str:
    status = "ok" if not rep.violations else f"{len(rep.violations)} VIOLATIONS"
    flag = "" if rep.complete else " [budget exceeded]"
    return (f"{rep.id:28s} n={rep.n} scanned={rep.scanned:<8d} "
            f"hits={rep.hits:<8d} {status}{flag}")


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2,
                      sort_keys=True)
