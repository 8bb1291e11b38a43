"""Command-line front end: space I/O, analysis reports, theorem runs,
counterexample search, enumeration statistics.

Space documents are JSON objects {"n": int, "tau1": [[points]],
"tau2": [[points]], "labels": [names]?}; sets are ascending index
lists, order-insensitive on input and canonical on output.

Exit codes: 0 ok, 1 violation found, 2 usage/parse error, 3 budget
exceeded.
"""

import argparse
import json
import sys

from .bispace import BiSpace, FAMILY_KINDS, family, relation_witness
from .dimension import ij_ind_zero, p_Ind_zero, p_ind_zero, top_Ind, top_ind
from .dspace import is_D_space, is_ij_D_space
from .enumeration import UniverseSpec, enum_bispaces, enum_topologies
from .errors import (GroundSetTooLarge, MissingEmptyOrFull,
                     NotClosedUnderIntersection, NotClosedUnderUnion,
                     UnknownTheorem)
from .harness import (ExprParseError, check_ids, parse_expr, report_lines,
                      reports_to_json, run_all, run_check,
                      search_counterexample)
from .properties import check as prop_check, property_ids
from .sets import format_set, mask_of, points
from .topology import validate_topology


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    pass


def parse_space_document(text: str, where: str = "<input>") -> BiSpace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{where}: line {exc.lineno}, column {exc.colno}: {exc.msg}")
    for key in ("n", "tau1", "tau2"):
        if key not in doc:
            raise ParseError(f"{where}: missing field {key!r}")
    n = doc["n"]
    labels = doc.get("labels")
    if labels is not None and len(labels) != n:
        raise ParseError(f"{where}: labels must list exactly {n} names")
    tops = []
    for key in ("tau1", "tau2"):
        fam = []
        for sset in doc[key]:
            if any(not isinstance(x, int) or not 0 <= x < n for x in sset):
                raise ParseError(f"{where}: {key} contains an index "
                                 f"outside 0..{n - 1}")
            fam.append(mask_of(sset))
        try:
            tops.append(validate_topology(n, fam))
        except NotClosedUnderUnion as exc:
            a, c = exc.witness
            raise ValidationError(
                f"{where}: {key} is not closed under union: "
                f"{format_set(a, labels)} | {format_set(c, labels)} missing")
        except NotClosedUnderIntersection as exc:
            a, c = exc.witness
            raise ValidationError(
                f"{where}: {key} is not closed under intersection: "
                f"{format_set(a, labels)} & {format_set(c, labels)} missing")
        except MissingEmptyOrFull:
            raise ValidationError(
                f"{where}: {key} must contain the empty set and the "
                "full ground set")
    return BiSpace(tops[0], tops[1])


def load_space(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        labels = json.loads(text).get("labels")
    except Exception:
        labels = None
    return parse_space_document(text, where=path), labels


def emit_space_document(b: BiSpace, labels=None) -> str:
    doc = {"n": b.n,
           "tau1": [sorted(points(u)) for u in b.t1.opens],
           "tau2": [sorted(points(u)) for u in b.t2.opens]}
    if labels:
        doc["labels"] = list(labels)
    return json.dumps(doc, sort_keys=True, separators=(", ", ": ")) + "\n"


# -- analyze -------------------------------------------------------------------

def analyze_space(b: BiSpace) -> dict:
    out = {"n": b.n, "relations": dict(b.flags), "properties": {},
           "witnesses": {}, "families": {}, "dimension": {}, "d_space": {}}
    for pid in property_ids():
        ok, wit = prop_check(b, pid)
        out["properties"][pid] = ok
        if wit:
            out["witnesses"][pid] = {k: sorted(points(v))
                                     for k, v in wit.items()
                                     if isinstance(v, int)}
    for kind in FAMILY_KINDS:
        out["families"][kind] = len(family(b, kind))
    out["dimension"] = {
        "ind-zero.12": ij_ind_zero(b, 1, 2),
        "ind-zero.21": ij_ind_zero(b, 2, 1),
        "ind-zero.p": p_ind_zero(b),
        "large-ind-zero.p": p_Ind_zero(b),
        "top-ind.1": top_ind(b.t1), "top-ind.2": top_ind(b.t2),
        "top-Ind.1": top_Ind(b.t1), "top-Ind.2": top_Ind(b.t2),
    }
    for sfx, pair in (("12", (1, 2)), ("21", (2, 1))):
        ok, wit = is_ij_D_space(b, *pair)
        out["d_space"][f"d-space.{sfx}"] = ok
        if ok:
            out["d_space"][f"d-space.{sfx}.witness"] = sorted(points(wit))
    for i, t in ((1, b.t1), (2, b.t2)):
        ok, wit = is_D_space(t)
        out["d_space"][f"d-space.{i}"] = ok
        if ok:
            out["d_space"][f"d-space.{i}.witness"] = sorted(points(wit))
    return out


def _print_analysis(out: dict, labels):
    def fmt(pts):
        return "{" + ",".join(labels[p] if labels else str(p)
                              for p in pts) + "}"

    print(f"ground set: {out['n']} points")
    print("relations: " + "  ".join(
        f"{k}={str(v).lower()}" for k, v in sorted(out["relations"].items())))
    print("dimension flags: " + "  ".join(
        f"{k}={str(v).lower()}" for k, v in sorted(out["dimension"].items())))
    print("d-space flags: " + "  ".join(
        f"{k}={str(v).lower()}" for k, v in sorted(out["d_space"].items())
        if not k.endswith(".witness")))
    for k in sorted(out["d_space"]):
        if k.endswith(".witness"):
            print(f"  {k[:-8]} witness: {fmt(out['d_space'][k])}")
    print("family sizes: " + "  ".join(
        f"{k}={v}" for k, v in sorted(out["families"].items())))
    print("properties:")
    for pid in sorted(out["properties"]):
        line = f"  {pid} = {str(out['properties'][pid]).lower()}"
        wit = out["witnesses"].get(pid)
        if wit:
            line += "   witness: " + " ".join(
                f"{role}={fmt(pts)}" for role, pts in sorted(wit.items()))
        print(line)


def cmd_analyze(args) -> int:
    try:
        b, labels = load_space(args.path)
    except (ParseError, ValidationError) as exc:
        print(exc, file=sys.stderr)
        return 2
    out = analyze_space(b)
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        _print_analysis(out, labels)
    return 0


# -- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    budget = args.budget
    try:
        if args.all:
            reports = run_all(args.n, cheap_only=args.cheap, budget=budget)
        else:
            if not args.theorem:
                print("verify needs --theorem ID or --all", file=sys.stderr)
                return 2
            reports = [run_check(args.theorem, args.n, budget=budget)]
    except UnknownTheorem as exc:
        print(f"unknown theorem id {exc.args[0]!r}; known ids:",
              file=sys.stderr)
        print("  " + " ".join(check_ids()), file=sys.stderr)
        return 2
    if args.json:
        print(reports_to_json(reports))
    else:
        for rep in reports:
            print(report_lines(rep))
    if any(r.violations for r in reports):
        return 1
    if any(not r.complete for r in reports):
        return 3
    return 0


# -- search --------------------------------------------------------------------

def cmd_search(args) -> int:
    try:
        hyp = parse_expr(args.hyp)
        neg = parse_expr(args.not_concl)
    except ExprParseError as exc:
        print(f"expression error: {exc}", file=sys.stderr)
        return 2
    try:
        spec = UniverseSpec(args.n, _constraint(args.constraint),
                            args.dedupe)
    except (GroundSetTooLarge, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 2
    found = search_counterexample(hyp, neg, spec)
    if found is None:
        print("none")
        return 0
    doc = emit_space_document(found)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(doc)
        print(f"witness written to {args.out}")
    else:
        sys.stdout.write(doc)
    return 1


def _constraint(short: str) -> str:
    return {"none": "none", "incl": "inclusion", "C": "C", "N": "N",
            "S": "S"}[short]


# -- enumerate -------------------------------------------------------------------

def cmd_enumerate(args) -> int:
    try:
        spec = UniverseSpec(args.n, _constraint(args.constraint),
                            args.dedupe)
    except (GroundSetTooLarge, ValueError) as exc:
        print(exc, file=sys.stderr)
        return 2
    if args.dump:
        for b in enum_bispaces(spec, workers=args.workers):
            sys.stdout.write(emit_space_document(b))
        return 0
    topo = sum(1 for _ in enum_topologies(args.n))
    pairs = sum(1 for _ in enum_bispaces(spec, workers=args.workers))
    out = {"n": args.n, "topologies": topo, "pairs": pairs,
           "constraint": spec.constraint, "dedupe": spec.dedupe}
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(f"n={args.n}: {topo} topologies, {pairs} pairs "
              f"(constraint={spec.constraint}, dedupe={spec.dedupe})")
    return 0


# -- entry ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="bitopo",
        description="finite bitopological space laboratory")
    sub = ap.add_subparsers(dest="command")

    p = sub.add_parser("analyze", help="full property report for one space")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="run registered theorem checks")
    p.add_argument("--theorem", help="check id, e.g. thm-3.2")
    p.add_argument("--all", action="store_true")
    p.add_argument("--cheap", action="store_true",
                   help="with --all: only the cheap subset")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--budget", type=int, default=None,
                   help="cap on scanned instances")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("search", help="hunt for a counterexample space")
    p.add_argument("--hyp", required=True)
    p.add_argument("--not-concl", dest="not_concl", required=True)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--constraint", default="none",
                   choices=["none", "incl", "C", "N", "S"])
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("-o", "--out", default=None)

    p = sub.add_parser("enumerate", help="universe statistics or dump")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--constraint", default="none",
                   choices=["none", "incl", "C", "N", "S"])
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--dump", action="store_true")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--json", action="store_true")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze":
        return cmd_analyze(args)
    if args.command == "verify":
        return cmd_verify(args)
    if args.command == "search":
        return cmd_search(args)
    if args.command == "enumerate":
        return cmd_enumerate(args)
    build_parser().print_help()
    return 2


if __name__ == "__main__":
    sys.exit(main())
