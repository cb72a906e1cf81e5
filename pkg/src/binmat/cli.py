"""Command-line front end.

Exit codes: 0 success or true, 1 false or a failed check, 2 usage error,
3 internal assertion failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import catalog
from .canonical import canonical_key, isomorphism
from .classify import ExhaustivenessViolation, classify
from .compose import (StarfishSpec, TriangleGlue, build_starfish, direct_sum,
                      parallel_connection_triangle, three_sum, two_sum)
from .connectivity import internal_4_witness, is_three_connected, tau
from .enumerate import (COSIMPLE, INTERNALLY_4_CONNECTED, SIMPLE, THREE_CONNECTED,
                        catalog_names_by_key, closure_search, excluding)
from .matroid import BinaryMatroid, from_text, to_text
from .minors import RootedPattern, find_minor, find_rooted_minor

EXIT_TRUE, EXIT_FALSE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

KEEP = {"simple": SIMPLE, "cosimple": COSIMPLE, "3connected": THREE_CONNECTED,
        "i4c": INTERNALLY_4_CONNECTED}


class UsageError(Exception):
    pass


def resolve(arg: str) -> BinaryMatroid:
    """A catalog name, else a matrix file; both at once is ambiguous."""
    known = catalog.is_known(arg)
    is_file = os.path.isfile(arg)
    if known and is_file:
        raise UsageError(f"{arg!r} is both a catalog name and a file; rename the file")
    if known:
        return catalog.named(arg)
    if is_file:
        with open(arg) as fh:
            try:
                return from_text(fh.read())
            except ValueError as exc:
                raise UsageError(f"{arg}: {exc}") from None
    raise UsageError(f"{arg!r} is neither a catalog name nor a readable file")


def resolve_pattern(arg: str) -> RootedPattern:
    if arg == "K4'":
        return catalog.k4_prime()
    if arg == "K4''":
        return catalog.k4_double_prime()
    raise UsageError("rooted patterns are K4' and K4''")


def _labels(M: BinaryMatroid, text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in M.ground_set:
            out.append(tok)
        elif tok.lstrip("-").isdigit() and int(tok) in M.ground_set:
            out.append(int(tok))
        else:
            raise UsageError(f"{tok!r} is not an element of {M.name or 'the matroid'}")
    return out


def _emit(args, payload: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, indent=2, default=str))
    else:
        print(text)


def _describe(M: BinaryMatroid) -> dict:
    return {"name": M.name, "size": len(M), "rank": M.rank,
            "elements": [str(e) for e in M.elements], "key": canonical_key(M).hex()}


# -- commands --------------------------------------------------------------------

def cmd_list(args) -> int:
    for n in catalog.names():
        print(n)
    print("# also: W<n>, Z<r>, Z<r>*, Z<r>\\y, Z<r>\\t, M*(K3,<n>)[+extra], starfish(extra,n,t)")
    return EXIT_TRUE


def cmd_show(args) -> int:
    M = resolve(args.matroid)
    text = to_text(M, full=not args.reduced)
    _emit(args, {**_describe(M), "text": text}, text.rstrip("\n"))
    return EXIT_TRUE


def cmd_connectivity(args) -> int:
    M = resolve(args.matroid)
    t = tau(M)
    w = internal_4_witness(M)
    payload = {"tau": None if t == float("inf") else t, "three_connected": is_three_connected(M),
               "internally_4_connected": w is None, "witness": w.to_json() if w else None}
    lines = [f"tau: {'inf' if t == float('inf') else t}",
             f"3-connected: {payload['three_connected']}",
             f"internally 4-connected: {w is None}"]
    if w:
        lines.append(f"separation: X={sorted(w.side_x, key=str)} lambda={w.lam}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_TRUE


def cmd_iso(args) -> int:
    A, B = resolve(args.left), resolve(args.right)
    phi = isomorphism(A, B)
    payload = {"isomorphic": phi is not None,
               "map": {str(k): str(v) for k, v in phi.items()} if phi else None}
    _emit(args, payload, "true" if phi is not None else "false")
    return EXIT_TRUE if phi is not None else EXIT_FALSE


def cmd_minor(args) -> int:
    M = resolve(args.host)
    if args.rooted:
        pat = resolve_pattern(args.target)
        T = _labels(M, args.rooted)
        try:
            w = find_rooted_minor(M, T, pat)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    else:
        w = find_minor(M, resolve(args.target))
    payload = {"minor": w is not None, "witness": w.to_json() if w else None}
    text = "true" if w else "false"
    if w:
        text += f"\ncontract: {' '.join(sorted(map(str, w.contracted)))}\ndelete: {' '.join(sorted(map(str, w.deleted)))}"
    _emit(args, payload, text)
    return EXIT_TRUE if w else EXIT_FALSE


def cmd_classify(args) -> int:
    M = resolve(args.matroid)
    label = classify(M, refine_regular_clause=args.refine_regular)
    payload = label.to_json()
    cert = payload.get("certificate")
    text = label.kind if cert is None else f"{label.kind} {json.dumps(cert, default=str)}"
    if label.detail and "refined" in label.detail:
        text += f" ({label.detail['refined']})"
    _emit(args, payload, text)
    return EXIT_TRUE


def cmd_enumerate(args) -> int:
    seeds = [resolve(s) for s in args.seed]
    filters = []
    for k in args.keep:
        if k not in KEEP:
            raise UsageError(f"--keep must be one of {', '.join(KEEP)}")
        filters.append(KEEP[k])
    for f in args.forbid:
        filters.append(excluding(resolve(f), f))
    rep = closure_search(seeds, filters, max_steps=args.steps, max_size=args.max_size)
    if args.json:
        print(json.dumps(rep.to_json(), indent=2))
        return EXIT_TRUE
    names = catalog_names_by_key()
    print(f"steps: {rep.steps}  fixpoint: {rep.fixpoint}  added per step: {rep.added_per_step}")
    for f in rep.ordered():
        tag = "seed" if f.step == 0 else f"step {f.step}"
        print(f"{f.size:3d} {f.rank:3d}  {names.get(f.key.data, f.key.hex()[:24])}  ({tag})")
    return EXIT_TRUE


def cmd_compose(args) -> int:
    A, B = resolve(args.left), resolve(args.right)
    try:
        if args.op == "dsum":
            M = direct_sum(A, B)
        elif args.op == "2sum":
            if not (args.p1 and args.p2):
                raise UsageError("2sum needs --p1 and --p2")
            M = two_sum(A, B, _labels(A, args.p1)[0], _labels(B, args.p2)[0])
        else:
            if not (args.left_triangle and args.right_triangle):
                raise UsageError(f"{args.op} needs --left-triangle and --right-triangle")
            g = TriangleGlue.of(A, _labels(A, args.left_triangle), B, _labels(B, args.right_triangle))
            M = three_sum(g) if args.op == "3sum" else parallel_connection_triangle(g)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = to_text(M)
    _emit(args, {**_describe(M), "text": text}, text.rstrip("\n"))
    return EXIT_TRUE


def cmd_starfish(args) -> int:
    spec = StarfishSpec(args.extra, args.n, args.t)
    try:
        M = build_starfish(spec)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = to_text(M)
    _emit(args, {**_describe(M), "spec": spec.to_json(), "text": text}, text.rstrip("\n"))
    return EXIT_TRUE


def cmd_verify_paper(args) -> int:
    from .verify import CASES, run_case

    ids = sorted(CASES) if not args.case else args.case
    for c in ids:
        if c not in CASES:
            raise UsageError(f"unknown case {c!r}; known: {', '.join(sorted(CASES))}")
    results = [run_case(c) for c in ids]
    results.sort(key=lambda r: r.id)
    if args.json:
        print(json.dumps([r.to_json() for r in results], indent=2, default=str))
    else:
        for r in results:
            print(f"{r.status.upper():4}  {r.id:16} {r.seconds:7.2f}s  {r.description}")
            if r.id == "x10-closure" and "found" in r.details:
                print("      " + ", ".join(r.details["found"]))
            if r.status != "pass":
                print("      " + json.dumps(r.details, default=str)[:2000])
    return EXIT_TRUE if all(r.status == "pass" for r in results) else EXIT_FALSE


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="binmat", description="Exact binary matroid computations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("list", help="list catalog names")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("show", help="print a representation")
    s.add_argument("matroid")
    s.add_argument("--reduced", action="store_true", help="print [I|D] form when possible")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("connectivity", help="Tutte connectivity and internal 4-connectivity")
    s.add_argument("matroid")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_connectivity)

    s = sub.add_parser("iso", help="isomorphism test")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("minor", help="minor containment")
    s.add_argument("host")
    s.add_argument("target", help="matroid, or K4' / K4'' with --rooted")
    s.add_argument("--rooted", metavar="A,B,C", help="triangle of the host to keep as the root")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_minor)

    s = sub.add_parser("classify", help="which clause of the P9-free theorem applies")
    s.add_argument("matroid")
    s.add_argument("--refine-regular", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("enumerate", help="closure under extensions and coextensions")
    s.add_argument("--seed", action="append", required=True)
    s.add_argument("--forbid", action="append", default=[])
    s.add_argument("--keep", action="append", default=[])
    s.add_argument("--steps", type=int, default=1)
    s.add_argument("--max-size", type=int, default=None)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("compose", help="direct sum, 2-sum, parallel connection, 3-sum")
    s.add_argument("left")
    s.add_argument("right")
    s.add_argument("--op", choices=["3sum", "pc", "2sum", "dsum"], required=True)
    s.add_argument("--left-triangle", metavar="A,B,C")
    s.add_argument("--right-triangle", metavar="X,Y,Z")
    s.add_argument("--p1")
    s.add_argument("--p2")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("starfish", help="build a starfish")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--extra", type=int, required=True)
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_starfish)

    s = sub.add_parser("verify-paper", help="recompute the published facts")
    s.add_argument("--case", action="append", help="case id (repeatable); default all")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify_paper)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"binmat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExhaustivenessViolation, AssertionError) as exc:
        print(f"binmat: internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
