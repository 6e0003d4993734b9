"""Command-line front end.

Exit status: 0 when every checked verdict matches, 1 on a mismatch, 2 on a
usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import shlex
import sys
from collections.abc import Sequence

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(ValueError):
    pass


def _dump(payload: dict, path: str | None) -> None:
    if path is None:
        return
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def split_generators(text: str) -> list[str]:
    """``"(1,2),(3,4)(5,6)"`` -> ``["(1,2)", "(3,4)(5,6)"]``."""
    text = text.strip()
    if not re.fullmatch(r"(\(\s*\d+(\s*,\s*\d+)*\s*\)\s*,?\s*)+", text):
        raise UsageError(f"cannot read generators {text!r}")
    return [g.strip() for g in re.split(r"(?<=\))\s*,\s*(?=\()", text)]


def _ring_summary(S) -> dict:
    from .perm import conjugacy_class
    from .sring import has_principal_set, is_commutative

    return {
        "dimension": S.dimension,
        "commutative": is_commutative(S),
        "c2_principal": has_principal_set(S, conjugacy_class(S.degree, (2,))),
        "sizes": S.sizes(),
    }


def cmd_verify_all(args) -> int:
    from .classification import verify_all

    report = verify_all(jobs=args.jobs)
    print(report.summary())
    _dump(report.to_json(), args.json)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_report(args) -> int:
    return cmd_verify_all(args)


def cmd_build_sring(args) -> int:
    from .algebra import parse_element
    from .sring import closure, closure_with_center

    try:
        with open(args.seed, encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    except OSError as exc:
        raise UsageError(f"cannot read seed file: {exc}") from None
    if not lines:
        raise UsageError("seed file has no elements")
    try:
        seed = [parse_element(ln, args.degree) for ln in lines]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    S = closure(seed) if args.no_center else closure_with_center(seed, args.degree)
    info = _ring_summary(S)
    print(f"closure of {len(seed)} seed elements: dimension {info['dimension']}, "
          f"commutative={info['commutative']}, C2 principal={info['c2_principal']}")
    _dump({"seeds": lines, **info, "ring": S.to_json()}, args.json)
    return EXIT_OK


def cmd_orbit_sring(args) -> int:
    from .perm import generate_subgroup, parse_cycles
    from .sring import orbit_sring

    try:
        gens = [parse_cycles(g, args.degree) for g in split_generators(args.gens)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    H = generate_subgroup(gens, args.degree)
    S = orbit_sring(args.degree, H)
    info = _ring_summary(S)
    print(f"|H| = {len(H)}; dimension {info['dimension']}; commutative={info['commutative']}; "
          f"C2 principal={info['c2_principal']}")
    _dump({"generators": split_generators(args.gens), "order": len(H), **info, "ring": S.to_json()}, args.json)
    return EXIT_OK


def cmd_covers(args) -> int:
    from . import covers

    if args.shape == "triangle":
        if args.r is None:
            raise UsageError("--shape triangle needs --r")
        try:
            orbits = covers.enumerate_triangle_covers(args.r)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        total = sum(o.orbit_size for o in orbits)
        print(f"r={args.r}: {total} covers in {len(orbits)} S6-orbits")
        _dump({"shape": "triangle", "r": args.r, "covers": total, "orbits": [o.to_json() for o in orbits]}, args.json)
    else:
        classes = covers.enumerate_15element_edgepair_covers()
        total = sum(len(c) for c in classes)
        print(f"15-element edge-pair covers: {total} covers in {len(classes)} S6-orbits")
        _dump({"shape": "edgepair", "covers": total, "orbits": [len(c) for c in classes],
               "representatives": [c[0].to_strings() for c in classes]}, args.json)
    return EXIT_OK


def cmd_search(args) -> int:
    from . import search

    if args.case == "C3-signs":
        verdict = search.sign_system_c3()
        out = verdict.to_json()
        print(f"C3-signs: scanned {out['scanned']}, {out['verbatim_solutions']} satisfy the sign equalities, "
              f"{out['solutions']} survive the constancy rows")
        _dump({"case": "C3-signs", **out}, args.json)
        return EXIT_OK
    if args.case not in search.NAMED_CASES:
        raise UsageError(f"unknown case {args.case!r}; known: C3-signs, {', '.join(search.NAMED_CASES)}")
    implied = None if args.implied is None else args.implied == "on"
    result = search.run_case(args.case, implied=implied, skip=args.skip or (), jobs=args.jobs)
    classes = ", ".join(f"{c.count} (orbit {c.orbit_size})" for c in result.classes) or "none"
    print(f"{args.case}: {len(result.solutions)} solutions; classes: {classes}")
    failures = [f for C in result.sets() for f in search.recheck(result.system, C)]
    if failures:
        print(f"algebra-level recheck failed: {failures[:5]}")
    _dump(result.to_json(), args.json)
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurring", description="Schur rings over S6: construction and verification")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, jobs: bool = False):
        p.add_argument("--json", metavar="PATH", help="write the JSON result here ('-' for stdout)")
        if jobs:
            p.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes (default: all cores)")
        return p

    p = common(sub.add_parser("verify-all", help="run the whole classification"), jobs=True)
    p.set_defaults(func=cmd_verify_all)
    p = sub.add_parser("report", help="run the classification and write its JSON report")
    p.add_argument("--json", metavar="PATH", required=True)
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_report)
    p = common(sub.add_parser("build-sring", help="close a seed file of algebra elements"))
    p.add_argument("--seed", required=True, help="one element per line, e.g. 1*(1,2) + 1*(3,4)")
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--no-center", action="store_true", help="do not add the class sums")
    p.set_defaults(func=cmd_build_sring)
    p = common(sub.add_parser("orbit-sring", help="orbit S-ring of a subgroup"))
    p.add_argument("--gens", required=True, help='generators, e.g. "(1,2),(3,4)"')
    p.add_argument("--degree", type=int, default=6)
    p.set_defaults(func=cmd_orbit_sring)
    p = common(sub.add_parser("covers", help="enumerate covers of K6"))
    p.add_argument("--shape", choices=("triangle", "edgepair"), default="triangle")
    p.add_argument("--r", type=int)
    p.set_defaults(func=cmd_covers)
    p = common(sub.add_parser("search", help="solve a named constraint system"), jobs=True)
    p.add_argument("--case", required=True)
    p.add_argument("--implied", choices=("on", "off"), help="override the implied constancy rows")
    p.add_argument("--skip", action="append", metavar="LABEL", help="drop a labelled condition")
    p.set_defaults(func=cmd_search)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if getattr(args, "jobs", 1) is not None and getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    print("invocation: schurring " + shlex.join(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
