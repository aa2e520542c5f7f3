"""Command-line interface.

Exit codes: 0 success, 1 mathematical mismatch or invalid rack,
2 usage or parse error, 3 resource budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import __version__
from .autgroup import classify_virtual
from .dihedral import v_dihedral_brute, v_dihedral_closed, v_dihedral_tau_sum
from .enumeration import KINDS, MAX_ORDER, BudgetExhausted, census
from .families import FAMILIES, FamilyQuery, v_family
from .numtheory import totient
from .perm import GroupTooLarge
from .rack import RackAxiomError, RackFormatError, RackTable, dihedral_quandle, find_violations, is_quandle, load_rows

SUITE_NAMES = ("numtheory", "perm", "rack-axioms", "canonical-form", "autgroup", "dihedral",
               "families", "enumeration")

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

DIHEDRAL_BRUTE_LIMIT = 20000  # holomorph elements
DIHEDRAL_RACK_LIMIT = 64  # order of R_n


def _load(path: str) -> list[list[int]]:
    try:
        return load_rows(path)
    except OSError as exc:
        raise RackFormatError(str(exc)) from None


def cmd_validate(args) -> int:
    rows = _load(args.path)
    violations = find_violations(rows)
    if not violations:
        R = RackTable(rows, check=False)
        print(f"valid {'quandle' if is_quandle(R) else 'rack'} of order {R.n}")
        return EXIT_OK
    print(f"invalid: {len(violations)} violation(s)")
    for v in violations:
        y = "-" if v.y is None else v.y
        print(f"  x={v.x} y={y} {v.kind}")
    return EXIT_MISMATCH


def cmd_classify(args) -> int:
    R = RackTable(_load(args.path))
    report = classify_virtual(R).to_dict()
    print(f"v = {report['v']}")
    print(f"aut_order = {report['aut_order']}")
    if args.report:
        with open(args.report, "w") as fh:
            json.dump(report, fh)
            fh.write("\n")
    if args.json:
        print(json.dumps(report))
    return EXIT_OK


def cmd_census(args) -> int:
    bfile = open(args.bfile, "w") if args.bfile else None
    try:
        for row in census(args.max_order, args.kind, parallel=args.parallel,
                          budget_secs=args.budget, allow_stretch=args.stretch):
            print(json.dumps(row.to_dict()), flush=True)
            if not row.complete:
                print(f"budget exhausted at order {row.order}", file=sys.stderr)
                return EXIT_BUDGET
            if bfile:
                bfile.write(f"{row.order} {row.virtual}\n")
                bfile.flush()
    finally:
        if bfile:
            bfile.close()
    return EXIT_OK


def read_bfile(path: str) -> dict[int, int]:
    out = {}
    with open(path) as fh:
        for line in fh:
            if line.strip() and not line.startswith("#"):
                m, a = line.split()
                out[int(m)] = int(a)
    return out


def cmd_dihedral(args) -> int:
    n = args.n
    if n < 1:
        print("--n must be positive", file=sys.stderr)
        return EXIT_USAGE
    values = {"closed-form": v_dihedral_closed(n), "tau-sum": v_dihedral_tau_sum(n)}
    if n * totient(n) <= DIHEDRAL_BRUTE_LIMIT:
        values["brute-force"] = v_dihedral_brute(n)
    if n <= DIHEDRAL_RACK_LIMIT:
        values["rack-level"] = classify_virtual(dihedral_quandle(n)).v
    for method, value in values.items():
        print(f"{method}: {value}")
    for method in ("brute-force", "rack-level"):
        if method not in values:
            print(f"{method}: skipped (n = {n} is beyond desk scale)")
    if len(set(values.values())) != 1:
        print("MISMATCH between methods")
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_family(args) -> int:
    answer = v_family(FamilyQuery(args.family, args.param))
    print(json.dumps(answer.to_dict()))
    return EXIT_MISMATCH if answer.mismatch else EXIT_OK


def cmd_verify(args) -> int:
    from .verify import run_all

    ok = True
    for res in run_all(args.level, args.seed, args.suite):
        status = "PASS" if res.ok else "FAIL"
        print(f"{status} {res.name} ({res.seconds:.2f}s)", flush=True)
        for msg in res.failures[:20]:
            print(f"  - {msg}")
        for note in res.notes:
            print(f"  note: {note}")
        ok &= res.ok
    return EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vrc", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a rack file against the rack axioms")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("classify", help="classify virtual structures on a rack")
    p.add_argument("path")
    p.add_argument("--report", help="write the JSON classification report here")
    p.add_argument("--json", action="store_true", help="also print the report")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="count racks/quandles and their virtual structures")
    p.add_argument("--max-order", type=int, required=True, choices=range(1, MAX_ORDER + 1),
                   metavar=f"1..{MAX_ORDER}")
    p.add_argument("--kind", choices=KINDS, default="rack")
    p.add_argument("--bfile", help="write 'm a(m)' lines of virtual counts here")
    p.add_argument("--parallel", type=int, default=1)
    p.add_argument("--budget", type=float, default=None,
                   help="seconds per order (default: $VRC_BUDGET_SECS or 3600)")
    p.add_argument("--stretch", action="store_true", help="allow orders 7 and 8")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("dihedral", help="compare the routes to v(R_n)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dihedral)

    p = sub.add_parser("family", help="closed-form vs computed v for a named family")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--param", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", choices=SUITE_NAMES,
                   help="run only this suite (repeatable)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (RackFormatError, RackAxiomError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GroupTooLarge, BudgetExhausted) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
