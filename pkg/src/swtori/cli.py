"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes: 0 success,
1 a checked identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .alexander import alexander_closed_form, alexander_via_determinant
from .braid import FamilyParams
from .classify import basic_classes, count_formula, distinguish_q2, lambda_closed_form, lambda_set
from .emit import emit
from .ring import dumps, loads
from .swcalc import collapse_count, sw_fiber_sum_general, sw_link_surgery
from .verify import SUITES, SweepSpec, parse_range, run_verify


class UsageError(Exception):
    pass


def _range_arg(text: str):
    try:
        return parse_range(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_poly(path: str):
    try:
        return loads(Path(path).read_text())
    except (OSError, ValueError, KeyError) as exc:
        raise UsageError(f"cannot read polynomial from {path}: {exc}") from None


def cmd_alexander(args) -> int:
    det = closed = None
    if args.method in ("det", "both"):
        det = alexander_via_determinant(args.p, args.q)
    if args.method in ("closed", "both"):
        closed = alexander_closed_form(args.p, args.q)
    if args.method != "both":
        sys.stdout.write(emit(det if det is not None else closed, args.format))
        return 0
    match = det == closed
    if args.format == "json":
        sys.stdout.write(emit({"determinant": det, "closed_form": closed, "match": match}, "json"))
    else:
        sys.stdout.write(f"determinant: {det}\nclosed form: {closed}\nmatch: {'yes' if match else 'NO'}\n")
    return 0 if match else 1


def cmd_sw(args) -> int:
    sw = sw_link_surgery(FamilyParams(p=args.p, q=args.q, n=args.n, r=args.r))
    sys.stdout.write(emit(sw.poly, args.format))
    return 0


def cmd_fibersum(args) -> int:
    sw_x = _read_poly(args.swx)
    sw = sw_fiber_sum_general(sw_x, args.fiber_var, args.r, args.p, args.q)
    sys.stdout.write(emit(sw.poly, args.format))
    return 0


def cmd_collapse(args) -> int:
    poly = _read_poly(args.infile)
    collapsed, count = collapse_count(poly, args.fiber_var)
    if args.format == "json":
        sys.stdout.write(emit({"collapsed": collapsed, "term_count": count}, "json"))
    else:
        sys.stdout.write(f"{collapsed}\nterm count: {count}\n")
    return 0


def cmd_basic_classes(args) -> int:
    report = basic_classes(sw_link_surgery(FamilyParams(p=args.p, q=args.q, n=args.n, r=args.r)))
    if args.csv:
        Path(args.csv).write_text(emit(report, "csv"))
    sys.stdout.write(emit(report, args.format))
    return 0


def cmd_count(args) -> int:
    rows = []
    ok = True
    for n in range(args.n[0], args.n[1] + 1):
        for p in range(args.p[0], args.p[1] + 1):
            for q in range(args.q[0], args.q[1] + 1):
                row = {"n": n, "p": p, "q": q, "formula": count_formula(n, p, q)}
                if args.verify:
                    enumerated = basic_classes(sw_link_surgery(FamilyParams(p=p, q=q, n=n, r=1))).count
                    lam = lambda_set(n, p, q).cardinality
                    match = (
                        enumerated == row["formula"]
                        and lam == lambda_closed_form(n, p, q)
                        and enumerated == lam + 2 * n
                    )
                    row.update(enumerated=enumerated, lambda_size=lam, match=match)
                    if not match and ok:
                        ok = False
                        print(f"mismatch at n={n} p={p} q={q}: {row}", file=sys.stderr)
                rows.append(row)
    sys.stdout.write(emit(rows, args.format))
    return 0 if ok else 1


def cmd_distinguish(args) -> int:
    result = distinguish_q2(args.n, args.p1, args.p2)
    sys.stdout.write(emit(result, "json" if args.json else args.format))
    return 0


def cmd_verify(args) -> int:
    spec = SweepSpec(suite=args.suite, p=args.p, q=args.q, n=args.n, r=args.r)
    report = run_verify(spec)
    sys.stdout.write(emit(report, args.format))
    failure = report.first_failure()
    if failure is not None:
        print(
            f"first counterexample: {failure.suite}: {failure.identity} [{failure.cell_str()}]\n"
            f"{failure.counterexample}",
            file=sys.stderr,
        )
        return 1
    if not report.results:
        raise UsageError("the selected ranges leave no cells to check")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="swtori",
        description="Alexander polynomials of L_{p,q}, SW invariants of the associated "
        "link surgery manifolds, and basic-class statistics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family(p, *names, fmt=("text", "json", "csv")):
        for name in names:
            p.add_argument(f"--{name}", type=int, required=True)
        if fmt:
            p.add_argument("--format", choices=fmt, default="text")

    p = sub.add_parser("alexander", help="Alexander polynomial of L_{p,q}")
    family(p, "p", "q", fmt=("text", "json"))
    p.add_argument("--method", choices=("det", "closed", "both"), default="both")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("sw", help="SW invariant of E(n,r)_{L_{p,q}}")
    family(p, "n", "r", "p", "q")
    p.set_defaults(func=cmd_sw)

    p = sub.add_parser("fibersum", help="SW of X # E(r) along T_{p,q}, given SW of X")
    p.add_argument("--swx", required=True, metavar="FILE", help="canonical polynomial JSON for SW of X")
    p.add_argument("--fiber-var", required=True)
    family(p, "r", "p", "q")
    p.set_defaults(func=cmd_fibersum)

    p = sub.add_parser("collapse", help="set tau equal to the fiber class and count terms")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--fiber-var", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_collapse)

    p = sub.add_parser("basic-classes", help="basic classes of E(n,r)_{L_{p,q}}")
    family(p, "n", "r", "p", "q")
    p.add_argument("--csv", metavar="PATH", help="also write the class table as CSV")
    p.set_defaults(func=cmd_basic_classes)

    p = sub.add_parser("count", help="basic-class count formula over a grid")
    for name in ("n", "p", "q"):
        p.add_argument(f"--{name}", type=_range_arg, required=True, metavar="A..B")
    p.add_argument("--verify", action="store_true", help="enumerate and compare; exit 1 on mismatch")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("distinguish", help="compare E(n,r)_{L_{p1,2}} and E(n,r)_{L_{p2,2}}")
    family(p, "n", "p1", "p2", fmt=("text", "json", "csv"))
    p.add_argument("--json", action="store_true", help="shorthand for --format json")
    p.set_defaults(func=cmd_distinguish)

    p = sub.add_parser("verify", help="run verification suites over parameter grids")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    for name in ("p", "q", "n", "r"):
        p.add_argument(f"--{name}", type=_range_arg, default=None, metavar="A..B")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
