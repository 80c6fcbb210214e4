"""Command-line front end.

    periplectic structure --n 2 --p 5
    periplectic weights --n 2 --p 5 --output table
    periplectic verify --suite all --n 2 --p 5 --seed 42
    periplectic module --dump-module "K(L(1,0))" --matrices
    periplectic expr "z(1,2)*y(1,2)"

Exit codes: 0 all checks pass, 1 some check fails, 2 usage error,
3 nothing fails but some check is inconclusive.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time

from . import gf
from . import weights as wts
from .grammar import ParseError
from .pbw import FULL, QUOTIENT, TRUNCATED, PBWAlgebra, z_grade_decompose
from .reports import FAIL, INCONCLUSIVE, PASS, Report
from .reps import baby_verma, g0_baby_verma, kac_module, simple_g0_module
from .structure import build_structure, roots_table
from .suites import SUITES, RunConfig, atypical_rows, run_suites, structure_checks

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3
MAX_WEIGHT_ROWS = 10_000


class UsageError(Exception):
    pass


def _prime(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if p <= 3 or not gf.is_prime(p):
        raise argparse.ArgumentTypeError(f"p = {p} must be a prime > 3")
    return p


def _rank(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if n < 2:
        raise argparse.ArgumentTypeError("n must be at least 2")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_rank, default=2, help="rank n of p(n) (default 2)")
    common.add_argument("--p", type=_prime, default=5, help="prime characteristic > 3 (default 5)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--output", choices=("json", "table"), default="json")
    common.add_argument("--allow-large", action="store_true",
                        help="lift the desk-scale size caps")
    common.add_argument("--timing", action="store_true",
                        help="record wall-clock seconds in the report")

    parser = argparse.ArgumentParser(prog="periplectic", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("structure", parents=[common], help="basis, grading and validity of p(n)")
    sub.add_parser("weights", parents=[common], help="Theta, delta, typicality, linkage classes")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", choices=SUITES + ("all",), default="all")
    m = sub.add_parser("module", parents=[common], help="dump a module as matrices")
    m.add_argument("--dump-module", required=True, metavar="TAG",
                   help="L(mu), Z0(mu), K(mu), K(L(mu)) or Z(mu), e.g. 'K(1,0)'")
    m.add_argument("--matrices", action="store_true", help="include the action matrices")
    e = sub.add_parser("expr", parents=[common], help="normal form of an element")
    e.add_argument("text", help="e.g. '2*z(1,2)*y(1,2) + h(1)'")
    e.add_argument("--mode", choices=(FULL, TRUNCATED, QUOTIENT), default=FULL)
    return parser


# ----- commands ------------------------------------------------------------------------

def cmd_structure(args) -> Report:
    t = build_structure(args.n, args.p)
    rep = Report("structure", args.n, args.p, structure_checks(t))
    rep.extra = {"dims": {str(k): v for k, v in sorted(t.graded_dims().items())},
                 "roots": roots_table(t)}
    return rep


def cmd_weights(args) -> dict:
    if args.p ** args.n > MAX_WEIGHT_ROWS and not args.allow_large:
        raise UsageError(f"p^n = {args.p ** args.n} rows exceed {MAX_WEIGHT_ROWS}; pass --allow-large")
    rows = atypical_rows(args.n, args.p)
    return {
        "params": {"n": args.n, "p": args.p},
        "rows": rows,
        "atypical": sum(1 for r in rows if not r["typical"]),
        "classes": len({r["class"] for r in rows}),
    }


_TAG = re.compile(r"^\s*(L|Z0|Z|K)\(\s*(L\()?([-\d,\s]+)\)?\s*\)\s*$")


def parse_tag(tag: str, n: int, p: int):
    """Split a module tag into (kind, weight)."""
    m = _TAG.match(tag)
    if not m:
        raise UsageError(f"cannot parse module tag {tag!r}")
    kind, inner, body = m.group(1), m.group(2), m.group(3)
    if inner and kind != "K":
        raise UsageError(f"cannot parse module tag {tag!r}")
    if inner and not tag.rstrip().endswith("))"):
        raise UsageError(f"unbalanced parentheses in {tag!r}")
    try:
        mu = wts.parse_weight(body, n, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return kind, mu


def cmd_module(args) -> dict:
    kind, mu = parse_tag(args.dump_module, args.n, args.p)
    t = build_structure(args.n, args.p)
    alg = PBWAlgebra(t, FULL)
    build = {"L": simple_g0_module, "Z0": g0_baby_verma, "K": kac_module, "Z": baby_verma}[kind]
    M = build(t, mu, alg)
    out = M.summary(matrices=args.matrices)
    out["params"] = {"n": args.n, "p": args.p}
    return out


def cmd_expr(args) -> dict:
    t = build_structure(args.n, args.p)
    alg = PBWAlgebra(t, args.mode)
    try:
        u = alg.parse(args.text)
    except ParseError as exc:
        raise UsageError(str(exc)) from None
    return {
        "params": {"n": args.n, "p": args.p},
        "mode": args.mode,
        "normal_form": alg.format(u),
        "z_grades": {str(k): alg.format(v) for k, v in z_grade_decompose(u).items()},
    }


# ----- output --------------------------------------------------------------------------

def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _short(details: dict, width: int = 90) -> str:
    text = ", ".join(f"{k}={v}" for k, v in sorted(details.items()))
    return text if len(text) <= width else text[:width - 3] + "..."


def report_table(rep: Report) -> str:
    lines = [f"suite {rep.suite}  n={rep.n}  p={rep.p}"]
    if "dims" in rep.extra:
        lines.append("dims " + "  ".join(f"g{k}:{v}" for k, v in rep.extra["dims"].items()))
    for c in sorted(rep.checks, key=lambda c: c.name):
        lines.append(f"{c.status.upper():<13} {c.name:<44} {_short(c.to_json()['details'])}")
    if rep.timing is not None:
        lines.append(f"timing {rep.timing}")
    lines.append(f"overall {rep.status}")
    return "\n".join(lines)


def weights_table(data: dict) -> str:
    lines = [f"{'weight':<12}{'Theta':>6}{'delta':>7}  {'typical':<9}class"]
    for r in data["rows"]:
        lines.append(f"{r['weight']:<12}{r['theta']:>6}{r['delta']:>7}  "
                     f"{'yes' if r['typical'] else 'no':<9}{r['class']}")
    lines.append(f"{len(data['rows'])} weights, {data['atypical']} atypical, "
                 f"{data['classes']} linkage classes")
    return "\n".join(lines)


def exit_code(rep: Report) -> int:
    return {PASS: EXIT_OK, FAIL: EXIT_FAIL, INCONCLUSIVE: EXIT_INCONCLUSIVE}[rep.status]


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        if args.command in ("structure", "verify"):
            if args.command == "structure":
                start = time.perf_counter()
                rep = cmd_structure(args)
                if args.timing:
                    rep.timing = {"seconds": round(time.perf_counter() - start, 3)}
            else:
                cfg = RunConfig(args.n, args.p, args.seed, args.allow_large)
                names = SUITES if args.suite == "all" else (args.suite,)
                rep = run_suites(names, cfg, timing=args.timing)
            print(_dumps(rep.to_json()) if args.output == "json" else report_table(rep))
            return exit_code(rep)
        if args.command == "weights":
            data = cmd_weights(args)
            print(_dumps(data) if args.output == "json" else weights_table(data))
            return EXIT_OK
        if args.command == "module":
            print(_dumps(cmd_module(args)))
            return EXIT_OK
        data = cmd_expr(args)
        if args.output == "json":
            print(_dumps(data))
        else:
            print(data["normal_form"])
        return EXIT_OK
    except (UsageError, ValueError) as exc:
        print(f"periplectic: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
