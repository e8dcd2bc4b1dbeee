"""Command-line front end: tables, products, fits, and verification suites.

All output is deterministic: JSON with sorted keys, canonical partition
ordering, and recorded seeds for the randomized suites. Exit codes:
0 success, 1 verification failure, 2 resource cap, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import jm, suites
from .errors import ResourceCapError, SpinFHError
from .fh import FitResult, fit_structure_poly, graded_product
from .groupalgebra import (
    ORDINARY,
    SPIN,
    class_sum,
    decompose_central,
    elem_mul,
    structure_constants,
    top_degree,
)
from .partitions import Partition
from .spingroup import enumerate_class

USAGE_EXIT = 64
FAIL_EXIT = 1
CAP_EXIT = 2

# Default desk-scale budgets; --unsafe-n lifts them.
MAX_PRODUCT_N = 9
MAX_ENUM_N = 10


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(USAGE_EXIT)


def _partition(text: str) -> Partition:
    if text.strip() in ("0", ""):
        return Partition([])
    try:
        return Partition([int(x) for x in text.split(",")])
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad partition {text!r}: {exc}")


def _emit(args, payload, csv_text: str | None = None):
    if getattr(args, "format", "json") == "csv":
        if csv_text is None:
            raise SpinFHError("csv output is not available for this command")
        text = csv_text
    else:
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _check_budget(args, n: int, limit: int):
    if n > limit and not args.unsafe_n:
        raise ResourceCapError(
            f"n = {n} exceeds the default budget {limit}; pass --unsafe-n to override"
        )


def _coords_json(coords) -> dict:
    return {str(k.to_json()).replace(" ", ""): v for k, v in sorted(coords.items())}


def cmd_class(args) -> int:
    _check_budget(args, args.n, MAX_ENUM_N)
    ce = enumerate_class(args.lam, args.n)
    payload = {
        "lambda": args.lam.to_json(),
        "n": args.n,
        "size": len(ce.members),
        "members": ce.to_json(),
    }
    csv_text = "perm,sign\n" + "".join(
        f"\"{list(m.perm)}\",{m.sign}\n" for m in ce.members
    )
    _emit(args, payload, csv_text)
    return 0


def cmd_mult(args) -> int:
    _check_budget(args, args.n, MAX_PRODUCT_N)
    a = class_sum(args.lam, args.n, args.variant)
    b = class_sum(args.mu, args.n, args.variant)
    prod = elem_mul(a, b)
    if args.top:
        prod = top_degree(prod)
    coords = decompose_central(prod)
    payload = {
        "lambda": args.lam.to_json(),
        "mu": args.mu.to_json(),
        "n": args.n,
        "variant": args.variant,
        "top_only": bool(args.top),
        "decomposition": _coords_json(coords),
    }
    _emit(args, payload)
    return 0


def cmd_constants(args) -> int:
    _check_budget(args, args.n, MAX_PRODUCT_N)
    table = structure_constants(args.lam, args.mu, args.n, args.variant)
    _emit(args, table.to_json(), table.to_csv())
    return 0


def cmd_fit(args) -> int:
    n_range = None
    if args.range:
        lo, hi = (int(x) for x in args.range.split(","))
        n_range = (lo, hi)
    fit: FitResult = fit_structure_poly(
        args.lam, args.mu, args.nu, n_range, args.variant
    )
    _emit(args, fit.to_json())
    return 0


def cmd_graded(args) -> int:
    vec = graded_product(args.lam, args.mu)
    payload = {
        "lambda": args.lam.to_json(),
        "mu": args.mu.to_json(),
        "grading": vec.grading,
        "coords": _coords_json(vec.coords),
    }
    _emit(args, payload)
    return 0


def cmd_jm(args) -> int:
    _check_budget(args, args.n, MAX_PRODUCT_N)
    if args.targeted is not None:
        value = jm.a_coefficient_targeted(args.targeted, args.n)
        payload = {
            "n": args.n,
            "lambda": args.targeted.to_json(),
            "coefficient": value,
            "formula": jm.formula_a(args.targeted),
            "match": value == jm.formula_a(args.targeted),
        }
        _emit(args, payload)
        return 0 if payload["match"] else FAIL_EXIT
    if args.top:
        coeffs = jm.a_coefficients(args.r, args.n)
        rows = [
            {
                "lambda": lam.to_json(),
                "computed_A": c,
                "formula_A": jm.formula_a(lam),
                "match": c == jm.formula_a(lam),
            }
            for lam, c in sorted(coeffs.coords.items())
        ]
        payload = {
            "r": args.r,
            "n": args.n,
            "rows": rows,
        }
        _emit(args, payload)
        return 0 if all(r["match"] for r in rows) else FAIL_EXIT
    el = jm.elementary_jm(args.r, args.n)
    payload = {
        "r": args.r,
        "n": args.n,
        "support": len(el.terms),
        "decomposition": _coords_json(decompose_central(el)),
    }
    _emit(args, payload)
    return 0


def cmd_verify(args) -> int:
    kw = {}
    if args.rmax is not None:
        kw["r_max"] = args.rmax
    if args.budget is not None:
        kw["budget"] = args.budget
    report = suites.run_suite(args.suite, seed=args.seed, **kw)
    _emit(args, report)
    return 0 if report["passed"] else FAIL_EXIT


def build_parser() -> _Parser:
    parser = _Parser(prog="spinfh", description=__doc__)
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for interface compatibility; evaluation is serial")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out", default=None)
        p.add_argument("--unsafe-n", action="store_true")

    p = sub.add_parser("class", help="enumerate one even split class")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("mult", help="multiply two class sums and decompose")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=(SPIN, ORDINARY), default=SPIN)
    p.add_argument("--top", action="store_true")
    common(p)
    p.set_defaults(func=cmd_mult)

    p = sub.add_parser("constants", help="structure-constant table at fixed n")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--variant", choices=(SPIN, ORDINARY), default=SPIN)
    common(p)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("fit", help="fit the polynomial structure constant")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    p.add_argument("--nu", type=_partition, required=True)
    p.add_argument("--variant", choices=(SPIN, ORDINARY), default=SPIN)
    p.add_argument("--range", default=None, help="lo,hi sampling range")
    common(p)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("graded", help="stable top-degree product")
    p.add_argument("--lam", type=_partition, required=True)
    p.add_argument("--mu", type=_partition, required=True)
    common(p)
    p.set_defaults(func=cmd_graded)

    p = sub.add_parser("jm", help="elementary symmetric functions of squared JM elements")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--top", action="store_true",
                   help="report stable top-degree coefficients vs the formula")
    p.add_argument("--targeted", type=_partition, default=None,
                   help="extract a single coefficient by degree-pruned propagation")
    common(p)
    p.set_defaults(func=cmd_jm)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(suites.SUITES) + ["all"])
    p.add_argument("--seed", type=int, default=12345)
    p.add_argument("--rmax", type=int, default=None)
    p.add_argument("--budget", type=int, default=None)
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceCapError as exc:
        sys.stderr.write(f"resource cap: {exc}\n")
        return CAP_EXIT
    except SpinFHError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return FAIL_EXIT


if __name__ == "__main__":
    sys.exit(main())
