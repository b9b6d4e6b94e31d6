"""Command-line interface: ``unusual-orders <verb> ...``.

Exit codes: 0 success (for ``classify``: unusual), 1 ``classify`` says not
unusual, 2 bad arguments, 3 a step budget ran out.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .arith import field_data
from .class_numbers import class_number, picard_order
from .contfrac import fundamental_unit
from .unusual import (
    ROUTES,
    conductor_report,
    kronecker_condition,
    is_unusual,
    shape_ok,
    type_form,
)
from . import surveys

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


def _jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (set, frozenset, list, tuple)):
        items = sorted(value) if isinstance(value, (set, frozenset)) else value
        return [_jsonable(v) for v in items]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


def _emit(args, record: dict):
    if args.json:
        print(json.dumps(_jsonable(record)))
    else:
        parts = []
        for key, value in record.items():
            if isinstance(value, (set, frozenset)):
                value = "{" + ", ".join(map(str, sorted(value))) + "}"
            parts.append(f"{key}={value}")
        print("  ".join(parts))


def cmd_info(args) -> int:
    fd = field_data(args.d)
    eps = fundamental_unit(fd)
    _emit(args, {
        "kind": "info", "d": fd.d, "d_K": fd.d_K, "omega": fd.omega_kind.value, "t": fd.t,
        "ramified": list(fd.ramified), "u": eps.u, "v": eps.v, "u_sqrt": eps.u_sqrt,
        "v_sqrt": eps.v_sqrt, "unit_norm": eps.norm, "period_length": eps.period_length,
        "class_number": class_number(fd),
    })
    return EXIT_OK


def cmd_classify(args) -> int:
    fd = field_data(args.d)
    if args.f < 1:
        raise ValueError("conductor must be positive")
    unusual = is_unusual(fd, args.f, args.route)
    shape = shape_ok(fd, args.f)
    record = {
        "kind": "classify", "d": fd.d, "f": args.f, "route": args.route, "unusual": unusual,
        "shape_ok": shape, "class_number": class_number(fd),
    }
    if shape:
        order = picard_order(fd, args.f)
        record["pic"] = order.pic
        record["unit_index"] = order.unit_index
        record["ramified_symbol_test"] = {
            p: kronecker_condition(fd, p) for p in fd.ramified if args.f % p == 0
        }
    _emit(args, record)
    return EXIT_OK if unusual else EXIT_NO


def cmd_conductors(args) -> int:
    fd = field_data(args.d)
    rep = conductor_report(fd, args.bound)
    _emit(args, {
        "kind": "conductors", "d": rep.d, "reduced": set(rep.reduced_set), "bounded": set(rep.bounded_set),
        "bound": rep.bound, "exact": rep.exact, "unit_norm": rep.unit_norm, "type": rep.type, "form": rep.form,
    })
    return EXIT_OK


def cmd_type_form(args) -> int:
    fd = field_data(args.d)
    tf = type_form(fd)
    _emit(args, {"kind": "type-form", "d": fd.d, "type": tf[0] if tf else None, "form": tf[1] if tf else None})
    return EXIT_OK


def cmd_census(args) -> int:
    log, resume = (args.resume, True) if args.resume else (args.log, False)
    records = surveys.census(args.max_disc, jobs=args.jobs, log_path=log, resume=resume)
    for r in records:
        _emit(args, {"kind": "census", "d": r.d, "f": r.f, "disc": r.disc, "type": r.type, "form": r.form})
    _emit(args, {"kind": "census-count", "max_disc": args.max_disc, "count": len(records)})
    return EXIT_OK


def cmd_search_v(args) -> int:
    log, resume = (args.resume, True) if args.resume else (args.log, False)
    hits, cube_only, failures = surveys.search_d_divides_v(args.max_d, jobs=args.jobs, log_path=log, resume=resume)
    for h in hits:
        _emit(args, {"kind": "search-v", "d": h.d, "beta": h.beta, "t": h.t, "unit_norm": h.unit_norm,
                     "class_number": h.class_number})
    for d in cube_only:
        _emit(args, {"kind": "search-v3", "d": d})
    for d in failures:
        _emit(args, {"kind": "budget-exceeded", "d": d})
    return EXIT_BUDGET if failures else EXIT_OK


def cmd_attributes(args) -> int:
    h = surveys.attribute_table(args.d)
    _emit(args, {
        "kind": "attributes", "d": h.d, "v_divisible": h.v_divisible, "v3_divisible": h.v3_divisible,
        "beta": h.beta, "t": h.t, "unit_norm": h.unit_norm, "class_number": h.class_number,
    })
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unusual-orders",
        description="Unusual sets of distances in orders of real quadratic fields.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON lines (integers as strings)")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("info", help="field data, fundamental unit and class number")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("classify", help="is the set of distances of O_f unusual?")
    p.add_argument("d", type=int)
    p.add_argument("f", type=int)
    p.add_argument("--route", choices=ROUTES, default="thm44")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("conductors", help="reduced and bounded sets of unusual conductors")
    p.add_argument("d", type=int)
    p.add_argument("--bound", type=int, default=None,
                   help="default lcm(2,d) if N(eps)=1, else 10*lcm(2,d)")
    p.set_defaults(func=cmd_conductors)

    p = sub.add_parser("type-form", help="type/form classification of d")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_type_form)

    for verb, func, bound_flag in (("census", cmd_census, "--max-disc"), ("search-v", cmd_search_v, "--max-d")):
        p = sub.add_parser(verb)
        p.add_argument(bound_flag, type=int, required=True)
        p.add_argument("--jobs", type=int, default=1)
        p.add_argument("--log", default=None, help="write a JSON-lines result log")
        p.add_argument("--resume", default=None, metavar="LOG", help="resume from an existing result log")
        p.set_defaults(func=func)

    p = sub.add_parser("attributes", help="beta, t, N(eps), class number, d | v")
    p.add_argument("d", type=int)
    p.set_defaults(func=cmd_attributes)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except config.BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
