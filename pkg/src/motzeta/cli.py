"""Command-line front end.

Subcommands: fan-check, zeta, verify, leading-constant.  All output is
deterministic for a fixed invocation (including the seed), so reports
can be compared byte for byte.
"""

import argparse
import os
import sys

from . import fqoracle
from .fan import (FanParseError, FanValidationError, class_of_variety,
                  load_fan, preset_fan, q_sigma, q_sigma_at_L_inv)
from .heightzeta import (leading_constant, leading_constant_numeric,
                         zeta_direct_genus0, zeta_fourier_genus0)
from .jsonio import (dumps_canonical, laurent_to_json, completion_to_json,
                     zeta_to_json)
from .verify import SUITES, run_suites

EXIT_OK = 0
EXIT_FAIL = 2
EXIT_BUDGET = 3


def _add_common(parser, fan=True):
    if fan:
        group = parser.add_mutually_exclusive_group(required=True)
        group.add_argument("--fan", metavar="PATH",
                           help="fan description file (JSON or TOML)")
        group.add_argument("--preset", metavar="NAME",
                           help="preset fan: P1, P2, P1xP1, F<a>, Bl1P2")
    parser.add_argument("--format", choices=("json", "csv", "text"),
                        default="json")
    parser.add_argument("--budget", type=int, default=None,
                        help="enumeration budget (default 10^8, or "
                             "MTZ_BUDGET)")
    parser.add_argument("--no-oracle", action="store_true",
                        help="symbolic-only mode; skip finite-field checks")


def _resolve_budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("MTZ_BUDGET")
    if env:
        return int(env)
    return fqoracle.DEFAULT_BUDGET


def _get_fan(args):
    if getattr(args, "preset", None):
        return preset_fan(args.preset)
    return load_fan(args.fan)


def _parse_dmax(text):
    return tuple(int(x) for x in text.split(","))


def _emit(args, payload, csv_rows=None, text_lines=None):
    if args.format == "json":
        sys.stdout.write(dumps_canonical(payload))
    elif args.format == "csv":
        for row in csv_rows or []:
            sys.stdout.write(",".join(str(x) for x in row) + "\n")
    else:
        for line in text_lines or []:
            sys.stdout.write(line + "\n")


def cmd_fan_check(args):
    fan = _get_fan(args)
    poly = q_sigma(fan)
    cls = class_of_variety(fan)
    special = q_sigma_at_L_inv(fan)
    payload = {
        "fan": fan.name,
        "rank": fan.rank,
        "rays": [list(r) for r in fan.rays],
        "max_cones": [list(c) for c in fan.max_cones],
        "pic_rank": fan.pic_rank,
        "q_polynomial": str(poly),
        "class": laurent_to_json(cls),
        "class_pretty": str(cls),
        "q_at_L_inv": laurent_to_json(special),
        "special_value_identity": "verified",
        "projectivity": "asserted by the user, not checked",
    }
    csv_rows = [("fan", fan.name), ("rank", fan.rank),
                ("pic_rank", fan.pic_rank), ("q_polynomial", str(poly)),
                ("class", str(cls))]
    text = [f"fan {fan.name}: rank {fan.rank}, {len(fan.rays)} rays, "
            f"Picard rank {fan.pic_rank}",
            f"rays: {[list(r) for r in fan.rays]}",
            f"Q = {poly}",
            f"[X] = {cls}",
            f"Q(L^-1,...) = {special}  (matches (1-L^-1)^r [X] L^-n)"]
    _emit(args, payload, csv_rows, text)
    return EXIT_OK


def cmd_zeta(args):
    fan = _get_fan(args)
    dmax = _parse_dmax(args.dmax)
    if len(dmax) == 1:
        dmax = dmax * len(fan.rays)
    budget = _resolve_budget(args)
    series = {}
    if args.route in ("direct", "both"):
        series["direct"] = zeta_direct_genus0(fan, dmax)
    if args.route in ("fourier", "both"):
        series["fourier"] = zeta_fourier_genus0(fan, dmax)
    primary = series.get("direct") or series["fourier"]
    payload = zeta_to_json(primary)
    payload["route"] = args.route
    entries = payload.pop("coeffs")
    for entry in entries:
        entry["pretty"] = str(primary.coefficient(entry["d"]))
    if args.route == "both":
        agree = series["direct"] == series["fourier"]
        payload["routes_agree"] = agree
        for entry in entries:
            entry["routes_equal"] = (
                series["direct"].coefficient(entry["d"])
                == series["fourier"].coefficient(entry["d"]))
    budget_hit = False
    if args.q and not args.no_oracle:
        qs = [int(x) for x in args.q.split(",")]
        flat_counts = []
        for entry in entries:
            oracle = {}
            for q in qs:
                try:
                    count = fqoracle.count_hom_fq(fan, entry["d"], q, budget)
                except fqoracle.BudgetExceeded:
                    oracle[str(q)] = "budget-exceeded"
                    budget_hit = True
                    continue
                expected = primary.coefficient(entry["d"]).specialize(q)
                oracle[str(q)] = {"count": count,
                                  "matches": count == expected}
                flat_counts.append({"fan": fan.name, "d": entry["d"],
                                    "q": q, "count": count})
            entry["oracle"] = oracle
        payload["oracle_counts"] = flat_counts
    payload["coeffs"] = entries
    failed = args.route == "both" and not payload["routes_agree"]
    for entry in entries:
        for value in entry.get("oracle", {}).values():
            if isinstance(value, dict) and not value["matches"]:
                failed = True
    csv_rows = [tuple(f"d{i}" for i in range(len(fan.rays))) + ("coeff",)]
    csv_rows += [tuple(entry["d"]) + (entry["pretty"],) for entry in entries]
    text = [f"zeta coefficients for {fan.name}, Dmax {list(dmax)}:"]
    for entry in entries:
        line = f"  {tuple(entry['d'])}: {entry['pretty']}"
        if "routes_equal" in entry:
            line += "  [routes agree]" if entry["routes_equal"] \
                else "  [ROUTES DISAGREE]"
        text.append(line)
    _emit(args, payload, csv_rows, text)
    if failed:
        return EXIT_FAIL
    if budget_hit:
        return EXIT_BUDGET
    return EXIT_OK


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    budget = _resolve_budget(args)
    report = run_suites(names, args.seed, args.trials,
                        use_oracle=not args.no_oracle, budget=budget)
    csv_rows = [("suite", "check", "status", "detail")]
    text = []
    for suite in report["suites"]:
        text.append(f"suite {suite['suite']}: {suite['status']}")
        for check in suite["checks"]:
            csv_rows.append((suite["suite"], check["name"], check["status"],
                             check["detail"]))
            text.append(f"  {check['name']}: {check['status']}"
                        f"  ({check['detail']})")
    for warning in report.get("warnings", []):
        text.append(f"warning: {warning}")
    _emit(args, report, csv_rows, text)
    if report["status"] == "fail":
        return EXIT_FAIL
    if report.get("budget_exceeded"):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_leading_constant(args):
    fan = _get_fan(args)
    constant = leading_constant(fan, precision=args.precision)
    payload = {
        "fan": fan.name,
        "precision": args.precision,
        "exact": laurent_to_json(constant.exact)
        if constant.exact is not None else None,
        "exact_pretty": str(constant.exact)
        if constant.exact is not None else None,
        "truncated": completion_to_json(constant.truncated),
    }
    failed = False
    if args.q:
        qs = [int(x) for x in args.q.split(",")]
        payload["specializations"] = []
        for q in qs:
            value = constant.specialize(q)
            entry = {"q": q, "value": str(value),
                     "value_float": float(value)}
            if not args.no_oracle:
                numeric = leading_constant_numeric(fan, q)
                rel = abs(float(value) - numeric) / abs(numeric)
                entry["closed_point_product"] = numeric
                entry["relative_error"] = rel
                entry["matches_1e-3"] = rel < 1e-3
                if not entry["matches_1e-3"]:
                    failed = True
            payload["specializations"].append(entry)
    csv_rows = [("fan", fan.name),
                ("exact", payload["exact_pretty"] or "none")]
    for entry in payload.get("specializations", []):
        csv_rows.append((f"q={entry['q']}", entry["value"]))
    text = [f"leading constant for {fan.name} (precision {args.precision}):"]
    if constant.exact is not None:
        text.append(f"  exact: {constant.exact}")
    text.append(f"  truncated coefficients: "
                f"{completion_to_json(constant.truncated)['coeffs']}")
    for entry in payload.get("specializations", []):
        line = f"  at q={entry['q']}: {entry['value_float']}"
        if "closed_point_product" in entry:
            line += (f"  closed-point product {entry['closed_point_product']}"
                     f"  (rel err {entry['relative_error']:.2e})")
        text.append(line)
    _emit(args, payload, csv_rows, text)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mtz",
        description="Exact motivic height zeta engine for split projective "
                    "toric varieties over a genus-0 function field.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fan-check", help="validate a fan and print its data")
    _add_common(p)
    p.set_defaults(func=cmd_fan_check)

    p = sub.add_parser("zeta", help="height zeta coefficients")
    _add_common(p)
    p.add_argument("--dmax", required=True,
                   help="componentwise degree bound, e.g. 3,3,3")
    p.add_argument("--route", choices=("direct", "fourier", "both"),
                   default="both")
    p.add_argument("--q", help="comma-separated prime powers for the oracle")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("suite", choices=tuple(SUITES) + ("all",))
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=300)
    _add_common(p, fan=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("leading-constant",
                       help="leading constant with optional numeric check")
    _add_common(p)
    p.add_argument("--precision", type=int, default=10)
    p.add_argument("--q", help="comma-separated prime powers to specialize")
    p.set_defaults(func=cmd_leading_constant)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FanParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_FAIL
    except FanValidationError as exc:
        sys.stderr.write(f"{type(exc).code}: {exc}\n")
        return EXIT_FAIL
    except fqoracle.BudgetExceeded as exc:
        sys.stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
