"""Command-line front end.

Exit status: 0 success, 1 domain negative (invalid set, nothing found,
failed audit), 2 usage or parse error.  Results go to stdout, diagnostics
to stderr.
"""
from __future__ import annotations

import argparse
import json
import re
import sys

from . import conjecture, oracle
from .core import DegreeSet, InvalidDegreeSet
from .diameter import NotAchievable, build_min_diameter, build_with_diameter, diam_formula
from .order import build_min_order, sigma_formula, sigma_upper_bound
from .serialize import to_dict, to_dot, to_json
from .validity import is_valid, realize_any

_SET = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")
_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


class _Domain(Exception):
    pass


def _degree_set(text: str) -> DegreeSet:
    try:
        D = DegreeSet.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return D


def _universe(text: str) -> range:
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    return range(a, b + 1)


def _jobs(text: str) -> int:
    if text == "max":
        return oracle.max_jobs()
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("--jobs must be >= 1 or 'max'")
    return value


def _shield_negatives(argv: list[str]) -> list[str]:
    # "-2,3" and "-2..3" would otherwise be read as option flags.
    return [" " + a if a.startswith("-") and (_SET.match(a) or _RANGE.match(a)) else a for a in argv]


def _require_valid(D: DegreeSet) -> None:
    if not is_valid(D):
        raise _Domain(f"invalid: {{{D}}} needs 1 or -1")


def _emit_tree(T, args) -> None:
    text = to_dot(T, sdeg=args.sdeg) if args.format == "dot" else to_json(T) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _jsonl(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


# -- handlers ----------------------------------------------------------------


def cmd_validate(args) -> int:
    if is_valid(args.set):
        print("valid")
        return 0
    print("invalid: needs 1 or -1")
    return 1


def cmd_diam(args) -> int:
    _require_valid(args.set)
    f = diam_formula(args.set)
    print(f"{f.value} (branch: {f.branch}, {f.detail})")
    return 0


def cmd_order(args) -> int:
    _require_valid(args.set)
    value = sigma_formula(args.set)
    if value is not None:
        print(f"{value} (exact, branch: {build_min_order(args.set).branch})")
    else:
        print(f"{sigma_upper_bound(args.set).value} (upper-bound)")
    return 0


def cmd_construct(args) -> int:
    D = args.set
    _require_valid(D)
    if args.objective == "diameter":
        T = build_with_diameter(D, args.diameter) if args.diameter is not None else build_min_diameter(D).witness
    elif args.objective == "order":
        if sigma_formula(D) is not None:
            T = build_min_order(D).witness
        else:
            print(f"note: no closed-form order for {{{D}}}; emitting the smallest known witness",
                  file=sys.stderr)
            T = sigma_upper_bound(D).witness
    else:
        T = realize_any(D)
    _emit_tree(T, args)
    return 0


def _config(args) -> oracle.EnumerationConfig:
    return oracle.EnumerationConfig(max_order=args.max_n, dedup=not args.no_dedup, jobs=args.jobs)


def cmd_oracle_min_order(args) -> int:
    _require_valid(args.set)
    r = oracle.min_order_realizing(args.set, args.max_n, _config(args))
    _jsonl({"D": list(args.set), "max_n": args.max_n,
            "order": None if r is None else r.value,
            "witness": None if r is None else to_dict(r.witness)})
    if r is None:
        print(f"not found: no realization of order <= {args.max_n}", file=sys.stderr)
        return 1
    return 0


def cmd_oracle_min_diam(args) -> int:
    _require_valid(args.set)
    r = oracle.min_diameter_realizing(args.set, args.max_n, _config(args))
    _jsonl({"D": list(args.set), "max_n": args.max_n,
            "diameter": None if r is None else r.value,
            "witness": None if r is None else to_dict(r.witness)})
    if r is None:
        print(f"not found: no realization of order <= {args.max_n}", file=sys.stderr)
        return 1
    return 0


def cmd_oracle_sets(args) -> int:
    for D in sorted(oracle.realizable_sets(args.n, oracle.EnumerationConfig(jobs=args.jobs))):
        _jsonl({"n": args.n, "D": list(D)})
    return 0


def cmd_oracle_audit(args) -> int:
    try:
        report = oracle.audit_optimal_structure(args.set, args.max_n, _config(args))
    except ValueError as exc:
        raise _Domain(str(exc)) from None
    _jsonl({
        "D": list(args.set), "sigma": report.sigma, "optima": report.optima,
        "passed": report.passed,
        "violations": [{"witness": to_dict(T), "problems": p} for T, p in report.violations],
    })
    return 0 if report.passed else 1


def cmd_conjecture(args) -> int:
    if args.conj_cmd == "sweep":
        cfg = oracle.EnumerationConfig(max_order=args.max_n, dedup=False, jobs=args.jobs)
        reports = conjecture.sweep(args.universe, args.size, args.max_n, cfg)
        sys.stdout.write(conjecture.to_csv(reports) if args.format == "csv" else conjecture.to_jsonl(reports))
        return 0
    if args.set is None:
        raise _Usage("conjecture needs --set D or the 'sweep' subcommand")
    _require_valid(args.set)
    cfg = oracle.EnumerationConfig(max_order=args.max_n, dedup=False, jobs=args.jobs)
    report = conjecture.joint_optimality(args.set, args.max_n, cfg)
    sys.stdout.write(conjecture.to_jsonl([report]))
    return 0


class _Usage(Exception):
    pass


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signedtrees", description="Signed trees with a prescribed signed degree set.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_set(p):
        p.add_argument("set", type=_degree_set, help='comma-separated integers, e.g. "1,-2,0"')
        return p

    def with_oracle_opts(p, default_n=10):
        p.add_argument("--max-n", type=int, default=default_n, help="largest order to enumerate")
        p.add_argument("--jobs", type=_jobs, default=1, help="worker processes, or 'max'")
        p.add_argument("--no-dedup", action="store_true", help="skip isomorph rejection")
        return p

    with_set(sub.add_parser("validate", help="does any signed tree realize the set")).set_defaults(func=cmd_validate)
    with_set(sub.add_parser("diam", help="minimum diameter")).set_defaults(func=cmd_diam)
    with_set(sub.add_parser("order", help="minimum order (exact or upper bound)")).set_defaults(func=cmd_order)

    p = with_set(sub.add_parser("construct", help="emit a witness tree"))
    p.add_argument("--objective", choices=["diameter", "order", "any"], default="any")
    p.add_argument("--diameter", type=int, help="exact diameter wanted (objective diameter only)")
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--sdeg", action="store_true", help="annotate DOT nodes with signed degrees")
    p.add_argument("-o", "--output", help="write to this path instead of stdout")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("oracle", help="exhaustive small-order enumeration")
    osub = p.add_subparsers(dest="oracle_cmd", required=True)
    with_oracle_opts(with_set(osub.add_parser("min-order"))).set_defaults(func=cmd_oracle_min_order)
    with_oracle_opts(with_set(osub.add_parser("min-diam"))).set_defaults(func=cmd_oracle_min_diam)
    q = osub.add_parser("sets")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--jobs", type=_jobs, default=1)
    q.set_defaults(func=cmd_oracle_sets)
    with_oracle_opts(with_set(osub.add_parser("audit"))).set_defaults(func=cmd_oracle_audit)

    p = sub.add_parser("conjecture", help="joint diameter/order optimality search")
    p.add_argument("--set", type=_degree_set)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--jobs", type=_jobs, default=1)
    p.set_defaults(func=cmd_conjecture, conj_cmd=None)
    csub = p.add_subparsers(dest="conj_cmd")
    s = csub.add_parser("sweep")
    s.add_argument("--universe", type=_universe, required=True, help="integer range a..b")
    s.add_argument("--size", type=int, nargs="+", default=[3])
    s.add_argument("--max-n", type=int, default=12)
    s.add_argument("--jobs", type=_jobs, default=1)
    s.add_argument("--format", choices=["jsonl", "csv"], default="jsonl")
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    args = parser.parse_args(_shield_negatives(argv))
    try:
        return args.func(args)
    except (_Domain, InvalidDegreeSet, NotAchievable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except _Usage as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
