"""Command-line surface: exact computations with machine-readable reports.

Subcommands: qbinom, distnum, basesize, orbits, pyber, verify.  Reports are
plain tables by default; --json / --csv switch formats.  JSON reports use a
stable field order {command, params, results, discrepancies, timing_ms,
seed}, serialize big integers as decimal strings, and are byte-identical
across runs for a fixed seed (timing is omitted from JSON unless --timing
is given, precisely to keep that guarantee).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction

from .basesize import (
    WreathSpec,
    bailey_cameron_check,
    base_size_brute_force,
    base_size_closed_form,
    base_size_log_form,
)
from .distinguishing import chan_wreath_distnum, distinguishing_search
from .errors import BudgetExceededError, SearchInconclusiveError, TheoremViolationError
from .orbits import count_spanning_orbits_canonical, count_spanning_orbits_partition
from .permgroup import PermGroup, builtin_group, load_group_file
from .pyber import LogRatio, certify, family_constant, minimal_pyber_C
from .qbinom import count_subspaces_oracle, gaussian_binomial
from . import verify as verify_mod

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_BIG = 1 << 53  # JSON numbers above this lose precision in doubles


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return value if -_BIG < value < _BIG else str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, LogRatio):
        return {"log_ratio": [_jsonable(value.top), _jsonable(value.bottom)],
                "approx": f"{float(value):.12g}"}
    if isinstance(value, float):
        return f"{value:.12g}"
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def make_report(command: str, params: dict, results: dict, discrepancies: list, seed: int,
                timing_ms: float | None) -> dict:
    return {
        "command": command,
        "params": _jsonable(params),
        "results": _jsonable(results),
        "discrepancies": _jsonable(discrepancies),
        "timing_ms": timing_ms,
        "seed": seed,
    }


def _print_human(report: dict, stream) -> None:
    print(f"command: {report['command']}", file=stream)
    for key, value in report["params"].items():
        print(f"  {key} = {value}", file=stream)
    print("results:", file=stream)
    _print_tree(report["results"], stream, indent=2)
    if report["discrepancies"]:
        print("flagged discrepancies:", file=stream)
        for entry in report["discrepancies"]:
            print(f"  - {entry}", file=stream)
    if report["timing_ms"] is not None:
        print(f"timing_ms: {report['timing_ms']:.1f}", file=stream)


def _print_tree(node, stream, indent: int) -> None:
    pad = " " * indent
    if isinstance(node, dict):
        for key, value in node.items():
            if isinstance(value, (dict, list)):
                print(f"{pad}{key}:", file=stream)
                _print_tree(value, stream, indent + 2)
            else:
                print(f"{pad}{key}: {value}", file=stream)
    elif isinstance(node, list):
        for value in node:
            if isinstance(value, (dict, list)):
                _print_tree(value, stream, indent)
            else:
                print(f"{pad}- {value}", file=stream)
    else:
        print(f"{pad}{node}", file=stream)


def _flatten(prefix: str, node, rows: list[tuple[str, str]]) -> None:
    if isinstance(node, dict):
        for key, value in node.items():
            _flatten(f"{prefix}.{key}" if prefix else str(key), value, rows)
    elif isinstance(node, list):
        for i, value in enumerate(node):
            _flatten(f"{prefix}[{i}]", value, rows)
    else:
        rows.append((prefix, str(node)))


def emit_report(report: dict, args, stream=None) -> None:
    stream = stream or sys.stdout
    if not getattr(args, "timing", False):
        report = dict(report)
        report["timing_ms"] = None
    if getattr(args, "json", False):
        print(json.dumps(report, indent=2), file=stream)
    elif getattr(args, "csv", False):
        rows: list[tuple[str, str]] = []
        _flatten("", report, rows)
        writer = csv.writer(stream)
        writer.writerow(["key", "value"])
        writer.writerows(rows)
    else:
        _print_human(report, stream)


def _load_group(args) -> PermGroup:
    if args.builtin:
        return builtin_group(args.builtin, max_order=args.max_group_order)
    return load_group_file(args.file, max_order=args.max_group_order)


def _group_params(args) -> dict:
    return {"builtin": args.builtin} if args.builtin else {"file": str(args.file)}


# -- subcommand implementations -----------------------------------------------


def cmd_qbinom(args) -> tuple[dict, dict, list]:
    value = gaussian_binomial(args.m, args.d, args.q)
    results = {"gaussian_binomial": value}
    if args.oracle:
        oracle = count_subspaces_oracle(args.m, args.d, args.q)
        results["subspace_oracle"] = oracle
        results["agrees"] = oracle == value
    params = {"m": args.m, "d": args.d, "q": args.q, "oracle": args.oracle}
    return params, results, []


def cmd_distnum(args) -> tuple[dict, dict, list]:
    group = _load_group(args)
    params = _group_params(args)
    results: dict = {"group": group.name, "degree": group.degree, "order": group.order}
    try:
        found = distinguishing_search(group, seed=args.seed)
        results["distinguishing_number"] = found.number
        results["witness_coloring"] = list(found.witness.colors)
        results["colorings_tested"] = found.colorings_tested
    except SearchInconclusiveError as exc:
        results["distinguishing_number_interval"] = [exc.lower, exc.upper]
        return params, results, []
    if group.name and "wr" in (group.name or ""):
        m, r = (int(x) for x in group.name.replace("S", " ").replace("wr", " ").split())
        chan = chan_wreath_distnum(m, r)
        results["chan_formula"] = {
            "exact": chan.exact,
            "bound": chan.bound,
            "matches_search": chan.exact == results["distinguishing_number"],
        }
    return params, results, []


def cmd_basesize(args) -> tuple[dict, dict, list]:
    group = _load_group(args)
    params = {"d": args.d, "q": args.q, **_group_params(args), "brute": args.brute}
    discrepancies: list = []
    results: dict = {"group": group.name, "ell": group.degree}
    dl = distinguishing_search(group, seed=args.seed).number
    b = base_size_closed_form(args.d, args.q, dl)
    _, c = base_size_log_form(args.d, args.q, dl)
    results["distinguishing_number"] = dl
    results["base_size_closed_form"] = b
    results["log_form_c"] = c
    results["notes"] = [
        "for subgroups of the semilinear group, a base of the linear part "
        "extended by one scalar-multiplied vector is a base, so the bound "
        "grows by at most 1"
    ]
    if args.brute:
        spec = WreathSpec(args.d, args.q, group)
        brute = base_size_brute_force(spec, max_group_order=args.max_group_order)
        results["base_size_brute_force"] = brute
        if brute != b:
            entry = {
                "kind": "base_size_closed_form_vs_brute_force",
                "params": {"d": args.d, "q": args.q, "group": group.name},
                "closed_form": b,
                "brute_force": brute,
            }
            if (args.d, args.q) == (1, 2):
                entry["note"] = (
                    "known boundary case: GL_1(2) is trivial and multi-bases need not span"
                )
                discrepancies.append(entry)
            else:
                raise TheoremViolationError(f"unexpected mismatch: {entry}")
    return params, results, discrepancies


def cmd_orbits(args) -> tuple[dict, dict, list]:
    params = {"d": args.d, "q": args.q, "m": args.m, "method": args.method}
    results: dict = {"gaussian_binomial": gaussian_binomial(args.m, args.d, args.q)}
    if args.method in ("canonical", "both"):
        results["canonical"] = count_spanning_orbits_canonical(
            args.d, args.q, args.m, max_tuples=args.max_tuples
        )
    if args.method in ("partition", "both"):
        results["partition"] = count_spanning_orbits_partition(
            args.d,
            args.q,
            args.m,
            max_tuples=args.max_tuples,
            max_group_order=args.max_group_order,
        )
    counted = [v for k, v in results.items() if k in ("canonical", "partition")]
    results["agrees_with_formula"] = all(v == results["gaussian_binomial"] for v in counted)
    return params, results, []


def cmd_pyber(args) -> tuple[dict, dict, list]:
    group = _load_group(args)
    params = {"d": args.d, "q": args.q, **_group_params(args)}
    if args.family:
        params["family"] = args.family
        m, r = args.m, args.r
        if args.family == "wreath" and m is None and group.name and "wr" in group.name:
            m, r = (int(x) for x in group.name.replace("S", " ").replace("wr", " ").split())
        constant = family_constant(
            args.family,
            c=args.c,
            m=m,
            r=r,
            alt_or_sym=args.alt_or_sym,
        )
    else:
        constant = Fraction(args.C)
        params["C"] = args.C
    spec = WreathSpec(args.d, args.q, group)
    cert = certify(spec, constant, seed=args.seed)
    minimal = minimal_pyber_C(cert.ell, cert.order_l, cert.dist_num)
    results = {
        "group": group.name,
        "constant": constant,
        "distinguishing_number": cert.dist_num,
        "base_size_X0": cert.base_size_x0,
        "order_L": cert.order_l,
        "order_X0": cert.order_x0,
        "degree_n": cert.n,
        "order_G": cert.order_g,
        "lhs_base_size_plus_1": cert.lhs,
        "rhs_lower_bound": cert.rhs_lower_bound,
        "hypothesis_ok": cert.hypothesis_ok,
        "conclusion_ok": cert.conclusion_ok,
        "minimal_constant": minimal if minimal is not None else "any C > 1",
    }
    return params, results, []


def cmd_verify(args) -> tuple[dict, dict, list, bool]:
    results_list, ok = verify_mod.run_suite(
        grid=args.grid,
        seed=args.seed,
        max_group_order=args.max_group_order,
        max_tuples=args.max_tuples,
    )
    checks = {}
    discrepancies: list = []
    for res in results_list:
        checks[res.name] = {"status": res.status, "details": res.details}
        discrepancies.extend(res.discrepancies)
    results = {
        "grid": args.grid,
        "checks": checks,
        "all_passed": ok,
        "flagged_count": len(discrepancies),
    }
    return {"grid": args.grid}, results, discrepancies, ok


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument("--csv", action="store_true", help="emit a CSV report")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized pre-passes")
    common.add_argument("--timing", action="store_true",
                        help="include wall-clock timing in the report (breaks byte determinism)")
    common.add_argument("--max-group-order", type=int, default=10**6,
                        help="cap on any fully enumerated group")
    common.add_argument("--max-tuples", type=int, default=10**7,
                        help="cap on any tuple enumeration")

    group_source = argparse.ArgumentParser(add_help=False)
    src = group_source.add_mutually_exclusive_group(required=True)
    src.add_argument("--builtin", help="builtin group name: Sn, An, Cn, or SmwrSr")
    src.add_argument("--file", help="generator file (degree line + cycle notation)")

    parser = argparse.ArgumentParser(
        prog="wreathbase",
        description="Exact base sizes of imprimitive linear groups and friends",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("qbinom", parents=[common], help="Gaussian binomial binom(m, d)_q")
    p.add_argument("m", type=int)
    p.add_argument("d", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check against subspace enumeration")
    p.set_defaults(handler=cmd_qbinom)

    p = sub.add_parser("distnum", parents=[common, group_source],
                       help="exact distinguishing number of a permutation group")
    p.set_defaults(handler=cmd_distnum)

    p = sub.add_parser("basesize", parents=[common, group_source],
                       help="base size of GL_d(q) wr L in product action")
    p.add_argument("d", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--brute", action="store_true", help="cross-check with the explicit action")
    p.set_defaults(handler=cmd_basesize)

    p = sub.add_parser("orbits", parents=[common],
                       help="GL_d(q) orbit count on spanning m-tuples")
    p.add_argument("d", type=int)
    p.add_argument("q", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--method", choices=("canonical", "partition", "both"), default="both")
    p.set_defaults(handler=cmd_orbits)

    p = sub.add_parser("pyber", parents=[common, group_source],
                       help="certify the base-size/order inequality for GL_d(q) wr L")
    p.add_argument("d", type=int)
    p.add_argument("q", type=int)
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--family", choices=("small_dl", "primitive", "semiregular", "wreath"))
    mode.add_argument("--C", help="explicit rational constant, e.g. 2 or 7/3")
    p.add_argument("--c", type=int, help="distinguishing-number bound for --family small_dl")
    p.add_argument("--m", type=int, help="wreath parameter m for --family wreath")
    p.add_argument("--r", type=int, help="wreath parameter r for --family wreath")
    p.add_argument("--alt-or-sym", action="store_true",
                   help="use the sharper constant for full symmetric/alternating top groups")
    p.set_defaults(handler=cmd_pyber)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--grid", choices=("small", "full"), default="small")
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        outcome = args.handler(args)
    except (BudgetExceededError, SearchInconclusiveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except TheoremViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    elapsed_ms = (time.perf_counter() - start) * 1000.0

    ok = True
    if len(outcome) == 4:
        params, results, discrepancies, ok = outcome
    else:
        params, results, discrepancies = outcome
    report = make_report(args.subcommand, params, results, discrepancies, args.seed, elapsed_ms)
    emit_report(report, args)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def render_report_text(report: dict, args) -> str:
    buffer = io.StringIO()
    emit_report(report, args, stream=buffer)
    return buffer.getvalue()


if __name__ == "__main__":
    sys.exit(main())
