"""Command-line driver.

Verbs: table, formula, global, semilocal, census, verify, identities.
Documents go to stdout (or --out); verification reports go to stderr.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from .areabasis import Family, InvalidIndexError, census, parse_index, require_valid
from .dualalgebra import CheckResult, monomial_rank
from .kinematics import (
    BASIS_B_GAMMA,
    BASIS_DELTA_N,
    emit,
    emit_tables,
    full_table,
    global_formula,
    local_formula,
    semilocal_formula,
)
from .verify import SUITES, identity_sweeps, run_suite

USAGE_ERROR = 2
VERIFY_FAILURE = 1


class _Parser(argparse.ArgumentParser):
    # argparse already exits with status 2 on bad flags; keep that contract.
    pass


def _add_common(sub: argparse.ArgumentParser, *, target: bool = False, basis: bool = False,
                fmt: bool = False) -> None:
    sub.add_argument("--n", type=int, required=True, metavar="N",
                     help="ambient complex dimension (n >= 2)")
    if target:
        sub.add_argument("--target", required=True, metavar="FAMILY:K,Q",
                         help="index such as Delta:2,1 or N:1,0")
    if basis:
        sub.add_argument("--basis", choices=[BASIS_DELTA_N, BASIS_B_GAMMA],
                         default=BASIS_DELTA_N, help="pair basis (default delta-n)")
    if fmt:
        sub.add_argument("--format", choices=["text", "latex", "json"], default="text",
                         dest="fmt", help="output format (default text)")
    sub.add_argument("--out", metavar="PATH", help="write the document to a file")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ukin",
                     description="Exact kinematic formulas for unitary area measures.")
    subs = parser.add_subparsers(dest="verb", required=True)

    table = subs.add_parser("table", help="full array of kinematic formulas")
    _add_common(table, basis=True, fmt=True)

    formula = subs.add_parser("formula", help="kinematic formula for one target")
    _add_common(formula, target=True, basis=True, fmt=True)

    glob = subs.add_parser("global", help="globalized formula over mu pairs")
    _add_common(glob, target=True, fmt=True)

    semi = subs.add_parser("semilocal", help="second slot globalized")
    _add_common(semi, target=True, fmt=True)

    cens = subs.add_parser("census", help="per-degree dimension table with rank check")
    _add_common(cens, fmt=True)

    ver = subs.add_parser("verify", help="run verification suites")
    ver.add_argument("--n", type=int, required=True, metavar="N")
    ver.add_argument("--suite", choices=list(SUITES), default="all")

    subs.add_parser("identities", help="identity sweeps at their full bounds")

    return parser


def _color_enabled() -> bool:
    if os.environ.get("UKIN_COLOR") == "0":
        return False
    return sys.stderr.isatty()


def _report(checks: list[CheckResult]) -> int:
    color = _color_enabled()
    failures = 0
    for check in checks:
        if check.passed:
            status = "\x1b[32mPASS\x1b[0m" if color else "PASS"
        else:
            status = "\x1b[31mFAIL\x1b[0m" if color else "FAIL"
            failures += 1
        line = f"{check.name}: {status}"
        if check.detail and not check.passed:
            line += f"  [{check.detail}]"
        print(line, file=sys.stderr)
    summary = f"{len(checks) - failures}/{len(checks)} checks passed"
    print(summary, file=sys.stderr)
    return VERIFY_FAILURE if failures else 0


def _write_document(document: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        sys.stdout.write(document)


def _usage_error(message: str) -> int:
    print(f"ukin: error: {message}", file=sys.stderr)
    return USAGE_ERROR


def _require_n(n: int) -> None:
    if n < 2:
        raise InvalidIndexError(f"n must be >= 2, got {n}")


def _census_document(n: int, fmt: str) -> tuple[str, bool]:
    counts = census(n)
    ranks = [monomial_rank(n, d) for d in range(2 * n)]
    ok = all(r == c for r, c in zip(ranks, counts.per_degree))
    if fmt == "json":
        doc = {
            "n": n,
            "per_degree": [
                {"degree": d, "census": counts.per_degree[d], "rank": ranks[d],
                 "match": ranks[d] == counts.per_degree[d]}
                for d in range(2 * n)
            ],
            "total": counts.total,
            "all_match": ok,
        }
        return json.dumps(doc, indent=2) + "\n", ok
    # the census is tabular either way; latex callers get the text table
    lines = [f"degree census for n={n} (Delta + N basis)"]
    for d in range(2 * n):
        match = "ok" if ranks[d] == counts.per_degree[d] else "MISMATCH"
        lines.append(f"  degree {d}: census {counts.per_degree[d]}, rank {ranks[d]}  [{match}]")
    lines.append(f"  total dimension: {counts.total}")
    return "\n".join(lines) + "\n", ok


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else USAGE_ERROR

    try:
        if args.verb == "identities":
            return _report(identity_sweeps())

        _require_n(args.n)

        if args.verb == "verify":
            return _report(run_suite(args.n, args.suite))

        if args.verb == "census":
            document, ok = _census_document(args.n, args.fmt)
            _write_document(document, args.out)
            if not ok:
                print("census: rank/census mismatch", file=sys.stderr)
                return VERIFY_FAILURE
            return 0

        if args.verb == "table":
            tables = full_table(args.n, args.basis)
            _write_document(emit_tables(args.n, args.basis, tables, args.fmt), args.out)
            return 0

        target = parse_index(args.target)
        if args.verb == "formula":
            table = local_formula(args.n, target, args.basis)
        elif args.verb == "global":
            if target.family is not Family.DELTA:
                return _usage_error(
                    f"global formulas exist for Delta targets only, got {target.text()}")
            require_valid(args.n, target)
            table = global_formula(args.n, target.k, target.q)
        else:  # semilocal
            table = semilocal_formula(args.n, target)
        document = emit(table, args.fmt)
        if not document.endswith("\n"):
            document += "\n"
        _write_document(document, args.out)
        return 0

    except InvalidIndexError as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    raise SystemExit(main())
