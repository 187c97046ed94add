"""Command-line front end: word prefixes, series dumps, expansion, verification.

Exit codes: 0 success, 2 usage error, 3 precision cap exceeded,
4 verification/identity failure.  Reports are deterministic: identical
invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import closedform
from .expansion import (
    PrecisionCapExceeded,
    certify_by_doubling,
    expansion_rows,
    measure_estimate,
)
from .series import TruncatedSeries
from .word import series_source, word_prefix

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_VERIFY = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laurentcf",
        description="Continued fractions of Laurent series over Q, exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, formats=("plain", "json"), default="plain"):
        p.add_argument("--format", choices=formats, default=default, help="output format")
        p.add_argument("--out", metavar="FILE", help="write the report to FILE instead of stdout")

    def add_precision(p: argparse.ArgumentParser):
        p.add_argument("--precision", type=int, default=64, metavar="N0",
                       help="starting series precision (default 64)")
        p.add_argument("--precision-cap", type=int, default=2**20, metavar="CAP",
                       help="largest precision the doubling search may use (default 2^20)")

    p = sub.add_parser("word", help="print a prefix of the two-letter word")
    p.add_argument("length", type=int, help="number of letters")
    add_common(p)

    p = sub.add_parser("series", help="print a truncation of the word series")
    p.add_argument("precision", type=int, help="number of coefficients")
    add_common(p)

    p = sub.add_parser("expand", help="certified partial quotients of the word series")
    p.add_argument("--terms", type=int, required=True, help="how many quotients to certify")
    add_precision(p)
    add_common(p, formats=("plain", "json", "csv"))

    p = sub.add_parser("closed-form", help="print the predicted quotient block n")
    p.add_argument("--n", type=int, required=True, help="block index (n >= 1)")
    add_common(p)

    p = sub.add_parser("identities", help="run the identity suite")
    p.add_argument("--n-max", type=int, default=10, help="largest index for symbolic identities")
    p.add_argument("--terms", type=int, default=28,
                   help="expansion depth backing the mu/cross-product identities (default 28)")
    add_precision(p)
    add_common(p, formats=("plain", "json", "csv"))

    p = sub.add_parser("verify", help="compare the expansion against the closed form")
    p.add_argument("--n-max", type=int, default=1, help="largest block to verify")
    add_precision(p)
    add_common(p, formats=("plain", "json", "csv"))

    p = sub.add_parser("measure", help="irrationality-measure estimates")
    p.add_argument("--terms", type=int, required=True, help="how many quotients to certify")
    add_precision(p)
    add_common(p, formats=("plain", "json", "csv"))

    return parser


def _emit(text: str, args: argparse.Namespace) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv_text(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _validate_precisions(args: argparse.Namespace, parser: argparse.ArgumentParser) -> None:
    if args.precision < 1 or args.precision_cap < args.precision:
        parser.error("need precision-cap >= precision >= 1")


def _cmd_word(args) -> int:
    letters = word_prefix(args.length)
    text = "".join(map(str, letters))
    if args.format == "json":
        _emit(json.dumps({"length": args.length, "word": text}) + "\n", args)
    else:
        _emit(text + "\n", args)
    return EXIT_OK


def _cmd_series(args) -> int:
    series = TruncatedSeries.from_source(series_source(), args.precision)
    if args.format == "json":
        _emit(json.dumps(series.to_json_dict()) + "\n", args)
    else:
        _emit(" ".join(str(c) for c in series.coeffs) + "\n", args)
    return EXIT_OK


def _cmd_expand(args) -> int:
    e = certify_by_doubling(series_source(), args.terms, args.precision, args.precision_cap)
    rows = expansion_rows(e)
    if args.format == "json":
        _emit(json.dumps(rows, indent=2) + "\n", args)
    elif args.format == "csv":
        _emit(_csv_text(["n", "deg", "lambda", "certified"],
                        [[r["n"], r["deg"], r["lambda"], r["certified"]] for r in rows]), args)
    else:
        lines = [
            f"a_{r['n']} = {r['a']}   (deg {r['deg']}, lambda {r['lambda']}, mu {r['mu']})"
            + ("" if r["certified"] else "   [uncertified]")
            for r in rows
        ]
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _cmd_closed_form(args) -> int:
    block = closedform.quotient_block(args.n)
    indices = [4 * args.n + j for j in (1, 2, 3, 4)]
    if args.format == "json":
        payload = {
            "n": block.n,
            "indices": indices,
            "quotients": [str(q) for q in block.quotients],
            "lambdas": [str(l) for l in block.leading_coeffs],
        }
        _emit(json.dumps(payload, indent=2) + "\n", args)
    else:
        lines = [f"a_{i} = {q}" for i, q in zip(indices, block.quotients)]
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


def _identity_plan(n_max: int, terms: int) -> list[tuple[str, int, bool]]:
    """(name, n, needs_expansion) triples, deterministic order."""
    plan: list[tuple[str, int, bool]] = []
    for n in range(1, n_max + 1):
        plan.append(("denominator-sum", n, False))
    for n in range(2, n_max + 1):
        plan.append(("denominator-gap", n, False))
    for n in range(2, n_max + 1):
        plan.append(("r-recurrence", n, False))
    for n in range(2, n_max + 1):
        plan.append(("l-link", n, False))
    for n in range(1, min(n_max, (terms - 4) // 4) + 1):
        plan.append(("cross-product", n, True))
    for n in range(2, min(n_max, (terms - 2) // 4) + 1):
        plan.append(("mu-gap", n, True))
    for n in range(1, min(n_max, (terms - 4) // 4) + 1):
        plan.append(("mu-sum", n, True))
    return plan


def _cmd_identities(args) -> int:
    plan = _identity_plan(args.n_max, args.terms)
    expansion = None
    if any(needs for _, _, needs in plan):
        expansion = certify_by_doubling(
            series_source(), args.terms, args.precision, args.precision_cap
        )
    checks = [
        closedform.check_identity(name, n, expansion if needs else None)
        for name, n, needs in plan
    ]
    failed = [c for c in checks if not c.ok]
    if args.format == "json":
        payload = [
            {"check": c.name, "n": c.n, "ok": c.ok,
             "residual": None if c.ok else [str(r) for r in c.residuals]}
            for c in checks
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args)
    elif args.format == "csv":
        _emit(_csv_text(["check", "n", "ok"], [[c.name, c.n, c.ok] for c in checks]), args)
    else:
        _emit("\n".join(c.describe() for c in checks) + "\n", args)
    return EXIT_VERIFY if failed else EXIT_OK


def _cmd_verify(args) -> int:
    e = certify_by_doubling(
        series_source(), 4 * args.n_max + 4, args.precision, args.precision_cap
    )
    results = []  # (block, ok, detail)
    expected = list(closedform.initial_quotients())
    got = [e.quotient(i) for i in (1, 2, 3, 4)]
    results.append((0, expected == got, _mismatch_detail(1, expected, got)))
    for n in range(1, args.n_max + 1):
        expected = list(closedform.quotient_block(n).quotients)
        got = [e.quotient(4 * n + j) for j in (1, 2, 3, 4)]
        results.append((n, expected == got, _mismatch_detail(4 * n + 1, expected, got)))
    failed = [r for r in results if not r[1]]
    if args.format == "json":
        payload = [
            {"block": n, "quotients": [f"a_{i}" for i in _block_indices(n)], "ok": ok,
             "detail": detail}
            for n, ok, detail in results
        ]
        _emit(json.dumps(payload, indent=2) + "\n", args)
    elif args.format == "csv":
        _emit(_csv_text(["block", "ok"], [[n, ok] for n, ok, _ in results]), args)
    else:
        lines = []
        for n, ok, detail in results:
            label = f"block n={n} (quotients a_{_block_indices(n)[0]}..a_{_block_indices(n)[-1]})"
            lines.append(f"OK {label}" if ok else f"FAIL {label}: {detail}")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_VERIFY if failed else EXIT_OK


def _block_indices(n: int) -> list[int]:
    return [1, 2, 3, 4] if n == 0 else [4 * n + j for j in (1, 2, 3, 4)]


def _mismatch_detail(first_index: int, expected: list, got: list) -> str | None:
    for offset, (want, have) in enumerate(zip(expected, got)):
        if want != have:
            return f"a_{first_index + offset}: expected {want}, got {have}"
    return None


def _cmd_measure(args) -> int:
    e = certify_by_doubling(series_source(), args.terms, args.precision, args.precision_cap)
    rows = measure_estimate(e)
    running: list[tuple[int, Fraction, Fraction]] = []
    best = Fraction(0)
    for n, value in rows:
        best = max(best, value)
        running.append((n, value, best))
    if args.format == "json":
        payload = {
            "rows": [{"n": n, "nu": str(v), "running_max": str(b)} for n, v, b in running],
            "estimate": str(best),
        }
        _emit(json.dumps(payload, indent=2) + "\n", args)
    elif args.format == "csv":
        _emit(_csv_text(["n", "nu"], [[n, str(v)] for n, v, _ in running]), args)
    else:
        lines = [
            f"n={n:3d}  nu={str(v):>10s}  ({float(v):.6f})" for n, v, _ in running
        ]
        lines.append(f"estimate = {best} ({float(best):.6f})")
        _emit("\n".join(lines) + "\n", args)
    return EXIT_OK


_HANDLERS = {
    "word": _cmd_word,
    "series": _cmd_series,
    "expand": _cmd_expand,
    "closed-form": _cmd_closed_form,
    "identities": _cmd_identities,
    "verify": _cmd_verify,
    "measure": _cmd_measure,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "precision_cap"):
        _validate_precisions(args, parser)
    if args.command == "word" and args.length < 0:
        parser.error("length must be >= 0")
    if args.command == "series" and args.precision < 1:
        parser.error("precision must be >= 1")
    if hasattr(args, "terms") and args.terms < 1:
        parser.error("--terms must be >= 1")
    if args.command == "closed-form" and args.n < 1:
        parser.error("--n must be >= 1")
    if hasattr(args, "n_max") and args.n_max < 0:
        parser.error("--n-max must be >= 0")
    try:
        return _HANDLERS[args.command](args)
    except PrecisionCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    raise SystemExit(main())
