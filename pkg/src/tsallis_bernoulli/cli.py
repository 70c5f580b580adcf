"""Command-line interface.

Exit codes: 0 success, 1 a verified identity failed, 2 usage or domain
error, 3 two computation routes disagreed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections import OrderedDict
from datetime import datetime, timezone
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from .bernoulli import Route, beta_family, degenerate_bernoulli_numbers
from .bivariate import BivariateRoute, bivariate_family
from .numeric import NumericDomainError, NumericOverflowError, exp_lambda, log_lambda, product_form_exp
from .poly import XPoly, parse_rational
from .serialize import SCHEMA_VERSION, csv_rows, from_record, to_latex, to_record, to_text
from .series import beta_generating_series
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DISAGREE = 0, 1, 2, 3
FORMATS = ("json", "csv", "latex", "text")
MAX_R = 8


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected an exact rational like -3/4, got {text!r}") from exc


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _r_value(text: str) -> int:
    v = _nonneg(text)
    if not 1 <= v <= MAX_R:
        raise argparse.ArgumentTypeError(f"r must be between 1 and {MAX_R}, got {v}")
    return v


def _document(command: str, parameters: dict, results: list, meta: bool) -> dict:
    doc: dict[str, Any] = OrderedDict()
    doc["schema_version"] = SCHEMA_VERSION
    doc["command"] = command
    doc["parameters"] = parameters
    doc["results"] = results
    if meta:
        doc["meta"] = {
            "generated_at": datetime.now(timezone.utc).isoformat(timespec="seconds"),
            "version": __version__,
        }
    return doc


def _specialize(p: XPoly, lam: Fraction | None, x: Fraction | None):
    if lam is not None and x is not None:
        return p.at_x(x)(lam)
    if lam is not None:
        return p.at_lambda(lam)
    if x is not None:
        return p.at_x(x)
    return p


def _label(rec: dict) -> str:
    keys = [k for k in ("n", "r", "route") if k in rec]
    return " ".join(f"{k}={rec[k]}" for k in keys)


def render(doc: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(doc, indent=2) + "\n"
    results = doc["results"]
    if fmt == "csv":
        buf = io.StringIO()
        fields = ["n", "r", "route", "xexp", "yexp", "lexp", "coeff"]
        w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n", extrasaction="ignore")
        w.writeheader()
        for rec in results:
            if "kind" not in rec:
                continue
            base = {k: rec.get(k, "") for k in ("n", "r", "route")}
            if rec["kind"] == "float":
                w.writerow({**base, "coeff": repr(rec["value"])})
                continue
            for row in csv_rows(from_record(rec)):
                w.writerow({**base, **row})
        return buf.getvalue()
    lines = []
    render_one = to_latex if fmt == "latex" else to_text
    for rec in results:
        if rec.get("kind") == "float":
            lines.append(repr(rec["value"]))
        elif "kind" in rec:
            body = render_one(from_record(rec))
            lines.append(f"{_label(rec)}: {body}" if len(results) > 1 else body)
        else:
            lines.append(" ".join(f"{k}={v}" for k, v in rec.items()))
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> tuple[dict, int]:
    routes = [r for r in Route] if args.route == "all" else [Route(args.route)]
    results, values = [], []
    for route in routes:
        p = beta_family(args.n, route).polys[args.n]
        value = _specialize(p, args.lam, args.x)
        values.append(value)
        results.append({"n": args.n, "route": route.value, **to_record(value)})
    code = EXIT_OK
    if args.route == "all":
        agree = all(v == values[0] for v in values)
        results.append({"routes_agree": agree})
        if not agree:
            code = EXIT_DISAGREE
    params = {"n": args.n, "route": args.route}
    if args.lam is not None:
        params["lambda"] = str(args.lam)
    if args.x is not None:
        params["x"] = str(args.x)
    return _document("compute", params, results, not args.no_meta), code


def cmd_numbers(args) -> tuple[dict, int]:
    nums = degenerate_bernoulli_numbers(args.max_n)
    results = [{"n": n, **to_record(b)} for n, b in enumerate(nums)]
    return _document("numbers", {"max_n": args.max_n}, results, not args.no_meta), EXIT_OK


def cmd_bivariate(args) -> tuple[dict, int]:
    p = bivariate_family(args.n, args.r, args.route).polys[args.n]
    results = [{"n": args.n, "r": args.r, "route": args.route, **to_record(p)}]
    params = {"n": args.n, "r": args.r, "route": args.route}
    return _document("bivariate", params, results, not args.no_meta), EXIT_OK


def cmd_series(args) -> tuple[dict, int]:
    s = beta_generating_series(args.order)
    results = [{"n": n, **to_record(c)} for n, c in enumerate(s.coeffs)]
    return _document("series", {"order": args.order}, results, not args.no_meta), EXIT_OK


def cmd_eval(args) -> tuple[dict, int]:
    if args.kind == "explambda":
        value = exp_lambda(args.x, args.lam)
        params = {"x": args.x, "lambda": args.lam}
    elif args.kind == "loglambda":
        value = log_lambda(args.x, args.lam)
        params = {"x": args.x, "lambda": args.lam}
    else:
        value = product_form_exp(args.t, args.x, args.lam, args.terms)
        params = {"t": args.t, "x": args.x, "lambda": args.lam, "terms": args.terms}
    results = [{"kind": "float", "value": value}]
    return _document("eval", {"kind": args.kind, **params}, results, not args.no_meta), EXIT_OK


def cmd_verify(args) -> tuple[dict, int]:
    suite = args.suite_opt or args.suite or "all"
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}")
    checks = run_suite(suite, args.max_n)
    table: "OrderedDict[tuple[str, str], list]" = OrderedDict()
    for c in checks:
        table.setdefault((c.suite, c.identity), []).append(c)
    results = []
    for (s, ident), cs in table.items():
        failed = [c for c in cs if not c.passed]
        ns = [c.n for c in cs if c.n is not None]
        rec = {"suite": s, "identity": ident, "passed": not failed, "checks": len(cs)}
        if ns:
            rec["n_range"] = [min(ns), max(ns)]
        if failed:
            rec["failed_n"] = [c.n for c in failed]
            details = [c.detail for c in failed if c.detail]
            if details:
                rec["detail"] = details[0]
        results.append(rec)
    code = EXIT_OK if all(r["passed"] for r in results) else EXIT_FAIL
    return _document("verify", {"suite": suite, "max_n": args.max_n}, results, not args.no_meta), code


def _verify_table(doc: dict) -> str:
    lines = []
    for r in doc["results"]:
        span = f"n={r['n_range'][0]}..{r['n_range'][1]}" if "n_range" in r else ""
        status = "PASS" if r["passed"] else "FAIL"
        line = f"{status}  {r['suite']:<12} {r['identity']:<50} {span}"
        if not r["passed"]:
            line += f"  failed at n={r['failed_n']}"
        lines.append(line.rstrip())
    total = len(doc["results"])
    ok = sum(r["passed"] for r in doc["results"])
    lines.append(f"{ok}/{total} identities passed")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tsallis-bernoulli",
        description="Exact Tsallis-deformed Bernoulli polynomials and identity checks.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_format="json"):
        p.add_argument("--format", choices=FORMATS, default=default_format)
        p.add_argument("--no-meta", action="store_true", help="omit the timestamped metadata header")

    p = sub.add_parser("compute", help="deformed Bernoulli polynomial of degree n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--route", choices=[r.value for r in Route] + ["all"], default="recurrence")
    p.add_argument("--lambda", dest="lam", type=_rational)
    p.add_argument("--x", type=_rational)
    common(p)

    p = sub.add_parser("numbers", help="degenerate Bernoulli numbers beta_0..beta_max_n")
    p.add_argument("--max-n", type=_nonneg, required=True)
    common(p)

    p = sub.add_parser("bivariate", help="two-variable polynomial of degree n and step r")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--r", type=_r_value, required=True)
    p.add_argument("--route", choices=[r.value for r in BivariateRoute], default="recurrence")
    common(p)

    p = sub.add_parser("series", help="coefficients of the generating series")
    p.add_argument("--order", type=_nonneg, required=True)
    common(p)

    p = sub.add_parser("verify", help="run identity suites")
    p.add_argument("suite", nargs="?", choices=["all", *SUITES])
    p.add_argument("--suite", dest="suite_opt", choices=["all", *SUITES])
    p.add_argument("--max-n", type=_nonneg, default=10)
    common(p, default_format="text")

    p = sub.add_parser("eval", help="floating-point lambda-exponential/logarithm")
    p.add_argument("kind", choices=["explambda", "loglambda", "product"])
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--terms", type=int, default=60, help="truncation length for the product form")
    common(p)
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "numbers": cmd_numbers,
    "bivariate": cmd_bivariate,
    "series": cmd_series,
    "verify": cmd_verify,
    "eval": cmd_eval,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        doc, code = COMMANDS[args.command](args)
    except (NumericDomainError, NumericOverflowError, UsageError, ValueError) as exc:
        err = _document(args.command, {}, [], False)
        del err["results"]
        err["error"] = {"type": type(exc).__name__, "message": str(exc)}
        sys.stdout.write(json.dumps(err, indent=2) + "\n")
        return EXIT_USAGE
    if args.command == "verify" and args.format == "text":
        sys.stdout.write(_verify_table(doc))
    else:
        sys.stdout.write(render(doc, args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
