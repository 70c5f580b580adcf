"""JSON records and text/LaTeX/CSV renderings of exact objects.

Wire format (schema ``tsallis-bernoulli/1``):

* rational: canonical string, ``"p/q"`` or ``"p"``
* LambdaPoly: array of rational strings, index i = coefficient of lambda**i
* XPoly: ``{"var": "x", "coeffs": [<LambdaPoly>, ...]}``
* XYPoly: array of ``{"xexp": k, "yexp": l, "coeff": <LambdaPoly>}`` sorted
  by ``(xexp, yexp)``

A tagged record ``{"kind": ..., "value": ...}`` wraps each of these so that
empty (zero) values stay unambiguous when parsed back.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Any, Union

from .poly import LambdaPoly, XPoly, XYPoly, format_rational, parse_rational

__all__ = [
    "SCHEMA_VERSION",
    "Exact",
    "to_json",
    "from_json",
    "to_record",
    "from_record",
    "to_text",
    "to_latex",
    "csv_rows",
]

SCHEMA_VERSION = "tsallis-bernoulli/1"

Exact = Union[Fraction, LambdaPoly, XPoly, XYPoly]


def to_json(obj: Exact | int) -> Any:
    if isinstance(obj, (int, Fraction)) and not isinstance(obj, bool):
        return format_rational(Fraction(obj))
    if isinstance(obj, LambdaPoly):
        return [format_rational(c) for c in obj.coeffs]
    if isinstance(obj, XPoly):
        return {"var": "x", "coeffs": [to_json(c) for c in obj.coeffs]}
    if isinstance(obj, XYPoly):
        return [{"xexp": i, "yexp": j, "coeff": to_json(c)} for i, j, c in obj.sorted_terms()]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _lambda_from_json(data) -> LambdaPoly:
    if not isinstance(data, list) or not all(isinstance(c, str) for c in data):
        raise ValueError(f"malformed lambda polynomial: {data!r}")
    return LambdaPoly(parse_rational(c) for c in data)


def from_json(kind: str, data) -> Exact:
    if kind == "rational":
        return parse_rational(data)
    if kind == "lambda":
        return _lambda_from_json(data)
    if kind == "x":
        if not isinstance(data, dict) or data.get("var") != "x":
            raise ValueError(f"malformed x polynomial: {data!r}")
        return XPoly(_lambda_from_json(c) for c in data["coeffs"])
    if kind == "xy":
        if not isinstance(data, list):
            raise ValueError(f"malformed xy polynomial: {data!r}")
        return XYPoly({(t["xexp"], t["yexp"]): _lambda_from_json(t["coeff"]) for t in data})
    raise ValueError(f"unknown record kind {kind!r}")


def kind_of(obj: Exact | int) -> str:
    if isinstance(obj, (int, Fraction)):
        return "rational"
    if isinstance(obj, LambdaPoly):
        return "lambda"
    if isinstance(obj, XPoly):
        return "x"
    if isinstance(obj, XYPoly):
        return "xy"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def to_record(obj: Exact | int) -> dict:
    return {"kind": kind_of(obj), "value": to_json(obj)}


def from_record(rec: dict) -> Exact:
    return from_json(rec["kind"], rec["value"])


# -- text --------------------------------------------------------------------

def _power(var: str, k: int, latex: bool) -> str:
    if k == 0:
        return ""
    if k == 1:
        return var
    return f"{var}^{{{k}}}" if latex else f"{var}^{k}"


def _rat(q: Fraction, latex: bool) -> str:
    if latex and q.denominator != 1:
        return f"\\frac{{{q.numerator}}}{{{q.denominator}}}"
    return str(q)


def _join(terms: list[tuple[Fraction, str]], latex: bool) -> str:
    """Join ``(coefficient, monomial)`` pairs into a signed sum."""
    mul = " " if latex else "*"
    parts = []
    for q, mono in terms:
        neg = q < 0
        a = -q if neg else q
        if mono and a == 1:
            body = mono
        elif mono:
            body = f"{_rat(a, latex)}{mul}{mono}"
        else:
            body = _rat(a, latex)
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts) if parts else "0"


def _lambda_str(p: LambdaPoly, latex: bool) -> str:
    var = "\\lambda" if latex else "lambda"
    terms = [(c, _power(var, i, latex)) for i, c in reversed(list(enumerate(p.coeffs))) if c]
    return _join(terms, latex)


def _grouped(groups: list[tuple[LambdaPoly, str]], latex: bool) -> str:
    mul = " " if latex else "*"
    lp, rp = ("\\left(", "\\right)") if latex else ("(", ")")
    parts = []
    for c, mono in groups:
        if c.degree == 0:
            parts.append(_join([(c.coeffs[0], mono)], latex))
            continue
        inner = f"{lp}{_lambda_str(c, latex)}{rp}"
        parts.append(f"{inner}{mul}{mono}" if mono else inner)
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


def _render(obj: Exact | int, latex: bool) -> str:
    if isinstance(obj, (int, Fraction)):
        return _rat(Fraction(obj), latex) if obj >= 0 else "-" + _rat(-Fraction(obj), latex)
    if isinstance(obj, LambdaPoly):
        return _lambda_str(obj, latex)
    if isinstance(obj, XPoly):
        groups = [(c, _power("x", k, latex)) for k, c in reversed(list(enumerate(obj.coeffs))) if c]
        return _grouped(groups, latex)
    if isinstance(obj, XYPoly):
        sp = " " if latex else "*"
        items = sorted(obj.terms.items(), key=lambda kv: (-kv[0][0], -kv[0][1]))
        groups = []
        for (i, j), c in items:
            mono = sp.join(m for m in (_power("x", i, latex), _power("y", j, latex)) if m)
            groups.append((c, mono))
        return _grouped(groups, latex)
    raise TypeError(f"cannot render {type(obj).__name__}")


def to_text(obj: Exact | int) -> str:
    """Plain-text form, e.g. ``x^2 - x + 1/6``."""
    return _render(obj, latex=False)


def to_latex(obj: Exact | int) -> str:
    """LaTeX form; descending x-power, then descending lambda-power."""
    return _render(obj, latex=True)


def csv_rows(obj: Exact | int) -> list[dict]:
    """One row per nonzero rational coefficient."""
    if isinstance(obj, (int, Fraction)):
        return [{"xexp": 0, "yexp": 0, "lexp": 0, "coeff": format_rational(Fraction(obj))}]
    if isinstance(obj, LambdaPoly):
        obj = XYPoly.const(obj)
    elif isinstance(obj, XPoly):
        obj = XYPoly.from_x(obj)
    rows = []
    for i, j, c in obj.sorted_terms():
        for k, q in enumerate(c.coeffs):
            if q:
                rows.append({"xexp": i, "yexp": j, "lexp": k, "coeff": format_rational(q)})
    return rows
