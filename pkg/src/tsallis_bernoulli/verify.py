"""Identity suites behind ``tsallis-bernoulli verify``.

Each suite returns a list of :class:`Check` records, one per identity and
degree. A suite never raises on a failed identity; exceptions inside a
check are caught and reported as failures with the error text.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from .bernoulli import (
    Route,
    beta_family,
    beta_tilde_derivative_series,
    classical_shift_check,
    degenerate_bernoulli_numbers,
    lambda_appell_monomials,
    lambda_appell_reconstruct,
    translation_lhs,
    translation_rhs,
    xn_expansion,
)
from .bivariate import BivariateRoute, bivariate_family, partial_x_check, partial_y_check
from .epsilon import EpsilonTable
from .hessenberg import beta_tilde_determinant_family
from .numeric import exp_lambda, horner_float, log_lambda, product_form_exp
from .poly import LambdaPoly, XPoly, poly_eval, substitute_lambda
from .series import TruncSeries, exp_lambda_series, series_div

__all__ = ["Check", "SUITES", "run_suite", "classical_bernoulli_oracle", "carlitz_numbers_oracle"]

LAMBDA_X = XPoly.monomial(1, LambdaPoly.lam())
DETERMINANT_MAX_N = 12
CLASSICAL_CONSTANTS = {
    2: Fraction(1, 6),
    4: Fraction(-1, 30),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
}


@dataclass(frozen=True)
class Check:
    suite: str
    identity: str
    n: int | None
    passed: bool
    detail: str = ""


def _check(suite: str, identity: str, n: int | None, fn: Callable[[], bool]) -> Check:
    try:
        ok = bool(fn())
        return Check(suite, identity, n, ok)
    except Exception as exc:  # reported, not raised
        return Check(suite, identity, n, False, f"{type(exc).__name__}: {exc}")


def classical_bernoulli_oracle(max_n: int) -> list[XPoly]:
    """``B_n(x)`` from ``t*exp(t*x)/(exp(t)-1)`` using ordinary 1/n! coefficients only."""
    num = TruncSeries([XPoly.monomial(n, Fraction(1, factorial(n))) for n in range(max_n + 1)])
    den = TruncSeries([XPoly.const(Fraction(1, factorial(k + 1))) for k in range(max_n + 1)])
    return series_div(num, den).egf_coefficients()


def carlitz_numbers_oracle(max_n: int) -> list[LambdaPoly]:
    """``beta_n(lambda)`` as ``n!`` times coefficients of ``t / (exp_lambda(t) - 1)``.

    The denominator is built as the full lambda-exponential series minus one
    and divided by t, rather than from the reduced series used elsewhere.
    """
    e = exp_lambda_series(max_n + 1, "t")
    den = (e - TruncSeries.one(max_n + 1)).div_t()
    q = series_div(TruncSeries.one(max_n), den)
    return [c.at_x(0) for c in q.egf_coefficients()]


def suite_routes(max_n: int) -> Iterator[Check]:
    rec = beta_family(max_n, Route.RECURRENCE)
    exp = beta_family(max_n, Route.EXPLICIT)
    ser = beta_family(max_n, Route.SERIES)
    det_n = min(max_n, DETERMINANT_MAX_N)
    det = beta_tilde_determinant_family(det_n)
    eps = EpsilonTable.build(max_n + 1)
    carlitz = carlitz_numbers_oracle(max_n)
    for n in range(max_n + 1):
        p = rec.polys[n]
        yield _check("routes", "recurrence == explicit", n, lambda: p == exp.polys[n])
        yield _check("routes", "recurrence == series", n, lambda: p == ser.polys[n])
        if n <= det_n:
            yield _check("routes", "recurrence == determinant", n, lambda: p == det[n])
        yield _check("routes", "boundary bt_n(lambda|0) == beta_n(lambda)", n, lambda: p.at_x(0) == rec.numbers[n])
        yield _check("routes", "numbers == generating-series oracle", n, lambda: rec.numbers[n] == carlitz[n])
        yield _check(
            "routes",
            "x-degree n, leading eps-(n), lambda-degree <= n",
            n,
            lambda: p.degree == n and p.leading == eps.minus[n] and p.lambda_degree <= n,
        )


def suite_classical(max_n: int) -> Iterator[Check]:
    polys = beta_family(max_n).polys
    oracle = classical_bernoulli_oracle(max_n)
    for n in range(max_n + 1):
        yield _check("classical", "bt_n at lambda=0 == B_n(x)", n, lambda: substitute_lambda(polys[n], 0) == oracle[n])
        if n in CLASSICAL_CONSTANTS:
            yield _check(
                "classical",
                f"B_{n} == {CLASSICAL_CONSTANTS[n]}",
                n,
                lambda: poly_eval(polys[n], 0, 0) == CLASSICAL_CONSTANTS[n],
            )


def suite_translation(max_n: int) -> Iterator[Check]:
    polys = beta_family(max_n).polys
    numbers = degenerate_bernoulli_numbers(max_n)
    eps = EpsilonTable.build(max_n + 1)
    for n in range(max_n + 1):
        rhs = translation_rhs(n, eps, polys)
        yield _check("translation", "shift formula == bt_n(lambda|x+y)", n, lambda: rhs == translation_lhs(n, polys))

        def contraction() -> bool:
            expected = XPoly([eps.minus[k] * numbers[n - k] * math.comb(n, k) for k in range(n + 1)])
            return rhs.contract() == expected

        yield _check("translation", "contraction x->0, y->x gives explicit sum", n, contraction)
        yield _check("translation", "lambda=0 limit gives classical shift", n, lambda: _eq_pair(classical_shift_check(n, polys)))
        yield _check(
            "translation",
            "lambda=0 of shift formula == classical shift",
            n,
            lambda: rhs.at_lambda(0) == classical_shift_check(n, polys)[1],
        )


def _eq_pair(pair) -> bool:
    return pair[0] == pair[1]


def suite_appell(max_n: int) -> Iterator[Check]:
    polys = beta_family(max_n).polys
    numbers = degenerate_bernoulli_numbers(max_n)
    for n in range(max_n + 1):
        d = polys[n].diff()
        if n >= 1:
            prev = polys[n - 1]
            yield _check(
                "appell",
                "bt'_n == n (bt_{n-1} - lambda x bt'_{n-1})",
                n,
                lambda: d == (prev - LAMBDA_X * prev.diff()) * n,
            )
            yield _check("appell", "integral reconstruction", n, lambda: lambda_appell_reconstruct(n, polys, numbers) == polys[n])
        yield _check("appell", "closed-form derivative sum", n, lambda: beta_tilde_derivative_series(n, polys) == d)
    mono_n = min(max_n, 10)
    mono = lambda_appell_monomials(mono_n)
    eps = EpsilonTable.build(mono_n + 1)
    for n in range(mono_n + 1):
        yield _check("appell", "monomial family eps-(n) x^n", n, lambda: mono[n] == XPoly.monomial(n, eps.minus[n]))


def suite_xnexpansion(max_n: int) -> Iterator[Check]:
    eps = EpsilonTable.build(max_n + 1)
    polys = beta_family(max_n).polys
    for n in range(max_n + 1):
        yield _check(
            "xnexpansion",
            "eps-(n) x^n == sum over bt_k",
            n,
            lambda: xn_expansion(n, eps, polys) == XPoly.monomial(n, eps.minus[n]),
        )


def suite_determinant(max_n: int) -> Iterator[Check]:
    polys = beta_family(max_n).polys
    det = beta_tilde_determinant_family(max_n)
    oracle = classical_bernoulli_oracle(max_n)
    for n in range(max_n + 1):
        yield _check("determinant", "determinant == recurrence", n, lambda: det[n] == polys[n])
        yield _check("determinant", "lambda=0 determinant == B_n(x)", n, lambda: substitute_lambda(det[n], 0) == oracle[n])


def suite_bivariate(max_n: int) -> Iterator[Check]:
    one_var = beta_family(max_n).polys
    for r in (1, 2, 3):
        fams = {route: bivariate_family(max_n, r, route).polys for route in BivariateRoute}
        rec = fams[BivariateRoute.RECURRENCE]
        for n in range(max_n + 1):
            for route in (BivariateRoute.DOUBLE_SUM, BivariateRoute.CONNECTION, BivariateRoute.SERIES):
                yield _check("bivariate", f"r={r} recurrence == {route.value}", n, lambda: rec[n] == fams[route][n])
            yield _check("bivariate", f"r={r} y=0 reduction", n, lambda: all(fams[rt][n].at_y_zero() == one_var[n] for rt in fams))
            if n >= 1:
                yield _check("bivariate", f"r={r} x-derivative identity", n, lambda: _eq_pair(partial_x_check(n, r, rec)))
            if n >= r:
                yield _check("bivariate", f"r={r} y-derivative identity", n, lambda: _eq_pair(partial_y_check(n, r, rec)))


def _inversion_points(count: int, seed: int = 20240601) -> list[tuple[float, float]]:
    rng = random.Random(seed)
    pts = []
    while len(pts) < count:
        lam = rng.uniform(-1.0, 1.0)
        X = rng.uniform(-5.0, 5.0)
        if 1.0 + lam * X > 1e-3 and abs(math.log1p(lam * X) / lam if lam else X) < 50:
            pts.append((X, lam))
    return pts


def suite_numeric(max_n: int) -> Iterator[Check]:
    def inversion() -> bool:
        return all(
            abs(log_lambda(exp_lambda(X, lam), lam) - X) <= 1e-10 * max(1.0, abs(X))
            for X, lam in _inversion_points(200)
        )

    def continuity() -> bool:
        xs = [k / 4 for k in range(-12, 13)]
        return all(
            abs(exp_lambda(X, s * 1e-7) - math.exp(X)) <= 1e-5 * math.exp(X) for X in xs for s in (1, -1)
        )

    def product_form() -> bool:
        rng = random.Random(7)
        for _ in range(200):
            lam, t, x = rng.uniform(-1, 1), rng.uniform(-2, 2), rng.uniform(-2, 2)
            if abs(lam * t * x) > 0.5:
                continue
            closed = exp_lambda(t * x, lam)
            if abs(product_form_exp(t, x, lam, 60) - closed) > 1e-10 * abs(closed):
                return False
        return True

    yield _check("numeric", "log_lambda(exp_lambda(X)) == X", None, inversion)
    yield _check("numeric", "continuity at lambda=0", None, continuity)
    yield _check("numeric", "product form == closed form", None, product_form)
    polys = beta_family(max_n).polys
    points = [(Fraction(1, 2), Fraction(1, 3)), (Fraction(-1, 3), Fraction(7, 5)), (Fraction(3, 4), Fraction(-2, 3))]
    for n in range(max_n + 1):
        def exact_vs_float() -> bool:
            for lam, x in points:
                exact = float(poly_eval(polys[n], lam, x))
                approx = horner_float(polys[n], float(lam), float(x))
                if abs(exact - approx) > 1e-12 * max(abs(exact), 1e-300):
                    return False
            return True

        yield _check("numeric", "exact evaluation == float Horner", n, exact_vs_float)


SUITES: dict[str, Callable[[int], Iterator[Check]]] = {
    "routes": suite_routes,
    "classical": suite_classical,
    "translation": suite_translation,
    "appell": suite_appell,
    "xnexpansion": suite_xnexpansion,
    "determinant": suite_determinant,
    "bivariate": suite_bivariate,
    "numeric": suite_numeric,
}


def run_suite(name: str, max_n: int) -> list[Check]:
    if max_n < 0:
        raise ValueError(f"max_n must be >= 0, got {max_n}")
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(max_n)]
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    return list(SUITES[name](max_n))
