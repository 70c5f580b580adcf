"""Two-variable deformed Bernoulli polynomials ``bt[n]^(r)(lambda|x, y)``.

Generated by ``t/(exp_lambda(t) - 1) * exp_lambda(t*x) * exp_lambda(t**r * y)``.
Setting ``y = 0`` recovers the one-variable family.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb, factorial
from typing import Sequence

from .bernoulli import beta_tilde_recurrence_family, degenerate_bernoulli_numbers
from .epsilon import EpsilonTable
from .poly import LambdaPoly, XPoly, XYPoly
from .series import bivariate_generating_series

__all__ = [
    "BivariateRoute",
    "BivariateFamily",
    "beta_r_recurrence",
    "beta_r_recurrence_family",
    "beta_r_double_sum",
    "beta_r_connection",
    "beta_r_series",
    "bivariate_family",
    "partial_x_check",
    "partial_y_check",
]

LAMBDA_X = XYPoly.monomial(1, 0, LambdaPoly.lam())
LAMBDA_Y = XYPoly.monomial(0, 1, LambdaPoly.lam())


class BivariateRoute(str, Enum):
    RECURRENCE = "recurrence"
    DOUBLE_SUM = "double-sum"
    CONNECTION = "connection"
    SERIES = "series"


@dataclass(frozen=True)
class BivariateFamily:
    max_n: int
    r: int
    polys: tuple[XYPoly, ...]


def _check(n: int, r: int) -> None:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"r must be a positive integer, got {r!r}")


def beta_r_recurrence_family(max_n: int, r: int, eps: EpsilonTable | None = None) -> list[XYPoly]:
    _check(max_n, r)
    if eps is None or not eps.covers(max_n + 1):
        eps = EpsilonTable.build(max_n + 1)
    em = eps.minus
    out: list[XYPoly] = []
    for n in range(max_n + 1):
        lead = XYPoly(
            {
                (n - r * ell, ell): em[ell] * em[n - r * ell] * (factorial(n) // (factorial(n - r * ell) * factorial(ell)))
                for ell in range(n // r + 1)
            }
        )
        acc = XYPoly.zero()
        for ell in range(n):
            acc = acc + out[ell] * (em[n + 1 - ell] * comb(n + 1, ell))
        out.append(lead - acc / (n + 1))
    return out


def beta_r_recurrence(n: int, r: int, eps: EpsilonTable | None = None) -> XYPoly:
    return beta_r_recurrence_family(n, r, eps)[n]


def beta_r_double_sum(
    n: int,
    r: int,
    eps: EpsilonTable | None = None,
    numbers: Sequence[LambdaPoly] | None = None,
) -> XYPoly:
    """Double sum over ``x**j * y**l`` with ``j + r*l <= n``."""
    _check(n, r)
    if eps is None or not eps.covers(n + 1):
        eps = EpsilonTable.build(n + 1)
    if numbers is None or len(numbers) <= n:
        numbers = degenerate_bernoulli_numbers(n, eps)
    em = eps.minus
    nf = factorial(n)
    terms = {}
    for ell in range(n // r + 1):
        for j in range(n - r * ell + 1):
            m = n - j - r * ell
            coef = nf // (factorial(j) * factorial(ell) * factorial(m))
            terms[(j, ell)] = em[j] * em[ell] * numbers[m] * coef
    return XYPoly(terms)


def beta_r_connection(
    n: int,
    r: int,
    eps: EpsilonTable | None = None,
    polys: Sequence[XPoly] | None = None,
) -> XYPoly:
    """``sum_l n!/(l!(n-r*l)!) eps-(l) bt[n-r*l](lambda|x) y**l``."""
    _check(n, r)
    if eps is None or not eps.covers(n + 1):
        eps = EpsilonTable.build(n + 1)
    if polys is None or len(polys) <= n:
        polys = beta_tilde_recurrence_family(n, eps)
    nf = factorial(n)
    acc = XYPoly.zero()
    for ell in range(n // r + 1):
        coef = nf // (factorial(ell) * factorial(n - r * ell))
        acc = acc + XYPoly.from_x(polys[n - r * ell]) * XYPoly.monomial(0, ell, eps.minus[ell] * coef)
    return acc


def beta_r_series(n: int, r: int) -> XYPoly:
    """``n!`` times the ``t**n`` coefficient of the two-variable generating series."""
    _check(n, r)
    return bivariate_generating_series(n, r)[n] * factorial(n)


def bivariate_family(max_n: int, r: int, route: BivariateRoute | str = BivariateRoute.RECURRENCE) -> BivariateFamily:
    _check(max_n, r)
    route = BivariateRoute(route)
    eps = EpsilonTable.build(max_n + 1)
    if route is BivariateRoute.RECURRENCE:
        polys = beta_r_recurrence_family(max_n, r, eps)
    elif route is BivariateRoute.DOUBLE_SUM:
        numbers = degenerate_bernoulli_numbers(max_n, eps)
        polys = [beta_r_double_sum(n, r, eps, numbers) for n in range(max_n + 1)]
    elif route is BivariateRoute.CONNECTION:
        one_var = beta_tilde_recurrence_family(max_n, eps)
        polys = [beta_r_connection(n, r, eps, one_var) for n in range(max_n + 1)]
    else:
        polys = bivariate_generating_series(max_n, r).egf_coefficients()
    return BivariateFamily(max_n, r, tuple(polys))


def partial_x_check(n: int, r: int, polys: Sequence[XYPoly] | None = None) -> tuple[XYPoly, XYPoly]:
    """Both sides of ``d/dx P_n = n (P_{n-1} - lambda x d/dx P_{n-1})``."""
    _check(n, r)
    if n < 1:
        raise ValueError(f"x-derivative identity needs n >= 1, got {n}")
    if polys is None or len(polys) <= n:
        polys = beta_r_recurrence_family(n, r)
    prev = polys[n - 1]
    return polys[n].diff_x(), (prev - LAMBDA_X * prev.diff_x()) * n


def partial_y_check(n: int, r: int, polys: Sequence[XYPoly] | None = None) -> tuple[XYPoly, XYPoly]:
    """Both sides of ``d/dy P_n = n!/(n-r)! (P_{n-r} - lambda y d/dy P_{n-r})``."""
    _check(n, r)
    if n < r:
        raise ValueError(f"y-derivative identity needs n >= r, got n={n}, r={r}")
    if polys is None or len(polys) <= n:
        polys = beta_r_recurrence_family(n, r)
    prev = polys[n - r]
    return polys[n].diff_y(), (prev - LAMBDA_Y * prev.diff_y()) * (factorial(n) // factorial(n - r))
