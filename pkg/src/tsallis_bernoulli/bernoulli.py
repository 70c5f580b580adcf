"""Degenerate Bernoulli numbers and the deformed Bernoulli polynomials.

The deformed polynomials ``bt[n](lambda|x)`` are generated by
``t*exp_lambda(t*x) / (exp_lambda(t) - 1)``. They are computed here by three
independent routes (recurrence, explicit binomial sum, generating series);
the fourth, determinantal route lives in :mod:`tsallis_bernoulli.hessenberg`.
The module also carries the translation formula and the lambda-Appell
structure (derivative recurrence, its closed-form solution, and
reconstruction by integration).

Memoization is explicit: pass an :class:`EpsilonTable` (and, where accepted,
precomputed sequences) to share work between calls. Nothing is cached at
module level.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .epsilon import EpsilonTable, epsilon
from .poly import LambdaPoly, XPoly, XYPoly, substitute_lambda
from .series import beta_generating_series

__all__ = [
    "Route",
    "BetaFamily",
    "epsilon",
    "EpsilonTable",
    "degenerate_bernoulli_numbers",
    "beta_tilde_recurrence",
    "beta_tilde_recurrence_family",
    "beta_tilde_explicit",
    "beta_tilde_series",
    "beta_tilde",
    "beta_family",
    "xn_expansion",
    "translation_rhs",
    "translation_lhs",
    "classical_shift_check",
    "beta_tilde_derivative_series",
    "lambda_appell_step",
    "lambda_appell_reconstruct",
    "lambda_appell_monomials",
]

LAMBDA_X = XPoly.monomial(1, LambdaPoly.lam())


class Route(str, Enum):
    RECURRENCE = "recurrence"
    EXPLICIT = "explicit"
    DETERMINANT = "determinant"
    SERIES = "series"


@dataclass(frozen=True)
class BetaFamily:
    max_n: int
    numbers: tuple[LambdaPoly, ...]
    polys: tuple[XPoly, ...]
    route: Route


def _check_n(n: int, lo: int = 0) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < lo:
        raise ValueError(f"n must be an integer >= {lo}, got {n!r}")


def _eps(eps: EpsilonTable | None, n: int) -> EpsilonTable:
    if eps is not None and eps.covers(n):
        return eps
    return EpsilonTable.build(n)


def degenerate_bernoulli_numbers(max_n: int, eps: EpsilonTable | None = None) -> list[LambdaPoly]:
    """beta_0(lambda) .. beta_max_n(lambda) from the x = 0 recurrence."""
    _check_n(max_n)
    em = _eps(eps, max_n + 1).minus
    out: list[LambdaPoly] = []
    for n in range(max_n + 1):
        acc = LambdaPoly.zero()
        for k in range(n):
            acc = acc + out[k] * em[n + 1 - k] * comb(n + 1, k)
        out.append((LambdaPoly.one() if n == 0 else LambdaPoly.zero()) - acc / (n + 1))
    return out


def beta_tilde_recurrence_family(max_n: int, eps: EpsilonTable | None = None) -> list[XPoly]:
    _check_n(max_n)
    em = _eps(eps, max_n + 1).minus
    out: list[XPoly] = []
    for n in range(max_n + 1):
        acc = XPoly.zero()
        for k in range(n):
            acc = acc + out[k] * (em[n + 1 - k] * comb(n + 1, k))
        out.append(XPoly.monomial(n, em[n]) - acc / (n + 1))
    return out


def beta_tilde_recurrence(n: int, eps: EpsilonTable | None = None) -> XPoly:
    _check_n(n)
    return beta_tilde_recurrence_family(n, eps)[n]


def beta_tilde_explicit(
    n: int,
    eps: EpsilonTable | None = None,
    numbers: Sequence[LambdaPoly] | None = None,
) -> XPoly:
    """Binomial sum ``sum_k C(n,k) eps-(k) beta_{n-k}(lambda) x**k``."""
    _check_n(n)
    em = _eps(eps, n + 1).minus
    if numbers is None or len(numbers) <= n:
        numbers = degenerate_bernoulli_numbers(n, eps)
    return XPoly([em[k] * numbers[n - k] * comb(n, k) for k in range(n + 1)])


def beta_tilde_series(n: int) -> XPoly:
    """``n!`` times the ``t**n`` coefficient of the generating series."""
    _check_n(n)
    return beta_generating_series(n)[n] * factorial(n)


def beta_family(max_n: int, route: Route | str = Route.RECURRENCE) -> BetaFamily:
    _check_n(max_n)
    route = Route(route)
    eps = EpsilonTable.build(max_n + 1)
    numbers = degenerate_bernoulli_numbers(max_n, eps)
    if route is Route.RECURRENCE:
        polys = beta_tilde_recurrence_family(max_n, eps)
    elif route is Route.EXPLICIT:
        polys = [beta_tilde_explicit(n, eps, numbers) for n in range(max_n + 1)]
    elif route is Route.SERIES:
        polys = beta_generating_series(max_n).egf_coefficients()
    else:
        from .hessenberg import beta_tilde_determinant_family

        polys = beta_tilde_determinant_family(max_n, eps)
    return BetaFamily(max_n, tuple(numbers), tuple(polys), route)


def beta_tilde(n: int, route: Route | str = Route.RECURRENCE) -> XPoly:
    return beta_family(n, route).polys[n]


def _polys(max_n: int, polys: Sequence[XPoly] | None, eps: EpsilonTable) -> Sequence[XPoly]:
    if polys is not None and len(polys) > max_n:
        return polys
    return beta_tilde_recurrence_family(max_n, eps)


def xn_expansion(n: int, eps: EpsilonTable | None = None, polys: Sequence[XPoly] | None = None) -> XPoly:
    """Right-hand side of the expansion of ``eps-(n) x**n`` in the bt family."""
    _check_n(n)
    eps = _eps(eps, n + 1)
    polys = _polys(n, polys, eps)
    acc = XPoly.zero()
    for k in range(n + 1):
        acc = acc + polys[k] * (eps.minus[n + 1 - k] * comb(n + 1, k))
    return acc / (n + 1)


def translation_rhs(n: int, eps: EpsilonTable | None = None, polys: Sequence[XPoly] | None = None) -> XYPoly:
    """Shift formula for ``bt[n](lambda|x+y)`` expanded in powers of x and y.

    Only index pairs with ``k + l <= n`` contribute; outside that range the
    multinomial coefficient is not defined.
    """
    _check_n(n)
    eps = _eps(eps, n)
    polys = _polys(n, polys, eps)
    x = XYPoly.monomial(1, 0)
    x_plus_y = XYPoly({(1, 0): 1, (0, 1): 1})
    x_pows = [XYPoly.one()]
    xy_pows = [XYPoly.one()]
    for _ in range(n):
        x_pows.append(x_pows[-1] * x)
        xy_pows.append(xy_pows[-1] * x_plus_y)
    acc = XYPoly.zero()
    nf = factorial(n)
    for k in range(n + 1):
        for ell in range(n + 1 - k):
            m = n - k - ell
            coef = nf // (factorial(k) * factorial(ell) * factorial(m))
            if k % 2:
                coef = -coef
            scal = eps.plus[k] * eps.minus[ell] * coef
            acc = acc + XYPoly.from_x(polys[m]) * x_pows[k] * xy_pows[ell] * scal
    return acc


def translation_lhs(n: int, polys: Sequence[XPoly] | None = None) -> XYPoly:
    """``bt[n](lambda|x+y)`` by direct substitution."""
    _check_n(n)
    p = polys[n] if polys is not None and len(polys) > n else beta_tilde_recurrence(n)
    return p.compose_shift()


def classical_shift_check(n: int, polys: Sequence[XPoly] | None = None) -> tuple[XYPoly, XYPoly]:
    """Both sides of ``B_n(x+y) = sum_l C(n,l) B_{n-l}(x) y**l`` at lambda = 0."""
    _check_n(n)
    polys = _polys(n, polys, EpsilonTable.build(n + 1))
    classical = [substitute_lambda(p, 0) for p in polys[: n + 1]]
    lhs = classical[n].compose_shift()
    rhs = XYPoly.zero()
    for ell in range(n + 1):
        rhs = rhs + XYPoly.from_x(classical[n - ell]) * XYPoly.monomial(0, ell, comb(n, ell))
    return lhs, rhs


def beta_tilde_derivative_series(n: int, polys: Sequence[XPoly] | None = None) -> XPoly:
    """d/dx bt[n] from the closed-form sum over lower-degree members.

    ``bt'[m+1] = (m+1)! * sum_{k<=m} (-lambda*x)**(m-k) / k! * bt[k]``.
    """
    _check_n(n)
    if n == 0:
        return XPoly.zero()
    m = n - 1
    polys = _polys(m, polys, EpsilonTable.build(n))
    neg_lx = -LAMBDA_X
    pows = [XPoly.one()]
    for _ in range(m):
        pows.append(pows[-1] * neg_lx)
    acc = XPoly.zero()
    for k in range(m + 1):
        acc = acc + pows[m - k] * polys[k] * Fraction(1, factorial(k))
    return acc * factorial(n)


def lambda_appell_step(prev: XPoly, n: int, at_zero: LambdaPoly | Fraction | int = 0) -> XPoly:
    """``P_n = P_n(0) + n * int_0^x (P_{n-1}(u) - lambda*u*P'_{n-1}(u)) du``."""
    _check_n(n, 1)
    integrand = prev - LAMBDA_X * prev.diff()
    return integrand.antiderivative() * n + at_zero


def lambda_appell_reconstruct(n: int, polys: Sequence[XPoly] | None = None, numbers: Sequence[LambdaPoly] | None = None) -> XPoly:
    """Rebuild ``bt[n]`` from ``bt[n-1]`` and the number ``beta_n(lambda)``."""
    _check_n(n, 1)
    eps = EpsilonTable.build(n + 1)
    polys = _polys(n - 1, polys, eps)
    if numbers is None or len(numbers) <= n:
        numbers = degenerate_bernoulli_numbers(n, eps)
    return lambda_appell_step(polys[n - 1], n, numbers[n])


def lambda_appell_monomials(max_n: int) -> list[XPoly]:
    """lambda-Appell family with ``P_0 = 1`` and ``P_n(0) = 0`` for n >= 1."""
    _check_n(max_n)
    out = [XPoly.one()]
    for n in range(1, max_n + 1):
        out.append(lambda_appell_step(out[-1], n))
    return out
