"""Truncated formal power series in t.

Coefficients are ring elements from :mod:`tsallis_bernoulli.poly`
(:class:`XPoly` by default, :class:`XYPoly` for the two-variable generating
function). Binary operations require both operands to share the same
truncation order; mismatched orders raise instead of being silently
re-truncated.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Sequence

from .epsilon import epsilon_minus
from .poly import LambdaPoly, XPoly, XYPoly

__all__ = [
    "SeriesError",
    "NonUnitDenominator",
    "OrderMismatch",
    "TruncSeries",
    "exp_lambda_series",
    "series_mul",
    "series_div",
    "beta_generating_series",
    "bivariate_generating_series",
    "log_expx_series",
]


class SeriesError(ValueError):
    pass


class NonUnitDenominator(SeriesError):
    """Division by a series whose constant term is not 1."""


class OrderMismatch(SeriesError):
    pass


class TruncSeries:
    """Series ``sum(coeffs[n] * t**n)`` known modulo ``t**(order + 1)``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence, order: int | None = None, ring=XPoly):
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise SeriesError(f"order must be >= 0, got {order}")
        coeffs = coeffs[: order + 1]
        coeffs += [ring.zero()] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(_lift(c, ring) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @property
    def ring(self):
        return type(self.coeffs[0])

    @classmethod
    def one(cls, order: int, ring=XPoly) -> TruncSeries:
        return cls([ring.one()], order, ring)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        return f"TruncSeries(order={self.order}, coeffs={list(self.coeffs)!r})"

    def is_unit(self) -> bool:
        return self.coeffs[0] == 1

    def _check(self, other: TruncSeries) -> None:
        if not isinstance(other, TruncSeries):
            raise TypeError(f"expected TruncSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise OrderMismatch(f"series orders differ: {self.order} vs {other.order}")

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        self._check(other)
        return TruncSeries([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __neg__(self) -> TruncSeries:
        return TruncSeries([-a for a in self.coeffs], self.order, self.ring)

    def __mul__(self, other) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        return TruncSeries([a * other for a in self.coeffs], self.order, self.ring)

    def __truediv__(self, other: TruncSeries) -> TruncSeries:
        return series_div(self, other)

    def lift(self, ring) -> TruncSeries:
        return TruncSeries(self.coeffs, self.order, ring)

    def div_t(self) -> TruncSeries:
        """Exact division by t; the order drops by one."""
        if self.coeffs[0]:
            raise SeriesError("series has a nonzero constant term; not divisible by t")
        if self.order == 0:
            raise SeriesError("cannot divide an order-0 series by t")
        return TruncSeries(self.coeffs[1:], self.order - 1, self.ring)

    def egf_coefficients(self) -> list:
        """``n! * coeffs[n]`` for every n."""
        return [c * factorial(n) for n, c in enumerate(self.coeffs)]


def _lift(c, ring):
    if isinstance(c, ring):
        return c
    if ring is XYPoly and isinstance(c, XPoly):
        return XYPoly.from_x(c)
    if ring is XYPoly:
        return XYPoly.const(c)
    if ring is XPoly:
        return XPoly.const(c)
    raise TypeError(f"cannot lift {type(c).__name__} into {ring.__name__}")


def _check_order(order: int) -> None:
    if not isinstance(order, int) or order < 0:
        raise SeriesError(f"order must be a non-negative integer, got {order!r}")


def exp_lambda_series(order: int, arg: str = "tx", r: int = 1) -> TruncSeries:
    """Power series of the lambda-exponential ``(1 + lambda*X)**(1/lambda)``.

    ``arg`` selects ``X``: ``"t"``, ``"tx"`` or ``"ty"`` (the latter meaning
    ``t**r * y`` and producing :class:`XYPoly` coefficients).
    """
    _check_order(order)
    if arg == "t":
        return TruncSeries([XPoly.const(epsilon_minus(n) / factorial(n)) for n in range(order + 1)])
    if arg == "tx":
        return TruncSeries([XPoly.monomial(n, epsilon_minus(n) / factorial(n)) for n in range(order + 1)])
    if arg == "ty":
        if not isinstance(r, int) or r < 1:
            raise SeriesError(f"r must be a positive integer, got {r!r}")
        coeffs = [XYPoly.zero()] * (order + 1)
        for ell in range(order // r + 1):
            coeffs[r * ell] = XYPoly.monomial(0, ell, epsilon_minus(ell) / factorial(ell))
        return TruncSeries(coeffs, order, XYPoly)
    raise SeriesError(f"unknown argument kind {arg!r}; expected 't', 'tx' or 'ty'")


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Truncated Cauchy product."""
    a._check(b)
    ring = a.ring if a.ring is b.ring else XYPoly
    ac, bc = a.coeffs, b.coeffs
    out = []
    for n in range(a.order + 1):
        s = ring.zero()
        for k in range(n + 1):
            if ac[k] and bc[n - k]:
                s = s + ac[k] * bc[n - k]
        out.append(s)
    return TruncSeries(out, a.order, ring)


def series_div(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Solve ``q * b = a`` by forward substitution; ``b`` must be a unit."""
    a._check(b)
    if not b.is_unit():
        raise NonUnitDenominator(f"denominator constant term is {b.coeffs[0]!r}, expected 1")
    ring = a.ring if a.ring is b.ring else XYPoly
    bc = b.coeffs
    q: list = []
    for n in range(a.order + 1):
        s = _lift(a.coeffs[n], ring)
        for k in range(n):
            if q[k] and bc[n - k]:
                s = s - q[k] * bc[n - k]
        q.append(s)
    return TruncSeries(q, a.order, ring)


def _reduced_denominator(order: int) -> TruncSeries:
    # (exp_lambda(t) - 1) / t
    return TruncSeries(
        [XPoly.const(epsilon_minus(k + 1) / factorial(k + 1)) for k in range(order + 1)]
    )


def beta_generating_series(order: int) -> TruncSeries:
    """``t*exp_lambda(t*x) / (exp_lambda(t) - 1)`` to order ``order``.

    ``n!`` times coefficient ``n`` is the deformed Bernoulli polynomial of
    degree ``n``.
    """
    _check_order(order)
    return series_div(exp_lambda_series(order, "tx"), _reduced_denominator(order))


def bivariate_generating_series(order: int, r: int) -> TruncSeries:
    """``t*exp_lambda(t*x)*exp_lambda(t**r*y) / (exp_lambda(t) - 1)``."""
    _check_order(order)
    num = series_mul(exp_lambda_series(order, "tx").lift(XYPoly), exp_lambda_series(order, "ty", r))
    return series_div(num, _reduced_denominator(order).lift(XYPoly))


def log_expx_series(order: int) -> TruncSeries:
    """``log_lambda(exp_lambda(t)**x) = ((1 + lambda*t)**x - 1) / lambda``.

    Coefficient of ``t**n`` is ``lambda**(n-1) * (x)_n / n!`` with ``(x)_n``
    the falling factorial.
    """
    if not isinstance(order, int) or order < 1:
        raise SeriesError(f"order must be >= 1, got {order!r}")
    coeffs = [XPoly.zero()]
    falling = XPoly.one()
    for n in range(1, order + 1):
        falling = falling * XPoly((-(n - 1), 1))
        coeffs.append(falling * LambdaPoly.monomial(n - 1, Fraction(1, factorial(n))))
    return TruncSeries(coeffs, order)
