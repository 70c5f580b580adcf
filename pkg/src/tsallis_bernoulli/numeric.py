"""Floating-point evaluation of the lambda-exponential and lambda-logarithm.

Both functions are written through ``log1p``/``expm1`` so that small
nonzero lambda does not lose precision to cancellation. ``lambda == 0`` is an
explicit branch (the ordinary exp/log); there is no near-zero threshold.
"""
from __future__ import annotations

import math

from .poly import XPoly

__all__ = [
    "NumericDomainError",
    "NumericOverflowError",
    "exp_lambda",
    "log_lambda",
    "product_form_exp",
    "horner_float",
]


class NumericDomainError(ValueError):
    pass


class NumericOverflowError(OverflowError):
    pass


def _finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise NumericDomainError(f"{name} must be finite, got {value!r}")
    return value


def exp_lambda(X: float, lam: float) -> float:
    """``(1 + lam*X)**(1/lam)``, or ``exp(X)`` when ``lam == 0``."""
    X, lam = _finite("X", X), _finite("lambda", lam)
    if lam == 0.0:
        exponent = X
    else:
        base = lam * X
        if base <= -1.0:
            raise NumericDomainError(f"1 + lambda*X must be positive (lambda={lam}, X={X})")
        exponent = math.log1p(base) / lam
    try:
        out = math.exp(exponent)
    except OverflowError:
        raise NumericOverflowError(f"exp_lambda overflows for lambda={lam}, X={X}") from None
    if not math.isfinite(out):
        raise NumericOverflowError(f"exp_lambda overflows for lambda={lam}, X={X}")
    return out


def log_lambda(X: float, lam: float) -> float:
    """``(X**lam - 1)/lam``, or ``log(X)`` when ``lam == 0``; needs ``X > 0``."""
    X, lam = _finite("X", X), _finite("lambda", lam)
    if X <= 0.0:
        raise NumericDomainError(f"log_lambda needs X > 0, got {X}")
    if lam == 0.0:
        return math.log(X)
    try:
        out = math.expm1(lam * math.log(X)) / lam
    except OverflowError:
        raise NumericOverflowError(f"log_lambda overflows for lambda={lam}, X={X}") from None
    if not math.isfinite(out):
        raise NumericOverflowError(f"log_lambda overflows for lambda={lam}, X={X}")
    return out


def product_form_exp(t: float, x: float, lam: float, L: int) -> float:
    """Exponential of the truncated series ``sum_{l<L} (-lam)**l (t*x)**(l+1)/(l+1)``.

    Converges to ``exp_lambda(t*x, lam)`` for ``|lam*t*x| < 1``.
    """
    t, x, lam = _finite("t", t), _finite("x", x), _finite("lambda", lam)
    if not isinstance(L, int) or L < 1:
        raise ValueError(f"L must be a positive integer, got {L!r}")
    tx = t * x
    if abs(lam * tx) >= 1.0:
        raise NumericDomainError(f"|lambda*t*x| must be < 1, got {abs(lam * tx)}")
    # math.fsum keeps the alternating sum accurate
    terms = []
    power = tx
    for ell in range(L):
        terms.append(power / (ell + 1))
        power *= -lam * tx
        if power == 0.0:
            break
    s = math.fsum(terms)
    try:
        return math.exp(s)
    except OverflowError:
        raise NumericOverflowError(f"product form overflows for t={t}, x={x}") from None


def horner_float(p: XPoly, lam: float, x: float) -> float:
    """Evaluate ``p`` at float ``(lam, x)``; coefficients are rounded once."""
    lam, x = _finite("lambda", lam), _finite("x", x)
    acc = 0.0
    for c in reversed(p.coeffs):
        inner = 0.0
        for q in reversed(c.coeffs):
            inner = inner * lam + float(q)
        acc = acc * x + inner
    return acc
