"""Coefficients of the lambda-exponential and its reciprocal.

``epsilon(n, "-")`` is ``prod_{j<n} (1 - j*lambda)``, the n-th Taylor
coefficient (times n!) of ``(1 + lambda*X)**(1/lambda)``; ``epsilon(n, "+")``
is ``prod_{j<n} (1 + j*lambda)`` and appears with alternating sign in the
expansion of the reciprocal.
"""
from __future__ import annotations

from dataclasses import dataclass

from .poly import LambdaPoly

__all__ = ["epsilon", "epsilon_minus", "epsilon_plus", "EpsilonTable"]


def epsilon(n: int, sign: str = "-") -> LambdaPoly:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    step = 1 if sign == "+" else -1
    out = LambdaPoly.one()
    for j in range(n):
        out = out * LambdaPoly((1, step * j))
    return out


def epsilon_minus(n: int) -> LambdaPoly:
    return epsilon(n, "-")


def epsilon_plus(n: int) -> LambdaPoly:
    return epsilon(n, "+")


@dataclass(frozen=True)
class EpsilonTable:
    """Both epsilon sequences for ``0 <= n <= max_n``, built incrementally."""

    max_n: int
    plus: tuple[LambdaPoly, ...]
    minus: tuple[LambdaPoly, ...]

    @classmethod
    def build(cls, max_n: int) -> EpsilonTable:
        if max_n < 0:
            raise ValueError(f"max_n must be >= 0, got {max_n}")
        plus, minus = [LambdaPoly.one()], [LambdaPoly.one()]
        for n in range(1, max_n + 1):
            plus.append(plus[-1] * LambdaPoly((1, n - 1)))
            minus.append(minus[-1] * LambdaPoly((1, -(n - 1))))
        return cls(max_n, tuple(plus), tuple(minus))

    def __call__(self, n: int, sign: str = "-") -> LambdaPoly:
        return (self.minus if sign == "-" else self.plus)[n]

    def covers(self, n: int) -> bool:
        return n <= self.max_n
