"""Upper Hessenberg determinants and the determinantal Bernoulli route.

The determinant of an upper Hessenberg matrix is computed from its leading
principal minors ``H_0 = 1, H_1, ..., H_n`` with the first-order recurrence

    H_m = sum_{l<m} (-1)**(m-1-l) * Q(l, m-2) * h[l+1, m] * H_l,
    Q(l, k) = prod_{j=l..k} h[j+2, j+1]   (empty product = 1).

Indices in docstrings are 1-based, matching the usual matrix notation; the
stored rows are 0-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Any, Sequence

from .epsilon import EpsilonTable
from .poly import XPoly

__all__ = [
    "HessenbergError",
    "HessMatrix",
    "hessenberg_minors",
    "hessenberg_det",
    "build_D_matrix",
    "beta_tilde_determinant",
    "beta_tilde_determinant_family",
]


class HessenbergError(ValueError):
    pass


@dataclass(frozen=True)
class HessMatrix:
    """Square matrix with ``h[j, l] == 0`` whenever ``j - l >= 2``.

    ``one`` is the multiplicative identity of the entry ring; it is the value
    of the empty determinant.
    """

    rows: tuple[tuple[Any, ...], ...]
    one: Any = 1

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for j, row in enumerate(rows):
            if len(row) != n:
                raise HessenbergError(f"row {j + 1} has {len(row)} entries, expected {n}")
            for ell in range(j - 1):
                if row[ell]:
                    raise HessenbergError(
                        f"entry ({j + 1}, {ell + 1}) is nonzero below the subdiagonal"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    def h(self, j: int, ell: int):
        """1-based entry access."""
        return self.rows[j - 1][ell - 1]


def hessenberg_minors(m: HessMatrix) -> list:
    """All leading principal minors ``[H_0, ..., H_n]``."""
    h = m.h
    out = [m.one]
    for k in range(1, m.n + 1):
        acc = None
        q = m.one  # Q(l, k-2), built from l = k-1 downwards
        for ell in range(k - 1, -1, -1):
            if ell <= k - 2:
                q = q * h(ell + 2, ell + 1)
            term = q * h(ell + 1, k) * out[ell]
            if (k - 1 - ell) % 2:
                term = -term
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def hessenberg_det(m: HessMatrix):
    return hessenberg_minors(m)[-1]


def _d_entry(r: int, c: int, em: Sequence, x_pows: Sequence[XPoly]) -> XPoly:
    # r, c are 1-based
    if r == 1:
        return x_pows[c - 1] * em[c - 1]
    if r == 2:
        return XPoly.const(em[c] / c)
    if c < r - 1:
        return XPoly.zero()
    return XPoly.const(em[c - r + 2] * comb(c - 1, r - 3))


def build_D_matrix(n: int, eps: EpsilonTable | None = None) -> HessMatrix:
    """The ``(n+1) x (n+1)`` matrix whose determinant gives ``bt[n]``.

    Row 1 holds ``eps-(c-1) x**(c-1)``; row 2 holds ``eps-(c)/c``; rows
    ``r >= 3`` hold ``eps-(c-r+2) * C(c-1, r-3)`` on and above the
    subdiagonal.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be an integer >= 1, got {n!r}")
    if eps is None or not eps.covers(n + 1):
        eps = EpsilonTable.build(n + 1)
    size = n + 1
    x_pows = [XPoly.monomial(k) for k in range(size)]
    rows = [[_d_entry(r, c, eps.minus, x_pows) for c in range(1, size + 1)] for r in range(1, size + 1)]
    return HessMatrix(rows, XPoly.one())


def beta_tilde_determinant(n: int, eps: EpsilonTable | None = None) -> XPoly:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a non-negative integer, got {n!r}")
    if n == 0:
        return XPoly.one()
    d = hessenberg_det(build_D_matrix(n, eps))
    return d * ((-1) ** n) / factorial(n - 1)


def beta_tilde_determinant_family(max_n: int, eps: EpsilonTable | None = None) -> list[XPoly]:
    """``bt[0..max_n]`` from one matrix.

    The matrix for degree ``n`` is the leading ``(n+1)``-block of the matrix
    for ``max_n``, so a single pass over the minors yields every member.
    """
    if not isinstance(max_n, int) or max_n < 0:
        raise ValueError(f"max_n must be a non-negative integer, got {max_n!r}")
    if max_n == 0:
        return [XPoly.one()]
    minors = hessenberg_minors(build_D_matrix(max_n, eps))
    out = [XPoly.one()]
    for n in range(1, max_n + 1):
        out.append(minors[n + 1] * ((-1) ** n) / factorial(n - 1))
    return out
