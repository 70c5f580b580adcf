"""Exact polynomial rings over the rationals.

Three immutable value types live here:

* :class:`LambdaPoly` -- dense univariate polynomial in ``lambda`` with
  :class:`fractions.Fraction` coefficients.
* :class:`XPoly` -- dense polynomial in ``x`` whose coefficients are
  :class:`LambdaPoly`.
* :class:`XYPoly` -- sparse polynomial in ``x`` and ``y`` with
  :class:`LambdaPoly` coefficients.

The zero polynomial is always the empty coefficient sequence (or the empty
mapping for :class:`XYPoly`). Every constructor strips trailing zeros, so two
equal polynomials have equal internal representations.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

__all__ = [
    "Rational",
    "LambdaPoly",
    "XPoly",
    "XYPoly",
    "as_rational",
    "format_rational",
    "parse_rational",
    "poly_eval",
    "substitute_lambda",
]

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    """Canonical text form: ``p/q`` in lowest terms, or ``p`` when q == 1."""
    return str(as_rational(q))


def parse_rational(text: str) -> Fraction:
    text = text.strip().replace("−", "-")
    if not text or "." in text or "e" in text.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    return Fraction(text)


def _strip(coeffs: list) -> tuple:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


class LambdaPoly:
    """Polynomial in lambda; ``coeffs[i]`` multiplies ``lambda**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        object.__setattr__(self, "coeffs", _strip([as_rational(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("LambdaPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> LambdaPoly:
        # coeffs already Fractions and stripped
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def zero(cls) -> LambdaPoly:
        return _LZERO

    @classmethod
    def one(cls) -> LambdaPoly:
        return _LONE

    @classmethod
    def const(cls, c: Scalar) -> LambdaPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1) -> LambdaPoly:
        return cls([0] * k + [c])

    @classmethod
    def lam(cls) -> LambdaPoly:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree in lambda; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, LambdaPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([Fraction(other)])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("LambdaPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"LambdaPoly([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __neg__(self) -> LambdaPoly:
        return LambdaPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> LambdaPoly:
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly.const(other)
        elif not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return LambdaPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> LambdaPoly:
        if isinstance(other, (int, Fraction)):
            other = LambdaPoly.const(other)
        elif not isinstance(other, LambdaPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LambdaPoly:
        return (-self) + other

    def __mul__(self, other) -> LambdaPoly:
        if isinstance(other, (int, Fraction)):
            if not other:
                return _LZERO
            return LambdaPoly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, LambdaPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _LZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        # leading term is a product of nonzero rationals, so no stripping needed
        return LambdaPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> LambdaPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        inv = 1 / Fraction(other)
        return self * inv

    def __pow__(self, k: int) -> LambdaPoly:
        if k < 0:
            raise ValueError("negative power")
        out, base = _LONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, lam: Scalar) -> Fraction:
        lam = as_rational(lam)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * lam + c
        return acc

    def is_one(self) -> bool:
        return self.coeffs == (Fraction(1),)


_LZERO = LambdaPoly._raw(())
_LONE = LambdaPoly._raw((Fraction(1),))


def _as_lpoly(c) -> LambdaPoly:
    if isinstance(c, LambdaPoly):
        return c
    return LambdaPoly.const(c)


class XPoly:
    """Polynomial in x with :class:`LambdaPoly` coefficients (dense)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[LambdaPoly | Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip([_as_lpoly(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("XPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple) -> XPoly:
        p = object.__new__(cls)
        object.__setattr__(p, "coeffs", coeffs)
        return p

    @classmethod
    def zero(cls) -> XPoly:
        return _XZERO

    @classmethod
    def one(cls) -> XPoly:
        return _XONE

    @classmethod
    def const(cls, c: LambdaPoly | Scalar) -> XPoly:
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: LambdaPoly | Scalar = 1) -> XPoly:
        return cls([0] * k + [c])

    @classmethod
    def x(cls) -> XPoly:
        return cls.monomial(1)

    @property
    def degree(self) -> int:
        """Degree in x; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lambda_degree(self) -> int:
        return max((c.degree for c in self.coeffs), default=-1)

    @property
    def leading(self) -> LambdaPoly:
        return self.coeffs[-1] if self.coeffs else _LZERO

    def coeff(self, k: int) -> LambdaPoly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _LZERO

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, XPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self == XPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("XPoly", self.coeffs))

    def __repr__(self) -> str:
        return f"XPoly({list(self.coeffs)!r})"

    def __neg__(self) -> XPoly:
        return XPoly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other) -> XPoly:
        if isinstance(other, (int, Fraction, LambdaPoly)):
            other = XPoly.const(other)
        elif not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return XPoly._raw(_strip(out))

    __radd__ = __add__

    def __sub__(self, other) -> XPoly:
        if isinstance(other, (int, Fraction, LambdaPoly)):
            other = XPoly.const(other)
        elif not isinstance(other, XPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> XPoly:
        return (-self) + other

    def __mul__(self, other) -> XPoly:
        if isinstance(other, (int, Fraction, LambdaPoly)):
            if not other:
                return _XZERO
            return XPoly._raw(_strip([c * other for c in self.coeffs]))
        if not isinstance(other, XPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return _XZERO
        out = [_LZERO] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = out[i + j] + ai * bj
        return XPoly._raw(_strip(out))

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> XPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> XPoly:
        if k < 0:
            raise ValueError("negative power")
        out, base = _XONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shift(self, k: int) -> XPoly:
        """Multiply by ``x**k``."""
        if not self.coeffs:
            return self
        return XPoly._raw((_LZERO,) * k + self.coeffs)

    def diff(self) -> XPoly:
        """d/dx."""
        return XPoly._raw(tuple(c * k for k, c in enumerate(self.coeffs) if k))

    def antiderivative(self) -> XPoly:
        """Antiderivative vanishing at x = 0."""
        if not self.coeffs:
            return self
        return XPoly._raw((_LZERO,) + tuple(c / (k + 1) for k, c in enumerate(self.coeffs)))

    def at_x(self, x0: LambdaPoly | Scalar) -> LambdaPoly:
        """Substitute a value (or lambda-polynomial) for x."""
        x0 = _as_lpoly(x0)
        acc = _LZERO
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def at_lambda(self, lam0: Scalar) -> XPoly:
        lam0 = as_rational(lam0)
        return XPoly([c(lam0) for c in self.coeffs])

    def __call__(self, lam0: Scalar, x0: Scalar) -> Fraction:
        return poly_eval(self, lam0, x0)

    def compose_shift(self) -> XYPoly:
        """Expand p(x + y) as an :class:`XYPoly`."""
        terms: dict[tuple[int, int], LambdaPoly] = {}
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            for i in range(k + 1):
                key = (i, k - i)
                terms[key] = terms.get(key, _LZERO) + c * comb(k, i)
        return XYPoly(terms)


_XZERO = XPoly._raw(())
_XONE = XPoly._raw((_LONE,))


class XYPoly:
    """Sparse polynomial in x and y; ``terms[(i, j)]`` multiplies ``x**i * y**j``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], LambdaPoly | Scalar] | None = None):
        clean = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in {(i, j)}")
            c = _as_lpoly(c)
            if c:
                clean[(int(i), int(j))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("XYPoly is immutable")

    @classmethod
    def zero(cls) -> XYPoly:
        return cls()

    @classmethod
    def one(cls) -> XYPoly:
        return cls({(0, 0): _LONE})

    @classmethod
    def const(cls, c: LambdaPoly | Scalar) -> XYPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, i: int, j: int, c: LambdaPoly | Scalar = 1) -> XYPoly:
        return cls({(i, j): c})

    @classmethod
    def from_x(cls, p: XPoly) -> XYPoly:
        """Embed an :class:`XPoly` (no y dependence)."""
        return cls({(k, 0): c for k, c in enumerate(p.coeffs)})

    def coeff(self, i: int, j: int) -> LambdaPoly:
        return self.terms.get((i, j), _LZERO)

    @property
    def x_degree(self) -> int:
        return max((i for i, _ in self.terms), default=-1)

    @property
    def y_degree(self) -> int:
        return max((j for _, j in self.terms), default=-1)

    def sorted_terms(self) -> list[tuple[int, int, LambdaPoly]]:
        return [(i, j, self.terms[(i, j)]) for i, j in sorted(self.terms)]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, XYPoly):
            return self.terms == other.terms
        if isinstance(other, XPoly):
            return self == XYPoly.from_x(other)
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return self == XYPoly.const(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("XYPoly", frozenset(self.terms.items())))

    def __repr__(self) -> str:
        body = ", ".join(f"({i}, {j}): {c!r}" for i, j, c in self.sorted_terms())
        return f"XYPoly({{{body}}})"

    def _coerce(self, other) -> XYPoly | None:
        if isinstance(other, XYPoly):
            return other
        if isinstance(other, XPoly):
            return XYPoly.from_x(other)
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return XYPoly.const(other)
        return None

    def __neg__(self) -> XYPoly:
        return XYPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> XYPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, _LZERO) + c
        return XYPoly(out)

    __radd__ = __add__

    def __sub__(self, other) -> XYPoly:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> XYPoly:
        return (-self) + other

    def __mul__(self, other) -> XYPoly:
        if isinstance(other, (int, Fraction, LambdaPoly)):
            return XYPoly({k: c * other for k, c in self.terms.items()})
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict[tuple[int, int], LambdaPoly] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, _LZERO) + c1 * c2
        return XYPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> XYPoly:
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __pow__(self, k: int) -> XYPoly:
        if k < 0:
            raise ValueError("negative power")
        out = XYPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def diff_x(self) -> XYPoly:
        return XYPoly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> XYPoly:
        return XYPoly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})

    def at_y_zero(self) -> XPoly:
        coeffs = [_LZERO] * (self.x_degree + 1)
        for (i, j), c in self.terms.items():
            if j == 0:
                coeffs[i] = c
        return XPoly(coeffs)

    def at_lambda(self, lam0: Scalar) -> XYPoly:
        lam0 = as_rational(lam0)
        return XYPoly({k: c(lam0) for k, c in self.terms.items()})

    def contract(self) -> XPoly:
        """Substitute x -> 0 and then rename y -> x."""
        coeffs = [_LZERO] * (self.y_degree + 1)
        for (i, j), c in self.terms.items():
            if i == 0:
                coeffs[j] = c
        return XPoly(coeffs)

    def __call__(self, lam0: Scalar, x0: Scalar, y0: Scalar) -> Fraction:
        lam0, x0, y0 = as_rational(lam0), as_rational(x0), as_rational(y0)
        return sum((c(lam0) * x0**i * y0**j for (i, j), c in self.terms.items()), Fraction(0))


def poly_eval(p: XPoly, lambda0: Scalar, x0: Scalar) -> Fraction:
    """Exact value of ``p`` at ``(lambda0, x0)`` by Horner's rule in x."""
    lambda0, x0 = as_rational(lambda0), as_rational(x0)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x0 + c(lambda0)
    return acc


def substitute_lambda(p: XPoly, lambda0: Scalar) -> XPoly:
    """Partially evaluate at ``lambda = lambda0``.

    The result is returned as an :class:`XPoly` whose coefficients are all
    constant in lambda, so it composes with the rest of the ring API.
    """
    return p.at_lambda(lambda0)
