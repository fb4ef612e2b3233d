"""Exact arithmetic in Q and in real quadratic fields Q(sqrt r).

A :class:`QuadScalar` is the number ``a + b*sqrt(r)`` with rational ``a``,
``b`` and a square-free radicand ``r``.  Plain rationals carry ``b == 0`` and
``r == 0``, so they combine with any radicand.  Mixing two different
irrational radicands raises :class:`RadicandMismatch` instead of widening to
a biquadratic field.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import total_ordering
from numbers import Rational
from typing import Union

__all__ = [
    "QuadScalar",
    "RadicandMismatch",
    "as_quad",
    "sqrt_rational",
    "squarefree_part",
]

Scalarish = Union["QuadScalar", int, Fraction]


class RadicandMismatch(ValueError):
    """Raised when two scalars live in different quadratic fields."""


def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n >= 0`` as ``k**2 * f`` with ``f`` square-free; return ``(k, f)``."""
    if n < 0:
        raise ValueError(f"expected a non-negative integer, got {n}")
    if n == 0:
        return 0, 0
    k, f = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            f *= p
        p += 1 if p == 2 else 2
    return k, f * n


@total_ordering
class QuadScalar:
    __slots__ = ("_a", "_b", "_r", "_hash")

    def __init__(self, a: int | Fraction | str = 0, b: int | Fraction = 0, r: int = 0):
        a = Fraction(a)
        b = Fraction(b)
        r = int(r)
        if r < 0:
            raise ValueError("radicand must be non-negative")
        if b and r not in (0, 1):
            k, f = squarefree_part(r)
            b *= k
            r = f
        if r == 1:
            a += b
            b = Fraction(0)
        if b == 0 or r == 0:
            b = Fraction(0)
            r = 0
        self._a = a
        self._b = b
        self._r = r
        self._hash = None

    # -- accessors --------------------------------------------------------
    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def r(self) -> int:
        return self._r

    @property
    def is_rational(self) -> bool:
        return self._r == 0

    def conjugate(self) -> QuadScalar:
        return QuadScalar(self._a, -self._b, self._r)

    def norm(self) -> Fraction:
        """Field norm ``a**2 - b**2 r``."""
        return self._a * self._a - self._b * self._b * self._r

    # -- arithmetic -------------------------------------------------------
    def _common_r(self, other: QuadScalar) -> int:
        if self._r == other._r or other._r == 0:
            return self._r
        if self._r == 0:
            return other._r
        raise RadicandMismatch(f"cannot combine sqrt({self._r}) with sqrt({other._r})")

    def __add__(self, other: Scalarish) -> QuadScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        return QuadScalar(self._a + other._a, self._b + other._b, r)

    __radd__ = __add__

    def __neg__(self) -> QuadScalar:
        return QuadScalar(-self._a, -self._b, self._r)

    def __pos__(self) -> QuadScalar:
        return self

    def __sub__(self, other: Scalarish) -> QuadScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        return QuadScalar(self._a - other._a, self._b - other._b, r)

    def __rsub__(self, other: Scalarish) -> QuadScalar:
        return -self + other

    def __mul__(self, other: Scalarish) -> QuadScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        r = self._common_r(other)
        a = self._a * other._a + self._b * other._b * r
        b = self._a * other._b + self._b * other._a
        return QuadScalar(a, b, r)

    __rmul__ = __mul__

    def inverse(self) -> QuadScalar:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero QuadScalar")
        return QuadScalar(self._a / n, -self._b / n, self._r)

    def __truediv__(self, other: Scalarish) -> QuadScalar:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        self._common_r(other)
        return self * other.inverse()

    def __rtruediv__(self, other: Scalarish) -> QuadScalar:
        return _coerce(other) * self.inverse()

    def __pow__(self, k: int) -> QuadScalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadScalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __abs__(self) -> QuadScalar:
        return -self if self.sign() < 0 else self

    # -- comparison -------------------------------------------------------
    def sign(self) -> int:
        """Exact sign of ``a + b sqrt(r)``."""
        sa = (self._a > 0) - (self._a < 0)
        sb = (self._b > 0) - (self._b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 against b^2 r
        a2 = self._a * self._a
        b2r = self._b * self._b * self._r
        if a2 > b2r:
            return sa
        if a2 < b2r:
            return sb
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadScalar):
            return self._a == other._a and self._b == other._b and self._r == other._r
        if isinstance(other, (int, Rational)):
            return self._r == 0 and self._a == other
        return NotImplemented

    def __lt__(self, other: Scalarish) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._a, self._b, self._r)) if self._r else hash(self._a)
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._a) or bool(self._b)

    # -- conversion -------------------------------------------------------
    def __float__(self) -> float:
        if self._r == 0:
            return float(self._a)
        return float(self._a) + float(self._b) * math.sqrt(self._r)

    def __repr__(self) -> str:
        return f"QuadScalar({self})"

    def __str__(self) -> str:
        a = _frac_str(self._a)
        if self._r == 0:
            return a
        b = _frac_str(self._b)
        if self._a == 0:
            return f"{b}*sqrt({self._r})"
        sep = "" if b.startswith("-") else "+"
        return f"{a}{sep}{b}*sqrt({self._r})"

    def __reduce__(self):
        return (QuadScalar, (self._a, self._b, self._r))

    @classmethod
    def parse(cls, text: str) -> QuadScalar:
        """Inverse of :meth:`__str__`.

        Accepts ``p/q``, ``p/q+s/t*sqrt(r)`` and ``s/t*sqrt(r)``.
        """
        text = text.strip()
        m = _GRAMMAR.fullmatch(text)
        if m is not None:
            a = Fraction(m["a"])
            if m["b"] is None:
                return cls(a)
            return cls(a, Fraction(m["b"]), int(m["r"]))
        m = _PURE.fullmatch(text)
        if m is not None:
            return cls(0, Fraction(m["b"]), int(m["r"]))
        raise ValueError(f"malformed scalar: {text!r}")


_NUM = r"[+-]?\d+(?:/\d+)?"
_GRAMMAR = re.compile(rf"(?P<a>{_NUM})(?:(?P<b>[+-]\d+(?:/\d+)?)\*sqrt\((?P<r>\d+)\))?")
_PURE = re.compile(rf"(?P<b>{_NUM})\*sqrt\((?P<r>\d+)\)")


def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _coerce(x):
    if isinstance(x, QuadScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadScalar(x)
    if isinstance(x, Rational):
        return QuadScalar(Fraction(x.numerator, x.denominator))
    return NotImplemented


def as_quad(x: Scalarish | str) -> QuadScalar:
    if isinstance(x, str):
        return QuadScalar.parse(x)
    q = _coerce(x)
    if q is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to QuadScalar")
    return q


def sqrt_rational(q: int | Fraction) -> QuadScalar:
    """Exact non-negative square root of a non-negative rational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("square root of a negative rational")
    # sqrt(p/s) = sqrt(p*s)/s
    k, f = squarefree_part(q.numerator * q.denominator)
    return QuadScalar(0, Fraction(k, q.denominator), f) if f > 1 else QuadScalar(Fraction(k, q.denominator))
