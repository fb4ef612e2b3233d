"""Exact Gram matrices over Q(sqrt r), stored as integer numerator arrays.

Entry ``(i, j)`` equals ``(a[i, j] + b[i, j] * sqrt(r)) / den``.  Numerators
stay in ``int64`` while a bound check says products cannot overflow and move
to Python-int object arrays otherwise.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from functools import reduce

import numpy as np

from .scalars import QuadScalar

__all__ = ["GramMatrix", "INT64_SAFE", "exact_array", "array_bound"]

INT64_SAFE = 2**62


def array_bound(x: np.ndarray | None) -> int:
    if x is None or x.size == 0:
        return 0
    if x.dtype == object:
        return max(abs(int(v)) for v in x.flat)
    return int(np.abs(x).max())


def exact_array(x, bound: int | None = None) -> np.ndarray:
    """Return ``x`` as an integer array wide enough for values up to ``bound``."""
    x = np.asarray(x)
    if x.dtype == object:
        return x
    if bound is not None and bound >= INT64_SAFE:
        return x.astype(object)
    return x.astype(np.int64, copy=False)


def _gcd_of(x: np.ndarray | None) -> int:
    if x is None or x.size == 0:
        return 0
    if x.dtype == object:
        return reduce(math.gcd, (int(v) for v in set(x.flat)), 0)
    return int(np.gcd.reduce(np.unique(x)))


class GramMatrix:
    """Symmetric exact matrix of normalized inner products of points on ``S^d``."""

    __slots__ = ("a", "b", "den", "r", "d")

    def __init__(self, a, b, den: int, r: int, d: int, *, reduce_: bool = True):
        a = exact_array(a)
        if b is not None:
            b = exact_array(b)
            if r == 0 or not b.any():
                b = None
        if b is None:
            r = 0
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"Gram matrix must be square, got shape {a.shape}")
        if den < 0:
            a, den = -a, -den
            b = None if b is None else -b
        if reduce_:
            g = math.gcd(den, _gcd_of(a), _gcd_of(b))
            if g > 1:
                a = a // g
                b = None if b is None else b // g
                den //= g
        self.a = a
        self.b = b
        self.den = int(den)
        self.r = int(r)
        self.d = int(d)

    # -- construction -----------------------------------------------------
    @classmethod
    def from_entries(cls, rows, d: int) -> GramMatrix:
        """Build from a nested sequence of scalars (anything ``QuadScalar`` accepts)."""
        entries = [[e if isinstance(e, QuadScalar) else QuadScalar(e) for e in row] for row in rows]
        radicands = {e.r for row in entries for e in row} - {0}
        if len(radicands) > 1:
            raise ValueError(f"mixed radicands {sorted(radicands)}")
        r = radicands.pop() if radicands else 0
        den = 1
        for row in entries:
            for e in row:
                den = math.lcm(den, e.a.denominator, e.b.denominator)
        n = len(entries)
        a = np.empty((n, n), dtype=object)
        b = np.empty((n, n), dtype=object)
        for i, row in enumerate(entries):
            if len(row) != n:
                raise ValueError("Gram matrix rows must have equal length")
            for j, e in enumerate(row):
                a[i, j] = int(e.a * den)
                b[i, j] = int(e.b * den)
        bound = max(array_bound(a), array_bound(b))
        return cls(exact_array(a.astype(np.int64) if bound < INT64_SAFE else a),
                   exact_array(b.astype(np.int64) if bound < INT64_SAFE else b),
                   den, r, d)

    # -- basic access -----------------------------------------------------
    @property
    def n(self) -> int:
        return self.a.shape[0]

    def __len__(self) -> int:
        return self.n

    def entry(self, i: int, j: int) -> QuadScalar:
        a = Fraction(int(self.a[i, j]), self.den)
        if self.b is None:
            return QuadScalar(a)
        return QuadScalar(a, Fraction(int(self.b[i, j]), self.den), self.r)

    def __getitem__(self, ij: tuple[int, int]) -> QuadScalar:
        return self.entry(*ij)

    def rows(self) -> list[list[QuadScalar]]:
        return [[self.entry(i, j) for j in range(self.n)] for i in range(self.n)]

    def to_float(self) -> np.ndarray:
        out = self.a.astype(np.float64)
        if self.b is not None:
            out = out + self.b.astype(np.float64) * math.sqrt(self.r)
        return out / self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GramMatrix):
            return NotImplemented
        if (self.n, self.den, self.r, self.d) != (other.n, other.den, other.r, other.d):
            return False
        if not np.array_equal(self.a, other.a):
            return False
        if self.b is None or other.b is None:
            return self.b is None and other.b is None
        return bool(np.array_equal(self.b, other.b))

    __hash__ = None

    def __repr__(self) -> str:
        field = f"Q(sqrt {self.r})" if self.r else "Q"
        return f"GramMatrix(n={self.n}, d={self.d}, field={field}, den={self.den})"

    # -- structural checks -------------------------------------------------
    def is_symmetric(self) -> bool:
        ok = np.array_equal(self.a, self.a.T)
        return ok and (self.b is None or np.array_equal(self.b, self.b.T))

    def has_unit_diagonal(self) -> bool:
        diag_ok = all(int(v) == self.den for v in np.diagonal(self.a))
        return diag_ok and (self.b is None or not np.diagonal(self.b).any())

    # -- value statistics ---------------------------------------------------
    def value_counts(self, *, offdiag: bool = False) -> dict[QuadScalar, int]:
        """Multiplicity of each distinct entry (optionally excluding the diagonal)."""
        counts = self._numerator_counts()
        if offdiag:
            diag_b = np.diagonal(self.b) if self.b is not None else np.zeros(self.n, dtype=np.int64)
            counts.subtract(Counter((int(x), int(y)) for x, y in zip(np.diagonal(self.a), diag_b)))
            counts = +counts
        out = {}
        for (x, y), c in counts.items():
            q = QuadScalar(Fraction(x, self.den), Fraction(y, self.den), self.r)
            out[q] = c
        return out

    def _numerator_counts(self) -> Counter:
        if self.a.dtype != object and (self.b is None or self.b.dtype != object):
            if self.b is None:
                vals, cnt = np.unique(self.a, return_counts=True)
                return Counter({(int(v), 0): int(c) for v, c in zip(vals, cnt)})
            stacked = np.stack([self.a.ravel(), self.b.ravel()], axis=1)
            vals, cnt = np.unique(stacked, axis=0, return_counts=True)
            return Counter({(int(x), int(y)): int(c) for (x, y), c in zip(vals, cnt)})
        bflat = self.b.ravel() if self.b is not None else [0] * self.a.size
        return Counter((int(x), int(y)) for x, y in zip(self.a.ravel(), bflat))

    def sum_of_squares(self) -> QuadScalar:
        """``sum_{i,j} G[i,j]**2`` accumulated straight from the numerator arrays."""
        a, b = self.a, self.b
        bound = array_bound(a) ** 2 * max(self.n, 1) ** 2
        if b is not None:
            bound = max(bound, (array_bound(a) * array_bound(b) + array_bound(b) ** 2 * self.r) * 2 * self.n**2)
        a = exact_array(a, bound)
        rat = int((a * a).sum())
        irr = 0
        if b is not None:
            b = exact_array(b, bound)
            rat += self.r * int((b * b).sum())
            irr = 2 * int((a * b).sum())
        d2 = self.den * self.den
        return QuadScalar(Fraction(rat, d2), Fraction(irr, d2), self.r)

    # -- block assembly -----------------------------------------------------
    def antipodal_double(self) -> GramMatrix:
        """Gram of ``Y u -Y`` given the Gram of ``Y``: blocks ``[[H, -H], [-H, H]]``."""
        a = np.block([[self.a, -self.a], [-self.a, self.a]])
        b = None if self.b is None else np.block([[self.b, -self.b], [-self.b, self.b]])
        return GramMatrix(a, b, self.den, self.r, self.d, reduce_=False)
