"""Spherical harmonic dimensions and normalized Gegenbauer polynomials.

Points live on ``S^d`` inside ``R^(d+1)``.  ``gegenbauer(k, d, t)`` is the
zonal polynomial of ``Harm_k(S^d)`` scaled so that its value at ``t = 1`` is 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .scalars import QuadScalar, as_quad

__all__ = [
    "HarmonicSpace",
    "gegenbauer",
    "gegenbauer2",
    "gegenbauer_all",
    "harm_dim",
]


def harm_dim(k: int, d: int) -> int:
    """Dimension of ``Harm_k(S^d)``.

    >>> harm_dim(2, 7)
    35
    """
    if k < 1:
        raise ValueError(f"harmonic degree must be >= 1, got {k}")
    if d < 2:
        raise ValueError(f"sphere dimension must be >= 2, got {d}")
    num = (2 * k + d - 1) * comb(d + k - 1, k)
    q, rem = divmod(num, k + d - 1)
    assert rem == 0, (k, d)
    return q


@dataclass(frozen=True)
class HarmonicSpace:
    d: int
    k: int

    @property
    def dim(self) -> int:
        return harm_dim(self.k, self.d)


def gegenbauer2(d: int, t) -> QuadScalar:
    """Closed form ``((d+1) t^2 - 1) / d`` of the degree-2 polynomial."""
    if d < 2:
        raise ValueError(f"sphere dimension must be >= 2, got {d}")
    t = as_quad(t)
    return ((d + 1) * t * t - 1) / d


def gegenbauer(k: int, d: int, t) -> QuadScalar:
    """Evaluate ``g_{k,d}(t)`` exactly by running the recurrence on the value."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    if d < 2:
        raise ValueError(f"sphere dimension must be >= 2, got {d}")
    t = as_quad(t)
    prev, cur = QuadScalar(1), t
    if k == 0:
        return prev
    for j in range(1, k):
        prev, cur = cur, ((2 * j + d - 1) * t * cur - j * prev) / (j + d - 1)
    return cur


def gegenbauer_all(kmax: int, d: int, t) -> list[QuadScalar]:
    """Values ``g_{0,d}(t), ..., g_{kmax,d}(t)`` from one recurrence pass."""
    t = as_quad(t)
    out = [QuadScalar(1)]
    if kmax >= 1:
        out.append(t)
    for j in range(1, kmax):
        out.append(((2 * j + d - 1) * t * out[j] - j * out[j - 1]) / (j + d - 1))
    return out
