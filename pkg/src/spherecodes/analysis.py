"""Exact verification: code parameters, Venkov's 3-design test, design strength, optimality.

All checks on a :class:`GramMatrix` are exact equalities.  ``venkov_check``
also accepts a float Gram array for randomized experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .gram import GramMatrix
from .harmonics import gegenbauer2, gegenbauer_all, harm_dim
from .scalars import QuadScalar, as_quad

__all__ = [
    "CodeParams",
    "DesignReport",
    "OptimalityVerdict",
    "VenkovReport",
    "code_params",
    "design_strength",
    "moment_sums",
    "optimality_check",
    "venkov_check",
    "venkov_defect_float",
]

DEFAULT_T_MAX = 12


@dataclass(frozen=True)
class CodeParams:
    dim: int
    size: int
    a: QuadScalar | None
    antipodal: bool
    ip_set: frozenset[QuadScalar]

    @property
    def nonantipodal_ips(self) -> frozenset[QuadScalar]:
        return frozenset(t for t in self.ip_set if t != -1)

    @property
    def abs_ip_set(self) -> frozenset[QuadScalar]:
        return frozenset(abs(t) for t in self.nonantipodal_ips)

    def as_dict(self) -> dict:
        return {
            "dim": self.dim,
            "size": self.size,
            "a": None if self.a is None else str(self.a),
            "antipodal": self.antipodal,
            "ip_set": [str(t) for t in sorted(self.ip_set)],
        }


@dataclass(frozen=True)
class VenkovReport:
    defect: QuadScalar
    antipodal: bool

    @property
    def is_3design(self) -> bool:
        return self.antipodal and self.defect == 0

    def as_dict(self) -> dict:
        return {"venkov_defect": str(self.defect), "antipodal": self.antipodal, "design3": self.is_3design}


@dataclass(frozen=True)
class DesignReport:
    strength: int
    moment_sums: dict[int, QuadScalar]
    venkov_defect: QuadScalar
    t_max: int = DEFAULT_T_MAX

    def as_dict(self) -> dict:
        return {
            "strength": self.strength,
            "t_max": self.t_max,
            "moment_sums": {str(k): str(v) for k, v in sorted(self.moment_sums.items())},
            "venkov_defect": str(self.venkov_defect),
        }


@dataclass(frozen=True)
class OptimalityVerdict:
    d: int
    half_size: int
    signed_levels: frozenset[QuadScalar]
    ell: QuadScalar | None
    level_constant: bool
    equation_holds: bool

    @property
    def levels(self) -> frozenset[QuadScalar]:
        return frozenset(abs(v) for v in self.signed_levels)

    @property
    def optimal(self) -> bool:
        return self.level_constant and self.equation_holds

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "half_size": self.half_size,
            "levels": [str(v) for v in sorted(self.levels)],
            "signed_levels": [str(v) for v in sorted(self.signed_levels)],
            "ell": None if self.ell is None else str(self.ell),
            "level_constant": self.level_constant,
            "equation_holds": self.equation_holds,
            "optimal": self.optimal,
        }


def _antipodal_from_gram(G: GramMatrix) -> bool:
    minus_one = G.a == -G.den
    if G.b is not None:
        minus_one &= G.b == 0
    return bool(np.all(minus_one.sum(axis=1) == 1))


def code_params(G: GramMatrix) -> CodeParams:
    """Parameters ``(d+1, N, a)`` of the code whose Gram matrix is ``G``."""
    if not G.has_unit_diagonal():
        raise ValueError("Gram matrix must have unit diagonal")
    counts = G.value_counts(offdiag=True)
    if counts.get(QuadScalar(1), 0):
        raise ValueError("off-diagonal entry equal to 1: repeated point")
    ips = frozenset(counts)
    rest = [abs(t) for t in ips if t != -1]
    return CodeParams(
        dim=G.d + 1,
        size=G.n,
        a=max(rest) if rest else None,
        antipodal=_antipodal_from_gram(G),
        ip_set=ips,
    )


def venkov_check(G, d: int | None = None):
    """``sum_{i,j} (x_i, x_j)^2 - N^2/(d+1)``; exact for a GramMatrix, float for an array."""
    if isinstance(G, GramMatrix):
        d = G.d if d is None else d
        defect = G.sum_of_squares() - Fraction(G.n * G.n, d + 1)
        return VenkovReport(defect=defect, antipodal=_antipodal_from_gram(G))
    if d is None:
        raise ValueError("sphere dimension required for a float Gram matrix")
    return venkov_defect_float(np.asarray(G, dtype=np.float64), d)


def venkov_defect_float(G: np.ndarray, d: int) -> float:
    n = G.shape[0]
    return float(np.sum(G * G) - n * n / (d + 1))


def moment_sums(G: GramMatrix, d: int | None = None, t_max: int = DEFAULT_T_MAX) -> dict[int, QuadScalar]:
    """``sum_{i,j} g_{k,d}(G[i,j])`` for ``k = 1..t_max``, via the value distribution."""
    d = G.d if d is None else d
    sums = [QuadScalar(0)] * (t_max + 1)
    for value, count in G.value_counts().items():
        vals = gegenbauer_all(t_max, d, value)
        for k in range(1, t_max + 1):
            sums[k] = sums[k] + count * vals[k]
    return {k: sums[k] for k in range(1, t_max + 1)}


def design_strength(G: GramMatrix, d: int | None = None, t_max: int = DEFAULT_T_MAX) -> DesignReport:
    """Largest ``t <= t_max`` for which every moment sum of degree ``1..t`` vanishes."""
    if t_max < 1 or t_max > DEFAULT_T_MAX:
        raise ValueError(f"t_max must lie in 1..{DEFAULT_T_MAX}")
    d = G.d if d is None else d
    sums = moment_sums(G, d, t_max)
    strength = 0
    for k in range(1, t_max + 1):
        if sums[k]:
            break
        strength = k
    return DesignReport(
        strength=strength,
        moment_sums=sums,
        venkov_defect=venkov_check(G, d).defect,
        t_max=t_max,
    )


def optimality_check(d: int, half_size: int, ip_set) -> OptimalityVerdict:
    """Test the level hypothesis and the size equation for ``G_X u -G_X``.

    ``ip_set`` holds the inner products of the half code over distinct,
    non-antipodal pairs.  The level hypothesis is read as ``|g_{2,d}(a)|``
    constant, which is all the size equation uses.
    """
    ips = [as_quad(t) for t in ip_set]
    if not ips:
        raise ValueError("empty inner-product set")
    signed = frozenset(gegenbauer2(d, t) for t in ips)
    levels = {abs(v) for v in signed}
    constant = len(levels) == 1
    ell = levels.pop() if constant else None
    holds = False
    if constant:
        D = harm_dim(2, d)
        M = 2 * half_size
        lhs = Fraction(M * M, D) - 2 * M
        rhs = ell * ell * (M * M - 2 * M)
        holds = rhs == lhs
    return OptimalityVerdict(
        d=d,
        half_size=half_size,
        signed_levels=signed,
        ell=ell,
        level_constant=constant,
        equation_holds=holds,
    )
