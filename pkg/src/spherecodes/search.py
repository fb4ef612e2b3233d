"""Parameter enumeration for codes ``G_X u -G_X`` meeting the size equation.

For a half code on ``S^d`` whose non-antipodal inner products include
``1/sqrt(m)``, the embedded level is ``l = g_{2,d}(1/sqrt m) = (d+1-m)/(d m)``
and the size equation

    M^2 / D - 2 M = l^2 (M^2 - 2 M),      D = d(d+3)/2,  M = 2N

has the unique positive root ``M = 2 D (1 - l^2) / (1 - D l^2)``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .harmonics import gegenbauer2, harm_dim
from .scalars import QuadScalar, as_quad, sqrt_rational

__all__ = [
    "FISHER_RULE",
    "SearchRow",
    "admissible_inner_products",
    "enumerate_parameters",
    "level_from_m",
    "rows_to_csv",
    "rows_to_json",
    "scan",
    "size_equation_holds",
    "solve_code_size",
]

FISHER_RULE = "antipodal 3-design in S^(D-1): size >= 2D"


def level_from_m(d: int, m: int) -> Fraction:
    """``g_{2,d}(1/sqrt m)`` in closed form."""
    if d < 2:
        raise ValueError(f"sphere dimension must be >= 2, got {d}")
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return Fraction(d + 1 - m, d * m)


def _rational(ell) -> Fraction:
    ell = as_quad(ell)
    if not ell.is_rational:
        raise ValueError(f"level must be rational, got {ell}")
    return ell.a


def size_equation_holds(d: int, code_size: int, ell) -> bool:
    """Exact test of the size equation with ``M = code_size``."""
    ell = _rational(ell)
    D = harm_dim(2, d)
    M = code_size
    return Fraction(M * M, D) - 2 * M == ell * ell * (M * M - 2 * M)


def solve_code_size(d: int, ell) -> int | None:
    """Even positive integer ``M`` solving the size equation, or ``None``."""
    ell = _rational(ell)
    if ell == 0:
        raise ValueError("level must be non-zero")
    D = harm_dim(2, d)
    e2 = ell * ell
    denom = 1 - D * e2
    if denom <= 0:
        return None
    M = 2 * D * (1 - e2) / denom
    if M.denominator != 1 or M.numerator <= 0 or M.numerator % 2:
        return None
    M = M.numerator
    assert size_equation_holds(d, M, ell)
    return M


def admissible_inner_products(d: int, ell) -> frozenset[QuadScalar]:
    """All ``x >= 0`` with ``g_{2,d}(x) = +-l``."""
    ell = abs(_rational(ell))
    if ell == 0:
        raise ValueError("level must be non-zero")
    out = set()
    for s in (1, -1):
        rad = (1 + s * d * ell) / (d + 1)
        if rad >= 0:
            out.add(sqrt_rational(rad))
    return frozenset(out)


@dataclass(frozen=True)
class SearchRow:
    d: int
    m: int
    ell: Fraction
    code_size: int | None
    inner_products: frozenset[QuadScalar]
    nonzero_level: bool
    below_pole: bool
    integral: bool
    fisher_ok: bool

    @property
    def D(self) -> int:
        return harm_dim(2, self.d)

    @property
    def passes(self) -> bool:
        return self.nonzero_level and self.below_pole and self.integral and self.fisher_ok

    def as_dict(self) -> dict:
        return {
            "d+1": self.d + 1,
            "D": self.D,
            "m": self.m,
            "ell": _fmt(self.ell),
            "2N": self.code_size,
            "inner_products": [str(x) for x in sorted(self.inner_products, key=float)],
            "nonzero_level": self.nonzero_level,
            "below_pole": self.below_pole,
            "integral": self.integral,
            "fisher_ok": self.fisher_ok,
        }


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def evaluate(d: int, m: int) -> SearchRow:
    """Every filter verdict for one grid point ``(d, m)``."""
    ell = level_from_m(d, m)
    D = harm_dim(2, d)
    nonzero = ell != 0
    below = nonzero and D * ell * ell < 1
    size = solve_code_size(d, ell) if below else None
    return SearchRow(
        d=d,
        m=m,
        ell=ell,
        code_size=size,
        inner_products=admissible_inner_products(d, ell) if nonzero else frozenset(),
        nonzero_level=nonzero,
        below_pole=below,
        integral=size is not None,
        fisher_ok=size is not None and size >= 2 * D,
    )


def scan(d_plus_1_max: int = 100, m_max: int = 200, d_plus_1_min: int = 3) -> list[SearchRow]:
    """All grid points with their verdicts, sorted by ``(d, m)``."""
    if d_plus_1_min < 3 or d_plus_1_max < d_plus_1_min:
        raise ValueError(f"need 3 <= d+1 range, got [{d_plus_1_min}, {d_plus_1_max}]")
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    return [evaluate(d, m) for d in range(d_plus_1_min - 1, d_plus_1_max) for m in range(1, m_max + 1)]


def enumerate_parameters(d_plus_1_max: int = 100, m_max: int = 200, d_plus_1_min: int = 3) -> list[SearchRow]:
    """Grid points passing every filter."""
    return [row for row in scan(d_plus_1_max, m_max, d_plus_1_min) if row.passes]


CSV_COLUMNS = ["d+1", "D", "m", "ell", "2N", "inner_products", "fisher_ok"]


def rows_to_csv(rows: list[SearchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        rec = row.as_dict()
        rec["inner_products"] = ";".join(rec["inner_products"])
        writer.writerow([rec[c] for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: list[SearchRow], **params) -> str:
    doc = {
        "schema": "spherecodes-search/1",
        "fisher_rule": FISHER_RULE,
        "parameters": params,
        "rows": [row.as_dict() for row in rows],
    }
    return json.dumps(doc, indent=2)


def check_level(d: int, m: int) -> bool:
    """Cross-check of the closed form against the degree-2 polynomial at ``1/sqrt m``."""
    return gegenbauer2(d, sqrt_rational(Fraction(1, m))) == level_from_m(d, m)
