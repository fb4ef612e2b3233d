"""Construct -> embed -> analyze in one call."""

from __future__ import annotations

from dataclasses import dataclass

from .analysis import CodeParams, OptimalityVerdict, VenkovReport, code_params, optimality_check, venkov_check
from .configurations import PointConfiguration
from .embedding import EmbeddedCode, embed_code
from .scalars import QuadScalar

__all__ = ["CodeSummary", "summarize"]


@dataclass(frozen=True)
class CodeSummary:
    code: EmbeddedCode
    params: CodeParams
    venkov: VenkovReport
    verdict: OptimalityVerdict

    @property
    def D(self) -> int:
        return self.code.D

    @property
    def size(self) -> int:
        return self.code.size

    @property
    def a(self) -> QuadScalar | None:
        return self.params.a

    @property
    def levels(self) -> frozenset[QuadScalar]:
        return self.params.abs_ip_set

    @property
    def design3(self) -> bool:
        return self.venkov.is_3design

    @property
    def optimal(self) -> bool:
        return self.verdict.optimal

    def label(self) -> str:
        return f"({self.D},{self.size},{self.a})"

    def as_dict(self) -> dict:
        return {
            "code": self.label(),
            "D": self.D,
            "size": self.size,
            "a": str(self.a),
            "levels": [str(v) for v in sorted(self.levels)],
            "design3": self.design3,
            "optimal": self.optimal,
            "venkov": self.venkov.as_dict(),
            "optimality": self.verdict.as_dict(),
        }


def summarize(X: PointConfiguration) -> CodeSummary:
    code = embed_code(X)
    half_params = code_params(code.source_half)
    return CodeSummary(
        code=code,
        params=code_params(code.gram),
        venkov=venkov_check(code.gram),
        verdict=optimality_check(X.d, code.n_half, half_params.nonantipodal_ips),
    )
