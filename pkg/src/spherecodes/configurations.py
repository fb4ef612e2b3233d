"""Exact constructions of the known sharp spherical configurations.

Every configuration stores its points as integer numerator arrays over a
common denominator, ``x = (A + B*sqrt(r)) / den``, so inner products are
integer matrix products and all downstream checks are exact.  Points are kept
in lexicographic order of their exact coordinates.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from pathlib import Path

import numpy as np

from . import linalg
from .gram import INT64_SAFE, GramMatrix, array_bound, exact_array
from .scalars import QuadScalar, as_quad

__all__ = [
    "ConfigurationError",
    "FormatError",
    "GolayCode",
    "PointConfiguration",
    "cell600",
    "construct",
    "cross_section",
    "e8_roots",
    "equiangular_552",
    "golay_code",
    "icosahedron",
    "kissing_4600",
    "kissing_56",
    "kissing_891",
    "leech_min_vectors",
    "load",
    "mclaughlin_275",
    "normalized_gram",
    "save",
    "schlafli_27",
]

FORMAT_VERSION = 1
CONFIG_MAGIC = "spherecodes-config"


class ConfigurationError(ValueError):
    """A point set violates the configuration invariants."""


class FormatError(ValueError):
    """A configuration or Gram file could not be parsed."""


class PointConfiguration:
    """``N`` points of equal squared norm spanning ``R^(d+1)``.

    Coordinates may live in a longer coordinate space (cross-sections keep
    the parent's coordinates); ``d`` is fixed by the exact rank of the points.
    """

    def __init__(
        self,
        num_a,
        num_b=None,
        den: int = 1,
        r: int = 0,
        *,
        name: str = "",
        provenance: str = "",
        d: int | None = None,
    ):
        A = np.array(num_a, dtype=np.int64, ndmin=2)
        B = None if num_b is None or r == 0 else np.array(num_b, dtype=np.int64, ndmin=2)
        if B is not None and not B.any():
            B = None
        if B is None:
            r = 0
        if B is not None and B.shape != A.shape:
            raise ConfigurationError("numerator arrays differ in shape")
        if den <= 0:
            raise ConfigurationError("denominator must be positive")
        if A.shape[0] == 0:
            raise ConfigurationError("empty configuration")
        g = math.gcd(int(den), int(np.gcd.reduce(A.ravel())), 0 if B is None else int(np.gcd.reduce(B.ravel())))
        if g > 1:
            A, den = A // g, den // g
            B = None if B is None else B // g
        self.A = A
        self.B = B
        self.den = int(den)
        self.r = int(r)
        self.name = name
        self.provenance = provenance
        self._canonicalize()
        self._check_norms()
        rank = self._exact_rank()
        if d is not None and d != rank - 1:
            raise ConfigurationError(f"declared d={d} but points span dimension {rank}")
        self.d = rank - 1

    # -- invariants ---------------------------------------------------------
    def _canonicalize(self) -> None:
        if self.B is None:
            order = np.lexsort(self.A.T[::-1])
        else:
            keys = [tuple(QuadScalar(int(a), int(b), self.r) for a, b in zip(ra, rb))
                    for ra, rb in zip(self.A, self.B)]
            order = sorted(range(len(keys)), key=lambda i: keys[i])
        order = np.asarray(order)
        self.A = self.A[order]
        if self.B is not None:
            self.B = self.B[order]
        stacked = self.A if self.B is None else np.hstack([self.A, self.B])
        if len(stacked) > 1 and np.any(np.all(stacked[1:] == stacked[:-1], axis=1)):
            raise ConfigurationError("repeated point")

    def _row_norms(self) -> tuple[np.ndarray, np.ndarray | None]:
        P = (self.A * self.A).sum(axis=1)
        if self.B is None:
            return P, None
        P = P + self.r * (self.B * self.B).sum(axis=1)
        Q = 2 * (self.A * self.B).sum(axis=1)
        return P, Q

    def _check_norms(self) -> None:
        P, Q = self._row_norms()
        if np.any(P != P[0]) or (Q is not None and np.any(Q != Q[0])):
            raise ConfigurationError("points do not share one squared norm")
        if P[0] == 0 and (Q is None or Q[0] == 0):
            raise ConfigurationError("zero vector in configuration")

    def _exact_rank(self) -> int:
        A, B, r = self.A, self.B, self.r
        P = A.T @ A
        rows = []
        if B is None:
            rows = [[QuadScalar(int(x)) for x in row] for row in P]
        else:
            P = P + r * (B.T @ B)
            Q = A.T @ B + B.T @ A
            rows = [[QuadScalar(int(x), int(y), r) for x, y in zip(pr, qr)] for pr, qr in zip(P, Q)]
        return linalg.rank(rows)

    # -- basic properties ---------------------------------------------------
    @property
    def n_points(self) -> int:
        return self.A.shape[0]

    def __len__(self) -> int:
        return self.n_points

    @property
    def dim(self) -> int:
        """Ambient dimension ``d + 1``."""
        return self.d + 1

    @property
    def coord_len(self) -> int:
        return self.A.shape[1]

    @cached_property
    def norm_sq(self) -> QuadScalar:
        P, Q = self._row_norms()
        d2 = self.den * self.den
        return QuadScalar(Fraction(int(P[0]), d2), Fraction(0 if Q is None else int(Q[0]), d2), self.r)

    def coordinate(self, i: int, j: int) -> QuadScalar:
        b = 0 if self.B is None else int(self.B[i, j])
        return QuadScalar(Fraction(int(self.A[i, j]), self.den), Fraction(b, self.den), self.r)

    @property
    def points(self) -> list[list[QuadScalar]]:
        return [[self.coordinate(i, j) for j in range(self.coord_len)] for i in range(self.n_points)]

    def to_float(self) -> np.ndarray:
        X = self.A.astype(np.float64)
        if self.B is not None:
            X = X + math.sqrt(self.r) * self.B
        return X / self.den

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointConfiguration):
            return NotImplemented
        same_b = (self.B is None and other.B is None) or (
            self.B is not None and other.B is not None and np.array_equal(self.B, other.B)
        )
        return (
            self.den == other.den
            and self.r == other.r
            and self.d == other.d
            and self.A.shape == other.A.shape
            and np.array_equal(self.A, other.A)
            and same_b
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"PointConfiguration(name={self.name!r}, N={self.n_points}, d={self.d})"

    # -- antipodality -------------------------------------------------------
    def _row_keys(self, sign: int = 1) -> list[bytes]:
        stacked = self.A if self.B is None else np.hstack([self.A, self.B])
        stacked = np.ascontiguousarray(sign * stacked)
        return [row.tobytes() for row in stacked]

    def antipode_index(self) -> np.ndarray | None:
        """Index of ``-x_i`` for every ``i``, or ``None`` if the set is not antipodal."""
        lookup = {k: i for i, k in enumerate(self._row_keys())}
        out = np.empty(self.n_points, dtype=np.int64)
        for i, k in enumerate(self._row_keys(-1)):
            j = lookup.get(k)
            if j is None:
                return None
            out[i] = j
        return out

    @property
    def is_antipodal(self) -> bool:
        return self.antipode_index() is not None

    def subset(self, index, *, name: str | None = None, provenance: str | None = None) -> PointConfiguration:
        index = np.asarray(index)
        return PointConfiguration(
            self.A[index],
            None if self.B is None else self.B[index],
            self.den,
            self.r,
            name=self.name if name is None else name,
            provenance=self.provenance if provenance is None else provenance,
        )

    # -- inner products -----------------------------------------------------
    def _raw_products(self, rows: np.ndarray | None = None):
        """Integer arrays ``P, Q`` with ``(x_i, x_j) * den**2 = P + Q sqrt(r)``."""
        A, B = self.A, self.B
        left_A = A if rows is None else A[rows]
        left_B = None if B is None else (B if rows is None else B[rows])
        bound = self.coord_len * (array_bound(A) + math.isqrt(self.r) * array_bound(B) + 1) ** 2 * 2
        A_, lA = exact_array(A, bound), exact_array(left_A, bound)
        P = lA @ A_.T
        if B is None:
            return P, None
        B_, lB = exact_array(B, bound), exact_array(left_B, bound)
        P = P + self.r * (lB @ B_.T)
        Q = lA @ B_.T + lB @ A_.T
        return P, Q

    def normalized_row(self, i: int) -> list[QuadScalar]:
        """Normalized inner products of point ``i`` with every point."""
        P, Q = self._raw_products(np.array([i]))
        ns = self.norm_sq
        d2 = self.den * self.den
        out = []
        for j in range(self.n_points):
            q = 0 if Q is None else int(Q[0, j])
            out.append(QuadScalar(Fraction(int(P[0, j]), d2), Fraction(q, d2), self.r) / ns)
        return out

    def row_inner_product_counts(self, i: int = 0) -> dict[QuadScalar, int]:
        """Distribution of normalized inner products seen from point ``i``.

        Works on one row only, so it is usable on the full Leech set.
        """
        P, Q = self._raw_products(np.array([i]))
        if Q is None:
            vals, cnt = np.unique(P[0], return_counts=True)
            pairs = [((int(v), 0), int(c)) for v, c in zip(vals, cnt)]
        else:
            vals, cnt = np.unique(np.stack([P[0], Q[0]], axis=1), axis=0, return_counts=True)
            pairs = [((int(x), int(y)), int(c)) for (x, y), c in zip(vals, cnt)]
        d2 = self.den * self.den
        ns = self.norm_sq
        return {
            QuadScalar(Fraction(x, d2), Fraction(y, d2), self.r) / ns: c for (x, y), c in pairs
        }


def normalized_gram(X: PointConfiguration) -> GramMatrix:
    """Exact Gram matrix of ``(x_i, x_j) / |x|^2``."""
    P, Q = X._raw_products()
    s_t = X.norm_sq * (X.den * X.den)
    s, t = s_t.a, s_t.b
    assert s.denominator == 1 and t.denominator == 1
    s, t = int(s), int(t)
    if Q is None or t == 0:
        if Q is None:
            return GramMatrix(P, None, s, 0, X.d)
        return GramMatrix(P, Q, s, X.r, X.d)
    r = X.r
    bound = (array_bound(P) + array_bound(Q)) * (abs(s) + abs(t) * r) * 2
    P, Q = exact_array(P, bound), exact_array(Q, bound)
    a = P * s - Q * (t * r)
    b = Q * s - P * t
    return GramMatrix(a, b, s * s - t * t * r, r, X.d)


# ---------------------------------------------------------------------------
# Golay code

_GOLAY_GENERATOR_HEX = (
    0xAE3001, 0x571801, 0x2B8C01, 0x15C601, 0x0AE301, 0x057181,
    0x02B8C1, 0x015C61, 0x00AE31, 0x005719, 0x002B8D, 0x0015C7,
)


@dataclass(frozen=True)
class GolayCode:
    """The extended binary Golay code as a 12 x 24 generator and its 4096 words."""

    generator: np.ndarray

    @cached_property
    def codewords(self) -> np.ndarray:
        gens = [int("".join(map(str, row)), 2) for row in self.generator]
        words = np.zeros(4096, dtype=np.int64)
        for k, g in enumerate(gens):
            words[(np.arange(4096) >> k) & 1 == 1] ^= g
        bits = (words[:, None] >> np.arange(23, -1, -1)) & 1
        return bits.astype(np.int8)

    def weight_distribution(self) -> dict[int, int]:
        w, c = np.unique(self.codewords.sum(axis=1), return_counts=True)
        return {int(a): int(b) for a, b in zip(w, c)}

    @property
    def octads(self) -> np.ndarray:
        cw = self.codewords
        return cw[cw.sum(axis=1) == 8]


def golay_code() -> GolayCode:
    rows = np.array([[(h >> (23 - i)) & 1 for i in range(24)] for h in _GOLAY_GENERATOR_HEX], dtype=np.int8)
    return GolayCode(rows)


# ---------------------------------------------------------------------------
# Table constructions

def icosahedron() -> PointConfiguration:
    """12 vertices: cyclic shifts of ``(0, +-1, +-phi)``, over Q(sqrt 5)."""
    A, B = [], []
    # doubled: 1 -> 2, phi -> 1 + sqrt5
    for s1, s2 in itertools.product((1, -1), repeat=2):
        a = [0, 2 * s1, s2]
        b = [0, 0, s2]
        for shift in range(3):
            A.append(a[shift:] + a[:shift])
            B.append(b[shift:] + b[:shift])
    return PointConfiguration(A, B, 2, 5, name="icosahedron", provenance="cyclic shifts of (0, +-1, +-phi)")


def _even_permutations(n: int):
    for p in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        if inversions % 2 == 0:
            yield p


def cell600() -> PointConfiguration:
    """The 120 unit quaternions of the binary icosahedral group."""
    A, B = [], []
    for i in range(4):
        for s in (4, -4):
            row = [0, 0, 0, 0]
            row[i] = s
            A.append(row)
            B.append([0] * 4)
    for signs in itertools.product((2, -2), repeat=4):
        A.append(list(signs))
        B.append([0] * 4)
    # (phi/2, 1/2, 1/(2 phi), 0) scaled by 4: (1+s5, 2, -1+s5, 0)
    base_a = (1, 2, -1, 0)
    base_b = (1, 0, 1, 0)
    for signs in itertools.product((1, -1), repeat=3):
        sa = [base_a[k] * signs[k] for k in range(3)] + [0]
        sb = [base_b[k] * signs[k] for k in range(3)] + [0]
        for p in _even_permutations(4):
            A.append([sa[p[k]] for k in range(4)])
            B.append([sb[p[k]] for k in range(4)])
    return PointConfiguration(A, B, 4, 5, name="600-cell", provenance="binary icosahedral group 2I")


def e8_roots() -> PointConfiguration:
    """The 240 roots of E8, coordinates doubled over denominator 2 (norm 2)."""
    rows = []
    for i, j in itertools.combinations(range(8), 2):
        for si, sj in itertools.product((2, -2), repeat=2):
            row = [0] * 8
            row[i], row[j] = si, sj
            rows.append(row)
    for signs in itertools.product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            rows.append(list(signs))
    return PointConfiguration(rows, None, 2, name="E8 roots", provenance="even coordinate system")


def leech_min_vectors() -> PointConfiguration:
    """The 196560 minimal vectors of the Leech lattice at squared norm 32."""
    code = golay_code()
    cw = code.codewords.astype(np.int64)

    # shape (-+3, +-1^23): y = 1 - 2c, then flip one coordinate y_j -> -3 y_j
    Y = 1 - 2 * cw
    odd = np.repeat(Y, 24, axis=0)
    pos = np.tile(np.arange(24), len(Y))
    odd[np.arange(len(odd)), pos] *= -3

    # shape (+-2^8, 0^16) on octads, even number of minus signs
    octads = code.octads
    sign_rows = np.array([s for s in itertools.product((1, -1), repeat=8) if s.count(-1) % 2 == 0], dtype=np.int64)
    blocks = []
    for oct_ in octads:
        support = np.flatnonzero(oct_)
        block = np.zeros((len(sign_rows), 24), dtype=np.int64)
        block[:, support] = 2 * sign_rows
        blocks.append(block)
    even8 = np.vstack(blocks)

    # shape (+-4^2, 0^22)
    fours = []
    for i, j in itertools.combinations(range(24), 2):
        for si, sj in itertools.product((4, -4), repeat=2):
            row = [0] * 24
            row[i], row[j] = si, sj
            fours.append(row)
    fours = np.array(fours, dtype=np.int64)

    X = np.vstack([odd, even8, fours])
    return PointConfiguration(
        X, None, 1,
        name="Leech lattice",
        provenance="Golay construction; shapes (3,1^23):98304 (2^8):97152 (4^2):1104",
    )


# ---------------------------------------------------------------------------
# Cross-sections

def _section(
    X: PointConfiguration,
    anchors: list[list[QuadScalar]],
    targets: list[QuadScalar],
    *,
    name: str,
    provenance: str,
) -> PointConfiguration:
    """Points with raw inner products ``targets`` against ``anchors``, projected off the anchor span."""
    mask = np.ones(X.n_points, dtype=bool)
    for vec, tgt in zip(anchors, targets):
        # raw (u, v) * den * L  compared as integers
        L = math.lcm(*(c.a.denominator for c in vec), *(c.b.denominator for c in vec))
        va = np.array([int(c.a * L) for c in vec], dtype=np.int64)
        vb = np.array([int(c.b * L) for c in vec], dtype=np.int64)
        r = X.r or max((c.r for c in vec), default=0)
        P = X.A @ va
        Q = np.zeros_like(P)
        if X.B is not None:
            P = P + r * (X.B @ vb)
            Q = X.A @ vb + X.B @ va
        elif vb.any():
            Q = X.A @ vb
        want = tgt * (X.den * L)
        if want.a.denominator != 1 or want.b.denominator != 1:
            mask[:] = False
            break
        mask &= (P == int(want.a)) & (Q == int(want.b))
    if not mask.any():
        raise ConfigurationError("empty cross-section")

    gram = [[sum((x * y for x, y in zip(u, v)), QuadScalar(0)) for v in anchors] for u in anchors]
    _, pivots = linalg.row_reduce([list(col) for col in zip(*gram)])
    independent = list(pivots)
    if len(independent) < len(anchors):
        warnings.warn(
            f"anchors are linearly dependent (rank {len(independent)} of {len(anchors)})",
            stacklevel=3,
        )
    sub = [[gram[i][j] for j in independent] for i in independent]
    coeffs = linalg.solve(sub, [targets[i] for i in independent])
    m = X.coord_len
    w = [sum((coeffs[k] * anchors[i][c] for k, i in enumerate(independent)), QuadScalar(0)) for c in range(m)]

    r = X.r or max((c.r for c in w), default=0)
    L = math.lcm(X.den, *(c.a.denominator for c in w), *(c.b.denominator for c in w))
    scale = L // X.den
    A = X.A[mask] * scale - np.array([int(c.a * L) for c in w], dtype=np.int64)
    B = None
    if X.B is not None or any(c.b for c in w):
        base_B = X.B[mask] if X.B is not None else np.zeros_like(A)
        B = base_B * scale - np.array([int(c.b * L) for c in w], dtype=np.int64)
    if array_bound(A) ** 2 * m >= INT64_SAFE:
        raise ConfigurationError("cross-section coordinates exceed int64 range")
    return PointConfiguration(A, B, L, r, name=name, provenance=provenance)


def cross_section(
    X: PointConfiguration,
    anchors: list[int],
    ips,
    *,
    name: str | None = None,
) -> PointConfiguration:
    """Points of ``X`` with normalized inner product ``ips[j]`` against point ``anchors[j]``.

    The selected points are translated by the common anchor-span component,
    which leaves them orthogonal to every anchor with one shared norm.
    """
    if len(set(anchors)) != len(anchors):
        raise ValueError("anchors must be distinct")
    if len(anchors) != len(ips):
        raise ValueError("need one inner product per anchor")
    ips = [as_quad(t) for t in ips]
    vecs = [[X.coordinate(i, c) for c in range(X.coord_len)] for i in anchors]
    targets = [t * X.norm_sq for t in ips]
    label = ", ".join(str(t) for t in ips)
    return _section(
        X, vecs, targets,
        name=name or f"section of {X.name}",
        provenance=f"{X.provenance} | section anchors={list(anchors)} ips=[{label}]",
    )


def kissing_56() -> PointConfiguration:
    return cross_section(e8_roots(), [0], [Fraction(1, 2)], name="kissing 56")


def schlafli_27() -> PointConfiguration:
    return cross_section(kissing_56(), [0], [Fraction(1, 3)], name="Schlafli 27")


def kissing_4600(leech: PointConfiguration | None = None) -> PointConfiguration:
    leech = leech_min_vectors() if leech is None else leech
    return cross_section(leech, [0], [Fraction(1, 2)], name="kissing 4600")


def kissing_891(k4600: PointConfiguration | None = None) -> PointConfiguration:
    k4600 = kissing_4600() if k4600 is None else k4600
    return cross_section(k4600, [0], [Fraction(1, 3)], name="kissing 891")


def equiangular_552(leech: PointConfiguration | None = None) -> PointConfiguration:
    """276 equiangular lines in R^23 (both unit vectors per line).

    Minimal vectors ``x`` with ``(x, u) = 24`` for the norm-48 Leech vector
    ``u = (5, 1^23)``, translated by ``-u/2``.
    """
    leech = leech_min_vectors() if leech is None else leech
    u = [QuadScalar(5)] + [QuadScalar(1)] * 23
    return _section(
        leech, [u], [QuadScalar(24)],
        name="equiangular 552",
        provenance=f"{leech.provenance} | minimal x with (x,u)=24, u=(5,1^23)",
    )


def mclaughlin_275(e552: PointConfiguration | None = None) -> PointConfiguration:
    e552 = equiangular_552() if e552 is None else e552
    return cross_section(e552, [0], [Fraction(1, 5)], name="McLaughlin 275")


_BUILDERS = {
    "icosahedron": icosahedron,
    "600cell": cell600,
    "e8": e8_roots,
    "kissing56": kissing_56,
    "schlafli27": schlafli_27,
    "leech": leech_min_vectors,
    "kissing4600": kissing_4600,
    "kissing891": kissing_891,
    "equiangular552": equiangular_552,
    "mclaughlin275": mclaughlin_275,
}

HEAVY = frozenset({"leech", "kissing4600", "kissing891", "equiangular552", "mclaughlin275"})


def construct(name: str) -> PointConfiguration:
    """Build a configuration by id, or ``section:<base>:<i1,i2>:<ip1,ip2>``."""
    if name.startswith("section:"):
        try:
            _, base, idx, ips = name.split(":")
            anchors = [int(i) for i in idx.split(",")]
            values = [as_quad(v) for v in ips.split(",")]
        except ValueError as exc:
            raise ValueError(f"malformed section id {name!r}") from exc
        return cross_section(construct(base), anchors, values)
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(f"unknown configuration {name!r}; choose from {sorted(_BUILDERS)}") from None


def available() -> list[str]:
    return sorted(_BUILDERS)


# ---------------------------------------------------------------------------
# Persistence

def save(X: PointConfiguration, path) -> None:
    lines = [
        f"{CONFIG_MAGIC} {FORMAT_VERSION} exact",
        f"name {X.name}",
        f"provenance {X.provenance}",
        f"d {X.d}",
        f"norm_sq {X.norm_sq}",
        f"N {X.n_points}",
    ]
    for i in range(X.n_points):
        lines.append(" ".join(str(X.coordinate(i, j)) for j in range(X.coord_len)))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _header(lines: list[str], key: str, pos: int) -> str:
    if pos >= len(lines):
        raise FormatError(f"missing '{key}' line")
    head, _, rest = lines[pos].partition(" ")
    if head != key:
        raise FormatError(f"expected '{key}' on line {pos + 1}, got {lines[pos]!r}")
    return rest


def load(path) -> PointConfiguration:
    lines = Path(path).read_text(encoding="utf-8").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file")
    magic = lines[0].split()
    if len(magic) != 3 or magic[0] != CONFIG_MAGIC:
        raise FormatError(f"not a configuration file: {lines[0]!r}")
    if int(magic[1]) != FORMAT_VERSION or magic[2] != "exact":
        raise FormatError(f"unsupported format {lines[0]!r}")
    try:
        name = _header(lines, "name", 1)
        provenance = _header(lines, "provenance", 2)
        d = int(_header(lines, "d", 3))
        norm_sq = QuadScalar.parse(_header(lines, "norm_sq", 4))
        n = int(_header(lines, "N", 5))
        body = lines[6:]
        if len(body) != n:
            raise FormatError(f"expected {n} points, found {len(body)}")
        rows = [[QuadScalar.parse(tok) for tok in line.split()] for line in body]
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if len({len(r) for r in rows}) != 1:
        raise FormatError("rows have different lengths")
    radicands = {c.r for row in rows for c in row} - {0}
    if len(radicands) > 1:
        raise FormatError(f"mixed radicands {sorted(radicands)}")
    r = radicands.pop() if radicands else 0
    den = math.lcm(*(c.a.denominator for row in rows for c in row), *(c.b.denominator for row in rows for c in row))
    A = [[int(c.a * den) for c in row] for row in rows]
    B = [[int(c.b * den) for c in row] for row in rows] if r else None
    X = PointConfiguration(A, B, den, r, name=name, provenance=provenance)
    if X.d != d:
        raise ConfigurationError(f"header says d={d}, points span d={X.d}")
    if X.norm_sq != norm_sq:
        raise ConfigurationError(f"header norm_sq {norm_sq} differs from computed {X.norm_sq}")
    return X
