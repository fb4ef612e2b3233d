"""The degree-2 harmonic embedding ``X -> G_X u -G_X``.

The exact representation works on Gram matrices: ``<G_x, G_y> = g_{2,d}((x, y))``.
The float representation realizes ``G_x`` as the scaled traceless tensor
``sqrt((d+1)/d) * (x x^T - I/(d+1))`` in an orthonormal basis of traceless
symmetric matrices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.linalg import helmert

from .configurations import ConfigurationError, FormatError, PointConfiguration, normalized_gram
from .gram import GramMatrix, array_bound, exact_array
from .harmonics import harm_dim
from .scalars import QuadScalar

__all__ = [
    "EmbeddedCode",
    "antipodal_halve",
    "embed_code",
    "embed_coords",
    "embed_gram",
    "load_gram",
    "save_coords",
    "save_gram",
]

GRAM_MAGIC = "spherecodes-gram"


@dataclass(frozen=True)
class EmbeddedCode:
    """``G_X u -G_X`` for a half code ``X`` on ``S^source_d``.

    Rows ``i`` and ``i + n_half`` of ``gram`` are an antipodal pair.
    """

    source_d: int
    D: int
    gram: GramMatrix
    half_gram: GramMatrix
    source_half: GramMatrix

    @property
    def n_half(self) -> int:
        return self.half_gram.n

    @property
    def size(self) -> int:
        return self.gram.n


def embed_gram(G: GramMatrix, d: int) -> GramMatrix:
    """Apply ``t -> g_{2,d}(t)`` to every entry; the result lives on ``S^(D-1)``."""
    a, b, q, r = G.a, G.b, G.den, G.r
    ba = array_bound(a)
    bb = array_bound(b)
    bound = (d + 1) * (ba * ba + bb * bb * r + 2 * ba * bb) + q * q
    a = exact_array(a, bound)
    sq = a * a
    if b is not None:
        b = exact_array(b, bound)
        sq = sq + r * (b * b)
        new_b = 2 * (d + 1) * (a * b)
    else:
        new_b = None
    new_a = (d + 1) * sq - q * q
    return GramMatrix(new_a, new_b, d * q * q, r, harm_dim(2, d) - 1)


def _first_nonzero_sign(X: PointConfiguration) -> np.ndarray:
    signs = np.empty(X.n_points, dtype=np.int64)
    nonzero = (X.A != 0) if X.B is None else ((X.A != 0) | (X.B != 0))
    first = nonzero.argmax(axis=1)
    for i, j in enumerate(first):
        signs[i] = X.coordinate(i, j).sign()
    return signs


def antipodal_halve(X: PointConfiguration) -> PointConfiguration:
    """One point per antipodal pair: the lexicographically larger of ``x, -x``."""
    if not X.is_antipodal:
        raise ConfigurationError(f"{X.name or 'configuration'} is not antipodal")
    keep = np.flatnonzero(_first_nonzero_sign(X) > 0)
    return X.subset(keep, name=f"{X.name} (half)", provenance=f"{X.provenance} | antipodal half")


def _half_of(X: PointConfiguration) -> PointConfiguration:
    return antipodal_halve(X) if X.is_antipodal else X


def embed_code(X: PointConfiguration) -> EmbeddedCode:
    """Halve ``X`` when antipodal, embed the half, then adjoin the negatives."""
    half = _half_of(X)
    source = normalized_gram(half)
    H = embed_gram(source, X.d)
    return EmbeddedCode(
        source_d=X.d,
        D=harm_dim(2, X.d),
        gram=H.antipodal_double(),
        half_gram=H,
        source_half=source,
    )


def _traceless_features(U: np.ndarray) -> np.ndarray:
    """Rows ``vec(u u^T - I/n)`` in an orthonormal traceless-symmetric basis."""
    n = U.shape[1]
    iu, ju = np.triu_indices(n, k=1)
    off = math.sqrt(2.0) * U[:, iu] * U[:, ju]
    diag = (U * U) @ helmert(n).T
    return np.hstack([off, diag])


def embed_coords(X: PointConfiguration) -> np.ndarray:
    """Float coordinates of ``G_X u -G_X`` as a ``(2 N', D)`` array of unit rows."""
    half = _half_of(X)
    F = half.to_float()
    # express points in an orthonormal basis of their span
    _, _, vt = np.linalg.svd(F, full_matrices=False)
    basis = vt[: X.dim]
    U = F @ basis.T
    U /= np.linalg.norm(U, axis=1, keepdims=True)
    n = X.dim
    G = math.sqrt(n / (n - 1)) * _traceless_features(U)
    return np.vstack([G, -G])


# ---------------------------------------------------------------------------
# File formats

def save_gram(G: GramMatrix, path) -> None:
    """Row-major dump of exact entries, one row per line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"{GRAM_MAGIC} 1 exact\nd {G.d}\nN {G.n}\n")
        for i in range(G.n):
            fh.write(" ".join(str(G.entry(i, j)) for j in range(G.n)))
            fh.write("\n")


def load_gram(path) -> GramMatrix:
    lines = Path(path).read_text(encoding="utf-8").split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 3 or lines[0].split() != [GRAM_MAGIC, "1", "exact"]:
        raise FormatError("not an exact Gram file")
    try:
        d = int(lines[1].removeprefix("d "))
        n = int(lines[2].removeprefix("N "))
        body = lines[3:]
        if len(body) != n:
            raise FormatError(f"expected {n} rows, found {len(body)}")
        rows = [[QuadScalar.parse(tok) for tok in line.split()] for line in body]
    except FormatError:
        raise
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if any(len(row) != n for row in rows):
        raise FormatError("Gram file is not square")
    G = GramMatrix.from_entries(rows, d)
    if not G.is_symmetric():
        raise FormatError("Gram matrix is not symmetric")
    return G


def save_coords(coords: np.ndarray, path, *, name: str = "") -> None:
    """Float configuration file (header flags the float variant)."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"spherecodes-config 1 float\nname {name}\nd {coords.shape[1] - 1}\nN {coords.shape[0]}\n")
        for row in coords:
            fh.write(" ".join(repr(float(v)) for v in row))
            fh.write("\n")
