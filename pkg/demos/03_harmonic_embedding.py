# Map each configuration into the degree-2 harmonics and test the image.
import numpy as np

from spherecodes import configurations as cfg
from spherecodes.embedding import embed_coords
from spherecodes.pipeline import summarize

for build in [cfg.icosahedron, cfg.cell600, cfg.e8_roots, cfg.kissing_56, cfg.schlafli_27]:
    X = build()
    s = summarize(X)
    levels = ", ".join(str(v) for v in sorted(s.levels, key=float))
    print(f"{X.name:<28}{s.label():<26} levels {{{levels}}}  3-design={s.design3}  optimal={s.optimal}")

# %% the same code in floating point coordinates
X = cfg.e8_roots()
C = embed_coords(X)
G = summarize(X).code.gram.to_float()
print("coordinate array:", C.shape)
print("max |C C^T - exact Gram| =", np.abs(C @ C.T - G).max())

# %% the optimality equation for the E8 image by hand: M = 240, D = 35, level 1/7
M, D, ell = 240, 35, 1 / 7
print("M^2/D - 2M =", M * M / D - 2 * M, " l^2 (M^2 - 2M) =", ell**2 * (M * M - 2 * M))
