# The Leech lattice minimal vectors and the codes cut out of them (takes a few seconds).
import time
from collections import Counter

from spherecodes import configurations as cfg
from spherecodes.pipeline import summarize

t0 = time.perf_counter()
golay = cfg.golay_code()
print("Golay weights:", golay.weight_distribution())

leech = cfg.leech_min_vectors()
print(f"{leech.n_points} minimal vectors in {time.perf_counter() - t0:.1f}s")
print("inner products with one vector:", dict(sorted(leech.row_inner_product_counts(0).items(), key=lambda kv: float(kv[0]))))

# %% shape classes by largest coordinate
print(Counter(int(v) for v in abs(leech.A).max(axis=1)))

# %% sections and their images in the harmonic space
k4600 = cfg.kissing_4600(leech)
k891 = cfg.kissing_891(k4600)
e552 = cfg.equiangular_552(leech)
m275 = cfg.mclaughlin_275(e552)
for X in (k4600, k891, e552, m275):
    s = summarize(X)
    levels = sorted(s.levels, key=float)
    print(f"{X.name:<30} N={X.n_points:<5} {s.label():<20} levels {[str(v) for v in levels]} optimal={s.optimal}")
