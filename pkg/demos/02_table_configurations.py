# The five small sharp configurations and how strong a design each one is.
from fractions import Fraction

from spherecodes import configurations as cfg
from spherecodes.analysis import code_params, design_strength
from spherecodes.cli import format_ip_set
from spherecodes.configurations import normalized_gram

builders = [cfg.icosahedron, cfg.cell600, cfg.e8_roots, cfg.kissing_56, cfg.schlafli_27]

print(f"{'name':<28}{'n':>3}{'N':>5}  {'strength':>8}  inner products")
for build in builders:
    X = build()
    G = normalized_gram(X)
    p = code_params(G)
    t = design_strength(G).strength
    ips = set(p.ip_set) - {1}
    print(f"{X.name:<28}{X.dim:>3}{X.n_points:>5}  {t:>8}  {format_ip_set(ips)}")

# %% sections: points of E8 at inner product 1/2 with a fixed root, then again inside that

e8 = cfg.e8_roots()
k56 = cfg.cross_section(e8, [0], [Fraction(1, 2)])
s27 = cfg.cross_section(k56, [0], [Fraction(1, 3)])
print("E8 -> 56 -> 27:", e8.n_points, k56.n_points, s27.n_points)
print("dimensions   :", e8.dim, k56.dim, s27.dim)
