# Which (d, size, level) triples can an embedded antipodal 3-design have?
from fractions import Fraction

from spherecodes.search import admissible_inner_products, enumerate_parameters, scan

rows = enumerate_parameters()
print(len(rows), "candidate rows for 3 <= d+1 <= 100, 1 <= m <= 200")
print(f"{'d+1':>4}{'D':>6}{'m':>5}{'level':>10}{'size':>10}  inner products")
for r in rows[:15]:
    ips = ", ".join(str(x) for x in sorted(r.inner_products, key=float))
    print(f"{r.d + 1:>4}{r.D:>6}{r.m:>5}{str(r.ell):>10}{r.code_size:>10}  {ips}")

# %% the four codes known to exist
known = {(2, 5), (6, 9), (7, 4), (22, 25)}
for r in rows:
    if (r.d, r.m) in known:
        print("known:", (r.D, r.code_size, abs(r.ell)))

# %% how many grid points each filter removes
grid = scan()
print("grid points     :", len(grid))
print("zero level      :", sum(not r.nonzero_level for r in grid))
print("at/above pole   :", sum(r.nonzero_level and not r.below_pole for r in grid))
print("size not integer:", sum(r.below_pole and not r.integral for r in grid))
print("fails size>=2D  :", sum(r.integral and not r.fisher_ok for r in grid))

print(admissible_inner_products(6, Fraction(1, 27)))
