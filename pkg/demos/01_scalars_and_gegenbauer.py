# Exact numbers in Q(sqrt r) and the degree-2 harmonic polynomial.
from fractions import Fraction

from spherecodes import QuadScalar, gegenbauer, gegenbauer2, harm_dim, sqrt_rational

# %% golden-ratio arithmetic stays exact
phi4 = QuadScalar(Fraction(1, 4), Fraction(1, 4), 5)  # (1+sqrt5)/4
print("phi/2       =", phi4)
print("(phi/2)^2   =", phi4 * phi4)
print("as a float  =", float(phi4))
print("sign of (1-sqrt5)/4:", QuadScalar(Fraction(1, 4), Fraction(-1, 4), 5).sign())

# %% square roots of rationals land in the right field
for q in (Fraction(1, 4), Fraction(1, 5), Fraction(11, 63)):
    print(f"sqrt({q}) = {sqrt_rational(q)}")

# %% dimensions of harmonic spaces
for d in (2, 3, 7, 22):
    print(f"S^{d}: dim Harm_1 = {harm_dim(1, d)}, dim Harm_2 = {harm_dim(2, d)}")

# %% the quadratic polynomial against the three-term recurrence
t = Fraction(1, 2)
print("g2 on S^7 at 1/2:", gegenbauer2(7, t), "recurrence:", gegenbauer(2, 7, t))
print("g4 on S^7 at 1/2:", gegenbauer(4, 7, t))
