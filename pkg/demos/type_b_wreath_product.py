"""
Deformations of C^2n / (Z_2 wr S_n)
===================================

The framed Kronecker quiver with dimension vector e_inf + n delta.  We
sweep the parameter (c1, c_gamma), decide smoothness, and list the
symplectic leaves.  Singular parameters sit on the lines c1 = 0 and
c_gamma = +-m c1 for 0 <= m <= n - 1.
"""

from fractions import Fraction

from quiverleaves import is_smooth, leaves, variety_dimension
from quiverleaves.mckay import frame, gamma_data, lambda_of_c, lambda_prime

g = gamma_data("cyclic:2")
q, vec = frame(g)
n = 3
alpha = vec(n)
print("quiver:", q.to_json())
print("alpha =", alpha)

grid = [Fraction(k, 2) for k in range(-5, 6)]
print(f"\nsmoothness for n = {n}, c1 = 1 (x marks a singular parameter):")
row = []
for cg in grid:
    lam = lambda_prime(g, lambda_of_c(g, (1, cg)), n)
    smooth, _ = is_smooth(q, lam, alpha)
    row.append(f"{str(cg):>5}{' ' if smooth else 'x'}")
print(" ".join(row))

for c in [(0, 1), (1, 0), (1, 1), (1, 2), (1, Fraction(1, 2))]:
    lam = lambda_prime(g, lambda_of_c(g, c), n)
    out = leaves(q, lam, alpha)
    print(f"\nc = ({c[0]}, {c[1]}): lambda' = {lam.to_json()}, variety dimension {variety_dimension(q, lam, alpha)}")
    for s in out:
        print(f"  dim {s.dimension:2}  type {s.rep_type.to_json()}")
