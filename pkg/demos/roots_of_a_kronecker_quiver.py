"""
Roots of the Kronecker quiver
=============================

Two vertices joined by two parallel arrows.  Real roots come in two
strings climbing away from the simple roots; the imaginary roots are
the multiples of delta = (1, 1).
"""

from quiverleaves import Quiver, classify_root, p_value, positive_roots_upto, reflect

q = Quiver.from_names(["0", "1"], [("0", "1"), ("0", "1")])

print("positive roots below (4, 4):")
for v in positive_roots_upto(q, (4, 4)):
    print(f"  {v}  {classify_root(q, v).value:9}  p = {p_value(q, v)}")

# walk up one real root string by alternating reflections
v = (0, 1)
chain = [v]
for i in (0, 1, 0, 1):
    v = reflect(q, i, v)
    chain.append(v)
print("\nalternating reflections from e_1:", " -> ".join(map(str, chain)))

# delta is fixed by both reflections
print("s_0(1,1) =", reflect(q, 0, (1, 1)), " s_1(1,1) =", reflect(q, 1, (1, 1)))
