"""
The moment map on explicit matrices
===================================

A representation of the doubled Kronecker quiver with alpha = (1, 1),
its moment map, and a check of the deformed preprojective relation.
Then a basechange shows the moment map transforming by conjugation.
"""

from fractions import Fraction

from quiverleaves import Quiver, Representation, check_preprojective, moment_map, symplectic_form
from quiverleaves.repcheck import as_matrix, matrix_to_json

q = Quiver.from_names(["0", "1"], [("0", "1"), ("0", "1")])

# arrows 0, 1 are a, b; arrows 2, 3 are a*, b*
r = Representation.from_mapping(q, (1, 1), {0: [[1]], 1: [[3]], 2: [[2]], 3: [[0]]})
print("mu =", [matrix_to_json(m) for m in moment_map(r)])
print("preprojective at (-2, 2):", check_preprojective(r, (-2, 2)))
print("preprojective at (1, 1): ", check_preprojective(r, (1, 1)))

g = [as_matrix([[3]]), as_matrix([[Fraction(1, 2)]])]
g_inv = [as_matrix([[Fraction(1, 3)]]), as_matrix([[2]])]
moved = r.basechange(g, g_inv)
print("after basechange mu =", [matrix_to_json(m) for m in moment_map(moved)])

s = Representation.from_mapping(q, (1, 1), {2: [[1]]})
print("omega(r, s) =", symplectic_form(r, s), " omega(s, r) =", symplectic_form(s, r))
