"""
McKay quivers of the binary polyhedral groups
=============================================

Each character table is stored exactly over Q(zeta_N), checked for
orthogonality, and used to rebuild the extended Dynkin diagram from
the tensor products with the natural representation.
"""

from quiverleaves import p_value, sym_form
from quiverleaves.mckay import frame, gamma_data

for kind in ("cyclic:4", "bindihedral:3", "bintetra", "binocta", "binicosa"):
    g = gamma_data(kind)
    q, vec = frame(g)
    edges = sorted({tuple(sorted(a)) for a in g.quiver.arrows})
    print(f"{kind:14} |G| = {g.order:3}  N = {g.cyc_order:2}  delta = {g.delta}")
    print(f"{'':14} edges {edges}")
    print(f"{'':14} (delta, delta) = {sym_form(g.quiver, g.delta, g.delta)},"
          f" p'(e_inf + n delta) for n = 1..5: {[p_value(q, vec(n)) for n in range(1, 6)]}")

g = gamma_data("bintetra")
print("\ncharacter table of the binary tetrahedral group:")
print("   ", "  ".join(f"{label:>10}" for label in g.class_labels))
for row in g.characters:
    print("   ", "  ".join(f"{str(x):>10}" for x in row))
