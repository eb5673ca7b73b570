"""
Degree sets and homotopy types of lens spaces
=============================================

A pi_1-isomorphic map L(n,q) -> L(n,q') can only have degrees in the
classes q q' x^2 mod n with x a unit.  Degree 1 is possible exactly when
the two spaces are orientation-preservingly homotopy equivalent.
"""

from lensbound import (
    LensSpace,
    canonical_form,
    degree_set,
    homotopy_equivalent_oriented,
    unit_squares,
)

# Unit squares mod 5 and mod 7
print("unit squares mod 5:", sorted(map(int, unit_squares(5))))
print("unit squares mod 7:", sorted(map(int, unit_squares(7))))

# Degrees of maps L(5,1) -> L(5,2): 1 is missing, so no homotopy equivalence
D = degree_set(LensSpace(5, 1), LensSpace(5, 2))
print("degrees L(5,1) -> L(5,2):", [int(d) for d in D], " 1 in set:", 1 in D)

# Mod 7 the residue 2 is a square (3^2 = 9), so L(7,1) and L(7,2) are
# homotopy equivalent although they are not homeomorphic.
v = homotopy_equivalent_oriented(LensSpace(7, 1), LensSpace(7, 2))
print("L(7,1) ~ L(7,2):", v.equivalent, "witness", v.witness)
print("canonical forms:", canonical_form(LensSpace(7, 1)), canonical_form(LensSpace(7, 2)))

# Homotopy classes of oriented lens spaces with pi_1 = Z_11
classes = {}
for q in range(1, 11):
    L = LensSpace(11, q)
    rep = next((r for r in classes if homotopy_equivalent_oriented(L, r)), L)
    classes.setdefault(rep, []).append(q)
for rep, qs in classes.items():
    print(f"  class of {rep}: q in {qs}")
