"""
A Z_5 action on CP^2
====================

The generator [x1 : x2 : x3] -> [z^-1 x1 : x2 : z x3], z = exp(2 pi i / 5),
has three isolated fixed points.  Removing invariant balls and dividing out
gives a 4-manifold W bounded by three copies of lens spaces mod 5.  Gluing
two of them and doing one circle surgery produces a closed-up manifold W_2
with pi_1 of order 20 and Euler characteristic 2.
"""

from lensbound import (
    CircleSurgery,
    Closed4,
    FreeQuotient,
    GlueBoundaryPair,
    LensSpace,
    RemoveBalls,
    WeightedCP2Action,
    canonical_form,
    chib_lower_bound,
    euler_ledger,
    fixed_point_types,
    ob_lens_prime,
    orbifold_boundary,
    semidirect_group,
    verify_action_consistency,
)

A = WeightedCP2Action(5, (-1, 0, 1))
types = fixed_point_types(A)
print("fixed-point types:", [str(L) for L in types])
print("canonical:        ", [str(canonical_form(L)) for L in types])

boundary = orbifold_boundary(A)
print("boundary of W:    ", " u ".join(str(L) for L in boundary.lens_spaces()))
print("cobordism witness:", verify_action_consistency(A))

# pi_1(W_2) = Z_5 x| Z_4 with the twist 2 of order 4
G = semidirect_group(5, 2, 4)
print("|pi_1(W_2)| =", G.order, " minimal bounding index of L(5,1):", ob_lens_prime(LensSpace(5, 1)))

chi = euler_ledger([Closed4(3), RemoveBalls(3), FreeQuotient(5), GlueBoundaryPair(), CircleSurgery()])
print("chi(W_2) =", chi, " lower bound:", chib_lower_bound(LensSpace(5, 1)))
