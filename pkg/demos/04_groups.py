"""
Group constructions
===================

The HNN double sigma(G) of a presentation, the metacyclic groups
Z_p x|_u Z_d and the action of power maps on the homology of cyclic groups.
"""

from lensbound import (
    abelianization,
    cyclic_homology,
    cyclic_presentation,
    element_order,
    i3_trivial_in_semidirect,
    power_map_action_on_H,
    semidirect_group,
    sigma_presentation,
)
from lensbound.bounding_index import d_min_divisor
from lensbound.groups import multiplicative_order

S = sigma_presentation(cyclic_presentation(5))
print(S)
ab = abelianization(S)
print("H_1 =", ab, " image of y:", ab.images["y"])

# H_k(Z_7) for small k
print([str(cyclic_homology(7, k)) for k in range(6)])

# alpha -> alpha^u acts on H_1 by u and on H_3 by u^2
for u in range(1, 5):
    print(f"u={u}: H_1 x{power_map_action_on_H(5, u, 1)}, H_3 x{power_map_action_on_H(5, u, 3)}")

# For each prime p, a twist of order d(p) makes Z_p -> Z_p x| Z_d(p) vanish on H_3
for p in [5, 7, 11, 13, 17]:
    d = d_min_divisor(p)
    u = next(u for u in range(2, p) if multiplicative_order(u, p) == d)
    G = semidirect_group(p, u, d)
    print(f"p={p} d={d} u={u} |G|={G.order} ord(beta)={element_order(G, (0, 1))}"
          f" H_3 killed: {i3_trivial_in_semidirect(p, u, d)}")
