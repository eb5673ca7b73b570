"""
Bounding a collection of lens spaces
====================================

L(n,q_1), ..., L(n,q_m) pi_1-isomorphically bound a 4-manifold exactly when
units k_i with sum q_i k_i^2 = 0 mod n exist.  Each witness also gives maps
to L(n,1) whose degrees sum to zero.
"""

from lensbound import BoundaryProblem, brute_force_cobound, degree_witness, pi1_cobound

for n, q in [(5, [3, 1, 3]), (5, [1]), (5, [1, 2]), (7, [1, 5]), (12, [1, 5, 7, 11])]:
    problem = BoundaryProblem(n, q)
    w = pi1_cobound(problem)
    oracle = brute_force_cobound(problem)
    if w is None:
        print(f"n={n} q={q}: no bounding manifold (oracle agrees: {oracle is None})")
    else:
        print(f"n={n} q={q}: k={w.k} degrees={w.degrees} sum={sum(w.degrees)}")

# The degree recipe by hand: 3*1 + 1*4 + 3*1 = 10 = 2*5, so the first degree drops by 10
print(degree_witness(BoundaryProblem(5, [3, 1, 3]), [1, 2, 1]))
