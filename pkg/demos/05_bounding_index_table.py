"""
Minimal bounding index for prime orders
=======================================

For a prime p >= 5 the smallest index of pi_1(L(p,q)) inside the
fundamental group of a 4-manifold it bounds pi_1-injectively is the
least divisor d >= 3 of p - 1.
"""

from lensbound import LensSpace, d_min_divisor, ob_lens_prime
from lensbound.bounding_index import is_prime

rows = [(p, d_min_divisor(p)) for p in range(5, 120) if is_prime(p)]
for p, d in rows:
    print(f"p={p:4d}  p-1={p - 1:4d}  d(p)={d}")

# d(p) = 3 exactly for p = 1 mod 3
assert all((d == 3) == (p % 3 == 1) for p, d in rows)
print("O_b(L(31,7)) =", ob_lens_prime(LensSpace(31, 7)))
