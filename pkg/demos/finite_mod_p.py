"""
Finite multiple zeta values modulo p
====================================

Truncating the nested sums at p and reducing mod p gives the finite
analogue. Products and symmetric sums behave as in the real case.
"""

from frmzv import fmzv_mod_p, stuffle_check_mod_p, symmetric_check_mod_p
from frmzv.finite import primes_between, sum_recursion_mod_p

for p in primes_between(5, 23):
    vals = {idx: fmzv_mod_p(idx, p).residue for idx in [(1,), (2,), (1, 2), (2, 1), (3, 1, 1)]}
    print(p, vals)

print()
p = 101
print("stuffle (1,2) * (3) mod 101:", stuffle_check_mod_p((1, 2), (3,), p))
print("symmetric sum of (1,2,3) mod 101 vanishes:", symmetric_check_mod_p((1, 2, 3), p))

# unlike the real case, the three-term recursion of fixed-weight sums is exact
print("recursion at (4,2,1) mod 31:", sum_recursion_mod_p(4, 2, 1, 31))
