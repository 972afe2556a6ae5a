"""
Finite real multiple zeta values
================================

The finite real value of an index is an alternating sum of products of
regularized values of its prefixes (reversed) and suffixes. The T-parts
cancel, leaving a combination of convergent MZVs.
"""

import mpmath

from frmzv import frmzv, sum_S, zeta2_ideal_witness
from frmzv.symmetric import recursion_residual, sum_formula_rhs

for index in [(2, 1), (1, 2), (3, 1), (1, 1, 2)]:
    for mode in ("harmonic", "shuffle"):
        e = frmzv(mode, index)
        print(f"{mode:8s} {index}: {e.value}   ~ {mpmath.nstr(e.evaluate(128), 15)}")

# sums over all indices of fixed weight, depth and a marked position
print()
print("S(5,3,1) =", sum_S(5, 3, 1).value)
print("expected coefficient of zeta(5) modulo zeta(2):", sum_formula_rhs(5, 3, 1))

# the three-term recursion among these sums is not an identity of real
# numbers; its residual is a multiple of zeta(2)
r = recursion_residual(4, 2, 1)
print()
print("recursion residual at (4,2,1):", r.combination, "=", mpmath.nstr(r.numeric, 15))
print("as (m) * C_m with m even:", zeta2_ideal_witness(r.combination))
