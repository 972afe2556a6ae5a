"""
Evaluating multiple zeta values
===============================

The evaluator splits the integration path at 1/2 and sums products of
multiple polylogarithms that converge geometrically. A naive nested sum
serves as a cheap sanity check, and moving the split point to 1/3 gives
an independent high-precision check.
"""

import mpmath

from frmzv import dual, mzv_direct, mzv_holder, mzv_holder_at

index = (3, 1, 2)
value = mzv_holder(index, prec=200)
print("zeta(3,1,2)     =", mpmath.nstr(value, 50))

# low-precision truncated sum, tail bounded explicitly
print("direct sum      =", mzv_direct(index, eps=1e-6))

# duality: reverse the word and swap the letters; the value is unchanged
d = dual(index)
other = mzv_holder_at(d, prec=200)
print(f"zeta{d} at split 1/3 =", mpmath.nstr(other, 50))
with mpmath.workprec(200):
    print("difference      =", mpmath.nstr(value - other, 5))

# a classical closed form: zeta(2,2) = pi^4 / 120
with mpmath.workprec(200):
    print("zeta(2,2) - pi^4/120 =",
          mpmath.nstr(mzv_holder((2, 2), 200) - mpmath.pi ** 4 / 120, 5))
