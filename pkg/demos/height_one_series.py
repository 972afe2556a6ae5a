"""
Generating series for height-one values
=======================================

The coefficients of 1 - Gamma(1-X) Gamma(1-Y) / Gamma(1-X-Y) are the
values zeta(k+1, 1^(n-1)). Multiplying by a cotangent series produces the
differences of finite real values at (k, 1^(n-1)) and (n, 1^(k-1)).
"""

import mpmath

from frmzv import frmzv, gamma_quotient_series, mzv_holder
from frmzv.numerics import eval_combo
from frmzv.series import theorem3_rhs

prec = 192
G = gamma_quotient_series(6, prec)
with mpmath.workprec(prec):
    for k, n in [(1, 1), (2, 1), (1, 2), (3, 2)]:
        coeff = -G[k, n]
        direct = mzv_holder((k + 1,) + (1,) * (n - 1), prec)
        print(f"[X^{k} Y^{n}] = {mpmath.nstr(coeff, 20)}   zeta = {mpmath.nstr(direct, 20)}")

print()
with mpmath.workprec(prec):
    for k, n in [(3, 2), (4, 2), (5, 3)]:
        a = frmzv("shuffle", (k,) + (1,) * (n - 1)).value
        b = frmzv("shuffle", (n,) + (1,) * (k - 1)).value
        lhs = eval_combo(a - b, prec)
        rhs = theorem3_rhs(k, n, prec)
        print(f"(k,n)=({k},{n}): difference {mpmath.nstr(lhs, 20)}  series {mpmath.nstr(rhs, 20)}")
