"""
Products of indices and regularized values
==========================================

Indices multiply in two ways: the stuffle product mirrors multiplying
nested sums, the shuffle product mirrors multiplying iterated integrals.
Divergent indices (leading 1) get a value as a polynomial in T.
"""

from frmzv import regularize, shuffle_indices, stuffle

# stuffle: the diagonal term (4) appears when both summation variables meet
print("(2) * (2)      =", stuffle((2,), (2,)))

# shuffle: interleave the words x^(k-1) y letter by letter
print("(1,1) sh (2)   =", shuffle_indices((1, 1), (2,)))

# zeta(1) diverges; both regularizations send it to T
for mode in ("harmonic", "shuffle"):
    print(f"{mode:8s} reg (1)     =", regularize(mode, (1,)))

# deeper divergent indices pick up admissible coefficients
for mode in ("harmonic", "shuffle"):
    print(f"{mode:8s} reg (1,1,2) =", regularize(mode, (1, 1, 2)))

# the regularization respects the matching product: check one pair
u, v = (1,), (1, 2)
lhs = regularize("harmonic", u) * regularize("harmonic", v)
rhs = None
for w, c in stuffle(u, v).items():
    term = regularize("harmonic", w).scale(c)
    rhs = term if rhs is None else rhs + term
print("morphism holds for (1) * (1,2):", lhs == rhs)
