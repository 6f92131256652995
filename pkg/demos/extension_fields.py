"""
Arithmetic in GF(4) and its extensions
======================================

Elements of GF(4^m) are stored as integers whose base-4 digits are the
coordinates in the polynomial basis 1, alpha, ..., alpha^(m-1).
"""

import numpy as np

from qcyclic import gf4, make_extension_field, polynomial_basis, random_basis

# GF(4) itself: 0, 1, w, W = w^2
print("GF(4) multiplication table")
print(np.array([[gf4.symbol(gf4.mul(a, b)) for b in range(4)] for a in range(4)]))

# GF(16) as GF(4)[x] / (x^2 + x + w)
f = make_extension_field(2)
print("modulus (constant term first):", gf4.to_string(f.modulus))

# powers of the primitive element run through every nonzero element once
powers = [f.alpha_pow(j) for j in range(f.order - 1)]
print("alpha^j, j = 0..14:", powers)
assert sorted(powers) == list(range(1, 16))

# the trace down to GF(4) hits each value equally often
print("trace counts:", np.bincount([f.trace(v) for v in range(f.order)]))

# any basis over GF(4) expands an element into m coordinates
rng = np.random.default_rng(1)
for basis in (polynomial_basis(f), random_basis(f, rng)):
    x = f.alpha_pow(7)
    print(basis.to_rows(), "->", gf4.to_string(basis.expand(x)))
