"""
GF(4) images of a GF(16) code
=============================

Expanding each symbol of a GF(16) code in a basis over GF(4) doubles the
length. When the coset condition on the nonzero set holds, every such image
is hermitian self-orthogonal, whichever basis is used.
"""

import numpy as np

from qcyclic import (
    CyclicCodeSpec,
    check_corollary2,
    check_matrix_self_orthogonal,
    code_from_zeros,
    image_code,
    make_extension_field,
    polynomial_basis,
    quantum_from_image,
    random_basis,
    trace_code,
)

nonzeros = {6, 7, 8, 9}
ok, closure, complement, minus2 = check_corollary2(nonzeros, 15)
print("coset closure of S:", sorted(closure))
print("its complement:    ", sorted(complement))
print("-2 * closure:      ", sorted(minus2), "inside complement:", ok)

code = code_from_zeros(CyclicCodeSpec.from_nonzeros(2, 15, nonzeros))
print("trace code nonzeros:", sorted(trace_code(code).nonzeros))

f = make_extension_field(2)
rng = np.random.default_rng(7)
for basis in [polynomial_basis(f)] + [random_basis(f, rng) for _ in range(3)]:
    image = image_code(code, basis)
    verdict = check_matrix_self_orthogonal(image).matrix_check
    print(f"basis {basis.to_rows()}: ({image.n},{image.k}) image, self-orthogonal={verdict}")

print(quantum_from_image(2, 15, nonzeros).label)
