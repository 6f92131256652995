"""
A [[15,3,5]] code from a GF(4) cyclic code
==========================================

The length-15 cyclic code with zeros {0,1,3,4,5,10,11,12,14} is hermitian
self-orthogonal; the minimum weight of its dual outside the code gives the
quantum distance.
"""

from qcyclic import (
    CyclicCodeSpec,
    bch_quantum_spec,
    code_from_zeros,
    cyclotomic_cosets,
    hermitian_dual_zero_set,
    macwilliams_dual_distribution,
    self_orthogonality_report,
    weight_distribution,
)

print("cosets mod 15:", [list(c) for c in cyclotomic_cosets(15).cosets])

zeros = {0, 1, 3, 4, 5, 10, 11, 12, 14}
code = code_from_zeros(CyclicCodeSpec(1, 15, zeros))
print(f"({code.n},{code.k}) code, generator {code.generator.to_json()}")

# -2S mod n inside Z is enough for self-orthogonality
print("-2S mod 15 =", sorted(hermitian_dual_zero_set(code.nonzeros, 15)))
report = self_orthogonality_report(code)
print("matrix / dagger / zero-set checks:",
      report.matrix_check, report.theorem4_check, report.corollary_check)

# weights of the code and, by MacWilliams, of its hermitian dual
primal = weight_distribution(code)
dual = macwilliams_dual_distribution(primal, code.k)
for w in range(16):
    if primal.counts[w] or dual.counts[w]:
        print(f"  w={w:2d}  code {primal.counts[w]:5d}  dual {dual.counts[w]:6d}")

print(bch_quantum_spec(15, zeros).label)
