"""
Quantum codes from Reed-Solomon codes
=====================================

For S = {1, ..., delta-1} the GF(4^m) Reed-Solomon code of length 4^m - 1
gives an [[m(4^m-1), m(4^m-1) - 2m|S|, d]] code. For m = 2 the distance is
computed; for larger m the listed value is reported and a bounded search
certifies that no lighter logical operator exists up to a chosen weight.
"""

from qcyclic import (
    CyclicCodeSpec,
    bounded_weight_dual_search,
    code_from_zeros,
    image_code,
    render_table,
    table1_rows,
)

print(render_table(table1_rows(2)))
print(render_table(table1_rows(3)))

code = code_from_zeros(CyclicCodeSpec.from_nonzeros(3, 63, {1, 2, 3}))
result = bounded_weight_dual_search(image_code(code), 3)
print(f"m=3, |S|=3: searched {result.candidates} vectors, distance >= {result.lower_bound}")
