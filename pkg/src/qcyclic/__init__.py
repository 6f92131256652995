"""Hermitian-self-orthogonal GF(4) codes and quantum codes from cyclic codes over GF(4^m)."""
from .cyclic import (
    CosetPartition,
    CyclicCode,
    CyclicCodeSpec,
    bch_bound,
    code_from_zeros,
    coset_closure,
    cyclotomic_cosets,
    hermitian_dual_code,
    hermitian_dual_zero_set,
    maximal_factor,
    trace_code,
)
from .errors import (
    BudgetError,
    CodingError,
    FieldMismatchError,
    InvalidBasisError,
    InvalidDegreeError,
    InvalidLengthError,
    NotSelfOrthogonalError,
)
from .field import (
    GF4,
    Basis,
    ExtElement,
    ExtField,
    expand_in_basis,
    frobenius,
    make_extension_field,
    polynomial_basis,
    primitive_nth_root,
    random_basis,
    trace_to_base,
)
from .gf4 import conjugate_gf4
from .image import (
    SelfOrthReport,
    check_corollary1,
    check_corollary2,
    check_matrix_self_orthogonal,
    check_theorem4,
    component_polynomials,
    expand_vector,
    hermitian_inner_product,
    image_code,
    self_orthogonality_report,
)
from .linear import LinearCodeMatrix
from .poly import Polynomial, dagger, poly_eval, poly_from_roots, poly_gcd
from .quantum import (
    QuantumCodeParams,
    bch_quantum_spec,
    quantum_from_image,
    quantum_from_self_orthogonal,
    render_table,
    table1_rows,
)
from .weights import (
    WeightDistribution,
    bounded_weight_dual_search,
    macwilliams_dual_distribution,
    min_weight_enumerate,
    weight_distribution,
)

__version__ = "0.1.0"

__all__ = [
    "Basis",
    "BudgetError",
    "CodingError",
    "CosetPartition",
    "CyclicCode",
    "CyclicCodeSpec",
    "ExtElement",
    "ExtField",
    "FieldMismatchError",
    "GF4",
    "InvalidBasisError",
    "InvalidDegreeError",
    "InvalidLengthError",
    "LinearCodeMatrix",
    "NotSelfOrthogonalError",
    "Polynomial",
    "QuantumCodeParams",
    "SelfOrthReport",
    "WeightDistribution",
    "bch_bound",
    "bch_quantum_spec",
    "bounded_weight_dual_search",
    "check_corollary1",
    "check_corollary2",
    "check_matrix_self_orthogonal",
    "check_theorem4",
    "code_from_zeros",
    "component_polynomials",
    "conjugate_gf4",
    "coset_closure",
    "cyclotomic_cosets",
    "dagger",
    "expand_in_basis",
    "expand_vector",
    "frobenius",
    "hermitian_dual_code",
    "hermitian_dual_zero_set",
    "hermitian_inner_product",
    "image_code",
    "macwilliams_dual_distribution",
    "make_extension_field",
    "maximal_factor",
    "min_weight_enumerate",
    "poly_eval",
    "poly_from_roots",
    "poly_gcd",
    "polynomial_basis",
    "primitive_nth_root",
    "quantum_from_image",
    "quantum_from_self_orthogonal",
    "random_basis",
    "render_table",
    "self_orthogonality_report",
    "table1_rows",
    "trace_code",
    "trace_to_base",
    "weight_distribution",
]
