"""GF(4)-images of GF(4^m) codes and hermitian self-orthogonality checks.

Three independent criteria are provided:

* :func:`check_matrix_self_orthogonal` - all hermitian products of generator
  rows vanish (ground truth for any linear code);
* :func:`check_theorem4` - g(x) g_dagger(x) = 0 mod x^n - 1 for a GF(4) cyclic code;
* :func:`check_corollary1` / :func:`check_corollary2` - set arithmetic on the
  nonzero set (sufficient conditions only).
"""
from dataclasses import dataclass, field

import numpy as np

from . import gf4, linear
from .cyclic import (
    CyclicCode,
    cyclotomic_cosets,
    hermitian_dual_zero_set,
    maximal_factor,
    trace_code,
)
from .errors import CodingError, FieldMismatchError
from .field import GF4, polynomial_basis
from .linear import LinearCodeMatrix
from .poly import Polynomial, dagger


def hermitian_inner_product(u, v):
    """sum_i u_i * v_i^2 over GF(4)."""
    u = np.asarray(u, dtype=np.uint8)
    v = np.asarray(v, dtype=np.uint8)
    if u.shape != v.shape:
        raise ValueError(f"length mismatch: {u.shape} vs {v.shape}")
    return int(np.bitwise_xor.reduce(gf4.MUL[u, gf4.CONJ[v]], initial=0))


def expand_vector(u, basis):
    """d_B(u): all first B-coordinates u_11..u_n1, then u_12..u_n2, and so on."""
    u = np.asarray(u, dtype=np.int64)
    return basis.expand_array(u).T.reshape(-1).astype(np.uint8)


def image_code(code, basis=None):
    """The GF(4) code d_B(C), of length m*n and dimension m*k.

    Spanned by d_B(beta_l * row_t) over basis elements beta_l and generator
    rows row_t, then row-reduced.
    """
    f = code.field
    if basis is None:
        basis = polynomial_basis(f)
    elif basis.field != f:
        raise FieldMismatchError("basis and code are over different fields")
    g = code.genmatrix
    spanning = [basis.expand_array(f.mul_array(beta, g)).transpose(0, 2, 1).reshape(code.k, -1)
                for beta in basis.elements]
    rows = np.concatenate(spanning, axis=0).astype(np.uint8) if code.k else np.zeros((0, f.m * code.n), np.uint8)
    origin = {"image_of": code.spec.to_json(), "basis": basis.to_rows()}
    image = LinearCodeMatrix.from_generators(rows, n=f.m * code.n, origin=origin)
    assert image.k == f.m * code.k, "d_B lost rank; expansion is not injective"
    return image


def component_polynomials(c, basis):
    """Split c(x) = sum_j c_j(x) beta_j into m GF(4) polynomials c_1..c_m."""
    coeffs = c.coeffs if isinstance(c, Polynomial) else np.asarray(c, dtype=np.int64)
    if len(coeffs) == 0:
        return [Polynomial(GF4) for _ in range(basis.field.m)]
    coords = basis.expand_array(np.asarray(coeffs, dtype=np.int64))
    return [Polynomial(GF4, coords[:, j]) for j in range(basis.field.m)]


@dataclass
class SelfOrthReport:
    """Verdicts of the three self-orthogonality criteria.

    ``None`` marks a criterion that does not apply to the code at hand.
    """

    matrix_check: bool
    theorem4_check: bool = None
    corollary_check: bool = None
    details: dict = field(default_factory=dict)

    @property
    def self_orthogonal(self):
        return self.matrix_check

    def to_json(self):
        return {
            "self_orthogonal": self.matrix_check,
            "matrix_check": self.matrix_check,
            "theorem4_check": self.theorem4_check,
            "corollary_check": self.corollary_check,
            "details": self.details,
        }


def _generator_rows(code):
    if isinstance(code, LinearCodeMatrix):
        return code.rows
    if isinstance(code, CyclicCode):
        return code.as_linear().rows
    return np.asarray(code, dtype=np.uint8)


def check_matrix_self_orthogonal(code):
    """True iff <row_i, row_j> = 0 for all generator rows, including i = j.

    Checking generators suffices because the product is additive in both
    arguments and scales by a (resp. b^2) under u -> a u (resp. v -> b v).
    The witness is the first offending 0-based pair in lexicographic order.
    """
    rows = _generator_rows(code)
    gram = linear.hermitian_gram(rows, rows)
    bad = np.argwhere(gram)
    if bad.size:
        i, j = (int(x) for x in bad[0])
        return SelfOrthReport(False, details={"offending_rows": [i, j], "product": gf4.symbol(gram[i, j])})
    return SelfOrthReport(True)


def dagger_product(code):
    """g(x) g_dagger(x) mod x^n - 1 for a GF(4) cyclic code."""
    if code.m != 1:
        raise CodingError("the dagger criterion applies to GF(4) cyclic codes only")
    n = code.n
    g = code.generator.mod_xn_minus_1(n)
    return (g * dagger(g, n)).mod_xn_minus_1(n)


def check_theorem4(code):
    return dagger_product(code).is_zero()


def zero_set_violations(spec):
    """Elements of -2S mod n that are not zeros."""
    return sorted(hermitian_dual_zero_set(spec.nonzeros, spec.n) - spec.zeros)


def check_corollary1(spec):
    """-2S mod n is contained in Z."""
    if spec.m != 1:
        raise CodingError("the zero-set criterion is stated for GF(4) codes")
    return not zero_set_violations(spec)


def check_corollary2(nonzeros, n, partition=None):
    """Coset closure test for GF(4^m) codes.

    Returns ``(verdict, S^c, complement of S^c, -2 S^c mod n)`` where S^c is
    the union of cosets meeting S. A true verdict means every GF(4) image of
    the code is hermitian self-orthogonal.
    """
    if partition is None:
        partition = cyclotomic_cosets(n)
    sc = partition.closure(nonzeros)
    complement = frozenset(range(n)) - sc
    minus2 = hermitian_dual_zero_set(sc, n)
    return minus2 <= complement, sc, complement, minus2


def self_orthogonality_report(code, basis=None):
    """Run every applicable criterion on a cyclic code.

    For m = 1 the matrix check uses the code itself and all three criteria
    apply. For m > 1 it uses the image under ``basis`` (polynomial basis by
    default); the dagger criterion is run on the trace code and recorded in
    ``details`` only, since it certifies the image without being equivalent
    to it.
    """
    if code.m == 1:
        report = check_matrix_self_orthogonal(code)
        report.theorem4_check = check_theorem4(code)
        report.corollary_check = check_corollary1(code.spec)
        report.details["minus_2S"] = sorted(hermitian_dual_zero_set(code.nonzeros, code.n))
        violations = zero_set_violations(code.spec)
        if violations:
            report.details["minus_2S_not_in_Z"] = violations
        if not report.theorem4_check:
            report.details["dagger_remainder"] = dagger_product(code).to_json()
        return report
    image = image_code(code, basis)
    report = check_matrix_self_orthogonal(image)
    verdict, sc, complement, minus2 = check_corollary2(code.nonzeros, code.n)
    report.corollary_check = verdict
    report.details.update(
        S_c=sorted(sc),
        complement=sorted(complement),
        minus_2S_c=sorted(minus2),
        basis=image.origin["basis"],
        trace_code_dagger_check=check_theorem4(trace_code(code)),
    )
    if not verdict:
        report.details["minus_2S_c_not_in_complement"] = sorted(minus2 - complement)
    return report


def components_divisible_by_gf4_factor(code, codeword, basis):
    """Every component polynomial of ``codeword`` is divisible by g_q."""
    gq, _, _ = maximal_factor(code)
    return all((cj % gq).is_zero() for cj in component_polynomials(codeword, basis))
