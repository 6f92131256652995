"""Quantum code parameters [[n, k, d]] from hermitian-self-orthogonal GF(4) codes.

A self-orthogonal (n, k_c) code C over GF(4) gives [[n, n - 2 k_c, d]] with
d the minimum weight of C_dual minus C. Every distance carries its
provenance in ``d_status``:

``exact``          computed by enumeration + MacWilliams, or by a bounded
                   search that found a word after clearing all lighter ones
``lower_bound``    a bounded search found nothing up to ``d - 1``
``paper_claimed``  the reference value |S| + 1, not recomputed here
"""
from dataclasses import dataclass, field

from .cyclic import (
    CyclicCode,
    CyclicCodeSpec,
    bch_bound,
    code_from_zeros,
    hermitian_dual_zero_set,
)
from .errors import BudgetError, CodingError, NotSelfOrthogonalError
from .field import polynomial_basis
from .image import (
    SelfOrthReport,
    check_corollary2,
    check_matrix_self_orthogonal,
    image_code,
    self_orthogonality_report,
)
from .weights import (
    DEFAULT_MAX_CANDIDATES,
    DEFAULT_MAX_ENUM,
    bounded_weight_dual_search,
    dual_difference_weight,
    macwilliams_dual_distribution,
    weight_distribution,
)

EXACT = "exact"
LOWER_BOUND = "lower_bound"
PAPER_CLAIMED = "paper_claimed"

# |S| ranges of the reference Reed-Solomon table, per extension degree
TABLE1_SIZES = {2: range(2, 5), 3: range(2, 7), 4: range(2, 29)}


@dataclass
class QuantumCodeParams:
    n: int
    k: int
    d: int
    d_status: str
    source: dict = field(default_factory=dict)

    def __post_init__(self):
        if not 0 <= self.k <= self.n:
            raise ValueError(f"logical dimension {self.k} outside 0..{self.n}")
        if self.d_status not in (EXACT, LOWER_BOUND, PAPER_CLAIMED):
            raise ValueError(f"unknown distance status {self.d_status!r}")

    @property
    def label(self):
        return f"[[{self.n},{self.k},{self.d}]]"

    def to_json(self):
        return {"n": self.n, "k": self.k, "d": self.d, "d_status": self.d_status,
                "label": self.label, "source": self.source}

    @classmethod
    def from_json(cls, data):
        return cls(data["n"], data["k"], data["d"], data["d_status"], data.get("source", {}))


def quantum_from_self_orthogonal(code, max_enum=DEFAULT_MAX_ENUM, max_weight=None,
                                 max_candidates=DEFAULT_MAX_CANDIDATES, source=None):
    """[[n, n - 2 dim C, d]] from a self-orthogonal GF(4) code.

    ``code`` is a :class:`LinearCodeMatrix` or a GF(4) :class:`CyclicCode`.
    d is found from the weight distribution of C and its MacWilliams
    transform when 4^dim C <= max_enum, otherwise by a bounded search up to
    ``max_weight``; without ``max_weight`` an over-budget code raises
    :class:`BudgetError`.
    """
    source = dict(source or {})
    if isinstance(code, CyclicCode):
        if code.m != 1:
            raise CodingError("GF(4^m) codes go through quantum_from_image")
        report = self_orthogonality_report(code)
        ok = report.matrix_check and report.theorem4_check
        linear_code = code.as_linear()
        source.setdefault("code", code.spec.to_json())
    else:
        report = check_matrix_self_orthogonal(code)
        ok = report.matrix_check
        linear_code = code
    if not ok:
        raise NotSelfOrthogonalError("code is not hermitian self-orthogonal", report)
    n, kc = linear_code.n, linear_code.k
    source["classical_dimension"] = kc
    if linear_code.size <= max_enum:
        dist = weight_distribution(linear_code, max_enum)
        dual = macwilliams_dual_distribution(dist, kc)
        d = dual_difference_weight(dist, dual)
        if d is None:
            # C equals its dual: no logical qubits, report the pure distance
            d = dual.min_nonzero_weight()
        source["method"] = "macwilliams"
        return QuantumCodeParams(n, n - 2 * kc, d, EXACT, source)
    if max_weight is None:
        raise BudgetError(
            f"4^{kc} codewords exceed max_enum={max_enum}; pass max_weight for a bounded search",
            needed=linear_code.size, budget=max_enum,
        )
    result = bounded_weight_dual_search(linear_code, max_weight, max_candidates)
    source["method"] = "bounded_search"
    source["search"] = result.to_json()
    status = EXACT if result.found else LOWER_BOUND
    return QuantumCodeParams(n, n - 2 * kc, result.lower_bound, status, source)


def _refuse_unless_coset_criterion(m, n, nonzeros):
    verdict, sc, complement, minus2 = check_corollary2(nonzeros, n)
    if verdict:
        return
    report = SelfOrthReport(
        matrix_check=False, corollary_check=False,
        details={"S_c": sorted(sc), "complement": sorted(complement),
                 "minus_2S_c": sorted(minus2),
                 "minus_2S_c_not_in_complement": sorted(minus2 - complement)},
    )
    raise NotSelfOrthogonalError(
        f"coset criterion fails for m={m}, n={n}, S={sorted(nonzeros)}", report)


def quantum_from_image(m, n, nonzeros, basis=None, max_enum=DEFAULT_MAX_ENUM,
                       max_weight=None, max_candidates=DEFAULT_MAX_CANDIDATES):
    """[[m n, m n - 2 m k', d]] from the GF(4)-image of the GF(4^m) code with nonzero set S."""
    nonzeros = frozenset(nonzeros)
    _refuse_unless_coset_criterion(m, n, nonzeros)
    code = code_from_zeros(CyclicCodeSpec.from_nonzeros(m, n, nonzeros))
    if basis is None:
        basis = polynomial_basis(code.field)
    image = image_code(code, basis)
    report = check_matrix_self_orthogonal(image)
    if not report.matrix_check:
        raise NotSelfOrthogonalError("image is not hermitian self-orthogonal", report)
    source = {"m": m, "n": n, "k": code.k, "nonzeros": sorted(nonzeros), "basis": basis.to_rows()}
    return quantum_from_self_orthogonal(image, max_enum, max_weight, max_candidates, source)


def bch_quantum_spec(n, zeros, max_enum=DEFAULT_MAX_ENUM, max_weight=None,
                     max_candidates=DEFAULT_MAX_CANDIDATES):
    """Quantum code from a GF(4) cyclic code given by its (coset-closed) zero set.

    Besides the computed d, records the BCH bounds of the hermitian dual's
    zero set -2S and of the Euclidean dual's zero set -S; they are
    conjugation-equivalent codes, so the larger of the two bounds d.
    """
    code = code_from_zeros(CyclicCodeSpec(1, n, frozenset(zeros)))
    report = self_orthogonality_report(code)
    if not (report.corollary_check or report.theorem4_check):
        raise NotSelfOrthogonalError("neither criterion certifies self-orthogonality", report)
    s = code.nonzeros
    source = {
        "code": code.spec.to_json(),
        "bch_bounds": {
            "hermitian_dual": bch_bound(hermitian_dual_zero_set(s, n), n),
            "euclidean_dual": bch_bound(frozenset((-z) % n for z in s), n),
        },
    }
    return quantum_from_self_orthogonal(code, max_enum, max_weight, max_candidates, source)


def table1_rows(m, max_delta=None, verify_distance=None, max_enum=DEFAULT_MAX_ENUM,
                max_weight=None, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Rows of the Reed-Solomon table for S = {1, ..., delta - 1}.

    Each row builds the length 4^m - 1 code over GF(4^m), checks the coset
    criterion (hard failure if it does not hold), forms the polynomial-basis
    image and checks it. n and k are read off the image and asserted against
    n = m(4^m - 1), k = n - 2 m |S|.

    ``verify_distance`` defaults to True for m = 2 only; unverified rows and
    rows whose verification runs out of budget report d = |S| + 1 as
    ``paper_claimed``.
    """
    if m not in TABLE1_SIZES:
        raise CodingError(f"the table lists m in {sorted(TABLE1_SIZES)}, got {m}")
    if verify_distance is None:
        verify_distance = m == 2
    n_base = 4 ** m - 1
    rows = []
    for size in TABLE1_SIZES[m]:
        if max_delta is not None and size + 1 > max_delta:
            break
        s = frozenset(range(1, size + 1))
        claimed = size + 1
        verdict = check_corollary2(s, n_base)[0]
        if not verdict:
            raise AssertionError(f"coset criterion fails on table row m={m}, S={sorted(s)}")
        code = code_from_zeros(CyclicCodeSpec.from_nonzeros(m, n_base, s))
        basis = polynomial_basis(code.field)
        image = image_code(code, basis)
        if not check_matrix_self_orthogonal(image).matrix_check:
            raise AssertionError(f"image of table row m={m}, S={sorted(s)} is not self-orthogonal")
        n, k = image.n, image.n - 2 * image.k
        assert n == m * n_base and k == n - 2 * m * size, "table formulas violated"
        source = {"m": m, "n": n_base, "k": code.k, "nonzeros": sorted(s),
                  "basis": basis.to_rows(), "classical_dimension": image.k,
                  "claimed_d": claimed}
        params = None
        if verify_distance:
            try:
                params = quantum_from_self_orthogonal(image, max_enum, max_weight,
                                                      max_candidates, source)
            except BudgetError as exc:
                source["verification"] = f"budget exceeded: {exc}"
        if params is None:
            params = QuantumCodeParams(n, k, claimed, PAPER_CLAIMED, source)
        rows.append(params)
    return rows


def render_table(rows):
    """Aligned text table: m, n, k, d, d_status, S."""
    lines = [f"{'m':>2} {'n':>6} {'k':>6} {'d':>4}  {'d_status':<13} S"]
    for p in rows:
        s = p.source.get("nonzeros", [])
        if len(s) > 6 and s == list(range(s[0], s[-1] + 1)):
            s_text = f"{{{s[0]},{s[1]},...,{s[-1]}}}"
        else:
            s_text = "{" + ",".join(map(str, s)) + "}"
        lines.append(f"{p.source.get('m', 1):>2} {p.n:>6} {p.k:>6} {p.d:>4}  {p.d_status:<13} {s_text}")
    return "\n".join(lines) + "\n"


__all__ = [
    "EXACT",
    "LOWER_BOUND",
    "PAPER_CLAIMED",
    "QuantumCodeParams",
    "bch_quantum_spec",
    "quantum_from_image",
    "quantum_from_self_orthogonal",
    "render_table",
    "table1_rows",
]
