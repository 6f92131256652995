import numpy as np
import oracles
import pytest
from conftest import BCH_15_6_ZEROS, all_closed_zero_sets

from qcyclic import (
    CodingError,
    CyclicCode,
    CyclicCodeSpec,
    InvalidLengthError,
    Polynomial,
    bch_bound,
    code_from_zeros,
    coset_closure,
    cyclotomic_cosets,
    hermitian_dual_code,
    hermitian_dual_zero_set,
    make_extension_field,
    maximal_factor,
    trace_code,
)
from qcyclic.field import GF4

COSETS_15 = [[0], [1, 4], [2, 8], [3, 12], [5], [6, 9], [7, 13], [10], [11, 14]]


def test_cosets_15():
    part = cyclotomic_cosets(15)
    assert [list(c) for c in part.cosets] == COSETS_15
    assert part.to_json() == {"n": 15, "q": 4, "cosets": COSETS_15}


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 21, 51, 63, 85, 255])
def test_cosets_match_orbit_oracle(n):
    assert [list(c) for c in cyclotomic_cosets(n).cosets] == oracles.orbit_cosets(n, 4)


@pytest.mark.parametrize("n", [3, 5, 15, 63, 255])
def test_cosets_partition(n):
    part = cyclotomic_cosets(n)
    flat = [z for c in part.cosets for z in c]
    assert sorted(flat) == list(range(n))
    for c in part.cosets:
        assert {(4 * z) % n for z in c} == set(c)


def test_cosets_require_coprime():
    with pytest.raises(InvalidLengthError):
        cyclotomic_cosets(6)
    with pytest.raises(InvalidLengthError):
        cyclotomic_cosets(0)


def test_closure_examples():
    part = cyclotomic_cosets(15)
    assert coset_closure({1}, part) == {1, 4}
    assert coset_closure({6, 7, 8, 9}, part) == {2, 6, 7, 8, 9, 13}
    assert coset_closure(set(), part) == frozenset()
    assert part.inner({1, 2, 4, 5}) == {1, 4, 5}
    assert part.is_closed({0, 5, 10}) and not part.is_closed({1})


def test_spec_validation():
    with pytest.raises(InvalidLengthError):
        CyclicCodeSpec(1, 16, set())
    with pytest.raises(InvalidLengthError):
        CyclicCodeSpec(2, 7, set())
    with pytest.raises(CodingError):
        CyclicCodeSpec(1, 15, {1})          # not a union of cosets
    with pytest.raises(CodingError):
        CyclicCodeSpec(2, 15, {15})
    # any subset is allowed over GF(16)
    assert CyclicCodeSpec(2, 15, {1}).nonzeros == frozenset(range(15)) - {1}


def test_spec_json():
    spec = CyclicCodeSpec.from_nonzeros(2, 15, {6, 7, 8, 9})
    assert CyclicCodeSpec.from_json(spec.to_json()) == spec
    assert CyclicCodeSpec.from_json({"m": 2, "n": 15, "nonzeros": [6, 7, 8, 9]}) == spec
    with pytest.raises(CodingError):
        CyclicCodeSpec.from_json({"m": 2, "n": 15})


def test_bch_15_6_code(bch_15_6_code):
    code = bch_15_6_code
    assert (code.n, code.k) == (15, 6)
    assert code.generator.degree == 9
    assert all(c <= 3 for c in code.generator.coeffs)
    quot, rem = divmod(Polynomial.xn_minus_1(GF4, 15), code.generator)
    assert rem.is_zero() and quot.degree == 6


def test_generator_divides_xn_minus_1_all_n15():
    for z in all_closed_zero_sets(15):
        code = code_from_zeros(CyclicCodeSpec(1, 15, z))
        assert code.generator.degree == len(z)
        assert (Polynomial.xn_minus_1(GF4, 15) % code.generator).is_zero()


def test_code_examples():
    full = code_from_zeros(CyclicCodeSpec(1, 5, set()))
    assert full.k == 5 and full.generator == Polynomial(GF4, [1])
    zero = code_from_zeros(CyclicCodeSpec(1, 5, set(range(5))))
    assert zero.k == 0 and zero.genmatrix.shape == (0, 5)
    rep = code_from_zeros(CyclicCodeSpec(1, 3, {1, 2}))
    assert rep.generator == Polynomial(GF4, [1, 1, 1])   # repetition code
    assert rep.as_linear().rows.tolist() == [[1, 1, 1]]


def test_generator_matrix_is_cyclic(rs_15_4_code):
    code = rs_15_4_code
    g = code.genmatrix
    assert g.shape == (4, 15)
    f = code.field
    # a cyclic shift of any row is still divisible by g(x)
    for t in range(code.k):
        shifted = np.roll(g[t], 1)
        poly = Polynomial(f, shifted.tolist())
        assert (poly % code.generator).is_zero()


def test_encode(rs_15_4_code):
    code = rs_15_4_code
    c = code.encode([1, 2, 3])
    assert c.shape == (15,)
    assert (Polynomial(code.field, c.tolist()) % code.generator).is_zero()
    with pytest.raises(ValueError):
        code.encode([0, 0, 0, 0, 1])


def test_as_linear_only_gf4(rs_15_4_code):
    with pytest.raises(CodingError):
        rs_15_4_code.as_linear()


def test_code_json_roundtrip(bch_15_6_code, rs_15_4_code):
    for code in (bch_15_6_code, rs_15_4_code):
        assert CyclicCode.from_json(code.to_json()) == code
    data = bch_15_6_code.to_json()
    data["generator"] = ["1"]
    with pytest.raises(CodingError):
        CyclicCode.from_json(data)


def test_maximal_factor_rs(rs_15_4_code):
    gq, zq, cof = maximal_factor(rs_15_4_code)
    # S = {6,7,8,9}, cosets meeting S: {2,8},{6,9},{7,13}; complement inside Z
    assert zq == frozenset(range(15)) - {2, 6, 7, 8, 9, 13}
    assert gq.field == GF4 and gq.degree == 9
    assert gq.lift(rs_15_4_code.field) * cof == rs_15_4_code.generator


def test_trace_code_examples(rs_15_4_code):
    t = trace_code(rs_15_4_code)
    assert t.m == 1 and t.nonzeros == {2, 6, 7, 8, 9, 13}
    # the trivial GF(4^m) code with every exponent a zero has zero trace code
    zero = code_from_zeros(CyclicCodeSpec(2, 15, set(range(15))))
    assert trace_code(zero).k == 0


def test_trace_of_codewords_lies_in_trace_code(rs_15_4_code, rng):
    code = rs_15_4_code
    f = code.field
    t = trace_code(code).as_linear()
    for _ in range(100):
        msg = rng.integers(0, f.order, code.k).tolist()
        c = code.encode(msg)
        traced = np.array([f.trace(int(x)) for x in c], dtype=np.uint8)
        assert t.contains(traced)


def test_trace_code_random_gf16(rng):
    f = make_extension_field(2)
    for _ in range(10):
        nz = frozenset(rng.choice(15, size=int(rng.integers(1, 8)), replace=False).tolist())
        code = code_from_zeros(CyclicCodeSpec.from_nonzeros(2, 15, nz))
        t = trace_code(code).as_linear()
        for _ in range(10):
            c = code.encode(rng.integers(0, f.order, code.k).tolist())
            assert t.contains(np.array([f.trace(int(x)) for x in c], dtype=np.uint8))


def test_hermitian_dual_zero_set_example():
    assert hermitian_dual_zero_set({2, 6, 7, 8, 9, 13}, 15) == {1, 3, 4, 11, 12, 14}


def test_hermitian_dual_matches_nullspace_all_n15():
    for z in all_closed_zero_sets(15):
        code = code_from_zeros(CyclicCodeSpec(1, 15, z))
        dual = hermitian_dual_code(code)
        assert dual.k == 15 - code.k
        assert dual.as_linear() == code.as_linear().hermitian_dual()


def test_hermitian_dual_brute_force_n5():
    for z in all_closed_zero_sets(5):
        code = code_from_zeros(CyclicCodeSpec(1, 5, z))
        rows = [tuple(r) for r in code.as_linear().rows.tolist()]
        expected = oracles.brute_dual(rows, 5)
        dual_rows = hermitian_dual_code(code).as_linear().rows.tolist()
        got = oracles.span(dual_rows) if dual_rows else {(0,) * 5}
        assert got == expected


def test_hermitian_dual_requires_gf4(rs_15_4_code):
    with pytest.raises(CodingError):
        hermitian_dual_code(rs_15_4_code)


def test_bch_bound_examples():
    assert bch_bound(BCH_15_6_ZEROS, 15) == 4                # longest runs {14,0,1}, {3,4,5}, {10,11,12}
    assert bch_bound({1, 3, 4, 11, 12, 14}, 15) == 3  # longest runs {3,4}, {11,12}
    assert bch_bound(set(), 7) == 1
    assert bch_bound(set(range(7)), 7) == 8
    assert bch_bound({6, 0, 1}, 7) == 4


def test_bch_bound_is_sound():
    for z in all_closed_zero_sets(15):
        code = code_from_zeros(CyclicCodeSpec(1, 15, z))
        if not 0 < code.k <= 6:
            continue
        words = oracles.span(code.as_linear().rows.tolist())
        d = min(sum(1 for x in w if x) for w in words if any(w))
        assert d >= bch_bound(z, 15)


def test_conjugate_code_same_weights(bch_15_6_code):
    lin = bch_15_6_code.as_linear()
    a = oracles.distribution(oracles.span(lin.rows.tolist()), 15)
    b = oracles.distribution(oracles.span(lin.conjugate().rows.tolist()), 15)
    assert a == b
