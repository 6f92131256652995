from itertools import product

import numpy as np
import oracles
import pytest

from qcyclic import (
    GF4,
    Basis,
    ExtElement,
    ExtField,
    FieldMismatchError,
    InvalidBasisError,
    InvalidDegreeError,
    InvalidLengthError,
    conjugate_gf4,
    expand_in_basis,
    frobenius,
    gf4,
    make_extension_field,
    polynomial_basis,
    primitive_nth_root,
    random_basis,
    trace_to_base,
)
from qcyclic.field import ext_arith, is_irreducible

# lexicographically first monic primitive moduli, constant term first,
# frozen from oracles.first_primitive (exhaustive search)
FROZEN_MODULI = {
    1: (2, 1),            # x + w
    2: (2, 1, 1),         # x^2 + x + w
    3: (2, 1, 1, 1),      # x^3 + x^2 + x + w
    4: (2, 0, 1, 1, 1),   # x^4 + x^3 + x^2 + w
}


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_modulus_matches_exhaustive_search(m):
    f = make_extension_field(m)
    assert oracles.first_primitive(m) == FROZEN_MODULI[m]
    assert f.modulus == FROZEN_MODULI[m]
    assert is_irreducible(f.modulus)
    assert oracles.order_of_x(list(f.modulus)) == 4 ** m - 1


def test_gf4_is_degenerate_extension():
    assert GF4.m == 1 and GF4.order == 4
    assert GF4.alpha == gf4.W
    assert GF4.log(gf4.W) == 0 + 1 and GF4.pow(GF4.alpha, 3) == 1


def test_invalid_degree():
    with pytest.raises(InvalidDegreeError):
        make_extension_field(0)
    with pytest.raises(InvalidDegreeError):
        ExtField((0, 1, 1))  # x^2 + x = x(x + 1) is not primitive


def test_deterministic():
    make_extension_field.cache_clear()
    a = make_extension_field(3)
    make_extension_field.cache_clear()
    assert make_extension_field(3) == a


def test_gf4_tables():
    w, W = gf4.W, gf4.WW
    assert gf4.mul(w, w) == W and gf4.mul(w, W) == 1 and gf4.mul(W, W) == w
    for a, b in product(range(4), repeat=2):
        assert gf4.mul(a, b) == oracles.gf4_mul(a, b)
        assert gf4.add(a, b) == a ^ b
    for x in range(4):
        assert gf4.add(x, x) == 0


def test_conjugation():
    assert conjugate_gf4(0) == 0 and conjugate_gf4(1) == 1
    assert conjugate_gf4(gf4.W) == gf4.WW
    for x in range(4):
        assert conjugate_gf4(conjugate_gf4(x)) == x
        assert conjugate_gf4(x) == oracles.gf4_mul(x, x)


@pytest.mark.parametrize("m", [1, 2])
def test_field_axioms_exhaustive(m):
    f = make_extension_field(m)
    q = f.order
    for a, b in product(range(q), repeat=2):
        ab = f.mul(a, b)
        assert ab == oracles.coeffs_to_int(
            oracles.ext_mul(oracles.int_to_coeffs(a, m), oracles.int_to_coeffs(b, m), list(f.modulus)))
        assert ab == f.mul(b, a)
    for a, b, c in product(range(q), repeat=3):
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
    for a in range(q):
        assert f.mul(a, 1) == a and a ^ 0 == a
        if a:
            assert f.mul(a, f.inv(a)) == 1


@pytest.mark.parametrize("m", [3, 4])
def test_field_axioms_sampled(m, rng):
    f = make_extension_field(m)
    triples = rng.integers(0, f.order, size=(10_000, 3))
    for a, b, c in triples.tolist():
        assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
        assert f.mul(a, b) == f.mul(b, a)
        assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a, b, _ in triples[:300].tolist():
        expected = oracles.ext_mul(oracles.int_to_coeffs(a, m), oracles.int_to_coeffs(b, m), list(f.modulus))
        assert f.mul(a, b) == oracles.coeffs_to_int(expected)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_fermat(m, rng):
    f = make_extension_field(m)
    xs = range(f.order) if m <= 2 else rng.integers(0, f.order, 500).tolist()
    for x in xs:
        assert f.pow(x, f.order) == x


def test_ext_arith_examples():
    f = make_extension_field(2)
    for v in range(f.order):
        x = f.element(v)
        assert ext_arith(x, x, "add").is_zero()
    w, W = GF4.element(2), GF4.element(3)
    assert ext_arith(w, W, "mul") == GF4.element(1)
    for m in (1, 2, 3, 4):
        g = make_extension_field(m)
        alpha = g.element(g.alpha)
        assert ext_arith(alpha, g.order - 1, "pow") == g.element(1)
        assert ext_arith(alpha, None, "inv") * alpha == g.element(1)


def test_ext_errors():
    f2, f3 = make_extension_field(2), make_extension_field(3)
    with pytest.raises(ZeroDivisionError):
        f2.element(0).inverse()
    with pytest.raises(FieldMismatchError):
        f2.element(1) + f3.element(1)
    with pytest.raises(FieldMismatchError):
        f2.element(1) * f3.element(1)


@pytest.mark.parametrize("m", [1, 2])
def test_frobenius_is_fourth_power_exhaustive(m):
    f = make_extension_field(m)
    for v in range(f.order):
        x = f.element(v)
        assert frobenius(x) == x * x * x * x
        y = x
        for _ in range(m):
            y = frobenius(y)
        assert y == x


@pytest.mark.parametrize("m", [2, 3, 4])
def test_frobenius_fixed_field_and_roots(m, rng):
    f = make_extension_field(m)
    fixed = [v for v in range(f.order) if f.frobenius(v) == v]
    assert fixed == [0, 1, 2, 3]
    for v in rng.integers(0, f.order, 100).tolist():
        y = v
        for _ in range(m):
            y = f.frobenius(y)
        assert y == v
    n = f.order - 1
    gamma = primitive_nth_root(f, n)
    for z in range(n):
        assert frobenius(gamma ** z) == gamma ** ((4 * z) % n)


def test_trace_examples():
    f = make_extension_field(2)
    assert trace_to_base(f.element(0)) == 0
    assert trace_to_base(f.element(1)) == 0


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_trace_surjective_balanced(m):
    f = make_extension_field(m)
    counts = np.bincount([f.trace(v) for v in range(f.order)], minlength=4)
    assert counts.tolist() == [4 ** (m - 1)] * 4


@pytest.mark.parametrize("m", [2, 3, 4])
def test_trace_linear(m, rng):
    f = make_extension_field(m)
    for a, x, y in zip(rng.integers(0, 4, 500), rng.integers(0, f.order, 500), rng.integers(0, f.order, 500)):
        a, x, y = int(a), int(x), int(y)
        assert f.trace(f.mul(a, x) ^ y) == gf4.mul(a, f.trace(x)) ^ f.trace(y)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_primitive_nth_root(m):
    f = make_extension_field(m)
    assert primitive_nth_root(f, f.order - 1).value == f.alpha
    assert primitive_nth_root(f, 1).value == 1
    for n in [d for d in range(1, f.order) if (f.order - 1) % d == 0]:
        g = primitive_nth_root(f, n)
        powers = [g ** j for j in range(1, n + 1)]
        assert powers[-1].value == 1
        assert all(p.value != 1 for p in powers[:-1])


def test_primitive_root_order_15():
    f = make_extension_field(2)
    gamma = primitive_nth_root(f, 15)
    assert gamma.value == f.alpha
    x = f.element(1)
    for j in range(1, 16):
        x = x * gamma
        assert (x.value == 1) == (j == 15)


def test_primitive_root_bad_length():
    with pytest.raises(InvalidLengthError):
        primitive_nth_root(make_extension_field(2), 7)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_basis_roundtrip(m, rng):
    f = make_extension_field(m)
    bases = [polynomial_basis(f)] + [random_basis(f, rng) for _ in range(3)]
    for b in bases:
        for j, beta in enumerate(b.elements):
            assert b.expand(beta) == tuple(1 if i == j else 0 for i in range(m))
        assert b.expand(0) == (0,) * m
        values = range(f.order) if m <= 2 else rng.integers(0, f.order, 300).tolist()
        for v in values:
            assert b.recombine(expand_in_basis(f.element(v), b)) == v


def test_polynomial_basis_readoff():
    for m in (2, 3, 4):
        f = make_extension_field(m)
        x = f.mul(gf4.W, f.alpha)
        assert polynomial_basis(f).expand(x) == (0, gf4.W) + (0,) * (m - 2)


def test_dependent_basis_rejected():
    f = make_extension_field(2)
    with pytest.raises(InvalidBasisError):
        Basis(f, [1, 2])  # 1 and w are GF(4)-proportional
    with pytest.raises(InvalidBasisError):
        Basis(f, [f.alpha])


def test_field_json_roundtrip():
    for m in (1, 2, 3, 4):
        f = make_extension_field(m)
        data = f.to_json()
        assert data["m"] == m
        assert ExtField.from_json(data) == f
    assert make_extension_field(2).to_json() == {"m": 2, "modulus": ["w", "1", "1"]}


def test_element_coeffs():
    f = make_extension_field(3)
    x = ExtElement(f, f.from_coords([1, 0, gf4.WW]))
    assert x.coeffs == (1, 0, 3)
