"""GF(4^m) as an m-dimensional vector space over GF(4).

An element is stored as an integer whose base-4 digits are its coordinates
in the polynomial basis {1, alpha, ..., alpha^(m-1)}: digit j holds the
GF(4) coefficient of alpha^j. Addition is therefore XOR, and the GF(4)
subfield is exactly the integers 0..3. Multiplication goes through
log/antilog tables built from the primitive element alpha.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import gf4, linear
from .errors import (
    FieldMismatchError,
    InvalidBasisError,
    InvalidDegreeError,
    InvalidLengthError,
)

MAX_DEGREE = 5


def _mul_by_x(value, modulus, m):
    """Multiply a polynomial-basis element by x and reduce mod ``modulus``."""
    shifted = value << 2
    top = shifted >> (2 * m)
    shifted &= (1 << (2 * m)) - 1
    if top:
        for j in range(m):
            if modulus[j]:
                shifted ^= gf4.mul(top, modulus[j]) << (2 * j)
    return shifted


def _order_of_x(modulus):
    """Multiplicative order of x modulo ``modulus``, or None if x is not a unit
    of order dividing 4^m - 1 (i.e. the modulus cannot be primitive)."""
    m = len(modulus) - 1
    if modulus[0] == 0:
        return None
    e = 1
    for i in range(1, 4 ** m):
        e = _mul_by_x(e, modulus, m)
        if e == 1:
            return i
    return None


def _gf4_poly_rem(a, b):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    db = len(b) - 1
    lead_inv = gf4.inv(b[-1])
    while len(a) - 1 >= db and a:
        c = gf4.mul(a[-1], lead_inv)
        shift = len(a) - 1 - db
        for i, bi in enumerate(b):
            a[shift + i] ^= gf4.mul(c, bi)
        while a and a[-1] == 0:
            a.pop()
    return a


def is_irreducible(modulus):
    """Trial division by every monic GF(4) polynomial of degree <= m/2."""
    m = len(modulus) - 1
    if m < 1 or modulus[-1] == 0:
        return False
    for d in range(1, m // 2 + 1):
        for low in product(range(4), repeat=d):
            if not _gf4_poly_rem(modulus, list(low) + [1]):
                return False
    return True


class ExtField:
    """The field GF(4^m) = GF(4)[x] / (modulus).

    ``modulus`` is a monic primitive polynomial given as GF(4) coefficients,
    constant term first. Instances are normally obtained from
    :func:`make_extension_field`.
    """

    def __init__(self, modulus):
        modulus = tuple(int(c) for c in modulus)
        m = len(modulus) - 1
        if m < 1 or modulus[-1] != 1:
            raise InvalidDegreeError("modulus must be monic of degree >= 1")
        self.m = m
        self.modulus = modulus
        self.order = 4 ** m
        n = self.order - 1
        exp = np.zeros(n, dtype=np.int64)
        log = np.full(self.order, -1, dtype=np.int64)
        e = 1
        for i in range(n):
            if log[e] != -1:
                raise InvalidDegreeError(f"modulus {modulus} is not primitive")
            exp[i] = e
            log[e] = i
            e = _mul_by_x(e, modulus, m)
        if e != 1:
            raise InvalidDegreeError(f"modulus {modulus} is not primitive")
        self._exp = exp
        self._log = log
        self.alpha = int(exp[1 % n]) if n > 1 else int(exp[0])

    def __eq__(self, other):
        return isinstance(other, ExtField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"ExtField(m={self.m}, modulus={gf4.to_string(self.modulus)})"

    # scalar arithmetic on integer-encoded elements

    def check(self, a):
        if not 0 <= a < self.order:
            raise ValueError(f"{a} is not an element of GF(4^{self.m})")
        return a

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return int(self._exp[(self._log[a] + self._log[b]) % (self.order - 1)])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self._exp[(-self._log[a]) % (self.order - 1)])

    def pow(self, a, e):
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            return 1 if e == 0 else 0
        return int(self._exp[(self._log[a] * e) % (self.order - 1)])

    def alpha_pow(self, e):
        return int(self._exp[e % (self.order - 1)])

    def log(self, a):
        if a == 0:
            raise ValueError("log of 0")
        return int(self._log[a])

    def frobenius(self, a):
        """a^4, the generator of Gal(GF(4^m)/GF(4))."""
        return self.pow(a, 4)

    def trace(self, a):
        """a + a^4 + ... + a^(4^(m-1)), an element of GF(4)."""
        t = 0
        x = a
        for _ in range(self.m):
            t ^= x
            x = self.frobenius(x)
        assert t < 4, "trace left the GF(4) subfield"
        return t

    def coords(self, a):
        """Polynomial-basis coordinates (constant first) as GF(4) ints."""
        return tuple((a >> (2 * j)) & 3 for j in range(self.m))

    def from_coords(self, coords):
        if len(coords) != self.m:
            raise ValueError(f"expected {self.m} coordinates")
        value = 0
        for j, c in enumerate(coords):
            value |= (int(c) & 3) << (2 * j)
        return value

    def mul_array(self, a, b):
        """Elementwise product of integer-encoded arrays (broadcasting)."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        nz = (a != 0) & (b != 0)
        idx = (self._log[a] + self._log[b]) % (self.order - 1)
        return np.where(nz, self._exp[idx], 0)

    def coords_array(self, a):
        """Polynomial-basis coordinates of an array of elements, shape (..., m)."""
        a = np.asarray(a, dtype=np.int64)
        shifts = 2 * np.arange(self.m)
        return ((a[..., None] >> shifts) & 3).astype(np.uint8)

    def element(self, value):
        return ExtElement(self, self.check(int(value)))

    def elements(self):
        return [ExtElement(self, v) for v in range(self.order)]

    def to_json(self):
        return {"m": self.m, "modulus": [gf4.symbol(c) for c in self.modulus]}

    @staticmethod
    def from_json(data):
        f = ExtField([gf4.parse_symbol(s) for s in data["modulus"]])
        if f.m != data["m"]:
            raise ValueError("modulus degree does not match m")
        return f


@lru_cache(maxsize=None)
def make_extension_field(m):
    """GF(4^m) with the lexicographically smallest monic primitive modulus.

    Candidates are compared on their coefficients constant term first with
    symbol order 0 < 1 < w < W. For m = 1 this yields x + w, i.e. GF(4)
    itself with alpha = w.
    """
    if not isinstance(m, (int, np.integer)) or m < 1:
        raise InvalidDegreeError(f"extension degree must be a positive integer, got {m!r}")
    if m > MAX_DEGREE:
        raise InvalidDegreeError(f"extension degree {m} exceeds supported maximum {MAX_DEGREE}")
    target = 4 ** m - 1
    for low in product(range(4), repeat=m):
        modulus = tuple(low) + (1,)
        if _order_of_x(modulus) == target:
            return ExtField(modulus)
    raise AssertionError(f"no primitive polynomial of degree {m} found")


GF4 = make_extension_field(1)


@dataclass(frozen=True)
class ExtElement:
    """An element of a specific GF(4^m), with operator overloads.

    Library internals work on the raw integer encoding; this wrapper is the
    checked public surface (mixed-field operands raise).
    """

    field: ExtField
    value: int

    def _same(self, other):
        if not isinstance(other, ExtElement):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatchError(f"operands live in {self.field} and {other.field}")
        return other

    def __add__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.field, self.value ^ other.value)

    __sub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.field, self.field.mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._same(other)
        if other is NotImplemented:
            return other
        return ExtElement(self.field, self.field.mul(self.value, self.field.inv(other.value)))

    def __pow__(self, e):
        return ExtElement(self.field, self.field.pow(self.value, int(e)))

    def inverse(self):
        return ExtElement(self.field, self.field.inv(self.value))

    def is_zero(self):
        return self.value == 0

    @property
    def coeffs(self):
        return self.field.coords(self.value)

    def __repr__(self):
        return f"ExtElement(m={self.field.m}, {gf4.to_string(self.coeffs)})"


def ext_arith(a, b, op):
    """Dispatch ``op`` in {"add", "mul", "inv", "pow"}; for pow ``b`` is an int."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** b
    raise ValueError(f"unknown operation {op!r}")


def frobenius(x):
    return ExtElement(x.field, x.field.frobenius(x.value))


def trace_to_base(x):
    """Absolute trace GF(4^m) -> GF(4); returns a GF(4) int."""
    return x.field.trace(x.value)


def primitive_nth_root(spec, n):
    """gamma = alpha^((4^m - 1)/n), an element of order exactly n."""
    if n < 1 or (spec.order - 1) % n:
        raise InvalidLengthError(f"n={n} does not divide 4^{spec.m} - 1 = {spec.order - 1}")
    return ExtElement(spec, spec.alpha_pow((spec.order - 1) // n))


def multiplicative_order(q, n):
    """Smallest e >= 1 with q^e = 1 mod n."""
    if n == 1:
        return 1
    if np.gcd(q, n) != 1:
        raise InvalidLengthError(f"gcd({q}, {n}) != 1")
    e, x = 1, q % n
    while x != 1:
        x = (x * q) % n
        e += 1
    return e


class Basis:
    """A GF(4)-basis B = (beta_1, ..., beta_m) of GF(4^m).

    ``expansion_matrix`` maps polynomial-basis coordinates to B-coordinates:
    ``expand(x) = expansion_matrix @ coords(x)``.
    """

    def __init__(self, field, elements):
        elements = tuple(int(e.value if isinstance(e, ExtElement) else e) for e in elements)
        if len(elements) != field.m:
            raise InvalidBasisError(f"a basis of GF(4^{field.m}) needs {field.m} elements")
        for e in elements:
            field.check(e)
        self.field = field
        self.elements = elements
        # column j holds the polynomial-basis coordinates of beta_j
        to_poly = np.array([field.coords(e) for e in elements], dtype=np.uint8).T
        try:
            self.expansion_matrix = linear.inverse(to_poly)
        except ValueError:
            raise InvalidBasisError("basis elements are linearly dependent over GF(4)") from None
        self._to_poly = to_poly
        all_coords = field.coords_array(np.arange(field.order))
        self._table = linear.matmul(all_coords, self.expansion_matrix.T)

    def __eq__(self, other):
        return isinstance(other, Basis) and other.field == self.field and other.elements == self.elements

    def __repr__(self):
        return f"Basis(m={self.field.m}, {self.to_rows()})"

    def expand(self, x):
        value = x.value if isinstance(x, ExtElement) else int(x)
        if isinstance(x, ExtElement) and x.field != self.field:
            raise FieldMismatchError("element and basis belong to different fields")
        return tuple(int(c) for c in self._table[value])

    def expand_array(self, values):
        """B-coordinates of an integer array of elements, shape (..., m)."""
        return self._table[np.asarray(values, dtype=np.int64)]

    def recombine(self, coords):
        """sum_j coords[j] * beta_j as an integer-encoded element."""
        total = 0
        for c, beta in zip(coords, self.elements):
            total ^= self.field.mul(int(c), beta)
        return total

    def to_rows(self):
        """Basis as m strings of polynomial-basis coordinate symbols."""
        return [gf4.to_string(self.field.coords(e)) for e in self.elements]

    @classmethod
    def from_rows(cls, field, rows):
        if len(rows) != field.m or any(len(r) != field.m for r in rows):
            raise InvalidBasisError(f"basis must be a {field.m}x{field.m} matrix of GF(4) symbols")
        return cls(field, [field.from_coords([gf4.parse_symbol(c) for c in r]) for r in rows])


def polynomial_basis(field):
    return Basis(field, [field.from_coords([1 if i == j else 0 for i in range(field.m)])
                         for j in range(field.m)])


def random_basis(field, rng):
    """Uniformly random basis, drawn by rejection from random m-tuples."""
    while True:
        elems = [int(v) for v in rng.integers(1, field.order, size=field.m)]
        try:
            return Basis(field, elems)
        except InvalidBasisError:
            continue


def expand_in_basis(x, basis):
    return basis.expand(x)
