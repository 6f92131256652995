"""Univariate polynomials over GF(4) or GF(4^m).

Coefficients are integer-encoded field elements, constant term first, with
trailing zeros stripped. The zero polynomial has degree ``-inf``.
"""
import math

import numpy as np

from . import gf4
from .errors import FieldMismatchError, InvalidLengthError
from .field import GF4, ExtElement

ZERO_DEGREE = -math.inf


def _strip(coeffs):
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Polynomial:
    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        self.field = field
        self.coeffs = _strip(coeffs)
        for c in self.coeffs:
            field.check(c)

    @classmethod
    def monomial(cls, field, degree, coeff=1):
        return cls(field, [0] * degree + [coeff])

    @classmethod
    def xn_minus_1(cls, field, n):
        return cls(field, [1] + [0] * (n - 1) + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self):
        return not self.coeffs

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if self.field.m == 1:
            body = gf4.to_string(self.coeffs) or "0"
        else:
            body = ",".join(map(str, self.coeffs)) or "0"
        return f"Polynomial(m={self.field.m}, [{body}])"

    def _check(self, other):
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected a Polynomial, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError("polynomials have different coefficient fields")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field, [self[i] ^ other[i] for i in range(n)])

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.field, [self.field.mul(other, c) for c in self.coeffs])
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial(self.field)
        b = np.array(other.coeffs, dtype=np.int64)
        out = np.zeros(len(self.coeffs) + len(b) - 1, dtype=np.int64)
        for i, a in enumerate(self.coeffs):
            if a:
                out[i:i + len(b)] ^= self.field.mul_array(a, b)
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        f = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        if len(rem) - 1 < db:
            return Polynomial(f), self
        quot = [0] * (len(rem) - db)
        lead_inv = f.inv(other.lead)
        b = np.array(other.coeffs, dtype=np.int64)
        rem = np.array(rem, dtype=np.int64)
        for shift in range(len(rem) - 1 - db, -1, -1):
            c = int(rem[shift + db])
            if c:
                c = f.mul(c, lead_inv)
                quot[shift] = c
                rem[shift:shift + db + 1] ^= f.mul_array(c, b)
        return Polynomial(f, quot), Polynomial(f, rem[:db])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self):
        if self.is_zero():
            return self
        return self * self.field.inv(self.lead)

    def mod_xn_minus_1(self, n):
        """Reduce modulo x^n - 1 by folding exponent i onto i mod n."""
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            out[i % n] ^= c
        return Polynomial(self.field, out)

    def __call__(self, x):
        return poly_eval(self, x)

    def evaluate_int(self, field, x):
        """Horner evaluation at an integer-encoded element of ``field``.

        ``field`` must equal the coefficient field, or the coefficients must
        be GF(4) symbols (which are constants in every extension).
        """
        if field != self.field and self.field.m != 1:
            raise FieldMismatchError("coefficients do not embed into the evaluation field")
        acc = 0
        for c in reversed(self.coeffs):
            acc = field.mul(acc, x) ^ c
        return acc

    def project_to_gf4(self):
        """Re-home a polynomial whose coefficients lie in the GF(4) subfield."""
        if any(c > 3 for c in self.coeffs):
            raise ValueError("coefficients do not lie in GF(4)")
        return Polynomial(GF4, self.coeffs)

    def lift(self, field):
        """View GF(4) coefficients as constants of ``field``."""
        if self.field == field:
            return self
        if self.field.m != 1:
            raise FieldMismatchError("only GF(4) polynomials can be lifted")
        return Polynomial(field, self.coeffs)

    def to_json(self):
        if self.field.m == 1:
            return [gf4.symbol(c) for c in self.coeffs]
        return [[gf4.symbol(d) for d in self.field.coords(c)] for c in self.coeffs]

    @classmethod
    def from_json(cls, field, data):
        if field.m == 1:
            return cls(field, [gf4.parse_symbol(s) for s in data])
        return cls(field, [field.from_coords([gf4.parse_symbol(s) for s in c]) for c in data])


def poly_gcd(f, g):
    """Monic gcd; gcd(f, 0) is monic f and gcd(0, 0) is 0."""
    f._check(g)
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_arith(f, g, op, n=None):
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "divmod":
        return divmod(f, g)
    if op == "gcd":
        return poly_gcd(f, g)
    if op == "mod_xn_minus_1":
        return f.mod_xn_minus_1(n)
    raise ValueError(f"unknown operation {op!r}")


def poly_eval(f, x):
    """Evaluate at an :class:`ExtElement`; GF(4) coefficients embed as constants."""
    return ExtElement(x.field, f.evaluate_int(x.field, x.value))


def poly_from_roots(exponents, gamma, n):
    """The monic product of (x - gamma^z) over z in ``exponents``, over gamma's field."""
    field = gamma.field
    result = Polynomial(field, [1])
    for z in sorted(exponents):
        if not 0 <= z < n:
            raise ValueError(f"exponent {z} outside 0..{n - 1}")
        root = field.pow(gamma.value, z)
        result = result * Polynomial(field, [root, 1])
    return result


def dagger(g, n):
    """g^dagger = gcd(conj(g_0) + sum_{r=1}^{n-1} conj(g_{n-r}) x^r, x^n - 1) over GF(4)."""
    if g.field.m != 1:
        raise FieldMismatchError("dagger is defined for GF(4) polynomials only")
    if g.degree >= n:
        raise InvalidLengthError(f"deg g = {g.degree} must be below n = {n}")
    conj = gf4.CONJ
    reversal = [int(conj[g[0]])] + [int(conj[g[n - r]]) for r in range(1, n)]
    return poly_gcd(Polynomial(GF4, reversal), Polynomial.xn_minus_1(GF4, n))
