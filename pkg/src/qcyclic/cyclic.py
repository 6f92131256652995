"""Cyclic codes over GF(4) and GF(4^m) described by zero sets.

A code of length n over GF(4^m) is fixed by a zero set Z in {0..n-1}
relative to a primitive n-th root of unity gamma; its generator is
prod_{z in Z} (x - gamma^z). For m > 1 gamma lives in GF(4^m) itself
(n must divide 4^m - 1). For m = 1 the roots live in the splitting field
GF(4^e), e = ord_n(4), and Z must be a union of 4-cyclotomic cosets.
"""
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import CodingError, InvalidLengthError
from .field import (
    ExtElement,
    ExtField,
    make_extension_field,
    multiplicative_order,
    primitive_nth_root,
)
from .linear import LinearCodeMatrix
from .poly import Polynomial, poly_from_roots


@dataclass(frozen=True)
class CosetPartition:
    n: int
    q: int
    cosets: tuple

    def coset_of(self, z):
        return self._index()[z]

    def _index(self):
        idx = {}
        for c in self.cosets:
            for z in c:
                idx[z] = c
        return idx

    def closure(self, s):
        """Union of every coset meeting ``s``."""
        idx = self._index()
        out = set()
        for z in s:
            out.update(idx[z])
        return frozenset(out)

    def inner(self, z):
        """Union of the cosets wholly contained in ``z``."""
        z = set(z)
        return frozenset(x for c in self.cosets if set(c) <= z for x in c)

    def is_closed(self, s):
        return self.closure(s) == frozenset(s)

    def to_json(self):
        return {"n": self.n, "q": self.q, "cosets": [list(c) for c in self.cosets]}


@lru_cache(maxsize=None)
def cyclotomic_cosets(n, q=4):
    """Orbits of z -> q*z mod n on {0..n-1}, each sorted, ordered by minimum."""
    if n < 1:
        raise InvalidLengthError("n must be positive")
    if gcd(q, n) != 1:
        raise InvalidLengthError(f"gcd({q}, {n}) != 1: cosets do not partition Z_n")
    seen = set()
    cosets = []
    for s in range(n):
        if s in seen:
            continue
        orbit = []
        z = s
        while z not in orbit:
            orbit.append(z)
            z = (z * q) % n
        seen.update(orbit)
        cosets.append(tuple(sorted(orbit)))
    return CosetPartition(n, q, tuple(cosets))


def coset_closure(s, partition):
    return partition.closure(s)


def _check_subset(s, n, what):
    s = frozenset(int(z) for z in s)
    bad = [z for z in s if not 0 <= z < n]
    if bad:
        raise CodingError(f"{what} {sorted(bad)} outside 0..{n - 1}")
    return s


@dataclass(frozen=True)
class CyclicCodeSpec:
    """Length ``n`` cyclic code over GF(4^m) with zero set ``zeros``."""

    m: int
    n: int
    zeros: frozenset

    def __post_init__(self):
        object.__setattr__(self, "zeros", _check_subset(self.zeros, self.n, "zeros"))
        if self.n < 1 or self.n % 2 == 0:
            raise InvalidLengthError(f"length must be odd and positive, got {self.n}")
        if self.m > 1 and (4 ** self.m - 1) % self.n:
            raise InvalidLengthError(f"n={self.n} does not divide 4^{self.m} - 1")
        if self.m == 1 and not cyclotomic_cosets(self.n).is_closed(self.zeros):
            raise CodingError("zero set of a GF(4) code must be a union of cyclotomic cosets")

    @classmethod
    def from_nonzeros(cls, m, n, nonzeros):
        s = _check_subset(nonzeros, n, "nonzeros")
        return cls(m, n, frozenset(range(n)) - s)

    @property
    def nonzeros(self):
        return frozenset(range(self.n)) - self.zeros

    @property
    def field(self):
        return make_extension_field(self.m)

    @property
    def root_degree(self):
        return self.m if self.m > 1 else multiplicative_order(4, self.n)

    def to_json(self):
        return {"m": self.m, "n": self.n, "zeros": sorted(self.zeros)}

    @classmethod
    def from_json(cls, data):
        if ("zeros" in data) == ("nonzeros" in data):
            raise CodingError("code descriptor needs exactly one of zeros / nonzeros")
        if "zeros" in data:
            return cls(data["m"], data["n"], frozenset(data["zeros"]))
        return cls.from_nonzeros(data["m"], data["n"], data["nonzeros"])


class CyclicCode:
    """A constructed cyclic code: generator polynomial, root gamma, generator matrix."""

    def __init__(self, spec, generator, gamma):
        self.spec = spec
        self.generator = generator
        self.gamma = gamma

    @property
    def n(self):
        return self.spec.n

    @property
    def m(self):
        return self.spec.m

    @property
    def field(self):
        return self.spec.field

    @property
    def k(self):
        return self.spec.n - len(self.spec.zeros)

    @property
    def zeros(self):
        return self.spec.zeros

    @property
    def nonzeros(self):
        return self.spec.nonzeros

    @property
    def genmatrix(self):
        """k x n integer array whose row t is the coefficient vector of x^t g(x)."""
        g = np.array(self.generator.coeffs, dtype=np.int64)
        rows = np.zeros((self.k, self.n), dtype=np.int64)
        for t in range(self.k):
            rows[t, t:t + len(g)] = g
        return rows

    def encode(self, message):
        """Codeword vector of m(x) g(x) for a message polynomial of degree < k."""
        msg = message if isinstance(message, Polynomial) else Polynomial(self.field, message)
        if msg.degree >= self.k:
            raise ValueError("message degree must be below k")
        c = (msg * self.generator).coeffs
        return np.array(list(c) + [0] * (self.n - len(c)), dtype=np.int64)

    def as_linear(self):
        """The code as a GF(4) :class:`LinearCodeMatrix` (m = 1 only)."""
        if self.m != 1:
            raise CodingError("only GF(4) cyclic codes convert directly; use image_code")
        return LinearCodeMatrix.from_generators(
            self.genmatrix.astype(np.uint8), n=self.n,
            origin={"cyclic": self.spec.to_json()},
        )

    def __eq__(self, other):
        return (isinstance(other, CyclicCode) and self.spec == other.spec
                and self.generator == other.generator and self.gamma == other.gamma)

    def __repr__(self):
        return f"CyclicCode(m={self.m}, n={self.n}, k={self.k})"

    def to_json(self):
        out = self.spec.to_json()
        out.update(
            nonzeros=sorted(self.nonzeros),
            k=self.k,
            root_field=self.gamma.field.to_json(),
            gamma=self.gamma.field.log(self.gamma.value),
            generator=self.generator.to_json(),
        )
        return out

    @classmethod
    def from_json(cls, data):
        spec = CyclicCodeSpec(data["m"], data["n"], frozenset(data["zeros"]))
        gamma = None
        if "root_field" in data:
            root = ExtField.from_json(data["root_field"])
            gamma = ExtElement(root, root.alpha_pow(data["gamma"]))
        code = code_from_zeros(spec, gamma=gamma)
        if "generator" in data and Polynomial.from_json(code.field, data["generator"]) != code.generator:
            raise CodingError("generator does not match the zero set")
        return code


def _default_gamma(spec):
    return primitive_nth_root(make_extension_field(spec.root_degree), spec.n)


def code_from_zeros(spec, gamma=None):
    """Build the code; ``gamma`` overrides the default root alpha^((4^e - 1)/n)."""
    if gamma is None:
        gamma = _default_gamma(spec)
    g = poly_from_roots(spec.zeros, gamma, spec.n)
    if spec.m == 1:
        g = g.project_to_gf4()
    elif gamma.field != spec.field:
        raise CodingError("gamma must lie in the code's field for m > 1")
    return CyclicCode(spec, g, gamma)


def maximal_factor(code, partition=None):
    """Return ``(g_q, Z_q, g_q_prime)``: the largest GF(4) factor of g, its
    zero set (union of cosets inside Z) and the cofactor g / g_q."""
    if partition is None:
        partition = cyclotomic_cosets(code.n)
    zq = partition.inner(code.zeros)
    gq_full = poly_from_roots(zq, code.gamma, code.n)
    if any(c > 3 for c in gq_full.coeffs):
        raise AssertionError("maximal factor has coefficients outside GF(4)")
    gq = gq_full.project_to_gf4()
    quot, rem = divmod(code.generator, gq.lift(code.field))
    assert rem.is_zero(), "g_q does not divide g"
    return gq, zq, quot


def trace_code(code, partition=None):
    """T_m(C): the GF(4) cyclic code generated by the maximal factor g_q."""
    _, zq, _ = maximal_factor(code, partition)
    return code_from_zeros(CyclicCodeSpec(1, code.n, zq), gamma=code.gamma)


def hermitian_dual_zero_set(nonzeros, n):
    """{-2s mod n : s in S}: zeros of the hermitian dual of a GF(4) cyclic code."""
    return frozenset((-2 * s) % n for s in nonzeros)


def hermitian_dual_code(code):
    if code.m != 1:
        raise CodingError("hermitian duals are taken of GF(4) codes")
    spec = CyclicCodeSpec(1, code.n, hermitian_dual_zero_set(code.nonzeros, code.n))
    return code_from_zeros(spec, gamma=code.gamma)


def bch_bound(zeros, n):
    """1 + length of the longest run of cyclically consecutive exponents in ``zeros``."""
    zeros = set(z % n for z in zeros)
    if len(zeros) == n:
        return n + 1
    best = 0
    for start in zeros:
        if (start - 1) % n in zeros:
            continue
        run = 0
        while (start + run) % n in zeros:
            run += 1
        best = max(best, run)
    return best + 1
