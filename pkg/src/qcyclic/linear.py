"""Linear algebra over GF(4) on ``uint8`` numpy arrays, and linear codes.

All matrices hold GF(4) symbols in the 0..3 encoding of :mod:`qcyclic.gf4`.
"""
from dataclasses import dataclass, field

import numpy as np

from . import gf4


def as_gf4_array(a):
    arr = np.asarray(a, dtype=np.uint8)
    if arr.size and arr.max() > 3:
        raise ValueError("GF(4) arrays hold values 0..3 only")
    return arr


def conj(a):
    return gf4.CONJ[np.asarray(a, dtype=np.uint8)]


def scale(c, a):
    return gf4.MUL[c, np.asarray(a, dtype=np.uint8)]


def matmul(a, b):
    """Matrix product over GF(4).

    Splits both operands into GF(2) bit planes, x = x0 + x1*w, and uses
    (x0 + x1 w)(y0 + y1 w) = (x0 y0 + x1 y1) + (x0 y1 + x1 y0 + x1 y1) w.
    """
    a = np.asarray(a, dtype=np.uint8)
    b = np.asarray(b, dtype=np.uint8)
    a0, a1 = (a & 1).astype(np.int64), (a >> 1).astype(np.int64)
    b0, b1 = (b & 1).astype(np.int64), (b >> 1).astype(np.int64)
    p00, p01 = a0 @ b0, a0 @ b1
    p10, p11 = a1 @ b0, a1 @ b1
    c0 = (p00 + p11) & 1
    c1 = (p01 + p10 + p11) & 1
    return (c0 | (c1 << 1)).astype(np.uint8)


def hermitian_gram(a, b):
    """Matrix of hermitian products <a_i, b_j> = sum_l a_il * b_jl^2."""
    return matmul(a, conj(b).T)


def rref(a):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` where ``rows`` holds only the nonzero rows
    (so ``len(rows)`` is the rank) and ``pivots[i]`` is the pivot column of
    row ``i``. Pivots are chosen left to right, first available row first,
    so the output is canonical for the row space.
    """
    m = np.array(a, dtype=np.uint8, copy=True)
    if m.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    nrows, ncols = m.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = gf4.MUL[gf4.INV[m[r, c]], m[r]]
        factors = m[:, c].copy()
        factors[r] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            m[rows] ^= gf4.MUL[factors[rows, None], m[r][None, :]]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(a):
    return len(rref(a)[1])


def inverse(a):
    a = np.asarray(a, dtype=np.uint8)
    n = a.shape[0]
    if a.shape != (n, n):
        raise ValueError("inverse expects a square matrix")
    aug = np.concatenate([a, np.eye(n, dtype=np.uint8)], axis=1)
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ValueError("matrix is singular over GF(4)")
    return rows[:, n:]


def nullspace(a):
    """Basis (as rows) of {x : a @ x = 0} over GF(4)."""
    a = np.asarray(a, dtype=np.uint8)
    ncols = a.shape[1]
    rows, pivots = rref(a) if a.shape[0] else (np.zeros((0, ncols), np.uint8), [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.uint8)
    for i, f in enumerate(free):
        basis[i, f] = 1
        # x_pivot = -sum(row[f] * x_f) and -1 = 1 in characteristic 2
        for r, p in enumerate(pivots):
            basis[i, p] = rows[r, f]
    return basis


def reduce_vector(rows, pivots, v):
    """Remainder of ``v`` after elimination against an rref basis."""
    v = np.array(v, dtype=np.uint8, copy=True)
    for r, p in enumerate(pivots):
        if v[p]:
            v ^= gf4.MUL[v[p], rows[r]]
    return v


def weight(v):
    return int(np.count_nonzero(v))


@dataclass(eq=False)
class LinearCodeMatrix:
    """A linear code over GF(4) held as a canonical rref generator matrix.

    Build instances with :meth:`from_generators`, which row-reduces an
    arbitrary spanning set; the constructor trusts its input.
    """

    rows: np.ndarray
    n: int
    pivots: list = field(default_factory=list)
    origin: dict = field(default_factory=dict)

    @classmethod
    def from_generators(cls, generators, n=None, origin=None):
        g = np.asarray(generators, dtype=np.uint8)
        if g.ndim == 1:
            g = g.reshape(1, -1) if g.size else g.reshape(0, n or 0)
        if n is None:
            n = g.shape[1]
        if g.shape[0] == 0:
            return cls(np.zeros((0, n), dtype=np.uint8), n, [], dict(origin or {}))
        rows, pivots = rref(g)
        return cls(rows, n, pivots, dict(origin or {}))

    @property
    def k(self):
        return self.rows.shape[0]

    @property
    def size(self):
        return 4 ** self.k

    def __eq__(self, other):
        if not isinstance(other, LinearCodeMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.rows, other.rows)

    def __repr__(self):
        return f"LinearCodeMatrix(n={self.n}, k={self.k})"

    def contains(self, v):
        v = np.asarray(v, dtype=np.uint8)
        if v.shape != (self.n,):
            raise ValueError(f"expected a vector of length {self.n}")
        return not reduce_vector(self.rows, self.pivots, v).any()

    def encode(self, message):
        return matmul(np.asarray(message, dtype=np.uint8)[None, :], self.rows)[0]

    def hermitian_dual(self):
        """The dual under <u, v> = sum u_i v_i^2.

        v is in the dual iff G @ conj(v) = 0, so the dual is the conjugate
        of the ordinary nullspace of G.
        """
        if self.k == 0:
            basis = np.eye(self.n, dtype=np.uint8)
        else:
            basis = conj(nullspace(self.rows))
        return LinearCodeMatrix.from_generators(
            basis, n=self.n, origin={"hermitian_dual_of": dict(self.origin)}
        )

    def conjugate(self):
        return LinearCodeMatrix.from_generators(conj(self.rows), n=self.n, origin=dict(self.origin))

    def to_json(self):
        return {
            "n": self.n,
            "k": self.k,
            "rows": [gf4.to_string(r) for r in self.rows],
            "origin": self.origin,
        }

    @classmethod
    def from_json(cls, data):
        rows = [gf4.from_string(r) for r in data["rows"]]
        g = np.array(rows, dtype=np.uint8).reshape(len(rows), data["n"])
        code = cls.from_generators(g, n=data["n"], origin=data.get("origin", {}))
        if code.k != data.get("k", code.k):
            raise ValueError("rows are not linearly independent")
        return code
