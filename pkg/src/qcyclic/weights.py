"""Weight distributions, MacWilliams transform and minimum-weight searches.

Codewords are enumerated in a bit-sliced form: a GF(4) vector is two GF(2)
planes (coefficient of 1, coefficient of w) packed into uint64 words, so
adding codewords is XOR and the Hamming weight is popcount(plane0 | plane1).
The 4^k codewords are formed as L[i] ^ R[j] with L, R spanning the first
and last rows of the generator matrix.
"""
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb

import numpy as np

from . import gf4
from .errors import BudgetError
from .linear import LinearCodeMatrix

DEFAULT_MAX_ENUM = 2 ** 24
DEFAULT_MAX_CANDIDATES = 10 ** 8
_INT64_MAX = 2 ** 63 - 1
_BLOCK_ELEMS = 1 << 21


@dataclass(frozen=True)
class WeightDistribution:
    n: int
    counts: tuple

    def __post_init__(self):
        if len(self.counts) != self.n + 1:
            raise ValueError("a weight distribution has n + 1 entries")

    @property
    def total(self):
        return sum(self.counts)

    def min_nonzero_weight(self):
        for w in range(1, self.n + 1):
            if self.counts[w]:
                return w
        return None

    def to_json(self):
        return [c if c <= _INT64_MAX else str(c) for c in self.counts]

    @classmethod
    def from_json(cls, data):
        counts = tuple(int(c) for c in data)
        return cls(len(counts) - 1, counts)


def _as_linear(code):
    if isinstance(code, LinearCodeMatrix):
        return code
    return code.as_linear()


def _pack(rows, n):
    """(r, n) GF(4) rows -> (r, 2, words) uint64 bit planes."""
    rows = np.asarray(rows, dtype=np.uint8).reshape(-1, n)
    words = max(1, -(-n // 64))
    planes = np.stack([rows & 1, rows >> 1], axis=1).astype(bool)
    padded = np.zeros((rows.shape[0], 2, words * 64), dtype=bool)
    padded[:, :, :n] = planes
    packed = np.packbits(padded, axis=-1, bitorder="little")
    return packed.view(np.uint64).reshape(rows.shape[0], 2, words)


def _unpack(packed, n):
    """Inverse of :func:`_pack` for an array (..., 2, words)."""
    bits = np.unpackbits(packed.view(np.uint8), axis=-1, bitorder="little")
    bits = bits[..., :n]
    return (bits[..., 0, :] | (bits[..., 1, :] << 1)).astype(np.uint8)


def _span(packed_rows):
    """All 4^r GF(4) combinations of the packed rows, shape (4^r, 2, words)."""
    words = packed_rows.shape[-1]
    acc = np.zeros((1, 2, words), dtype=np.uint64)
    for p0, p1 in packed_rows:
        # multiples 0, 1, w, W of the row in bit-plane form
        mults = np.stack([
            np.zeros((2, words), dtype=np.uint64),
            np.stack([p0, p1]),
            np.stack([p1, p0 ^ p1]),
            np.stack([p0 ^ p1, p0]),
        ])
        acc = (mults[:, None] ^ acc[None, :]).reshape(-1, 2, words)
    return acc


def _check_budget(code, max_enum):
    if code.size > max_enum:
        raise BudgetError(
            f"enumerating 4^{code.k} = {code.size} codewords exceeds the budget of {max_enum}; "
            "use the MacWilliams transform of a smaller code or bounded_weight_dual_search",
            needed=code.size, budget=max_enum,
        )


def _blocks(code):
    """Yield packed codeword blocks of shape (b, |L|, 2, words) covering the code once."""
    n = code.n
    packed = _pack(code.rows, n)
    half = min(code.k, (code.k + 1) // 2 + 1)
    left = _span(packed[:half])
    right = _span(packed[half:])
    per = max(1, _BLOCK_ELEMS // (left.shape[0] * left.shape[2]))
    for start in range(0, right.shape[0], per):
        r = right[start:start + per]
        yield left[None, :] ^ r[:, None]


def _weights(block):
    return np.bitwise_count(block[..., 0, :] | block[..., 1, :]).sum(axis=-1, dtype=np.int64)


def weight_distribution(code, max_enum=DEFAULT_MAX_ENUM):
    """Exact counts A_0..A_n of a GF(4) linear code by full enumeration."""
    code = _as_linear(code)
    _check_budget(code, max_enum)
    counts = np.zeros(code.n + 1, dtype=np.int64)
    if code.k == 0:
        counts[0] = 1
    else:
        for block in _blocks(code):
            counts += np.bincount(_weights(block).ravel(), minlength=code.n + 1)
    return WeightDistribution(code.n, tuple(int(c) for c in counts))


def min_weight_enumerate(code, max_enum=DEFAULT_MAX_ENUM):
    """Minimum nonzero weight and the lexicographically smallest codeword attaining it.

    Returns ``(None, None)`` for the zero code.
    """
    code = _as_linear(code)
    dist = weight_distribution(code, max_enum)
    d = dist.min_nonzero_weight()
    if d is None:
        return None, None
    best = None
    for block in _blocks(code):
        hits = block[_weights(block) == d]
        if not len(hits):
            continue
        vecs = _unpack(hits, code.n)
        cand = vecs[np.lexsort(vecs.T[::-1])[0]]
        if best is None or tuple(cand) < tuple(best):
            best = cand
    return d, best


def krawtchouk(n, j, i, q=4):
    """K_j(i) = sum_s (-1)^s (q-1)^(j-s) C(i, s) C(n-i, j-s), by direct summation."""
    return sum((-1) ** s * (q - 1) ** (j - s) * comb(i, s) * comb(n - i, j - s)
               for s in range(min(i, j) + 1))


def _krawtchouk_column(n, i, q=4):
    """[K_0(i), ..., K_n(i)] via the three-term recurrence
    (j+1) K_{j+1} = ((n-j)(q-1) + j - q i) K_j - (q-1)(n-j+1) K_{j-1}."""
    col = [1, (q - 1) * (n - i) - i]
    for j in range(1, n):
        num = ((n - j) * (q - 1) + j - q * i) * col[j] - (q - 1) * (n - j + 1) * col[j - 1]
        col.append(num // (j + 1))
    return col[:n + 1]


def macwilliams_dual_distribution(dist, k):
    """Dual weight distribution from W_dual(x, y) = |C|^-1 W_C(x + 3y, x - y).

    Exact integer arithmetic; a non-integral or negative coefficient means
    the input was not the distribution of a linear code of dimension k.
    """
    n = dist.n
    size = 4 ** k
    if dist.total != size:
        raise ValueError(f"distribution sums to {dist.total}, expected 4^{k} = {size}")
    sums = [0] * (n + 1)
    for i, a in enumerate(dist.counts):
        if a:
            for j, kj in enumerate(_krawtchouk_column(n, i)):
                sums[j] += a * kj
    out = []
    for num in sums:
        if num % size or num < 0:
            raise ValueError("MacWilliams transform is not a nonnegative integer distribution; "
                             "input was not a linear code")
        out.append(num // size)
    return WeightDistribution(n, tuple(out))


def dual_difference_weight(code_dist, dual_dist):
    """min{w > 0 : A_w(dual) > A_w(code)}, valid when code is inside its dual."""
    for w in range(1, code_dist.n + 1):
        if dual_dist.counts[w] > code_dist.counts[w]:
            return w
    return None


@dataclass
class DualSearchResult:
    """Outcome of :func:`bounded_weight_dual_search`.

    ``weight`` is None when no word of C-dual minus C has weight <= w_max,
    which certifies the quantity is at least ``w_max + 1``.
    """

    w_max: int
    weight: int = None
    witness: np.ndarray = None
    candidates: int = 0
    dual_hits_in_code: int = 0
    extra: dict = field(default_factory=dict)

    @property
    def found(self):
        return self.weight is not None

    @property
    def lower_bound(self):
        return self.weight if self.found else self.w_max + 1

    def to_json(self):
        return {
            "w_max": self.w_max,
            "found": self.found,
            "weight": self.weight,
            "lower_bound": self.lower_bound,
            "witness": gf4.to_string(self.witness) if self.witness is not None else None,
            "candidates": self.candidates,
        }


def candidate_count(n, w_max):
    return sum(comb(n, w) * 3 ** w for w in range(1, w_max + 1))


def _syndrome_table(code):
    """Packed syndromes G @ conj(a e_j) for every position j and a in {1, w, W}.

    v lies in the hermitian dual iff G @ conj(v) = 0, and the syndrome of a
    sum of disjoint single-symbol words is the XOR of their syndromes.
    """
    cols = code.rows.T  # (n, k)
    shifts = [2 * i for i in range(code.k)]
    table = []
    for j in range(code.n):
        row = []
        for a in (1, 2, 3):
            col = gf4.MUL[gf4.CONJ[a], cols[j]]
            row.append(sum(int(c) << s for c, s in zip(col, shifts)))
        table.append(row)
    return table


def _partials(table, n, size):
    """Every (positions, values, syndrome) with ``size`` sorted positions."""
    for pos in combinations(range(n), size):
        for vals in product((1, 2, 3), repeat=size):
            s = 0
            for p, v in zip(pos, vals):
                s ^= table[p][v - 1]
            yield pos, vals, s


def bounded_weight_dual_search(code, w_max, max_candidates=DEFAULT_MAX_CANDIDATES):
    """Least-weight word of C-dual minus C among all vectors of weight <= w_max.

    The candidate space is every vector of weight 1..w_max; it is searched by
    splitting supports into a head (first w//2 positions) and a tail and
    matching syndromes, which visits each support exactly once. Dual words
    that lie in C are skipped. Among minimum-weight hits the lexicographically
    smallest vector is returned.
    """
    code = _as_linear(code)
    n = code.n
    count = candidate_count(n, w_max)
    if count > max_candidates:
        raise BudgetError(
            f"bounded search over {count} candidates exceeds the budget of {max_candidates}",
            needed=count, budget=max_candidates,
        )
    result = DualSearchResult(w_max=w_max, candidates=count)
    if w_max <= 0:
        return result
    table = _syndrome_table(code)
    tails_by_size = {}
    for w in range(1, w_max + 1):
        h, t = w // 2, w - w // 2
        if t not in tails_by_size:
            index = {}
            for pos, vals, s in _partials(table, n, t):
                index.setdefault(s, []).append((pos, vals))
            tails_by_size[t] = index
        tails = tails_by_size[t]
        heads = _partials(table, n, h) if h else [((), (), 0)]
        hits = []
        for hpos, hvals, s in heads:
            last = hpos[-1] if hpos else -1
            for tpos, tvals in tails.get(s, ()):
                if tpos[0] <= last:
                    continue
                v = np.zeros(n, dtype=np.uint8)
                v[list(hpos + tpos)] = hvals + tvals
                if code.contains(v):
                    result.dual_hits_in_code += 1
                    continue
                hits.append(v)
        if hits:
            best = min(hits, key=lambda v: tuple(v))
            result.weight = w
            result.witness = best
            return result
    return result


def enumerate_codewords(code, max_enum=DEFAULT_MAX_ENUM):
    """All codewords as a (4^k, n) uint8 array (small codes only)."""
    code = _as_linear(code)
    _check_budget(code, max_enum)
    if code.k == 0:
        return np.zeros((1, code.n), dtype=np.uint8)
    return _unpack(_span(_pack(code.rows, code.n)), code.n)


__all__ = [
    "DEFAULT_MAX_CANDIDATES",
    "DEFAULT_MAX_ENUM",
    "DualSearchResult",
    "WeightDistribution",
    "bounded_weight_dual_search",
    "candidate_count",
    "dual_difference_weight",
    "enumerate_codewords",
    "macwilliams_dual_distribution",
    "min_weight_enumerate",
    "weight_distribution",
]
