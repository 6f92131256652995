"""Scalar arithmetic in GF(4).

Elements are encoded as the integers 0..3 where bit 0 is the coefficient
of 1 and bit 1 the coefficient of w (w^2 = w + 1):

    0 -> 0,  1 -> 1,  2 -> w,  3 -> W = w^2 = 1 + w

so addition is XOR. The same encoding is used for the constant
coefficients of GF(4^m) elements, which makes GF(4) the subfield of
constants in every extension built by :mod:`qcyclic.field`.
"""
import numpy as np

SYMBOLS = "01wW"
ZERO, ONE, W, WW = 0, 1, 2, 3

_LOG = {1: 0, 2: 1, 3: 2}
_EXP = (1, 2, 3)

MUL = np.array(
    [[0 if a == 0 or b == 0 else _EXP[(_LOG[a] + _LOG[b]) % 3] for b in range(4)]
     for a in range(4)],
    dtype=np.uint8,
)
INV = np.array([0, 1, 3, 2], dtype=np.uint8)  # INV[0] unused
CONJ = np.array([0, 1, 3, 2], dtype=np.uint8)


def add(a, b):
    return a ^ b


def mul(a, b):
    return int(MUL[a, b])


def inv(a):
    if a == 0:
        raise ZeroDivisionError("0 has no inverse in GF(4)")
    return int(INV[a])


def conjugate_gf4(x):
    """Return x^2, the conjugate of x. Fixes 0 and 1, swaps w and W."""
    return int(CONJ[x])


def symbol(x):
    return SYMBOLS[x]


def parse_symbol(ch):
    try:
        return SYMBOLS.index(ch)
    except ValueError:
        raise ValueError(f"not a GF(4) symbol: {ch!r} (expected one of {SYMBOLS})") from None


def to_string(values):
    """Render a GF(4) vector as a string of symbols, e.g. ``"01wW"``."""
    return "".join(SYMBOLS[int(v)] for v in values)


def from_string(text):
    return np.array([parse_symbol(ch) for ch in text], dtype=np.uint8)
