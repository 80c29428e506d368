"""Exact coefficient fields backed by numpy arrays.

Two fields are supported: the rationals (object arrays holding ``int`` /
``Fraction``) and prime fields GF(p) for p < 2**31.5 (``int64`` arrays,
always kept reduced).  Every routine that touches matrix entries goes
through one of these so that the same evaluation code runs exactly in
either setting.
"""
from __future__ import annotations

from fractions import Fraction

import numpy as np

P_DEFAULT = 2**31 - 1
P_SECOND = 2**31 + 11


def _norm_entry(q):
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


_normalize = np.frompyfunc(_norm_entry, 1, 1)


class RationalField:
    name = "rational"
    dtype = object

    def convert(self, x):
        arr = np.array(x, dtype=object)
        if arr.size:
            # integral Fractions -> int: int arithmetic is far cheaper
            arr = np.asarray(_normalize(arr), dtype=object)
        return arr

    def scalar(self, q):
        q = Fraction(q)
        return q.numerator if q.denominator == 1 else q

    def zeros(self, shape):
        out = np.empty(shape, dtype=object)
        out.fill(0)
        return out

    def identity(self, m):
        out = self.zeros((m, m))
        for i in range(m):
            out[i, i] = 1
        return out

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def matmul(self, a, b):
        return np.matmul(a, b)

    def inv(self, x):
        return 1 / Fraction(x)

    def div(self, a, b):
        return a * self.inv(b)

    def sum(self, a, axis=None):
        return np.sum(a, axis=axis)

    def nonzero(self, a):
        return np.asarray(a != 0)

    def to_python(self, x):
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    dtype = np.int64

    def __init__(self, p=P_DEFAULT):
        if p >= 2**31.5:
            raise ValueError("prime too large for int64 arithmetic")
        self.p = int(p)
        self.name = f"prime:{self.p}"

    def scalar(self, q):
        q = Fraction(q)
        num = q.numerator % self.p
        den = q.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"{q} has no image mod {self.p}")
        return np.int64(num * pow(den, -1, self.p) % self.p)

    def convert(self, x):
        arr = np.asarray(x)
        if arr.dtype == object:
            flat = [int(self.scalar(v)) for v in arr.ravel()]
            return np.array(flat, dtype=np.int64).reshape(arr.shape)
        return np.mod(arr.astype(np.int64), self.p)

    def zeros(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def identity(self, m):
        return np.eye(m, dtype=np.int64)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def matmul(self, a, b):
        # split the left factor so partial sums stay below 2**63
        hi = a >> 16
        lo = a & 0xFFFF
        top = np.matmul(hi, b) % self.p
        return (top * 65536 + np.matmul(lo, b)) % self.p

    def inv(self, x):
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return np.int64(pow(x, -1, self.p))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sum(self, a, axis=None):
        return np.sum(a, axis=axis) % self.p

    def nonzero(self, a):
        return np.asarray(a != 0)

    def to_python(self, x):
        return int(x)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = RationalField()


def parse_field(spec: str):
    """``"rational"`` or ``"prime:P"`` (``"prime"`` alone uses 2**31-1)."""
    if spec in ("rational", "QQ", "Q"):
        return QQ
    if spec.startswith("prime"):
        _, _, p = spec.partition(":")
        return PrimeField(int(p) if p else P_DEFAULT)
    raise ValueError(f"unknown field {spec!r}")
