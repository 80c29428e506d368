"""Evaluation frames.

A :class:`Frame` is an ordered list of K argument matrices.  An
alternating map of degree a is evaluated on a frame by tabulating its
values on every a-element subset of the arguments (taken in frame order);
subsets are bitmasks over frame positions.  Exhaustive evaluation over
the symmetric basis is the frame made of the whole basis; randomized
evaluation uses a frame of random points.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from ..fields import QQ

K_MAX = 22


class Frame:
    def __init__(self, field, mats, labels=None):
        if not len(mats):
            raise ValueError("empty frame")
        if len(mats) > K_MAX:
            raise ValueError(f"frame of {len(mats)} arguments exceeds {K_MAX}")
        self.field = field
        self.mats = [field.convert(M) for M in mats]
        self.K = len(self.mats)
        self.side = self.mats[0].shape[0]
        self.labels = tuple(labels) if labels is not None else tuple(range(self.K))
        allm = np.arange(1 << self.K, dtype=np.int64)
        pc = np.bitwise_count(allm)
        self.masks = [allm[pc == a] for a in range(self.K + 1)]
        self.index = np.empty(1 << self.K, dtype=np.int64)
        for ms in self.masks:
            self.index[ms] = np.arange(len(ms))
        self.full = (1 << self.K) - 1
        self.cache = {}

    def count(self, a: int) -> int:
        return comb(self.K, a) if 0 <= a <= self.K else 0

    def masks_of(self, a: int):
        if 0 <= a <= self.K:
            return self.masks[a]
        return np.zeros(0, dtype=np.int64)

    def positions(self, mask: int) -> tuple:
        return tuple(x for x in range(self.K) if mask >> x & 1)

    def label_tuple(self, mask: int) -> tuple:
        return tuple(self.labels[x] for x in self.positions(mask))

    def parity_fixed(self, A: int, Bs):
        """Parity of the shuffle (A, B) for a fixed mask A and an array of B's."""
        inv = np.zeros(len(Bs), dtype=np.int64)
        for x in self.positions(A):
            inv += np.bitwise_count(Bs & ((1 << x) - 1))
        return inv & 1

    def parity(self, As, Bs):
        inv = np.zeros(len(As), dtype=np.int64)
        for x in range(self.K):
            inv += ((As >> x) & 1) * np.bitwise_count(Bs & ((1 << x) - 1))
        return inv & 1

    def zeros(self, a: int, kind: str):
        shape = (self.count(a),) if kind == "scalar" else (self.count(a), self.side, self.side)
        return self.field.zeros(shape)


def sym_basis(n: int):
    """Basis of symmetric 2n x 2n matrices: E_ii and E_ij + E_ji (i < j), pairs in lexicographic order."""
    m = 2 * n
    out = []
    for i in range(m):
        for j in range(i, m):
            E = np.zeros((m, m), dtype=np.int64)
            E[i, j] = 1
            E[j, i] = 1
            out.append(((i, j), E))
    return out


@lru_cache(maxsize=None)
def basis_frame(n: int, field=QQ) -> Frame:
    """Frame of the whole symmetric basis; tables on it are exhaustive evaluations."""
    basis = sym_basis(n)
    return Frame(field, [E for _, E in basis], labels=range(len(basis)))


def sub_basis_frame(n: int, indices, field=QQ) -> Frame:
    basis = sym_basis(n)
    indices = tuple(sorted(indices))
    return Frame(field, [basis[i][1] for i in indices], labels=indices)


def traceless_basis(n: int):
    """Basis of traceless symmetric matrices: E_ii - E_(i+1)(i+1), then E_ij + E_ji (i < j)."""
    m = 2 * n
    out = []
    for i in range(m - 1):
        E = np.zeros((m, m), dtype=np.int64)
        E[i, i] = 1
        E[i + 1, i + 1] = -1
        out.append((("h", i), E))
    return out + [b for b in sym_basis(n) if b[0][0] != b[0][1]]


@lru_cache(maxsize=None)
def traceless_basis_frame(n: int, field=QQ) -> Frame:
    basis = traceless_basis(n)
    return Frame(field, [E for _, E in basis], labels=range(len(basis)))
