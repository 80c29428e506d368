"""Partitions, Frobenius coordinates and the nested-hook shapes.

Partitions are plain tuples of weakly decreasing positive integers (row
lengths).  Two readings of a diagram appear in this package:

* the *hook* reading used by :func:`shape_from_hooks`, where a row of
  length k stands for the exterior power of degree k, so that the shape
  lambda(a) of the summand H_a of the exterior algebra on S^2 V has
  Frobenius coordinates (a | a+1);
* the usual GL reading, rows = symmetric powers, used by :func:`weyl_dim`
  and by the invariant criterion in :mod:`covariants.invariants`.

The two are exchanged by :func:`conjugate` (see :func:`gl_shape`).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod
from fractions import Fraction

Partition = tuple


def make_partition(parts) -> Partition:
    parts = tuple(int(p) for p in parts if p != 0)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"{parts} is not weakly decreasing")
    return parts


def size(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def cells(lam: Partition):
    return [(i, j) for i, row in enumerate(lam) for j in range(row)]


def contains(big: Partition, small: Partition) -> bool:
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


@dataclass(frozen=True)
class FrobeniusCoords:
    arms: tuple
    legs: tuple

    def __post_init__(self):
        if len(self.arms) != len(self.legs):
            raise ValueError("arms and legs must have the same length")
        for seq in (self.arms, self.legs):
            if any(x < 0 for x in seq) or any(seq[i] <= seq[i + 1] for i in range(len(seq) - 1)):
                raise ValueError(f"{seq} is not a strictly decreasing nonnegative sequence")

    def size(self) -> int:
        return sum(a + b + 1 for a, b in zip(self.arms, self.legs))

    def partition(self) -> Partition:
        r = len(self.arms)
        rows = [self.arms[i] + i + 1 for i in range(r)]
        cols = [self.legs[i] + i + 1 for i in range(r)]
        j = r
        while True:
            length = sum(1 for c in cols if c > j)
            if length == 0:
                break
            rows.append(length)
            j += 1
        lam = make_partition(rows)
        if conjugate(lam)[:r] != tuple(cols):
            raise ValueError(f"({self.arms} | {self.legs}) is not a valid diagram")
        return lam


def frobenius_coords(lam: Partition) -> FrobeniusCoords:
    lam = make_partition(lam)
    lamc = conjugate(lam)
    r = sum(1 for i, x in enumerate(lam) if x > i)
    return FrobeniusCoords(tuple(lam[i] - i - 1 for i in range(r)),
                           tuple(lamc[i] - i - 1 for i in range(r)))


def check_asequence(a) -> tuple:
    a = tuple(int(x) for x in a)
    if any(x < 0 for x in a) or any(a[i] <= a[i + 1] for i in range(len(a) - 1)):
        raise ValueError(f"{a} is not strictly decreasing and nonnegative")
    return a


def shape_from_hooks(a) -> Partition:
    """Nest hooks with row a_i + 1 and column a_i + 2, i.e. Frobenius (a | a+1)."""
    a = check_asequence(a)
    return FrobeniusCoords(a, tuple(x + 1 for x in a)).partition()


def hooks_from_shape(lam: Partition) -> tuple:
    """Inverse of :func:`shape_from_hooks`; raises if ``lam`` is not hook-nested."""
    fc = frobenius_coords(lam)
    if any(b != a + 1 for a, b in zip(fc.arms, fc.legs)):
        raise ValueError(f"{lam} is not of the form lambda(a)")
    return fc.arms


def gl_shape(a) -> Partition:
    """The summand H_a in the usual GL labelling: Frobenius (a+1 | a)."""
    return conjugate(shape_from_hooks(a))


def hook_length(lam: Partition, i: int, j: int) -> int:
    lamc = conjugate(lam)
    return lam[i] - j + lamc[j] - i - 1


def weyl_dim(lam: Partition, m: int) -> int:
    """Dimension of the GL(m) irreducible S_lambda(C^m)."""
    lam = make_partition(lam)
    if len(lam) > m:
        return 0
    num = prod(m + j - i for i, j in cells(lam))
    den = prod(hook_length(lam, i, j) for i, j in cells(lam))
    return int(Fraction(num, den))


def enumerate_asequences(n: int) -> list:
    """All strictly decreasing sequences with entries in {0, ..., 2n-1}.

    These index the 2**(2n) summands H_a of the exterior algebra on
    S^2(C^2n); the GL shape of H_a has a_1 + 1 <= 2n rows.
    """
    if n < 1:
        raise ValueError("n must be positive")
    top = 2 * n - 1
    out = []
    for r in range(top + 2):
        out.extend(combinations(range(top, -1, -1), r))
    return out


def strip_additions(lam: Partition, k: int, kind: str = "horizontal",
                    max_rows: int | None = None, max_cols: int | None = None) -> list:
    """Pieri additions of ``k`` boxes to ``lam``.

    ``"horizontal"``: no two new boxes in one column; ``"vertical"``: no two
    in one row.  Results are sorted and respect the optional bounds.
    """
    lam = make_partition(lam)
    if kind == "vertical":
        res = strip_additions(conjugate(lam), k, "horizontal", max_rows=max_cols, max_cols=max_rows)
        return sorted(conjugate(nu) for nu in res)
    if kind != "horizontal":
        raise ValueError(f"unknown strip kind {kind!r}")
    rows = list(lam) + [0]
    out = []

    def rec(i, left, acc):
        if i == len(rows):
            if left == 0:
                out.append(make_partition(acc))
            return
        # row i may grow up to the previous (old) row length
        cap = left if i == 0 else min(left, lam[i - 1] - rows[i])
        for t in range(cap + 1):
            rec(i + 1, left - t, acc + [rows[i] + t])

    rec(0, k, [])
    res = []
    for nu in out:
        if max_rows is not None and len(nu) > max_rows:
            continue
        if max_cols is not None and nu and nu[0] > max_cols:
            continue
        res.append(nu)
    return sorted(set(res))


def two_box_additions(a, n: int) -> list:
    """The set {a}_2: two boxes added to lambda(a), no column growing by more than one.

    Each column of the result has length between the corresponding column
    length of lambda(a) and one more; rows are bounded by 2n (a row of
    length k is the k-th exterior power of C^2n).
    """
    lam = shape_from_hooks(a)
    res = strip_additions(lam, 2, "horizontal", max_cols=2 * n)
    base = conjugate(lam)
    for nu in res:
        cols = conjugate(nu)
        assert all(cols[i] - (base[i] if i < len(base) else 0) in (0, 1) for i in range(len(cols)))
    return res


def two_box_vertical(a, n: int) -> list:
    """Cross-examination variant: both boxes allowed in one column, none in one row."""
    lam = shape_from_hooks(a)
    return strip_additions(lam, 2, "vertical", max_cols=2 * n)
