"""Pfaffians of explicit matrices, exact over a field."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

import numpy as np

from ..fields import QQ


def is_skew(M) -> bool:
    M = np.asarray(M, dtype=object)
    return bool(np.all(M == -M.T))


def is_symmetric(M) -> bool:
    M = np.asarray(M, dtype=object)
    return bool(np.all(M == M.T))


def pfaffian(M, field=QQ):
    """First-row expansion; raises on odd side or non-skew input."""
    M = field.convert(M)
    m = M.shape[0]
    if M.shape != (m, m) or m % 2:
        raise ValueError("pfaffian needs an even square matrix")
    if not bool(np.all(M == field.neg(M.T))):
        raise ValueError("pfaffian needs a skew-symmetric matrix")
    return _pf(M, tuple(range(m)), field, {})


def _pf(M, rows, field, memo):
    if not rows:
        return field.scalar(1)
    got = memo.get(rows)
    if got is not None:
        return got
    first = rows[0]
    total = field.scalar(0)
    for t in range(1, len(rows)):
        a = M[first, rows[t]]
        if a == 0:
            continue
        rest = rows[1:t] + rows[t + 1:]
        term = field.mul(a, _pf(M, rest, field, memo))
        total = field.add(total, term) if t % 2 == 1 else field.sub(total, term)
    memo[rows] = total
    return total


def pfaffian_matchings(M, field=QQ):
    """Sum over perfect matchings; independent of :func:`pfaffian`'s recursion."""
    M = field.convert(M)
    m = M.shape[0]
    total = field.scalar(0)
    for match in _matchings(tuple(range(m))):
        perm = [x for pair in match for x in pair]
        term = field.scalar(_perm_sign(perm))
        for a, b in match:
            term = field.mul(term, M[a, b])
        total = field.add(total, term)
    return total


def _matchings(items):
    if not items:
        yield ()
        return
    a = items[0]
    for t in range(1, len(items)):
        rest = items[1:t] + items[t + 1:]
        for m in _matchings(rest):
            yield ((a, items[t]),) + m


def _perm_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def det(M, field=QQ):
    """Determinant by elimination."""
    A = field.convert(M).copy()
    m = A.shape[0]
    out = field.scalar(1)
    for c in range(m):
        nz = np.flatnonzero(field.nonzero(A[c:, c]))
        if not nz.size:
            return field.scalar(0)
        k = c + int(nz[0])
        if k != c:
            A[[c, k]] = A[[k, c]]
            out = field.neg(out)
        out = field.mul(out, A[c, c])
        inv = field.inv(A[c, c])
        for r in range(c + 1, m):
            if A[r, c] != 0:
                A[r] = field.sub(A[r], field.mul(field.mul(A[r, c], inv), A[c]))
    return out


def skew_part(Y, field=QQ):
    Y = field.convert(Y)
    if not field.nonzero(field.add(Y, Y.T)).any():
        # already skew: (Y - Y^t)/2 == Y, skip the division
        return Y
    return field.mul(field.sub(Y, Y.T), field.scalar(Fraction(1, 2)))


def pf_general(Y, field=QQ):
    """Pf of the skew part (Y - Y^t)/2."""
    return pfaffian(skew_part(Y, field), field)


def polarized_pfaffian(mats, field=QQ):
    """Full polarization; symmetric multilinear, with value n! Pf(Y) on (Y, ..., Y)."""
    mats = [field.convert(Y) for Y in mats]
    side = mats[0].shape[0]
    n = side // 2
    if len(mats) != n:
        raise ValueError(f"polarized pfaffian on {side}x{side} takes {n} arguments, got {len(mats)}")
    total = field.scalar(0)
    for r in range(1, n + 1):
        for S in combinations(range(n), r):
            Y = mats[S[0]]
            for i in S[1:]:
                Y = field.add(Y, mats[i])
            v = pf_general(Y, field)
            total = field.add(total, v) if (n - r) % 2 == 0 else field.sub(total, v)
    return total


def perm_sign(perm) -> int:
    return _perm_sign(perm)


def all_perms(k):
    for p in permutations(range(k)):
        yield p, _perm_sign(p)
