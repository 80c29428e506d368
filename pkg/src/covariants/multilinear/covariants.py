"""The basic covariants X^a, T_i, Q, Omega, dOmega.

Each has a fast route (an expression tree of wedge products evaluated on
frames) and, where the definition is a finite sum, a definitional route
that evaluates the defining formula literally on explicit matrices; the
test-suite checks one against the other.

Fast routes rest on two facts.  The entries of the 2-form C = X ^ X are
even, hence commute under wedge, so the Pfaffian of C can be expanded as a
polynomial; antisymmetrizing the polarized Pfaffian over S_2n gives

    Q = 2^n n! Pf(C),

and, since Pf is linear in the direction e_i ^ e_j with derivative
(-1)^(i+j+1) Pf(minor_ij),

    Omega = 2^(n-1) (n-1)! sum_{i<j} (-1)^(i+j+1) Pf(C minor_ij) (e_i ^ e_j).
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial

import numpy as np

from ..fields import QQ
from .altmap import (MATRIX, SCALAR, Constant, Embed, Entry, Identity, Pointwise,
                     linear, trace_of, wedge)
from .pfaffian import all_perms, polarized_pfaffian


def e_wedge(m: int, i: int, j: int):
    """e_i ^ e_j = e_i (x) e_j - e_j (x) e_i as an m x m matrix."""
    E = np.zeros((m, m), dtype=object)
    E.fill(0)
    E[i, j] = 1
    E[j, i] = -1
    return E


@lru_cache(maxsize=None)
def X(n: int):
    return Identity(n)


@lru_cache(maxsize=None)
def XT(n: int):
    return Identity(n, transpose=True)


@lru_cache(maxsize=None)
def power(n: int, a: int):
    """X^a = X ^ ... ^ X, which is the standard polynomial St_a."""
    if a < 1:
        raise ValueError("power must be >= 1")
    if a == 1:
        return X(n)
    P = wedge(X(n), power(n, a - 1))
    P.label = f"X^{a}"
    return P


@lru_cache(maxsize=None)
def covariant_T(i: int, n: int):
    T = trace_of(power(n, 4 * i + 1))
    T.label = f"T{i}"
    return T


@lru_cache(maxsize=None)
def _pf_commutators(n: int, rows: tuple):
    """Pf of the submatrix ``rows`` of C = X^2, a scalar form of degree len(rows)."""
    if not rows:
        return Constant(n, 1)
    C = power(n, 2)
    terms = []
    for t in range(1, len(rows)):
        rest = rows[1:t] + rows[t + 1:]
        term = wedge(Entry(C, rows[0], rows[t]), _pf_commutators(n, rest))
        terms.append((1 if t % 2 == 1 else -1, term))
    return linear(terms, label=f"Pf(C{list(rows)})")


@lru_cache(maxsize=None)
def covariant_Q(n: int):
    Q = linear([(2**n * factorial(n), _pf_commutators(n, tuple(range(2 * n))))], label="Q")
    return Q


@lru_cache(maxsize=None)
def covariant_Omega(n: int):
    if n < 2:
        raise ValueError("Omega needs n >= 2")
    m = 2 * n
    c = 2 ** (n - 1) * factorial(n - 1)
    terms = []
    for i in range(m):
        for j in range(i + 1, m):
            rows = tuple(r for r in range(m) if r not in (i, j))
            sign = -1 if (i + j) % 2 == 0 else 1
            terms.append((c * sign, Embed(_pf_commutators(n, rows), e_wedge(m, i, j))))
    return linear(terms, label="Omega")


def relative_differential(F, n: int | None = None):
    """dF(X_1..X_{k+1}) = sum_h (-1)^h X_h . F(..., X_h omitted, ...), with X . Y = XY + YX^t.

    As wedge products this is -(X ^ F) - (-1)^k (F ^ X^t).
    """
    if F.kind != MATRIX:
        raise ValueError("relative differential needs a matrix-valued map")
    n = F.n if n is None else n
    k = F.degree
    dF = linear([(-1, wedge(X(n), F)), (-(-1) ** k, wedge(F, XT(n)))], label=f"d{F.label}")
    return dF


@lru_cache(maxsize=None)
def covariant_dOmega(n: int):
    return relative_differential(covariant_Omega(n))


# definitional routes ----------------------------------------------------

def _matprod(mats, field):
    out = mats[0]
    for M in mats[1:]:
        out = field.matmul(out, M)
    return out


def standard_poly(h: int, mats, field=QQ):
    """sum_{sigma in S_h} sign(sigma) x_sigma(1) ... x_sigma(h)."""
    mats = [field.convert(M) for M in mats]
    if len(mats) != h:
        raise ValueError(f"St_{h} takes {h} arguments")
    total = field.zeros(mats[0].shape)
    for p, s in all_perms(h):
        term = _matprod([mats[i] for i in p], field)
        total = field.add(total, term) if s > 0 else field.sub(total, term)
    return total


def commutator(A, B, field=QQ):
    return field.sub(field.matmul(A, B), field.matmul(B, A))


def q_direct(mats, field=QQ):
    """sum_{sigma in S_2n} sign(sigma) Q([X_s1, X_s2], ..., [X_s(2n-1), X_s(2n)])."""
    mats = [field.convert(M) for M in mats]
    m = mats[0].shape[0]
    if len(mats) != m:
        raise ValueError(f"Q takes {m} arguments")
    total = field.scalar(0)
    for p, s in all_perms(m):
        args = [commutator(mats[p[2 * t]], mats[p[2 * t + 1]], field) for t in range(m // 2)]
        v = polarized_pfaffian(args, field)
        total = field.add(total, v) if s > 0 else field.sub(total, v)
    return total


def omega_direct(mats, field=QQ):
    """sum_{i<j, sigma} sign(sigma) Q([X_s1, X_s2], ..., e_i ^ e_j) e_i ^ e_j."""
    mats = [field.convert(M) for M in mats]
    m = mats[0].shape[0]
    k = m - 2
    if len(mats) != k:
        raise ValueError(f"Omega takes {k} arguments")
    brackets = []
    for p, s in all_perms(k):
        brackets.append((s, [commutator(mats[p[2 * t]], mats[p[2 * t + 1]], field)
                             for t in range(k // 2)]))
    out = field.zeros((m, m))
    for i in range(m):
        for j in range(i + 1, m):
            E = field.convert(e_wedge(m, i, j))
            coef = field.scalar(0)
            for s, args in brackets:
                v = polarized_pfaffian(args + [E], field)
                coef = field.add(coef, v) if s > 0 else field.sub(coef, v)
            out = field.add(out, field.mul(coef, E))
    return out


def act(Xh, Y, field=QQ):
    """X . Y = XY + YX^t."""
    return field.add(field.matmul(Xh, Y), field.matmul(Y, Xh.T))


def d_direct(F_eval, mats, field=QQ):
    """sum_h (-1)^h X_h . F(X_1, ..., X_h omitted, ...), h counted from 1."""
    mats = [field.convert(M) for M in mats]
    out = field.zeros(mats[0].shape)
    for h in range(len(mats)):
        rest = mats[:h] + mats[h + 1:]
        term = act(mats[h], F_eval(rest, field), field)
        # h is 0-based here, so (-1)^(h+1)
        out = field.sub(out, term) if h % 2 == 0 else field.add(out, term)
    return out


def d_omega_direct(mats, field=QQ):
    return d_direct(omega_direct, mats, field)


def bracket_addend(F_eval, mats, field=QQ):
    """First sum of the relative differential, with brackets projected to symmetric matrices.

    Returns ``(value, raw_brackets_skew)``: the sum
    sum_{i<j} (-1)^(i+j+1) F(sym[X_i, X_j], ...), and whether every raw bracket
    [X_i, X_j] was skew (so that its symmetric projection is zero).
    """
    mats = [field.convert(M) for M in mats]
    half = field.scalar(1) * field.inv(2)
    out = field.zeros(mats[0].shape)
    skew = True
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            B = commutator(mats[i], mats[j], field)
            skew = skew and not field.nonzero(field.add(B, B.T)).any()
            sym = field.mul(field.add(B, B.T), half)
            rest = [M for t, M in enumerate(mats) if t not in (i, j)]
            v = F_eval([sym] + rest, field)
            # 1-based exponent i+j+1 has the parity of 0-based i+j+1
            out = field.add(out, v) if (i + j + 1) % 2 == 0 else field.sub(out, v)
    return out, skew


def pointwise_St(n: int, h: int):
    return Pointwise(lambda args, f: standard_poly(h, args, f), h, MATRIX, n, f"St{h}")


def pointwise_Q(n: int):
    return Pointwise(q_direct, 2 * n, SCALAR, n, "Q_direct")


def pointwise_Omega(n: int):
    return Pointwise(omega_direct, 2 * n - 2, MATRIX, n, "Omega_direct")


def pointwise_dOmega(n: int):
    return Pointwise(d_omega_direct, 2 * n - 1, MATRIX, n, "dOmega_direct")
