"""Seeded random exact test data: rationals, symmetric matrices, rational rotations."""
from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..fields import QQ


def rng_for(seed):
    return np.random.default_rng(seed)


def random_rational(rng, num=9, den=4):
    return Fraction(int(rng.integers(-num, num + 1)), int(rng.integers(1, den + 1)))


def random_matrix(m, rng, **kw):
    out = np.empty((m, m), dtype=object)
    for i in range(m):
        for j in range(m):
            out[i, j] = random_rational(rng, **kw)
    return out


def random_symmetric(m, rng, **kw):
    out = np.empty((m, m), dtype=object)
    for i in range(m):
        for j in range(i, m):
            out[i, j] = out[j, i] = random_rational(rng, **kw)
    return out


def random_skew(m, rng, **kw):
    out = np.empty((m, m), dtype=object)
    out.fill(0)
    for i in range(m):
        for j in range(i + 1, m):
            v = random_rational(rng, **kw)
            out[i, j], out[j, i] = v, -v
    return out


def random_vector(m, rng, **kw):
    return np.array([random_rational(rng, **kw) for _ in range(m)], dtype=object)


SAMPLE_RADIUS = 1000


def random_field_symmetric(m, rng, field):
    """Symmetric matrix with entries uniform over GF(p), or over [-R, R] integers for QQ.

    Integer entries keep rational arithmetic cheap; a nonzero polynomial of
    degree d vanishes at such a point with probability at most d / (2R + 1).
    """
    if field == QQ:
        A = rng.integers(-SAMPLE_RADIUS, SAMPLE_RADIUS + 1, size=(m, m)).astype(object)
    else:
        A = rng.integers(0, field.p, size=(m, m), dtype=np.int64)
    return np.triu(A) + np.triu(A, 1).T


def givens(m, i, j, t):
    """Rational rotation in the (i, j) plane with cos = (1-t^2)/(1+t^2), sin = 2t/(1+t^2)."""
    t = Fraction(t)
    c = (1 - t * t) / (1 + t * t)
    s = 2 * t / (1 + t * t)
    G = np.empty((m, m), dtype=object)
    G.fill(0)
    for k in range(m):
        G[k, k] = Fraction(1)
    G[i, i] = G[j, j] = c
    G[i, j] = -s
    G[j, i] = s
    return G


def random_rotation(m, rng, factors=None):
    """Product of rational Givens rotations: an exact element of SO(m)."""
    factors = factors or 2 * m
    g = np.empty((m, m), dtype=object)
    g.fill(0)
    for k in range(m):
        g[k, k] = Fraction(1)
    for _ in range(factors):
        i, j = sorted(rng.choice(m, size=2, replace=False))
        t = Fraction(int(rng.integers(1, 6)), int(rng.integers(1, 6)))
        g = np.matmul(g, givens(m, int(i), int(j), t))
    return g
