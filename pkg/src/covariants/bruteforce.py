"""Brute-force dimension of SO(2n)-invariant alternating maps M+^k -> M+ or M-.

An alternating k-map f is stored by its values on increasing tuples of
the symmetric basis, expanded in a basis of the target.  f is invariant
iff it is killed by the derivation action of so(2n):

    (A.f)(X_1..X_k) = [A, f(X_1..X_k)] - sum_i f(X_1, .., [A, X_i], .., X_k),

and it suffices to impose this for the adjacent rotations
E_(i,i+1) - E_(i+1,i), which generate so(2n) as a Lie algebra.

Before building the system the unknowns are cut down to those fixed by the
diagonal sign matrices of determinant 1 (a subgroup of SO(2n) acting
diagonally on the basis): a coordinate survives iff the index parities of
its basis elements add up to 0 or to (1, ..., 1).
"""
from __future__ import annotations

from itertools import combinations
from math import comb

import numpy as np

from .fields import QQ, P_DEFAULT, PrimeField
from .linalg import rank
from .multilinear.frame import sym_basis

SIZE_LIMIT = 2 * 10**5


class BruteForceTooLarge(ValueError):
    pass


def target_basis(n: int, target: str):
    """[(index pair, matrix)] for the symmetric (E_ij + E_ji) or skew (E_ij - E_ji) target."""
    m = 2 * n
    if target == "sym":
        return sym_basis(n)
    if target == "skew":
        out = []
        for i in range(m):
            for j in range(i + 1, m):
                E = np.zeros((m, m), dtype=np.int64)
                E[i, j], E[j, i] = 1, -1
                out.append(((i, j), E))
        return out
    if target == "scalar":
        return [((), None)]
    raise ValueError(f"unknown target {target!r}")


def _coords(M, pairs):
    """Coordinates of a symmetric or skew matrix in the basis indexed by ``pairs``."""
    return [(t, int(M[i, j])) for t, (i, j) in enumerate(pairs) if M[i, j] != 0]


def _generators(m):
    out = []
    for i in range(m - 1):
        A = np.zeros((m, m), dtype=np.int64)
        A[i, i + 1], A[i + 1, i] = 1, -1
        out.append(A)
    return out


def _parity(pair, m):
    v = 0
    for x in pair:
        v ^= 1 << x
    return v


def invariance_system(k: int, n: int, target: str = "skew"):
    """Integer matrix whose kernel is the space of invariant alternating k-maps."""
    m = 2 * n
    src = sym_basis(n)
    src_pairs = [p for p, _ in src]
    N = len(src)
    tgt = target_basis(n, target)
    tgt_pairs = [p for p, _ in tgt]
    full = (1 << m) - 1
    src_par = [_parity(p, m) for p in src_pairs]
    tgt_par = [_parity(p, m) for p in tgt_pairs] if target != "scalar" else [0]

    subsets = list(combinations(range(N), k))
    sub_index = {S: a for a, S in enumerate(subsets)}
    sub_par = []
    for S in subsets:
        v = 0
        for s in S:
            v ^= src_par[s]
        sub_par.append(v)
    cols = {}
    for a, S in enumerate(subsets):
        for t, tp in enumerate(tgt_par):
            if sub_par[a] ^ tp in (0, full):
                cols[(a, t)] = len(cols)

    rows = []
    for A in _generators(m):
        ad_src = [_coords(A @ E - E @ A, src_pairs) for _, E in src]
        ad_tgt = [_coords(A @ B - B @ A, tgt_pairs) if B is not None else [] for _, B in tgt]
        # preimages: pre[s] = [(r, coefficient of E_s in [A, E_r])]
        pre = [[] for _ in range(N)]
        for r, terms in enumerate(ad_src):
            for s_, x in terms:
                pre[s_].append((r, x))
        eqs = {}
        for (a, t), c in cols.items():
            S = subsets[a]
            # [A, f(E_S)] term: unknown (a, t) feeds output coordinate u
            for u, x in ad_tgt[t]:
                eqs.setdefault((a, u), {}).setdefault(c, 0)
                eqs[(a, u)][c] += x
            # - f(.., [A, E_s], ..) terms: unknown (a, t) appears where some
            # slot of a tuple S2 maps onto E_s for s in S
            for pos, s in enumerate(S):
                rest = S[:pos] + S[pos + 1:]
                for r, coef in pre[s]:
                    if r in rest:
                        continue
                    S2 = tuple(sorted(rest + (r,)))
                    # f(E_S2 with E_r replaced by E_s) = sign * f(E_S)
                    sign = (-1) ** (_place(rest, r) + pos)
                    key = (sub_index[S2], t)
                    eqs.setdefault(key, {}).setdefault(c, 0)
                    eqs[key][c] -= sign * coef
        for e in eqs.values():
            if any(e.values()):
                rows.append(e)
    M = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for i, e in enumerate(rows):
        for c, x in e.items():
            M[i, c] = x
    return M, len(cols)


def _place(rest, r):
    """Position of r in sorted(rest + (r,))."""
    return sum(1 for x in rest if x < r)


def so_invariant_dim_bruteforce(k: int, n: int, target: str = "skew", field=None,
                                exact: bool = False, force: bool = False) -> int:
    """dim of SO(2n)-invariant alternating k-maps from M+ to the target (sym, skew or scalar)."""
    m = 2 * n
    N = m * (m + 1) // 2
    if not 0 <= k <= N:
        return 0
    dimT = len(target_basis(n, target))
    size = comb(N, k) * dimT
    if size > SIZE_LIMIT and not force:
        raise BruteForceTooLarge(f"C({N},{k}) * {dimT} = {size} unknowns exceeds {SIZE_LIMIT}")
    M, ncols = invariance_system(k, n, target)
    if ncols == 0:
        return 0
    field = field or PrimeField(P_DEFAULT)
    r = rank(M, field) if M.size else 0
    dim = ncols - r
    if exact:
        r_exact = rank(M.astype(object), QQ) if M.size else 0
        if r_exact != r:
            raise ArithmeticError(f"rank {r} mod p differs from exact rank {r_exact}")
    return dim


def bruteforce_profile(n: int, target: str = "skew", field=None, exact=False):
    m = 2 * n
    N = m * (m + 1) // 2
    return [so_invariant_dim_bruteforce(k, n, target, field, exact) for k in range(N + 1)]
