"""Gaussian elimination over :mod:`covariants.fields`."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .fields import QQ, PrimeField


def rref(M, field=QQ):
    """Row-reduce a copy of ``M``; returns ``(R, pivot_columns)``."""
    R = field.convert(M).copy()
    if R.ndim != 2:
        raise ValueError("rref expects a 2-d array")
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(field.nonzero(R[r:, c]))
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            R[[r, k]] = R[[k, r]]
        R[r] = field.mul(R[r], field.inv(R[r, c]))
        others = np.flatnonzero(field.nonzero(R[:, c]))
        others = others[others != r]
        if others.size:
            f = R[others, c].reshape(-1, 1)
            R[others] = field.sub(R[others], field.mul(f, R[r].reshape(1, -1)))
        pivots.append(c)
        r += 1
    return R, pivots


def rank(M, field=QQ) -> int:
    M = field.convert(M)
    if M.size == 0:
        return 0
    if isinstance(field, PrimeField):
        return _rank_mod_p(M, field.p)
    # eliminate along the short side
    if M.shape[0] > M.shape[1]:
        M = M.T
    return len(rref(M, field)[1])


def _rank_mod_p(M, p) -> int:
    # forward elimination only, dropping exhausted rows as we go
    A = np.array(M, dtype=np.int64) % p
    if A.shape[0] > A.shape[1]:
        A = A.T.copy()
    r = 0
    while A.size:
        nz_rows = np.flatnonzero(A.any(axis=1))
        A = A[nz_rows]
        if not A.shape[0]:
            break
        col_nz = np.flatnonzero(A.any(axis=0))
        A = A[:, col_nz]
        c = 0
        rows_nz = np.flatnonzero(A[:, c])
        piv = int(rows_nz[0])
        prow = A[piv] * pow(int(A[piv, c]), -1, p) % p
        rest = np.delete(A, piv, axis=0)
        f = rest[:, c:c + 1]
        rest = (rest - f * prow) % p
        A = rest[:, 1:]
        r += 1
    return r


def nullspace(M, field=QQ):
    """Basis (as rows) of ``{x : M @ x = 0}``."""
    M = field.convert(M)
    cols = M.shape[1]
    R, piv = rref(M, field)
    free = [c for c in range(cols) if c not in set(piv)]
    basis = field.zeros((len(free), cols))
    for t, fc in enumerate(free):
        basis[t, fc] = field.scalar(1)
        for i, pc in enumerate(piv):
            basis[t, pc] = field.neg(R[i, fc])
    return basis


@dataclass
class LeftSolution:
    coeffs: list | None
    residual_rank: int
    witness_column: int | None


def solve_left(rows, target, field=QQ) -> LeftSolution:
    """Find ``c`` with ``sum_i c_i rows[i] == target``.

    ``rows`` has shape (r, N).  Dependent rows get coefficient 0.  When
    ``target`` lies outside the row span, ``coeffs`` is ``None`` and
    ``witness_column`` is a column where ``target`` differs from the best
    fit on a maximal independent set of columns.
    """
    rows = field.convert(rows)
    target = field.convert(target).reshape(-1)
    r = rows.shape[0]
    coeffs = _fit(rows, target, field)
    if coeffs is not None:
        return LeftSolution([field.to_python(c) for c in coeffs], rank(rows, field), None)
    _, cols = rref(rows, field)
    fit = _fit(rows[:, cols], target[cols], field)
    resid = target.copy()
    for i in range(r):
        resid = field.sub(resid, field.mul(fit[i], rows[i]))
    witness = int(np.flatnonzero(field.nonzero(resid))[0])
    return LeftSolution(None, len(cols), witness)


def _fit(rows, target, field):
    r = rows.shape[0]
    aug = np.concatenate([rows, target.reshape(1, -1)], axis=0).T
    R, piv = rref(aug, field)
    if r in piv:
        return None
    coeffs = [field.scalar(0)] * r
    for i, pc in enumerate(piv):
        coeffs[pc] = R[i, r]
    return coeffs
