"""Alternating multilinear maps on symmetric matrices.

Maps are small expression trees (wedge products, traces, linear
combinations, matrix entries) over a few primitives.  Every node knows
how to tabulate itself on a :class:`Frame`; tables are cached on the frame,
so a subexpression shared by several maps is evaluated once per frame.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import count

import numpy as np

from ..fields import QQ
from .frame import Frame, basis_frame

SCALAR = "scalar"
MATRIX = "matrix"

_ids = count()


class AltMap:
    """Base class; ``degree`` arguments, values scalar or 2n x 2n matrices."""

    def __init__(self, degree: int, kind: str, n: int, label: str):
        if kind not in (SCALAR, MATRIX):
            raise ValueError(f"bad codomain {kind!r}")
        self.degree = degree
        self.kind = kind
        self.n = n
        self.label = label
        self._id = next(_ids)

    def __repr__(self):
        return f"<{self.label}: deg {self.degree}, {self.kind}, n={self.n}>"

    def __hash__(self):
        return self._id

    def __eq__(self, other):
        return self is other

    # evaluation -------------------------------------------------------
    def table(self, frame: Frame):
        key = self._id
        t = frame.cache.get(key)
        if t is None:
            if self.degree > frame.K:
                t = frame.zeros(self.degree, self.kind)
            else:
                t = self._compute(frame)
            frame.cache[key] = t
        return t

    def _compute(self, frame):
        raise NotImplementedError

    def top(self, frame: Frame):
        """Value at the full argument list of ``frame`` (requires K == degree)."""
        if frame.K != self.degree:
            raise ValueError(f"frame has {frame.K} arguments, map has degree {self.degree}")
        return self.table(frame)[0]

    def __call__(self, *mats, field=QQ):
        if len(mats) != self.degree:
            raise ValueError(f"{self.label} takes {self.degree} arguments, got {len(mats)}")
        if self.degree == 0:
            raise ValueError("degree-0 maps have no arguments to frame")
        return self.top(Frame(field, list(mats)))

    def on_basis(self, indices, field=QQ):
        """Value on increasing symmetric-basis indices (memoized on the basis frame)."""
        frame = basis_frame(self.n, field)
        mask = 0
        for i in indices:
            mask |= 1 << i
        if bin(mask).count("1") != self.degree or list(indices) != sorted(indices):
            raise ValueError("indices must be strictly increasing, one per argument")
        return self.table(frame)[frame.index[mask]]

    # algebra ----------------------------------------------------------
    def __xor__(self, other):
        return wedge(self, other)

    def __add__(self, other):
        return linear([(1, self), (1, other)])

    def __sub__(self, other):
        return linear([(1, self), (-1, other)])

    def __neg__(self):
        return linear([(-1, self)])

    def __rmul__(self, c):
        return linear([(c, self)])


def _check_compatible(F, G):
    if F.n != G.n:
        raise ValueError(f"dimension mismatch: n={F.n} vs n={G.n}")


def _prod(field, kg, g, kh, h):
    """Elementwise product of value arrays of kinds kg, kh (matrix product for two matrices)."""
    if kg == SCALAR and kh == SCALAR:
        return field.mul(g, h)
    if kg == SCALAR:
        return field.mul(field.convert(g)[..., None, None], h)
    if kh == SCALAR:
        return field.mul(g, field.convert(h)[..., None, None])
    return field.matmul(g, h)


def _nonzero_rows(field, t):
    nz = field.nonzero(t)
    if t.ndim > 1:
        nz = nz.reshape(len(t), -1).any(axis=1)
    return np.flatnonzero(nz)


class Identity(AltMap):
    """The inclusion X (or its transpose)."""

    def __init__(self, n, transpose=False):
        super().__init__(1, MATRIX, n, "X^t" if transpose else "X")
        self.transpose = transpose

    def _compute(self, frame):
        t = np.stack(frame.mats)
        return np.ascontiguousarray(np.swapaxes(t, 1, 2)) if self.transpose else t


class Wedge(AltMap):
    def __init__(self, G: AltMap, H: AltMap):
        _check_compatible(G, H)
        kind = SCALAR if G.kind == SCALAR and H.kind == SCALAR else MATRIX
        super().__init__(G.degree + H.degree, kind, G.n, f"({G.label} ^ {H.label})")
        self.G, self.H = G, H

    def _compute(self, frame):
        f = frame.field
        G, H = self.G, self.H
        g, h = G.table(frame), H.table(frame)
        out = frame.zeros(self.degree, self.kind)
        Am, Bm = frame.masks_of(G.degree), frame.masks_of(H.degree)
        gi, hi = _nonzero_rows(f, g), _nonzero_rows(f, h)
        if not len(gi) or not len(hi):
            return out
        if len(gi) <= len(hi):
            Bs_all = Bm[hi]
            for i in gi:
                A = int(Am[i])
                sel = (Bs_all & A) == 0
                if not sel.any():
                    continue
                Bs = Bs_all[sel]
                vals = _prod(f, G.kind, g[i], H.kind, h[hi[sel]])
                odd = frame.parity_fixed(A, Bs).astype(bool)
                if odd.any():
                    vals[odd] = f.neg(vals[odd])
                idx = frame.index[A | Bs]
                out[idx] = f.add(out[idx], vals)
        else:
            As_all = Am[gi]
            for j in hi:
                B = int(Bm[j])
                sel = (As_all & B) == 0
                if not sel.any():
                    continue
                As = As_all[sel]
                vals = _prod(f, G.kind, g[gi[sel]], H.kind, h[j])
                if vals.shape[0] != len(As):
                    vals = np.broadcast_to(vals, (len(As),) + vals.shape[1:]).copy()
                odd = frame.parity(As, np.full(len(As), B, dtype=np.int64)).astype(bool)
                if odd.any():
                    vals[odd] = f.neg(vals[odd])
                idx = frame.index[As | B]
                out[idx] = f.add(out[idx], vals)
        return out

    def top(self, frame):
        if frame.K != self.degree:
            raise ValueError(f"frame has {frame.K} arguments, map has degree {self.degree}")
        if self._id in frame.cache:
            return frame.cache[self._id][0]
        f = frame.field
        G, H = self.G, self.H
        g, h = G.table(frame), H.table(frame)
        As = frame.masks_of(G.degree)
        Bs = frame.full ^ As
        vals = _prod(f, G.kind, g, H.kind, h[frame.index[Bs]])
        odd = frame.parity(As, Bs).astype(bool)
        if odd.any():
            vals[odd] = f.neg(vals[odd])
        return f.sum(vals, axis=0)


class Trace(AltMap):
    def __init__(self, F: AltMap):
        if F.kind != MATRIX:
            raise ValueError("trace needs a matrix-valued map")
        super().__init__(F.degree, SCALAR, F.n, f"Tr{F.label}")
        self.F = F

    def _compute(self, frame):
        t = self.F.table(frame)
        return frame.field.sum(np.diagonal(t, axis1=1, axis2=2), axis=1)

    def top(self, frame):
        v = self.F.top(frame)
        return frame.field.sum(np.diagonal(v))


class Entry(AltMap):
    """Scalar map: the (i, j) entry of a matrix-valued map."""

    def __init__(self, F: AltMap, i: int, j: int):
        if F.kind != MATRIX:
            raise ValueError("entry of a scalar map")
        super().__init__(F.degree, SCALAR, F.n, f"{F.label}[{i},{j}]")
        self.F, self.i, self.j = F, i, j

    def _compute(self, frame):
        return np.ascontiguousarray(self.F.table(frame)[:, self.i, self.j])


class Embed(AltMap):
    """Scalar map times a constant matrix."""

    def __init__(self, s: AltMap, const, label=None):
        if s.kind != SCALAR:
            raise ValueError("embed expects a scalar map")
        super().__init__(s.degree, MATRIX, s.n, label or f"{s.label}*E")
        self.s = s
        self.const = np.array(const, dtype=object)

    def _compute(self, frame):
        f = frame.field
        E = f.convert(self.const)
        return f.mul(np.asarray(self.s.table(frame))[:, None, None], E[None])


class Linear(AltMap):
    """Rational linear combination of maps of equal degree and codomain."""

    def __init__(self, terms, label=None):
        terms = [(Fraction(c), F) for c, F in terms if Fraction(c) != 0]
        if not terms:
            raise ValueError("empty combination; use zero_map")
        F0 = terms[0][1]
        for _, F in terms:
            _check_compatible(F0, F)
            if F.degree != F0.degree or F.kind != F0.kind:
                raise ValueError("combination of maps of different degree or codomain")
        if label is None:
            label = " + ".join(f"{c}*{F.label}" if c != 1 else F.label for c, F in terms)
        super().__init__(F0.degree, F0.kind, F0.n, label)
        self.terms = terms

    def _combine(self, frame, vals):
        f = frame.field
        acc = None
        for (c, _), v in zip(self.terms, vals):
            v = v if c == 1 else f.mul(f.scalar(c), v)
            if acc is None:
                acc = v.copy() if isinstance(v, np.ndarray) else v
            else:
                acc = f.add(acc, v)
        return acc

    def _compute(self, frame):
        return self._combine(frame, [F.table(frame) for _, F in self.terms])

    def top(self, frame):
        if frame.K != self.degree:
            raise ValueError(f"frame has {frame.K} arguments, map has degree {self.degree}")
        if self._id in frame.cache:
            return frame.cache[self._id][0]
        vals = [frame.field.convert(F.top(frame)) for _, F in self.terms]
        return self._combine(frame, vals)


class Constant(AltMap):
    """Degree-0 scalar map."""

    def __init__(self, n, value=1):
        super().__init__(0, SCALAR, n, str(value))
        self.value = Fraction(value)

    def _compute(self, frame):
        out = frame.field.zeros((1,))
        out[0] = frame.field.scalar(self.value)
        return out


class Zero(AltMap):
    def __init__(self, degree, kind, n):
        super().__init__(degree, kind, n, "0")

    def _compute(self, frame):
        return frame.zeros(self.degree, self.kind)


class Pointwise(AltMap):
    """Map given by a function of explicit argument matrices (definitional routes)."""

    def __init__(self, fn, degree, kind, n, label):
        super().__init__(degree, kind, n, label)
        self.fn = fn

    def _compute(self, frame):
        out = frame.zeros(self.degree, self.kind)
        for t, mask in enumerate(frame.masks_of(self.degree)):
            args = [frame.mats[x] for x in frame.positions(int(mask))]
            out[t] = self.fn(args, frame.field)
        return out


def wedge(G: AltMap, H: AltMap) -> AltMap:
    """Wedge product; matrix values multiply in the order G * H."""
    if G.degree == 0 and isinstance(G, Constant):
        return linear([(G.value, H)])
    if H.degree == 0 and isinstance(H, Constant):
        return linear([(H.value, G)])
    return Wedge(G, H)


def wedge_all(maps) -> AltMap:
    maps = list(maps)
    out = maps[-1]
    for F in reversed(maps[:-1]):
        out = wedge(F, out)
    return out


def trace_of(F: AltMap) -> AltMap:
    return Trace(F)


def linear(terms, label=None) -> AltMap:
    terms = [(Fraction(c), F) for c, F in terms if Fraction(c) != 0]
    if not terms:
        raise ValueError("empty combination")
    if len(terms) == 1 and terms[0][0] == 1 and label is None:
        return terms[0][1]
    return Linear(terms, label)
