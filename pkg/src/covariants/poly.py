"""Integer polynomials in one variable t (Poincare polynomials)."""
from __future__ import annotations

from dataclasses import dataclass


def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class PoincarePoly:
    coeffs: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(int(x) for x in self.coeffs))

    @classmethod
    def monomial(cls, d, c=1):
        return cls([0] * d + [c])

    @classmethod
    def one_plus(cls, degrees):
        """prod_d (1 + t^d)."""
        out = cls([1])
        for d in degrees:
            out = out * (cls([1]) + cls.monomial(d))
        return out

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return PoincarePoly([self[k] + other[k] for k in range(m)])

    def __sub__(self, other):
        m = max(len(self.coeffs), len(other.coeffs))
        return PoincarePoly([self[k] - other[k] for k in range(m)])

    def __mul__(self, other):
        if isinstance(other, int):
            return PoincarePoly([other * c for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return PoincarePoly(out)

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __call__(self, t):
        return sum(c * t**k for k, c in enumerate(self.coeffs))

    def divmod(self, divisor: "PoincarePoly"):
        """Exact division by a polynomial with leading coefficient +-1."""
        if not divisor:
            raise ZeroDivisionError("division by the zero polynomial")
        lead = divisor.coeffs[-1]
        if lead not in (1, -1):
            raise ValueError("divisor must have unit leading coefficient")
        rem = list(self.coeffs)
        dd = divisor.degree
        q = [0] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            c = rem[k] * lead
            if c:
                q[k - dd] = c
                for j, b in enumerate(divisor.coeffs):
                    rem[k - dd + j] -= c * b
        return PoincarePoly(q), PoincarePoly(rem)

    def to_list(self, length=None):
        c = list(self.coeffs)
        if length is not None:
            c = (c + [0] * length)[:length]
        return c

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "1" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if k == 0:
                s = str(c)
            elif c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}{mono}"
            terms.append(s)
        return " + ".join(terms).replace("+ -", "- ")
