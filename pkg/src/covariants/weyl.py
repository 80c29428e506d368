"""Weight multisets and irreducible multiplicities for the root system D_n.

Characters are sparse ``Counter`` objects from integer weight tuples
(coordinates in the e_i basis) to multiplicities.  Multiplicities of
irreducibles are extracted with the rho-shifted alternating sum over the
Weyl group, which for D_n is the group of signed permutations with an even
number of sign changes.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations, product
from math import comb, factorial

from .bruteforce import so_invariant_dim_bruteforce  # noqa: F401  (n=2 route)
from .poly import PoincarePoly

MODULE_KINDS = ("vector", "sym2", "sym2_traceless", "wedge2")


def _e(n, i, c=1):
    return tuple(c if k == i else 0 for k in range(n))


def _add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def weights_of_module(kind: str, n: int) -> Counter:
    if n < 2:
        raise ValueError("rank n must be >= 2")
    if kind not in MODULE_KINDS:
        raise ValueError(f"unknown module kind {kind!r}; expected one of {MODULE_KINDS}")
    w = Counter()
    zero = (0,) * n
    if kind == "vector":
        for i in range(n):
            w[_e(n, i)] += 1
            w[_e(n, i, -1)] += 1
        return w
    for i in range(n):
        for j in range(i + 1, n):
            for s, t in product((1, -1), repeat=2):
                w[_add(_e(n, i, s), _e(n, j, t))] += 1
    if kind == "wedge2":
        w[zero] += n
    else:
        for i in range(n):
            w[_e(n, i, 2)] += 1
            w[_e(n, i, -2)] += 1
        w[zero] += n if kind == "sym2" else n - 1
    return w


def dimension(w: Counter) -> int:
    return sum(w.values())


def exterior_character(w: Counter, kmax: int) -> list:
    """Characters of wedge^k W for k = 0..kmax, as a list of Counters."""
    d = dimension(w)
    if kmax > d:
        raise ValueError(f"kmax={kmax} exceeds dim={d}")
    n = len(next(iter(w)))
    series = [Counter() for _ in range(kmax + 1)]
    series[0][(0,) * n] = 1
    done = 0
    for mu, mult in sorted(w.items()):
        for _ in range(mult):
            done += 1
            for k in range(min(kmax, done), 0, -1):
                dst = series[k]
                for nu, c in series[k - 1].items():
                    dst[_add(nu, mu)] += c
    return series


@dataclass(frozen=True)
class RootDatumD:
    n: int
    rho: tuple = field(init=False)
    weyl_group: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("D_n requires n >= 3 here; use the Lie-kernel oracle for n = 2")
        object.__setattr__(self, "rho", tuple(range(self.n - 1, -1, -1)))
        object.__setattr__(self, "weyl_group", tuple(_signed_perms(self.n)))

    def positive_roots(self):
        n = self.n
        roots = []
        for i in range(n):
            for j in range(i + 1, n):
                roots.append(_add(_e(n, i), _e(n, j, -1)))
                roots.append(_add(_e(n, i), _e(n, j)))
        return roots

    def order(self) -> int:
        return 2 ** (self.n - 1) * factorial(self.n)

    def is_dominant(self, lam) -> bool:
        lam = tuple(lam)
        n = self.n
        return all(lam[i] >= lam[i + 1] for i in range(n - 1)) and lam[n - 2] >= abs(lam[n - 1])

    def apply(self, w, v):
        perm, signs, _ = w
        out = [0] * self.n
        for i in range(self.n):
            out[perm[i]] = signs[perm[i]] * v[i]
        return tuple(out)

    def weyl_dim(self, lam) -> int:
        """Weyl dimension formula for the irreducible of highest weight lam."""
        lr = _add(tuple(lam), self.rho)
        num = den = 1
        for a in self.positive_roots():
            num *= sum(x * y for x, y in zip(lr, a))
            den *= sum(x * y for x, y in zip(self.rho, a))
        return num // den


def _signed_perms(n):
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        for signs in product((1, -1), repeat=n):
            if signs.count(-1) % 2 == 0:
                # determinant = sign(perm) since the number of flips is even
                yield perm, signs, (-1) ** inv


def irrep_mult(m: Counter, lam, d: RootDatumD) -> int:
    lam = tuple(lam)
    if len(lam) != d.n or not d.is_dominant(lam):
        raise ValueError(f"{lam} is not a dominant D_{d.n} weight")
    shifted = _add(lam, d.rho)
    total = 0
    for w in d.weyl_group:
        wr = d.apply(w, d.rho)
        total += w[2] * m.get(tuple(a - b for a, b in zip(shifted, wr)), 0)
    return total


def highest_weight(kind: str, n: int) -> tuple:
    """Highest weight of the irreducible module ``kind`` (trace removed for sym2)."""
    return {
        "vector": _e(n, 0),
        "sym2_traceless": _e(n, 0, 2),
        "wedge2": _add(_e(n, 0), _e(n, 1)),
    }[kind]


def parse_weight(text: str, n: int) -> tuple:
    """``"2e1"``, ``"e1+e2"`` or an explicit ``"2,0,0"``."""
    text = text.replace(" ", "")
    if "e" not in text:
        vals = tuple(int(x) for x in text.split(","))
        if len(vals) != n:
            raise ValueError(f"weight {text!r} needs {n} coordinates")
        return vals
    out = [0] * n
    for term in text.replace("-", "+-").split("+"):
        if not term:
            continue
        coef, _, idx = term.partition("e")
        c = {"": 1, "-": -1}.get(coef)
        c = int(coef) if c is None else c
        out[int(idx) - 1] += c
    return tuple(out)


def poincare_multiplicity(source: str, target, n: int, kmax: int, duality_dim: int | None = None):
    """Multiplicity of the irreducible ``target`` in wedge^k(source), k = 0..kmax.

    Returns ``(table, poly)``; with ``duality_dim = D`` the polynomial is
    completed by c_k = c_(D-k) for k > kmax.
    """
    d = RootDatumD(n)
    series = exterior_character(weights_of_module(source, n), kmax)
    table = [irrep_mult(series[k], target, d) for k in range(kmax + 1)]
    coeffs = list(table)
    if duality_dim is not None:
        if duality_dim > 2 * kmax + 1:
            raise ValueError("kmax too small to complete by duality")
        coeffs = [table[k] if k <= kmax else table[duality_dim - k] for k in range(duality_dim + 1)]
    return table, PoincarePoly(coeffs)


def check_binomial_totals(w: Counter, series) -> bool:
    d = dimension(w)
    return all(dimension(c) == comb(d, k) for k, c in enumerate(series))


def dominant_weights_in(m: Counter, d: RootDatumD):
    return sorted({mu for mu in m if d.is_dominant(mu)}, reverse=True)


def decompose(m: Counter, d: RootDatumD) -> dict:
    """All irreducible multiplicities of a character."""
    out = {}
    for lam in dominant_weights_in(m, d):
        c = irrep_mult(m, lam, d)
        if c:
            out[lam] = c
    return out


# paper cases for the B^- modules
PAPER_CASES = {
    "bminus-sym": dict(source="sym2_traceless", target="2e1", n=3, kmax=10, duality_dim=20,
                       divide=(5, 6)),
    "bminus-skew": dict(source="wedge2", target="2e1", n=4, kmax=14, duality_dim=28,
                        divide=(3, 4, 7)),
}


def bplus_profile_weyl(n: int):
    """Graded dims of (wedge(M+)* (x) M-)^G from characters: the wedge2 = (e1+e2)
    multiplicity in wedge(traceless S^2 V), times (1 + t) for the trace line."""
    d = RootDatumD(n)
    w = weights_of_module("sym2_traceless", n)
    series = exterior_character(w, dimension(w))
    lam = highest_weight("wedge2", n)
    traceless = PoincarePoly([irrep_mult(c, lam, d) for c in series])
    return traceless * PoincarePoly([1, 1])
