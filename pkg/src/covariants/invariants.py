"""Graded dimensions of SO(2n)-invariants by diagram enumeration.

Degrees are exterior (wedge) degrees: the summand H_a of the exterior
algebra on S^2 V sits in degree |lambda(a)| / 2.
"""
from __future__ import annotations

from dataclasses import dataclass

from .partitions import conjugate, enumerate_asequences, shape_from_hooks, size, two_box_additions
from .poly import PoincarePoly

N_MAX = 5


@dataclass(frozen=True)
class GradedCount:
    coeffs: tuple

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def poly(self) -> PoincarePoly:
        return PoincarePoly(self.coeffs)


def so_trivial_mult(lam, m: int) -> int:
    """Multiplicity (0 or 1) of the trivial SO(m)-module in S_lambda(C^m), m even.

    ``lam`` is read with rows = symmetric powers: the invariant exists iff
    every part is even, or lam has exactly m parts, all odd (2mu + 1^m).
    """
    lam = tuple(lam)
    if len(lam) > m:
        return 0
    if all(x % 2 == 0 for x in lam):
        return 1
    if len(lam) == m and all(x % 2 == 1 for x in lam):
        return 1
    return 0


def _check_n(n):
    if n < 1:
        raise ValueError("n must be >= 1")


def _graded(pairs):
    top = max((k for k, _ in pairs), default=0)
    out = [0] * (top + 1)
    for k, c in pairs:
        out[k] += c
    return GradedCount(tuple(PoincarePoly(out).to_list(top + 1)))


def _wedge_degree(lam):
    s = size(lam)
    if s % 2:
        raise ValueError(f"odd-size shape {lam} cannot occur")
    return s // 2


def count_invariants_wedge_sym(n: int) -> GradedCount:
    """Graded dimension of (wedge S^2 C^2n)^SO(2n); total 2^(n+1)."""
    _check_n(n)
    m = 2 * n
    pairs = []
    for a in enumerate_asequences(n):
        lam = shape_from_hooks(a)
        pairs.append((_wedge_degree(lam), so_trivial_mult(conjugate(lam), m)))
    return _graded(pairs)


def count_B_plus(n: int) -> GradedCount:
    """Graded dimension of (wedge S^2 V (x) wedge^2 V)^SO(2n); total 2n * 2^n.

    Each H_a contributes #{lam in {a}_2 : invariant} in the wedge degree of
    H_a itself; the two added boxes are the codomain wedge^2 V.
    """
    _check_n(n)
    m = 2 * n
    pairs = []
    for a in enumerate_asequences(n):
        k = _wedge_degree(shape_from_hooks(a))
        c = sum(so_trivial_mult(conjugate(lam), m) for lam in two_box_additions(a, n))
        pairs.append((k, c))
    return _graded(pairs)


def poincare_A(n: int) -> PoincarePoly:
    """(1 + t^2n) prod_{i<n} (1 + t^(4i+1)): generators T_i and Q."""
    _check_n(n)
    return PoincarePoly.one_plus([2 * n] + [4 * i + 1 for i in range(n)])


def poincare_A_sub(n: int) -> PoincarePoly:
    """Poincare polynomial of the subalgebra generated by T_0..T_{n-2} and Q."""
    _check_n(n)
    return PoincarePoly.one_plus([2 * n] + [4 * i + 1 for i in range(n - 1)])


def generator_degrees(n: int) -> list:
    """Degrees of the module basis X^2, X^3, ..., X^(4n-5), Omega, dOmega."""
    if n < 2:
        raise ValueError("the module basis needs n >= 2")
    degs = []
    for i in range(n - 1):
        degs += [4 * i + 2, 4 * i + 3]
    return degs + [2 * n - 2, 2 * n - 1]


def poincare_B_plus_predicted(n: int) -> PoincarePoly:
    gens = PoincarePoly([0])
    for d in generator_degrees(n):
        gens = gens + PoincarePoly.monomial(d)
    return poincare_A_sub(n) * gens


@dataclass(frozen=True)
class DivisionResult:
    divisor: PoincarePoly
    quotient: PoincarePoly
    remainder: PoincarePoly

    @property
    def exact(self) -> bool:
        return not self.remainder


def divide_check(p: PoincarePoly, degrees) -> DivisionResult:
    """Divide ``p`` by prod (1 + t^d) over ``degrees``."""
    div = PoincarePoly.one_plus(degrees)
    q, r = p.divmod(div)
    return DivisionResult(div, q, r)
