from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from covariants.fields import QQ, PrimeField
from covariants.multilinear import verify
from covariants.multilinear.altmap import MATRIX, SCALAR, trace_of, wedge
from covariants.multilinear.covariants import (covariant_dOmega, covariant_Omega, covariant_Q,
                                               covariant_T, pointwise_dOmega, pointwise_Omega,
                                               pointwise_Q, pointwise_St, power)
from covariants.multilinear.frame import Frame, sym_basis, traceless_basis
from covariants.multilinear.pfaffian import det, pfaffian, pfaffian_matchings
from covariants.multilinear.sampling import random_skew, random_symmetric, rng_for
from covariants.multilinear.verify import (Infeasible, alt_map_equal, decompose_in_invariant_basis,
                                           exhaustive_cost, zero_like)

N2 = 2


@pytest.mark.parametrize("fast, direct", [
    (covariant_Q, pointwise_Q), (covariant_Omega, pointwise_Omega), (covariant_dOmega, pointwise_dOmega),
])
def test_fast_route_matches_definition(fast, direct):
    assert alt_map_equal(fast(N2), direct(N2), "exhaustive").equal


def test_power_matches_standard_polynomial():
    for h in (2, 3, 4):
        assert alt_map_equal(power(N2, h), pointwise_St(N2, h), "exhaustive").equal


def test_fast_route_n3_randomized():
    assert alt_map_equal(covariant_Omega(3), pointwise_Omega(3), "randomized", trials=2).equal


def _perm_sign(p):
    return (-1) ** sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


@pytest.mark.parametrize("make", [covariant_Q, covariant_Omega, covariant_dOmega,
                                  lambda n: power(n, 3), lambda n: covariant_T(0, n)])
def test_antisymmetry(make):
    F = make(N2)
    rng = rng_for(1)
    for _ in range(10):
        mats = [random_symmetric(4, rng) for _ in range(F.degree)]
        base = np.asarray(F(*mats))
        p = rng.permutation(F.degree)
        swapped = np.asarray(F(*[mats[i] for i in p]))
        assert np.all(swapped == _perm_sign(p) * base)
        if F.degree >= 2:
            assert not np.any(np.asarray(F(mats[0], mats[0], *mats[2:])) != 0)


@pytest.mark.parametrize("make", [covariant_Q, covariant_Omega, covariant_dOmega])
def test_multilinearity(make):
    F = make(N2)
    rng = rng_for(2)
    for t in range(50 // 3 + 1):
        mats = [random_symmetric(4, rng) for _ in range(F.degree)]
        Y = random_symmetric(4, rng)
        a, b = Fraction(int(rng.integers(-5, 6))), Fraction(int(rng.integers(-5, 6)))
        slot = t % F.degree
        mixed = list(mats)
        mixed[slot] = a * mats[slot] + b * Y
        other = list(mats)
        other[slot] = Y
        lhs = np.asarray(F(*mixed))
        rhs = a * np.asarray(F(*mats)) + b * np.asarray(F(*other))
        assert np.all(lhs == rhs)


def test_wedge_associative():
    a, b, c = power(N2, 1), covariant_Omega(N2), power(N2, 2)
    assert alt_map_equal(wedge(wedge(a, b), c), wedge(a, wedge(b, c)), "exhaustive").equal


def test_graded_sign_rule_for_scalars():
    T0, Om = covariant_T(0, N2), covariant_Omega(N2)
    # F ^ G = (-1)^(deg F deg G) G ^ F when one factor is scalar-valued
    assert alt_map_equal(wedge(T0, Om), wedge(Om, T0), "exhaustive").equal
    X = power(N2, 1)
    assert alt_map_equal(wedge(T0, X), -wedge(X, T0), "exhaustive").equal


def test_scalar_wedge_scalar_sign():
    T0, T1 = covariant_T(0, N2), covariant_T(1, N2)
    # odd times odd degree anticommutes, so T0 ^ T0 = 0 as well
    assert alt_map_equal(wedge(T0, T1), -wedge(T1, T0), "exhaustive").equal
    T0T0 = wedge(T0, T0)
    assert alt_map_equal(T0T0, zero_like(T0T0), "exhaustive").equal


def test_pfaffian_examples():
    J = np.array([[0, 1], [-1, 0]], dtype=object)
    assert pfaffian(J) == 1
    M = np.array([[0, 1, 2, 3], [-1, 0, 4, 5], [-2, -4, 0, 6], [-3, -5, -6, 0]], dtype=object)
    assert pfaffian(M) == 1 * 6 - 2 * 5 + 3 * 4
    with pytest.raises(ValueError):
        pfaffian(np.ones((2, 2), dtype=object))
    with pytest.raises(ValueError):
        pfaffian(np.zeros((3, 3), dtype=object))


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10**6))
def test_pfaffian_squared_is_det(h, seed):
    M = random_skew(2 * h, rng_for(seed))
    assert Fraction(pfaffian(M)) ** 2 == Fraction(det(M))
    assert pfaffian(M) == pfaffian_matchings(M)


def test_bases():
    assert len(sym_basis(2)) == 10
    tl = traceless_basis(2)
    assert len(tl) == 9
    assert all(np.trace(E) == 0 for _, E in tl)


def test_alt_map_equal_counterexample():
    St2 = power(N2, 2)
    cmp = alt_map_equal(St2, zero_like(St2), "exhaustive")
    assert not cmp.equal
    i, j = cmp.witness["basis_indices"]
    Ei, Ej = sym_basis(2)[i][1], sym_basis(2)[j][1]
    assert np.any(Ei @ Ej - Ej @ Ei != 0)
    assert not alt_map_equal(St2, zero_like(St2), "randomized", trials=3).equal


def test_alt_map_equal_shape_mismatch():
    with pytest.raises(ValueError):
        alt_map_equal(power(N2, 2), power(N2, 3))


def test_exhaustive_refused_at_n3():
    Q3 = covariant_Q(3)
    assert exhaustive_cost(Q3) > verify.EXHAUSTIVE_LIMIT
    with pytest.raises(Infeasible):
        alt_map_equal(Q3, zero_like(Q3), "exhaustive")


def test_decompose_trace():
    fit = decompose_in_invariant_basis(covariant_T(1, N2), N2)
    assert fit.ok
    assert fit.scalars() == {"T1": "1", "T0^Q": "0"}


def test_decompose_round_trip():
    T0, T1, Q = covariant_T(0, N2), covariant_T(1, N2), covariant_Q(N2)
    F = 3 * T1 + Fraction(-2, 7) * wedge(T0, Q)
    fit = decompose_in_invariant_basis(F, N2)
    assert fit.coefficient("T1") == 3 and fit.coefficient("T0^Q") == Fraction(-2, 7)
    rebuilt = verify.combination(verify.invariant_basis(N2, 5), fit.coeffs, F)
    assert alt_map_equal(F, rebuilt).equal


def test_omega_is_skew_and_Q_kills_identity():
    rng = rng_for(5)
    mats = [random_symmetric(4, rng) for _ in range(2)]
    W = np.asarray(covariant_Omega(N2)(*mats))
    assert np.all(W == -W.T)
    Id = np.eye(4, dtype=np.int64).astype(object)
    others = [random_symmetric(4, rng) for _ in range(3)]
    assert covariant_Q(N2)(Id, *others) == 0


def test_T0_is_trace():
    rng = rng_for(6)
    A = random_symmetric(4, rng)
    assert covariant_T(0, N2)(A) == np.trace(A)


def test_prime_field_evaluation_agrees():
    F = PrimeField(101)
    rng = rng_for(7)
    mats = [random_symmetric(4, rng, den=1) for _ in range(4)]
    exact = Fraction(covariant_Q(N2)(*mats))
    assert int(covariant_Q(N2)(*mats, field=F)) == exact.numerator % 101


@pytest.mark.parametrize("name", sorted(verify.VERIFIERS))
def test_verifiers_n2(name):
    rep = verify.VERIFIERS[name](2)
    assert rep["status"] == "PASS", rep


def test_solved_scalars_n2():
    assert verify.verify_duale(2)["c"] == "-1"
    pair = verify.verify_pairing(2)
    assert pair["q"] == "8" and pair["residual"] == {}
    assert pair["side_claim"]["involves_top_trace"] is False
    miss = verify.verify_missing(2)
    assert (miss["q1"], miss["q2"], miss["k"]) == ("1/16", "-1/32", "-1/8")
    assert all(miss["paper_sign_agrees"].values())


def test_dOmega_trace_on_full_domain():
    # on symmetric matrices with trace the pairing with X^2 is T0 ^ Q / 2
    rep = verify.verify_duale(2)
    assert rep["full_domain"]["trace_dOmega_X2"] == {"T1": "0", "T0^Q": "1/2"}


def test_property_suite():
    rows = verify.property_suite(trials=20)
    assert all(r["status"] == "PASS" for r in rows), rows
    consts = {r["property"]: r.get("constant") for r in rows}
    assert consts["eq3-bracket-n2"] == "1/4" and consts["eq4-gram-n3"] == "1/64"


def test_verifier_reports_failure():
    # a wrong identity must come back FAIL with a witness
    cmp = alt_map_equal(covariant_Q(N2), 2 * covariant_Q(N2), "exhaustive")
    assert not cmp.equal and cmp.witness is not None
