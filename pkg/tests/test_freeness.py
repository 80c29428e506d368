import numpy as np
import pytest

from covariants.fields import P_DEFAULT, PrimeField
from covariants.invariants import count_B_plus, divide_check, poincare_B_plus_predicted
from covariants.freeness import (CandidateBasis, build_candidates, certify_freeness_Bplus,
                                 certify_non_freeness, graded_rank)
from covariants.multilinear.sampling import random_rotation, random_symmetric, rng_for


@pytest.fixture(scope="module")
def cands2():
    return build_candidates(2)


def test_candidate_profile_n2(cands2):
    assert len(cands2.elements) == 16
    assert cands2.profile() == poincare_B_plus_predicted(2)
    assert max(cands2.degrees()) == 8
    assert len({c.label for c in cands2.elements}) == 16


def test_candidate_profile_n3():
    c = build_candidates(3)
    assert len(c.elements) == 48
    assert c.profile() == poincare_B_plus_predicted(3)


def test_graded_rank_small(cands2):
    assert graded_rank(cands2, 2) == 2
    assert graded_rank(cands2, 3) == 4
    assert graded_rank(cands2, 1) == 0


def test_certificate_n2(cands2):
    rep = certify_freeness_Bplus(2)
    assert rep["status"] == "PASS"
    assert rep["total_rank"] == 16 and rep["oracle_source"] == "so-kernel"
    for row in rep["per_degree"]:
        assert row["rank"] == row["candidates"] == row["oracle"] == row["enumeration"]


def test_duplicate_candidate_fails(cands2):
    dup = [c for c in cands2.elements if c.degree == 3][0]
    bad = CandidateBasis(2, cands2.elements + [dup])
    rep = certify_freeness_Bplus(2, cands=bad)
    assert rep["status"] == "FAIL"
    assert rep["first_failure"]["k"] == 3
    assert rep["first_failure"]["rank"] == 4 < rep["first_failure"]["candidates"]


def test_single_removal_drops_rank(cands2):
    for drop in range(len(cands2.elements)):
        kept = [c for t, c in enumerate(cands2.elements) if t != drop]
        k = cands2.elements[drop].degree
        reduced = CandidateBasis(2, kept)
        assert graded_rank(reduced, k) == graded_rank(cands2, k) - 1


def test_candidates_are_equivariant(cands2):
    rng = rng_for(11)
    g = random_rotation(4, rng)
    for c in cands2.elements[::3]:
        mats = [random_symmetric(4, rng) for _ in range(c.degree)]
        a = np.asarray(c.amap(*mats))
        b = np.asarray(c.amap(*[g @ A @ g.T for A in mats]))
        assert np.all(g @ a @ g.T == b)
        assert np.all(a == -a.T)


def test_sampled_rank_over_prime_n2(cands2):
    F = PrimeField(P_DEFAULT)
    for k in cands2.degrees():
        assert graded_rank(cands2, k, field=F, mode="sampled") == len(cands2.of_degree(k))


@pytest.mark.parametrize("case, n", [("sym_sym", 3), ("skew_sym", 4)])
def test_non_freeness(case, n):
    rep = certify_non_freeness(case)
    assert rep["n"] == n and rep["status"] == "PASS"
    assert any(rep["remainder"])


def test_non_freeness_remainders():
    assert certify_non_freeness("sym_sym")["remainder"] == [-1, 0, 0, -1, -1, 0, 0, 0, -1, -1, 1]
    assert certify_non_freeness("skew_sym")["remainder"] == [-1, 0, -1, -1, 0, -1, 0, -1, 0, -1, -1, 0, -1]
    with pytest.raises(ValueError):
        certify_non_freeness("bplus")


def test_free_profile_divides_exactly():
    r = divide_check(poincare_B_plus_predicted(3), [1, 5, 6])
    assert r.exact and r.quotient(1) == 6


def test_enumeration_agrees_with_prediction():
    for n in (2, 3):
        assert list(count_B_plus(n).coeffs) == poincare_B_plus_predicted(n).to_list(len(count_B_plus(n).coeffs))


def test_unsupported_n():
    with pytest.raises(ValueError):
        certify_freeness_Bplus(4)
    with pytest.raises(ValueError):
        build_candidates(1)
