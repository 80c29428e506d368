from collections import Counter
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from covariants.invariants import count_B_plus, count_invariants_wedge_sym
from covariants.weyl import (RootDatumD, bplus_profile_weyl, check_binomial_totals, decompose,
                             dimension, exterior_character, highest_weight, irrep_mult, parse_weight,
                             poincare_multiplicity, so_invariant_dim_bruteforce, weights_of_module)
from covariants.bruteforce import BruteForceTooLarge, bruteforce_profile

TABLE1 = [0, 1, 0, 0, 1, 2, 2, 1, 1, 2, 4]
TABLE2 = [0, 0, 0, 1, 1, 0, 2, 3, 1, 1, 4, 4, 1, 3, 6]


def test_module_dimensions():
    assert dimension(weights_of_module("vector", 3)) == 6
    assert dimension(weights_of_module("sym2_traceless", 3)) == 20
    assert dimension(weights_of_module("sym2", 3)) == 21
    assert dimension(weights_of_module("wedge2", 4)) == 28
    with pytest.raises((KeyError, ValueError)):
        weights_of_module("spin", 3)


def test_root_datum():
    for n in (3, 4):
        d = RootDatumD(n)
        assert len(d.weyl_group) == d.order() == 2 ** (n - 1) * factorial(n)
        assert d.rho == tuple(range(n - 1, -1, -1))
        assert len(d.positive_roots()) == n * (n - 1)
    with pytest.raises(ValueError):
        RootDatumD(2)


@pytest.mark.parametrize("kind", ["vector", "sym2", "sym2_traceless", "wedge2"])
def test_weights_weyl_invariant(kind):
    d = RootDatumD(3)
    w = weights_of_module(kind, 3)
    for g in d.weyl_group[::max(1, len(d.weyl_group) // 20)]:
        assert Counter({d.apply(g, mu): c for mu, c in w.items()}) == w


def test_exterior_character_basics():
    w = weights_of_module("sym2_traceless", 3)
    series = exterior_character(w, 20)
    assert series[0] == Counter({(0, 0, 0): 1})
    assert series[1] == w
    top = series[20]
    assert sum(top.values()) == 1
    assert check_binomial_totals(w, series)


def test_irrep_mult_examples():
    d = RootDatumD(3)
    assert irrep_mult(weights_of_module("vector", 3), (1, 0, 0), d) == 1
    series = exterior_character(weights_of_module("sym2_traceless", 3), 10)
    assert irrep_mult(series[5], (2, 0, 0), d) == 2
    assert irrep_mult(series[10], (2, 0, 0), d) == 4
    with pytest.raises(ValueError):
        irrep_mult(series[5], (0, 2, 0), d)


def test_decomposition_dimensions():
    d = RootDatumD(3)
    series = exterior_character(weights_of_module("sym2_traceless", 3), 4)
    for k in range(5):
        parts = decompose(series[k], d)
        assert all(c > 0 for c in parts.values())
        assert sum(c * d.weyl_dim(lam) for lam, c in parts.items()) == comb(20, k)


def test_table1():
    table, poly = poincare_multiplicity("sym2_traceless", (2, 0, 0), 3, 10, 20)
    assert table == TABLE1
    c = poly.to_list(21)
    assert all(c[k] == c[20 - k] for k in range(21))


def test_table2():
    table, poly = poincare_multiplicity("wedge2", (2, 0, 0, 0), 4, 14, 28)
    assert table == TABLE2
    displayed = {3: 1, 4: 1, 6: 2, 7: 3, 8: 1, 9: 1, 10: 4, 11: 4, 12: 1, 13: 3, 14: 6, 15: 3,
                 16: 1, 17: 4, 18: 4, 19: 1, 20: 1, 21: 3, 22: 2, 24: 1, 25: 1}
    assert poly.to_list(29) == [displayed.get(k, 0) for k in range(29)]


def test_duality_needs_enough_degrees():
    with pytest.raises(ValueError):
        poincare_multiplicity("sym2_traceless", (2, 0, 0), 3, 5, 20)


def test_degree_zero_vanishes():
    table, _ = poincare_multiplicity("wedge2", (1, 1, 0), 3, 3)
    assert table[0] == 0


def test_parse_weight():
    assert parse_weight("2e1", 3) == (2, 0, 0)
    assert parse_weight("e1+e2", 4) == (1, 1, 0, 0)
    assert parse_weight("2,0,0", 3) == (2, 0, 0)
    assert parse_weight("e1-e3", 3) == (1, 0, -1)
    assert highest_weight("wedge2", 3) == (1, 1, 0)


def test_invariant_character_cross_checks():
    # trivial multiplicities in wedge(traceless)^* times (1 + t) give the A profile
    d = RootDatumD(3)
    series = exterior_character(weights_of_module("sym2_traceless", 3), 20)
    triv = [irrep_mult(s, (0, 0, 0), d) for s in series]
    withtrace = [triv[k] + (triv[k - 1] if k else 0) for k in range(21)] + [triv[20]]
    assert withtrace == list(count_invariants_wedge_sym(3).coeffs)
    assert bplus_profile_weyl(3).to_list() == list(count_B_plus(3).coeffs)[:20]


def test_bruteforce_examples():
    assert so_invariant_dim_bruteforce(0, 2, "sym") == 1
    assert so_invariant_dim_bruteforce(1, 2, "skew") == 0
    skew = bruteforce_profile(2, "skew")
    assert sum(skew) == 16
    assert skew == list(count_B_plus(2).coeffs) + [0] * (11 - len(count_B_plus(2).coeffs))


def test_bruteforce_scalar_matches_enumeration():
    prof = bruteforce_profile(2, "scalar")
    assert prof == list(count_invariants_wedge_sym(2).coeffs)


def test_bruteforce_exact_pass_agrees():
    assert so_invariant_dim_bruteforce(3, 2, "skew", exact=True) == 4


def test_bruteforce_size_guard():
    with pytest.raises(BruteForceTooLarge):
        so_invariant_dim_bruteforce(10, 3, "skew")
