from itertools import product
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from covariants.partitions import (FrobeniusCoords, cells, conjugate, contains, enumerate_asequences,
                                   frobenius_coords, hooks_from_shape, make_partition, shape_from_hooks,
                                   size, strip_additions, two_box_additions, two_box_vertical, weyl_dim)

partitions = st.lists(st.integers(1, 8), max_size=6).map(lambda xs: tuple(sorted(xs, reverse=True)))
asequences = st.sets(st.integers(0, 7), max_size=5).map(lambda s: tuple(sorted(s, reverse=True)))


def transpose_by_cells(lam):
    cs = {(j, i) for i, j in cells(lam)}
    rows = {}
    for i, _ in cs:
        rows[i] = rows.get(i, 0) + 1
    return tuple(rows[i] for i in sorted(rows))


def test_conjugate_examples():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate(()) == ()
    assert conjugate((5, 5, 4, 3, 3, 2)) == (6, 6, 5, 3, 2)
    assert transpose_by_cells((5, 5, 4, 3, 3, 2)) == (6, 6, 5, 3, 2)


@settings(max_examples=1000)
@given(partitions)
def test_conjugation_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert size(conjugate(lam)) == size(lam)
    assert conjugate(lam) == transpose_by_cells(lam)


def test_make_partition_rejects():
    with pytest.raises(ValueError):
        make_partition((1, 2))
    with pytest.raises(ValueError):
        make_partition((2, -1))


def test_shape_from_hooks_examples():
    assert shape_from_hooks((0,)) == (1, 1)
    assert shape_from_hooks(()) == ()
    lam = shape_from_hooks((4, 3, 1))
    assert size(lam) == 22
    fc = frobenius_coords(lam)
    assert fc.arms == (4, 3, 1) and fc.legs == (5, 4, 2)
    # first column has length a_1 + 2 = 6
    assert len(lam) == 6


def test_frobenius_examples():
    assert frobenius_coords((1, 1)) == FrobeniusCoords((0,), (1,))
    assert frobenius_coords((2, 1)) == FrobeniusCoords((1,), (1,))


@given(asequences)
def test_hooks_round_trip(a):
    lam = shape_from_hooks(a)
    fc = frobenius_coords(lam)
    assert fc.arms == a
    assert fc.legs == tuple(x + 1 for x in a)
    assert size(lam) == sum(2 * x + 2 for x in a)
    assert hooks_from_shape(lam) == a
    # diagonal length is the number of hooks
    assert sum(1 for i, x in enumerate(lam) if x > i) == len(a)


@given(partitions)
def test_frobenius_reconstructs(lam):
    fc = frobenius_coords(lam)
    assert fc.partition() == lam
    assert fc.size() == size(lam)
    lamc = conjugate(lam)
    for i, (al, be) in enumerate(zip(fc.arms, fc.legs)):
        assert lam[i] - i - 1 == al and lamc[i] - i - 1 == be


def ssyt_count(lam, m):
    """Semistandard tableaux of shape lam with entries 1..m, by brute force."""
    cs = cells(lam)
    total = 0
    for fill in product(range(1, m + 1), repeat=len(cs)):
        T = dict(zip(cs, fill))
        if all(T[(i, j)] <= T[(i, j + 1)] for i, j in cs if (i, j + 1) in T) and \
                all(T[(i, j)] < T[(i + 1, j)] for i, j in cs if (i + 1, j) in T):
            total += 1
    return total


def test_weyl_dim_examples():
    assert weyl_dim((1,), 4) == 4
    assert weyl_dim((1, 1), 4) == 6
    assert weyl_dim((2, 2), 3) == 6 == ssyt_count((2, 2), 3)
    assert weyl_dim((1, 1, 1), 2) == 0


@pytest.mark.parametrize("lam,m", [((2, 1), 3), ((3, 1), 2), ((2, 2, 1), 3), ((3,), 3), ((2, 1, 1), 4)])
def test_weyl_dim_vs_tableaux(lam, m):
    assert weyl_dim(lam, m) == ssyt_count(lam, m)


@given(st.integers(1, 8), st.integers(0, 8))
def test_weyl_dim_rows_and_columns(m, k):
    if k:
        assert weyl_dim((k,), m) == comb(m + k - 1, k)
        assert weyl_dim((1,) * k, m) == comb(m, k)


def test_enumerate_asequences_counts():
    assert enumerate_asequences(1) == [(), (1,), (0,), (1, 0)]
    for n in range(1, 5):
        seqs = enumerate_asequences(n)
        assert len(seqs) == 2 ** (2 * n) == len(set(seqs))
        # every GL shape fits in 2n rows
        assert all(not a or a[0] + 1 <= 2 * n for a in seqs)


def test_strip_additions_pieri_count():
    # h_2 times s_(2,1) in three variables has the dimensions of the Pieri terms
    res = strip_additions((2, 1), 2)
    assert res == sorted([(4, 1), (3, 2), (3, 1, 1), (2, 2, 1)])
    assert sum(weyl_dim(nu, 3) for nu in res) == weyl_dim((2, 1), 3) * comb(4, 2)
    assert strip_additions((2, 1), 2, "vertical") == sorted(conjugate(nu) for nu in strip_additions((2, 1, ), 2))


def test_two_box_additions_n1():
    # exhaustive: partitions of 2, rows <= 2, each column grows by at most one
    candidates = [(2,), (1, 1)]
    keep = [nu for nu in candidates if nu[0] <= 2 and all(c <= 1 for c in conjugate(nu))]
    assert two_box_additions((), 1) == keep == [(2,)]


@given(st.integers(1, 3).flatmap(lambda n: st.tuples(st.just(n), st.sampled_from(enumerate_asequences(n)))))
def test_two_box_additions_properties(case):
    n, a = case
    lam = shape_from_hooks(a)
    out = two_box_additions(a, n)
    assert len(out) == len(set(out))
    for nu in out:
        assert size(nu) == size(lam) + 2
        assert contains(nu, lam)
        assert nu[0] <= 2 * n


def test_vertical_variant_differs():
    # the cross-examination routine puts both boxes in one column
    assert (1, 1, 1, 1) in two_box_vertical((0,), 2)
    assert (1, 1, 1, 1) not in two_box_additions((0,), 2)
