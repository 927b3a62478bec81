from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from hookimm.errors import InvalidArgument
from hookimm.partitions import (
    Partition,
    as_partition,
    class_size,
    hook,
    hook_kostka,
    kostka,
    majorizes,
    partitions_of,
    pate_successor,
    ssyt,
    syt_count,
    transpose,
    z_value,
)

partition_st = st.integers(1, 9).flatmap(lambda n: st.sampled_from(partitions_of(n)))


def test_partition_counts():
    assert partitions_of(1) == (Partition((1,)),)
    assert [tuple(p) for p in partitions_of(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(7)) == 15
    assert [len(partitions_of(n)) for n in range(1, 11)] == [1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partition_validation():
    with pytest.raises(InvalidArgument):
        Partition((1, 2))
    with pytest.raises(InvalidArgument):
        Partition((2, 0))
    with pytest.raises(InvalidArgument):
        partitions_of(0)
    with pytest.raises(InvalidArgument):
        hook(3, 4)


def test_as_partition_parses_strings():
    assert as_partition("411") == (4, 1, 1)
    assert as_partition("4,1,1") == (4, 1, 1)
    assert as_partition("10,2") == (10, 2)
    assert str(Partition((4, 1, 1))) == "411"


@pytest.mark.parametrize("lam, expected", [((5,), (1,) * 5), ((4, 1, 1), (3, 1, 1, 1)), ((4, 4, 3, 2), (4, 4, 3, 2))])
def test_transpose_examples(lam, expected):
    assert transpose(lam) == expected


@given(partition_st)
def test_transpose_is_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert sum(transpose(lam)) == sum(lam)


def test_z_values():
    assert z_value((1, 1, 1, 1)) == 24
    assert z_value((6,)) == 6
    assert z_value((2, 2, 1)) == 8


@pytest.mark.parametrize("n", range(1, 9))
def test_class_sizes_sum_to_factorial(n):
    assert sum(class_size(l) for l in partitions_of(n)) == factorial(n)
    assert all(class_size(l) * z_value(l) == factorial(n) for l in partitions_of(n))


def test_kostka_hook_values():
    assert kostka((4, 1, 1), (2, 2, 1, 1)) == 3
    assert kostka((4, 1, 1), (3, 1, 1, 1)) == 3
    assert kostka((3, 1, 1), (2, 1, 1, 1)) == 3
    assert all(kostka(l, l) == 1 for l in partitions_of(6))


def test_ssyt_are_semistandard():
    for T in ssyt((3, 2), (2, 2, 1)):
        assert all(r[i] <= r[i + 1] for r in T for i in range(len(r) - 1))
        assert all(T[i][j] < T[i + 1][j] for i in range(len(T) - 1) for j in range(len(T[i + 1])))
    assert len(list(ssyt((3, 2), (2, 2, 1)))) == kostka((3, 2), (2, 2, 1)) == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_matches_brute_force(n):
    for lam in partitions_of(n):
        for mu in partitions_of(n):
            assert kostka(lam, mu) == oracles.kostka(lam, mu)


@pytest.mark.parametrize("n", range(1, 9))
def test_hook_kostka_binomial(n):
    for k in range(1, n + 1):
        for mu in partitions_of(n):
            assert kostka(hook(n, k), mu) == comb(len(mu) - 1, n - k) == hook_kostka(k, mu)


def test_syt_counts():
    assert syt_count((3, 1)) == 3
    assert syt_count((6,)) == 1
    for n in range(1, 8):
        for k in range(1, n + 1):
            assert syt_count(hook(n, k)) == comb(n - 1, k - 1)
        assert sum(syt_count(l) ** 2 for l in partitions_of(n)) == factorial(n)


def test_majorization_examples():
    assert majorizes((4,), (1, 1, 1, 1))
    assert not majorizes((2, 2), (3, 1))
    assert majorizes((3, 1), (3, 1))


@given(partition_st, partition_st)
def test_majorization_is_antisymmetric(a, b):
    if sum(a) == sum(b) and a != b:
        assert not (majorizes(a, b) and majorizes(b, a))


def test_pate_successor():
    assert pate_successor((4, 4, 3, 2)) == (3, 3, 3, 2, 1, 1)
    assert pate_successor((5,)) == (4, 1)
    assert pate_successor((2, 2)) == (1, 1, 1, 1)
    with pytest.raises(InvalidArgument):
        pate_successor((1, 1, 1))


@given(partition_st)
def test_pate_successor_lowers_in_dominance(lam):
    if lam[0] > 1:
        mu = pate_successor(lam)
        assert sum(mu) == sum(lam)
        assert majorizes(lam, mu) and mu != lam
