from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superinv.combinatorics import (
    all_partitions,
    cauchy_check,
    hook_partitions,
    in_hook,
    ssyt_count,
    strict_partitions,
)
from superinv.errors import InvalidSpecError


@st.composite
def partition_strategy(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    k = draw(st.integers(min_value=1, max_value=n))
    bins = draw(st.lists(st.integers(min_value=0, max_value=k - 1), min_size=n, max_size=n))
    return tuple(sorted(Counter(bins).values(), reverse=True))


def conjugate(lam):
    return tuple(sum(1 for part in lam if part > c) for c in range(lam[0])) if lam else ()


def hook_content(lam, n):
    """Classical tableau count for the alphabet 1..n."""
    conj = conjugate(lam)
    total = Fraction(1)
    for r, length in enumerate(lam):
        for c in range(length):
            hook = (length - c - 1) + (conj[c] - r - 1) + 1
            total *= Fraction(n + c - r, hook)
    return int(total)


def test_all_partitions():
    assert all_partitions(0) == [()]
    assert all_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(all_partitions(6)) == 11


def test_hook_partitions():
    assert hook_partitions(1, 1, 3) == [(3,), (2, 1), (1, 1, 1)]
    assert hook_partitions(1, 0, 3) == [(3,)]
    assert hook_partitions(2, 0, 0) == [()]
    assert not in_hook((2, 2), 1, 1)


def test_ssyt_small_counts():
    assert ssyt_count((1,), 1, 1) == 2
    assert ssyt_count((2,), 1, 1) == 2
    assert ssyt_count((1, 1), 1, 1) == 2
    assert ssyt_count((2, 2), 1, 0) == 0
    assert ssyt_count((), 3, 2) == 1


@given(partition_strategy(), st.integers(min_value=1, max_value=3))
def test_ssyt_matches_hook_content_formula(lam, n):
    assert ssyt_count(lam, n, 0) == hook_content(lam, n)


@given(partition_strategy(), st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=2))
def test_ssyt_conjugation_swaps_the_alphabets(lam, n, m):
    assert ssyt_count(lam, n, m) == ssyt_count(conjugate(lam), m, n)


def test_strict_partitions():
    assert strict_partitions(2, 3) == [(2, 1)]
    assert strict_partitions(2, 2) == []
    assert strict_partitions(1, max_size=3) == [(1,), (2,), (3,)]
    with pytest.raises(InvalidSpecError):
        strict_partitions(0)


def test_cauchy_small_case():
    report = cauchy_check((1, 1), (1, 1), 2)
    assert report.lhs == 8
    assert [(r.partition, r.product) for r in report.rows] == [((2,), 4), ((1, 1), 4)]
    assert report.ok


@pytest.mark.parametrize("dim_u,dim_v", [((1, 1), (1, 1)), ((2, 1), (1, 2)), ((1, 0), (2, 1))])
@pytest.mark.parametrize("k", range(5))
def test_cauchy_identity(dim_u, dim_v, k):
    assert cauchy_check(dim_u, dim_v, k).ok


def test_cauchy_rejects_negative_degree():
    with pytest.raises(InvalidSpecError):
        cauchy_check((1, 1), (1, 1), -1)
