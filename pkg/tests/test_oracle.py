from itertools import product
from math import comb

import pytest
from hypothesis import given, strategies as st

from losanitsch.oracle import (
    MAX_N,
    bracelet_count,
    indicator,
    inv,
    inv_distribution,
    inv_residue_counts,
    k_subsets,
    reversal_classes,
    star_subset,
    star_word,
    subset_residue_counts,
    words,
)


def test_enumeration_sizes():
    assert len(list(k_subsets(6, 3))) == 20
    assert len(list(words(6, 3))) == 20
    assert list(k_subsets(3, 0)) == [()]
    with pytest.raises(ValueError):
        list(k_subsets(2, 3))


def test_inv_and_indicator():
    assert indicator((1, 3), 4) == (1, 0, 1, 0)
    assert inv((1, 0, 1, 0)) == 3
    assert inv((0, 0, 1, 1)) == 0
    assert inv((1, 1, 0, 0)) == 4


def test_small_residue_counts():
    # {1,2,3}: 2-subsets have sums 3, 4, 5
    assert subset_residue_counts(3, 2, 2) == (1, 2)
    assert subset_residue_counts(3, 2, 3) == (1, 1, 1)
    assert inv_residue_counts(4, 2, 2) == (4, 2)
    assert inv_distribution(4, 2) == (1, 1, 2, 1, 1)


def test_star_maps():
    assert star_subset((1, 2), 5) == (4, 5)
    assert star_word((1, 2), 5) == (0, 0, 0, 1, 1)
    with pytest.raises(ValueError):
        star_word((0, 2), 5)


def test_guard_rejects_large_n():
    with pytest.raises(ValueError):
        subset_residue_counts(MAX_N + 1, 2, 2)


def test_reversal_classes_small():
    # W(4, 2): 0011, 0101, 0110, 1001, 1010, 1100; palindromes 0110, 1001
    assert reversal_classes(4, 2) == (4, 2)
    assert reversal_classes(5, 2) == (6, 2)


def _brute_bracelets(n_white, k_red):
    beads = 1 + n_white + k_red
    seen = set()
    for colors in product("WR", repeat=beads - 1):
        if colors.count("R") != k_red:
            continue
        s = "B" + "".join(colors)
        forms = [t[i:] + t[:i] for t in (s, s[::-1]) for i in range(beads)]
        seen.add(min(forms))
    return len(seen)


@pytest.mark.parametrize("n,k", [(0, 0), (1, 1), (2, 2), (3, 2), (4, 3), (5, 2)])
def test_bracelets_match_naive_enumeration(n, k):
    assert bracelet_count(n, k) == _brute_bracelets(n, k)


@given(st.integers(0, 10).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))),
       st.integers(2, 6))
def test_counts_partition_binomial(nk, p):
    n, k = nk
    assert sum(subset_residue_counts(n, k, p)) == comb(n, k)
    assert sum(inv_residue_counts(n, k, p)) == comb(n, k)


@given(st.sets(st.integers(1, 12)))
def test_sum_is_triangular_plus_inversions(s):
    # sigma(S) = C(|S|+1, 2) + inv(w(S*))
    assert sum(s) == comb(len(s) + 1, 2) + inv(star_word(sorted(s), 12))
