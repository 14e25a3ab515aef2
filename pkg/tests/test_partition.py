"""
Tests for the balanced contiguous partition, checked against exhaustive search.
"""

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.builders.partition import best_cuts, partition, split_contiguous
from app.errors import ConfigError


def brute_force_cuts(freqs: list[int], n: int) -> tuple[int, ...]:
    """Lexicographically first cut tuple minimizing the worst |n * slice - total|."""
    total = sum(freqs)
    best = None
    for cuts in combinations(range(1, len(freqs)), n - 1):
        bounds = (0, *cuts, len(freqs))
        score = max(abs(n * sum(freqs[a:b]) - total) for a, b in zip(bounds, bounds[1:]))
        if best is None or score < best[0]:
            best = (score, cuts)
    return best[1]


def test_two_way_split_example():
    """[4, 2, 1, 1] halves exactly after the first item."""
    assert split_contiguous(list("wxyz"), [4, 2, 1, 1], 2) == [["w"], ["x", "y", "z"]]


def test_three_way_split_of_example_distribution():
    """Sorted example counts split into three slices nearest to a third each."""
    freqs = [40, 20, 18, 10, 7, 5]
    slices = partition(list("aecfdb"), freqs, 3)
    assert slices == [["a"], ["e", "c"], ["f", "d", "b"]]
    assert best_cuts(freqs, 3) == brute_force_cuts(freqs, 3)


def test_few_items_get_own_slices():
    """With no more items than slices, each item is alone and the rest are empty."""
    assert partition(["a", "b"], [3, 1], 4) == [["a"], ["b"], [], []]
    assert partition(["a", "b", "c"], [3, 2, 1], 3) == [["a"], ["b"], ["c"]]


def test_partition_rejects_other_arities():
    with pytest.raises(ConfigError):
        partition(["a", "b", "c"], [1, 1, 1], 2)


def test_ties_prefer_earliest_cut():
    """Equal weights with an ambiguous optimum cut as early as possible."""
    assert best_cuts([1, 0, 1], 2) == brute_force_cuts([1, 0, 1], 2) == (1,)


@settings(max_examples=300, deadline=None)
@given(
    n=st.sampled_from([2, 3, 4]),
    freqs=st.lists(st.integers(min_value=0, max_value=60), min_size=4, max_size=11),
)
def test_matches_exhaustive_search(n, freqs):
    """The fast search returns the same cuts as trying every split."""
    assert best_cuts(freqs, n) == brute_force_cuts(freqs, n)


@settings(max_examples=100, deadline=None)
@given(freqs=st.lists(st.integers(min_value=1, max_value=100), min_size=4, max_size=20).map(lambda f: sorted(f, reverse=True)))
def test_slices_cover_input_in_order(freqs):
    items = list(range(len(freqs)))
    for n in (3, 4):
        slices = partition(items, freqs, n)
        assert len(slices) == n
        assert all(slices)
        assert [i for s in slices for i in s] == items


if __name__ == "__main__":
    pytest.main([__file__])
