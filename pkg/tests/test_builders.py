"""
Tests for the constrained Shannon-Fano, Huffman and constrained Huffman builders.
"""

from functools import lru_cache
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.builders import (
    ConstrainedHuffmanBuilder,
    HuffmanBuilder,
    huffman_build,
    huffman_constrained_build,
    merge_trees,
    sfc_build,
)
from app.errors import ConfigError, InputError, StructuralError
from app.metrics import entropy, expected_length
from app.models.tree import codebook_from_tree, leaf, validate_tree
from app.schemas.builder import BuilderConfig
from app.schemas.codebook import validate_prefix_free
from app.schemas.symbols import FrequencyTable, Symbol

weights = st.lists(st.integers(min_value=1, max_value=500), min_size=2, max_size=60)


@lru_cache(maxsize=None)
def kraft_feasible_lengths(n: int, arity: int) -> tuple[tuple[int, ...], ...]:
    """Every non-decreasing length vector of size n with sum(arity ** -l) <= 1."""
    longest = max(n - 1, 1)
    budget = arity**longest
    return tuple(
        lengths
        for lengths in combinations_with_replacement(range(1, longest + 1), n)
        if sum(arity ** (longest - l) for l in lengths) <= budget
    )


def optimal_length(counts: list[int], arity: int) -> float:
    """Smallest expected length of any prefix code: shortest lengths go to the largest counts."""
    ordered = sorted(counts, reverse=True)
    best = min(
        sum(c * l for c, l in zip(ordered, lengths))
        for lengths in kraft_feasible_lengths(len(counts), arity)
    )
    return best / sum(counts)


def assert_constrained(tree, max_hl):
    assert validate_tree(tree) == []
    for node in tree.internal_nodes():
        if node.depth % max_hl == 0:
            assert len(node.children) <= 3


def test_huffman_binary_example_lengths(six_symbol_table):
    """Binary Huffman on the example distribution gives lengths {1,4,3,4,3,3} and 2.32 bits."""
    book = codebook_from_tree(huffman_build(six_symbol_table, 2))
    lengths = [len(book.codeword(i)) for i in range(6)]
    assert lengths == [1, 4, 3, 4, 3, 3]
    assert expected_length(book, six_symbol_table) == pytest.approx(2.32)


def test_huffman_uniform_quaternary():
    """Four equiprobable symbols need exactly one base each."""
    table = FrequencyTable.from_counts([5, 5, 5, 5])
    book = codebook_from_tree(huffman_build(table, 4))
    assert expected_length(book, table) == 1.0


def test_huffman_heaviest_child_gets_label_zero():
    table = FrequencyTable.from_counts([1, 9, 3])
    assert codebook_from_tree(huffman_build(table, 3)).codeword(1) == "0"


def test_huffman_rejects_bad_arity():
    with pytest.raises(ConfigError):
        HuffmanBuilder(5)


@pytest.mark.parametrize("arity", [2, 3, 4])
@settings(max_examples=150, deadline=None)
@given(counts=st.lists(st.integers(min_value=1, max_value=20), min_size=2, max_size=8))
def test_huffman_matches_exhaustive_optimum(arity, counts):
    """Huffman expected length equals the best Kraft-feasible length assignment."""
    table = FrequencyTable.from_counts(counts)
    book = codebook_from_tree(huffman_build(table, arity))
    assert expected_length(book, table) == pytest.approx(optimal_length(counts, arity))


@settings(max_examples=60, deadline=None)
@given(counts=weights, arity=st.sampled_from([2, 3, 4]))
def test_huffman_within_entropy_band(counts, arity):
    """H_b <= L < H_b + 1 for every Huffman code."""
    table = FrequencyTable.from_counts(counts)
    book = codebook_from_tree(huffman_build(table, arity))
    length = expected_length(book, table)
    h = entropy(table, arity)
    assert h - 1e-9 <= length < h + 1
    ok, kraft = validate_prefix_free(book)
    assert ok and kraft <= 1


@pytest.mark.parametrize("max_hl", [2, 3, 4, 5])
def test_sfc_respects_arity_schedule(gaussian_like_table, max_hl):
    """Constrained depths never carry more than three children."""
    tree = sfc_build(gaussian_like_table, BuilderConfig(max_hl=max_hl))
    assert_constrained(tree, max_hl)
    book = codebook_from_tree(tree)
    assert set(book.codewords) == set(range(len(gaussian_like_table)))
    assert validate_prefix_free(book)[0]


def test_sfc_bounded_by_quaternary_huffman(gaussian_like_table):
    """No quaternary prefix code beats quaternary Huffman; SFC stays below ternary entropy here."""
    sfc = codebook_from_tree(sfc_build(gaussian_like_table, BuilderConfig(max_hl=3)))
    h4 = codebook_from_tree(huffman_build(gaussian_like_table, 4))
    l_sfc = expected_length(sfc, gaussian_like_table)
    assert expected_length(h4, gaussian_like_table) <= l_sfc + 1e-12
    assert l_sfc < entropy(gaussian_like_table, 3)


def test_sfc_first_split_of_example(six_symbol_table):
    """The root of the example tree splits into four balanced groups."""
    tree = sfc_build(six_symbol_table, BuilderConfig(max_hl=3))
    assert len(tree.root.children) == 4
    assert tree.root.children[0].symbol.label == "a"


def test_single_symbol_gets_one_base_codeword():
    table = FrequencyTable.from_counts([7])
    for tree in (
        sfc_build(table, BuilderConfig()),
        huffman_build(table, 3),
        huffman_constrained_build(table, BuilderConfig()),
    ):
        assert codebook_from_tree(tree).codewords == {0: "0"}


def test_empty_tables_rejected():
    with pytest.raises(InputError):
        sfc_build(FrequencyTable(entries=()), BuilderConfig())
    with pytest.raises(InputError):
        huffman_build(FrequencyTable.from_counts([0, 0]), 4)


@settings(max_examples=60, deadline=None)
@given(counts=weights, max_hl=st.integers(min_value=2, max_value=5))
def test_sfc_is_complete_prefix_code(counts, max_hl):
    table = FrequencyTable.from_counts(counts)
    tree = sfc_build(table, BuilderConfig(max_hl=max_hl))
    assert_constrained(tree, max_hl)
    assert len(tree) == len(counts)


@settings(max_examples=60, deadline=None)
@given(counts=weights, max_hl=st.integers(min_value=2, max_value=5))
def test_constrained_huffman_respects_schedule(counts, max_hl):
    """Every symbol kept, schedule honoured, and the length sits between quaternary and ternary Huffman."""
    table = FrequencyTable.from_counts(counts)
    tree = huffman_constrained_build(table, BuilderConfig(max_hl=max_hl))
    assert_constrained(tree, max_hl)
    book = codebook_from_tree(tree)
    assert set(book.codewords) == set(range(len(counts)))
    length = expected_length(book, table)
    assert expected_length(codebook_from_tree(huffman_build(table, 4)), table) <= length + 1e-12
    assert length <= expected_length(codebook_from_tree(huffman_build(table, 3)), table) + 1e-12


def test_constrained_huffman_lifts_lightest_deep_leaf(six_symbol_table):
    """The spare root branch of the ternary tree goes to the lightest leaf two levels down."""
    book = codebook_from_tree(huffman_constrained_build(six_symbol_table, BuilderConfig(max_hl=3)))
    assert book.codewords == {0: "1", 4: "2", 5: "3", 2: "00", 3: "010", 1: "011"}
    assert expected_length(book, six_symbol_table) == pytest.approx(1.42)
    goldman = codebook_from_tree(huffman_build(six_symbol_table, 3))
    assert expected_length(goldman, six_symbol_table) == pytest.approx(1.52)


def test_sfc_tie_break_orders_equal_counts():
    table = FrequencyTable.from_counts([5, 5, 2])
    ascending = codebook_from_tree(sfc_build(table, BuilderConfig()))
    descending = codebook_from_tree(sfc_build(table, BuilderConfig(tie_break="descending-id")))
    assert ascending.codewords == {0: "0", 1: "1", 2: "2"}
    assert descending.codewords == {1: "0", 0: "1", 2: "2"}


def test_constrained_builder_name():
    assert ConstrainedHuffmanBuilder(BuilderConfig()).name == "huffman4-constrained"


def test_merge_trees():
    """Subtrees hang off labels in order; empty slots are skipped."""
    a, b = leaf(Symbol(id=0), 3, 2), leaf(Symbol(id=1), 3, 5)
    root = merge_trees([a, None, b])
    assert root.depth == 2
    assert [c.symbol.id for c in root.children] == [0, 1]
    assert root.weight == 7
    with pytest.raises(StructuralError):
        merge_trees([None, None])
    with pytest.raises(StructuralError):
        merge_trees([leaf(Symbol(id=i), 2) for i in range(5)])


if __name__ == "__main__":
    pytest.main([__file__])
