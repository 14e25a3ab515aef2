"""
Tests for the position-dependent and rotating nucleotide transcoders.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.builders import huffman_build, sfc_build
from app.coders import get_coder
from app.errors import ConfigError, CorruptionError, DesynchronizationError
from app.models.tree import codebook_from_tree, tree_from_codebook
from app.schemas.builder import BuilderConfig
from app.schemas.codebook import Codebook, CodebookEntry
from app.schemas.symbols import FrequencyTable
from app.transcoders import (
    goldman_decode,
    goldman_encode,
    goldman_tree,
    max_codeword_run,
    max_homopolymer_run,
    sfc_detranscode,
    sfc_transcode,
    transcode_words,
    walk_tree,
)

# Small constrained book holding the "012" codeword
EXAMPLE_WORDS = {0: "012", 1: "010", 2: "011", 3: "1", 4: "2", 5: "3", 6: "00"}


def example_tree():
    book = Codebook(
        builder="manual",
        max_hl=3,
        entries=tuple(CodebookEntry(symbol=s, codeword=w) for s, w in EXAMPLE_WORDS.items()),
    )
    return tree_from_codebook(book)


def test_constrained_position_uses_rotating_table():
    """012 maps to A, T, then the third base rotates off the previous T to G."""
    assert sfc_transcode(["012"], max_hl=3).bases == "ATG"


def test_unconstrained_positions_use_fixed_table():
    assert sfc_transcode(["33"], max_hl=3).bases == "GG"


def test_detranscode_example():
    assert sfc_detranscode("ATG", example_tree(), max_hl=3) == [0]


def test_previous_nucleotide_carries_across_codewords():
    """The rotation at a codeword's third position looks at that codeword's second base."""
    stream = sfc_transcode(["3", "012", "010"], max_hl=3)
    assert stream.bases == "GATGATA"
    assert sfc_detranscode(stream, example_tree(), max_hl=3) == [5, 0, 1]


def test_walk_restarts_position_at_each_codeword():
    positions = []

    def ternary_at(position):
        positions.append(position)
        return position % 3 == 0

    assert walk_tree("GATGATA", example_tree(), ternary_at) == [5, 0, 1]
    assert positions == [1, 1, 2, 3, 1, 2, 3]


def test_constrained_position_rejects_base_three():
    with pytest.raises(CorruptionError):
        transcode_words(["0", "003"], max_hl=3)


def test_repeat_at_constrained_position_desynchronizes():
    """A constrained position repeating the previous nucleotide matches no edge."""
    with pytest.raises(DesynchronizationError) as exc:
        sfc_detranscode("ATT", example_tree(), max_hl=3)
    assert exc.value.code == "no_matching_edge"
    assert exc.value.offset == 2


def test_truncated_stream():
    with pytest.raises(DesynchronizationError) as exc:
        sfc_detranscode("AT", example_tree(), max_hl=3)
    assert exc.value.code == "truncated_stream"
    assert exc.value.offset == 2


def test_short_codewords_can_repeat_without_bound():
    """Codewords shorter than max_hl have no constrained position, so runs can grow across them."""
    assert max_homopolymer_run(sfc_transcode(["0"] * 6, max_hl=3)) == 6


@pytest.mark.parametrize("max_hl", [2, 3, 4, 5])
def test_runs_inside_codewords_bounded(gaussian_like_table, max_hl):
    """No transcoded codeword holds a run longer than max_hl."""
    book = codebook_from_tree(sfc_build(gaussian_like_table, BuilderConfig(max_hl=max_hl)))
    assert max_codeword_run(book.codewords.values(), max_hl) <= max_hl
    # repeating each codeword three times does not break the per-codeword bound
    words = [w for w in book.codewords.values() for _ in range(3)]
    assert max_codeword_run(words, max_hl) <= max_hl


def test_goldman_never_repeats(six_symbol_table):
    stream = goldman_encode([0, 0, 0, 1, 2, 3, 4, 5, 5, 5], six_symbol_table)
    assert max_homopolymer_run(stream) == 1


def test_goldman_round_trip(six_symbol_table):
    message = [0, 2, 4, 1, 3, 5, 0, 0]
    stream = goldman_encode(message, six_symbol_table)
    assert goldman_decode(stream, goldman_tree(six_symbol_table)) == message


def test_goldman_rejects_repeat():
    table = FrequencyTable.from_counts([5, 3, 2])
    with pytest.raises(DesynchronizationError):
        goldman_decode("TT", goldman_tree(table))


def test_homopolymer_scanner():
    assert max_homopolymer_run("") == 0
    assert max_homopolymer_run("ACGT") == 1
    assert max_homopolymer_run("ACCCGTTA") == 3


@settings(max_examples=50, deadline=None)
@given(
    counts=st.lists(st.integers(min_value=1, max_value=100), min_size=1, max_size=30),
    data=st.data(),
    coder_name=st.sampled_from(["sfc", "goldman", "huffman4", "huffman4-constrained"]),
    max_hl=st.integers(min_value=2, max_value=5),
)
def test_coders_round_trip(counts, data, coder_name, max_hl):
    """encode then decode returns the message for every nucleotide coder."""
    table = FrequencyTable.from_counts(counts)
    message = data.draw(st.lists(st.integers(min_value=0, max_value=len(counts) - 1), max_size=200))
    coder = get_coder(coder_name, max_hl)
    tree = coder.tree(table)
    stream = coder.encode(message, codebook_from_tree(tree))
    assert coder.decode(stream.bases, tree) == message
    assert len(stream) == sum(len(codebook_from_tree(tree).codeword(s)) for s in message)


def test_reference_coders_have_no_nucleotide_mapping(six_symbol_table):
    coder = get_coder("huffman2")
    assert not coder.nucleotide
    with pytest.raises(ConfigError):
        coder.pieces(["0"])


def test_unknown_coder_and_bad_max_hl():
    with pytest.raises(ConfigError):
        get_coder("arithmetic")
    with pytest.raises(ConfigError):
        get_coder("sfc", 1)


def test_huffman4_stream_is_length_preserving(six_symbol_table):
    book = codebook_from_tree(huffman_build(six_symbol_table, 4))
    words = [book.codeword(s) for s in range(6)]
    assert len(sfc_transcode(words, max_hl=None)) == sum(map(len, words))


if __name__ == "__main__":
    pytest.main([__file__])
