"""
Goldman coder: ternary Huffman code followed by the rotating transcoder.

Every ternary base is mapped through the row of the previously emitted
nucleotide, so the output never repeats a nucleotide twice in a row.
"""

from functools import lru_cache
from typing import Iterable, Sequence

from app.builders.huffman import huffman_build
from app.models.tree import CodeTree, codebook_from_tree
from app.schemas.codebook import Codebook
from app.schemas.nucleotide import NucleotideStream
from app.schemas.symbols import FrequencyTable

from .sfc import walk_tree
from .tables import GOLDMAN, INITIAL_NUCLEOTIDE


@lru_cache(maxsize=65536)
def _rotate(word: str, prev: str) -> str:
    out = []
    for base in word:
        prev = GOLDMAN[prev][ord(base) - 48]
        out.append(prev)
    return "".join(out)


def goldman_transcode_words(codewords: Iterable[str], initial: str = INITIAL_NUCLEOTIDE) -> list[str]:
    """Rotate ternary codewords into nucleotides, one piece per codeword."""
    prev = initial
    pieces = []
    for word in codewords:
        piece = _rotate(word, prev)
        if piece:
            prev = piece[-1]
        pieces.append(piece)
    return pieces


def goldman_tree(table: FrequencyTable) -> CodeTree:
    return huffman_build(table, 3)


def goldman_codebook(table: FrequencyTable) -> Codebook:
    return codebook_from_tree(goldman_tree(table))


def goldman_encode(
    message: Sequence[int],
    table: FrequencyTable,
    initial: str = INITIAL_NUCLEOTIDE,
) -> NucleotideStream:
    """
    Encode ``message`` with the ternary Huffman code of ``table``.

    Raises:
        CoverageError: If a message symbol is missing from the table
    """
    book = goldman_codebook(table)
    return NucleotideStream(
        bases="".join(goldman_transcode_words((book.codeword(s) for s in message), initial))
    )


def goldman_decode(
    stream: NucleotideStream | str,
    tree: CodeTree,
    initial: str = INITIAL_NUCLEOTIDE,
) -> list[int]:
    """Invert the rotation with the previous nucleotide and walk the ternary tree."""
    bases = stream.bases if isinstance(stream, NucleotideStream) else stream
    return walk_tree(bases, tree, lambda position: True, initial)
