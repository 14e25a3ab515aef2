"""
Homopolymer scanning.
"""

from itertools import groupby
from typing import Iterable

from app.schemas.nucleotide import NucleotideStream

from .sfc import transcode_words
from .tables import INITIAL_NUCLEOTIDE


def max_homopolymer_run(stream: NucleotideStream | str) -> int:
    """Length of the longest run of one repeated nucleotide (0 when empty)."""
    bases = stream.bases if isinstance(stream, NucleotideStream) else stream
    return max((sum(1 for _ in run) for _, run in groupby(bases)), default=0)


def max_piece_run(pieces: Iterable[str]) -> int:
    """Longest run found inside any single piece, ignoring piece boundaries."""
    return max((max_homopolymer_run(piece) for piece in pieces), default=0)


def max_codeword_run(codewords: Iterable[str], max_hl: int, initial: str = INITIAL_NUCLEOTIDE) -> int:
    """Longest run inside any single transcoded codeword of a constrained code."""
    return max_piece_run(transcode_words(codewords, max_hl, initial))
