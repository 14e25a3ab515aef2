"""
Named coders: a tree builder paired with its nucleotide transcoder.

    sfc                   constrained Shannon-Fano + position-dependent transcoder
    goldman               ternary Huffman + rotating transcoder
    huffman4              quaternary Huffman + fixed quaternary table (no constraint)
    huffman4-constrained  repaired quaternary Huffman + position-dependent transcoder
    huffman2, huffman3    reference codes, measured for length only
"""

from abc import ABC, abstractmethod
from typing import Iterable, Optional, Sequence

from app.builders import ConstrainedHuffmanBuilder, HuffmanBuilder, SfcBuilder
from app.builders.base import BaseBuilder
from app.errors import ConfigError
from app.models.tree import CodeTree, codebook_from_tree
from app.schemas.builder import BuilderConfig
from app.schemas.codebook import Codebook
from app.schemas.nucleotide import NucleotideStream
from app.schemas.symbols import FrequencyTable
from app.transcoders.goldman import goldman_decode, goldman_transcode_words
from app.transcoders.sfc import sfc_detranscode, transcode_words
from app.transcoders.tables import INITIAL_NUCLEOTIDE

CODER_NAMES = ("sfc", "goldman", "huffman2", "huffman3", "huffman4", "huffman4-constrained")
NUCLEOTIDE_CODERS = ("sfc", "goldman", "huffman4", "huffman4-constrained")


class Coder(ABC):
    name: str
    # radix of the entropy that bounds this coder's expected length
    radix: int = 4
    nucleotide: bool = True

    def __init__(self, max_hl: int):
        self.max_hl = max_hl

    @abstractmethod
    def builder(self) -> BaseBuilder:
        ...

    def tree(self, table: FrequencyTable) -> CodeTree:
        return self.builder().build(table)

    def codebook(self, table: FrequencyTable) -> Codebook:
        return codebook_from_tree(self.tree(table))

    @abstractmethod
    def pieces(self, codewords: Iterable[str], initial: str = INITIAL_NUCLEOTIDE) -> list[str]:
        """Transcoded nucleotides, one piece per codeword."""

    @abstractmethod
    def decode(self, bases: str, tree: CodeTree, initial: str = INITIAL_NUCLEOTIDE) -> list[int]:
        ...

    def encode(
        self, message: Sequence[int], book: Codebook, initial: str = INITIAL_NUCLEOTIDE
    ) -> NucleotideStream:
        return NucleotideStream(bases="".join(self.pieces((book.codeword(s) for s in message), initial)))


class SfcCoder(Coder):
    name = "sfc"

    def builder(self) -> BaseBuilder:
        return SfcBuilder(BuilderConfig(max_hl=self.max_hl))

    def pieces(self, codewords, initial=INITIAL_NUCLEOTIDE):
        return transcode_words(codewords, self.max_hl, initial)

    def decode(self, bases, tree, initial=INITIAL_NUCLEOTIDE):
        return sfc_detranscode(bases, tree, self.max_hl, initial)


class ConstrainedHuffmanCoder(SfcCoder):
    name = "huffman4-constrained"

    def builder(self) -> BaseBuilder:
        return ConstrainedHuffmanBuilder(BuilderConfig(max_hl=self.max_hl))


class GoldmanCoder(Coder):
    name = "goldman"
    radix = 3

    def builder(self) -> BaseBuilder:
        return HuffmanBuilder(3)

    def pieces(self, codewords, initial=INITIAL_NUCLEOTIDE):
        return goldman_transcode_words(codewords, initial)

    def decode(self, bases, tree, initial=INITIAL_NUCLEOTIDE):
        return goldman_decode(bases, tree, initial)


class QuaternaryHuffmanCoder(Coder):
    name = "huffman4"

    def builder(self) -> BaseBuilder:
        return HuffmanBuilder(4)

    def pieces(self, codewords, initial=INITIAL_NUCLEOTIDE):
        return transcode_words(codewords, None, initial)

    def decode(self, bases, tree, initial=INITIAL_NUCLEOTIDE):
        return sfc_detranscode(bases, tree, None, initial)


class ReferenceHuffmanCoder(Coder):
    """Binary or ternary Huffman code with no nucleotide mapping."""

    nucleotide = False

    def __init__(self, max_hl: int, arity: int):
        super().__init__(max_hl)
        self.radix = arity
        self.name = f"huffman{arity}"

    def builder(self) -> BaseBuilder:
        return HuffmanBuilder(self.radix)

    def pieces(self, codewords, initial=INITIAL_NUCLEOTIDE):
        raise ConfigError("not_a_nucleotide_coder", f"{self.name} has no nucleotide transcoder")

    def decode(self, bases, tree, initial=INITIAL_NUCLEOTIDE):
        raise ConfigError("not_a_nucleotide_coder", f"{self.name} has no nucleotide transcoder")


def get_coder(name: str, max_hl: Optional[int] = 3) -> Coder:
    """Look up a coder by name."""
    max_hl = 3 if max_hl is None else max_hl
    if max_hl < 2:
        raise ConfigError("bad_max_hl", f"max_hl must be at least 2, got {max_hl}")
    if name == "sfc":
        return SfcCoder(max_hl)
    if name == "goldman":
        return GoldmanCoder(max_hl)
    if name == "huffman4":
        return QuaternaryHuffmanCoder(max_hl)
    if name == "huffman4-constrained":
        return ConstrainedHuffmanCoder(max_hl)
    if name in ("huffman2", "huffman3"):
        return ReferenceHuffmanCoder(max_hl, int(name[-1]))
    raise ConfigError("unknown_coder", f"unknown coder {name!r}; choose from {', '.join(CODER_NAMES)}")
