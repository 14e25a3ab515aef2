"""
Position-dependent transcoder for constrained quaternary codes.

Within each codeword, position k (1-based) is ternary when k is congruent to
0 modulo max_hl and goes through the rotating table keyed on the previous
nucleotide; every other position uses the fixed quaternary table. The
position counter restarts at each codeword, the previous nucleotide is
carried across the whole stream.
"""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Optional

from app.errors import CorruptionError, DesynchronizationError
from app.models.tree import CodeTree
from app.schemas.nucleotide import NucleotideStream

from .tables import GOLDMAN, GOLDMAN_INVERSE, INITIAL_NUCLEOTIDE, QUATERNARY, QUATERNARY_INVERSE

logger = logging.getLogger(__name__)


@dataclass
class TranscoderState:
    prev_nucleotide: str = INITIAL_NUCLEOTIDE
    position_in_codeword: int = 1


@lru_cache(maxsize=65536)
def _word_to_nucleotides(word: str, prev: str, max_hl: Optional[int]) -> str:
    out = []
    for k, base in enumerate(word, 1):
        b = ord(base) - 48
        if max_hl is not None and k % max_hl == 0:
            if b > 2:
                raise ValueError(k)
            prev = GOLDMAN[prev][b]
        else:
            prev = QUATERNARY[b]
        out.append(prev)
    return "".join(out)


def transcode_words(
    codewords: Iterable[str],
    max_hl: Optional[int],
    initial: str = INITIAL_NUCLEOTIDE,
) -> list[str]:
    """
    Transcode codewords one by one, keeping the pieces apart.

    ``max_hl=None`` disables the ternary positions (plain quaternary table).

    Raises:
        CorruptionError: If a ternary position carries base 3
    """
    state = TranscoderState(prev_nucleotide=initial)
    pieces: list[str] = []
    offset = 0
    for word in codewords:
        try:
            piece = _word_to_nucleotides(word, state.prev_nucleotide, max_hl)
        except ValueError as exc:
            position = exc.args[0]
            raise CorruptionError(
                "corrupt_codeword",
                f"codeword {word!r} has base {word[position - 1]} at constrained position {position} "
                f"(stream offset {offset + position - 1})",
            ) from None
        if piece:
            state.prev_nucleotide = piece[-1]
        pieces.append(piece)
        offset += len(piece)
    return pieces


def sfc_transcode(
    codewords: Iterable[str],
    max_hl: Optional[int],
    initial: str = INITIAL_NUCLEOTIDE,
) -> NucleotideStream:
    """Map a sequence of codewords onto one nucleotide stream."""
    return NucleotideStream(bases="".join(transcode_words(codewords, max_hl, initial)))


def walk_tree(
    bases: str,
    tree: CodeTree,
    ternary_at,
    initial: str = INITIAL_NUCLEOTIDE,
) -> list[int]:
    """
    Decode nucleotides by walking ``tree`` from the root.

    ``ternary_at(position)`` tells whether the base at that 1-based
    codeword position went through the rotating table. A symbol is emitted
    at every leaf and the walk restarts at the root.

    Raises:
        DesynchronizationError: On a nucleotide with no matching edge, or when
            the stream ends inside a codeword
    """
    root = tree.root
    node = root
    state = TranscoderState(prev_nucleotide=initial)
    codeword_start = 0
    out: list[int] = []
    for offset, nt in enumerate(bases):
        prev = state.prev_nucleotide
        if ternary_at(state.position_in_codeword):
            base = GOLDMAN_INVERSE[prev].get(nt)
        else:
            base = QUATERNARY_INVERSE.get(nt)
        if base is None or base >= len(node.children):
            raise DesynchronizationError(
                "no_matching_edge",
                offset,
                f"nucleotide {nt!r} after {prev!r} at codeword position {state.position_in_codeword}",
            )
        node = node.children[base]
        state.prev_nucleotide = nt
        if node.is_leaf:
            out.append(node.symbol.id)
            node = root
            state.position_in_codeword = 1
            codeword_start = offset + 1
        else:
            state.position_in_codeword += 1
    if node is not root:
        raise DesynchronizationError(
            "truncated_stream",
            len(bases),
            f"stream ends inside the codeword starting at offset {codeword_start}",
        )
    return out


def sfc_detranscode(
    stream: NucleotideStream | str,
    tree: CodeTree,
    max_hl: Optional[int],
    initial: str = INITIAL_NUCLEOTIDE,
) -> list[int]:
    """Inverse of ``sfc_transcode`` for codewords of ``tree``."""
    bases = stream.bases if isinstance(stream, NucleotideStream) else stream
    if max_hl is None:
        return walk_tree(bases, tree, lambda position: False, initial)
    return walk_tree(bases, tree, lambda position: position % max_hl == 0, initial)
