"""
Transcoders package: codewords to nucleotides and back.
"""

from .goldman import goldman_codebook, goldman_decode, goldman_encode, goldman_transcode_words, goldman_tree
from .homopolymer import max_codeword_run, max_homopolymer_run, max_piece_run
from .sfc import TranscoderState, sfc_detranscode, sfc_transcode, transcode_words, walk_tree
from .tables import GOLDMAN, INITIAL_NUCLEOTIDE, QUATERNARY

__all__ = [
    "GOLDMAN",
    "INITIAL_NUCLEOTIDE",
    "QUATERNARY",
    "TranscoderState",
    "goldman_codebook",
    "goldman_decode",
    "goldman_encode",
    "goldman_transcode_words",
    "goldman_tree",
    "max_codeword_run",
    "max_homopolymer_run",
    "max_piece_run",
    "sfc_detranscode",
    "sfc_transcode",
    "transcode_words",
    "walk_tree",
]
