"""
Builders package: code-tree construction.
"""

from .base import BaseBuilder, merge_trees
from .constrained import ConstrainedHuffmanBuilder, huffman_constrained_build
from .huffman import HuffmanBuilder, huffman_build
from .partition import best_cuts, partition, split_contiguous
from .sfc import SfcBuilder, sfc_build

__all__ = [
    "BaseBuilder",
    "ConstrainedHuffmanBuilder",
    "HuffmanBuilder",
    "SfcBuilder",
    "best_cuts",
    "huffman_build",
    "huffman_constrained_build",
    "merge_trees",
    "partition",
    "sfc_build",
    "split_contiguous",
]
