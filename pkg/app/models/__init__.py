"""
Code tree model shared by the builders and transcoders.
"""

from .tree import CodeNode, CodeTree, codebook_from_tree, leaf, tree_from_codebook, validate_tree

__all__ = [
    "CodeNode",
    "CodeTree",
    "codebook_from_tree",
    "leaf",
    "tree_from_codebook",
    "validate_tree",
]
