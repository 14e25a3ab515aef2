"""
Huffman-based constrained quaternary builder.

Bottom-up merging never learns the final depth of a node, so the builder
starts from the ternary Huffman tree, which is valid under any schedule.
The tree is then walked from the root: every node at a depth not congruent
to 0 modulo max_hl still has a fourth branch to spend, and it is given to
the lightest leaf hanging at least two levels below it, whose parent keeps
at least two children. Moving a leaf up never touches the arity of a
constrained node, so the result honours the schedule and is never longer
than the ternary code it started from.
"""

from typing import Optional

from app.models.tree import CodeNode, CodeTree
from app.schemas.builder import BuilderConfig
from app.schemas.symbols import FrequencyEntry, FrequencyTable

from .base import BaseBuilder
from .huffman import HuffmanBuilder, _to_node


def _leaf_rank(node: CodeNode) -> tuple[int, int]:
    return node.weight, node.symbol.id


def _lightest_deep_leaf(node: CodeNode) -> Optional[CodeNode]:
    """Lightest leaf at least two levels below ``node`` whose parent can spare it."""
    best = None
    stack = [child for child in node.children if not child.is_leaf]
    while stack:
        parent = stack.pop()
        for child in parent.children:
            if not child.is_leaf:
                stack.append(child)
            elif len(parent.children) >= 3 and (best is None or _leaf_rank(child) < _leaf_rank(best)):
                best = child
    return best


def _without(node: CodeNode, symbol_id: int) -> CodeNode:
    if node.is_leaf:
        return node
    children = tuple(
        _without(child, symbol_id)
        for child in node.children
        if not (child.is_leaf and child.symbol.id == symbol_id)
    )
    return CodeNode(depth=node.depth, children=children, weight=sum(c.weight for c in children))


class ConstrainedHuffmanBuilder(BaseBuilder):
    name = "huffman4-constrained"
    arity = 4

    def __init__(self, cfg: BuilderConfig):
        super().__init__(max_hl=cfg.max_hl)
        self.cfg = cfg

    def _build_root(self, entries: list[FrequencyEntry]) -> CodeNode:
        merged = HuffmanBuilder(3).merge_order(entries)
        return self._fill(_to_node(merged, 1))

    def _fill(self, node: CodeNode) -> CodeNode:
        if node.is_leaf:
            return node
        children = list(node.children)
        if node.depth % self.max_hl != 0 and len(children) < 4:
            lifted = _lightest_deep_leaf(node)
            if lifted is not None:
                children = [_without(child, lifted.symbol.id) for child in children]
                children.append(lifted.at_depth(node.depth + 1))
        return CodeNode(
            depth=node.depth,
            children=tuple(self._fill(child) for child in children),
            weight=node.weight,
        )


def huffman_constrained_build(table: FrequencyTable, cfg: BuilderConfig) -> CodeTree:
    """Ternary Huffman tree with the spare quaternary branches filled by lifted leaves."""
    return ConstrainedHuffmanBuilder(cfg).build(table)
