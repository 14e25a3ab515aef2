"""
b-ary Huffman builder (b in {2, 3, 4}).
"""

import heapq
from dataclasses import dataclass, field
from typing import Optional

from app.errors import ConfigError
from app.models.tree import CodeNode, CodeTree
from app.schemas.symbols import FrequencyEntry, FrequencyTable, Symbol

from .base import BaseBuilder


@dataclass(order=True)
class _Pending:
    """Heap item: merged lowest count first, ties by lowest symbol id."""

    weight: int
    min_id: int
    symbol: Optional[Symbol] = field(default=None, compare=False)
    children: tuple["_Pending", ...] = field(default=(), compare=False)
    dummy: bool = field(default=False, compare=False)


def _to_node(item: _Pending, depth: int) -> CodeNode:
    if item.symbol is not None:
        return CodeNode(depth=depth, symbol=item.symbol, weight=item.weight)
    children = tuple(_to_node(c, depth + 1) for c in item.children if not c.dummy)
    return CodeNode(depth=depth, children=children, weight=item.weight)


class HuffmanBuilder(BaseBuilder):
    def __init__(self, arity: int):
        if arity not in (2, 3, 4):
            raise ConfigError("bad_arity", f"Huffman arity must be 2, 3 or 4, not {arity}")
        super().__init__(max_hl=None)
        self.arity = arity
        self.name = f"huffman{arity}"

    def merge_order(self, entries: list[FrequencyEntry]) -> _Pending:
        """
        Run the bottom-up merges and return the root item.

        Zero-count dummies are added until (n - 1) is a multiple of
        (arity - 1) so every merge takes exactly ``arity`` items; they are
        dropped when the tree is materialized.
        """
        b = self.arity
        heap = [_Pending(e.count, e.symbol.id, symbol=e.symbol) for e in entries]
        next_id = max(e.symbol.id for e in entries) + 1
        while (len(heap) - 1) % (b - 1) != 0:
            heap.append(_Pending(0, next_id, dummy=True))
            next_id += 1
        heapq.heapify(heap)

        while len(heap) > 1:
            group = [heapq.heappop(heap) for _ in range(b)]
            # heaviest child first, so it gets edge label 0
            group.reverse()
            heapq.heappush(
                heap,
                _Pending(
                    sum(g.weight for g in group),
                    min(g.min_id for g in group),
                    children=tuple(group),
                ),
            )
        return heap[0]

    def _build_root(self, entries: list[FrequencyEntry]) -> CodeNode:
        return _to_node(self.merge_order(entries), 1)


def huffman_build(table: FrequencyTable, arity: int) -> CodeTree:
    """Optimal b-ary prefix code tree for ``table``."""
    return HuffmanBuilder(arity).build(table)
