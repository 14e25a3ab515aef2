"""
Constrained Shannon-Fano builder.

The tree is grown top-down from the root (depth 1). A node at a depth
congruent to 0 modulo max_hl splits its symbols into three slices, every
other node into four, so the transcoder can use a non-repeating ternary
table at exactly those codeword positions.
"""

from typing import Optional

from app.models.tree import CodeNode, CodeTree, leaf
from app.schemas.builder import BuilderConfig
from app.schemas.symbols import FrequencyEntry, FrequencyTable

from .base import BaseBuilder, merge_trees
from .partition import partition


class SfcBuilder(BaseBuilder):
    name = "sfc"
    arity = 4

    def __init__(self, cfg: BuilderConfig):
        super().__init__(max_hl=cfg.max_hl)
        self.cfg = cfg

    def _build_root(self, entries: list[FrequencyEntry]) -> CodeNode:
        if self.cfg.tie_break == "descending-id":
            entries = sorted(entries, key=lambda e: (-e.count, -e.symbol.id))
        return self._build_at(entries, 1)

    def _build_at(self, entries: list[FrequencyEntry], depth: int) -> Optional[CodeNode]:
        if not entries:
            return None
        if len(entries) == 1:
            return leaf(entries[0].symbol, depth, entries[0].count)

        n = 3 if depth % self.max_hl == 0 else 4
        slices = partition(entries, [e.count for e in entries], n)
        return merge_trees([self._build_at(part, depth + 1) for part in slices])


def sfc_build(table: FrequencyTable, cfg: BuilderConfig) -> CodeTree:
    """Build the constrained Shannon-Fano code tree for ``table``."""
    return SfcBuilder(cfg).build(table)
