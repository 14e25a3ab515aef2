import logging
from abc import ABC, abstractmethod
from typing import Optional, Sequence

from app.errors import InputError, StructuralError
from app.models.tree import CodeNode, CodeTree, codebook_from_tree
from app.schemas.codebook import Codebook
from app.schemas.symbols import FrequencyEntry, FrequencyTable

logger = logging.getLogger(__name__)


class BaseBuilder(ABC):
    """
    Base class for code-tree builders.

    Subclasses implement ``_build_root`` over the table's entries; this class
    takes care of input checks, the one-symbol special case and codebook
    extraction.
    """

    name: str = "base"
    arity: int = 4

    def __init__(self, max_hl: Optional[int] = None):
        """
        Initialize the builder.

        Args:
            max_hl: Homopolymer limit for constrained builders, None otherwise
        """
        self.max_hl = max_hl

    def build(self, table: FrequencyTable) -> CodeTree:
        """
        Build the code tree for a frequency table.

        Args:
            table: Symbol counts; must be nonempty with a positive total

        Returns:
            The code tree, rooted at depth 1

        Raises:
            InputError: If the table is empty or all counts are zero
        """
        if len(table) == 0:
            raise InputError("empty_table", "cannot build a code for an empty alphabet")
        if table.total <= 0:
            raise InputError("zero_total", "frequency table has no occurrences")

        entries = table.sorted_for_coding()
        if len(entries) == 1:
            # A lone symbol still needs a one-base codeword to stay decodable
            only = entries[0]
            root = CodeNode(
                depth=1,
                children=(CodeNode(depth=2, symbol=only.symbol, weight=only.count),),
                weight=only.count,
            )
        else:
            root = self._build_root(entries)

        tree = CodeTree(root=root, builder=self.name, arity=self.arity, max_hl=self.max_hl)
        logger.debug(
            "Built %s tree over %d symbols (max_hl=%s)", self.name, len(tree), self.max_hl
        )
        return tree

    def codebook(self, table: FrequencyTable) -> Codebook:
        return codebook_from_tree(self.build(table))

    @abstractmethod
    def _build_root(self, entries: list[FrequencyEntry]) -> CodeNode:
        """Build the root node (depth 1) from at least two entries in coding order."""


def merge_trees(subtrees: Sequence[Optional[CodeNode]]) -> CodeNode:
    """
    Hang up to four subtrees under a new root.

    Empty slots (None) are dropped. The i-th remaining subtree gets edge
    label i, and the new root sits one level above the first subtree; any
    subtree built at another depth is shifted to match.

    Raises:
        StructuralError: If nothing is left to merge or more than four subtrees remain
    """
    present = [s for s in subtrees if s is not None]
    if not present:
        raise StructuralError("empty_merge", "merge_trees needs at least one nonempty subtree")
    if len(present) > 4:
        raise StructuralError("arity_overflow", f"cannot merge {len(present)} subtrees under one node")
    depth = present[0].depth - 1
    children = tuple(s.at_depth(depth + 1) for s in present)
    return CodeNode(depth=depth, children=children, weight=sum(c.weight for c in children))
