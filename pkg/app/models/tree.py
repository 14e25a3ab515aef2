"""
Code tree structure shared by every builder.

Edge labels are implicit: the i-th child of a node hangs off edge label i, so
labels under one node are always 0..k-1 in child order. The root sits at
depth 1; a node at depth d emits codeword position d when descending to one
of its children.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from app.errors import StructuralError
from app.schemas.codebook import Codebook, CodebookEntry, validate_prefix_free
from app.schemas.symbols import Symbol


@dataclass(frozen=True, slots=True)
class CodeNode:
    depth: int
    symbol: Optional[Symbol] = None
    children: tuple["CodeNode", ...] = ()
    weight: int = 0

    @property
    def is_leaf(self) -> bool:
        return self.symbol is not None

    @property
    def min_symbol_id(self) -> int:
        if self.symbol is not None:
            return self.symbol.id
        return min(child.min_symbol_id for child in self.children)

    def at_depth(self, depth: int) -> "CodeNode":
        """Copy of this subtree rooted at ``depth``."""
        if depth == self.depth:
            return self
        return CodeNode(
            depth=depth,
            symbol=self.symbol,
            children=tuple(child.at_depth(depth + 1) for child in self.children),
            weight=self.weight,
        )


def leaf(symbol: Symbol, depth: int, weight: int = 0) -> CodeNode:
    return CodeNode(depth=depth, symbol=symbol, weight=weight)


@dataclass(frozen=True, slots=True)
class CodeTree:
    root: CodeNode
    builder: str
    arity: int = 4
    max_hl: Optional[int] = None
    _leaves: dict[int, tuple[int, ...]] = field(default_factory=dict, init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.root.depth != 1:
            raise StructuralError("bad_root_depth", f"root depth is {self.root.depth}, expected 1")
        paths: dict[int, tuple[int, ...]] = {}
        stack: list[tuple[CodeNode, tuple[int, ...]]] = [(self.root, ())]
        while stack:
            node, path = stack.pop()
            if node.is_leaf:
                if node.symbol.id in paths:
                    raise StructuralError("duplicate_symbol", f"symbol {node.symbol.id} appears in two leaves")
                paths[node.symbol.id] = path
                continue
            if not node.children:
                raise StructuralError("empty_internal_node", f"internal node at depth {node.depth} has no children")
            for label, child in enumerate(node.children):
                if child.depth != node.depth + 1:
                    raise StructuralError(
                        "inconsistent_depth",
                        f"child at depth {child.depth} under node at depth {node.depth}",
                    )
                stack.append((child, path + (label,)))
        self._leaves.update(paths)

    def constrained(self, depth: int) -> bool:
        """True when nodes at ``depth`` are limited to three children."""
        return self.max_hl is not None and depth % self.max_hl == 0

    def allowed_arity(self, depth: int) -> int:
        return 3 if self.constrained(depth) else self.arity

    def nodes(self) -> Iterator[CodeNode]:
        """Pre-order traversal."""
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def internal_nodes(self) -> Iterator[CodeNode]:
        return (n for n in self.nodes() if not n.is_leaf)

    def leaves(self) -> Iterator[CodeNode]:
        return (n for n in self.nodes() if n.is_leaf)

    @property
    def paths(self) -> dict[int, tuple[int, ...]]:
        """Symbol id -> edge labels from the root."""
        return dict(self._leaves)

    def __len__(self) -> int:
        return len(self._leaves)


def validate_tree(tree: CodeTree) -> list[str]:
    """Return a description of every arity or labeling violation (empty when valid)."""
    problems: list[str] = []
    for node in tree.internal_nodes():
        allowed = tree.allowed_arity(node.depth)
        if len(node.children) > allowed:
            problems.append(
                f"node at depth {node.depth} has {len(node.children)} children, at most {allowed} allowed"
            )
    if tree.root.is_leaf:
        problems.append("root is a leaf; its codeword would be empty")
    return problems


def codebook_from_tree(tree: CodeTree) -> Codebook:
    """Read each symbol's codeword off the edge labels from the root to its leaf."""
    problems = validate_tree(tree)
    if problems:
        raise StructuralError("invalid_tree", "; ".join(problems))
    entries = tuple(
        CodebookEntry(symbol=symbol_id, codeword="".join(str(label) for label in path))
        for symbol_id, path in tree.paths.items()
    )
    return Codebook(builder=tree.builder, arity=tree.arity, max_hl=tree.max_hl, entries=entries)


def tree_from_codebook(book: Codebook, labels: Optional[dict[int, str]] = None) -> CodeTree:
    """
    Rebuild the code tree a serialized codebook came from.

    Every internal node must use edge labels 0..k-1 without gaps.
    """
    ok, _ = validate_prefix_free(book)
    if not ok:
        raise StructuralError("not_prefix_free", f"codebook {book.builder!r} has a prefix violation")
    if not book.entries:
        raise StructuralError("empty_codebook", "cannot rebuild a tree from an empty codebook")

    # nested dict trie: label -> subtrie, leaves hold the symbol id
    trie: dict = {}
    for entry in book.entries:
        cursor = trie
        for base in entry.codeword[:-1]:
            cursor = cursor.setdefault(int(base), {})
        cursor[int(entry.codeword[-1])] = entry.symbol

    def build(node: dict | int, depth: int) -> CodeNode:
        if isinstance(node, int):
            display = labels.get(node) if labels else None
            return CodeNode(depth=depth, symbol=Symbol(id=node, display=display))
        keys = sorted(node)
        if keys != list(range(len(keys))):
            raise StructuralError("unlabeled_edge", f"node at depth {depth} uses edge labels {keys}")
        return CodeNode(depth=depth, children=tuple(build(node[k], depth + 1) for k in keys))

    return CodeTree(root=build(trie, 1), builder=book.builder, arity=book.arity, max_hl=book.max_hl)
