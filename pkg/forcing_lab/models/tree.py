"""Construction trees for graphs built from isolated vertices by unions and joins."""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, model_validator


class NodeKind(str, Enum):
    LEAF = "leaf"
    UNION = "union"
    JOIN = "join"


class ConstructionTree(BaseModel):
    """Rooted binary tree; leaves are isolated vertices, inner nodes are ∪ or ∨."""

    kind: NodeKind
    label: int | None = None
    children: tuple[ConstructionTree, ...] = ()

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_arity(self) -> ConstructionTree:
        if self.kind is NodeKind.LEAF:
            if self.children:
                raise ValueError("Leaf nodes cannot have children.")
        elif len(self.children) != 2:
            raise ValueError(f"{self.kind.value} nodes need exactly two children.")
        return self

    @classmethod
    def leaf(cls, label: int) -> ConstructionTree:
        return cls(kind=NodeKind.LEAF, label=label)

    @classmethod
    def union(cls, left: ConstructionTree, right: ConstructionTree) -> ConstructionTree:
        return cls(kind=NodeKind.UNION, children=(left, right))

    @classmethod
    def join(cls, left: ConstructionTree, right: ConstructionTree) -> ConstructionTree:
        return cls(kind=NodeKind.JOIN, children=(left, right))

    @property
    def is_leaf(self) -> bool:
        return self.kind is NodeKind.LEAF

    def leaves(self) -> list[ConstructionTree]:
        """Leaves in left-to-right order (this order fixes vertex labels)."""
        if self.is_leaf:
            return [self]
        return [leaf for child in self.children for leaf in child.leaves()]

    @property
    def is_threshold_tree(self) -> bool:
        if self.is_leaf:
            return True
        if not any(child.is_leaf for child in self.children):
            return False
        return all(child.is_threshold_tree for child in self.children)

    def spine(self) -> list[NodeKind]:
        """Operation kinds from the root down, always following a non-leaf child."""
        kinds: list[NodeKind] = []
        node = self
        while not node.is_leaf:
            kinds.append(node.kind)
            node = next((child for child in node.children if not child.is_leaf), node.children[0])
        return kinds


ConstructionTree.model_rebuild()

__all__ = ["ConstructionTree", "NodeKind"]
