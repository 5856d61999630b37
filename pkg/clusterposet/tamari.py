"""
Tamari Module

The Tamari lattice built directly from binary trees and right rotations,
with no dependency on the cluster code, so it can serve as an independent
check of the cluster tilting poset of a linearly oriented A_n quiver.
"""

from __future__ import annotations

import logging
from functools import lru_cache
from typing import List, Optional, Tuple

from clusterposet.poset import FinitePoset

logger = logging.getLogger(__name__)

# A binary tree: None for a leaf, (left, right) for an internal node.
Tree = Optional[Tuple["Tree", "Tree"]]


@lru_cache(maxsize=None)
def binary_trees(nodes: int) -> Tuple[Tree, ...]:
    """
    All binary trees with the given number of internal nodes.
    """
    if nodes == 0:
        return (None,)
    trees: List[Tree] = []
    for left_size in range(nodes):
        for left in binary_trees(left_size):
            for right in binary_trees(nodes - 1 - left_size):
                trees.append((left, right))
    return tuple(trees)


def right_rotations(tree: Tree) -> List[Tree]:
    """
    Every tree obtained by one right rotation ((A, B), C) -> (A, (B, C))
    at some node of tree.
    """
    if tree is None:
        return []

    left, right = tree
    found: List[Tree] = []
    if left is not None:
        a, b = left
        found.append((a, (b, right)))
    found.extend((new_left, right) for new_left in right_rotations(left))
    found.extend((left, new_right) for new_right in right_rotations(right))
    return found


def tree_text(tree: Tree) -> str:
    """
    Bracket form: a leaf is '.', a node is '(' left right ')'.
    """
    if tree is None:
        return "."
    return "(" + tree_text(tree[0]) + tree_text(tree[1]) + ")"


def tamari(n: int) -> FinitePoset:
    """
    Tamari lattice compared against the linear A_n quiver: binary trees with
    n + 1 internal nodes, ordered by the closure of right rotation.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")

    trees = binary_trees(n + 1)
    keys = [tree_text(t) for t in trees]
    covers = [
        (tree_text(t), tree_text(u))
        for t in trees
        for u in right_rotations(t)
    ]

    poset = FinitePoset.from_covers(keys, covers)
    logger.debug("tamari(%d): %d trees", n, len(poset))
    return poset
