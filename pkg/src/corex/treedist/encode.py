"""Flat array encoding of :class:`SimTree` for the DP kernels."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .simtree import SimTree


@dataclass(frozen=True, eq=False)
class FlatTree:
    """Pre-order arrays for one tree.

    ``shapes`` holds a class id per node such that two nodes (in any trees
    encoded by the same :class:`TreeEncoder`) share an id iff their subtrees
    are identical.  Children of ``u`` are ``child_idx[child_ptr[u]:child_ptr[u+1]]``.
    """

    labels: np.ndarray
    sizes: np.ndarray
    shapes: np.ndarray
    child_ptr: np.ndarray
    child_idx: np.ndarray
    nodes: tuple[SimTree, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def children(self, u: int) -> np.ndarray:
        return self.child_idx[self.child_ptr[u]:self.child_ptr[u + 1]]


class TreeEncoder:
    """Interns labels and subtree shapes so encoded trees are comparable."""

    def __init__(self):
        self.labels: dict[str, int] = {}
        self.shapes: dict[tuple, int] = {}

    def encode(self, t: SimTree) -> FlatTree:
        nodes: list[SimTree] = []
        parents: list[int] = []
        stack = [(t, -1)]
        while stack:
            node, parent = stack.pop()
            nodes.append(node)
            parents.append(parent)
            me = len(nodes) - 1
            stack.extend((c, me) for c in reversed(node.children))

        n = len(nodes)
        labels = np.empty(n, dtype=np.int64)
        sizes = np.empty(n, dtype=np.int64)
        shapes = np.empty(n, dtype=np.int64)
        kids: list[list[int]] = [[] for _ in range(n)]
        for u in range(1, n):
            kids[parents[u]].append(u)
        for u in range(n - 1, -1, -1):
            node = nodes[u]
            labels[u] = self.labels.setdefault(node.label, len(self.labels))
            sizes[u] = node.size
            key = (int(labels[u]),) + tuple(int(shapes[c]) for c in kids[u])
            shapes[u] = self.shapes.setdefault(key, len(self.shapes))

        child_ptr = np.zeros(n + 1, dtype=np.int64)
        child_ptr[1:] = np.cumsum([len(k) for k in kids])
        child_idx = np.fromiter((c for k in kids for c in k), dtype=np.int64, count=n - 1)
        return FlatTree(labels, sizes, shapes, child_ptr, child_idx, tuple(nodes))


def encode_pair(a: SimTree, b: SimTree) -> tuple[FlatTree, FlatTree]:
    enc = TreeEncoder()
    return enc.encode(a), enc.encode(b)
