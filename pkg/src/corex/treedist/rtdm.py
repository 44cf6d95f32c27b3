"""Restricted top-down edit distance.

Edits are confined to the frontier of the mapping: a subtree is deleted or
inserted whole, and a node may be relabelled only if nothing below it is
mapped (it is then rebuilt together with its descendants).  Equal-labelled
internal pairs recurse into an ordered alignment of their children.

The threshold ``epsilon`` prunes substitution in the child alignment: once the
diagonal prefix cost exceeds it, the pair is no longer considered a match.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .encode import FlatTree, TreeEncoder
from .kernels import rtdm_score
from .simtree import SimTree

NodeCost = Callable[[SimTree], float]
PairCost = Callable[[SimTree, SimTree], float]


def _one(node: SimTree) -> float:
    return 1.0


def _label_mismatch(x: SimTree, y: SimTree) -> float:
    return 0.0 if x.label == y.label else 1.0


@dataclass(frozen=True)
class CostModel:
    """Edit costs.

    Mapping two nodes with the same label is always free; ``replace`` is
    consulted only for unequal labels.  Set ``label_only`` when ``replace``
    depends on the two labels alone, so it is evaluated once per label pair.
    """

    delete: NodeCost = _one
    insert: NodeCost = _one
    replace: PairCost = _label_mismatch
    epsilon: float = math.inf
    label_only: bool = True

    def __post_init__(self):
        if not self.epsilon >= 0:
            raise ValueError(f"epsilon must be non-negative, got {self.epsilon}")

    @classmethod
    def unit(cls, epsilon: float = math.inf) -> "CostModel":
        return cls(epsilon=epsilon)

    def node_weights(self, nodes: Sequence[SimTree], fn: NodeCost) -> np.ndarray:
        if fn is _one:
            return np.ones(len(nodes), dtype=np.float64)
        w = np.fromiter((fn(n) for n in nodes), dtype=np.float64, count=len(nodes))
        if (w < 0).any():
            raise ValueError("edit costs must be non-negative")
        return w

    def replace_matrix(self, fa: FlatTree, fb: FlatTree) -> np.ndarray:
        if self.replace is _label_mismatch:
            return (fa.labels[:, None] != fb.labels[None, :]).astype(np.float64)
        if self.label_only:
            by_label: dict[tuple[int, int], float] = {}
            first_a = {int(l): n for l, n in zip(fa.labels, fa.nodes)}
            first_b = {int(l): n for l, n in zip(fb.labels, fb.nodes)}
            for la, x in first_a.items():
                for lb, y in first_b.items():
                    by_label[(la, lb)] = self.replace(x, y)
            lut_a = {l: i for i, l in enumerate(first_a)}
            lut_b = {l: i for i, l in enumerate(first_b)}
            table = np.array([[by_label[(la, lb)] for lb in first_b] for la in first_a], dtype=np.float64)
            ia = np.array([lut_a[int(l)] for l in fa.labels])
            ib = np.array([lut_b[int(l)] for l in fb.labels])
            out = table[np.ix_(ia, ib)]
        else:
            out = np.array([[self.replace(x, y) for y in fb.nodes] for x in fa.nodes], dtype=np.float64)
        out[fa.labels[:, None] == fb.labels[None, :]] = 0.0
        if (out < 0).any():
            raise ValueError("edit costs must be non-negative")
        return out


UNIT = CostModel.unit()


def rtdm(a: SimTree, b: SimTree, costs: CostModel = UNIT, encoder: TreeEncoder | None = None) -> float:
    enc = encoder if encoder is not None else TreeEncoder()
    fa, fb = enc.encode(a), enc.encode(b)
    return rtdm_flat(fa, fb, costs)


def rtdm_flat(fa: FlatTree, fb: FlatTree, costs: CostModel = UNIT) -> float:
    """Distance between two trees already encoded by one shared encoder."""
    del_w = costs.node_weights(fa.nodes, costs.delete)
    ins_w = costs.node_weights(fb.nodes, costs.insert)
    rep = costs.replace_matrix(fa, fb)
    return rtdm_score(fa, fb, del_w, ins_w, rep, costs.epsilon)
