"""Single-linkage grouping of pages by normalised structural distance."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .treedist import CostModel, SimTree, TreeEncoder, rtdm_flat
from .treedist.kernels import stm_score

ALGORITHMS = ("stm", "rtdm")


def _check_algo(algo: str) -> None:
    if algo not in ALGORITHMS:
        raise ValueError(f"unknown algorithm {algo!r}; expected one of {ALGORITHMS}")


def _pair_distance(fa, fb, algo: str, costs: CostModel) -> float:
    total = int(fa.sizes[0] + fb.sizes[0])
    if algo == "stm":
        return 1.0 - 2.0 * stm_score(fa, fb) / total
    return min(1.0, max(0.0, rtdm_flat(fa, fb, costs) / total))


def normalized_distance(a: SimTree, b: SimTree, algo: str = "rtdm", costs: CostModel | None = None) -> float:
    _check_algo(algo)
    enc = TreeEncoder()
    return _pair_distance(enc.encode(a), enc.encode(b), algo, costs or CostModel.unit())


def distance_matrix(trees: Sequence[SimTree], algo: str = "rtdm", costs: CostModel | None = None) -> np.ndarray:
    _check_algo(algo)
    costs = costs or CostModel.unit()
    enc = TreeEncoder()
    flat = [enc.encode(t) for t in trees]
    n = len(flat)
    out = np.zeros((n, n), dtype=np.float64)
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = out[j, i] = _pair_distance(flat[i], flat[j], algo, costs)
    return out


@dataclass(frozen=True)
class ClusterSet:
    groups: tuple[tuple[int, ...], ...]
    threshold: float
    diameters: tuple[float, ...]

    def __len__(self) -> int:
        return len(self.groups)

    def labels(self) -> list[int]:
        out = [0] * sum(len(g) for g in self.groups)
        for k, group in enumerate(self.groups):
            for i in group:
                out[i] = k
        return out


def cluster_pages(matrix: np.ndarray, threshold: float) -> ClusterSet:
    """Connected components of the graph joining pages at distance <= threshold.

    Groups are ordered by their smallest member.  Each group's diameter (the
    largest within-group distance) shows how loosely it is chained together.
    """
    if not 0.0 <= threshold <= 1.0 or math.isnan(threshold):
        raise ValueError(f"threshold must lie in [0, 1], got {threshold}")
    matrix = np.asarray(matrix, dtype=np.float64)
    n = matrix.shape[0]
    if n == 0:
        return ClusterSet((), threshold, ())
    adjacency = csr_matrix(matrix <= threshold)
    _, raw = connected_components(adjacency, directed=False)
    members: dict[int, list[int]] = {}
    for i, lab in enumerate(raw):
        members.setdefault(int(lab), []).append(i)
    groups = sorted((tuple(g) for g in members.values()), key=lambda g: g[0])
    diameters = tuple(float(matrix[np.ix_(g, g)].max()) for g in groups)
    return ClusterSet(tuple(groups), threshold, diameters)
