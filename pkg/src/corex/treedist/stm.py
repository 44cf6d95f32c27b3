"""Simple Tree Matching: the largest top-down mapping using equal labels only."""
from __future__ import annotations

from .encode import encode_pair
from .kernels import stm_score
from .simtree import Mapping, SimTree


class CallCounter:
    """Counts invocations of :func:`simple_tree_matching_recursive`."""

    def __init__(self):
        self.calls = 0


def simple_tree_matching(a: SimTree, b: SimTree) -> int:
    fa, fb = encode_pair(a, b)
    return stm_score(fa, fb)


def _match_matrix(a: SimTree, b: SimTree, counter: CallCounter | None):
    m, n = len(a.children), len(b.children)
    M = [[0] * (n + 1) for _ in range(m + 1)]
    W = [[0] * n for _ in range(m)]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            W[i - 1][j - 1] = simple_tree_matching_recursive(a.children[i - 1], b.children[j - 1], counter)
            M[i][j] = max(M[i][j - 1], M[i - 1][j], M[i - 1][j - 1] + W[i - 1][j - 1])
    return M, W


def simple_tree_matching_recursive(a: SimTree, b: SimTree, counter: CallCounter | None = None) -> int:
    """Direct recursive form, one call per visited node pair.

    Kept as the readable reference and for call-count instrumentation; use
    :func:`simple_tree_matching` for real work.
    """
    if counter is not None:
        counter.calls += 1
    if a.label != b.label:
        return 0
    M, _ = _match_matrix(a, b, counter)
    return M[len(a.children)][len(b.children)] + 1


def stm_normalized(a: SimTree, b: SimTree) -> float:
    return 2.0 * simple_tree_matching(a, b) / (a.size + b.size)


def stm_mapping(a: SimTree, b: SimTree) -> Mapping:
    """A maximum matching, as pre-order index pairs, recovered by traceback."""
    pairs: list[tuple[int, int]] = []
    _trace(a, b, 0, 0, pairs)
    return Mapping(pairs)


def _child_offsets(t: SimTree, base: int) -> list[int]:
    out = []
    pos = base + 1
    for c in t.children:
        out.append(pos)
        pos += c.size
    return out


def _trace(a: SimTree, b: SimTree, ia: int, ib: int, pairs: list) -> None:
    if a.label != b.label:
        return
    pairs.append((ia, ib))
    M, W = _match_matrix(a, b, None)
    oa, ob = _child_offsets(a, ia), _child_offsets(b, ib)
    i, j = len(a.children), len(b.children)
    while i > 0 and j > 0:
        if M[i][j] == M[i][j - 1]:
            j -= 1
        elif M[i][j] == M[i - 1][j]:
            i -= 1
        else:
            _trace(a.children[i - 1], b.children[j - 1], oa[i - 1], ob[j - 1], pairs)
            i -= 1
            j -= 1
