"""Dynamic-programming kernels for tree matching and restricted edit distance.

Two interchangeable routes compute the same root value:

* ``*_table`` kernels fill a table over *all* node pairs bottom-up (reverse
  pre-order, so children are ready before parents).  They are plain loops and
  are compiled by numba when available.
* ``*_numpy`` routes visit only the node pairs the top-level call can reach,
  and evaluate each child-alignment row with vectorised numpy scans.

``COREX_DISABLE_NUMBA=1`` forces the numpy route.
"""
from __future__ import annotations

import numpy as np

from .. import _jit
from .encode import FlatTree


def _stm_table(la, ptr_a, idx_a, lb, ptr_b, idx_b):
    na = la.shape[0]
    nb = lb.shape[0]
    table = np.zeros((na, nb), dtype=np.int64)
    width = 1
    for v in range(nb):
        if ptr_b[v + 1] - ptr_b[v] + 1 > width:
            width = ptr_b[v + 1] - ptr_b[v] + 1
    prev = np.zeros(width, dtype=np.int64)
    cur = np.zeros(width, dtype=np.int64)
    for u in range(na - 1, -1, -1):
        m = ptr_a[u + 1] - ptr_a[u]
        for v in range(nb - 1, -1, -1):
            if la[u] != lb[v]:
                continue
            n = ptr_b[v + 1] - ptr_b[v]
            for j in range(n + 1):
                prev[j] = 0
            for i in range(1, m + 1):
                x = idx_a[ptr_a[u] + i - 1]
                cur[0] = 0
                for j in range(1, n + 1):
                    y = idx_b[ptr_b[v] + j - 1]
                    best = cur[j - 1]
                    if prev[j] > best:
                        best = prev[j]
                    diag = prev[j - 1] + table[x, y]
                    if diag > best:
                        best = diag
                    cur[j] = best
                prev, cur = cur, prev
            table[u, v] = prev[n] + 1
    return table


def _rtdm_table(sha, ptr_a, idx_a, shb, ptr_b, idx_b, la, lb, sub_del, sub_ins, desc_del, desc_ins, rep, eps):
    na = sha.shape[0]
    nb = shb.shape[0]
    table = np.zeros((na, nb), dtype=np.float64)
    width = 1
    for v in range(nb):
        if ptr_b[v + 1] - ptr_b[v] + 1 > width:
            width = ptr_b[v + 1] - ptr_b[v] + 1
    prev = np.zeros(width, dtype=np.float64)
    cur = np.zeros(width, dtype=np.float64)
    for u in range(na - 1, -1, -1):
        m = ptr_a[u + 1] - ptr_a[u]
        for v in range(nb - 1, -1, -1):
            n = ptr_b[v + 1] - ptr_b[v]
            if sha[u] == shb[v]:
                table[u, v] = 0.0
                continue
            if la[u] != lb[v] or m == 0 or n == 0:
                table[u, v] = rep[u, v] + desc_del[u] + desc_ins[v]
                continue
            prev[0] = 0.0
            for j in range(1, n + 1):
                prev[j] = prev[j - 1] + sub_ins[idx_b[ptr_b[v] + j - 1]]
            for i in range(1, m + 1):
                x = idx_a[ptr_a[u] + i - 1]
                cur[0] = prev[0] + sub_del[x]
                for j in range(1, n + 1):
                    y = idx_b[ptr_b[v] + j - 1]
                    best = prev[j] + sub_del[x]
                    ins = cur[j - 1] + sub_ins[y]
                    if ins < best:
                        best = ins
                    if prev[j - 1] <= eps:
                        s = prev[j - 1] + table[x, y]
                        if s < best:
                            best = s
                    cur[j] = best
                prev, cur = cur, prev
            table[u, v] = prev[n]
    return table


stm_table_py = _stm_table
rtdm_table_py = _rtdm_table
stm_table_nb = _jit.njit(_stm_table)
rtdm_table_nb = _jit.njit(_rtdm_table)


def _needs_alignment(fa: FlatTree, fb: FlatTree, ca: np.ndarray, cb: np.ndarray) -> np.ndarray:
    """Mask over ``ca x cb`` of pairs without a closed form.

    Those are pairs of internal nodes sharing a label whose subtrees differ;
    every other pair is scored directly.
    """
    mask = fa.labels[ca][:, None] == fb.labels[cb][None, :]
    mask &= (fa.sizes[ca] > 1)[:, None] & (fb.sizes[cb] > 1)[None, :]
    mask &= fa.shapes[ca][:, None] != fb.shapes[cb][None, :]
    return mask


def _reachable_pairs(fa: FlatTree, fb: FlatTree) -> list[tuple[int, int]]:
    """Pairs needing a child alignment, reachable from the roots, children first."""
    seen = {(0, 0)}
    stack = [(0, 0)]
    while stack:
        u, v = stack.pop()
        ca, cb = fa.children(u), fb.children(v)
        for i, j in zip(*np.nonzero(_needs_alignment(fa, fb, ca, cb))):
            pair = (int(ca[i]), int(cb[j]))
            if pair not in seen:
                seen.add(pair)
                stack.append(pair)
    return sorted(seen, reverse=True)


def stm_numpy(fa: FlatTree, fb: FlatTree) -> int:
    if fa.labels[0] != fb.labels[0]:
        return 0
    if fa.shapes[0] == fb.shapes[0]:
        return int(fa.sizes[0])
    if fa.sizes[0] == 1 or fb.sizes[0] == 1:
        return 1
    memo: dict[tuple[int, int], int] = {}
    for u, v in _reachable_pairs(fa, fb):
        ca, cb = fa.children(u), fb.children(v)
        w = (fa.labels[ca][:, None] == fb.labels[cb][None, :]).astype(np.int64)
        same = fa.shapes[ca][:, None] == fb.shapes[cb][None, :]
        w = np.where(same, fa.sizes[ca][:, None], w)
        for i, j in zip(*np.nonzero(_needs_alignment(fa, fb, ca, cb))):
            w[i, j] = memo[(int(ca[i]), int(cb[j]))]
        prev = np.zeros(len(cb) + 1, dtype=np.int64)
        for i in range(len(ca)):
            step = np.maximum(prev[1:], prev[:-1] + w[i])
            prev = np.maximum.accumulate(np.concatenate(([0], step)))
        memo[(u, v)] = int(prev[-1]) + 1
    return memo[(0, 0)]


def _subtree_costs(f: FlatTree, weights: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    prefix = np.concatenate(([0.0], np.cumsum(weights)))
    idx = np.arange(len(weights))
    whole = prefix[idx + f.sizes] - prefix[idx]
    return whole, whole - weights


def rtdm_numpy(fa, fb, del_w, ins_w, rep, eps) -> float:
    sub_del, desc_del = _subtree_costs(fa, del_w)
    sub_ins, desc_ins = _subtree_costs(fb, ins_w)
    if fa.shapes[0] == fb.shapes[0]:
        return 0.0
    if fa.labels[0] != fb.labels[0] or fa.sizes[0] == 1 or fb.sizes[0] == 1:
        return float(rep[0, 0] + desc_del[0] + desc_ins[0])
    memo: dict[tuple[int, int], float] = {}
    for u, v in _reachable_pairs(fa, fb):
        ca, cb = fa.children(u), fb.children(v)
        closed = rep[np.ix_(ca, cb)] + desc_del[ca][:, None] + desc_ins[cb][None, :]
        closed = np.where(fa.shapes[ca][:, None] == fb.shapes[cb][None, :], 0.0, closed)
        for i, j in zip(*np.nonzero(_needs_alignment(fa, fb, ca, cb))):
            closed[i, j] = memo[(int(ca[i]), int(cb[j]))]
        ins_prefix = np.concatenate(([0.0], np.cumsum(sub_ins[cb])))
        prev = ins_prefix.copy()
        for i, x in enumerate(ca):
            s = np.where(prev[:-1] > eps, np.inf, prev[:-1] + closed[i])
            t = np.empty_like(prev)
            t[0] = prev[0] + sub_del[x]
            t[1:] = np.minimum(prev[1:] + sub_del[x], s)
            # row recurrence cur[j] = min(t[j], cur[j-1] + ins[j]) as a prefix-min scan
            prev = np.minimum.accumulate(t - ins_prefix) + ins_prefix
        memo[(u, v)] = float(prev[-1])
    return memo[(0, 0)]


def stm_score(fa: FlatTree, fb: FlatTree, use_numba: bool | None = None) -> int:
    if use_numba is None:
        use_numba = _jit.USE_NUMBA
    if not use_numba:
        return stm_numpy(fa, fb)
    table = stm_table_nb(fa.labels, fa.child_ptr, fa.child_idx, fb.labels, fb.child_ptr, fb.child_idx)
    return int(table[0, 0])


def rtdm_score(fa, fb, del_w, ins_w, rep, eps, use_numba: bool | None = None) -> float:
    if use_numba is None:
        use_numba = _jit.USE_NUMBA
    if not use_numba:
        return rtdm_numpy(fa, fb, del_w, ins_w, rep, eps)
    sub_del, desc_del = _subtree_costs(fa, del_w)
    sub_ins, desc_ins = _subtree_costs(fb, ins_w)
    table = rtdm_table_nb(
        fa.shapes, fa.child_ptr, fa.child_idx, fb.shapes, fb.child_ptr, fb.child_idx,
        fa.labels, fb.labels, sub_del, sub_ins, desc_del, desc_ins,
        np.ascontiguousarray(rep, dtype=np.float64), float(eps),
    )
    return float(table[0, 0])
