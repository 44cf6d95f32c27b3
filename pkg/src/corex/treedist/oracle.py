"""Exhaustive oracles for small trees.

These enumerate every top-down mapping with the roots paired, keep the ones
:func:`validate_mapping` accepts, and optimise over that explicit set.  They
share no code with the dynamic programs they check.
"""
from __future__ import annotations

from typing import Callable, Iterator

from .rtdm import UNIT, CostModel
from .simtree import SimTree, iter_preorder, preorder_arrays, validate_mapping

STM_MAX_NODES = 8
RTDM_MAX_NODES = 7


def enumerate_mappings(a: SimTree, b: SimTree, allowed: Callable[[int, int], bool]) -> Iterator[list[tuple[int, int]]]:
    """Yield every parent-closed partial injection with ``(0, 0)`` included.

    Each non-root node of ``a`` is either unmapped or mapped to an unused
    child of its parent's image.  Order and ancestry are not enforced here.
    """
    _, _, parents_a = preorder_arrays(a)
    _, _, parents_b = preorder_arrays(b)
    kids_b: list[list[int]] = [[] for _ in parents_b]
    for j, p in enumerate(parents_b):
        if p >= 0:
            kids_b[p].append(j)
    if not allowed(0, 0):
        return
    image: list[int | None] = [None] * len(parents_a)
    image[0] = 0
    used = {0}

    def assign(k: int) -> Iterator[list[tuple[int, int]]]:
        if k == len(parents_a):
            yield [(i, j) for i, j in enumerate(image) if j is not None]
            return
        image[k] = None
        yield from assign(k + 1)
        target = image[parents_a[k]]
        if target is None:
            return
        for y in kids_b[target]:
            if y not in used and allowed(k, y):
                image[k] = y
                used.add(y)
                yield from assign(k + 1)
                used.discard(y)
        image[k] = None

    yield from assign(1)


def _valid_mappings(a, b, allowed):
    for pairs in enumerate_mappings(a, b, allowed):
        if validate_mapping(pairs, a, b):
            yield pairs


def brute_force_stm(a: SimTree, b: SimTree) -> int:
    if a.size > STM_MAX_NODES or b.size > STM_MAX_NODES:
        raise ValueError(f"brute force STM limited to {STM_MAX_NODES} nodes per tree")
    la, _, _ = preorder_arrays(a)
    lb, _, _ = preorder_arrays(b)
    best = 0
    for pairs in _valid_mappings(a, b, lambda i, j: la[i] == lb[j]):
        best = max(best, len(pairs))
    return best


def brute_force_rtdm(a: SimTree, b: SimTree, costs: CostModel = UNIT) -> float:
    if a.size > RTDM_MAX_NODES or b.size > RTDM_MAX_NODES:
        raise ValueError(f"brute force RTDM limited to {RTDM_MAX_NODES} nodes per tree")
    nodes_a = list(iter_preorder(a))
    nodes_b = list(iter_preorder(b))
    _, _, parents_a = preorder_arrays(a)
    best = float("inf")
    for pairs in _valid_mappings(a, b, lambda i, j: True):
        mapped_a = {i for i, _ in pairs}
        mapped_b = {j for _, j in pairs}
        relabelled = {i for i, j in pairs if nodes_a[i].label != nodes_b[j].label}
        # a relabelled node must sit on the mapping's frontier
        if any(parents_a[i] in relabelled for i in mapped_a if i > 0):
            continue
        cost = sum(costs.replace(nodes_a[i], nodes_b[j]) for i, j in pairs if i in relabelled)
        cost += sum(costs.delete(n) for i, n in enumerate(nodes_a) if i not in mapped_a)
        cost += sum(costs.insert(n) for j, n in enumerate(nodes_b) if j not in mapped_b)
        best = min(best, cost)
    return float(best)
