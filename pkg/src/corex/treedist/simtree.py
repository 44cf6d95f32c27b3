"""Label-only trees for structural comparison, and the mapping validity check."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from ..dom import DomTree


@dataclass(frozen=True)
class SimTree:
    label: str
    children: tuple["SimTree", ...] = ()
    size: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        object.__setattr__(self, "size", 1 + sum(c.size for c in self.children))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        return to_sexpr(self)


def tree(label: str, *children: SimTree | str) -> SimTree:
    """Shorthand builder: ``tree("a", "b", tree("c", "d"))``."""
    return SimTree(label, tuple(c if isinstance(c, SimTree) else SimTree(c) for c in children))


def to_sexpr(t: SimTree) -> str:
    if t.is_leaf:
        return t.label
    return f"{t.label}({','.join(to_sexpr(c) for c in t.children)})"


def from_sexpr(text: str) -> SimTree:
    """Inverse of :func:`to_sexpr` for labels without ``(),`` characters."""
    pos = 0

    def parse() -> SimTree:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos] not in "(),":
            pos += 1
        label = text[start:pos].strip()
        kids = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            while True:
                kids.append(parse())
                if text[pos] == ",":
                    pos += 1
                    continue
                pos += 1  # ")"
                break
        return SimTree(label, tuple(kids))

    return parse()


def project_sim(dom: DomTree) -> SimTree:
    """Keep elements (labelled by tag), drop Text nodes, preserve child order."""
    built: dict[int, SimTree] = {}
    for node in reversed(dom.nodes):
        if node.is_element:
            built[node.id] = SimTree(node.tag, tuple(built[c.id] for c in node.children if c.is_element))
    return built[0]


def iter_preorder(t: SimTree) -> Iterator[SimTree]:
    stack = [t]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def preorder_arrays(t: SimTree) -> tuple[list[str], list[int], list[int]]:
    """``(labels, sizes, parents)`` indexed by pre-order position."""
    labels, sizes, parents = [], [], []
    stack = [(t, -1)]
    while stack:
        node, parent = stack.pop()
        labels.append(node.label)
        sizes.append(node.size)
        parents.append(parent)
        me = len(labels) - 1
        stack.extend((c, me) for c in reversed(node.children))
    return labels, sizes, parents


@dataclass(frozen=True)
class Mapping:
    pairs: frozenset[tuple[int, int]]

    def __init__(self, pairs: Iterable[tuple[int, int]] = ()):
        object.__setattr__(self, "pairs", frozenset((int(i), int(j)) for i, j in pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __iter__(self):
        return iter(sorted(self.pairs))

    def __contains__(self, pair) -> bool:
        return pair in self.pairs


def _is_ancestor(sizes: list[int], x: int, y: int) -> bool:
    return x < y < x + sizes[x]


def _is_left_of(sizes: list[int], x: int, y: int) -> bool:
    # pre-order: y after the whole subtree of x
    return y >= x + sizes[x]


def validate_mapping(m: Mapping | Iterable[tuple[int, int]], a: SimTree, b: SimTree) -> bool:
    """Check one-to-one, sibling-order and ancestry preservation."""
    pairs = sorted(m.pairs if isinstance(m, Mapping) else set(m))
    size_a = preorder_arrays(a)[1]
    size_b = preorder_arrays(b)[1]
    for i, j in pairs:
        if not (0 <= i < a.size and 0 <= j < b.size):
            raise ValueError(f"pair {(i, j)} out of range for trees of size {a.size} and {b.size}")
    for i1, j1 in pairs:
        for i2, j2 in pairs:
            if (i1 == i2) != (j1 == j2):
                return False
            if _is_left_of(size_a, i1, i2) != _is_left_of(size_b, j1, j2):
                return False
            if _is_ancestor(size_a, i1, i2) != _is_ancestor(size_b, j1, j2):
                return False
    return True
