"""Per-node word, link-word and punctuation counts.

Counts are subtree-cumulative: only Text nodes contribute directly, and an
element's value is the sum over its subtree.  Because ids are pre-order, a
subtree is the contiguous id range ``[i, i + size)`` and each sum is a
difference of prefix sums.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dom import DomTree

# ASCII and full-width period/comma, plus the ideographic full stop.
PUNCTUATION = frozenset(".,。，．")


@dataclass(frozen=True)
class NodeStats:
    word_count: int
    link_word_count: int
    punc_num: int


def word_count(text: str) -> int:
    return len(text.split())


def punc_num(text: str) -> int:
    return sum(1 for ch in text if ch in PUNCTUATION)


class StatsMap:
    """Read-only mapping from node id to :class:`NodeStats`, backed by arrays."""

    __slots__ = ("words", "link_words", "punc")

    def __init__(self, words: np.ndarray, link_words: np.ndarray, punc: np.ndarray):
        for arr in (words, link_words, punc):
            arr.setflags(write=False)
        self.words = words
        self.link_words = link_words
        self.punc = punc

    def __len__(self) -> int:
        return len(self.words)

    def __getitem__(self, node_id: int) -> NodeStats:
        return NodeStats(int(self.words[node_id]), int(self.link_words[node_id]), int(self.punc[node_id]))

    def __iter__(self):
        return iter(range(len(self.words)))


def _link_mask(tree: DomTree) -> np.ndarray:
    """True for nodes lying under (or being) an ``a`` element with ``href``."""
    inside = np.zeros(tree.node_count, dtype=bool)
    for node in tree.nodes:
        p = tree.parents[node.id]
        inherited = p >= 0 and inside[p]
        inside[node.id] = inherited or (node.is_element and node.tag == "a" and node.has_attr("href"))
    return inside


def _subtree_sums(own: np.ndarray, sizes: np.ndarray) -> np.ndarray:
    prefix = np.concatenate(([0], np.cumsum(own)))
    idx = np.arange(len(own))
    return prefix[idx + sizes] - prefix[idx]


def annotate(tree: DomTree) -> StatsMap:
    n = tree.node_count
    own_words = np.zeros(n, dtype=np.int64)
    own_punc = np.zeros(n, dtype=np.int64)
    for node in tree.nodes:
        if node.is_text:
            own_words[node.id] = word_count(node.text)
            own_punc[node.id] = punc_num(node.text)
    own_links = np.where(_link_mask(tree), own_words, 0)
    return StatsMap(
        _subtree_sums(own_words, tree.sizes),
        _subtree_sums(own_links, tree.sizes),
        _subtree_sums(own_punc, tree.sizes),
    )
