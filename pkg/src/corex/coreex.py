"""Main-node selection from word and link counts.

Every element is scored with a convex combination of its non-link text
fraction and its share of the page's words::

    alpha * (words - link_words) / words + (1 - alpha) * words / page_words

Nodes with fewer than ``min_words`` words score 0 and are not candidates.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .dom import DomTree, node_text, parse_html
from .result import ContentFreeError, ExtractionResult
from .stats import NodeStats, StatsMap, annotate


@dataclass(frozen=True)
class CoreexParams:
    alpha: float = 0.99
    min_words: int = 10

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must lie in [0, 1], got {self.alpha}")
        if self.min_words < 0:
            raise ValueError(f"min_words must be >= 0, got {self.min_words}")


def score_node(stats: NodeStats, page_words: int, params: CoreexParams = CoreexParams()) -> float:
    if page_words <= 0:
        raise ContentFreeError("page has no words")
    if stats.word_count < params.min_words or stats.word_count == 0:
        return 0.0
    w = stats.word_count
    text_frac = (w - stats.link_word_count) / w
    return params.alpha * text_frac + (1.0 - params.alpha) * (w / page_words)


def score_all(tree: DomTree, stats: StatsMap, params: CoreexParams = CoreexParams()):
    """Return ``(scores, eligible)`` arrays over node ids.

    Text nodes, the root and nodes under ``min_words`` are ineligible and
    score 0.
    """
    page_words = int(stats.words[0])
    if page_words <= 0:
        raise ContentFreeError("page has no words")
    words = stats.words.astype(np.float64)
    safe = np.where(words > 0, words, 1.0)
    scores = params.alpha * ((words - stats.link_words) / safe) + (1.0 - params.alpha) * (words / page_words)
    eligible = (stats.words >= params.min_words) & (stats.words > 0)
    eligible &= np.fromiter((n.is_element for n in tree.nodes), dtype=bool, count=tree.node_count)
    eligible[0] = False
    return np.where(eligible, scores, 0.0), eligible


def select_main_node(tree: DomTree, stats: StatsMap, params: CoreexParams = CoreexParams()) -> int:
    """Id of the best-scoring element; ties go to the smallest id."""
    scores, eligible = score_all(tree, stats, params)
    if not eligible.any():
        raise ContentFreeError(f"no element holds at least {params.min_words} words")
    masked = np.where(eligible, scores, -np.inf)
    return int(np.argmax(masked))


def extract_coreex(tree: DomTree, params: CoreexParams = CoreexParams()) -> ExtractionResult:
    stats = annotate(tree)
    best = select_main_node(tree, stats, params)
    text = node_text(tree[best])
    s = stats[best]
    return ExtractionResult(
        source_name=tree.source_name,
        strategy="coreex",
        node_path=tuple(tree.path(best)),
        text=text,
        word_count=s.word_count,
        punc_num=s.punc_num,
        score=score_node(s, int(stats.words[0]), params),
    )


def extract_html(html: str | bytes, params: CoreexParams = CoreexParams(), source_name: str = "") -> ExtractionResult:
    return extract_coreex(parse_html(html, source_name), params)
