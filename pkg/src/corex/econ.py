"""Punctuation-guided backtracking extractor.

Every "big node" (paragraph-like element) yields a text paragraph.  The node
owning the longest paragraph is the snippet node.  From there we walk towards
the root comparing punctuation totals: the first step where the parent adds no
period or comma means the parent only wraps noise, so the child is the summary
node whose text is the article.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .dom import RAW_TEXT_ELEMENTS, DomTree, node_text, parse_html
from .result import BacktrackStep, BacktrackTrace, ContentFreeError, ExtractionResult
from .stats import StatsMap, annotate, punc_num, word_count

DEFAULT_BIG_TAGS = frozenset(
    ["p", "h1", "h2", "h3", "h4", "h5", "h6", "b", "i", "u", "em", "strong", "li", "td", "pre", "blockquote"]
)


@dataclass(frozen=True)
class TextPara:
    owner: int
    text: str
    punc: int
    words: int


def big_nodes(tree: DomTree, tags: Iterable[str] = DEFAULT_BIG_TAGS) -> list[int]:
    tags = frozenset(tags) - RAW_TEXT_ELEMENTS
    # raw[i]: node i is, or lies under, a script/style element
    raw = [False] * tree.node_count
    out = []
    for node in tree.nodes:
        p = tree.parents[node.id]
        raw[node.id] = (p >= 0 and raw[p]) or (node.is_element and node.tag in RAW_TEXT_ELEMENTS)
        if node.is_element and node.tag in tags and not raw[node.id]:
            out.append(node.id)
    return out


def joint_para(tree: DomTree, big_node: int) -> TextPara:
    text = node_text(tree[big_node])
    return TextPara(big_node, text, punc_num(text), word_count(text))


def snippet_node(paras: list[TextPara]) -> int:
    best = None
    for para in paras:
        if best is None or len(para.text) > len(best.text) or (
            len(para.text) == len(best.text) and para.owner < best.owner
        ):
            best = para
    if best is None or best.words == 0:
        raise ContentFreeError("every text paragraph is empty")
    return best.owner


def backtrack_summary(tree: DomTree, stats: StatsMap, start: int) -> BacktrackTrace:
    if tree.parent(start) is None:
        raise ValueError("backtracking needs a start node below the root")
    steps = []
    child = start
    while True:
        parent = int(tree.parents[child])
        distance = int(stats.punc[parent] - stats.punc[child])
        steps.append(BacktrackStep(child, parent, distance))
        if distance == 0:
            return BacktrackTrace(tuple(steps), child)
        if parent == 0:
            return BacktrackTrace(tuple(steps), child)
        child = parent


def extract_econ(tree: DomTree, big_tags: Iterable[str] = DEFAULT_BIG_TAGS) -> ExtractionResult:
    owners = big_nodes(tree, big_tags)
    if not owners:
        raise ContentFreeError("page has no big nodes")
    paras = [joint_para(tree, i) for i in owners]
    start = snippet_node(paras)
    stats = annotate(tree)
    trace = backtrack_summary(tree, stats, start)
    summary = trace.summary
    text = node_text(tree[summary])
    return ExtractionResult(
        source_name=tree.source_name,
        strategy="econ",
        node_path=tuple(tree.path(summary)),
        text=text,
        word_count=int(stats.words[summary]),
        punc_num=int(stats.punc[summary]),
        trace=trace,
    )


def extract_html(html: str | bytes, big_tags: Iterable[str] = DEFAULT_BIG_TAGS, source_name: str = "") -> ExtractionResult:
    return extract_econ(parse_html(html, source_name), big_tags)
