"""Bag-of-words precision and recall against gold article text."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .coreex import CoreexParams, extract_coreex
from .corpus import GOLD_SUFFIX
from .dom import parse_file
from .econ import DEFAULT_BIG_TAGS, extract_econ
from .result import ContentFreeError, ExtractionResult

STRATEGIES = ("coreex", "econ")


def _bag(text: str) -> Counter:
    return Counter(text.casefold().split())


def score(extracted: str, gold: str) -> tuple[float, float, float]:
    """Return ``(precision, recall, f1)`` over case-folded word multisets.

    An empty side yields 0 for the metric it divides.
    """
    e, g = _bag(extracted), _bag(gold)
    common = sum((e & g).values())
    n_e, n_g = sum(e.values()), sum(g.values())
    precision = common / n_e if n_e else 0.0
    recall = common / n_g if n_g else 0.0
    f1 = 0.0 if precision + recall == 0 else 2 * precision * recall / (precision + recall)
    return precision, recall, f1


@dataclass(frozen=True)
class DocScore:
    name: str
    precision: float
    recall: float
    f1: float
    error: str | None = None


@dataclass(frozen=True)
class EvalReport:
    strategy: str
    documents: tuple[DocScore, ...]
    macro_precision: float
    macro_recall: float
    macro_f1: float
    failures: int = field(default=0)

    @property
    def count(self) -> int:
        return len(self.documents)

    def to_dict(self) -> dict:
        return {
            "strategy": self.strategy,
            "documents": [
                {"name": d.name, "precision": d.precision, "recall": d.recall, "f1": d.f1, "error": d.error}
                for d in self.documents
            ],
            "macro": {
                "precision": self.macro_precision,
                "recall": self.macro_recall,
                "f1": self.macro_f1,
                "count": self.count,
                "failures": self.failures,
            },
        }


def find_pairs(directory, gold_suffix: str = GOLD_SUFFIX) -> list[tuple[Path, Path]]:
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"corpus directory not found: {root}")
    pairs = []
    for html in sorted(root.glob("*.html")):
        gold = html.with_name(html.name[: -len(".html")] + gold_suffix)
        if gold.is_file():
            pairs.append((html, gold))
    return pairs


def make_extractor(
    strategy: str,
    params: CoreexParams = CoreexParams(),
    big_tags=DEFAULT_BIG_TAGS,
) -> Callable:
    if strategy == "coreex":
        return lambda tree: extract_coreex(tree, params)
    if strategy == "econ":
        return lambda tree: extract_econ(tree, big_tags)
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")


def evaluate_corpus(
    directory,
    strategy: str,
    gold_suffix: str = GOLD_SUFFIX,
    params: CoreexParams = CoreexParams(),
    big_tags=DEFAULT_BIG_TAGS,
) -> EvalReport:
    extract: Callable[..., ExtractionResult] = make_extractor(strategy, params, big_tags)
    pairs = find_pairs(directory, gold_suffix)
    if not pairs:
        raise FileNotFoundError(f"no <name>.html + <name>{gold_suffix} pairs in {directory}")
    docs = []
    for html, gold_path in pairs:
        gold = gold_path.read_text(encoding="utf-8")
        try:
            text = extract(parse_file(html)).text
        except ContentFreeError as exc:
            docs.append(DocScore(html.name, 0.0, 0.0, 0.0, str(exc)))
            continue
        docs.append(DocScore(html.name, *score(text, gold)))
    n = len(docs)
    return EvalReport(
        strategy=strategy,
        documents=tuple(docs),
        macro_precision=sum(d.precision for d in docs) / n,
        macro_recall=sum(d.recall for d in docs) / n,
        macro_f1=sum(d.f1 for d in docs) / n,
        failures=sum(d.error is not None for d in docs),
    )
