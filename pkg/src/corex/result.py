from __future__ import annotations

from dataclasses import dataclass, field


class ContentFreeError(ValueError):
    """Raised when a page has nothing an extractor can select."""


@dataclass(frozen=True)
class BacktrackStep:
    child: int
    parent: int
    distance: int


@dataclass(frozen=True)
class BacktrackTrace:
    steps: tuple[BacktrackStep, ...]
    summary: int


@dataclass(frozen=True)
class ExtractionResult:
    source_name: str
    strategy: str
    node_path: tuple[int, ...]
    text: str
    word_count: int
    punc_num: int
    score: float | None = None
    trace: BacktrackTrace | None = field(default=None, repr=False)

    @property
    def node_id(self) -> int:
        return self.node_path[-1]

    def to_dict(self) -> dict:
        trace = None
        if self.trace is not None:
            trace = [
                {"child": s.child, "parent": s.parent, "distance": s.distance}
                for s in self.trace.steps
            ]
        return {
            "source_name": self.source_name,
            "strategy": self.strategy,
            "node_path": list(self.node_path),
            "text": self.text,
            "word_count": self.word_count,
            "punc_num": self.punc_num,
            "score": self.score,
            "trace": trace,
        }
