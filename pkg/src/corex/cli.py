"""Command-line interface.

Exit codes: 0 success, 1 usage or I/O error, 2 content-free page.
"""
from __future__ import annotations

import argparse
import json
import logging
import math
import os
import sys
from pathlib import Path

from .cluster import ALGORITHMS, cluster_pages, distance_matrix, normalized_distance
from .coreex import CoreexParams, extract_coreex
from .corpus import GOLD_SUFFIX, TEMPLATES, generate_corpus
from .dom import parse_file
from .econ import DEFAULT_BIG_TAGS, extract_econ
from .evaluation import STRATEGIES, evaluate_corpus
from .result import ContentFreeError
from .treedist import CostModel, project_sim, rtdm, simple_tree_matching, stm_normalized

log = logging.getLogger("corex")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONTENT_FREE = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return f"{x:.6f}"


def to_json(obj, indent: int = 2, _level: int = 0) -> str:
    """JSON text with every float written to 6 fixed decimals."""
    pad = " " * (indent * (_level + 1))
    end = " " * (indent * _level)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return json.dumps(None)
        return _fmt(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k), ensure_ascii=False)}: {to_json(v, indent, _level + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, str)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(to_json(v, indent, _level + 1) for v in obj) + "]"
        items = [pad + to_json(v, indent, _level + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def _big_tags(value: str | None):
    if not value:
        return DEFAULT_BIG_TAGS
    tags = frozenset(t.strip().lower() for t in value.split(",") if t.strip())
    if not tags:
        raise argparse.ArgumentTypeError("empty big-node tag list")
    return tags


def _unit_interval(value: str) -> float:
    x = float(value)
    if not 0.0 <= x <= 1.0:
        raise argparse.ArgumentTypeError(f"{value} is not in [0, 1]")
    return x


def _non_negative(value: str) -> float:
    x = float(value)
    if not x >= 0.0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return x


def _coreex_params(args) -> CoreexParams:
    return CoreexParams(alpha=args.alpha, min_words=args.min_words)


def cmd_extract(args) -> int:
    tree = parse_file(args.input)
    log.info("parsed %s: %d nodes", args.input, tree.node_count)
    try:
        if args.strategy == "coreex":
            result = extract_coreex(tree, _coreex_params(args))
        else:
            result = extract_econ(tree, args.big_tags)
    except ContentFreeError as exc:
        print(f"corex: {args.input}: no content found ({exc})", file=sys.stderr)
        return EXIT_CONTENT_FREE
    if args.format == "text":
        print(result.text)
    else:
        print(to_json(result.to_dict()))
    return EXIT_OK


def cmd_sim(args) -> int:
    a = project_sim(parse_file(args.a))
    b = project_sim(parse_file(args.b))
    if args.algo == "stm":
        value = stm_normalized(a, b) if args.normalized else float(simple_tree_matching(a, b))
    else:
        costs = CostModel.unit(epsilon=args.epsilon)
        value = normalized_distance(a, b, "rtdm", costs) if args.normalized else rtdm(a, b, costs)
    print(_fmt(value))
    return EXIT_OK


def _html_files(directory: str) -> list[Path]:
    root = Path(directory)
    if not root.is_dir():
        raise FileNotFoundError(f"directory not found: {directory}")
    files = sorted(root.glob("*.html"))
    if not files:
        raise FileNotFoundError(f"no .html files in {directory}")
    return files


def cmd_cluster(args) -> int:
    files = _html_files(args.dir)
    trees = [project_sim(parse_file(f)) for f in files]
    matrix = distance_matrix(trees, args.algo)
    clusters = cluster_pages(matrix, args.threshold)
    log.info("%d pages, %d clusters", len(files), len(clusters))
    print(to_json({
        "threshold": args.threshold,
        "clusters": [[str(files[i]) for i in group] for group in clusters.groups],
        "diameters": list(clusters.diameters),
    }))
    return EXIT_OK


def cmd_eval(args) -> int:
    if args.generate:
        pairs = generate_corpus(args.seed, args.n, args.dir, args.templates)
        print(to_json({"generated": [{"html": p.html_path, "gold": p.gold_path} for p in pairs]}))
        return EXIT_OK
    if args.strategy is None:
        print("corex eval: --strategy is required unless --generate is given", file=sys.stderr)
        return EXIT_USAGE
    report = evaluate_corpus(args.dir, args.strategy, args.gold_suffix, _coreex_params(args), args.big_tags)
    print(to_json(report.to_dict()))
    return EXIT_OK


def _add_extractor_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--alpha", type=_unit_interval, default=CoreexParams.alpha)
    p.add_argument("--min-words", type=int, default=CoreexParams.min_words)
    p.add_argument("--big-tags", type=_big_tags, default=DEFAULT_BIG_TAGS, metavar="CSV")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="corex", description="Main-content extraction and page-structure similarity.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extract", help="extract the main content of one page")
    p.add_argument("--strategy", choices=STRATEGIES, required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=("json", "text"), default="json")
    _add_extractor_flags(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("sim", help="structural similarity of two pages")
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--normalized", action="store_true")
    p.add_argument("--epsilon", type=_non_negative, default=math.inf)
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("cluster", help="group the pages of a directory by structure")
    p.add_argument("--dir", required=True)
    p.add_argument("--algo", choices=ALGORITHMS, required=True)
    p.add_argument("--threshold", type=_unit_interval, required=True)
    p.set_defaults(func=cmd_cluster)

    p = sub.add_parser("eval", help="score an extractor on a gold corpus, or generate one")
    p.add_argument("--dir", required=True)
    p.add_argument("--strategy", choices=STRATEGIES)
    p.add_argument("--gold-suffix", default=GOLD_SUFFIX)
    p.add_argument("--generate", action="store_true")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--n", type=int, default=20)
    p.add_argument("--templates", type=lambda s: tuple(t.strip() for t in s.split(",")), default=TEMPLATES,
                   metavar="CSV", help=f"subset of {','.join(TEMPLATES)}")
    _add_extractor_flags(p)
    p.set_defaults(func=cmd_eval)
    return parser


def _setup_logging() -> None:
    level = os.environ.get("COREX_LOG", "error").strip().upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.ERROR) if level in ("ERROR", "INFO", "DEBUG") else logging.ERROR,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: list[str] | None = None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError) as exc:
        print(f"corex: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
