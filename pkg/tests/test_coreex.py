import pytest

from corex.coreex import CoreexParams, extract_coreex, extract_html, score_all, score_node, select_main_node
from corex.dom import iter_text, node_text, parse_html
from corex.result import ContentFreeError
from corex.stats import NodeStats, annotate

P = CoreexParams(alpha=0.99, min_words=10)


def test_score_examples():
    assert score_node(NodeStats(100, 0, 0), 100, P) == pytest.approx(1.0)
    assert score_node(NodeStats(50, 50, 0), 100, P) == pytest.approx(0.005)
    assert score_node(NodeStats(80, 8, 0), 100, P) == pytest.approx(0.899)


def test_score_below_min_words_is_zero():
    assert score_node(NodeStats(9, 0, 0), 100, P) == 0.0


def test_score_rejects_empty_page():
    with pytest.raises(ContentFreeError):
        score_node(NodeStats(0, 0, 0), 0, P)


def test_params_validated():
    with pytest.raises(ValueError):
        CoreexParams(alpha=1.5)
    with pytest.raises(ValueError):
        CoreexParams(min_words=-1)


def _page(nav_words=30, body_words=300, scale=1):
    """Nav of link words, a byline, and an article; ``scale`` repeats every word."""
    def words(prefix, n):
        return " ".join(f"{prefix}{i}" for i in range(n) for _ in range(scale))
    nav = " ".join(f'<a href="/{i}">{words("w", 1)}</a>' for i in range(nav_words))
    return (
        f'<body><div id="nav">{nav} {words("menu", 4)}</div>'
        f'<div id="article"><h1>{words("title", 12)}</h1><p>{words("word", body_words)}</p></div></body>'
    )


def _oracle_best(tree, params):
    """Score every element from stats gathered by direct descendant walks."""
    def link_words(node, inside=False):
        if node.is_text:
            return len(node.text.split()) if inside else 0
        inside = inside or (node.tag == "a" and node.has_attr("href"))
        return sum(link_words(c, inside) for c in node.children)

    page = sum(len(t.split()) for t in iter_text(tree.root))
    best, best_score = None, -1.0
    for node in tree.nodes[1:]:
        if not node.is_element:
            continue
        w = sum(len(t.split()) for t in iter_text(node))
        if w < params.min_words or w == 0:
            continue
        s = params.alpha * (w - link_words(node)) / w + (1 - params.alpha) * w / page
        if s > best_score:
            best, best_score = node.id, s
    return best


def test_selects_article_over_nav():
    tree = parse_html(_page())
    chosen = select_main_node(tree, annotate(tree), P)
    assert tree[chosen].get("id") == "article"
    assert chosen == _oracle_best(tree, P)


def test_tie_break_prefers_outermost():
    tree = parse_html("<div><section><p>" + "x " * 20 + "</p></section></div>")
    assert select_main_node(tree, annotate(tree), P) == 1


def test_empty_page_errors():
    tree = parse_html("")
    with pytest.raises(ContentFreeError):
        select_main_node(tree, annotate(tree), P)


def test_all_links_below_min_words_errors():
    with pytest.raises(ContentFreeError):
        extract_html('<a href="/a">one</a> <a href="/b">two</a>', P)


def test_single_paragraph():
    result = extract_html("<p>Hi there.</p>", CoreexParams(min_words=0))
    assert result.text == "Hi there."
    assert result.strategy == "coreex" and result.node_path == (0, 1)


def test_result_metadata():
    tree = parse_html(_page(), "x.html")
    result = extract_coreex(tree, P)
    assert result.source_name == "x.html"
    assert result.word_count == len(result.text.split()) == 312
    assert result.node_path[0] == 0 and tree.path(result.node_id) == list(result.node_path)
    assert 0.0 <= result.score <= 1.0


def test_scores_bounded_and_link_monotone():
    tree = parse_html(_page(40, 100))
    scores, _ = score_all(tree, annotate(tree), P)
    assert ((scores >= 0) & (scores <= 1)).all()
    prev = None
    for lw in range(0, 51):
        s = score_node(NodeStats(50, lw, 0), 200, P)
        assert prev is None or s <= prev
        prev = s


def test_argmax_scale_invariant():
    for k in (2, 3, 7):
        base = parse_html(_page(30, 120))
        scaled = parse_html(_page(30, 120, scale=k))
        assert select_main_node(base, annotate(base), P) == select_main_node(scaled, annotate(scaled), P)


def test_deterministic():
    a = extract_html(_page())
    b = extract_html(_page())
    assert a == b
