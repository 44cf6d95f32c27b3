"""Seeded synthetic news pages with known article bodies.

Each page plants a multi-paragraph article (sentences carry periods and
commas) among link-heavy navigation and punctuation-free boilerplate, in one
of a few fixed layouts.  The matching ``.gold.txt`` holds the article text.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

TEMPLATES = ("portal", "table", "semantic")
GOLD_SUFFIX = ".gold.txt"

_WORDS = """
market city council report water energy school police budget plan river
road health science court league season company worker price policy
festival museum harbor farmer election weather storm bridge station
teacher student hospital village airport library engine railway
program minister project research village coast forest industry
officials residents analysts visitors experts members leaders
said announced expected reported confirmed warned noted added
new local national annual major early late public final regional
during after before across within under between against toward
the a an of in on for with by from at to and or but
""".split()

_NAV = """Home World Business Sports Science Health Opinion Travel Culture
Weather Video Politics Technology Markets Local Education Books Food""".split()

_FOOTER = "Copyright 2024 Example Media Group All rights reserved Terms of Use Privacy Policy Contact Us"

_HEAD = """<!DOCTYPE html>
<html>
<head>
<meta charset="utf-8">
<title>{title}</title>
<!-- analytics -->
<script type="text/javascript">var cfg = {{a: 1, b: "<p>x, y.</p>"}}; if (a < b) {{ run(); }}</script>
<style>body {{ margin: 0; font: 12px/1.5 serif; }} p.lead {{ color: #333; }}</style>
</head>
"""


@dataclass(frozen=True)
class GoldPair:
    html_path: str
    gold_path: str
    gold: str


@dataclass
class _Page:
    title: str
    paragraphs: list[str]
    nav: list[str]
    side: list[str]
    byline: str


def _sentence(rng: random.Random) -> str:
    words = [rng.choice(_WORDS) for _ in range(rng.randint(6, 14))]
    if rng.random() < 0.6:
        cut = rng.randint(2, len(words) - 2)
        words[cut] += ","
    words[0] = words[0].capitalize()
    return " ".join(words) + "."


def _paragraph(rng: random.Random) -> str:
    return " ".join(_sentence(rng) for _ in range(rng.randint(3, 6)))


def _phrase(rng: random.Random, lo: int, hi: int) -> str:
    return " ".join(rng.choice(_WORDS).capitalize() for _ in range(rng.randint(lo, hi)))


def _make_page(rng: random.Random) -> _Page:
    return _Page(
        title=_phrase(rng, 4, 8),
        paragraphs=[_paragraph(rng) for _ in range(rng.randint(3, 6))],
        nav=rng.sample(_NAV, rng.randint(5, 8)),
        side=[_phrase(rng, 2, 4) for _ in range(rng.randint(4, 6))],
        byline="By " + _phrase(rng, 2, 2),
    )


def _links(items: Sequence[str], prefix: str, wrap: str = "") -> str:
    out = []
    for k, text in enumerate(items):
        link = f'<a href="/{prefix}/{k}">{text}</a>'
        out.append(f"<{wrap}>{link}</{wrap}>" if wrap else link)
    return "\n".join(out)


def _render_portal(p: _Page) -> str:
    body = "\n".join(f"<p>{para}</p>" for para in p.paragraphs)
    return _HEAD.format(title=p.title) + f"""<body>
<div id="header">
<div class="logo">Example News</div>
<div class="nav">
{_links(p.nav, "section")}
</div>
</div>
<div id="wrap">
<div id="sidebar">
<ul>
{_links(p.side, "story", "li")}
</ul>
</div>
<div id="content">
<h1>{p.title}</h1>
<div class="article">
{body}
</div>
</div>
</div>
<div id="footer">{_FOOTER}</div>
</body>
</html>
"""


def _render_table(p: _Page) -> str:
    body = "\n".join(f"<p>{para}</p>" for para in p.paragraphs)
    return _HEAD.format(title=p.title) + f"""<body>
<table width="100%" border=0>
<tr><td colspan=2 class=nav>
{_links(p.nav, "section")}
</td></tr>
<tr>
<td class=side valign=top>
{_links(p.side, "story")}
</td>
<td class=main valign=top>
<h2>{p.title}</h2>
{body}
</td>
</tr>
<tr><td colspan=2 class=foot>{_FOOTER}</td></tr>
</table>
</body>
</html>
"""


def _render_semantic(p: _Page) -> str:
    body = "\n".join(f"<p>{para}</p>" for para in p.paragraphs)
    return _HEAD.format(title=p.title) + f"""<body>
<header>
<nav>
{_links(p.nav, "section")}
</nav>
</header>
<main>
<article>
<header><h1>{p.title}</h1><span class="byline">{p.byline}</span></header>
<section class="story-body">
{body}
</section>
</article>
<aside>
<h3>Related</h3>
<ul>
{_links(p.side, "story", "li")}
</ul>
</aside>
</main>
<footer><p>{_FOOTER}</p></footer>
</body>
</html>
"""


_RENDERERS = {"portal": _render_portal, "table": _render_table, "semantic": _render_semantic}


def generate_corpus(
    seed: int,
    n: int,
    out_dir,
    templates: Sequence[str] = TEMPLATES,
) -> list[GoldPair]:
    """Write ``n`` pages (``page000.html`` ...) and their gold files.

    Page ``i`` uses ``templates[i % len(templates)]``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    unknown = [t for t in templates if t not in _RENDERERS]
    if unknown or not templates:
        raise ValueError(f"unknown templates {unknown}; choose from {TEMPLATES}")
    out = Path(out_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise OSError(f"cannot create corpus directory {out}: {exc}") from exc
    rng = random.Random(seed)
    pairs = []
    for i in range(n):
        page = _make_page(rng)
        html = _RENDERERS[templates[i % len(templates)]](page)
        gold = "\n\n".join(page.paragraphs) + "\n"
        html_path = out / f"page{i:03d}.html"
        gold_path = out / f"page{i:03d}{GOLD_SUFFIX}"
        for path, data in ((html_path, html), (gold_path, gold)):
            try:
                path.write_text(data, encoding="utf-8", newline="\n")
            except OSError as exc:
                raise OSError(f"cannot write {path}: {exc}") from exc
        pairs.append(GoldPair(str(html_path), str(gold_path), gold))
    return pairs
