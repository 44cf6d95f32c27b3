"""Lenient tag-soup HTML parser producing an immutable, pre-order numbered DOM.

The parser is deliberately small.  It does not implement the HTML5 tree
construction algorithm; instead it applies a fixed set of recovery rules:

* comments, doctypes, processing instructions and CDATA sections are dropped;
* the raw content of ``script`` and ``style`` is dropped;
* void elements never receive children;
* an end tag with no matching open element is ignored;
* an element left open is closed when its parent closes (or at end of input);
* ``<p>`` closes an open ``p`` on top of the stack; ``<li>`` closes an open
  ``p`` and then an open ``li`` on top of the stack;
* a tag cut off by the end of input is dropped;
* ``&amp; &lt; &gt; &quot;`` and numeric references are decoded, any other
  entity passes through literally.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

VOID_ELEMENTS = frozenset(
    ["area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta", "source", "track", "wbr"]
)
RAW_TEXT_ELEMENTS = frozenset(["script", "style"])
ROOT_TAG = "document"

_NAMED_REFS = {"amp": "&", "lt": "<", "gt": ">", "quot": '"'}
_CHARREF_RE = re.compile(r"&(?:(amp|lt|gt|quot)|#([0-9]+)|#[xX]([0-9a-fA-F]+));")
_WS = " \t\n\r\f"


class NodeKind(enum.Enum):
    ELEMENT = "element"
    TEXT = "text"


@dataclass(frozen=True, eq=False, repr=False)
class DomNode:
    id: int
    kind: NodeKind
    tag: str = ""
    attrs: tuple[tuple[str, str], ...] = ()
    text: str = ""
    children: tuple["DomNode", ...] = ()

    @property
    def is_element(self) -> bool:
        return self.kind is NodeKind.ELEMENT

    @property
    def is_text(self) -> bool:
        return self.kind is NodeKind.TEXT

    def get(self, name: str, default: str | None = None) -> str | None:
        for key, value in self.attrs:
            if key == name:
                return value
        return default

    def has_attr(self, name: str) -> bool:
        return any(key == name for key, _ in self.attrs)

    def __repr__(self) -> str:
        if self.is_text:
            return f"DomNode({self.id}, text={self.text!r})"
        return f"DomNode({self.id}, <{self.tag}>, {len(self.children)} children)"


@dataclass(frozen=True, eq=False, repr=False)
class DomTree:
    """A parsed page.

    Besides the node objects the tree keeps flat per-id arrays (``parents``,
    ``sizes``, ``depths``) so that ancestor walks and subtree sums need no
    recursion.  A node's subtree occupies ids ``[id, id + sizes[id])``.
    """

    root: DomNode
    nodes: tuple[DomNode, ...]
    parents: np.ndarray
    sizes: np.ndarray
    depths: np.ndarray
    source_name: str = ""

    @property
    def node_count(self) -> int:
        return len(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def __getitem__(self, node_id: int) -> DomNode:
        return self.nodes[node_id]

    def __repr__(self) -> str:
        return f"DomTree({self.source_name!r}, node_count={self.node_count})"

    def parent(self, node_id: int) -> int | None:
        p = int(self.parents[node_id])
        return None if p < 0 else p

    def depth(self, node_id: int) -> int:
        return int(self.depths[node_id])

    def path(self, node_id: int) -> list[int]:
        """Ids from the root down to ``node_id``."""
        out = []
        while node_id >= 0:
            out.append(node_id)
            node_id = int(self.parents[node_id])
        return out[::-1]

    def is_ancestor_or_self(self, anc: int, node_id: int) -> bool:
        return anc <= node_id < anc + int(self.sizes[anc])

    def elements(self) -> Iterator[DomNode]:
        return (n for n in self.nodes if n.is_element)


class _Builder:
    __slots__ = ("tag", "attrs", "text", "children")

    def __init__(self, tag=None, attrs=(), text=None):
        self.tag = tag
        self.attrs = attrs
        self.text = text
        self.children = []


def decode_charrefs(text: str) -> str:
    if "&" not in text:
        return text
    return _CHARREF_RE.sub(_decode_match, text)


def _decode_match(m: re.Match) -> str:
    if m.group(1):
        return _NAMED_REFS[m.group(1)]
    digits = m.group(2)
    code = int(digits) if digits is not None else int(m.group(3), 16)
    if code == 0 or code > 0x10FFFF or 0xD800 <= code <= 0xDFFF:
        return "�"
    return chr(code)


class _TreeBuilder:
    def __init__(self):
        self.root = _Builder(ROOT_TAG)
        self.stack = [self.root]

    def text(self, data: str) -> None:
        if not data:
            return
        data = decode_charrefs(data)
        kids = self.stack[-1].children
        if kids and kids[-1].text is not None:
            kids[-1].text += data
        else:
            kids.append(_Builder(text=data))

    def start(self, tag: str, attrs: list, self_closing: bool) -> None:
        if tag == "p" or tag == "li":
            if self.stack[-1].tag == "p" and len(self.stack) > 1:
                self.stack.pop()
            if tag == "li" and self.stack[-1].tag == "li" and len(self.stack) > 1:
                self.stack.pop()
        node = _Builder(tag, tuple(attrs))
        self.stack[-1].children.append(node)
        if tag not in VOID_ELEMENTS and not self_closing:
            self.stack.append(node)

    def end(self, tag: str) -> None:
        for i in range(len(self.stack) - 1, 0, -1):
            if self.stack[i].tag == tag:
                del self.stack[i:]
                return


def _scan_tag(s: str, pos: int):
    """Parse a start tag at ``s[pos] == '<'``.

    Returns ``(name, attrs, self_closing, end)`` or ``None`` when the input ends
    before the tag does.
    """
    n = len(s)
    i = pos + 1
    j = i
    while j < n and s[j] not in _WS and s[j] != "/" and s[j] != ">":
        j += 1
    name = s[i:j].lower()
    attrs: list[tuple[str, str]] = []
    seen = set()
    self_closing = False
    i = j
    while True:
        while i < n and (s[i] in _WS or s[i] == "/"):
            self_closing = s[i] == "/"
            i += 1
        if i >= n:
            return None
        if s[i] == ">":
            return name, attrs, self_closing, i + 1
        self_closing = False
        j = i + 1  # a leading '=' belongs to the name
        while j < n and s[j] not in _WS and s[j] not in "/>=":
            j += 1
        key = s[i:j].lower()
        i = j
        while i < n and s[i] in _WS:
            i += 1
        value = ""
        if i < n and s[i] == "=":
            i += 1
            while i < n and s[i] in _WS:
                i += 1
            if i >= n:
                return None
            if s[i] == '"' or s[i] == "'":
                close = s.find(s[i], i + 1)
                if close < 0:
                    return None
                value = s[i + 1:close]
                i = close + 1
            else:
                j = i
                while j < n and s[j] not in _WS and s[j] != ">":
                    j += 1
                value = s[i:j]
                i = j
        if key not in seen:
            seen.add(key)
            attrs.append((key, decode_charrefs(value)))


def _raw_text_end(s: str, pos: int, tag: str) -> int:
    """Index of the ``</tag`` that terminates raw text starting at ``pos``."""
    pattern = re.compile(r"</" + tag + r"(?=[\s/>]|$)", re.IGNORECASE)
    m = pattern.search(s, pos)
    return len(s) if m is None else m.start()


def _tokenize_into(s: str, builder: _TreeBuilder) -> None:
    n = len(s)
    pos = 0
    while pos < n:
        lt = s.find("<", pos)
        if lt < 0:
            builder.text(s[pos:])
            return
        if lt > pos:
            builder.text(s[pos:lt])
        pos = lt
        nxt = s[pos + 1] if pos + 1 < n else ""
        if s.startswith("<!--", pos):
            end = s.find("-->", pos + 4)
            pos = n if end < 0 else end + 3
        elif s.startswith("<![CDATA[", pos):
            end = s.find("]]>", pos + 9)
            pos = n if end < 0 else end + 3
        elif nxt == "!" or nxt == "?":
            end = s.find(">", pos + 2)
            pos = n if end < 0 else end + 1
        elif nxt == "/" and pos + 2 < n and s[pos + 2].isalpha():
            end = s.find(">", pos + 2)
            if end < 0:
                return
            j = pos + 2
            while j < end and s[j] not in _WS and s[j] != "/":
                j += 1
            builder.end(s[pos + 2:j].lower())
            pos = end + 1
        elif nxt.isalpha():
            tag = _scan_tag(s, pos)
            if tag is None:
                return
            name, attrs, self_closing, pos = tag
            builder.start(name, attrs, self_closing)
            if name in RAW_TEXT_ELEMENTS and not self_closing:
                pos = _raw_text_end(s, pos, name)
        else:
            builder.text("<")
            pos += 1


def _freeze(root: _Builder, source_name: str) -> DomTree:
    order: list[_Builder] = []
    parents: list[int] = []
    depths: list[int] = []
    stack = [(root, -1, 0)]
    while stack:
        node, parent, depth = stack.pop()
        order.append(node)
        parents.append(parent)
        depths.append(depth)
        me = len(order) - 1
        for child in reversed(node.children):
            stack.append((child, me, depth + 1))

    count = len(order)
    index = {id(b): i for i, b in enumerate(order)}
    frozen: list[DomNode | None] = [None] * count
    sizes = np.ones(count, dtype=np.int64)
    for i in range(count - 1, -1, -1):
        b = order[i]
        kids = tuple(frozen[index[id(c)]] for c in b.children)
        if b.text is not None:
            frozen[i] = DomNode(i, NodeKind.TEXT, text=b.text)
        else:
            frozen[i] = DomNode(i, NodeKind.ELEMENT, tag=b.tag, attrs=b.attrs, children=kids)
        if parents[i] >= 0:
            sizes[parents[i]] += sizes[i]

    parr = np.asarray(parents, dtype=np.int64)
    darr = np.asarray(depths, dtype=np.int64)
    for arr in (parr, sizes, darr):
        arr.setflags(write=False)
    return DomTree(frozen[0], tuple(frozen), parr, sizes, darr, source_name)


def parse_html(source: str | bytes, source_name: str = "") -> DomTree:
    """Parse ``source`` into a :class:`DomTree`.  Never raises on bad markup."""
    if isinstance(source, (bytes, bytearray)):
        source = bytes(source).decode("utf-8", errors="replace")
    builder = _TreeBuilder()
    _tokenize_into(source, builder)
    return _freeze(builder.root, source_name)


def parse_file(path) -> DomTree:
    with open(path, "rb") as fh:
        data = fh.read()
    return parse_html(data, str(path))


def preorder(tree: DomTree) -> list[int]:
    """Visit ids parent-first, children left to right."""
    out = []
    stack = [tree.root]
    while stack:
        node = stack.pop()
        out.append(node.id)
        stack.extend(reversed(node.children))
    return out


def degree(node: DomNode) -> int:
    return len(node.children)


def iter_text(node: DomNode) -> Iterator[str]:
    """Raw text of descendant Text nodes in document order."""
    stack = [node]
    while stack:
        cur = stack.pop()
        if cur.is_text:
            yield cur.text
        else:
            stack.extend(reversed(cur.children))


def node_text(node: DomNode) -> str:
    """Whitespace-normalised text under ``node``.

    Text nodes are joined with a space so that word counts stay additive
    across element boundaries.
    """
    return " ".join(" ".join(iter_text(node)).split())


def dump_tree(tree: DomTree | DomNode) -> str:
    """Indented outline used by golden-file tests."""
    root = tree.root if isinstance(tree, DomTree) else tree
    lines = []
    stack = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        pad = "  " * depth
        if node.is_text:
            lines.append(f"{pad}#text {node.text!r}")
        else:
            attrs = "".join(f" {k}={v!r}" for k, v in node.attrs)
            lines.append(f"{pad}{node.tag}{attrs}")
        stack.extend((c, depth + 1) for c in reversed(node.children))
    return "\n".join(lines) + "\n"


def check_invariants(tree: DomTree) -> None:
    """Raise AssertionError if ``tree`` breaks a structural invariant."""
    ids = preorder(tree)
    assert ids == list(range(tree.node_count)), "ids are not pre-order"
    assert tree.root.id == 0 and tree.root.tag == ROOT_TAG
    seen_parent = [-1] * tree.node_count
    for node in tree.nodes:
        if node.is_text:
            assert not node.children, "text node with children"
        else:
            assert node.tag and node.tag == node.tag.lower(), "bad tag"
            if node.tag in VOID_ELEMENTS:
                assert not node.children, "void element with children"
        for child in node.children:
            assert seen_parent[child.id] == -1, "node with two parents"
            seen_parent[child.id] = node.id
    assert list(tree.parents) == seen_parent


def find_all(tree: DomTree, tag: str) -> list[DomNode]:
    return [n for n in tree.nodes if n.is_element and n.tag == tag]


def ids_of(nodes: Sequence[DomNode]) -> list[int]:
    return [n.id for n in nodes]
