"""Text grammar for every generator kind, and for linear combinations of them.

    tree     T := INT | "[" T "," T "]"
    forest   T (";" T)*
    graph    ["n=" INT ":"] INT "->" INT ("," INT "->" INT)*
    eograph  ["n=" INT ":"] INT "-" INT ("," INT "-" INT)*     (listing order = edge order)
    bracket  B := "x" INT | "[" B "," B "]" | "(" B "*" B ")"
    rptree   R := "l" | "(" R* ")"
    lincomb  SIGN RATIONAL "*" GEN (SIGN RATIONAL "*" GEN)*   or "0"

Whitespace is ignored everywhere.  Tensor generators join factors with "⊗".
"""
from __future__ import annotations

import re
from fractions import Fraction

from .core import (
    Bracket,
    BracketExpr,
    Dot,
    EoGraph,
    Forest,
    Graph,
    LEAF,
    LabelError,
    RpTree,
    Tree,
    check_labels,
    node_leaves,
)
from .lincomb import LinComb, TENSOR


class ParseError(ValueError):
    def __init__(self, msg: str, text: str = "", pos: int = 0):
        super().__init__(f"{msg} at position {pos} in {text!r}" if text else msg)
        self.pos = pos


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def accept(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str):
        if not self.accept(s):
            self.fail(f"expected {s!r}")

    def int(self) -> int:
        self.skip()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            self.fail("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def at_end(self) -> bool:
        self.skip()
        return self.pos >= len(self.text)

    def done(self):
        if not self.at_end():
            self.fail("unexpected trailing text")

    def fail(self, msg):
        raise ParseError(msg, self.text, self.pos)


def _tree_node(s: _Scanner):
    if s.accept("["):
        a = _tree_node(s)
        s.expect(",")
        b = _tree_node(s)
        s.expect("]")
        return (a, b)
    return s.int()


def _bracket_node(s: _Scanner):
    if s.accept("["):
        a = _bracket_node(s)
        s.expect(",")
        b = _bracket_node(s)
        s.expect("]")
        return Bracket(a, b)
    if s.accept("("):
        a = _bracket_node(s)
        s.expect("*")
        b = _bracket_node(s)
        s.expect(")")
        return Dot(a, b)
    s.expect("x")
    return s.int()


def _rp_node(s: _Scanner):
    if s.accept("l"):
        return LEAF
    s.expect("(")
    kids = []
    while not s.accept(")"):
        if s.at_end():
            s.fail("unclosed '('")
        kids.append(_rp_node(s))
    return tuple(kids)


def _edges(s: _Scanner, arrow: str):
    n = None
    if s.accept("n="):
        n = s.int()
        s.accept(":") or s.accept(",")
    edges = []
    if not s.at_end():
        while True:
            start = s.pos
            i = s.int()
            if arrow == "-" and s.peek("->"):
                s.fail("oriented edge in an eograph")
            s.expect(arrow)
            j = s.int()
            if i == j:
                raise ParseError(f"loop at vertex {i}", s.text, start)
            edges.append((i, j))
            if not s.accept(","):
                break
    return n, edges


def _wrap(fn):
    def run(s: _Scanner):
        try:
            return fn(s)
        except LabelError as exc:
            raise ParseError(str(exc), s.text, s.pos) from exc
    return run


@_wrap
def _tree(s):
    return Tree(_tree_node(s))


@_wrap
def _forest(s):
    trees = [_tree_node(s)]
    while s.accept(";"):
        trees.append(_tree_node(s))
    return Forest(tuple(trees))


@_wrap
def _graph(s):
    n, edges = _edges(s, "->")
    return Graph.from_edges(edges, n)


@_wrap
def _eograph(s):
    n, edges = _edges(s, "-")
    return EoGraph.from_edges(edges, n)


@_wrap
def _bracket(s):
    return BracketExpr(_bracket_node(s))


@_wrap
def _rptree(s):
    return RpTree(_rp_node(s))


_KINDS = {
    "tree": _tree,
    "forest": _forest,
    "graph": _graph,
    "diagram": _graph,
    "eograph": _eograph,
    "odd-diagram": _eograph,
    "bracket": _bracket,
    "rptree": _rptree,
}


def parse(kind: str, text: str):
    """Parse one generator of the given kind."""
    if kind not in _KINDS:
        raise ValueError(f"unknown generator kind {kind!r}")
    s = _Scanner(text)
    val = _KINDS[kind](s)
    s.done()
    return val


def _parse_gen(kind, text: str, offset: int, full: str):
    try:
        if isinstance(kind, tuple):
            parts = text.split(TENSOR.strip())
            if len(parts) != len(kind):
                raise ParseError(f"expected {len(kind)} tensor factors", full, offset)
            return tuple(parse(k, p) for k, p in zip(kind, parts))
        return parse(kind, text)
    except ParseError as exc:
        raise ParseError(str(exc).split(" at position")[0], full, offset + exc.pos) from exc


_TERM = re.compile(r"([+-])\s*(\d+(?:/\d+)?)\s*\*")


def parse_lincomb(kind, text: str) -> LinComb:
    """Parse ``+c*GEN -c*GEN ...``; ``kind`` may be a tuple for tensors."""
    if text.strip() == "0":
        return LinComb()
    starts = list(_TERM.finditer(text))
    if not starts or text[: starts[0].start()].strip():
        raise ParseError("expected a signed coefficient", text, 0)
    out = LinComb()
    for m, nxt in zip(starts, starts[1:] + [None]):
        end = nxt.start() if nxt else len(text)
        sign = -1 if m.group(1) == "-" else 1
        out.add(_parse_gen(kind, text[m.end():end], m.end(), text), sign * Fraction(m.group(2)))
    return out


def format_gen(gen) -> str:
    from .lincomb import gen_str
    return gen_str(gen)


__all__ = ["ParseError", "parse", "parse_lincomb", "format_gen", "check_labels", "node_leaves"]
