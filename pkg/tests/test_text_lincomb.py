from fractions import Fraction

import pytest
from hypothesis import given

from confpair.core import Graph, Tree
from confpair.lincomb import LinComb, tensor
from confpair.text import ParseError, parse, parse_lincomb

from strategies import any_graphs, brackets, forests, rptrees, spanning_graphs, trees


@given(trees())
def test_tree_round_trip(t):
    assert parse("tree", str(t)) == t


@given(forests())
def test_forest_round_trip(f):
    assert parse("forest", str(f)) == f


@given(any_graphs(4, False))
def test_diagram_round_trip(g):
    assert parse("diagram", str(g)) == g


@given(any_graphs(4, True))
def test_odd_diagram_round_trip(g):
    assert parse("odd-diagram", str(g)) == g


@given(spanning_graphs(2, 5, odd=True))
def test_eograph_round_trip(g):
    assert parse("eograph", str(g)) == g


@given(brackets())
def test_bracket_round_trip(b):
    assert parse("bracket", str(b)) == b


@given(rptrees())
def test_rptree_round_trip(tau):
    assert parse("rptree", str(tau)) == tau


def test_empty_diagram_with_size():
    assert parse("diagram", "n=2:") == Graph(2, ())


@pytest.mark.parametrize("kind,text", [
    ("tree", "[1,2"), ("tree", "[1,,2]"), ("graph", "1->"), ("bracket", "[x1,x2"),
    ("rptree", "(l"), ("tree", "[1,2] junk"),
])
def test_parse_errors(kind, text):
    with pytest.raises(ParseError):
        parse(kind, text)


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse("tree", "[1,2]]")
    assert exc.value.pos == 5


def test_lincomb_arithmetic():
    a, b = Tree((1, 2)), Tree((2, 1))
    x = LinComb([(a, 1), (b, Fraction(1, 2))])
    assert (x - x) == LinComb()
    assert not (x - x)
    assert (x + x).coeff(b) == 1
    assert x.scale(2) == x + x
    assert str(LinComb()) == "0"


def test_lincomb_text_round_trip():
    x = parse_lincomb("tree", "+1*[[1,2],3] -1/2*[[1,3],2]")
    assert x.coeff(Tree(((1, 3), 2))) == Fraction(-1, 2)
    assert parse_lincomb("tree", str(x)) == x


def test_lincomb_print_order_is_sorted():
    x = LinComb([(Tree(((1, 3), 2)), -1), (Tree(((1, 2), 3)), 1)])
    assert str(x) == "+1*[[1,2],3] -1*[[1,3],2]"


def test_tensor_text_round_trip():
    f1, f2 = parse("forest", "1 ; 2"), parse("forest", "[1,2]")
    x = tensor(LinComb.of(f1), LinComb.of(f2, -3))
    assert parse_lincomb(("forest", "forest"), str(x)) == x
