import pytest
from hypothesis import given, strategies as st

from confpair.core import (
    BracketExpr,
    EoGraph,
    Forest,
    Graph,
    Tree,
    enumerate_long,
    enumerate_long_odd,
    enumerate_tall,
    node_leaves,
)
from confpair.pairing import beta, pair, pair_bracket, pair_even, pair_extended, pair_odd, pairing_matrix
from confpair.text import parse

from oracle import naive_pair
from strategies import any_graphs, diagrams_for, forests, spanning_graphs, trees


def identity(m):
    return all(m[i][j] == (i == j) for i in range(len(m)) for j in range(len(m)))


def test_beta_examples():
    assert beta(Graph(2, ((1, 2),)), Tree((1, 2))).bijective
    b = beta(parse("graph", "1->2, 1->3"), parse("tree", "[[1,2],3]"))
    assert b.bijective and b.assignment == ((0,), ())
    assert not beta(Graph(2, ((1, 2), (1, 2))), Tree((1, 2))).bijective


def test_even_examples():
    assert pair_even(Graph(2, ((1, 2),)), Tree((1, 2))) == 1
    assert pair_even(Graph(2, ((2, 1),)), Tree((1, 2))) == -1
    t = parse("tree", "[[2,3],[1,4]]")
    assert pair_even(parse("graph", "1->4, 4->3, 3->2"), t) == 1
    assert pair_even(parse("graph", "1->4, 4->2, 2->3"), t) == -1


def test_odd_examples():
    assert pair_odd(parse("eograph", "1-2, 2-3"), parse("tree", "[[1,2],3]")) == 1
    assert pair_odd(parse("eograph", "2-3, 1-2"), parse("tree", "[[1,2],3]")) == -1


def test_small_identity_matrices():
    assert identity(pairing_matrix(enumerate_long(3), enumerate_tall(3)))
    assert identity(pairing_matrix(enumerate_long_odd(4), enumerate_tall(4)))


@pytest.mark.parametrize("key", ["even-3", "even-4", "odd-3", "odd-4"])
def test_frozen_matrices(frozen, key):
    table = frozen["pairing"][key]
    kind = "eograph" if key.startswith("odd") else "graph"
    graphs = [parse(kind, s) for s in table["graphs"]]
    ts = [parse("tree", s) for s in table["trees"]]
    assert pairing_matrix(graphs, ts) == table["matrix"]


@given(st.data(), st.booleans())
def test_pair_matches_naive(data, odd):
    g = data.draw(spanning_graphs(2, 6, odd))
    t = data.draw(trees(g.n, g.n))
    assert pair(g, t) == naive_pair(g.edges, t.root, odd, g.n)


@given(st.data())
def test_orientation_flip_negates(data):
    g = data.draw(spanning_graphs(2, 6))
    t = data.draw(trees(g.n, g.n))
    k = data.draw(st.integers(0, len(g.edges) - 1))
    edges = list(g.edges)
    edges[k] = edges[k][::-1]
    assert pair(Graph(g.n, tuple(edges)), t) == -pair(g, t)


@given(st.data())
def test_edge_transposition_negates_odd(data):
    g = data.draw(spanning_graphs(3, 6, True))
    t = data.draw(trees(g.n, g.n))
    k = data.draw(st.integers(0, len(g.edges) - 2))
    edges = list(g.edges)
    edges[k], edges[k + 1] = edges[k + 1], edges[k]
    assert pair(EoGraph(g.n, tuple(edges)), t) == -pair(g, t)


@given(st.data(), st.booleans())
def test_wrong_edge_count_pairs_to_zero(data, odd):
    t = data.draw(trees(2, 5))
    g = data.draw(any_graphs(t.n, odd, 6))
    if len(g.edges) != t.n - 1:
        assert pair(g, t) == 0


def test_size_mismatch_is_an_error():
    with pytest.raises(ValueError):
        pair(Graph(3, ((1, 2), (2, 3))), Tree((1, 2)))


def test_extended_examples():
    d = parse("diagram", "1->2, 3->4")
    assert pair_extended(d, parse("forest", "[1,2] ; [3,4]")) == 1
    assert pair_extended(Graph(3, ((2, 3),)), parse("forest", "[1,2] ; 3")) == 0
    assert pair_extended(Graph(3, ()), Forest((1, 2, 3))) == 1


@given(st.data(), st.booleans())
def test_extended_is_product_over_blocks(data, odd):
    f = data.draw(forests(1, 5))
    d = data.draw(diagrams_for(f, odd))
    want = 1
    for node in f.trees:
        block = sorted(node_leaves(node))
        m = {x: i + 1 for i, x in enumerate(block)}
        edges = [(m[a], m[b]) for a, b in d.edges if a in m]
        want *= naive_pair(edges, _relabel(node, m), odd, len(block))
    if odd:
        # the block product is only defined up to the shuffle of edge order
        assert abs(pair_extended(d, f)) == abs(want)
    else:
        assert pair_extended(d, f) == want


def _relabel(node, m):
    if isinstance(node, int):
        return m[node]
    return (_relabel(node[0], m), _relabel(node[1], m))


def test_bracket_examples():
    b = parse("bracket", "([x1,x2]*x3)")
    assert pair_bracket(Graph(3, ((1, 2),)), b) == 1
    assert pair_bracket(Graph(3, ((2, 1),)), b) == -1
    assert pair_bracket(Graph(3, ((1, 3),)), b) == 0


@given(st.data(), st.booleans())
def test_pure_bracket_agrees_with_tree(data, odd):
    t = data.draw(trees(2, 5))
    g = data.draw(spanning_graphs(t.n, t.n, odd))
    assert pair_bracket(g, BracketExpr.from_tree(t)) == pair(g, t)


@given(st.data(), st.booleans())
def test_forest_bracket_agrees_with_extended(data, odd):
    f = data.draw(forests(1, 5))
    d = data.draw(diagrams_for(f, odd))
    assert pair_bracket(d, BracketExpr.from_forest(f)) == pair_extended(d, f)
