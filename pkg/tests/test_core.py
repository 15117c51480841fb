import math

import pytest
from hypothesis import given, strategies as st

from confpair.core import (
    Bracket,
    BracketExpr,
    EoGraph,
    Forest,
    Graph,
    LabelError,
    RpTree,
    Tree,
    canonicalize_eograph,
    canonicalize_graph,
    catalan,
    enumerate_forests,
    enumerate_long,
    enumerate_long_odd,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    enumerate_tall,
    enumerate_trees,
    perm_sign,
    rho,
    set_partitions,
)
from confpair.text import parse

from oracle import cycle_sign
from strategies import any_graphs, forests, trees


def test_tree_from_text():
    t = parse("tree", "[[2,1],3]")
    assert t.root == ((2, 1), 3)
    assert t.n == 3


def test_graph_from_text():
    g = parse("graph", "1->2, 1->3")
    assert g == Graph(3, ((1, 2), (1, 3)))


def test_duplicate_label_rejected():
    with pytest.raises(LabelError):
        Tree(((1, 2), 2))


def test_missing_label_rejected():
    with pytest.raises(LabelError):
        Tree((1, 3))


def test_canonical_graph_examples():
    assert canonicalize_graph(Graph(2, ((2, 1),))) == (Graph(2, ((1, 2),)), -1)
    assert canonicalize_graph(Graph(3, ((1, 2), (3, 2)))) == (Graph(3, ((1, 2), (2, 3))), -1)
    g = Graph(3, ((1, 2), (2, 3)))
    assert canonicalize_graph(g) == (g, 1)


def test_canonical_eograph_examples():
    assert canonicalize_eograph(EoGraph(3, ((2, 3), (1, 2)))) == (EoGraph(3, ((1, 2), (2, 3))), -1)
    g = EoGraph(3, ((1, 2), (2, 3)))
    assert canonicalize_eograph(g) == (g, 1)
    tri = EoGraph(3, ((1, 3), (1, 2), (2, 3)))
    assert canonicalize_eograph(tri) == (EoGraph(3, ((1, 2), (1, 3), (2, 3))), -1)


@given(any_graphs(5, False, 6))
def test_canonical_graph_idempotent(g):
    c, s = canonicalize_graph(g)
    assert s in (1, -1)
    assert canonicalize_graph(c) == (c, 1)
    assert sorted(map(sorted, g.edges)) == sorted(map(list, c.edges))


@given(any_graphs(5, True, 6))
def test_canonical_eograph_sign_is_sort_parity(g):
    c, s = canonicalize_eograph(g)
    assert list(c.edges) == sorted(g.edges)
    if len(set(g.edges)) == len(g.edges):
        assert s == cycle_sign(g.edges)


def test_rho_examples():
    assert rho(parse("forest", "[1,2] ; 3")) == ((1, 2), (3,))
    assert rho(parse("graph", "1->2, 3->4")) == ((1, 2), (3, 4))
    assert rho(Graph(2, ())) == ((1,), (2,))


@given(forests())
def test_rho_is_partition(f):
    blocks = rho(f)
    assert sorted(x for b in blocks for x in b) == list(range(1, f.n + 1))
    assert f.internal_count == f.n - len(blocks)


@pytest.mark.parametrize("n", range(1, 6))
def test_tree_count(n):
    ts = enumerate_trees(n)
    assert len(ts) == len(set(ts)) == math.factorial(2 * n - 2) // math.factorial(n - 1)


def test_tall_and_long_small():
    assert [str(t) for t in enumerate_tall(3)] == ["[[1,2],3]", "[[1,3],2]"]
    assert [str(g) for g in enumerate_long(3)] == ["1->2, 2->3", "1->3, 3->2"]


@pytest.mark.parametrize("n", range(2, 6))
def test_basis_counts(n):
    assert len(enumerate_tall(n)) == len(enumerate_long(n)) == len(enumerate_long_odd(n)) == math.factorial(n - 1)
    for t in enumerate_tall(n):
        node = t.root
        while not isinstance(node, int):
            assert isinstance(node[1], int)
            node = node[0]
        assert node == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_spanning_counts(n):
    assert len(set(enumerate_spanning_graphs(n))) == n ** (n - 2)
    assert len(set(enumerate_spanning_eographs(n))) == n ** (n - 2)
    assert all(g.is_connected for g in enumerate_spanning_graphs(n))


@pytest.mark.parametrize("n", range(1, 5))
def test_forest_count(n):
    want = sum(math.prod(math.factorial(len(b)) * catalan(len(b) - 1) for b in p)
               for p in set_partitions(range(1, n + 1)))
    fs = enumerate_forests(n)
    assert len(fs) == len(set(fs)) == want
    for k in range(n):
        assert all(f.internal_count == k for f in enumerate_forests(n, k))


def test_forest_is_unordered():
    assert parse("forest", "3 ; [1,2]") == parse("forest", "[1,2] ; 3")


@given(st.permutations(range(6)))
def test_perm_sign_matches_cycles(p):
    assert perm_sign(p) == cycle_sign(p)


@given(trees(2, 6))
def test_swap_is_involution(t):
    for v in t.internal_vertices():
        assert t.swap(v).swap(v) == t


def test_rptree_basics():
    tau = parse("rptree", "(l (l l))")
    assert tau.n == 3
    assert tau.vertices() == [(), (1,)]
    assert tau.arity(()) == 2 and tau.arity((1,)) == 2
    assert str(RpTree.corolla(3)) == "(l l l)"


def test_eograph_rejects_loops():
    with pytest.raises(ValueError):
        EoGraph(2, ((1, 1),))


def test_forest_trees_are_disjoint():
    with pytest.raises(ValueError):
        Forest(((1, 2), (2, 3)))


def test_bracket_expr_checks():
    with pytest.raises(LabelError):
        BracketExpr(Bracket(Bracket(1, 2), 2))
    with pytest.raises(TypeError):
        BracketExpr(((1, 2), 3))
