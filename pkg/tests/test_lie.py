import math
import random

import pytest
from hypothesis import given, strategies as st

from confpair.core import BracketExpr, Forest, Graph, Tree, enumerate_long, enumerate_tall
from confpair.lie import (
    TreeContext,
    arnold_terms,
    bracket_to_forest,
    expand_to_long,
    expand_to_tall,
    jacobi_terms,
    leibniz_normalize,
    rank_of_grade,
    reduce_rewrite,
    symmetry_terms,
)
from confpair.lincomb import LinComb
from confpair.pairing import pair, pair_bracket, pair_extended
from confpair.sampling import random_graph_relation, random_spanning, random_tree, random_tree_relation
from confpair.text import parse, parse_lincomb

from oracle import leibniz_even
from strategies import brackets, diagrams_for, spanning_graphs, trees


def test_jacobi_terms_trivial_context():
    assert jacobi_terms(TreeContext(), 1, 2, 3) == [(1, ((1, 2), 3)), (1, ((3, 1), 2)), (1, ((2, 3), 1))]
    assert [c for c, _ in jacobi_terms(TreeContext(), 1, 2, 3, odd=True)] == [-1, -1, -1]


def test_symmetry_terms_root():
    assert symmetry_terms((1, 2), (), False) == [(1, (1, 2)), (1, (2, 1))]
    assert symmetry_terms((1, 2), (), True) == [(1, (1, 2)), (-1, (2, 1))]


def test_arnold_terms_no_rest():
    got = {g: c for c, g in arnold_terms([], 1, 2, 3, 3)}
    assert got == {Graph(3, ((1, 2), (2, 3))): 1, Graph(3, ((2, 3), (3, 1))): 1,
                   Graph(3, ((3, 1), (1, 2))): 1}


def test_worked_expansion(frozen):
    got = expand_to_tall(parse("tree", "[[2,3],[1,4]]"))
    assert got == parse_lincomb("tree", "+1*[[[1,4],3],2] -1*[[[1,4],2],3]")
    for text, coeffs in frozen["tall_expansion"].items():
        want = LinComb((parse("tree", k), v) for k, v in coeffs.items())
        assert expand_to_tall(parse("tree", text)) == want


def test_expansion_examples():
    assert expand_to_tall(Tree((2, 1))) == LinComb.of(Tree((1, 2)), -1)
    lg = enumerate_long(3)
    assert expand_to_long(parse("graph", "1->2, 1->3")) == LinComb([(lg[0], 1), (lg[1], 1)])
    assert not expand_to_long(parse("graph", "1->2, 2->3, 3->1"))


@pytest.mark.parametrize("odd", [False, True])
def test_basis_is_fixed(odd):
    for t in enumerate_tall(4):
        assert expand_to_tall(t, odd) == LinComb.of(t)
        assert reduce_rewrite(t, odd) == LinComb.of(t)
    for g in enumerate_long(4):
        assert expand_to_long(g) == LinComb.of(g)
        assert reduce_rewrite(g) == LinComb.of(g)


@given(trees(1, 5), st.booleans())
def test_rewrite_matches_expansion_on_trees(t, odd):
    assert reduce_rewrite(t, odd) == expand_to_tall(t, odd)


@given(spanning_graphs(2, 5, False))
def test_rewrite_matches_expansion_on_graphs(g):
    assert reduce_rewrite(g) == expand_to_long(g)


@given(spanning_graphs(2, 5, True))
def test_rewrite_matches_expansion_on_eographs(g):
    assert reduce_rewrite(g) == expand_to_long(g)


@given(st.data(), st.booleans())
def test_expansion_preserves_pairings(data, odd):
    t = data.draw(trees(2, 5))
    g = data.draw(spanning_graphs(t.n, t.n, odd))
    assert expand_to_tall(t, odd).pair(lambda s: pair(g, s)) == pair(g, t)
    assert expand_to_long(g).pair(lambda h: pair(h, t)) == pair(g, t)


@pytest.mark.parametrize("odd", [False, True])
def test_relations_vanish(odd):
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 6)
        terms = random_tree_relation(n, odd, rng)
        g = random_spanning(n, rng, odd)
        assert sum(c * pair(g, t) for c, t in terms) == 0
        terms = random_graph_relation(n, odd, rng)
        t = random_tree(n, rng)
        assert sum(c * pair(h, t) for c, h in terms) == 0


def test_leibniz_examples():
    got = leibniz_normalize(parse("bracket", "[x1,(x2*x3)]"))
    assert got == parse_lincomb("forest", "+1*[1,3] ; 2 +1*[1,2] ; 3")
    assert leibniz_normalize(parse("bracket", "(x1*x2)")) == LinComb.of(parse("forest", "1 ; 2"))
    b = parse("bracket", "[[x1,x2],x3]")
    assert leibniz_normalize(b) == LinComb.of(Forest((((1, 2), 3),)))


def test_leibniz_frozen(frozen):
    for text, terms in frozen["leibniz_even"].items():
        want = LinComb((parse("forest", f), c) for f, c in terms)
        assert leibniz_normalize(parse("bracket", text)) == want


@given(brackets(1, 5))
def test_leibniz_matches_oracle(b):
    want = LinComb()
    for prod, c in leibniz_even(b.root).items():
        want.add(Forest(tuple(prod)), c)
    assert leibniz_normalize(b) == want


@given(st.data(), st.booleans())
def test_normalize_preserves_bracket_pairing(data, odd):
    b = data.draw(brackets(1, 5))
    forms = list(leibniz_normalize(b, odd))
    f = data.draw(st.sampled_from(forms)) if forms else Forest(tuple(range(1, b.n + 1)))
    d = data.draw(diagrams_for(f, odd))
    assert pair_bracket(d, b) == leibniz_normalize(b, odd).pair(lambda x: pair_extended(d, x))


def test_bracket_to_forest_on_forest_shape():
    assert bracket_to_forest(parse("bracket", "([x1,x3]*x2)")) == (parse("forest", "[1,3] ; 2"), 1)
    assert BracketExpr.from_forest(parse("forest", "[1,3] ; 2")).n == 3


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("odd", [False, True])
def test_lie_rank(n, odd):
    assert rank_of_grade(n, odd=odd) == math.factorial(n - 1)


def test_grade_examples():
    assert rank_of_grade(4) == 6
    assert rank_of_grade(3, 1, side="poisson") == 3
    assert all(rank_of_grade(n, 0, side="poisson") == 1 for n in range(1, 5))
