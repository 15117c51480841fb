import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from confpair.core import Graph, Tree
from confpair.functionals import (
    LabeledGraphWord,
    LabeledTreeWord,
    VectorSpaceCtx,
    cobracket,
    functional_pair,
    multilinear_rank,
    swap,
    verify_welldefined,
)
from confpair.lincomb import LinComb
from confpair.pairing import pair

from strategies import spanning_graphs, trees

V2 = VectorSpaceCtx(2)
A, B = V2.named("a"), V2.named("b")
EDGE = Graph(2, ((1, 2),))


def test_pair_examples():
    tw = LabeledTreeWord(Tree((1, 2)), (A, B))
    assert functional_pair(LabeledGraphWord(EDGE, (A, B)), tw) == 1
    assert functional_pair(LabeledGraphWord(EDGE, (A, A)), tw) == 0
    assert functional_pair(LabeledGraphWord(EDGE, (A, B)), LabeledTreeWord(Tree((1, 2)), (B, A))) == -1


def test_distinct_basis_labels_reduce_to_plain_pairing():
    ctx = VectorSpaceCtx(4)
    duals = tuple(ctx.dual(i) for i in range(4))
    rng = random.Random(3)
    for _ in range(30):
        t = Tree(((2, 3), (1, 4)))
        perm = rng.sample(range(4), 4)
        tw = LabeledTreeWord(t, tuple(ctx.basis(p) for p in perm))
        for g in (Graph(4, ((1, 4), (4, 3), (3, 2))), Graph(4, ((1, 2), (1, 3), (1, 4)))):
            # vector basis(p) at leaf i meets covector perm[i] at vertex perm(i)+1
            m = {i + 1: p + 1 for i, p in enumerate(perm)}
            renamed = Tree(((m[2], m[3]), (m[1], m[4])))
            assert functional_pair(LabeledGraphWord(g, duals), tw) == pair(g, renamed)


@given(st.data(), st.booleans())
def test_simultaneous_relabeling_is_invisible(data, odd):
    t = data.draw(trees(2, 4))
    g = data.draw(spanning_graphs(t.n, t.n, odd))
    n = t.n
    ctx = VectorSpaceCtx(2)
    pick = st.lists(st.integers(0, 1), min_size=n, max_size=n)
    vs = tuple(ctx.basis(i) for i in data.draw(pick))
    ws = tuple(ctx.dual(i) for i in data.draw(pick))
    gw, tw = LabeledGraphWord(g, ws), LabeledTreeWord(t, vs)
    sigma = data.draw(st.permutations(range(1, n + 1)))
    base = functional_pair(gw, tw)
    assert functional_pair(gw.relabel(sigma), tw.relabel(sigma)) == base


def test_pair_is_bilinear():
    tw = LabeledTreeWord(Tree((1, 2)), (A, B))
    gw1, gw2 = LabeledGraphWord(EDGE, (A, B)), LabeledGraphWord(EDGE, (B, A))
    x = LinComb([(gw1, 2), (gw2, 3)])
    assert functional_pair(x, tw) == 2 * functional_pair(gw1, tw) + 3 * functional_pair(gw2, tw)


def test_cobracket_single_edge():
    gw = LabeledGraphWord(EDGE, (A, B))
    ga, gb = LabeledGraphWord(Graph(1, ()), (A,)), LabeledGraphWord(Graph(1, ()), (B,))
    assert cobracket(gw) == LinComb([((ga, gb), 1), ((gb, ga), -1)])
    assert not cobracket(LabeledGraphWord(Graph(1, ()), (A,)))


@given(spanning_graphs(2, 5), st.booleans())
def test_cobracket_co_antisymmetric(g, odd):
    from confpair.core import EoGraph
    if odd:
        g = EoGraph(g.n, tuple(tuple(sorted(e)) for e in g.edges))
    ctx = VectorSpaceCtx(3)
    gw = LabeledGraphWord(g, tuple(ctx.basis(i % 3) for i in range(g.n)))
    c = cobracket(gw)
    assert swap(c) == -c


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("odd", [False, True])
def test_multilinear_rank(n, odd):
    assert multilinear_rank(n, odd) == math.factorial(n - 1)


@pytest.mark.parametrize("odd", [False, True])
@pytest.mark.parametrize("n,d", list(itertools.product([2, 3, 4], [1, 2, 3])))
def test_well_defined(n, d, odd):
    rep = verify_welldefined(n, d, odd, samples=15, seed=n * 10 + d, report=True)
    assert rep.ok, rep.failures[:3]


def test_well_defined_examples():
    assert verify_welldefined(3, 3)
    rep = verify_welldefined(2, 1, report=True)
    assert rep.ok and rep.multilinear_rank == 1


def test_dimension_checks():
    with pytest.raises(ValueError):
        VectorSpaceCtx(0)
    with pytest.raises(ValueError):
        LabeledTreeWord(Tree((1, 2)), (A,))
