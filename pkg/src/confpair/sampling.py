"""Random generators and random relation instances, driven by a ``random.Random``."""
from __future__ import annotations

import random
from fractions import Fraction

from .core import (
    LEAF,
    Bracket,
    BracketExpr,
    Dot,
    EoGraph,
    Forest,
    Graph,
    RpTree,
    Tree,
    inorder_vertices,
    node_leaves,
)
from .lie import TreeContext, arnold_terms, graph_symmetry_terms, jacobi_terms, symmetry_terms
from .lincomb import LinComb


def tree_node(labels, rng: random.Random):
    labels = list(labels)
    if len(labels) == 1:
        return labels[0]
    rng.shuffle(labels)
    k = rng.randint(1, len(labels) - 1)
    return (tree_node(labels[:k], rng), tree_node(labels[k:], rng))


def random_tree(n: int, rng) -> Tree:
    return Tree(tree_node(range(1, n + 1), rng))


def split(labels, parts: int, rng) -> list[list[int]]:
    """Random ordered split into ``parts`` nonempty pieces."""
    labels = list(labels)
    rng.shuffle(labels)
    cuts = sorted(rng.sample(range(1, len(labels)), parts - 1))
    return [labels[a:b] for a, b in zip([0] + cuts, cuts + [len(labels)])]


def random_forest(n: int, rng, parts: int | None = None) -> Forest:
    """Random forest with ``parts`` components (random if omitted)."""
    if parts is None:
        parts = rng.randint(1, n)
    return Forest(tuple(tree_node(p, rng) for p in split(range(1, n + 1), parts, rng)))


def bracket_node(labels, rng, dot_rate: float = 0.3):
    labels = list(labels)
    if len(labels) == 1:
        return labels[0]
    rng.shuffle(labels)
    k = rng.randint(1, len(labels) - 1)
    cls = Dot if rng.random() < dot_rate else Bracket
    return cls(bracket_node(labels[:k], rng, dot_rate), bracket_node(labels[k:], rng, dot_rate))


def random_bracket(n: int, rng, dot_rate: float = 0.3) -> BracketExpr:
    return BracketExpr(bracket_node(range(1, n + 1), rng, dot_rate))


def spanning_edges(labels, rng) -> list[tuple[int, int]]:
    """Edges of a random spanning tree on ``labels``, random orientations."""
    labels = list(labels)
    rng.shuffle(labels)
    out = []
    for k in range(1, len(labels)):
        e = (labels[k], rng.choice(labels[:k]))
        out.append(e if rng.random() < 0.5 else e[::-1])
    return out


def as_diagram(n: int, edges, odd: bool):
    if odd:
        return EoGraph(n, tuple(tuple(sorted(e)) for e in edges))
    return Graph(n, tuple(edges))


def random_spanning(n: int, rng, odd: bool = False):
    """A random connected graph with n-1 edges, edge order shuffled."""
    edges = spanning_edges(range(1, n + 1), rng)
    rng.shuffle(edges)
    return as_diagram(n, edges, odd)


def random_graph(n: int, rng, odd: bool = False, edges: int | None = None):
    """Arbitrary edges, not necessarily connected; parallel edges allowed."""
    if n < 2:
        return as_diagram(n, [], odd)
    if edges is None:
        edges = rng.randint(0, n)
    es = [tuple(rng.sample(range(1, n + 1), 2)) for _ in range(edges)]
    return as_diagram(n, es, odd)


def diagram_for(f: Forest, rng, odd: bool = False):
    """Random diagram with the same blocks as ``f``: one spanning tree per block."""
    edges = []
    for t in f.trees:
        edges.extend(spanning_edges(node_leaves(t), rng))
    rng.shuffle(edges)
    return as_diagram(f.n, edges, odd)


def random_diagram(n: int, rng, odd: bool = False):
    return diagram_for(random_forest(n, rng), rng, odd)


def split_diagram(d, rng):
    """Random split of the edges into two diagrams (order kept in each)."""
    pick = [rng.random() < 0.5 for _ in d.edges]
    a = tuple(e for e, p in zip(d.edges, pick) if p)
    b = tuple(e for e, p in zip(d.edges, pick) if not p)
    cls = type(d)
    return cls(d.n, a), cls(d.n, b)


def random_rptree(rng, vertices: int, max_n: int | None = None, max_arity: int = 3,
                  unary: bool = True) -> RpTree:
    """Grow an rp-tree by replacing random leaves with corollas."""
    low = 1 if unary else 2
    while True:
        root = (LEAF,) * rng.randint(low, max_arity)
        for _ in range(vertices - 1):
            leaves = []

            def walk(node, addr):
                for k, c in enumerate(node):
                    if c is LEAF:
                        leaves.append(addr + (k,))
                    else:
                        walk(c, addr + (k,))

            walk(root, ())
            root = _put(root, rng.choice(leaves), (LEAF,) * rng.randint(low, max_arity))
        tau = RpTree(root)
        if max_n is None or tau.n <= max_n:
            return tau


def _put(node, addr, new):
    if not addr:
        return new
    kids = list(node)
    kids[addr[0]] = _put(node[addr[0]], addr[1:], new)
    return tuple(kids)


def random_factors(tau: RpTree, rng, bracket: bool = False, dot_rate: float = 0.3) -> list:
    out = []
    for v in tau.vertices():
        a = tau.arity(v)
        out.append(random_bracket(a, rng, dot_rate) if bracket else random_tree(a, rng))
    return out


# ---------------------------------------------------------------------------
# relations

def random_tree_relation(n: int, odd: bool, rng) -> list[tuple[int, Tree]]:
    """Raw terms of a Jacobi combination (n >= 3, inside a random context)
    or of an antisymmetry combination."""
    if n >= 3 and rng.random() < 0.6:
        m = rng.randint(3, n)
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
        inner, outer = labels[:m], labels[m:]
        a, b, c = (tree_node(p, rng) for p in split(inner, 3, rng))
        site = n + 1
        ctx = TreeContext(tree_node(outer + [site], rng), site) if outer else TreeContext()
        return [(s, Tree(t)) for s, t in jacobi_terms(ctx, a, b, c, odd)]
    t = tree_node(range(1, n + 1), rng)
    v = rng.choice(inorder_vertices(t))
    return [(s, Tree(x)) for s, x in symmetry_terms(t, v, odd)]


def random_graph_relation(n: int, odd: bool, rng) -> list[tuple[int, object]]:
    """Raw terms of an Arnold combination (n >= 3) whose terms are spanning, or
    of an orientation flip / edge reordering combination."""
    if n >= 3 and rng.random() < 0.6:
        i, j, k = rng.sample(range(1, n + 1), 3)
        # spanning forest on the other labels with i standing for {i, j, k}
        labels = [x for x in range(1, n + 1) if x not in (j, k)]
        rng.shuffle(labels)
        rest = []
        for p in range(1, len(labels)):
            a, b = labels[p], rng.choice(labels[:p])
            a = rng.choice((i, j, k)) if a == i else a
            b = rng.choice((i, j, k)) if b == i else b
            rest.append((a, b) if rng.random() < 0.5 else (b, a))
        if odd:
            rest = [tuple(sorted(e)) for e in rest]
        pos = rng.randint(0, len(rest)) if odd else None
        return arnold_terms(rest, i, j, k, n, odd, pos)
    g = random_spanning(n, rng, odd)
    if odd:
        perm = list(range(len(g.edges)))
        rng.shuffle(perm)
        return graph_symmetry_terms(g, perm)
    return graph_symmetry_terms(g, rng.randrange(len(g.edges)))


def random_lincomb(gens, rng, terms: int = 4, spread: int = 3) -> LinComb:
    """Random combination of generators drawn by ``gens(rng)``."""
    out = LinComb()
    for _ in range(terms):
        c = Fraction(rng.choice([x for x in range(-spread, spread + 1) if x]), rng.randint(1, 3))
        out.add(gens(rng), c)
    return out


__all__ = [
    "as_diagram",
    "bracket_node",
    "diagram_for",
    "random_bracket",
    "random_diagram",
    "random_factors",
    "random_forest",
    "random_graph",
    "random_graph_relation",
    "random_lincomb",
    "random_rptree",
    "random_spanning",
    "random_tree",
    "random_tree_relation",
    "spanning_edges",
    "split",
    "split_diagram",
    "tree_node",
]
