"""Relations, normal forms and ranks for Lie(n), Eil(n), Pois(n), Siop(n) and odd variants.

Normal forms come from expansion in the dual bases::

    alpha = sum_s <lG_s, alpha> tT_s        beta = sum_s <beta, tT_s> lG_s

``reduce_rewrite`` computes the same normal forms from the relations alone
(Jacobi/antisymmetry steps for trees, Arnold/orientation steps for graphs)
and serves as an independent check on the expansion.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    BracketExpr,
    Dot,
    EoGraph,
    Forest,
    Graph,
    Tree,
    enumerate_long,
    enumerate_long_odd,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    enumerate_tall,
    enumerate_trees,
    leaf_paths,
    node_leaves,
    perm_sign,
    replace_at,
    set_partitions,
    subtree_at,
    tree_nodes_on,
)
from .lincomb import LinComb, lincomb
from .linalg import rank
from .pairing import pair, pair_extended


class RewriteBoundExceeded(RuntimeError):
    """The rewrite oracle ran past its step bound; this signals a defect."""


def _node(x):
    return x.root if isinstance(x, Tree) else x


def _size(node) -> int:
    return len(node_leaves(node))


# ---------------------------------------------------------------------------
# tree relations

@dataclass(frozen=True)
class TreeContext:
    """Ambient tree with one distinguished leaf (label ``site``) where a
    subtree is fused in.  The trivial context is the bare site leaf."""

    root: object = 0
    site: int = 0

    def __post_init__(self):
        if node_leaves(self.root).count(self.site) != 1:
            raise ValueError(f"context must contain the site leaf {self.site} exactly once")

    def fuse(self, sub):
        return replace_at(self.root, leaf_paths(self.root)[self.site], sub)

    def labels(self) -> set[int]:
        return set(node_leaves(self.root)) - {self.site}


def jacobi_terms(ctx: TreeContext, A, B, C, odd: bool = False) -> list[tuple[int, object]]:
    """The three (coefficient, tree node) terms of a Jacobi combination.

    Term shapes are [[A,B],C], [[C,A],B], [[B,C],A]; in the odd case the term
    [[X,Y],Z] carries (-1)^(|X||Z|).
    """
    A, B, C = _node(A), _node(B), _node(C)
    seen = ctx.labels()
    for part in (A, B, C):
        labs = set(node_leaves(part))
        if labs & seen:
            raise ValueError(f"labels {sorted(labs & seen)} occur twice")
        seen |= labs
    out = []
    for x, y, z in ((A, B, C), (C, A, B), (B, C, A)):
        c = (-1) ** (_size(x) * _size(z)) if odd else 1
        out.append((c, ctx.fuse(((x, y), z))))
    return out


def jacobi_combination(ctx: TreeContext, A, B, C, odd: bool = False) -> LinComb:
    return LinComb((Tree(t), c) for c, t in jacobi_terms(ctx, A, B, C, odd))


def symmetry_terms(t, v, odd: bool = False) -> list[tuple[int, object]]:
    """t + c * (t with the branches at vertex v swapped); c = 1 even, (-1)^(|A||B|) odd."""
    root = _node(t)
    sub = subtree_at(root, v)
    if isinstance(sub, int):
        raise ValueError(f"{tuple(v)} is a leaf, not an internal vertex")
    c = (-1) ** (_size(sub[0]) * _size(sub[1])) if odd else 1
    return [(1, root), (c, replace_at(root, v, (sub[1], sub[0])))]


def symmetry_combination(t: Tree, v, odd: bool = False) -> LinComb:
    return LinComb((Tree(x), c) for c, x in symmetry_terms(t, v, odd))


def forest_terms(terms, others) -> list[tuple[int, Forest]]:
    """Embed a relation among trees as one component of a forest."""
    return [(c, Forest((t,) + tuple(_node(o) for o in others))) for c, t in terms]


# ---------------------------------------------------------------------------
# graph relations

def arnold_terms(rest, i: int, j: int, k: int, n: int | None = None, odd: bool = False,
                 position: int | None = None) -> list[tuple[int, object]]:
    """Three graphs {i->j, j->k}, {j->k, k->i}, {k->i, i->j} added to ``rest``.

    Odd: the pair (I, II) = ({i,j},{j,k}), ({j,k},{k,i}), ({k,i},{i,j}) is
    inserted consecutively at ``position`` (default: after ``rest``).
    """
    if len({i, j, k}) != 3:
        raise ValueError("Arnold labels must be distinct")
    rest = list(rest)
    if n is None:
        n = max([i, j, k] + [max(e) for e in rest])
    pairs = (((i, j), (j, k)), ((j, k), (k, i)), ((k, i), (i, j)))
    cls = EoGraph if odd else Graph
    pos = len(rest) if position is None else position
    return [(1, cls(n, tuple(rest[:pos]) + p + tuple(rest[pos:]))) for p in pairs]


def arnold_combination(rest, i, j, k, n=None, odd=False, position=None) -> LinComb:
    return LinComb((g, c) for c, g in arnold_terms(rest, i, j, k, n, odd, position))


def graph_symmetry_terms(g: Graph | EoGraph, arg) -> list[tuple[int, object]]:
    """Orientation flip of edge ``arg`` (even) or edge reordering by the
    permutation ``arg`` (odd; new edge p is old edge arg[p]).

    The odd combination is g - sign(arg) * arg(g), the form that is killed by
    the pairing and by odd canonicalization.
    """
    if isinstance(g, EoGraph):
        perm = list(arg)
        if sorted(perm) != list(range(len(g.edges))):
            raise ValueError("not a permutation of the edge positions")
        h = EoGraph(g.n, tuple(g.edges[p] for p in perm))
        return [(1, g), (-perm_sign(perm), h)]
    edges = list(g.edges)
    a, b = edges[arg]
    edges[arg] = (b, a)
    return [(1, g), (1, Graph(g.n, tuple(edges)))]


def parallel_edge_graph(rest, i: int, j: int, n=None, odd=False):
    """A graph with two edges on the same vertex pair (zero in the quotient)."""
    rest = list(rest) + [(i, j), (i, j)]
    if n is None:
        n = max(max(e) for e in rest)
    return (EoGraph if odd else Graph)(n, tuple(rest))


# ---------------------------------------------------------------------------
# expansion normal forms

def _uniform_n(x: LinComb) -> int | None:
    ns = {g.n for g in x}
    if len(ns) > 1:
        raise ValueError(f"mixed sizes {sorted(ns)}")
    return ns.pop() if ns else None


def expand_to_tall(a, odd: bool = False) -> LinComb:
    """Normal form in Lie(n) (or the odd Lie module) on the tall basis."""
    a = lincomb(a)
    n = _uniform_n(a)
    out = LinComb()
    if n is None:
        return out
    longs = enumerate_long_odd(n) if odd else enumerate_long(n)
    for g, t in zip(longs, enumerate_tall(n)):
        c = a.pair(lambda x: pair(g, x))
        if c:
            out.add(t, c)
    return out


def expand_to_long(b) -> LinComb:
    """Normal form in Eil(n) (EoGraph input: the odd variant) on the long basis."""
    b = lincomb(b)
    n = _uniform_n(b)
    out = LinComb()
    if n is None:
        return out
    odd = isinstance(next(iter(b)), EoGraph)
    longs = enumerate_long_odd(n) if odd else enumerate_long(n)
    for t, g in zip(enumerate_tall(n), longs):
        c = b.pair(lambda x: pair(x, t))
        if c:
            out.add(g, c)
    return out


# ---------------------------------------------------------------------------
# rewrite oracle

def _solve(relation, target) -> LinComb:
    """Express ``target`` via a relation sum(c * g) = 0 that contains it."""
    rel = relation if isinstance(relation, LinComb) else LinComb((g, c) for c, g in relation)
    c = rel.coeff(target)
    if not c:
        raise AssertionError("relation does not involve the target")
    return (rel - LinComb.of(target, c)).scale(Fraction(-1) / c)


def _tree_step(t: Tree, odd: bool):
    root = t.root
    path = leaf_paths(root)[1]
    for d, step in enumerate(path):
        if step == 1:
            return _solve([(c, Tree(x)) for c, x in symmetry_terms(root, path[:d], odd)], t)
    if len(path) == t.n - 1:
        return None
    for d in range(len(path)):
        addr = (0,) * d
        x, yz = subtree_at(root, addr)
        if not isinstance(yz, int):
            y, z = yz
            # [X,[Y,Z]] -> [[Y,Z],X] by antisymmetry, then Jacobi on (Y, Z, X)
            flipped = _solve([(c, Tree(s)) for c, s in symmetry_terms(root, addr, odd)], t)
            ((u, s),) = flipped.items()
            ctx = TreeContext(replace_at(root, addr, 0), 0)
            jac = [(c, Tree(w)) for c, w in jacobi_terms(ctx, y, z, x, odd)]
            return _solve(jac, u).scale(s)
    raise AssertionError("unreachable: leaf 1 leftmost but not tall")


def _find_cycle(n: int, edges):
    """A simple cycle as a vertex list; a parallel pair gives length 2."""
    seen_pairs = set()
    for e in edges:
        key = (min(e), max(e))
        if key in seen_pairs:
            return list(key)
        seen_pairs.add(key)
    for skip, (a, b) in enumerate(edges):
        # path from a to b avoiding this edge closes a cycle
        adj: dict[int, list[int]] = {}
        for p, (i, j) in enumerate(edges):
            if p != skip:
                adj.setdefault(i, []).append(j)
                adj.setdefault(j, []).append(i)
        prev = {a: None}
        queue = [a]
        for v in queue:
            for w in sorted(adj.get(v, ())):
                if w not in prev:
                    prev[w] = v
                    queue.append(w)
        if b in prev:
            path = [b]
            while path[-1] != a:
                path.append(prev[path[-1]])
            return path
    return None


def _graph_step(g, odd: bool):
    n, edges = g.n, g.edges
    cyc = _find_cycle(n, edges)
    if cyc is not None:
        if len(cyc) == 2:
            return LinComb()
        i, j, k = cyc[0], cyc[1], cyc[2]
        return _arnold_rewrite(g, i, j, k, odd)
    prev, cur = None, 1
    while True:
        nbrs = sorted({b if a == cur else a for a, b in edges if cur in (a, b)} - {prev})
        if len(nbrs) >= 2:
            return _arnold_rewrite(g, nbrs[0], cur, nbrs[1], odd)
        if not nbrs:
            return None
        prev, cur = cur, nbrs[0]


def _arnold_rewrite(g, i, j, k, odd):
    """Replace the two edges i-j, j-k of ``g`` using the Arnold relation."""
    rest = list(g.edges)
    for a, b in ((i, j), (j, k)):
        for p, e in enumerate(rest):
            if set(e) == {a, b}:
                del rest[p]
                break
        else:
            raise AssertionError("edge missing")
    rel = arnold_terms(rest, i, j, k, n=g.n, odd=odd)
    return _solve(rel, g)


def _rewrite_bound(x: LinComb, is_tree: bool) -> int:
    total = 0
    for g, _ in x.items():
        n = g.n
        if is_tree:
            extra = sum(1 for a in g.internal_vertices() if not isinstance(subtree_at(g.root, a)[1], int))
        else:
            deg: dict[int, int] = {}
            for a, b in g.edges:
                deg[a] = deg.get(a, 0) + 1
                deg[b] = deg.get(b, 0) + 1
            extra = sum(1 for d in deg.values() if d > 2) + max(0, len(g.edges) - (n - 1))
        total += (n + extra) * math.factorial(n)
    return total


def reduce_rewrite(x, odd: bool = False, max_steps: int | None = None) -> LinComb:
    """Normal form by rewriting with the defining relations only.

    Trees: antisymmetry moves leaf 1 to the leftmost position and Jacobi
    raises its height until the tree is tall.  Graphs (EoGraph input: odd):
    Arnold steps shorten cycles down to parallel edges, which vanish, and
    split branch vertices along the path from 1 until the graph is long.
    """
    x = lincomb(x)
    if not x:
        return x
    _uniform_n(x)
    is_tree = isinstance(next(iter(x)), Tree)
    if not is_tree:
        odd = isinstance(next(iter(x)), EoGraph)
        for g in x:
            if not g.is_connected:
                raise ValueError(f"graph {g} is not connected")
    bound = _rewrite_bound(x, is_tree) if max_steps is None else max_steps
    done = LinComb()
    todo = LinComb(x.items())
    steps = 0
    while todo:
        g, c = min(todo.items(), key=lambda kv: str(kv[0]))
        todo.add(g, -c)
        repl = _tree_step(g, odd) if is_tree else _graph_step(g, odd)
        if repl is None:
            done.add(g, c)
            continue
        steps += 1
        if steps > bound:
            raise RewriteBoundExceeded(f"rewriting exceeded {bound} steps")
        for h, d in repl.items():
            todo.add(h, c * d)
    return done


# ---------------------------------------------------------------------------
# Leibniz normalization

def _internal(node) -> int:
    return _size(node) - 1


def _products(node, odd: bool) -> dict[tuple, int]:
    """Ordered products of pure brackets representing ``node``, with signs
    relating bracket in-order positions."""
    if isinstance(node, int):
        return {(node,): 1}
    left, right = _products(node.left, odd), _products(node.right, odd)
    out: dict[tuple, int] = {}

    def acc(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    if isinstance(node, Dot):
        for p, a in left.items():
            for q, b in right.items():
                acc(p + q, a * b)
        return out
    for p, a in left.items():
        for q, b in right.items():
            for ia in range(len(p)):
                for ib in range(len(q)):
                    prod = ((p[ia], q[ib]),) + p[:ia] + p[ia + 1:] + q[:ib] + q[ib + 1:]
                    sign = _leibniz_sign(p, q, ia, ib) if odd else 1
                    acc(prod, a * b * sign)
    return out


def _leibniz_sign(p, q, ia, ib) -> int:
    # old bracket order: nodes of p1..pk, the new top bracket, nodes of q1..qm
    # new order: p_a, top, q_b, remaining p's, remaining q's
    blocks = [("p", i) for i in range(len(p))] + [("top", 0)] + [("q", i) for i in range(len(q))]
    sizes = {("p", i): _internal(t) for i, t in enumerate(p)}
    sizes.update({("q", i): _internal(t) for i, t in enumerate(q)})
    sizes[("top", 0)] = 1
    new = ([("p", ia), ("top", 0), ("q", ib)]
           + [("p", i) for i in range(len(p)) if i != ia]
           + [("q", i) for i in range(len(q)) if i != ib])
    rank_of = {b: r for r, b in enumerate(new)}
    seq = []
    for b in blocks:
        seq.extend([rank_of[b]] * sizes[b])
    return perm_sign(seq)


def _product_to_forest(prod, odd: bool) -> tuple[Forest, int]:
    f = Forest(prod)
    if not odd:
        return f, 1
    rank_of = {t: r for r, t in enumerate(f.trees)}
    seq = []
    for t in prod:
        seq.extend([rank_of[t]] * _internal(t))
    return f, perm_sign(seq)


def _forest_shaped(node, inside=False):
    """Tree nodes of a dot-free-under-bracket expression, or None."""
    if isinstance(node, int):
        return [node]
    if isinstance(node, Dot):
        if inside:
            return None
        a, b = _forest_shaped(node.left), _forest_shaped(node.right)
        return None if a is None or b is None else a + b
    a, b = _forest_shaped(node.left, True), _forest_shaped(node.right, True)
    if a is None or b is None:
        return None
    return [(a[0], b[0])]


def bracket_to_forest(b: BracketExpr, odd: bool = False) -> tuple[Forest, int]:
    """Forest of an expression with no dot under a bracket, and the sign
    (odd case) from reordering the factors by minimum label."""
    comps = _forest_shaped(b.root)
    if comps is None:
        raise ValueError(f"{b} has a dot inside a bracket")
    return _product_to_forest(tuple(comps), odd)


def leibniz_normalize(b: BracketExpr, odd: bool = False) -> LinComb:
    """Forest representative of a bracket expression, via the Leibniz rule
    [X, Y*Z] = Y*[X,Z] + [X,Y]*Z (and its mirror in the first slot)."""
    out = LinComb()
    for prod, c in _products(b.root, odd).items():
        f, s = _product_to_forest(prod, odd)
        out.add(f, c * s)
    return out


# ---------------------------------------------------------------------------
# ranks

MAX_RANK_N = 6


def _block_diagrams(part, odd: bool):
    """All diagrams whose components are spanning trees of the blocks of ``part``."""
    n = sum(len(b) for b in part)
    per_block = []
    for block in part:
        m = len(block)
        back = {i + 1: x for i, x in enumerate(block)}
        per_block.append([tuple((back[a], back[b]) for a, b in g.edges)
                          for g in enumerate_spanning_graphs(m)])
    cls = EoGraph if odd else Graph
    return [cls(n, sum(choice, ())) for choice in itertools.product(*per_block)]


def rank_of_grade(n: int, k: int | None = None, odd: bool = False, side: str = "lie") -> int:
    """Rank over Q of the pairing between spanning sets of a graded piece.

    ``side="lie"``: all trees against all spanning graphs (k = n-1).
    ``side="poisson"``: forests with k internal vertices against diagrams with
    k edges, summed over partitions with matching blocks.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_RANK_N:
        raise ValueError(f"rank computation is limited to n <= {MAX_RANK_N}")
    if side == "lie":
        if k not in (None, n - 1):
            raise ValueError("the Lie side has only the grade k = n-1")
        rows = enumerate_spanning_eographs(n) if odd else enumerate_spanning_graphs(n)
        cols = enumerate_trees(n)
        return rank([pair(g, t) for t in cols] for g in rows)
    if side != "poisson":
        raise ValueError(f"unknown side {side!r}")
    if k is None or not 0 <= k <= n - 1:
        raise ValueError("poisson rank needs 0 <= k <= n-1")
    total = 0
    for part in set_partitions(range(1, n + 1)):
        if n - len(part) != k:
            continue
        forests = [Forest(c) for c in itertools.product(*(tree_nodes_on(b) for b in part))]
        diagrams = _block_diagrams(part, odd)
        total += rank([pair_extended(d, f) for f in forests] for d in diagrams)
    return total
