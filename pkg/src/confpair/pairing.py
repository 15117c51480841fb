"""The configuration pairing between graphs and trees, even and odd.

Sign convention (even case): an edge i -> j contributes -1 exactly when its
source leaf i lies over the right branch of the nadir.  Read literally, the
"travels from left to right" wording would instead charge the edges whose
source is on the left, which differs by the global sign (-1)^(n-1); the
convention here is the one under which long graphs and tall trees pair to the
identity matrix and the 4-leaf expansion example comes out as stated.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Bracket,
    BracketExpr,
    EoGraph,
    Forest,
    Graph,
    Tree,
    bracket_vars,
    inorder_index,
    leaf_paths,
    node_leaves,
    normalize_block,
    perm_sign,
    relabel_node,
    rho,
)


@dataclass(frozen=True)
class BetaResult:
    """Edge-to-nadir assignment.  ``assignment[e]`` and ``side[e]`` follow the
    edge order of the graph; addresses are root paths, side 0 = left."""

    assignment: tuple
    side: tuple
    bijective: bool


def _check_same(n_graph: int, n_tree: int):
    if n_graph != n_tree:
        raise ValueError(f"label sets differ: graph on 1..{n_graph}, tree on 1..{n_tree}")


def _nadir(paths, i, j):
    pi, pj = paths[i], paths[j]
    k = 0
    while pi[k] == pj[k]:
        k += 1
    return pi[:k], pi[k]


def beta(g: Graph | EoGraph, t: Tree) -> BetaResult:
    _check_same(g.n, t.n)
    paths = leaf_paths(t.root)
    assignment, side = [], []
    for i, j in g.edges:
        v, s = _nadir(paths, i, j)
        assignment.append(v)
        side.append(s)
    bij = len(assignment) == t.n - 1 and len(set(assignment)) == len(assignment)
    return BetaResult(tuple(assignment), tuple(side), bij)


def _edge_sign(side: int) -> int:
    return 1 if side == 0 else -1


def _even_node(edges, root, n: int) -> int:
    if len(edges) != n - 1:
        return 0
    paths = leaf_paths(root)
    seen = set()
    sign = 1
    for i, j in edges:
        v, s = _nadir(paths, i, j)
        if v in seen:
            return 0
        seen.add(v)
        sign *= _edge_sign(s)
    return sign


def _odd_node(edges, root, n: int) -> int:
    if len(edges) != n - 1:
        return 0
    paths = leaf_paths(root)
    index = inorder_index(root)
    order = []
    for i, j in edges:
        v, _ = _nadir(paths, i, j)
        order.append(index[v])
    if len(set(order)) != len(order):
        return 0
    return perm_sign(order)


def pair_even(g: Graph, t: Tree) -> int:
    _check_same(g.n, t.n)
    return _even_node(g.edges, t.root, t.n)


def pair_odd(g: EoGraph, t: Tree) -> int:
    _check_same(g.n, t.n)
    return _odd_node(g.edges, t.root, t.n)


def pair(g: Graph | EoGraph, t: Tree) -> int:
    """Even or odd pairing, chosen by the type of ``g``."""
    if isinstance(g, EoGraph):
        return pair_odd(g, t)
    if isinstance(g, Graph):
        return pair_even(g, t)
    raise TypeError(f"cannot pair {type(g).__name__} with a tree")


def pair_extended(d: Graph | EoGraph, f: Forest | Tree) -> int:
    """Diagram/forest pairing: zero unless the partitions agree, otherwise the
    product of the blockwise pairings.

    In the odd case the product also carries the sign of the permutation
    that groups the diagram's edges into per-block runs, blocks taken in
    increasing order of their minimum label.
    """
    if isinstance(f, Tree):
        f = Forest((f.root,))
    if d.n != f.n:
        raise ValueError(f"size mismatch: diagram on {d.n} vertices, forest on {f.n} leaves")
    if rho(d) != rho(f):
        return 0
    odd = isinstance(d, EoGraph)
    block_of = {}
    for b, t in enumerate(f.trees):
        for x in node_leaves(t):
            block_of[x] = b
    per_block = [[] for _ in f.trees]
    for e in d.edges:
        per_block[block_of[e[0]]].append(e)
    sign = perm_sign([block_of[e[0]] for e in d.edges]) if odd else 1
    for t, edges in zip(f.trees, per_block):
        m = normalize_block(node_leaves(t))
        root = relabel_node(t, m)
        es = [(m[i], m[j]) for i, j in edges]
        sign *= (_odd_node if odd else _even_node)(es, root, len(m))
        if not sign:
            return 0
    return sign


# ---------------------------------------------------------------------------
# bracket expressions

def _bracket_paths(node, path=(), out=None):
    if out is None:
        out = {}
    if isinstance(node, int):
        out[node] = path
    else:
        _bracket_paths(node.left, path + (0,), out)
        _bracket_paths(node.right, path + (1,), out)
    return out


def _bracket_inorder(node, path=(), out=None):
    """Addresses of bracket nodes, in order; dot nodes are skipped."""
    if out is None:
        out = []
    if isinstance(node, int):
        return out
    _bracket_inorder(node.left, path + (0,), out)
    if isinstance(node, Bracket):
        out.append(path)
    _bracket_inorder(node.right, path + (1,), out)
    return out


def _node_at(node, addr):
    for k in addr:
        node = node[k]
    return node


def pair_bracket(d: Graph | EoGraph, b: BracketExpr) -> int:
    """Pairing with a bracket expression: each edge goes to the innermost
    bracket containing both endpoints; if the two variables meet at a dot the
    assignment is undefined and the pairing is zero."""
    if d.n != b.n:
        raise ValueError(f"size mismatch: diagram on {d.n} vertices, expression in {b.n} variables")
    brackets = _bracket_inorder(b.root)
    if len(d.edges) != len(brackets):
        return 0
    paths = _bracket_paths(b.root)
    seen = set()
    sides = []
    nadirs = []
    for i, j in d.edges:
        v, s = _nadir(paths, i, j)
        if not isinstance(_node_at(b.root, v), Bracket) or v in seen:
            return 0
        seen.add(v)
        sides.append(s)
        nadirs.append(v)
    if isinstance(d, EoGraph):
        index = {a: k for k, a in enumerate(brackets)}
        return perm_sign([index[v] for v in nadirs])
    sign = 1
    for s in sides:
        sign *= _edge_sign(s)
    return sign


def pairing_matrix(rows, cols) -> list[list[int]]:
    """Pairing of every row generator against every column generator.

    Columns may be Trees, Forests or BracketExprs; rows Graphs or EoGraphs.
    """
    rows, cols = list(rows), list(cols)
    ns = {x.n for x in rows} | {x.n for x in cols}
    if len(ns) > 1:
        raise ValueError(f"mixed sizes {sorted(ns)}")
    out = []
    for g in rows:
        row = []
        for t in cols:
            if isinstance(t, Tree):
                row.append(pair(g, t))
            elif isinstance(t, Forest):
                row.append(pair_extended(g, t))
            elif isinstance(t, BracketExpr):
                row.append(pair_bracket(g, t))
            else:
                raise TypeError(f"cannot pair against {type(t).__name__}")
        out.append(row)
    return out


def pair_lincomb(graphs, trees) -> object:
    """Bilinear extension over LinCombs (either side may be a bare generator)."""
    from .lincomb import lincomb
    total = 0
    gl, tl = lincomb(graphs), lincomb(trees)
    for g, c in gl.items():
        for t, d in tl.items():
            if isinstance(t, Forest):
                v = pair_extended(g, t)
            elif isinstance(t, BracketExpr):
                v = pair_bracket(g, t)
            else:
                v = pair(g, t)
            if v:
                total += c * d * v
    return total


__all__ = [
    "BetaResult",
    "beta",
    "bracket_vars",
    "pair",
    "pair_even",
    "pair_odd",
    "pair_extended",
    "pair_bracket",
    "pairing_matrix",
    "pair_lincomb",
]
