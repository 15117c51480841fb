"""Operad structure on trees and bracket expressions, cooperad structure on diagrams.

Structure maps are indexed by rp-trees tau.  Internal vertices of tau are
ordered in pre-order (root first, then subtrees left to right); this order
fixes both the tensor factor order and the odd signs, on the grafting and
the cografting side alike.  The leaves of tau, read left to right, are the
labels 1..n of the result.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import (
    LEAF,
    Bracket,
    BracketExpr,
    EoGraph,
    Graph,
    RpTree,
    Tree,
    bracket_vars,
    node_leaves,
    perm_sign,
)
from .lincomb import LinComb
from .pairing import pair_bracket, pair_extended


class ShapeError(ValueError):
    """Factors or diagrams do not fit the rp-tree."""


def _rp(tau) -> RpTree:
    return tau if isinstance(tau, RpTree) else RpTree(tau)


# ---------------------------------------------------------------------------
# contraction

def contract(tau, edges) -> RpTree:
    """Merge each vertex at an address in ``edges`` into its parent.

    An internal edge is named by the address of its lower vertex; the root
    and leaves have no internal edge above them.
    """
    tau = _rp(tau)
    edges = {tuple(e) for e in edges}
    for e in edges:
        if not e:
            raise ShapeError("the root edge cannot be contracted")
        try:
            node = tau.vertex(e)
        except (IndexError, TypeError):
            raise ShapeError(f"no vertex at address {e}") from None
        if node is LEAF:
            raise ShapeError(f"address {e} is a leaf edge")

    def build(node, addr):
        if node is LEAF:
            return [LEAF]
        kids = []
        for k, c in enumerate(node):
            sub = build(c, addr + (k,))
            if c is not LEAF and addr + (k,) in edges:
                kids.extend(sub[0])
            else:
                kids.extend(sub)
        return [tuple(kids)]

    return RpTree(build(tau.root, ())[0])


# ---------------------------------------------------------------------------
# grafting

def _rebuild(node, left, right):
    return (left, right) if type(node) is tuple else type(node)(left, right)


def _factor_root(factor, arity: int, bracket: bool):
    if bracket:
        if not isinstance(factor, BracketExpr):
            raise TypeError(f"expected a bracket expression, got {type(factor).__name__}")
        labels = bracket_vars(factor.root)
    else:
        if not isinstance(factor, Tree):
            raise TypeError(f"expected a tree, got {type(factor).__name__}")
        labels = node_leaves(factor.root)
    if len(labels) != arity:
        raise ShapeError(f"factor {factor} has {len(labels)} leaves, vertex has arity {arity}")
    return factor.root


def _signed_vertex(node, bracket: bool) -> bool:
    """Whether a vertex carries odd degree: every tree vertex, but only bracket nodes."""
    return isinstance(node, Bracket) if bracket else True


def _graft(tau: RpTree, factors, bracket: bool):
    """Grafted node, the tagged in-order vertex list of the result, and the
    concatenated in-order lists of the factors.  Tags are (vertex, address)."""
    verts = tau.vertices()
    if len(factors) != len(verts):
        raise ShapeError(f"{len(factors)} factors for {len(verts)} vertices")
    roots = {}
    for v, f in zip(verts, factors):
        arity = tau.arity(v)
        if arity == 0:
            raise ShapeError(f"vertex {v} has no incoming edges; no factor can sit there")
        roots[v] = _factor_root(f, arity, bracket)

    counter = iter(range(1, tau.n + 1))

    def substitute(node, v, addr, subs):
        if isinstance(node, int):
            return subs[node - 1]
        left, lo = substitute(node[0], v, addr + (0,), subs)
        right, ro = substitute(node[1], v, addr + (1,), subs)
        mid = [(v, addr)] if _signed_vertex(node, bracket) else []
        return _rebuild(node, left, right), lo + mid + ro

    def build(v):
        subs = []
        for k, c in enumerate(tau.vertex(v)):
            subs.append((next(counter), []) if c is LEAF else build(v + (k,)))
        return substitute(roots[v], v, (), subs)

    node, order = build(())
    concat = []
    for v in verts:
        concat.extend(tag for tag in _factor_order(roots[v], v, (), bracket))
    return node, order, concat


def _factor_order(node, v, addr, bracket):
    if isinstance(node, int):
        return []
    return (_factor_order(node[0], v, addr + (0,), bracket)
            + ([(v, addr)] if _signed_vertex(node, bracket) else [])
            + _factor_order(node[1], v, addr + (1,), bracket))


def graft(tau, factors, odd: bool = False) -> LinComb:
    """Grafting of trees (or of bracket expressions) along tau.

    The factor at the k-th child of v is attached to leaf k of the factor
    at v.  In the odd case the result carries the sign of the permutation
    taking the factors' in-order vertex lists, concatenated in vertex
    order, to the in-order vertex list of the result; for bracket
    expressions only bracket nodes count.
    """
    tau = _rp(tau)
    factors = list(factors)
    if not factors:
        raise ShapeError("no factors given")
    bracket = isinstance(factors[0], BracketExpr)
    node, order, concat = _graft(tau, factors, bracket)
    sign = 1
    if odd:
        pos = {tag: i for i, tag in enumerate(order)}
        sign = perm_sign([pos[tag] for tag in concat])
    gen = BracketExpr(node) if bracket else Tree(node)
    return LinComb([(gen, sign)])


def graft_single(tau, factors, odd: bool = False):
    """``(generator, sign)`` form of :func:`graft`."""
    ((gen, c),) = graft(tau, factors, odd).items()
    return gen, int(c)


def _shift(node, mapping):
    if isinstance(node, int):
        return mapping(node)
    return _rebuild(node, _shift(node[0], mapping), _shift(node[1], mapping))


def circ(i: int, b1, b2):
    """Substitute b2 for the variable (leaf) i of b1, renumbering so the
    result's labels run 1..n1+n2-1 in the order they are read off."""
    bracket = isinstance(b1, BracketExpr)
    if bracket != isinstance(b2, BracketExpr):
        raise TypeError("circ needs two trees or two bracket expressions")
    n1, m = b1.n, b2.n
    if not 1 <= i <= n1:
        raise ShapeError(f"index {i} out of range 1..{n1}")
    inner = _shift(b2.root, lambda j: j + i - 1)

    def outer(j):
        if j == i:
            return inner
        return j if j < i else j + m - 1

    node = _shift(b1.root, outer)
    return BracketExpr(node) if bracket else Tree(node)


def circ_tau(n1: int, i: int, m: int) -> RpTree:
    """The rp-tree indexing the operation circ_i on arities n1 and m."""
    kids = [LEAF] * n1
    kids[i - 1] = (LEAF,) * m
    return RpTree(tuple(kids))


# ---------------------------------------------------------------------------
# cografting

@dataclass(frozen=True)
class CograftOutput:
    """Per-vertex diagrams in vertex order, and the odd reordering sign."""

    factors: tuple
    sign: int


def _branch_labels(tau: RpTree):
    """For each leaf j: the path of (vertex, branch index) pairs from the root."""
    out = {}
    counter = iter(range(1, tau.n + 1))

    def walk(node, addr, trail):
        for k, c in enumerate(node):
            step = trail + ((addr, k + 1),)
            if c is LEAF:
                out[next(counter)] = step
            else:
                walk(c, addr + (k,), step)

    if tau.root is not LEAF:
        walk(tau.root, (), ())
    return out


def cograft(tau, d, odd: bool | None = None) -> CograftOutput:
    """Split a diagram along tau: edge (j, k) goes to the nadir v of leaves
    j and k, becoming an edge between the branches of v containing them."""
    tau = _rp(tau)
    if odd is None:
        odd = isinstance(d, EoGraph)
    if d.n != tau.n:
        raise ShapeError(f"diagram on {d.n} vertices, rp-tree with {tau.n} leaves")
    verts = tau.vertices()
    for v in verts:
        if tau.arity(v) == 0:
            raise ShapeError(f"vertex {v} has no incoming edges")
    index = {v: p for p, v in enumerate(verts)}
    trails = _branch_labels(tau)
    per_vertex = [[] for _ in verts]
    owner = []
    for j, k in d.edges:
        tj, tk = trails[j], trails[k]
        p = 0
        while tj[p] == tk[p]:
            p += 1
        v = tj[p][0]
        per_vertex[index[v]].append((tj[p][1], tk[p][1]))
        owner.append(index[v])
    cls = EoGraph if odd else Graph
    factors = tuple(cls(tau.arity(v), tuple(es)) for v, es in zip(verts, per_vertex))
    return CograftOutput(factors, perm_sign(owner) if odd else 1)


# ---------------------------------------------------------------------------
# duality

def check_operad_compat(tau, factors, d, odd: bool = False, bracket_mode: bool | None = None) -> bool:
    """<d, graft(tau, factors)> == sign * prod_v <G_v, factor_v>."""
    tau = _rp(tau)
    factors = list(factors)
    if bracket_mode is None:
        bracket_mode = isinstance(factors[0], BracketExpr)
    if bracket_mode != isinstance(factors[0], BracketExpr):
        raise TypeError("bracket_mode does not match the factor type")
    if odd != isinstance(d, EoGraph):
        raise TypeError("diagram parity does not match")
    pairing = pair_bracket if bracket_mode else pair_extended
    gen, sign = graft_single(tau, factors, odd)
    lhs = sign * pairing(d, gen)
    out = cograft(tau, d, odd)
    rhs = out.sign
    for g, f in zip(out.factors, factors):
        rhs *= pairing(g, f)
        if not rhs:
            break
    return lhs == rhs


__all__ = [
    "CograftOutput",
    "ShapeError",
    "check_operad_compat",
    "circ",
    "circ_tau",
    "cograft",
    "contract",
    "graft",
    "graft_single",
]
