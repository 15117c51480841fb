"""Diagram product, forest coproduct via partitions of forests, and their compatibility."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import (
    EoGraph,
    Forest,
    inorder_vertices,
    node_leaves,
    perm_sign,
    subtree_at,
)
from .lincomb import LinComb, lincomb
from .pairing import pair_extended


def diagram_product(d1, d2):
    """Union of edges; odd diagrams concatenate edge orders, d1 first."""
    if d1.n != d2.n:
        raise ValueError(f"size mismatch: {d1.n} vs {d2.n} vertices")
    if type(d1) is not type(d2):
        raise TypeError("cannot multiply an even diagram with an odd one")
    return type(d1)(d1.n, d1.edges + d2.edges)


@dataclass(frozen=True)
class PartitionDatum:
    """Bipartition of the internal vertices plus a chosen leaf over each branch.

    Vertices are ``(component index, address)`` pairs; the three tuples are
    aligned with :func:`forest_vertices`.
    """

    vertices: tuple
    side: tuple
    left_leaf: tuple
    right_leaf: tuple

    def S(self, i: int) -> tuple:
        return tuple(v for v, s in zip(self.vertices, self.side) if s == i)


def forest_vertices(f: Forest) -> list[tuple[int, tuple]]:
    """Internal vertices: components in stored order, in-order within each."""
    return [(b, a) for b, t in enumerate(f.trees) for a in inorder_vertices(t)]


def _restrict(node, keep, addr=()):
    """Subtree spanned by the leaves in ``keep``, bivalent vertices suppressed.

    Returns the node and the addresses (in ``node``'s tree) of its internal
    vertices in in-order, or None if no leaf is kept.
    """
    if isinstance(node, int):
        return (node, []) if node in keep else None
    left = _restrict(node[0], keep, addr + (0,))
    right = _restrict(node[1], keep, addr + (1,))
    if left is None or right is None:
        return left or right
    return (left[0], right[0]), left[1] + [addr] + right[1]


def _side_forest(f: Forest, S, lam) -> tuple[Forest, list] | None:
    """F_i for one side: each component of the chosen-leaf graph spans a
    restricted subtree of F.  None unless the restricted subtrees have
    exactly the vertices S as internal vertices."""
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            x = parent[x]
        return x

    for v in S:
        a, b = lam[v]
        parent[find(a)] = find(b)
    blocks: dict[int, set] = {}
    for x in list(parent):
        blocks.setdefault(find(x), set()).add(x)
    tree_of = {x: b for b, t in enumerate(f.trees) for x in node_leaves(t)}
    comps, seen = [], set()
    for block in blocks.values():
        b = tree_of[min(block)]
        node, addrs = _restrict(f.trees[b], block)
        ids = [(b, a) for a in addrs]
        seen.update(ids)
        comps.append((node, ids))
    if seen != set(S) or sum(len(ids) for _, ids in comps) != len(S):
        return None
    kept = set(parent)
    nodes = [c for c, _ in comps] + [x for x in range(1, f.n + 1) if x not in kept]
    forest = Forest(tuple(nodes))
    ids_by_min = {min(node_leaves(c)): ids for c, ids in comps}
    order = []
    for t in forest.trees:
        order.extend(ids_by_min.get(min(node_leaves(t)), []))
    return forest, order


def enumerate_partitions(f: Forest):
    """Yield ``(datum, F1, F2, sign)`` for every valid partition datum.

    For each side, the chosen leaf pairs of the vertices in S_i link leaves
    into blocks; F_i is F restricted to those blocks (plus singletons).  Data
    whose restricted subtrees acquire vertices outside S_i, or lose some, are
    skipped, so F_i has exactly the |S_i| internal vertices of S_i.

    ``sign`` is the parity of the permutation carrying the internal vertices
    of F1 followed by those of F2 (each in canonical forest order) to the
    canonical order of the vertices of ``f``; it matters only in the odd
    theory.
    """
    verts = forest_vertices(f)
    pos = {v: i for i, v in enumerate(verts)}
    choices = []
    for b, a in verts:
        node = subtree_at(f.trees[b], a)
        choices.append(list(itertools.product(node_leaves(node[0]), node_leaves(node[1]))))
    for side in itertools.product((1, 2), repeat=len(verts)):
        for pick in itertools.product(*choices):
            lam = dict(zip(verts, pick))
            res = []
            for i in (1, 2):
                S = [v for v, s in zip(verts, side) if s == i]
                out = _side_forest(f, S, lam)
                if out is None:
                    break
                res.append(out)
            else:
                (f1, o1), (f2, o2) = res
                datum = PartitionDatum(tuple(verts), side,
                                       tuple(p[0] for p in pick), tuple(p[1] for p in pick))
                yield datum, f1, f2, perm_sign([pos[v] for v in o1 + o2])


def coproduct(x, odd: bool = False) -> LinComb:
    """c(F) = sum of F1 (x) F2 over the partitions of F.

    The sum runs over distinct pairs (F1, F2): leaf choices that only differ
    at vertices not affecting the result give the same partition.  In the
    odd theory each term carries the vertex-shuffle sign.
    """
    out = LinComb()
    for f, c in lincomb(x).items():
        seen = {}
        for _, f1, f2, sign in enumerate_partitions(f):
            key = (f1, f2)
            s = sign if odd else 1
            if key in seen:
                if seen[key] != s:
                    raise AssertionError(f"inconsistent signs for partition {f1} | {f2}")
                continue
            seen[key] = s
            out.add(key, c * s)
    return out


def tensor_pair(g1, g2, x: LinComb):
    """<g1 (x) g2, x> for x a combination of forest pairs."""
    return x.pair(lambda k: pair_extended(g1, k[0]) * pair_extended(g2, k[1]))


def check_coproduct_compat(f: Forest, g1, g2) -> bool:
    odd = isinstance(g1, EoGraph)
    if f.n != g1.n or f.n != g2.n:
        raise ValueError("size mismatch")
    lhs = pair_extended(diagram_product(g1, g2), f)
    rhs = tensor_pair(g1, g2, coproduct(f, odd))
    return lhs == rhs


__all__ = [
    "PartitionDatum",
    "coproduct",
    "check_coproduct_compat",
    "diagram_product",
    "enumerate_partitions",
    "forest_vertices",
    "tensor_pair",
]
