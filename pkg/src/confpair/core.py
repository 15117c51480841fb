"""Combinatorial generators: binary trees, forests, graphs, bracket expressions, rp-trees.

Tree nodes are plain Python values so they hash cheaply and can be cached:
a leaf is its integer label and an internal vertex is a ``(left, right)``
tuple.  Internal vertices are addressed by their path from the root, a tuple
of 0 (left) / 1 (right) steps.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence, Union


class LabelError(ValueError):
    """Leaf or vertex labels do not form the required set."""


# ---------------------------------------------------------------------------
# permutations

def perm_sign(seq: Sequence) -> int:
    """Sign of the permutation that stably sorts ``seq``.

    Ties are not inversions, so repeated values are allowed.
    """
    inv = 0
    for a in range(len(seq)):
        sa = seq[a]
        for b in range(a + 1, len(seq)):
            if seq[b] < sa:
                inv += 1
    return -1 if inv & 1 else 1


def set_partitions(items: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All set partitions of ``items``; blocks and elements in increasing order."""
    items = sorted(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield ((first,),) + part
        for i in range(len(part)):
            block = (first,) + part[i]
            yield tuple(sorted(part[:i] + (block,) + part[i + 1:]))


# ---------------------------------------------------------------------------
# tree nodes

def is_leaf(node) -> bool:
    return isinstance(node, int)


@lru_cache(maxsize=None)
def node_leaves(node) -> tuple[int, ...]:
    """Leaf labels from left to right."""
    if isinstance(node, int):
        return (node,)
    return node_leaves(node[0]) + node_leaves(node[1])


@lru_cache(maxsize=None)
def leaf_paths(node) -> dict[int, tuple[int, ...]]:
    """Map each leaf label to its root-to-leaf address."""
    out: dict[int, tuple[int, ...]] = {}
    stack = [(node, ())]
    while stack:
        cur, path = stack.pop()
        if isinstance(cur, int):
            out[cur] = path
        else:
            stack.append((cur[0], path + (0,)))
            stack.append((cur[1], path + (1,)))
    return out


@lru_cache(maxsize=None)
def inorder_vertices(node) -> tuple[tuple[int, ...], ...]:
    """Addresses of internal vertices in left-to-right (in-order) order."""
    if isinstance(node, int):
        return ()
    left = tuple((0,) + a for a in inorder_vertices(node[0]))
    right = tuple((1,) + a for a in inorder_vertices(node[1]))
    return left + ((),) + right


@lru_cache(maxsize=None)
def inorder_index(node) -> dict[tuple[int, ...], int]:
    return {a: i for i, a in enumerate(inorder_vertices(node))}


def subtree_at(node, addr: Sequence[int]):
    for step in addr:
        if isinstance(node, int):
            raise ValueError(f"address {tuple(addr)} runs past a leaf")
        node = node[step]
    return node


def replace_at(node, addr: Sequence[int], new):
    if not addr:
        return new
    if isinstance(node, int):
        raise ValueError("address runs past a leaf")
    if addr[0] == 0:
        return (replace_at(node[0], addr[1:], new), node[1])
    return (node[0], replace_at(node[1], addr[1:], new))


def relabel_node(node, mapping):
    if isinstance(node, int):
        return mapping[node]
    return (relabel_node(node[0], mapping), relabel_node(node[1], mapping))


def node_str(node) -> str:
    if isinstance(node, int):
        return str(node)
    return f"[{node_str(node[0])},{node_str(node[1])}]"


def _check_node(node) -> None:
    if isinstance(node, bool) or not isinstance(node, (int, tuple)):
        raise TypeError(f"bad tree node {node!r}")
    if isinstance(node, int):
        if node < 1:
            raise LabelError(f"leaf label {node} is not positive")
        return
    if len(node) != 2:
        raise ValueError("internal tree vertices must have exactly two children")
    _check_node(node[0])
    _check_node(node[1])


def check_labels(labels: Iterable[int], n: int | None = None) -> None:
    labels = list(labels)
    if len(set(labels)) != len(labels):
        dup = sorted(x for x in set(labels) if labels.count(x) > 1)
        raise LabelError(f"duplicate label(s) {dup}")
    n = len(labels) if n is None else n
    if set(labels) != set(range(1, n + 1)):
        raise LabelError(f"labels {sorted(labels)} are not exactly 1..{n}")


def normalize_block(labels: Iterable[int]) -> dict[int, int]:
    """Order-preserving renumbering of a label set onto 1..m."""
    return {x: i + 1 for i, x in enumerate(sorted(labels))}


@dataclass(frozen=True)
class Tree:
    """Rooted planar binary tree with leaves labeled 1..n."""

    root: object

    def __post_init__(self):
        _check_node(self.root)
        check_labels(node_leaves(self.root))

    @property
    def n(self) -> int:
        return len(node_leaves(self.root))

    @property
    def leaves(self) -> tuple[int, ...]:
        return node_leaves(self.root)

    def internal_vertices(self) -> tuple[tuple[int, ...], ...]:
        return inorder_vertices(self.root)

    def subtree(self, addr):
        return subtree_at(self.root, addr)

    def swap(self, addr) -> "Tree":
        sub = subtree_at(self.root, addr)
        if isinstance(sub, int):
            raise ValueError(f"{tuple(addr)} is a leaf, not an internal vertex")
        return Tree(replace_at(self.root, addr, (sub[1], sub[0])))

    def relabel(self, mapping) -> "Tree":
        return Tree(relabel_node(self.root, mapping))

    def canonical(self):
        return self, 1

    def sort_key(self):
        return str(self)

    def __str__(self) -> str:
        return node_str(self.root)


@dataclass(frozen=True)
class Forest:
    """Unordered collection of trees whose leaves are jointly labeled 1..n.

    Components are stored sorted by minimum leaf label.
    """

    trees: tuple

    def __post_init__(self):
        trees = tuple(t.root if isinstance(t, Tree) else t for t in self.trees)
        for t in trees:
            _check_node(t)
        check_labels(itertools.chain.from_iterable(node_leaves(t) for t in trees))
        object.__setattr__(self, "trees", tuple(sorted(trees, key=lambda t: min(node_leaves(t)))))

    @property
    def n(self) -> int:
        return sum(len(node_leaves(t)) for t in self.trees)

    @property
    def internal_count(self) -> int:
        return self.n - len(self.trees)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted(node_leaves(t))) for t in self.trees)

    def block_trees(self) -> list[Tree]:
        """Each component renumbered onto 1..m."""
        return [Tree(relabel_node(t, normalize_block(node_leaves(t)))) for t in self.trees]

    def canonical(self):
        return self, 1

    def sort_key(self):
        return str(self)

    def __str__(self) -> str:
        return " ; ".join(node_str(t) for t in self.trees)


# ---------------------------------------------------------------------------
# graphs

def _components(n: int, edges) -> tuple[tuple[int, ...], ...]:
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[ri] = rj
    groups: dict[int, list[int]] = {}
    for v in range(1, n + 1):
        groups.setdefault(find(v), []).append(v)
    return tuple(sorted(tuple(g) for g in groups.values()))


def _check_edges(n: int, edges) -> None:
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    for e in edges:
        if len(e) != 2:
            raise ValueError(f"bad edge {e!r}")
        i, j = e
        if i == j:
            raise ValueError(f"loop at vertex {i}")
        if not (1 <= i <= n and 1 <= j <= n):
            raise LabelError(f"edge {e} has a vertex outside 1..{n}")


def _graph_head(n: int, edges) -> str:
    top = max((max(e) for e in edges), default=0)
    if edges and top == n:
        return ""
    return f"n={n}: " if edges else f"n={n}:"


@dataclass(frozen=True)
class Graph:
    """Oriented graph on vertices 1..n; a connected one is a Graph proper,
    a possibly disconnected one is an (even) Diagram.

    ``edges`` is a multiset of (source, target) pairs, stored sorted; the
    orientation is kept as given.  Parallel edges are allowed, loops are not.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple(sorted((int(i), int(j)) for i, j in self.edges))
        _check_edges(self.n, edges)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges, n: int | None = None) -> "Graph":
        edges = list(edges)
        if n is None:
            n = max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))

    def canonical(self) -> tuple["Graph", int]:
        return canonicalize_graph(self)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return _components(self.n, self.edges)

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, mapping, n: int | None = None) -> "Graph":
        return Graph(len(mapping) if n is None else n,
                     tuple((mapping[i], mapping[j]) for i, j in self.edges))

    def sort_key(self):
        return str(self)

    def __str__(self) -> str:
        return _graph_head(self.n, self.edges) + ", ".join(f"{i}->{j}" for i, j in self.edges)


@dataclass(frozen=True)
class EoGraph:
    """Graph with a total order on its unoriented edges (odd Graph / odd Diagram).

    Each edge is stored as (min, max); the sequence order is the edge order.
    """

    n: int
    edges: tuple

    def __post_init__(self):
        edges = tuple((min(int(i), int(j)), max(int(i), int(j))) for i, j in self.edges)
        _check_edges(self.n, edges)
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, edges, n: int | None = None) -> "EoGraph":
        edges = list(edges)
        if n is None:
            n = max((max(e) for e in edges), default=0)
        return cls(n, tuple(edges))

    def canonical(self) -> tuple["EoGraph", int]:
        return canonicalize_eograph(self)

    def components(self) -> tuple[tuple[int, ...], ...]:
        return _components(self.n, self.edges)

    @property
    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def relabel(self, mapping, n: int | None = None) -> "EoGraph":
        return EoGraph(len(mapping) if n is None else n,
                       tuple((mapping[i], mapping[j]) for i, j in self.edges))

    def sort_key(self):
        return str(self)

    def __str__(self) -> str:
        return _graph_head(self.n, self.edges) + ", ".join(f"{i}-{j}" for i, j in self.edges)


def canonicalize_graph(g: Graph) -> tuple[Graph, int]:
    """Orient every edge from smaller to larger label; sign (-1)^(flips)."""
    flips = sum(1 for i, j in g.edges if i > j)
    canon = Graph(g.n, tuple((min(e), max(e)) for e in g.edges))
    return canon, (-1 if flips & 1 else 1)


def canonicalize_eograph(g: EoGraph) -> tuple[EoGraph, int]:
    """Sort edges lexicographically; sign of the sorting permutation."""
    return EoGraph(g.n, tuple(sorted(g.edges))), perm_sign(g.edges)


def rho(x) -> tuple[tuple[int, ...], ...]:
    """Partition of 1..n into tree leaf sets (Forest) or connected components (graph)."""
    if isinstance(x, Forest):
        return tuple(sorted(x.blocks()))
    if isinstance(x, Tree):
        return (tuple(range(1, x.n + 1)),)
    if isinstance(x, (Graph, EoGraph)):
        return x.components()
    raise TypeError(f"rho is not defined for {type(x).__name__}")


# ---------------------------------------------------------------------------
# bracket expressions

class Bracket(NamedTuple):
    left: object
    right: object


class Dot(NamedTuple):
    left: object
    right: object


def bracket_vars(node) -> tuple[int, ...]:
    if isinstance(node, int):
        return (node,)
    if not isinstance(node, (Bracket, Dot)):
        raise TypeError(f"not a bracket expression node: {node!r}")
    return bracket_vars(node.left) + bracket_vars(node.right)


def bracket_node_str(node) -> str:
    if isinstance(node, int):
        return f"x{node}"
    if isinstance(node, Bracket):
        return f"[{bracket_node_str(node.left)},{bracket_node_str(node.right)}]"
    return f"({bracket_node_str(node.left)}*{bracket_node_str(node.right)})"


def relabel_bracket(node, mapping):
    if isinstance(node, int):
        return mapping[node]
    return type(node)(relabel_bracket(node.left, mapping), relabel_bracket(node.right, mapping))


def tree_to_bracket(node):
    if isinstance(node, int):
        return node
    return Bracket(tree_to_bracket(node[0]), tree_to_bracket(node[1]))


@dataclass(frozen=True)
class BracketExpr:
    """Expression in x_1..x_n built from a bracket and a dot, each variable once."""

    root: object

    def __post_init__(self):
        check_labels(bracket_vars(self.root))

    @property
    def n(self) -> int:
        return len(bracket_vars(self.root))

    @classmethod
    def from_tree(cls, t: Tree) -> "BracketExpr":
        return cls(tree_to_bracket(t.root))

    @classmethod
    def from_forest(cls, f: Forest) -> "BracketExpr":
        """Dot product of the component brackets, in stored (min-label) order."""
        parts = [tree_to_bracket(t) for t in f.trees]
        node = parts[0]
        for p in parts[1:]:
            node = Dot(node, p)
        return cls(node)

    def canonical(self):
        return self, 1

    def sort_key(self):
        return str(self)

    def __str__(self) -> str:
        return bracket_node_str(self.root)


# ---------------------------------------------------------------------------
# rp-trees

LEAF = None


def _rp_check(node) -> None:
    if node is LEAF:
        return
    if not isinstance(node, tuple):
        raise TypeError(f"bad rp-tree node {node!r}")
    for c in node:
        _rp_check(c)


def rp_str(node) -> str:
    if node is LEAF:
        return "l"
    return "(" + " ".join(rp_str(c) for c in node) + ")"


def rp_leaf_count(node) -> int:
    if node is LEAF:
        return 1
    return sum(rp_leaf_count(c) for c in node)


def rp_vertices(node) -> list[tuple[int, ...]]:
    """Addresses (child-index paths) of internal vertices in pre-order."""
    if node is LEAF:
        return []
    out = [()]
    for k, c in enumerate(node):
        out.extend((k,) + a for a in rp_vertices(c))
    return out


@dataclass(frozen=True)
class RpTree:
    """Rooted planar tree with unlabeled leaves and vertices of any arity.

    A vertex is a tuple of children; a leaf is ``None``.  ``()`` is the
    corolla with no leaves.  A bare leaf root is the tree with no vertices.
    """

    root: object

    def __post_init__(self):
        _rp_check(self.root)

    @property
    def n(self) -> int:
        return rp_leaf_count(self.root)

    def vertices(self) -> list[tuple[int, ...]]:
        return rp_vertices(self.root)

    def vertex(self, addr):
        node = self.root
        for k in addr:
            node = node[k]
        return node

    def arity(self, addr) -> int:
        return len(self.vertex(addr))

    @classmethod
    def corolla(cls, n: int) -> "RpTree":
        return cls((LEAF,) * n)

    def __str__(self) -> str:
        return rp_str(self.root)


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _trees_on(labels: tuple[int, ...]) -> tuple:
    if len(labels) == 1:
        return (labels[0],)
    out = []
    first, rest = labels[0], labels[1:]
    # choose the subset containing ``first``; place it left and right
    for r in range(0, len(rest)):
        for extra in itertools.combinations(rest, r):
            part = (first,) + extra
            other = tuple(x for x in rest if x not in extra)
            for a in _trees_on(part):
                for b in _trees_on(other):
                    out.append((a, b))
                    out.append((b, a))
    return tuple(out)


def tree_nodes_on(labels: Iterable[int]) -> tuple:
    """All planar binary tree nodes with the given leaf labels."""
    return _trees_on(tuple(sorted(labels)))


def enumerate_trees(n: int) -> list[Tree]:
    if n < 1:
        raise ValueError("n must be at least 1")
    return [Tree(t) for t in tree_nodes_on(range(1, n + 1))]


def tall_node(seq: Sequence[int]):
    node = seq[0]
    for x in seq[1:]:
        node = (node, x)
    return node


def fixing_one(n: int) -> list[tuple[int, ...]]:
    """Permutations of 1..n with 1 first, in lexicographic order."""
    return [(1,) + p for p in itertools.permutations(range(2, n + 1))]


def enumerate_tall(n: int) -> list[Tree]:
    """Left combs ``[[[1,s2],s3],...]``, indexed by permutations fixing 1."""
    return [Tree(tall_node(s)) for s in fixing_one(n)]


def long_edges(seq: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(zip(seq[:-1], seq[1:]))


def enumerate_long(n: int) -> list[Graph]:
    """Directed paths 1 -> s2 -> ... -> sn with aligned orientations."""
    return [Graph(n, long_edges(s)) for s in fixing_one(n)]


def enumerate_long_odd(n: int) -> list[EoGraph]:
    """Paths from 1 with edges ordered by their position along the path."""
    return [EoGraph(n, long_edges(s)) for s in fixing_one(n)]


def _spanning_edge_sets(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    # Pruefer decoding; sequences in lexicographic order
    if n == 1:
        yield ()
        return
    if n == 2:
        yield ((1, 2),)
        return
    for code in itertools.product(range(1, n + 1), repeat=n - 2):
        degree = [1] * (n + 1)
        for x in code:
            degree[x] += 1
        edges = []
        for x in code:
            leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
            edges.append((min(leaf, x), max(leaf, x)))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(1, n + 1) if degree[v] == 1]
        edges.append((u, w))
        yield tuple(sorted(edges))


def enumerate_spanning_graphs(n: int) -> list[Graph]:
    """All labeled spanning trees of K_n, canonically oriented (n^(n-2) of them)."""
    return sorted((Graph(n, e) for e in _spanning_edge_sets(n)), key=str)


def enumerate_spanning_eographs(n: int) -> list[EoGraph]:
    return [EoGraph(n, g.edges) for g in enumerate_spanning_graphs(n)]


def enumerate_forests(n: int, k: int | None = None) -> list[Forest]:
    """All forests on 1..n, optionally only those with k internal vertices."""
    out = []
    for part in set_partitions(range(1, n + 1)):
        if k is not None and n - len(part) != k:
            continue
        for comps in itertools.product(*(tree_nodes_on(b) for b in part)):
            out.append(Forest(comps))
    return out


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


GraphLike = Union[Graph, EoGraph]
