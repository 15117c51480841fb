"""Free Lie words in a vector space, graph functionals on them, and the cobracket.

A tree word mu_T(v_1, .., v_n) multiplies the vectors according to the tree
T; a graph word gamma_G(w_1, .., w_n) decorates the vertices of G with
covectors.  They pair by

    <gamma_G(w), mu_T(v)> = sum over sigma of <G, sigma.T> prod_i w_sigma(i)(v_i)

where sigma.T renames leaf i to sigma(i).
"""
from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import (
    EoGraph,
    Graph,
    Tree,
    canonicalize_eograph,
    canonicalize_graph,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    perm_sign,
    relabel_node,
)
from .lincomb import LinComb, lincomb
from .linalg import rank
from .pairing import pair
from .sampling import random_graph_relation, random_spanning, random_tree, random_tree_relation


def _coords(xs) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


@dataclass(frozen=True)
class VectorSpaceCtx:
    """V = Q^d with a named basis; covectors act by the dot product."""

    dim: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError("dimension must be positive")
        if not self.names:
            object.__setattr__(self, "names", tuple(chr(ord("a") + i) for i in range(self.dim)))
        if len(self.names) != self.dim:
            raise ValueError(f"{len(self.names)} names for dimension {self.dim}")

    def basis(self, i: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(int(i == j)) for j in range(self.dim))

    def dual(self, i: int) -> tuple[Fraction, ...]:
        return self.basis(i)

    def vector(self, coords) -> tuple[Fraction, ...]:
        v = _coords(coords)
        if len(v) != self.dim:
            raise ValueError(f"expected {self.dim} coordinates, got {len(v)}")
        return v

    def named(self, name: str) -> tuple[Fraction, ...]:
        """Basis vector by name; a trailing ``*`` names the dual covector."""
        return self.basis(self.names.index(name.rstrip("*")))

    def evaluate(self, w, v) -> Fraction:
        if len(w) != self.dim or len(v) != self.dim:
            raise ValueError("covector and vector must live in this space")
        return sum((a * b for a, b in zip(w, v)), Fraction(0))


def _label_str(x) -> str:
    return "(" + ",".join(str(c) for c in x) + ")"


@dataclass(frozen=True)
class LabeledTreeWord:
    shape: Tree
    labels: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(_coords(v) for v in self.labels))
        if len(self.labels) != self.shape.n:
            raise ValueError(f"{len(self.labels)} vectors for a tree with {self.shape.n} leaves")

    @property
    def n(self) -> int:
        return self.shape.n

    def relabel(self, tau: Sequence[int]) -> "LabeledTreeWord":
        """Rename leaf i to tau[i-1], carrying each vector with its leaf."""
        m = {i + 1: x for i, x in enumerate(tau)}
        labels = [None] * self.n
        for i, v in enumerate(self.labels):
            labels[m[i + 1] - 1] = v
        return LabeledTreeWord(Tree(relabel_node(self.shape.root, m)), tuple(labels))

    def __str__(self) -> str:
        return f"{self.shape} | " + "; ".join(_label_str(v) for v in self.labels)


@dataclass(frozen=True)
class LabeledGraphWord:
    shape: Graph | EoGraph
    labels: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(_coords(w) for w in self.labels))
        if len(self.labels) != self.shape.n:
            raise ValueError(f"{len(self.labels)} covectors for a graph on {self.shape.n} vertices")

    @property
    def n(self) -> int:
        return self.shape.n

    @property
    def odd(self) -> bool:
        return isinstance(self.shape, EoGraph)

    def canonical(self):
        g, s = (canonicalize_eograph if self.odd else canonicalize_graph)(self.shape)
        return LabeledGraphWord(g, self.labels), s

    def relabel(self, tau: Sequence[int]) -> "LabeledGraphWord":
        m = {i + 1: x for i, x in enumerate(tau)}
        labels = [None] * self.n
        for i, w in enumerate(self.labels):
            labels[m[i + 1] - 1] = w
        return LabeledGraphWord(self.shape.relabel(m), tuple(labels))

    def __str__(self) -> str:
        return f"{str(self.shape).strip()} | " + "; ".join(_label_str(w) for w in self.labels)


def _dot(w, v) -> Fraction:
    if len(w) != len(v):
        raise ValueError(f"covector of length {len(w)} against vector of length {len(v)}")
    return sum((a * b for a, b in zip(w, v)), Fraction(0))


def functional_pair(gw, tw, odd: bool | None = None) -> Fraction:
    """<gamma_G(w), mu_T(v)>, bilinear over LinCombs in either slot."""
    if isinstance(gw, LinComb) or isinstance(tw, LinComb):
        total = Fraction(0)
        for g, c in lincomb(gw).items():
            for t, d in lincomb(tw).items():
                total += c * d * functional_pair(g, t, odd)
        return total
    if gw.n != tw.n:
        raise ValueError(f"size mismatch: {gw.n} covectors, {tw.n} vectors")
    if odd is not None and odd != gw.odd:
        raise TypeError("parity flag does not match the graph word")
    n = gw.n
    evals = [[_dot(gw.labels[j], tw.labels[i]) for j in range(n)] for i in range(n)]
    total = Fraction(0)
    for sigma in itertools.permutations(range(n)):
        weight = Fraction(1)
        for i, s in enumerate(sigma):
            weight *= evals[i][s]
            if not weight:
                break
        if not weight:
            continue
        m = {i + 1: s + 1 for i, s in enumerate(sigma)}
        total += weight * pair(gw.shape, Tree(relabel_node(tw.shape.root, m)))
    return total


# ---------------------------------------------------------------------------
# cobracket

def _component(cls, edges, keep: set, labels):
    """Labeled subgraph on ``keep``; vertices renumbered in order."""
    order = sorted(keep)
    m = {x: i + 1 for i, x in enumerate(order)}
    edges = tuple((m[a], m[b]) for a, b in edges if a in keep)
    return LabeledGraphWord(cls(len(order), edges), tuple(labels[x - 1] for x in order))


def cobracket(gw: LabeledGraphWord) -> LinComb:
    """Sum over edges e of G' (x) G'' - G'' (x) G', where deleting e leaves
    the components G' (holding the smaller endpoint of e) and G''.

    Even: an edge oriented from larger to smaller label contributes with a
    minus sign.  Odd: each term carries the sign of moving e to the front of
    the edge order and the remaining edges into (G' edges, G'' edges).
    """
    g = gw.shape
    if len(g.edges) != g.n - 1 or not g.is_connected:
        raise ValueError("cobracket needs a tree-shaped graph")
    out = LinComb()
    for p, e in enumerate(g.edges):
        rest = [x for q, x in enumerate(g.edges) if q != p]
        lo = min(e)
        side = {lo}
        grew = True
        while grew:
            grew = False
            for a, b in rest:
                if (a in side) != (b in side):
                    side |= {a, b}
                    grew = True
        other = set(range(1, g.n + 1)) - side
        g1 = _component(type(g), rest, side, gw.labels)
        g2 = _component(type(g), rest, other, gw.labels)
        if gw.odd:
            sign = perm_sign([p] + [q for q, x in enumerate(g.edges) if q != p and x[0] in side]
                             + [q for q, x in enumerate(g.edges) if q != p and x[0] not in side])
        else:
            sign = 1 if e[0] == lo else -1
        out.add((g1, g2), sign)
        out.add((g2, g1), -sign)
    return out


def swap(x: LinComb) -> LinComb:
    return LinComb(((b, a), c) for (a, b), c in x.items())


# ---------------------------------------------------------------------------
# well-definedness

def _random_vectors(n, ctx, rng, basis_only=True):
    if basis_only:
        return tuple(ctx.basis(rng.randrange(ctx.dim)) for _ in range(n))
    return tuple(ctx.vector([rng.randint(-2, 2) for _ in range(ctx.dim)]) for _ in range(n))


def multilinear_rank(n: int, odd: bool = False) -> int:
    """Rank of the pairing between graph words and tree words whose labels
    are the n distinct basis (co)vectors of Q^n."""
    ctx = VectorSpaceCtx(n)
    duals = tuple(ctx.dual(i) for i in range(n))
    graphs = enumerate_spanning_eographs(n) if odd else enumerate_spanning_graphs(n)
    rows = [LabeledGraphWord(g, duals) for g in graphs]
    comb = 1
    for k in range(2, n + 1):
        comb = (comb, k)
    cols = [LabeledTreeWord(Tree(comb), tuple(ctx.basis(p) for p in perm))
            for perm in itertools.permutations(range(n))]
    return rank([[functional_pair(g, t) for t in cols] for g in rows])


@dataclass
class WellDefinedReport:
    tree_relations: int = 0
    graph_relations: int = 0
    failures: list = field(default_factory=list)
    multilinear_rank: int | None = None
    expected_rank: int | None = None

    @property
    def ok(self) -> bool:
        return not self.failures and self.multilinear_rank == self.expected_rank


def verify_welldefined(n: int, d: int, odd: bool = False, samples: int = 50,
                       seed: int = 0, report: bool = False):
    """Relations vanish under the functional pairing, and the multilinear
    part pairs with rank (n-1)!.

    Relations are instantiated with basis vectors drawn with repetition from
    Q^d, so repeated labels are exercised; the multilinear rank check uses
    Q^n so that n distinct labels exist.
    """
    rng = random.Random(seed)
    ctx = VectorSpaceCtx(d)
    rep = WellDefinedReport()
    for _ in range(samples if n >= 2 else 0):
        rel = random_tree_relation(n, odd, rng)
        vs = _random_vectors(n, ctx, rng, rng.random() < 0.7)
        tw = LinComb((LabeledTreeWord(t, vs), c) for c, t in rel)
        rep.tree_relations += 1
        g = random_spanning(n, rng, odd)
        gw = LabeledGraphWord(g, _random_vectors(n, ctx, rng, rng.random() < 0.7))
        if functional_pair(gw, tw) != 0:
            rep.failures.append(("tree", [str(t) for _, t in rel], str(gw)))
        if n >= 2:
            grel = random_graph_relation(n, odd, rng)
            ws = _random_vectors(n, ctx, rng, rng.random() < 0.7)
            gw = LinComb((LabeledGraphWord(h, ws), c) for c, h in grel)
            rep.graph_relations += 1
            tw = LabeledTreeWord(random_tree(n, rng),
                                 _random_vectors(n, ctx, rng, rng.random() < 0.7))
            if functional_pair(gw, tw) != 0:
                rep.failures.append(("graph", [str(h) for _, h in grel], str(tw)))
    rep.multilinear_rank = multilinear_rank(n, odd)
    rep.expected_rank = math.factorial(n - 1)
    return rep if report else rep.ok


__all__ = [
    "LabeledGraphWord",
    "LabeledTreeWord",
    "VectorSpaceCtx",
    "WellDefinedReport",
    "cobracket",
    "functional_pair",
    "multilinear_rank",
    "swap",
    "verify_welldefined",
]
