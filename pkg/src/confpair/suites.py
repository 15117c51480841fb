"""Property suites run by ``confpair verify``.

Each suite checks one family of identities on exhaustive small cases and on
seeded random samples, and reports how many checks ran and which failed.
"""
from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field

from .core import (
    Bracket,
    BracketExpr,
    Dot,
    Forest,
    RpTree,
    catalan,
    enumerate_forests,
    enumerate_long,
    enumerate_long_odd,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    enumerate_tall,
    enumerate_trees,
    relabel_node,
    set_partitions,
)
from .functionals import (
    LabeledGraphWord,
    VectorSpaceCtx,
    cobracket,
    swap,
    verify_welldefined,
)
from .hopf import coproduct, diagram_product, tensor_pair
from .lie import (
    expand_to_long,
    expand_to_tall,
    forest_terms,
    leibniz_normalize,
    rank_of_grade,
    reduce_rewrite,
)
from .lincomb import LinComb
from .operad import (
    check_operad_compat,
    circ,
    circ_tau,
    cograft,
    contract,
    graft_single,
)
from .pairing import pair, pair_bracket, pair_extended, pairing_matrix
from . import sampling as S


@dataclass
class VerifyConfig:
    max_n: int = 5
    samples: int = 200
    seed: int = 42
    parities: tuple = (False, True)


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, cond: bool, detail) -> None:
        self.checks += 1
        if not cond and len(self.failures) < 20:
            self.failures.append(detail if isinstance(detail, str) else repr(detail))
        elif not cond:
            self.failures.append("...")

    def to_json(self, timing: bool = False) -> dict:
        out = {"name": self.name, "checks": self.checks, "failures": len(self.failures),
               "examples": self.failures[:5]}
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def _flavor(odd: bool) -> str:
    return "odd" if odd else "even"


# ---------------------------------------------------------------------------
# suites

def suite_enumeration(cfg, rng, r):
    for n in range(1, cfg.max_n + 1):
        r.check(len(enumerate_trees(n)) == math.factorial(n) * catalan(n - 1), f"tree count n={n}")
        if 2 <= n <= 6:
            r.check(len(enumerate_spanning_graphs(n)) == n ** (n - 2), f"spanning count n={n}")
        r.check(len(enumerate_tall(n)) == math.factorial(n - 1), f"tall count n={n}")
        r.check(len(enumerate_long(n)) == math.factorial(n - 1), f"long count n={n}")
        total = len(enumerate_forests(n))
        r.check(total == sum(
            math.prod(math.factorial(len(b)) * catalan(len(b) - 1) for b in p)
            for p in set_partitions(range(1, n + 1))), f"forest count n={n}")


def suite_duality(cfg, rng, r):
    for odd in cfg.parities:
        for n in range(2, cfg.max_n + 1):
            longs = enumerate_long_odd(n) if odd else enumerate_long(n)
            m = pairing_matrix(longs, enumerate_tall(n))
            ident = all(m[i][j] == (i == j) for i in range(len(m)) for j in range(len(m)))
            r.check(ident, f"{_flavor(odd)} long/tall matrix n={n}")


def suite_spanning_rank(cfg, rng, r):
    for odd in cfg.parities:
        for n in range(2, min(cfg.max_n, 5) + 1):
            got = rank_of_grade(n, odd=odd)
            r.check(got == math.factorial(n - 1), f"{_flavor(odd)} rank n={n}: {got}")


def suite_vanishing(cfg, rng, r):
    for odd in cfg.parities:
        for _ in range(cfg.samples):
            n = rng.randint(2, max(2, cfg.max_n))
            terms = S.random_tree_relation(n, odd, rng)
            for _ in range(5):
                g = S.random_spanning(n, rng, odd)
                v = sum(c * pair(g, t) for c, t in terms)
                r.check(v == 0, f"tree relation {[(c, str(t)) for c, t in terms]} vs {g}: {v}")
            terms = S.random_graph_relation(n, odd, rng)
            for _ in range(5):
                t = S.random_tree(n, rng)
                v = sum(c * pair(g, t) for c, g in terms)
                r.check(v == 0, f"graph relation {[(c, str(g)) for c, g in terms]} vs {t}: {v}")


def suite_normal_forms(cfg, rng, r):
    exhaustive = min(cfg.max_n, 5)
    for odd in cfg.parities:
        for n in range(1, exhaustive + 1):
            for t in enumerate_trees(n):
                r.check(expand_to_tall(t, odd) == reduce_rewrite(t, odd), f"{_flavor(odd)} tree {t}")
            graphs = enumerate_spanning_eographs(n) if odd else enumerate_spanning_graphs(n)
            for g in graphs:
                r.check(expand_to_long(g) == reduce_rewrite(g), f"{_flavor(odd)} graph {g}")
        n = cfg.max_n
        for _ in range(max(1, cfg.samples // 10)):
            x = S.random_lincomb(lambda q: S.random_tree(n, q), rng)
            r.check(expand_to_tall(x, odd) == reduce_rewrite(x, odd), f"{_flavor(odd)} lincomb {x}")
            y = S.random_lincomb(lambda q: S.random_spanning(n, q, odd), rng)
            r.check(expand_to_long(y) == reduce_rewrite(y), f"{_flavor(odd)} lincomb {y}")


def poisson_rank_formula(n: int, k: int) -> int:
    return sum(math.prod(math.factorial(len(b) - 1) for b in p)
               for p in set_partitions(range(1, n + 1)) if n - len(p) == k)


def suite_poisson_ranks(cfg, rng, r):
    for odd in cfg.parities:
        for n in range(1, min(cfg.max_n, 5) + 1):
            for k in range(n):
                got = rank_of_grade(n, k, odd=odd, side="poisson")
                want = poisson_rank_formula(n, k)
                r.check(got == want, f"{_flavor(odd)} poisson n={n} k={k}: {got} vs {want}")


def _bracket_size(node) -> int:
    """Number of bracket nodes."""
    if isinstance(node, int):
        return 0
    return int(isinstance(node, Bracket)) + _bracket_size(node.left) + _bracket_size(node.right)


def _substitute(node, site, sub):
    if isinstance(node, int):
        return sub if node == site else node
    return type(node)(_substitute(node.left, site, sub), _substitute(node.right, site, sub))


def leibniz_instance(n: int, rng):
    """(B, B', B'', sign): B = C[[X, Y*Z]], B' = C[Y*[X,Z]], B'' = C[[X,Y]*Z],
    with sign the odd reordering sign carried by B'."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    m = rng.randint(3, n)
    inner, outer = labels[:m], labels[m:]
    X, Y, Z = (S.bracket_node(p, rng) for p in S.split(inner, 3, rng))
    site = n + 1
    ctx = S.bracket_node(outer + [site], rng) if outer else site
    B = _substitute(ctx, site, Bracket(X, Dot(Y, Z)))
    B1 = _substitute(ctx, site, Dot(Y, Bracket(X, Z)))
    B2 = _substitute(ctx, site, Dot(Bracket(X, Y), Z))
    sign = (-1) ** (_bracket_size(Y) * (_bracket_size(X) + 1))
    return BracketExpr(B), BracketExpr(B1), BracketExpr(B2), sign


def _probe_diagram(b: BracketExpr, odd: bool, rng):
    forms = list(leibniz_normalize(b, odd))
    if forms and rng.random() < 0.8:
        return S.diagram_for(rng.choice(forms), rng, odd)
    return S.random_diagram(b.n, rng, odd)


def suite_leibniz(cfg, rng, r):
    if cfg.max_n < 3:
        return
    for odd in cfg.parities:
        for _ in range(cfg.samples):
            n = rng.randint(3, cfg.max_n)
            B, B1, B2, sign = leibniz_instance(n, rng)
            d = _probe_diagram(B, odd, rng)
            lhs = pair_bracket(d, B)
            rhs = (sign if odd else 1) * pair_bracket(d, B1) + pair_bracket(d, B2)
            r.check(lhs == rhs, f"{_flavor(odd)} Leibniz {B} vs {d}: {lhs} != {rhs}")
            b = S.random_bracket(n, rng)
            d = _probe_diagram(b, odd, rng)
            norm = leibniz_normalize(b, odd).pair(lambda f: pair_extended(d, f))
            r.check(pair_bracket(d, b) == norm, f"{_flavor(odd)} normalize {b} vs {d}")


def compat_instance(n: int, odd: bool, rng):
    f = S.random_forest(n, rng)
    if rng.random() < 0.7:
        g1, g2 = S.split_diagram(S.diagram_for(f, rng, odd), rng)
    else:
        k = rng.randint(0, n - 1)
        g1 = S.random_graph(n, rng, odd, rng.randint(0, k))
        g2 = S.random_graph(n, rng, odd, k - len(g1.edges) if k >= len(g1.edges) else 0)
    return f, g1, g2


def suite_coproduct(cfg, rng, r):
    for odd in cfg.parities:
        for _ in range(cfg.samples):
            n = rng.randint(1, min(cfg.max_n, 5))
            f, g1, g2 = compat_instance(n, odd, rng)
            lhs = pair_extended(diagram_product(g1, g2), f)
            rhs = tensor_pair(g1, g2, coproduct(f, odd))
            r.check(lhs == rhs, f"{_flavor(odd)} compat {f} | {g1} | {g2}: {lhs} != {rhs}")


def graded_swap(x: LinComb, odd: bool) -> LinComb:
    out = LinComb()
    for (a, b), c in x.items():
        s = (-1) ** (a.internal_count * b.internal_count) if odd else 1
        out.add((b, a), c * s)
    return out


def coassociativity_defect(f: Forest, odd: bool) -> LinComb:
    c = coproduct(f, odd)
    left, right = LinComb(), LinComb()
    for (a, b), x in c.items():
        for (p, q), y in coproduct(a, odd).items():
            left.add((p, q, b), x * y)
        for (p, q), y in coproduct(b, odd).items():
            right.add((a, p, q), x * y)
    return left - right


def suite_coalgebra(cfg, rng, r):
    for odd in cfg.parities:
        for n in range(1, min(cfg.max_n, 4) + 1):
            for f in enumerate_forests(n):
                c = coproduct(f, odd)
                r.check(graded_swap(c, odd) == c, f"{_flavor(odd)} cocommutativity {f}")
                r.check(not coassociativity_defect(f, odd), f"{_flavor(odd)} coassociativity {f}")


def suite_coproduct_descent(cfg, rng, r):
    if cfg.max_n < 2:
        return
    for odd in cfg.parities:
        for _ in range(max(1, cfg.samples // 4)):
            n = rng.randint(2, min(cfg.max_n, 5))
            m = rng.randint(2, n)
            labels = list(range(1, n + 1))
            rng.shuffle(labels)
            block, rest = labels[:m], labels[m:]
            relabel = {i + 1: x for i, x in enumerate(sorted(block))}
            terms = S.random_tree_relation(m, odd, rng)
            terms = [(c, relabel_node(t.root, relabel)) for c, t in terms]
            others = [S.tree_node(p, rng) for p in S.split(rest, rng.randint(1, len(rest)), rng)] if rest else []
            rel = LinComb((f, c) for c, f in forest_terms(terms, others))
            c = coproduct(rel, odd)
            probe = next(iter(rel))
            for _ in range(4):
                g1, g2 = S.split_diagram(S.diagram_for(probe, rng, odd), rng)
                r.check(tensor_pair(g1, g2, c) == 0, f"{_flavor(odd)} descent {rel} | {g1} | {g2}")


def operad_instance(rng, odd: bool, bracket: bool, max_n: int = 6):
    tau = S.random_rptree(rng, rng.randint(1, 4), max_n)
    factors = S.random_factors(tau, rng, bracket)
    gen, _ = graft_single(tau, factors, odd)
    n = tau.n
    if rng.random() < 0.7 and n > 1:
        forms = list(leibniz_normalize(gen, odd)) if bracket else [Forest((gen.root,))]
        d = S.diagram_for(rng.choice(forms), rng, odd) if forms else S.random_graph(n, rng, odd)
    else:
        d = S.random_graph(n, rng, odd)
    return tau, factors, d


def suite_operad(cfg, rng, r):
    top = min(cfg.max_n + 1, 6)
    for odd in cfg.parities:
        for bracket in (False, True):
            for _ in range(cfg.samples):
                tau, factors, d = operad_instance(rng, odd, bracket, top)
                r.check(check_operad_compat(tau, factors, d, odd, bracket),
                        f"{_flavor(odd)} {'bracket' if bracket else 'tree'} duality {tau} "
                        f"{[str(f) for f in factors]} {d}")
                out = cograft(tau, d, odd)
                r.check(sum(len(g.edges) for g in out.factors) == len(d.edges), f"edge count {tau} {d}")
    for _ in range(cfg.samples):
        a, b, c = (S.random_bracket(rng.randint(1, 4), rng) for _ in range(3))
        i, j = rng.randint(1, a.n), rng.randint(1, b.n)
        r.check(circ(i + j - 1, circ(i, a, b), c) == circ(i, a, circ(j, b, c)),
                f"circ associativity {a} {b} {c} {i} {j}")
        r.check(graft_single(circ_tau(a.n, i, b.n), [a, b])[0] == circ(i, a, b),
                f"circ as graft {a} {i} {b}")
    for _ in range(max(1, cfg.samples // 4)):
        tau = S.random_rptree(rng, rng.randint(1, 5))
        inner = [v for v in tau.vertices() if v]
        full = contract(tau, inner)
        r.check(full == RpTree.corolla(tau.n), f"contract to corolla {tau}")
        rng.shuffle(inner)
        k = rng.randint(0, len(inner))
        staged = contract(tau, inner[:k])
        r.check(contract(staged, [v for v in staged.vertices() if v]) == full, f"staged contraction {tau}")


def suite_operad_descent(cfg, rng, r):
    if cfg.max_n < 3:
        return
    for odd in cfg.parities:
        for _ in range(max(1, cfg.samples // 4)):
            tau = S.random_rptree(rng, rng.randint(1, 3), min(cfg.max_n + 1, 6), unary=False)
            if tau.n < 3:
                continue
            factors = S.random_factors(tau, rng)
            rel = S.random_graph_relation(tau.n, odd, rng)
            total = 0
            for c, g in rel:
                out = cograft(tau, g, odd)
                term = out.sign
                for h, t in zip(out.factors, factors):
                    term *= pair_extended(h, t)
                total += c * term
            r.check(total == 0, f"{_flavor(odd)} cograft descent {tau} {[(c, str(g)) for c, g in rel]}")


def suite_functionals(cfg, rng, r):
    for odd in cfg.parities:
        for n in range(1, min(cfg.max_n, 4) + 1):
            for d in (1, 2, 3):
                rep = verify_welldefined(n, d, odd, samples=max(5, cfg.samples // 10),
                                         seed=rng.randrange(2 ** 30), report=True)
                r.check(rep.ok, f"{_flavor(odd)} functional pairing n={n} d={d}: {rep.failures[:2]} "
                                f"rank {rep.multilinear_rank}/{rep.expected_rank}")
        ctx = VectorSpaceCtx(3)
        for _ in range(max(1, cfg.samples // 4)):
            n = rng.randint(1, min(cfg.max_n, 5))
            g = S.random_spanning(n, rng, odd)
            gw = LabeledGraphWord(g, tuple(ctx.basis(rng.randrange(3)) for _ in range(n)))
            c = cobracket(gw)
            r.check(swap(c) == -c, f"{_flavor(odd)} cobracket co-antisymmetry {gw}")


SUITES = [
    ("enumeration", suite_enumeration),
    ("long-tall-duality", suite_duality),
    ("spanning-rank", suite_spanning_rank),
    ("relation-vanishing", suite_vanishing),
    ("normal-form-oracles", suite_normal_forms),
    ("poisson-ranks", suite_poisson_ranks),
    ("leibniz", suite_leibniz),
    ("coproduct-compatibility", suite_coproduct),
    ("coalgebra-axioms", suite_coalgebra),
    ("coproduct-descent", suite_coproduct_descent),
    ("operad-duality", suite_operad),
    ("cograft-descent", suite_operad_descent),
    ("functional-pairing", suite_functionals),
]


def run_suites(cfg: VerifyConfig, only=None) -> list[SuiteResult]:
    """Run every suite in order; each gets its own generator derived from the seed."""
    out = []
    for name, fn in SUITES:
        if only and name not in only:
            continue
        rng = random.Random(f"{cfg.seed}:{name}")
        res = SuiteResult(name)
        t0 = time.perf_counter()
        fn(cfg, rng, res)
        res.seconds = time.perf_counter() - t0
        out.append(res)
    return out


__all__ = [
    "SUITES",
    "SuiteResult",
    "VerifyConfig",
    "coassociativity_defect",
    "compat_instance",
    "graded_swap",
    "leibniz_instance",
    "operad_instance",
    "poisson_rank_formula",
    "run_suites",
]
