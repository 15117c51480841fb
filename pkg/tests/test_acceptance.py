"""Acceptance gate: one test per criterion, each reported as a PASS/FAIL line
in the terminal summary (see conftest.py)."""
import contextlib
import io
import json
import math
import random
import subprocess
import sys
import time
from pathlib import Path

import pytest

from confpair.core import (
    enumerate_forests,
    enumerate_long,
    enumerate_long_odd,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    enumerate_tall,
    enumerate_trees,
)
from confpair.functionals import (
    LabeledGraphWord,
    VectorSpaceCtx,
    cobracket,
    multilinear_rank,
    swap,
    verify_welldefined,
)
from confpair.hopf import coproduct, diagram_product, tensor_pair
from confpair.lie import expand_to_long, expand_to_tall, leibniz_normalize, rank_of_grade, reduce_rewrite
from confpair.operad import check_operad_compat, circ
from confpair.pairing import pair, pair_bracket, pair_extended, pairing_matrix
from confpair.suites import (
    coassociativity_defect,
    compat_instance,
    graded_swap,
    leibniz_instance,
    operad_instance,
    poisson_rank_formula,
)
from confpair import sampling as S
from confpair.text import parse, parse_lincomb

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"
PARITIES = (False, True)


def flavor(odd):
    return "odd" if odd else "even"


@pytest.mark.criterion(1, "long/tall pairing matrices are identities, n=2..6, both parities")
def test_c01_duality_matrices():
    t0 = time.perf_counter()
    for odd in PARITIES:
        for n in range(2, 7):
            longs = enumerate_long_odd(n) if odd else enumerate_long(n)
            m = pairing_matrix(longs, enumerate_tall(n))
            size = math.factorial(n - 1)
            assert len(m) == size and all(len(row) == size for row in m)
            assert all(m[i][j] == (1 if i == j else 0) for i in range(size) for j in range(size)), (odd, n)
    assert time.perf_counter() - t0 < 60


@pytest.mark.criterion(2, "full spanning pairing matrix has rank (n-1)!, n=2..5, both parities")
def test_c02_spanning_rank():
    t0 = time.perf_counter()
    for odd in PARITIES:
        for n in range(2, 6):
            assert rank_of_grade(n, odd=odd) == math.factorial(n - 1), (odd, n)
    assert time.perf_counter() - t0 < 300


@pytest.mark.criterion(3, "Jacobi/symmetry and Arnold/symmetry relations pair to zero")
def test_c03_vanishing():
    rng = random.Random("c03")
    for odd in PARITIES:
        counts = {"tree": 0, "graph": 0}
        for k in range(1000):
            n = 2 + k % 6
            terms = S.random_tree_relation(n, odd, rng)
            for _ in range(5):
                g = S.random_spanning(n, rng, odd)
                assert sum(c * pair(g, t) for c, t in terms) == 0, (odd, terms, g)
            counts["tree"] += 1
            terms = S.random_graph_relation(n, odd, rng)
            for _ in range(5):
                t = S.random_tree(n, rng)
                assert sum(c * pair(g, t) for c, g in terms) == 0, (odd, terms, t)
            counts["graph"] += 1
        assert counts == {"tree": 1000, "graph": 1000}


@pytest.mark.criterion(4, "worked example expands to [[[1,4],3],2] - [[[1,4],2],3]")
def test_c04_worked_example():
    got = expand_to_tall(parse("tree", "[[2,3],[1,4]]"))
    assert got == parse_lincomb("tree", "+1*[[[1,4],3],2] -1*[[[1,4],2],3]")
    assert str(got) == "-1*[[[1,4],2],3] +1*[[[1,4],3],2]"


@pytest.mark.criterion(5, "expansion and rewriting normal forms agree")
def test_c05_oracle_equivalence():
    for odd in PARITIES:
        for n in range(1, 6):
            for t in enumerate_trees(n):
                assert expand_to_tall(t, odd) == reduce_rewrite(t, odd), (odd, t)
            graphs = enumerate_spanning_eographs(n) if odd else enumerate_spanning_graphs(n)
            for g in graphs:
                assert expand_to_long(g) == reduce_rewrite(g), (odd, g)
    rng = random.Random("c05")
    for k in range(500):
        odd = bool(k % 2)
        x = S.random_lincomb(lambda q: S.random_tree(6, q), rng)
        assert expand_to_tall(x, odd) == reduce_rewrite(x, odd), x
        y = S.random_lincomb(lambda q: S.random_spanning(6, q, odd), rng)
        assert expand_to_long(y) == reduce_rewrite(y), y


@pytest.mark.criterion(6, "Poisson graded ranks match the partition formula, n=3..5")
def test_c06_poisson_ranks():
    for odd in PARITIES:
        for n in range(3, 6):
            for k in range(n):
                assert rank_of_grade(n, k, odd=odd, side="poisson") == poisson_rank_formula(n, k), (odd, n, k)


@pytest.mark.criterion(7, "Leibniz identity and normalization agree with direct bracket pairing")
def test_c07_leibniz():
    rng = random.Random("c07")
    for odd in PARITIES:
        for k in range(1000):
            n = 3 + k % 4
            B, B1, B2, sign = leibniz_instance(n, rng)
            forms = list(leibniz_normalize(B, odd))
            d = S.diagram_for(rng.choice(forms), rng, odd) if forms and rng.random() < 0.8 \
                else S.random_diagram(n, rng, odd)
            lhs = pair_bracket(d, B)
            rhs = (sign if odd else 1) * pair_bracket(d, B1) + pair_bracket(d, B2)
            assert lhs == rhs, (odd, str(B), str(d))
            for b in (B, B1, B2):
                norm = leibniz_normalize(b, odd).pair(lambda f: pair_extended(d, f))
                assert pair_bracket(d, b) == norm, (odd, str(b), str(d))


@pytest.mark.criterion(8, "coproduct dual to diagram product; coassociative and cocommutative")
def test_c08_coproduct():
    rng = random.Random("c08")
    for odd in PARITIES:
        nontrivial = 0
        for k in range(2000):
            n = 1 + k % 5
            f, g1, g2 = compat_instance(n, odd, rng)
            lhs = pair_extended(diagram_product(g1, g2), f)
            assert lhs == tensor_pair(g1, g2, coproduct(f, odd)), (odd, str(f), str(g1), str(g2))
            nontrivial += lhs != 0
        assert nontrivial > 500
        for n in range(1, 5):
            for f in enumerate_forests(n):
                c = coproduct(f, odd)
                assert graded_swap(c, odd) == c, (odd, str(f))
                assert not coassociativity_defect(f, odd), (odd, str(f))


@pytest.mark.criterion(9, "grafting dual to cografting, tree and bracket modes; circ associative")
def test_c09_operad():
    rng = random.Random("c09")
    for odd in PARITIES:
        for _ in range(2000):
            tau, factors, d = operad_instance(rng, odd, bracket=False, max_n=6)
            assert len(tau.vertices()) <= 4 and tau.n <= 6
            assert check_operad_compat(tau, factors, d, odd), (odd, str(tau), [str(x) for x in factors], str(d))
        for _ in range(1000):
            tau, factors, d = operad_instance(rng, odd, bracket=True, max_n=6)
            assert check_operad_compat(tau, factors, d, odd, bracket_mode=True), \
                (odd, str(tau), [str(x) for x in factors], str(d))
    for _ in range(500):
        a, b, c = (S.random_bracket(rng.randint(1, 4), rng) for _ in range(3))
        i, j = rng.randint(1, a.n), rng.randint(1, b.n)
        assert circ(i + j - 1, circ(i, a, b), c) == circ(i, a, circ(j, b, c)), (str(a), str(b), str(c), i, j)


@pytest.mark.criterion(10, "functional pairing well defined and nondegenerate; cobracket co-antisymmetric")
def test_c10_functionals():
    for odd in PARITIES:
        for n in range(1, 5):
            for d in range(1, 4):
                rep = verify_welldefined(n, d, odd, samples=40, seed=100 * n + d, report=True)
                assert rep.ok, (odd, n, d, rep.failures[:2], rep.multilinear_rank)
            assert multilinear_rank(n, odd) == math.factorial(n - 1)
    rng = random.Random("c10")
    ctx = VectorSpaceCtx(3)
    for k in range(500):
        odd = bool(k % 2)
        n = 1 + k % 5
        g = S.random_spanning(n, rng, odd)
        gw = LabeledGraphWord(g, tuple(ctx.basis(rng.randrange(3)) for _ in range(n)))
        c = cobracket(gw)
        assert swap(c) == -c, str(gw)


def _render(argv):
    from confpair.cli import main
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return f"exit {code}\n" + out.getvalue() + ("stderr: " + err.getvalue() if err.getvalue() else "")


@pytest.mark.criterion(11, "verify --max-n 5 exits 0 within 10 minutes; golden files byte-exact")
def test_c11_cli():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "confpair", "verify", "--max-n", "5", "--seed", "42"],
                          capture_output=True, text=True, timeout=600, check=False)
    elapsed = time.perf_counter() - t0
    assert proc.returncode == 0, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert elapsed < 600
    for case in json.loads((GOLDEN / "cases.json").read_text()):
        want = (GOLDEN / f"{case['name']}.out").read_text(encoding="utf-8")
        assert _render(case["argv"]) == want, case["name"]

