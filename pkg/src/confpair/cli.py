"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 semantic error,
4 internal defect (including an exceeded rewrite bound).
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .core import BracketExpr, LabelError
from .functionals import LabeledGraphWord, LabeledTreeWord, VectorSpaceCtx, functional_pair
from .hopf import coproduct, diagram_product
from .lie import RewriteBoundExceeded, expand_to_long, expand_to_tall, leibniz_normalize, rank_of_grade, reduce_rewrite
from .lincomb import LinComb, TENSOR, coeff_str
from .operad import circ, cograft, graft
from .pairing import pair_bracket, pair_extended, pair_lincomb
from .suites import SUITES, VerifyConfig, run_suites
from .text import ParseError, parse, parse_lincomb

EXIT_OK, EXIT_VERIFY, EXIT_PARSE, EXIT_SEMANTIC, EXIT_DEFECT = 0, 1, 2, 3, 4


class VerifyFailed(Exception):
    def __init__(self, text, value, diagnostics):
        super().__init__(text)
        self.text, self.value, self.diagnostics = text, value, diagnostics


def _is_lincomb(text: str) -> bool:
    s = text.strip()
    return s == "0" or s[:1] in "+-"


def _gen_or_comb(kind, text: str):
    return parse_lincomb(kind, text) if _is_lincomb(text) else parse(kind, text)


def _graph_kind(odd: bool) -> str:
    return "eograph" if odd else "graph"


def _scalar(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------------------
# commands: each returns (text, json value, diagnostics)

def cmd_pair(a):
    gk = _graph_kind(a.odd)
    if a.bracket is not None:
        if a.diagram is None:
            raise ValueError("--bracket needs --diagram")
        d, b = parse(gk, a.diagram), parse("bracket", a.bracket)
        v = pair_bracket(d, b)
    elif a.forest is not None:
        if a.diagram is None:
            raise ValueError("--forest needs --diagram")
        d, f = parse(gk, a.diagram), parse("forest", a.forest)
        v = pair_extended(d, f)
    else:
        if a.graph is None or a.tree is None:
            raise ValueError("pair needs --graph and --tree, --diagram and --forest, or --diagram and --bracket")
        v = pair_lincomb(_gen_or_comb(gk, a.graph), _gen_or_comb("tree", a.tree))
    return _scalar(v), _scalar(v), {}


def cmd_reduce(a):
    given = [x for x in (a.tree, a.graph, a.bracket) if x is not None]
    if len(given) != 1:
        raise ValueError("reduce needs exactly one of --tree, --graph, --bracket")
    if a.bracket is not None:
        x = _gen_or_comb("bracket", a.bracket)
        out = LinComb()
        for b, c in (x.items() if isinstance(x, LinComb) else [(x, 1)]):
            out = out + leibniz_normalize(b, a.odd).scale(c)
        return str(out), str(out), {"kind": "forest"}
    if a.tree is not None:
        x, kind = _gen_or_comb("tree", a.tree), "tree"
        out = expand_to_tall(x, a.odd) if a.method == "expand" else reduce_rewrite(x, a.odd)
    else:
        kind = _graph_kind(a.odd)
        x = _gen_or_comb(kind, a.graph)
        out = expand_to_long(x) if a.method == "expand" else reduce_rewrite(x)
    return str(out), str(out), {"kind": kind, "method": a.method}


def cmd_rank(a):
    v = rank_of_grade(a.n, a.k, a.odd, a.side)
    return str(v), v, {"n": a.n, "k": a.k, "side": a.side}


def cmd_coproduct(a):
    out = coproduct(_gen_or_comb("forest", a.forest), a.odd)
    return str(out), str(out), {"kind": ["forest", "forest"]}


def cmd_product(a):
    gk = _graph_kind(a.odd)
    d1, d2 = parse(gk, a.d1), parse(gk, a.d2)
    explicit = [t for t in (a.d1, a.d2) if t.strip().startswith("n=")]
    if not explicit and d1.n != d2.n:
        # sizes inferred from the largest label; place both on the larger vertex set
        n = max(d1.n, d2.n)
        d1, d2 = type(d1)(n, d1.edges), type(d2)(n, d2.edges)
    d = diagram_product(d1, d2)
    return str(d), str(d), {"kind": gk}


def _factor(text: str):
    return parse("bracket" if "x" in text else "tree", text)


def cmd_graft(a):
    factors = [_factor(t) for t in a.factor]
    if len({type(f) for f in factors}) > 1:
        raise TypeError("factors must be all trees or all bracket expressions")
    out = graft(parse("rptree", a.tau), factors, a.odd)
    kind = "bracket" if isinstance(factors[0], BracketExpr) else "tree"
    return str(out), str(out), {"kind": kind}


def cmd_cograft(a):
    gk = _graph_kind(a.odd)
    res = cograft(parse("rptree", a.tau), parse(gk, a.diagram), a.odd)
    text = coeff_str(Fraction(res.sign)) + "*" + TENSOR.join(str(g) for g in res.factors)
    return text, text, {"kind": [gk] * len(res.factors), "sign": res.sign}


def cmd_circ(a):
    b1, b2 = _factor(a.b1), _factor(a.b2)
    out = circ(a.i, b1, b2)
    return str(out), str(out), {}


_LABEL = re.compile(r"\s*(\([^)]*\)|[A-Za-z]\w*\*?)\s*[;,]?")


def _labels(text: str):
    raw = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _LABEL.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError("expected a basis name or a coordinate tuple", text, pos)
        raw.append(m.group(1))
        pos = m.end()
    return raw


def _resolve(raw, ctx: VectorSpaceCtx):
    out = []
    for tok in raw:
        if tok.startswith("("):
            try:
                coords = [Fraction(c) for c in tok[1:-1].split(",")]
            except ValueError as exc:
                raise ParseError(f"bad coordinates {tok}") from exc
            out.append(ctx.vector(coords))
        else:
            name = tok.rstrip("*")
            if name not in ctx.names:
                raise ValueError(f"unknown basis vector {name!r}")
            out.append(ctx.named(name))
    return out


def cmd_functional_pair(a):
    raw_w, raw_v = _labels(a.covectors), _labels(a.vectors)
    dim = a.dim
    if dim is None:
        tuples = [t for t in raw_w + raw_v if t.startswith("(")]
        names = [t.rstrip("*") for t in raw_w + raw_v if not t.startswith("(")]
        if tuples:
            dim = len(tuples[0][1:-1].split(","))
        else:
            dim = max(ord(x[0]) - ord("a") + 1 for x in names) if names else 1
    ctx = VectorSpaceCtx(dim)
    g = parse(_graph_kind(a.odd), a.graph)
    t = parse("tree", a.tree)
    v = functional_pair(LabeledGraphWord(g, _resolve(raw_w, ctx)), LabeledTreeWord(t, _resolve(raw_v, ctx)))
    return _scalar(v), _scalar(v), {"dim": dim}


def cmd_verify(a):
    if a.max_n > 7:
        raise ValueError("verify supports --max-n up to 7")
    cfg = VerifyConfig(max_n=a.max_n, samples=a.samples, seed=a.seed)
    results = run_suites(cfg, a.suite)
    lines = []
    for r in results:
        line = f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.checks} checks, {len(r.failures)} failures"
        if a.timing:
            line += f" ({r.seconds:.1f}s)"
        lines.append(line)
        for f in r.failures[:3]:
            lines.append(f"    {f}")
    ok = all(r.ok for r in results)
    lines.append("all suites passed" if ok else "verification FAILED")
    diags = {"suites": [r.to_json(a.timing) for r in results], "seed": a.seed, "max_n": a.max_n}
    text = "\n".join(lines)
    if not ok:
        raise VerifyFailed(text, False, diags)
    return text, True, diags


# ---------------------------------------------------------------------------
# parser

def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--odd", action="store_true", default=argparse.SUPPRESS,
                   help="use the odd theory (eographs, odd signs)")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                   help="print a JSON object {status, value, diagnostics}")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="random seed (default 42)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = argparse.ArgumentParser(prog="confpair", parents=[common],
                                description="Exact computations with the graph-tree configuration pairing.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("pair", parents=[common], help="pair a graph with a tree")
    s.add_argument("--graph")
    s.add_argument("--tree")
    s.add_argument("--diagram")
    s.add_argument("--forest")
    s.add_argument("--bracket")
    s.set_defaults(func=cmd_pair)

    s = sub.add_parser("reduce", parents=[common], help="normal form in the quotient")
    s.add_argument("--tree")
    s.add_argument("--graph")
    s.add_argument("--bracket")
    s.add_argument("--method", choices=("expand", "rewrite"), default="expand")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("rank", parents=[common], help="rank of a graded pairing matrix")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int)
    s.add_argument("--side", choices=("lie", "poisson"), default="lie")
    s.set_defaults(func=cmd_rank)

    s = sub.add_parser("coproduct", parents=[common], help="coproduct of a forest")
    s.add_argument("--forest", required=True)
    s.set_defaults(func=cmd_coproduct)

    s = sub.add_parser("product", parents=[common], help="product of two diagrams")
    s.add_argument("--d1", required=True)
    s.add_argument("--d2", required=True)
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("graft", parents=[common], help="graft trees or brackets along an rp-tree")
    s.add_argument("--tau", required=True)
    s.add_argument("--factor", action="append", required=True,
                   help="one per vertex of tau, in pre-order; repeat the flag")
    s.set_defaults(func=cmd_graft)

    s = sub.add_parser("cograft", parents=[common], help="split a diagram along an rp-tree")
    s.add_argument("--tau", required=True)
    s.add_argument("--diagram", required=True)
    s.set_defaults(func=cmd_cograft)

    s = sub.add_parser("circ", parents=[common], help="partial composition b1 o_i b2")
    s.add_argument("--i", type=int, required=True)
    s.add_argument("--b1", required=True)
    s.add_argument("--b2", required=True)
    s.set_defaults(func=cmd_circ)

    s = sub.add_parser("functional-pair", parents=[common], help="pair a graph word with a tree word")
    s.add_argument("--graph", required=True)
    s.add_argument("--tree", required=True)
    s.add_argument("--covectors", required=True, help='e.g. "a*, b*" or "(1,0); (0,1)"')
    s.add_argument("--vectors", required=True, help='e.g. "a, b"')
    s.add_argument("--dim", type=int)
    s.set_defaults(func=cmd_functional_pair)

    s = sub.add_parser("verify", parents=[common], help="run the property suites")
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--samples", type=int, default=200)
    s.add_argument("--suite", action="append", choices=[name for name, _ in SUITES])
    s.add_argument("--timing", action="store_true", help="report seconds per suite")
    s.set_defaults(func=cmd_verify)
    return p


def _emit(a, status, text, value, diagnostics, out):
    if a.json:
        print(json.dumps({"status": status, "value": value, "diagnostics": diagnostics},
                         ensure_ascii=False, sort_keys=True), file=out)
    else:
        print(text, file=out)


def main(argv=None) -> int:
    parser = build_parser()
    a = parser.parse_args(argv)
    for name, default in (("odd", False), ("json", False), ("seed", 42)):
        if not hasattr(a, name):
            setattr(a, name, default)
    try:
        text, value, diags = a.func(a)
    except VerifyFailed as exc:
        _emit(a, "error", exc.text, exc.value, exc.diagnostics, sys.stdout)
        return EXIT_VERIFY
    except ParseError as exc:
        return _fail(a, "parse", exc, EXIT_PARSE)
    except RewriteBoundExceeded as exc:
        return _fail(a, "defect", exc, EXIT_DEFECT)
    except (ValueError, TypeError, LabelError) as exc:
        return _fail(a, "semantic", exc, EXIT_SEMANTIC)
    except Exception as exc:  # noqa: BLE001 - anything else is a bug
        return _fail(a, "defect", exc, EXIT_DEFECT)
    _emit(a, "ok", text, value, diags, sys.stdout)
    return EXIT_OK


def _fail(a, kind, exc, code) -> int:
    msg = f"{kind} error: {exc}"
    if a.json:
        _emit(a, "error", msg, None, {"error": str(exc), "kind": kind}, sys.stdout)
    else:
        print(msg, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
