"""Recompute the frozen reference values in tests/data/frozen.json.

Every value comes from tests/oracle.py, never from the library's own
algorithms, so the unit tests compare two independent computations.
"""
import json
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracle  # noqa: E402
from confpair.core import (  # noqa: E402
    Forest,
    enumerate_forests,
    enumerate_spanning_eographs,
    enumerate_spanning_graphs,
    enumerate_trees,
)
from confpair.text import parse  # noqa: E402


def pairing_tables():
    out = {}
    for n in (3, 4):
        for odd in (False, True):
            graphs = enumerate_spanning_eographs(n) if odd else enumerate_spanning_graphs(n)
            trees = enumerate_trees(n)
            out[f"{'odd' if odd else 'even'}-{n}"] = {
                "graphs": [str(g) for g in graphs],
                "trees": [str(t) for t in trees],
                "matrix": [[oracle.naive_pair(g.edges, t.root, odd, n) for t in trees] for g in graphs],
            }
    return out


def tall_expansion(tree_text):
    t = parse("tree", tree_text)
    n = t.n
    coeffs = {}
    for perm in oracle.perms_fixing_one(n):
        c = oracle.naive_pair(oracle.long_edges(perm), t.root, False, n)
        if c:
            coeffs[str(parse("tree", _node_text(oracle.tall(perm))))] = c
    return coeffs


def _node_text(node):
    if isinstance(node, int):
        return str(node)
    return f"[{_node_text(node[0])},{_node_text(node[1])}]"


def coproducts():
    out = {}
    forests = [parse("forest", s) for s in ("[1,2]", "[[1,2],3]", "[1,[2,3]]", "[[1,2],[3,4]]", "[1,3] ; [2,4]")]
    forests += enumerate_forests(4, 2)[:20]
    for f in forests:
        for odd in (False, True):
            c = oracle.coproduct_by_partitions(f, odd)
            out[f"{'odd' if odd else 'even'}|{f}"] = sorted([str(a), str(b), v] for (a, b), v in c.items())
    return out


def leibniz():
    out = {}
    for text in ("[x1,(x2*x3)]", "[(x1*x2),x3]", "[[x1,(x2*x3)],x4]", "[(x1*x2),(x3*x4)]", "([x1,x3]*x2)"):
        b = parse("bracket", text)
        res = oracle.leibniz_even(b.root)
        out[text] = sorted([str(Forest(tuple(k))), v] for k, v in res.items())
    return out


def main():
    data = {
        "pairing": pairing_tables(),
        "tall_expansion": {s: tall_expansion(s) for s in ("[[2,3],[1,4]]", "[1,[2,3]]", "[[3,1],[2,4]]")},
        "coproduct": coproducts(),
        "leibniz_even": leibniz(),
    }
    path = ROOT / "tests" / "data" / "frozen.json"
    path.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {path}")


if __name__ == "__main__":
    main()
