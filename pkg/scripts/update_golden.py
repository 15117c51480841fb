"""Regenerate tests/golden/*.out from tests/golden/cases.json.

Each file holds the exit code on the first line, then stdout verbatim.
Review the diff before committing: these files are the reference outputs.
"""
import contextlib
import io
import json
import sys
from pathlib import Path

from confpair.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(argv)
    return f"exit {code}\n" + out.getvalue() + ("stderr: " + err.getvalue() if err.getvalue() else "")


if __name__ == "__main__":
    cases = json.loads((GOLDEN / "cases.json").read_text())
    only = set(sys.argv[1:])
    for case in cases:
        if only and case["name"] not in only:
            continue
        (GOLDEN / f"{case['name']}.out").write_text(run(case["argv"]), encoding="utf-8")
        print(case["name"])
