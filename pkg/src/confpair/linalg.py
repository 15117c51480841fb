"""Exact rank over the rationals by sparse Gaussian elimination."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def rank(rows: Iterable[Sequence]) -> int:
    """Rank of a matrix given as rows of rationals (ints or Fractions).

    Rows are reduced one at a time against the pivots found so far, with
    pivots chosen by smallest column index, so the result does not depend
    on anything but the input order.
    """
    pivots: dict[int, dict[int, Fraction]] = {}
    for row in rows:
        vec = {j: Fraction(x) for j, x in enumerate(row) if x}
        while vec:
            col = min(vec)
            piv = pivots.get(col)
            if piv is None:
                lead = vec[col]
                pivots[col] = {j: x / lead for j, x in vec.items()}
                break
            factor = vec[col]
            for j, x in piv.items():
                y = vec.get(j, 0) - factor * x
                if y:
                    vec[j] = y
                else:
                    vec.pop(j, None)
    return len(pivots)
