"""Exact rank over the rationals for small sparse matrices."""

from __future__ import annotations

from typing import Iterable, Mapping

from gmpy2 import mpq


def rank(rows: Iterable[Mapping[object, object]]) -> int:
    """Rank of a matrix given as sparse rows ``{column: value}``.

    Columns can be any hashable labels.  Gaussian elimination keyed on the
    smallest pivot label of each reduced row.
    """
    pivots: dict = {}
    for row in rows:
        r = {c: mpq(v) for c, v in row.items() if v}
        while r:
            col = min(r)
            p = pivots.get(col)
            if p is None:
                lead = r[col]
                pivots[col] = {c: v / lead for c, v in r.items()}
                break
            f = r[col]
            for c, v in p.items():
                nv = r.get(c, 0) - f * v
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
    return len(pivots)
