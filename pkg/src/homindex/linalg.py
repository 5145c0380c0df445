"""Incremental exact row echelon form for sparse rational vectors.

Rows are dicts ``{column: value}``.  Values are cleared to integers on entry
and elimination is fraction-free (primitive rows, integer pivots), which keeps
the truncated linear-algebra routines fast without giving up exactness.
"""

from fractions import Fraction
from math import gcd, lcm


def _integral(row):
    den = 1
    for v in row.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    return {k: int(v * den) for k, v in row.items() if v}


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class Echelon:
    """Accumulates rows and tracks their rank.

    ``pivot_order`` decides which column of a row becomes its pivot: the
    smallest column under that key (default: natural order).
    """

    def __init__(self, pivot_key=None):
        self.pivots = {}
        self.pivot_key = pivot_key

    @property
    def rank(self):
        return len(self.pivots)

    def _pivot(self, row):
        return min(row, key=self.pivot_key) if self.pivot_key else min(row)

    def reduce(self, row):
        row = _integral(row)
        while row:
            col = self._pivot(row)
            prow = self.pivots.get(col)
            if prow is None:
                return row
            a, b = row[col], prow[col]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            out = {k: v * fa for k, v in row.items()}
            for k, v in prow.items():
                w = out.get(k, 0) - fb * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            row = _primitive(out)
        return row

    def add(self, row):
        """Insert ``row``; return True when it raised the rank."""
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[self._pivot(row)] = _primitive(row)
        return True

    def extend(self, rows):
        return sum(1 for r in rows if self.add(r))

    def contains(self, row):
        return not self.reduce(row)


def rank(rows):
    ech = Echelon()
    ech.extend(rows)
    return ech.rank
