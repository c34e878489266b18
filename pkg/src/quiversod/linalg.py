"""Sparse exact row reduction over the rationals.

Rows are dicts ``{column: Fraction}``.  Columns are integers; the pivot of
a row is its smallest column, so callers control which monomials end up as
pivots (and which survive as the standard basis) through the numbering.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class RowEchelon:
    """Incrementally maintained reduced row echelon form of a span."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict[int, Fraction]] = {}
        # column -> pivot columns whose row has a nonzero entry there
        self._users: dict[int, set[int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, row: Mapping[int, Fraction]) -> dict[int, Fraction]:
        """Remainder of ``row`` modulo the span; supported on non-pivot columns."""
        out = {c: Fraction(v) for c, v in row.items() if v}
        for c in [c for c in out if c in self.pivots]:
            coef = out.pop(c)
            for cc, vv in self.pivots[c].items():
                if cc == c:
                    continue
                nv = out.get(cc, 0) - coef * vv
                if nv:
                    out[cc] = nv
                else:
                    out.pop(cc, None)
        return out

    def add(self, row: Mapping[int, Fraction]) -> bool:
        """Insert a row; returns True when it enlarged the span."""
        rem = self.reduce(row)
        if not rem:
            return False
        p = min(rem)
        inv = 1 / rem[p]
        new = {c: v * inv for c, v in rem.items()}
        # eliminate p from existing pivot rows
        for q in list(self._users.get(p, ())):
            prow = self.pivots[q]
            coef = prow.pop(p)
            self._users[p].discard(q)
            for c, v in new.items():
                if c == p:
                    continue
                nv = prow.get(c, 0) - coef * v
                if nv:
                    if c not in prow:
                        self._users.setdefault(c, set()).add(q)
                    prow[c] = nv
                else:
                    if c in prow:
                        del prow[c]
                        self._users[c].discard(q)
        self._users.pop(p, None)
        self.pivots[p] = new
        for c in new:
            if c != p:
                self._users.setdefault(c, set()).add(p)
        return True

    def extend(self, rows: Iterable[Mapping[int, Fraction]]) -> int:
        return sum(1 for r in rows if self.add(r))

    def free_columns(self) -> list[int]:
        return [c for c in range(self.ncols) if c not in self.pivots]


def rank(rows: Iterable[Mapping[int, Fraction]], ncols: int) -> int:
    ech = RowEchelon(ncols)
    ech.extend(rows)
    return ech.rank
