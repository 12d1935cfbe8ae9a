"""Exact sparse Gaussian elimination over the rationals."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Hashable, List, Optional, Sequence, Tuple

Row = Dict[int, Fraction]


class Echelon:
    """Incrementally built row-echelon basis.

    Each inserted row is reduced against the existing pivots, always taking its
    lowest column first, so results do not depend on anything but input order.
    """

    def __init__(self):
        self.pivots: Dict[int, Tuple[Row, Fraction]] = {}
        self.inconsistent = False

    def insert(self, row: Row, rhs=0) -> bool:
        """Insert a row; True if it raised the rank."""
        row = {c: Fraction(v) for c, v in row.items() if v}
        b = Fraction(rhs)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                inv = 1 / row[c]
                self.pivots[c] = ({k: v * inv for k, v in row.items()}, b * inv)
                return True
            prow, pb = piv
            f = row[c]
            for k, v in prow.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
            b -= f * pb
        if b:
            self.inconsistent = True
        return False

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def back_substitute(self, n_cols: int) -> List[Fraction]:
        u = [Fraction(0)] * n_cols
        for col in sorted(self.pivots, reverse=True):
            row, b = self.pivots[col]
            u[col] = b - sum(v * u[k] for k, v in row.items() if k != col)
        return u


def rank(rows: Sequence[Row]) -> int:
    ech = Echelon()
    for r in rows:
        ech.insert(r)
    return ech.rank


def solve(rows: Sequence[Row], rhs: Sequence, n_cols: int) -> Optional[List[Fraction]]:
    """One solution of ``A u = rhs`` (free variables set to 0), or None."""
    ech = Echelon()
    for r, b in zip(rows, rhs):
        ech.insert(r, b)
    if ech.inconsistent:
        return None
    return ech.back_substitute(n_cols)


class SparseSystem:
    """Linear system whose equations are indexed by hashable keys (monomials)."""

    def __init__(self):
        self.columns: List[Hashable] = []
        self._eqs: Dict[Hashable, Row] = {}
        self._rhs: Dict[Hashable, Fraction] = {}

    def add_column(self, label: Hashable, entries: Dict[Hashable, Fraction]) -> int:
        col = len(self.columns)
        self.columns.append(label)
        for key, v in entries.items():
            if v:
                self._eqs.setdefault(key, {})[col] = Fraction(v)
        return col

    def set_rhs(self, entries: Dict[Hashable, Fraction]):
        for key, v in entries.items():
            if v:
                self._rhs[key] = Fraction(v)
                self._eqs.setdefault(key, {})

    def solve(self) -> Optional[List[Fraction]]:
        keys = sorted(self._eqs, key=repr)
        return solve([self._eqs[k] for k in keys], [self._rhs.get(k, 0) for k in keys],
                     len(self.columns))
