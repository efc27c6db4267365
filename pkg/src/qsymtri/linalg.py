"""Fraction-free row echelon forms over the integers, on sparse rows.

A sparse row is a ``dict`` mapping column index to a nonzero ``int``.  The
pivot of a row is its smallest column.  All arithmetic is exact; rows are
kept primitive (content 1, positive pivot) so entries stay small.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable

SparseRow = dict[int, int]


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {c: v // g for c, v in row.items()}
    return row


class Echelon:
    """Incrementally built integer row echelon form.

    ``insert`` reduces a row against the current pivots using integer
    cross-multiplication (no division except by exact contents) and keeps
    it if a nonzero remainder is left.  ``rank`` is therefore exact.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def is_full(self) -> bool:
        return len(self.pivots) == self.ncols

    def reduce(self, row: SparseRow) -> SparseRow:
        """Eliminate pivots from the front of ``row`` until its leading column is free.

        The result is zero iff ``row`` lies in the rational span of the pivot rows.
        """
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            prow = self.pivots.get(col)
            if prow is None:
                return _primitive(row)
            a, b = prow[col], row[col]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new: SparseRow = {c: v * fa for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - fb * v
                if nv:
                    new[c] = nv
                else:
                    del new[c]
            row = _primitive(new) if new else new
        return row

    def insert(self, row: SparseRow) -> bool:
        """Add ``row``; return True iff it was independent of the current rows."""
        if self.is_full():
            return False
        rem = self.reduce(row)
        if not rem:
            return False
        self.pivots[min(rem)] = rem
        return True

    def extend(self, rows: Iterable[SparseRow], stop_when_full: bool = True) -> int:
        added = 0
        for row in rows:
            if stop_when_full and self.is_full():
                break
            added += self.insert(row)
        return added

    def copy(self) -> Echelon:
        other = Echelon(self.ncols)
        other.pivots = dict(self.pivots)
        return other

    def rows(self) -> list[SparseRow]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def exact_rank(rows: Iterable[SparseRow], ncols: int) -> int:
    ech = Echelon(ncols)
    ech.extend(rows)
    return ech.rank


def rank_mod_p(rows: Iterable[SparseRow], p: int = 2_147_483_647) -> int:
    """Rank modulo the prime ``p``; a lower bound for the rational rank."""
    pivots: dict[int, SparseRow] = {}
    for row in rows:
        row = {c: v % p for c, v in row.items() if v % p}
        while row:
            col = min(row)
            prow = pivots.get(col)
            if prow is None:
                inv = pow(row[col], -1, p)
                pivots[col] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[col]
            for c, v in prow.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)
