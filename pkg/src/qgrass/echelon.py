"""Exact reduced row-echelon bases over a fixed, ordered set of coordinates.

Rows are stored as integer vectors (gcd-normalised, leading entry positive)
and kept fully reduced against one another; unit-pivot rational rows are
produced on demand.  Pivoting is by first nonzero column - no numerical
heuristics are involved anywhere.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Mapping, Sequence


def _normalized(row: list[int]) -> list[int]:
    g = 0
    lead = 0
    for a in row:
        g = gcd(g, a)
        if lead == 0 and a:
            lead = a
    if g == 0:
        return row
    if lead < 0:
        g = -g
    return [a // g for a in row]


class DegreeSlice:
    """Reduced-echelon basis of one graded piece, over a fixed column order."""

    def __init__(self, degree: int, columns: Sequence[Hashable]):
        self.degree = degree
        self.columns = tuple(columns)
        self._index = {c: i for i, c in enumerate(self.columns)}
        self._rows: list[list[int]] = []
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def saturated(self) -> bool:
        return len(self._rows) == len(self.columns)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(self._pivots)

    def _to_int_row(self, vec: Mapping[Hashable, Fraction | int]) -> list[int]:
        row = [0] * len(self.columns)
        denom = 1
        for key, val in vec.items():
            idx = self._index.get(key)
            if idx is None:
                raise ValueError(f"coordinate {key!r} is not a column of this degree slice")
            val = Fraction(val)
            denom = lcm(denom, val.denominator)
        for key, val in vec.items():
            val = Fraction(val)
            row[self._index[key]] = int(val * denom)
        return row

    def _reduced(self, row: list[int]) -> list[int]:
        for prow, p in zip(self._rows, self._pivots):
            c = row[p]
            if c:
                lead = prow[p]
                row = _normalized([a * lead - b * c for a, b in zip(row, prow)])
        return row

    def add_vector(self, vec: Mapping[Hashable, Fraction | int]) -> bool:
        """Insert a vector, returning True when it enlarges the span."""
        row = self._reduced(self._to_int_row(vec))
        if not any(row):
            return False
        row = _normalized(row)
        pivot = next(i for i, a in enumerate(row) if a)
        lead = row[pivot]
        for i, prow in enumerate(self._rows):
            c = prow[pivot]
            if c:
                self._rows[i] = _normalized([a * lead - b * c for a, b in zip(prow, row)])
        pos = bisect_left(self._pivots, pivot)
        self._rows.insert(pos, row)
        self._pivots.insert(pos, pivot)
        return True

    def contains_vector(self, vec: Mapping[Hashable, Fraction | int]) -> bool:
        """True when the vector reduces to zero against the basis."""
        return not any(self._reduced(self._to_int_row(vec)))

    def basis_rows(self) -> list[dict[Hashable, Fraction]]:
        """Basis in reduced echelon form with unit pivots, as sparse mappings."""
        out = []
        for row, p in zip(self._rows, self._pivots):
            lead = row[p]
            out.append({self.columns[i]: Fraction(a, lead) for i, a in enumerate(row) if a})
        return out
