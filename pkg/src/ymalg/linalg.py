"""Exact linear algebra over Q(i).

Rows live as sparse Gaussian-integer vectors (denominators are cleared on
entry) and elimination is fraction-free: each update is a cross
multiplication followed by an integer content reduction, so no rational
division happens until rows are normalized for output.  Pivoting is exact,
on the first nonzero column of each incoming row.

Column keys only need to be hashable and mutually ordered (ints for dense
coordinates, tuples for the Witt index/central columns).
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence

from .scalars import GaussianRational


def _to_int_row(vec: Mapping) -> dict:
    """Clear denominators: {col: GaussianRational} -> {col: (a, b)} over Z[i]."""
    lcm = 1
    for c in vec.values():
        for den in (c.re.denominator, c.im.denominator):
            lcm = lcm * den // gcd(lcm, den)
    row = {}
    for col, c in vec.items():
        a = int(c.re * lcm)
        b = int(c.im * lcm)
        if a or b:
            row[col] = (a, b)
    return _content_reduce(row)


def _content_reduce(row: dict) -> dict:
    g = 0
    for a, b in row.values():
        g = gcd(g, gcd(abs(a), abs(b)))
        if g == 1:
            return row
    if g <= 1:
        return row
    return {col: (a // g, b // g) for col, (a, b) in row.items()}


def _gmul(x: tuple, y: tuple) -> tuple:
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


class Echelon:
    """Incremental exact row echelon form used for rank and membership."""

    def __init__(self):
        self._rows: dict = {}  # pivot column -> sparse Gaussian-integer row

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def pivots(self) -> list:
        return sorted(self._rows)

    def _reduce(self, row: dict) -> dict:
        # eliminate against stored pivots; each step zeroes the current
        # leading column and only introduces later columns, so this terminates
        while row:
            col = min(row)
            pivot_row = self._rows.get(col)
            if pivot_row is None:
                return row
            lead_p = pivot_row[col]
            lead_r = row[col]
            new = {c: _gmul(lead_p, v) for c, v in row.items()}
            for c, v in pivot_row.items():
                sub = _gmul(lead_r, v)
                cur = new.get(c, (0, 0))
                val = (cur[0] - sub[0], cur[1] - sub[1])
                if val == (0, 0):
                    new.pop(c, None)
                else:
                    new[c] = val
            row = _content_reduce(new)
        return row

    def insert(self, vec: Mapping) -> bool:
        """Add a vector ({col: GaussianRational}); True if it was independent."""
        row = self._reduce(_to_int_row(vec))
        if not row:
            return False
        self._rows[min(row)] = row
        return True

    def insert_dense(self, values: Sequence) -> bool:
        return self.insert({i: c for i, c in enumerate(values) if c})

    def contains(self, vec: Mapping) -> bool:
        return not self._reduce(_to_int_row(vec))

    def contains_dense(self, values: Sequence) -> bool:
        return self.contains({i: c for i, c in enumerate(values) if c})

    def rref(self, columns: Sequence) -> list:
        """Canonical reduced rows (dense Q(i) vectors in the given column
        order, leading coefficient 1, zeros above pivots), sorted by pivot."""
        order = {col: k for k, col in enumerate(columns)}
        rows = []
        for pivot in sorted(self._rows, key=lambda c: order[c]):
            raw = self._rows[pivot]
            lead = GaussianRational(*raw[pivot])
            dense = [GaussianRational(0)] * len(columns)
            for col, (a, b) in raw.items():
                dense[order[col]] = GaussianRational(a, b) / lead
            rows.append(dense)
        # clear entries above every pivot
        pivots = [min(order[c] for c, v in zip(columns, r) if v) if any(r) else None
                  for r in rows]
        for i in range(len(rows) - 1, -1, -1):
            p = pivots[i]
            for j in range(i):
                factor = rows[j][p]
                if factor:
                    rows[j] = [
                        x - factor * y for x, y in zip(rows[j], rows[i])
                    ]
        return rows


def rref(matrix: Iterable[Sequence], ncols: int) -> list:
    """Reduced row-echelon form of a dense Q(i) matrix; zero rows dropped."""
    ech = Echelon()
    for row in matrix:
        ech.insert_dense(row)
    return ech.rref(range(ncols))


def rank(matrix: Iterable[Sequence]) -> int:
    ech = Echelon()
    for row in matrix:
        ech.insert_dense(row)
    return ech.dim


def reduce_against_rref(
    rows: Sequence[Sequence], pivots: Sequence[int], vec: Sequence
) -> list:
    """Residue of ``vec`` modulo the row space of a canonical RREF matrix."""
    v = list(vec)
    for row, p in zip(rows, pivots):
        factor = v[p]
        if factor:
            v = [x - factor * y for x, y in zip(v, row)]
    return v
