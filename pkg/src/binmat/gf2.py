"""Bit-packed linear algebra over GF(2).

Rows are stored as Python ints: bit ``j`` of ``rows[i]`` is entry ``(i, j)``.
Row XOR is a single int operation, which is what rank and span queries need.
Column work goes through :meth:`GF2Matrix.transpose` or :meth:`GF2Matrix.column`.
"""

from __future__ import annotations

from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class GF2Matrix:
    nrows: int
    ncols: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.nrows < 0 or self.ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        if len(self.rows) != self.nrows:
            raise ValueError(f"expected {self.nrows} rows, got {len(self.rows)}")
        limit = 1 << self.ncols
        for r in self.rows:
            if r < 0 or r >= limit:
                raise ValueError("row has bits beyond the column count")

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> GF2Matrix:
        return cls(nrows, ncols, (0,) * nrows)

    @classmethod
    def identity(cls, n: int) -> GF2Matrix:
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def from_lists(cls, data: Sequence[Sequence[int]], ncols: int | None = None) -> GF2Matrix:
        """Build from nested 0/1 sequences (or strings like ``"1101"``)."""
        if ncols is None:
            ncols = len(data[0]) if data else 0
        rows = []
        for line in data:
            if len(line) != ncols:
                raise ValueError("ragged matrix rows")
            v = 0
            for j, x in enumerate(line):
                if int(x) & 1:
                    v |= 1 << j
            rows.append(v)
        return cls(len(rows), ncols, tuple(rows))

    @classmethod
    def from_columns(cls, cols: Sequence[int], nrows: int) -> GF2Matrix:
        """Build from column bitmasks (bit ``i`` of a column is row ``i``)."""
        rows = [0] * nrows
        for j, c in enumerate(cols):
            i = 0
            while c:
                if c & 1:
                    rows[i] |= 1 << j
                c >>= 1
                i += 1
        return cls(nrows, len(cols), tuple(rows))

    # -- access --------------------------------------------------------
    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return (self.rows[i] >> j) & 1

    def to_lists(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def column(self, j: int) -> int:
        c = 0
        for i, r in enumerate(self.rows):
            if (r >> j) & 1:
                c |= 1 << i
        return c

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> GF2Matrix:
        return GF2Matrix(self.ncols, self.nrows, tuple(self.column(j) for j in range(self.ncols)))

    def select_columns(self, cols: Sequence[int]) -> GF2Matrix:
        rows = []
        for r in self.rows:
            v = 0
            for k, j in enumerate(cols):
                if (r >> j) & 1:
                    v |= 1 << k
            rows.append(v)
        return GF2Matrix(self.nrows, len(cols), tuple(rows))

    def select_rows(self, idx: Sequence[int]) -> GF2Matrix:
        return GF2Matrix(len(idx), self.ncols, tuple(self.rows[i] for i in idx))

    def hstack(self, other: GF2Matrix) -> GF2Matrix:
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        rows = tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows))
        return GF2Matrix(self.nrows, self.ncols + other.ncols, rows)

    def __str__(self) -> str:
        return "\n".join("".join(str((r >> j) & 1) for j in range(self.ncols)) for r in self.rows)


def rank_of_vectors(vectors: Iterable[int]) -> int:
    """GF(2) rank of a collection of bitmask vectors."""
    basis: list[int] = []  # ascending; distinct leading bits
    for v in vectors:
        for b in reversed(basis):
            v = min(v, v ^ b)
        if v:
            insort(basis, v)
    return len(basis)


def reduce_vector(v: int, basis: Sequence[int]) -> int:
    """Reduce ``v`` against a basis kept in descending order of leading bit."""
    for b in basis:
        v = min(v, v ^ b)
    return v


def rank(m: GF2Matrix) -> int:
    return rank_of_vectors(m.rows)


def rref(m: GF2Matrix) -> tuple[GF2Matrix, list[int]]:
    """Reduced row echelon form and the (increasing) pivot columns.

    Pivot choice is deterministic: columns left to right, lowest available row.
    """
    rows = list(m.rows)
    pivots: list[int] = []
    top = 0
    for j in range(m.ncols):
        bit = 1 << j
        hit = next((i for i in range(top, len(rows)) if rows[i] & bit), None)
        if hit is None:
            continue
        rows[top], rows[hit] = rows[hit], rows[top]
        p = rows[top]
        for i in range(len(rows)):
            if i != top and rows[i] & bit:
                rows[i] ^= p
        pivots.append(j)
        top += 1
        if top == len(rows):
            break
    return GF2Matrix(m.nrows, m.ncols, tuple(rows)), pivots


def in_column_span(m: GF2Matrix, cols: Iterable[int], v: int | Sequence[int]) -> bool:
    """True iff ``v`` (length ``m.nrows``) lies in the span of the chosen columns."""
    if not isinstance(v, int):
        if len(v) != m.nrows:
            raise ValueError(f"vector length {len(v)} != {m.nrows} rows")
        v = sum(1 << i for i, x in enumerate(v) if int(x) & 1)
    elif v >> m.nrows:
        raise ValueError("vector has bits beyond the row count")
    basis: list[int] = []
    for j in cols:
        c = reduce_vector(m.column(j), basis)
        if c:
            basis.append(c)
            basis.sort(reverse=True)
    return reduce_vector(v, basis) == 0


def span(vectors: Sequence[int]) -> list[int]:
    """All 2^k elements of the span of ``k`` independent vectors (Gray-code order)."""
    out = [0]
    cur = 0
    for g in range(1, 1 << len(vectors)):
        cur ^= vectors[(g & -g).bit_length() - 1]
        out.append(cur)
    return out
