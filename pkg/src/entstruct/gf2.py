"""Bit-packed binary matrices and rank kernels over GF(2).

Rows are Python ints with bit ``j`` holding column ``j``, so a row
operation is a single big-int XOR (word-at-a-time under the hood).
Rank of reduced generator matrices is the hot path of diagram
construction, which calls it once per candidate cluster.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def rank_of_ints(rows: Iterable[int]) -> int:
    """GF(2) rank of a matrix given as packed integer rows.

    The input is consumed but never mutated (ints are immutable), so this
    is safe to call concurrently on shared data.
    """
    pivots: dict[int, int] = {}
    rank = 0
    for row in rows:
        while row:
            bit = row.bit_length() - 1
            pivot = pivots.get(bit)
            if pivot is None:
                pivots[bit] = row
                rank += 1
                break
            row ^= pivot
    return rank


class BitMatrix:
    """Dense binary matrix with integer-packed rows.

    Bits beyond ``ncols`` must be zero; the constructor rejects rows that
    violate this rather than masking silently.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, rows: Sequence[int], ncols: int) -> None:
        if ncols < 0:
            raise ValueError("column count must be non-negative")
        packed = [int(r) for r in rows]
        for i, r in enumerate(packed):
            if r < 0 or r >> ncols:
                raise ValueError(f"row {i} has bits outside the {ncols} columns")
        self.rows = packed
        self.nrows = len(packed)
        self.ncols = ncols

    @classmethod
    def from_bits(cls, bit_rows: Sequence[Sequence[int]], ncols: int | None = None) -> "BitMatrix":
        """Build from nested 0/1 lists; column 0 is the first entry of a row."""
        bit_rows = [list(r) for r in bit_rows]
        if ncols is None:
            ncols = len(bit_rows[0]) if bit_rows else 0
        packed = []
        for r in bit_rows:
            if len(r) != ncols:
                raise ValueError("ragged rows")
            v = 0
            for j, b in enumerate(r):
                if b not in (0, 1):
                    raise ValueError(f"matrix entries must be 0 or 1, got {b!r}")
                v |= b << j
            packed.append(v)
        return cls(packed, ncols)

    def to_bits(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def rank(self) -> int:
        """GF(2) rank; works on a scratch copy, the matrix is unchanged."""
        return rank_of_ints(self.rows)

    def row_reduce(self) -> "BitMatrix":
        """Reduced row-echelon form: same row space, pivot columns strictly
        increasing, zero rows last."""
        pivot_rows: list[tuple[int, int]] = []  # (pivot column, row)
        for row in self.rows:
            for col, prow in pivot_rows:
                if (row >> col) & 1:
                    row ^= prow
            if row:
                col = (row & -row).bit_length() - 1
                pivot_rows = [
                    (c, r ^ row) if (r >> col) & 1 else (c, r) for c, r in pivot_rows
                ]
                pivot_rows.append((col, row))
        pivot_rows.sort()
        reduced = [r for _, r in pivot_rows]
        reduced += [0] * (self.nrows - len(reduced))
        return BitMatrix(reduced, self.ncols)

    def select_columns(self, cols: Sequence[int]) -> "BitMatrix":
        """New matrix holding the listed columns in the listed order."""
        cols = list(cols)
        seen: set[int] = set()
        for c in cols:
            if not 0 <= c < self.ncols:
                raise ValueError(f"column index {c} out of range 0..{self.ncols - 1}")
            if c in seen:
                raise ValueError(f"duplicate column index {c}")
            seen.add(c)
        out = []
        for row in self.rows:
            v = 0
            for k, c in enumerate(cols):
                v |= ((row >> c) & 1) << k
            out.append(v)
        return BitMatrix(out, len(cols))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BitMatrix):
            return NotImplemented
        return self.ncols == other.ncols and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.ncols, tuple(self.rows)))

    def __repr__(self) -> str:
        return f"BitMatrix({self.nrows}x{self.ncols})"
