"""Exact linear algebra over the rationals."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from .poly import as_rational


@dataclass(frozen=True)
class RationalMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "RationalMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("an empty matrix needs an explicit column count")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(as_rational(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def vstack(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.cols:
            raise ValueError(f"cannot stack {self.cols} and {other.cols} columns")
        return RationalMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_rows(
            [[self[i, j] for i in range(self.rows)] for j in range(self.cols)], self.rows
        )

    def apply(self, vec: Sequence) -> list[Fraction]:
        if len(vec) != self.cols:
            raise ValueError(f"vector of length {len(vec)} for {self.cols} columns")
        vec = [as_rational(v) for v in vec]
        return [sum((a * v for a, v in zip(self.row(i), vec)), Fraction(0)) for i in range(self.rows)]

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.to_rows()]

    @classmethod
    def from_json(cls, rows, cols: int | None = None) -> "RationalMatrix":
        return cls.from_rows(rows, cols)


def _integer_rows(M: RationalMatrix) -> list[list[int]]:
    out = []
    for r in M.to_rows():
        d = lcm(*(x.denominator for x in r)) if r else 1
        out.append([int(x * d) for x in r])
    return out


def matrix_rank(M: RationalMatrix) -> int:
    """Rank by fraction-free (Bareiss) elimination on integer-scaled rows."""
    a = _integer_rows(M)
    rows, cols = M.rows, M.cols
    rank, prev = 0, 1
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if a[r][c]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][c]
        for r in range(rank + 1, rows):
            f = a[r][c]
            a[r] = [(p * a[r][k] - f * a[rank][k]) // prev for k in range(cols)]
        prev = p
        rank += 1
        if rank == rows:
            break
    return rank


def solve(A: RationalMatrix, b: Sequence) -> list[Fraction] | None:
    """Unique solution of ``A x = b`` for square invertible ``A``; None if singular."""
    n = A.rows
    if A.cols != n or len(b) != n:
        raise ValueError("solve needs a square system")
    aug = [list(A.row(i)) + [as_rational(b[i])] for i in range(n)]
    for c in range(n):
        pivot = next((r for r in range(c, n) if aug[r][c]), None)
        if pivot is None:
            return None
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [aug[i][n] for i in range(n)]
