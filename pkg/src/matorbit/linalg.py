"""Exact matrices over Q."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], rows: int | None = None, cols: int | None = None):
        ent = [[_frac(x) for x in row] for row in entries]
        if rows is None:
            rows = len(ent)
        if cols is None:
            cols = len(ent[0]) if ent else 0
        if len(ent) != rows or any(len(row) != cols for row in ent):
            raise ValueError(f"entries do not match declared shape {rows}x{cols}")
        self.rows, self.cols, self.entries = rows, cols, ent

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def random(cls, rows, cols, lo=-2, hi=2, rng: random.Random | None = None):
        rng = rng or random.Random()
        return cls([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], rows, cols)

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.entries == other.entries and \
            (self.rows, self.cols) == (other.rows, other.cols)

    def __hash__(self):
        return hash((self.rows, self.cols, tuple(map(tuple, self.entries))))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"RationalMatrix([{body}])"

    def column(self, j):
        return [row[j] for row in self.entries]

    def columns(self, idx: Iterable[int]) -> "RationalMatrix":
        idx = list(idx)
        return RationalMatrix([[row[j] for j in idx] for row in self.entries], self.rows, len(idx))

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([list(col) for col in zip(*self.entries)] if self.rows else [], self.cols, self.rows)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self.entries],
            self.rows, other.cols,
        )

    def rank(self) -> int:
        return rank(self.entries)

    def det(self) -> Fraction:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        return det(self.entries)

    def nullspace(self) -> list[list[Fraction]]:
        return nullspace(self.entries, self.cols)

    def to_json(self) -> dict:
        return {"rows": self.rows, "cols": self.cols, "entries": [[str(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: Mapping) -> "RationalMatrix":
        return cls(data["entries"], data["rows"], data["cols"])


def rref(mat: Sequence[Sequence], ncols: int | None = None):
    """Reduced row echelon form; returns ``(rows, pivot_columns)``."""
    a = [[_frac(x) for x in row] for row in mat]
    if ncols is None:
        ncols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a[:r], pivots


def rank(mat: Sequence[Sequence]) -> int:
    a = [[_frac(x) for x in row] for row in mat]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        for i in range(r + 1, len(a)):
            if a[i][c] != 0:
                f = a[i][c] / a[r][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def det(mat: Sequence[Sequence]) -> Fraction:
    a = [[_frac(x) for x in row] for row in mat]
    n = len(a)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != 0:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


def nullspace(mat: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : mat x = 0}``, one vector per free column."""
    rows, piv = rref(mat, ncols)
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(rows, piv):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve(mat: Sequence[Sequence], rhs: Sequence) -> list[Fraction] | None:
    """One solution of ``mat x = rhs`` (free variables zero), or ``None``."""
    ncols = len(mat[0]) if mat else 0
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    rows, piv = rref(aug, ncols + 1)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, piv):
        x[p] = row[ncols]
    return x
