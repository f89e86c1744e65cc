"""Dense matrix algebra over a finite field.

Matrices are small here (codes of length <= 24), so everything is plain
row-reduction with table-driven scalar arithmetic.  Pivoting is deterministic:
the first nonzero entry scanning top-to-bottom, left-to-right, which makes the
reduced row echelon form (and everything derived from it) reproducible.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .gf import GF


class Matrix:
    """A rows x cols matrix over a :class:`~codescope.gf.GF` field."""

    def __init__(self, field: GF, entries):
        arr = np.array(entries, dtype=np.int64)
        if arr.ndim != 2:
            raise ValueError("matrix entries must be two-dimensional")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"entries outside [0, {field.q})")
        self.field = field
        self.array = arr
        self.rows, self.cols = arr.shape

    @classmethod
    def identity(cls, field: GF, n: int) -> "Matrix":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def zero(cls, field: GF, rows: int, cols: int) -> "Matrix":
        return cls(field, np.zeros((rows, cols), dtype=np.int64))

    def copy(self) -> "Matrix":
        return Matrix(self.field, self.array.copy())

    def to_lists(self) -> list[list[int]]:
        return self.array.tolist()

    def transpose(self) -> "Matrix":
        return Matrix(self.field, self.array.T.copy())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.array.shape == other.array.shape
            and bool(np.array_equal(self.array, other.array))
        )

    def __hash__(self):  # pragma: no cover - mutable array, not hashable
        raise TypeError("Matrix is not hashable")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.array)
        return f"Matrix({self.field!r}, [{body}])"

    # -- elementary algebra --------------------------------------------------

    def rref(self) -> tuple["Matrix", int, list[int]]:
        """Reduced row echelon form: (R, rank, pivot columns)."""
        F = self.field
        ADD, MUL, NEG, INV = F.ADD, F.MUL, F.NEG, F.INV
        m = self.array.tolist()
        rows, cols = self.rows, self.cols
        pivots: list[int] = []
        r = 0
        for c in range(cols):
            pr = next((i for i in range(r, rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = INV[m[r][c]]
            if inv != 1:
                row = m[r]
                m[r] = [MUL[inv, x] for x in row]
            lead = m[r]
            for i in range(rows):
                f = m[i][c]
                if i != r and f:
                    neg = NEG[f]
                    row = m[i]
                    m[i] = [ADD[row[j], MUL[neg, lead[j]]] for j in range(cols)]
            pivots.append(c)
            r += 1
            if r == rows:
                break
        return Matrix(F, m), r, pivots

    def rank(self) -> int:
        return self.rref()[1]

    def nullspace_basis(self) -> "Matrix":
        """Rows form a basis of {x : M x^T = 0}; (cols - rank) rows."""
        F = self.field
        R, rank, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        basis = np.zeros((len(free), self.cols), dtype=np.int64)
        for i, fc in enumerate(free):
            basis[i, fc] = 1
            for j, pc in enumerate(pivots):
                basis[i, pc] = F.NEG[R.array[j, fc]]
        return Matrix(F, basis)

    def apply(self, v: Sequence[int]) -> list[int]:
        """Matrix-vector product M v over the field."""
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} != {self.cols} columns")
        F = self.field
        out = []
        for row in self.array.tolist():
            acc = 0
            for a, b in zip(row, v):
                if a and b:
                    acc = F.ADD[acc, F.MUL[a, b]]
            out.append(int(acc))
        return out

    def matmul(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        F = self.field
        bt = other.array.T.tolist()
        out = [[0] * other.cols for _ in range(self.rows)]
        for i, row in enumerate(self.array.tolist()):
            for j, col in enumerate(bt):
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = F.ADD[acc, F.MUL[a, b]]
                out[i][j] = int(acc)
        return Matrix(F, out)

    def is_zero(self) -> bool:
        return not self.array.any()

    def row_space_equals(self, other: "Matrix") -> bool:
        """Row spaces compared through the canonical RREF."""
        if self.field != other.field or self.cols != other.cols:
            return False
        ra, rka, _ = self.rref()
        rb, rkb, _ = other.rref()
        return rka == rkb and bool(np.array_equal(ra.array[:rka], rb.array[:rkb]))


def scale_rows(M: Matrix, scalars: Iterable[int]) -> Matrix:
    F = M.field
    out = M.array.copy()
    for i, s in enumerate(scalars):
        out[i] = F.MUL[s, out[i]]
    return Matrix(F, out)
