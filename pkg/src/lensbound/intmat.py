"""Integer matrices and Smith normal form with unimodular transforms.

Relation matrices follow the row convention: each row is one relation,
each column one generator, and the presented abelian group is
``Z^cols / rowspace(M)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )
        object.__setattr__(self, "entries", tuple(int(e) for e in self.entries))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise ValueError("cols is required for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(e for r in rows for e in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            self.cols, self.rows,
            tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        a, b = self.to_rows(), other.to_rows()
        out = [
            [sum(a[i][k] * b[k][j] for k in range(self.cols)) for j in range(other.cols)]
            for i in range(self.rows)
        ]
        return IntMatrix.from_rows(out, other.cols)

    def determinant(self) -> int:
        """Exact determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ M @ right == diagonal(invariant_factors)`` padded with zeros."""

    invariant_factors: tuple[int, ...]
    left_transform: IntMatrix
    right_transform: IntMatrix
    shape: tuple[int, int]

    def diagonal(self) -> IntMatrix:
        r, c = self.shape
        d = self.invariant_factors
        return IntMatrix(r, c, tuple(
            d[i] if i == j and i < len(d) else 0 for i in range(r) for j in range(c)
        ))


def smith_normal_form(M: IntMatrix) -> SmithDecomposition:
    """Smith normal form by elimination, pivoting on the smallest nonzero entry.

    Ties in pivot size are broken by row-major scan order, so the output is
    deterministic.  The invariant factors are nonnegative; the positive ones
    form a divisibility chain and are followed only by zeros.
    """
    r, c = M.rows, M.cols
    a = M.to_rows()
    left = IntMatrix.identity(r).to_rows()
    right = IntMatrix.identity(c).to_rows()

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def swap_cols(i, j):
        for mat in (a, right):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):
        # row[dst] += k * row[src]
        for mat in (a, left):
            s, d = mat[src], mat[dst]
            for j in range(len(d)):
                d[j] += k * s[j]

    def add_col(dst, src, k):
        for mat in (a, right):
            for row in mat:
                row[dst] += k * row[src]

    for t in range(min(r, c)):
        while True:
            pivot = None
            for i in range(t, r):
                for j in range(t, c):
                    v = a[i][j]
                    if v and (pivot is None or abs(v) < abs(a[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            if pivot[0] != t:
                swap_rows(t, pivot[0])
            if pivot[1] != t:
                swap_cols(t, pivot[1])
            p = a[t][t]
            clean = True
            for i in range(t + 1, r):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, c):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, r) for j in range(t + 1, c) if a[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            for mat in (a, left):
                mat[t] = [-x for x in mat[t]]

    factors = tuple(a[i][i] for i in range(min(r, c)))
    return SmithDecomposition(
        invariant_factors=factors,
        left_transform=IntMatrix.from_rows(left, r),
        right_transform=IntMatrix.from_rows(right, c),
        shape=(r, c),
    )


@dataclass(frozen=True)
class Cokernel:
    """A finitely generated abelian group ``Z/t1 + ... + Z/tk + Z^free_rank``."""

    torsion: tuple[int, ...]
    free_rank: int

    def __str__(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def cokernel_invariants(M: IntMatrix) -> Cokernel:
    """Invariants of ``Z^cols / rowspace(M)``: torsion factors > 1 and free rank."""
    snf = smith_normal_form(M)
    d = snf.invariant_factors
    rank = sum(1 for x in d if x)
    return Cokernel(tuple(x for x in d if x > 1), M.cols - rank)
