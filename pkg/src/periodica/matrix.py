"""Dense matrices over the local ring, with the block/Kronecker helpers
used to build 2-periodic tensor and Hom complexes.

Flattening convention: ``vec`` stacks a matrix column by column, so the
basis element E_{ij} of Hom(V, W) sits at flat index j*dim(W) + i — the
domain index is the outer one.  ``kron`` is the matching standard
Kronecker product with the first factor outer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .errors import DimensionMismatchError, FieldMismatchError
from .fields import FieldSpec
from .localring import LocalElem, one, zero

Grid = list


@dataclass(frozen=True)
class RMatrix:
    """Immutable rows x cols matrix of LocalElem, row-major."""

    field: FieldSpec
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise DimensionMismatchError("negative matrix dimension")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionMismatchError(
                f"entry count {len(self.entries)} != {self.rows}x{self.cols}"
            )

    # -- builders -----------------------------------------------------------

    @staticmethod
    def build(field: FieldSpec, rows: int, cols: int,
              fn: Callable[[int, int], LocalElem]) -> "RMatrix":
        ents = tuple(fn(i, j) for i in range(rows) for j in range(cols))
        return RMatrix(field, rows, cols, ents)

    @staticmethod
    def from_grid(field: FieldSpec, rows: int, cols: int,
                  grid: Sequence[Sequence[LocalElem]]) -> "RMatrix":
        if len(grid) != rows or any(len(r) != cols for r in grid):
            raise DimensionMismatchError("grid shape mismatch")
        return RMatrix(field, rows, cols, tuple(e for row in grid for e in row))

    @staticmethod
    def identity(field: FieldSpec, n: int) -> "RMatrix":
        z, o = zero(field), one(field)
        return RMatrix.build(field, n, n, lambda i, j: o if i == j else z)

    @staticmethod
    def zeros(field: FieldSpec, rows: int, cols: int) -> "RMatrix":
        z = zero(field)
        return RMatrix(field, rows, cols, (z,) * (rows * cols))

    @staticmethod
    def diagonal(field: FieldSpec, rows: int, cols: int,
                 diag: Sequence[LocalElem]) -> "RMatrix":
        z = zero(field)
        return RMatrix.build(
            field, rows, cols,
            lambda i, j: diag[i] if i == j and i < len(diag) else z)

    # -- access -------------------------------------------------------------

    def at(self, i: int, j: int) -> LocalElem:
        return self.entries[i * self.cols + j]

    def __getitem__(self, ij: tuple) -> LocalElem:
        return self.at(*ij)

    def to_grid(self) -> Grid:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def row_list(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def column(self, j: int) -> "RMatrix":
        ents = tuple(self.entries[i * self.cols + j] for i in range(self.rows))
        return RMatrix(self.field, self.rows, 1, ents)

    def submatrix(self, i0: int, i1: int, j0: int, j1: int) -> "RMatrix":
        ents = tuple(
            self.entries[i * self.cols + j]
            for i in range(i0, i1) for j in range(j0, j1))
        return RMatrix(self.field, i1 - i0, j1 - j0, ents)

    def take_rows(self, perm: Sequence[int]) -> "RMatrix":
        ents = tuple(
            self.entries[pi * self.cols + j]
            for pi in perm for j in range(self.cols))
        return RMatrix(self.field, len(perm), self.cols, ents)

    def take_cols(self, perm: Sequence[int]) -> "RMatrix":
        ents = tuple(
            self.entries[i * self.cols + pj]
            for i in range(self.rows) for pj in perm)
        return RMatrix(self.field, self.rows, len(perm), ents)

    # -- predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return all(not e for e in self.entries)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def first_nonzero(self) -> tuple | None:
        for i in range(self.rows):
            for j in range(self.cols):
                if self.entries[i * self.cols + j]:
                    return (i, j)
        return None

    def min_entry_valuation(self):
        return min((e.valuation for e in self.entries), default=None)

    def all_entries_in_maximal_ideal(self) -> bool:
        return all(e.valuation >= 1 for e in self.entries)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "RMatrix") -> None:
        if self.field != other.field:
            raise FieldMismatchError("matrices over different fields")

    def __add__(self, other: "RMatrix") -> "RMatrix":
        self._check(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError("matrix addition shape mismatch")
        ents = tuple(a + b for a, b in zip(self.entries, other.entries))
        return RMatrix(self.field, self.rows, self.cols, ents)

    def __sub__(self, other: "RMatrix") -> "RMatrix":
        return self + (-other)

    def __neg__(self) -> "RMatrix":
        return RMatrix(self.field, self.rows, self.cols,
                       tuple(-e for e in self.entries))

    def __matmul__(self, other: "RMatrix") -> "RMatrix":
        self._check(other)
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        z = zero(self.field)
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        out = [z] * (n * m)
        for i in range(n):
            arow = i * k
            orow = i * m
            for t in range(k):
                e = a[arow + t]
                if not e:
                    continue
                brow = t * m
                for j in range(m):
                    f = b[brow + j]
                    if f:
                        out[orow + j] = out[orow + j] + e * f
        return RMatrix(self.field, n, m, tuple(out))

    def scale(self, c: LocalElem) -> "RMatrix":
        return RMatrix(self.field, self.rows, self.cols,
                       tuple(c * e for e in self.entries))

    def transpose(self) -> "RMatrix":
        return RMatrix.build(self.field, self.cols, self.rows,
                             lambda i, j: self.at(j, i))

    def det(self) -> LocalElem:
        """Determinant by cofactor expansion (exact, ring operations only)."""
        if not self.is_square():
            raise DimensionMismatchError("determinant of a non-square matrix")
        n = self.rows
        if n == 0:
            return one(self.field)
        if n == 1:
            return self.at(0, 0)
        total = zero(self.field)
        cols = list(range(n))
        for j in range(n):
            c = self.at(0, j)
            if not c:
                continue
            rest = self.submatrix(1, n, 0, n).take_cols(cols[:j] + cols[j + 1:])
            term = c * rest.det()
            total = total - term if j % 2 else total + term
        return total

    # -- flattening ---------------------------------------------------------

    def vec(self) -> "RMatrix":
        """Column-major flattening into a (rows*cols) x 1 column."""
        ents = tuple(self.at(i, j) for j in range(self.cols) for i in range(self.rows))
        return RMatrix(self.field, self.rows * self.cols, 1, ents)

    @staticmethod
    def unvec(field: FieldSpec, col: "RMatrix", rows: int, cols: int) -> "RMatrix":
        if col.cols != 1 or col.rows != rows * cols:
            raise DimensionMismatchError("unvec shape mismatch")
        return RMatrix.build(field, rows, cols,
                             lambda i, j: col.at(j * rows + i, 0))


def kron(a: RMatrix, b: RMatrix) -> RMatrix:
    """Kronecker product with the first factor's indices outer."""
    a._check(b)
    z = zero(a.field)
    rows, cols = a.rows * b.rows, a.cols * b.cols
    out = [z] * (rows * cols)
    for i1 in range(a.rows):
        for j1 in range(a.cols):
            e = a.at(i1, j1)
            if not e:
                continue
            for i2 in range(b.rows):
                base = (i1 * b.rows + i2) * cols + j1 * b.cols
                brow = i2 * b.cols
                for j2 in range(b.cols):
                    f = b.entries[brow + j2]
                    if f:
                        out[base + j2] = e * f
    return RMatrix(a.field, rows, cols, tuple(out))


def block(field: FieldSpec, grid: Sequence[Sequence[RMatrix]]) -> RMatrix:
    """Assemble a block matrix; each grid row must have equal heights and
    each grid column equal widths."""
    if not grid:
        return RMatrix.zeros(field, 0, 0)
    heights = [row[0].rows for row in grid]
    widths = [m.cols for m in grid[0]]
    for bi, row in enumerate(grid):
        if len(row) != len(widths):
            raise DimensionMismatchError("ragged block grid")
        for bj, m in enumerate(row):
            if m.rows != heights[bi] or m.cols != widths[bj]:
                raise DimensionMismatchError("inconsistent block sizes")
            if m.field != field:
                raise FieldMismatchError("block over a different field")
    out = []
    for bi, row in enumerate(grid):
        for i in range(heights[bi]):
            for bj, m in enumerate(row):
                out.extend(m.entries[i * m.cols:(i + 1) * m.cols])
    return RMatrix(field, sum(heights), sum(widths), tuple(out))


def block_diag(field: FieldSpec, blocks: Iterable[RMatrix]) -> RMatrix:
    blocks = list(blocks)
    n = len(blocks)
    grid = [
        [blocks[i] if i == j else RMatrix.zeros(field, blocks[i].rows, blocks[j].cols)
         for j in range(n)]
        for i in range(n)
    ]
    return block(field, grid)


def hstack(field: FieldSpec, mats: Sequence[RMatrix]) -> RMatrix:
    return block(field, [list(mats)])


def vstack(field: FieldSpec, mats: Sequence[RMatrix]) -> RMatrix:
    return block(field, [[m] for m in mats])


def commutation_matrix(field: FieldSpec, m: int, n: int) -> RMatrix:
    """Permutation sending flat index i*n + j (i outer) to j*m + i (j outer)."""
    z, o = zero(field), one(field)
    size = m * n
    ents = [z] * (size * size)
    for i in range(m):
        for j in range(n):
            ents[(j * m + i) * size + (i * n + j)] = o
    return RMatrix(field, size, size, tuple(ents))
