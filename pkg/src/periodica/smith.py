"""Smith normal form and linear algebra over the local ring.

Over k[x]_(x) every nonzero element is unit * x^v, so a single
elimination sweep with a minimal-valuation pivot produces the Smith form
U A V = D with D diagonal of the shape diag(x^a1, ..., x^ar, 0, ...) and
a1 <= ... <= ar.  Pivots are chosen as the entry of minimal valuation in
the remaining submatrix, ties broken by smallest row then column index,
so the output is deterministic.

Transforms and their exact inverses are accumulated, which makes solving
linear systems, inverting matrices and presenting subquotients (kernel
mod image) certificate-grade: every identity can be re-verified by exact
matrix arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import (
    CompositeNotZeroError,
    DimensionMismatchError,
    NotInvertibleError,
)
from .localring import LocalElem, inverse, unit_part, x_power, x_shift, zero
from .matrix import RMatrix


@dataclass(frozen=True)
class SmithForm:
    """u @ a @ v == d exactly; u, v invertible with the stored inverses."""

    u: RMatrix
    d: RMatrix
    v: RMatrix
    u_inv: RMatrix
    v_inv: RMatrix
    exponents: tuple  # valuations a1 <= ... <= ar of the nonzero diagonal

    @property
    def rank(self) -> int:
        return len(self.exponents)


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_cols(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _scale_row(m, i, c):
    row = m[i]
    for t, e in enumerate(row):
        if e:
            row[t] = c * e


def _scale_col(m, j, c):
    for row in m:
        e = row[j]
        if e:
            row[j] = c * e


def _row_sub(m, i, t, lam):
    """row_i -= lam * row_t"""
    ri, rt = m[i], m[t]
    for c, e in enumerate(rt):
        if e:
            ri[c] = ri[c] - lam * e


def _row_add(m, i, t, lam):
    ri, rt = m[i], m[t]
    for c, e in enumerate(rt):
        if e:
            ri[c] = ri[c] + lam * e


def _col_sub(m, j, t, lam):
    """col_j -= lam * col_t"""
    for row in m:
        e = row[t]
        if e:
            row[j] = row[j] - lam * e


def _col_add(m, j, t, lam):
    for row in m:
        e = row[t]
        if e:
            row[j] = row[j] + lam * e


def smith_normal_form(a: RMatrix) -> SmithForm:
    field = a.field
    rows, cols = a.rows, a.cols
    work = a.to_grid()
    u = RMatrix.identity(field, rows).to_grid()
    uinv = RMatrix.identity(field, rows).to_grid()
    v = RMatrix.identity(field, cols).to_grid()
    vinv = RMatrix.identity(field, cols).to_grid()

    exps = []
    for t in range(min(rows, cols)):
        # minimal-valuation pivot in the remaining submatrix
        best = None
        best_val = math.inf
        for i in range(t, rows):
            wrow = work[i]
            for j in range(t, cols):
                e = wrow[j]
                if e and e.valuation < best_val:
                    best_val = e.valuation
                    best = (i, j)
                    if best_val == 0:
                        break
            if best_val == 0:
                break
        if best is None:
            break
        bi, bj = best
        if bi != t:
            _swap_rows(work, bi, t)
            _swap_rows(u, bi, t)
            _swap_cols(uinv, bi, t)
        if bj != t:
            _swap_cols(work, bj, t)
            _swap_cols(v, bj, t)
            _swap_rows(vinv, bj, t)
        pivot = work[t][t]
        pv = pivot.valuation
        unit = unit_part(pivot)
        if unit != x_power(field, 0):
            c = inverse(unit)
            _scale_row(work, t, c)
            _scale_row(u, t, c)
            _scale_col(uinv, t, unit)
        # pivot is now exactly x^pv; eliminate its column, then its row
        for i in range(t + 1, rows):
            e = work[i][t]
            if e:
                lam = x_shift(e, -pv)
                _row_sub(work, i, t, lam)
                _row_sub(u, i, t, lam)
                _col_add(uinv, t, i, lam)
        for j in range(t + 1, cols):
            e = work[t][j]
            if e:
                lam = x_shift(e, -pv)
                _col_sub(work, j, t, lam)
                _col_sub(v, j, t, lam)
                _row_add(vinv, t, j, lam)
        exps.append(pv)

    def freeze(grid, r, c):
        return RMatrix(field, r, c, tuple(e for row in grid for e in row))

    return SmithForm(
        u=freeze(u, rows, rows),
        d=freeze(work, rows, cols),
        v=freeze(v, cols, cols),
        u_inv=freeze(uinv, rows, rows),
        v_inv=freeze(vinv, cols, cols),
        exponents=tuple(exps),
    )


def matrix_rank(a: RMatrix) -> int:
    """Rank over the fraction field k(x)."""
    return smith_normal_form(a).rank


def is_invertible(a: RMatrix) -> bool:
    if not a.is_square():
        return False
    s = smith_normal_form(a)
    return s.rank == a.rows and all(e == 0 for e in s.exponents)


def invert(a: RMatrix) -> RMatrix:
    """Inverse over R; exists iff the Smith form is the identity."""
    if not a.is_square():
        raise NotInvertibleError("non-square matrix")
    s = smith_normal_form(a)
    if s.rank != a.rows or any(e != 0 for e in s.exponents):
        raise NotInvertibleError("matrix is not invertible over the local ring")
    return s.v @ s.u


def solve_over_ring(a: RMatrix, b: RMatrix) -> Optional[RMatrix]:
    """Solve a @ x = b exactly over R; None when no solution exists in R.

    Solvability is decided on the Smith form: with u a v = d and c = u b,
    each diagonal row needs x^ai | ci and each zero row needs ci = 0.
    """
    if b.cols != 1 or b.rows != a.rows:
        raise DimensionMismatchError("right-hand side must be a column of matching height")
    s = smith_normal_form(a)
    c = s.u @ b
    field = a.field
    y = [zero(field)] * a.cols
    for t in range(a.rows):
        ct = c.at(t, 0)
        if t < len(s.exponents):
            if not ct:
                continue
            if ct.valuation < s.exponents[t]:
                return None
            y[t] = x_shift(ct, -s.exponents[t])
        elif ct:
            return None
    ycol = RMatrix(field, a.cols, 1, tuple(y))
    return s.v @ ycol


@dataclass(frozen=True)
class SubquotientModule:
    """Presentation of ker(a)/im(b): R/x^f1 + ... + R/x^fk + R^free_rank.

    ``generators`` are columns of the ambient free module lifting the
    cyclic generators (torsion factors first, in the order of ``factors``,
    then the free generators).
    """

    factors: tuple
    free_rank: int
    generators: tuple

    def length(self):
        """k-length; math.inf when a free summand is present."""
        if self.free_rank:
            return math.inf
        return sum(self.factors)

    def is_zero(self) -> bool:
        return not self.factors and self.free_rank == 0


def homology_invariants(a: RMatrix, b: RMatrix) -> SubquotientModule:
    """Invariant factors of ker(a)/im(b) with lifted generators.

    Requires a @ b = 0.  The kernel of ``a`` is the free summand spanned
    by the trailing columns of v (from u a v = d); the image of ``b`` is
    rewritten in those coordinates and reduced by a second Smith form.
    """
    if a.cols != b.rows:
        raise DimensionMismatchError("ker/im dimensions incompatible")
    prod = a @ b
    if not prod.is_zero():
        i, j = prod.first_nonzero()
        raise CompositeNotZeroError(f"composite is nonzero at ({i}, {j})")
    field = a.field
    s = smith_normal_form(a)
    r = s.rank
    n = a.cols
    kdim = n - r
    kernel_basis = s.v.take_cols(range(r, n))  # n x kdim
    bk = s.v_inv @ b
    # rows < r of v_inv @ b vanish exactly since d (v_inv b) = u a b = 0
    for i in range(r):
        for j in range(b.cols):
            if bk.at(i, j):
                raise CompositeNotZeroError(
                    "image does not lie in the kernel (internal inconsistency)")
    m = bk.submatrix(r, n, 0, b.cols)
    s2 = smith_normal_form(m)
    torsion = [e for e in s2.exponents if e > 0]
    nunits = len(s2.exponents) - len(torsion)
    free_rank = kdim - s2.rank
    gen_indices = list(range(nunits, len(s2.exponents))) + \
        list(range(s2.rank, kdim))
    gens = tuple(kernel_basis @ s2.u_inv.column(i) for i in gen_indices)
    return SubquotientModule(tuple(torsion), free_rank, gens)
