"""Minimal models: peel contractible rank-(1,1) summands until every
differential entry lies in the maximal ideal.

A complex is minimal when every entry of d0 and d1 has valuation >= 1.
The splitting peels one unit pivot at a time: basis changes turn the
pivot into a 1x1 identity block whose complementary row and column of
the *other* differential vanish automatically (both composites are
zero), so a trivial summand splits off exactly.  All basis changes are
elementary operations whose inverses are accumulated alongside, so the
result carries mutually inverse isomorphisms, not just an assertion.

Pivot policy: the unit entry of smallest (row, col) in d1 first, then in
d0 — reductions are deterministic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .complexes import (
    ChainMap2,
    Homotopy2,
    TwoPeriodicComplex,
    compose,
    direct_sum,
    identity_map,
    is_null_homotopic,
    validate_complex,
    zero_complex,
)
from .errors import NotAComplexError, NotTrivialError, PeriodicaError
from .fields import FieldSpec
from .localring import inverse, one, zero
from .matrix import RMatrix


class TrivialType(enum.Enum):
    """Type1: odd differential is the identity; Type2: the even one is."""

    TYPE1 = 1
    TYPE2 = 2


@dataclass(frozen=True)
class TrivialSummand:
    kind: TrivialType
    count: int


@dataclass(frozen=True)
class SplitResult:
    """minimal + trivials together with exact mutually inverse isomorphisms
    into: (minimal + trivials) -> X and back: X -> (minimal + trivials)."""

    minimal: TwoPeriodicComplex
    trivials: tuple  # (TrivialSummand TYPE1, TrivialSummand TYPE2)
    into: ChainMap2
    back: ChainMap2

    @property
    def block_sum(self) -> TwoPeriodicComplex:
        return self.into.src

    @property
    def type1(self) -> int:
        return self.trivials[0].count

    @property
    def type2(self) -> int:
        return self.trivials[1].count


def is_minimal(x: TwoPeriodicComplex) -> bool:
    """True iff every differential entry lies in (x)."""
    return (x.d0.all_entries_in_maximal_ideal()
            and x.d1.all_entries_in_maximal_ideal())


def trivial_complex(kind: TrivialType, n: int,
                    field: FieldSpec) -> TwoPeriodicComplex:
    """Block sum of n rank-(1,1) contractible complexes of one type."""
    if n < 0:
        raise ValueError("negative number of summands")
    ident = RMatrix.identity(field, n)
    zmat = RMatrix.zeros(field, n, n)
    if kind is TrivialType.TYPE1:
        return TwoPeriodicComplex(field, n, n, zmat, ident)
    return TwoPeriodicComplex(field, n, n, ident, zmat)


def _find_unit(grid, nrows, ncols):
    for i in range(nrows):
        row = grid[i]
        for j in range(ncols):
            e = row[j]
            if e and e.valuation == 0:
                return i, j
    return None


def reduce(x: TwoPeriodicComplex) -> SplitResult:
    """Split X as minimal + Type1^a + Type2^b with exact certificates."""
    if validate_complex(x) is not None:
        raise NotAComplexError("input differentials do not square to zero")
    field = x.field
    r0, r1 = x.r0, x.r1
    d0 = x.d0.to_grid()
    d1 = x.d1.to_grid()
    p0 = RMatrix.identity(field, r0).to_grid()   # X -> current, degree 0
    p1 = RMatrix.identity(field, r1).to_grid()
    q0 = RMatrix.identity(field, r0).to_grid()   # current -> X
    q1 = RMatrix.identity(field, r1).to_grid()

    def swap_rows(m, i, j):
        m[i], m[j] = m[j], m[i]

    def swap_cols(m, i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]

    def scale_row(m, i, c):
        row = m[i]
        for t, e in enumerate(row):
            if e:
                row[t] = c * e

    def scale_col(m, j, c):
        for row in m:
            if row[j]:
                row[j] = c * row[j]

    def row_add(m, i, t, lam):
        ri, rt = m[i], m[t]
        for c, e in enumerate(rt):
            if e:
                ri[c] = ri[c] + lam * e

    def col_add(m, j, t, lam):
        for row in m:
            if row[t]:
                row[j] = row[j] + lam * row[t]

    # basis change on F0 by G0: d1 <- G0 d1, d0 <- d0 G0^-1,
    # p0 <- G0 p0, q0 <- q0 G0^-1 (and symmetrically for F1)
    def g0_swap(i, j):
        if i == j:
            return
        swap_rows(d1, i, j)
        swap_cols(d0, i, j)
        swap_rows(p0, i, j)
        swap_cols(q0, i, j)

    def g1_swap(i, j):
        if i == j:
            return
        swap_rows(d0, i, j)
        swap_cols(d1, i, j)
        swap_rows(p1, i, j)
        swap_cols(q1, i, j)

    def g0_scale(i, c):
        cinv = inverse(c)
        scale_row(d1, i, c)
        scale_col(d0, i, cinv)
        scale_row(p0, i, c)
        scale_col(q0, i, cinv)

    def g1_scale(i, c):
        cinv = inverse(c)
        scale_row(d0, i, c)
        scale_col(d1, i, cinv)
        scale_row(p1, i, c)
        scale_col(q1, i, cinv)

    def g0_add(a, b, lam):
        # G0 = I + lam e_{a,b}: row_a += lam row_b; inverse: col_b -= lam col_a
        nlam = -lam
        row_add(d1, a, b, lam)
        col_add(d0, b, a, nlam)
        row_add(p0, a, b, lam)
        col_add(q0, b, a, nlam)

    def g1_add(a, b, lam):
        nlam = -lam
        row_add(d0, a, b, lam)
        col_add(d1, b, a, nlam)
        row_add(p1, a, b, lam)
        col_add(q1, b, a, nlam)

    act0, act1 = r0, r1
    peels = []  # (TrivialType, f0_index, f1_index) in peel order
    while act0 > 0 and act1 > 0:
        hit = _find_unit(d1, act0, act1)
        if hit is not None:
            i, j = hit  # d1[i][j]: F0 row i, F1 col j
            if d1[i][j] != one(field):
                g0_scale(i, inverse(d1[i][j]))
            for l in range(r0):
                if l != i and d1[l][j]:
                    g0_add(l, i, -d1[l][j])
            for m_ in range(r1):
                if m_ != j and d1[i][m_]:
                    g1_add(j, m_, d1[i][m_])
            _assert_cleared(d0, col=i, row=j)
            g0_swap(i, act0 - 1)
            g1_swap(j, act1 - 1)
            act0 -= 1
            act1 -= 1
            peels.append((TrivialType.TYPE1, act0, act1))
            continue
        hit = _find_unit(d0, act1, act0)
        if hit is not None:
            i, j = hit  # d0[i][j]: F1 row i, F0 col j
            if d0[i][j] != one(field):
                g1_scale(i, inverse(d0[i][j]))
            for l in range(r1):
                if l != i and d0[l][j]:
                    g1_add(l, i, -d0[l][j])
            for m_ in range(r0):
                if m_ != j and d0[i][m_]:
                    g0_add(j, m_, d0[i][m_])
            _assert_cleared(d1, col=i, row=j)
            g0_swap(j, act0 - 1)
            g1_swap(i, act1 - 1)
            act0 -= 1
            act1 -= 1
            peels.append((TrivialType.TYPE2, act0, act1))
            continue
        break

    # reorder trailing peeled pairs: Type1 blocks first, then Type2
    t1 = [(a, b) for kind, a, b in peels if kind is TrivialType.TYPE1]
    t2 = [(a, b) for kind, a, b in peels if kind is TrivialType.TYPE2]
    perm0 = list(range(act0)) + [a for a, _ in t1] + [a for a, _ in t2]
    perm1 = list(range(act1)) + [b for _, b in t1] + [b for _, b in t2]

    def freeze_perm(grid, rows, cols, rperm, cperm):
        return RMatrix(field, rows, cols, tuple(
            grid[ri][cj] for ri in rperm for cj in cperm))

    idr0 = list(range(r0))
    idr1 = list(range(r1))
    d0_m = freeze_perm(d0, r1, r0, perm1, perm0)
    d1_m = freeze_perm(d1, r0, r1, perm0, perm1)
    p0_m = freeze_perm(p0, r0, r0, perm0, idr0)
    p1_m = freeze_perm(p1, r1, r1, perm1, idr1)
    q0_m = freeze_perm(q0, r0, r0, idr0, perm0)
    q1_m = freeze_perm(q1, r1, r1, idr1, perm1)

    minimal = TwoPeriodicComplex(
        field, act0, act1,
        d0_m.submatrix(0, act1, 0, act0), d1_m.submatrix(0, act0, 0, act1))
    if not is_minimal(minimal):
        raise PeriodicaError("reduction left a unit entry (internal error)")
    parts = [minimal]
    if t1:
        parts.append(trivial_complex(TrivialType.TYPE1, len(t1), field))
    if t2:
        parts.append(trivial_complex(TrivialType.TYPE2, len(t2), field))
    blocksum = direct_sum(*parts) if len(parts) > 1 else minimal
    if blocksum.d0 != d0_m or blocksum.d1 != d1_m:
        raise PeriodicaError("reduced complex is not the expected block sum")

    into = ChainMap2(blocksum, x, q0_m, q1_m)
    back = ChainMap2(x, blocksum, p0_m, p1_m)
    _assert_identity(compose(into, back), x.r0, x.r1)
    _assert_identity(compose(back, into), x.r0, x.r1)
    trivials = (TrivialSummand(TrivialType.TYPE1, len(t1)),
                TrivialSummand(TrivialType.TYPE2, len(t2)))
    return SplitResult(minimal, trivials, into, back)


def _assert_cleared(other, col, row):
    for l, r in enumerate(other):
        if r[col]:
            raise PeriodicaError("complementary column failed to vanish")
    for e in other[row]:
        if e:
            raise PeriodicaError("complementary row failed to vanish")


def _assert_identity(f: ChainMap2, r0: int, r1: int) -> None:
    field = f.src.field
    if (f.f0 != RMatrix.identity(field, r0)
            or f.f1 != RMatrix.identity(field, r1)):
        raise PeriodicaError("split certificates do not compose to identity")


def trivial_contraction(w: TwoPeriodicComplex) -> Homotopy2:
    """Homotopy witnessing id_W ~ 0 for a sum of trivial complexes.

    The witness for a standard block is transported through the exact
    splitting isomorphisms, so any complex whose reduction has no minimal
    part is accepted; everything else raises NotTrivialError.
    """
    split = reduce(w)
    if split.minimal.total_rank != 0:
        raise NotTrivialError("complex has a nonzero minimal part")
    t = split.block_sum
    field = w.field
    # standard contraction: s = identity in both degrees works for either type
    s_t = Homotopy2(t, t, RMatrix.identity(field, t.r0),
                    RMatrix.identity(field, t.r1))
    b0, b1 = s_t.boundary()
    ident = identity_map(t)
    if (b0 - ident.f0).first_nonzero() or (b1 - ident.f1).first_nonzero():
        raise PeriodicaError("standard contraction failed (internal error)")
    s0 = split.into.f1 @ s_t.s0 @ split.back.f0
    s1 = split.into.f0 @ s_t.s1 @ split.back.f1
    h = Homotopy2(w, w, s0, s1)
    if not h.witnesses(identity_map(w)):
        raise PeriodicaError("transported contraction failed re-verification")
    return h
