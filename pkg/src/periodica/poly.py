"""Dense univariate polynomials over a :class:`FieldSpec`.

A polynomial is a tuple of coefficients in ascending degree with no
trailing zeros; the zero polynomial is the empty tuple.  All functions
are pure and take the field explicitly.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

from .fields import FieldSpec, Scalar

Poly = Tuple[Scalar, ...]

ZERO: Poly = ()


def trim(field: FieldSpec, coeffs: Sequence[Scalar]) -> Poly:
    z = field.zero
    n = len(coeffs)
    while n and coeffs[n - 1] == z:
        n -= 1
    return tuple(coeffs[:n])


def const(field: FieldSpec, c: Scalar) -> Poly:
    return () if c == field.zero else (c,)


def one(field: FieldSpec) -> Poly:
    return (field.one,)


def x_pow(field: FieldSpec, n: int) -> Poly:
    return (field.zero,) * n + (field.one,)


def degree(f: Poly) -> int:
    """Degree, with the convention deg 0 = -1."""
    return len(f) - 1


def order(f: Poly) -> Optional[int]:
    """Order of vanishing at x = 0; None for the zero polynomial."""
    for i, c in enumerate(f):
        if c != 0:
            return i
    return None


def add(field: FieldSpec, f: Poly, g: Poly) -> Poly:
    if not f:
        return g
    if not g:
        return f
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = field.add(out[i], c)
    return trim(field, out)


def neg(field: FieldSpec, f: Poly) -> Poly:
    return tuple(field.neg(c) for c in f)


def sub(field: FieldSpec, f: Poly, g: Poly) -> Poly:
    return add(field, f, neg(field, g))


def mul(field: FieldSpec, f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return ()
    z = field.zero
    out = [z] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            if b == 0:
                continue
            out[i + j] = field.add(out[i + j], field.mul(a, b))
    return trim(field, out)


def scale(field: FieldSpec, f: Poly, c: Scalar) -> Poly:
    if c == field.zero:
        return ()
    return trim(field, [field.mul(a, c) for a in f])


def shift_up(field: FieldSpec, f: Poly, n: int) -> Poly:
    """Multiply by x^n."""
    if not f:
        return ()
    return (field.zero,) * n + f


def shift_down(f: Poly, n: int) -> Poly:
    """Divide by x^n; requires order(f) >= n."""
    if not f:
        return ()
    o = order(f)
    if o is None or o < n:
        raise ValueError("polynomial not divisible by x^%d" % n)
    return f[n:]


def divmod_poly(field: FieldSpec, f: Poly, g: Poly) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    q: list[Scalar] = [field.zero] * max(len(f) - len(g) + 1, 0)
    rem = list(f)
    glead = g[-1]
    ginv = field.inv(glead)
    while len(rem) >= len(g):
        c = rem[-1]
        if c == 0:
            rem.pop()
            continue
        k = len(rem) - len(g)
        factor = field.mul(c, ginv)
        q[k] = factor
        for i, b in enumerate(g):
            rem[k + i] = field.sub(rem[k + i], field.mul(factor, b))
        rem.pop()
    return trim(field, q), trim(field, rem)


def monic(field: FieldSpec, f: Poly) -> Poly:
    if not f:
        return ()
    lead = f[-1]
    if lead == field.one:
        return f
    return scale(field, f, field.inv(lead))


def gcd(field: FieldSpec, f: Poly, g: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm."""
    a, b = f, g
    while b:
        _, r = divmod_poly(field, a, b)
        a, b = b, r
    return monic(field, a)


def eval0(field: FieldSpec, f: Poly) -> Scalar:
    return f[0] if f else field.zero
