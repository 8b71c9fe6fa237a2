"""Exact elements of the local ring R = k[x] localized at (x).

An element is a reduced fraction num/den of polynomials with den(0) != 0.
Canonical form: gcd(num, den) = 1 and den has constant term 1; zero is
0/1.  The valuation of a nonzero element is the order of vanishing of its
numerator at x = 0; every nonzero element factors as unit * x^valuation,
and the units are exactly the elements of valuation 0.

Text grammar (shared by every file format): polynomials are written
"c0 + c1*x + c2*x^2" with coefficients "p/q" over Q or integers over F_p;
an element is a polynomial, optionally followed by a parenthesized
denominator "/(den)" with den(0) != 0.  Whitespace is ignored.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Union

from . import poly
from .errors import (
    FieldMismatchError,
    NonUnitError,
    NotDivisibleError,
    ParseError,
)
from .fields import FieldSpec, Scalar
from .poly import Poly

Valuation = Union[int, float]  # nonnegative int, or math.inf for zero

INFINITE = math.inf


@dataclass(frozen=True)
class LocalElem:
    """Canonical fraction in k[x]_(x).  Construct via :func:`elem`."""

    field: FieldSpec
    num: Poly
    den: Poly

    # Arithmetic assumes both operands canonical; results are canonical.

    def _check(self, other: "LocalElem") -> None:
        if self.field != other.field:
            raise FieldMismatchError(
                f"mixed fields {self.field.label} and {other.field.label}"
            )

    def __bool__(self) -> bool:
        return bool(self.num)

    def __add__(self, other: "LocalElem") -> "LocalElem":
        self._check(other)
        K = self.field
        if self.den == other.den:
            num = poly.add(K, self.num, other.num)
            if len(self.den) == 1:
                return LocalElem(K, num, self.den)
            return elem(K, num, self.den)
        num = poly.add(
            K,
            poly.mul(K, self.num, other.den),
            poly.mul(K, other.num, self.den),
        )
        return elem(K, num, poly.mul(K, self.den, other.den))

    def __sub__(self, other: "LocalElem") -> "LocalElem":
        return self + (-other)

    def __neg__(self) -> "LocalElem":
        return LocalElem(self.field, poly.neg(self.field, self.num), self.den)

    def __mul__(self, other: "LocalElem") -> "LocalElem":
        self._check(other)
        K = self.field
        if not self.num or not other.num:
            return zero(K)
        if len(self.den) == 1 and len(other.den) == 1:
            # denominators are both 1: no reduction needed
            return LocalElem(K, poly.mul(K, self.num, other.num), self.den)
        return elem(
            K,
            poly.mul(K, self.num, other.num),
            poly.mul(K, self.den, other.den),
        )

    def __truediv__(self, other: "LocalElem") -> "LocalElem":
        """Exact division inside R; raises NotDivisibleError otherwise."""
        self._check(other)
        if not other.num:
            raise ZeroDivisionError("division by zero")
        if not self.num:
            return zero(self.field)
        v = poly.order(other.num)
        if v:
            self = x_shift(self, -v)
            other = x_shift(other, -v)
        return self * inverse(other)

    @property
    def valuation(self) -> Valuation:
        """Order at the maximal ideal (x); +inf for zero."""
        o = poly.order(self.num)
        return INFINITE if o is None else o

    @property
    def is_unit(self) -> bool:
        return bool(self.num) and self.num[0] != 0

    def __repr__(self) -> str:
        return f"LocalElem({self.field.label}, {format_element(self)!r})"


def elem(field: FieldSpec, num: Poly, den: Poly = None) -> LocalElem:
    """Canonicalize num/den: reduce the fraction, normalize den(0) = 1."""
    K = field
    if den is None:
        den = poly.one(K)
    num = poly.trim(K, num)
    den = poly.trim(K, den)
    if not den or den[0] == 0:
        raise NonUnitError("denominator is not a unit of the local ring")
    if not num:
        return LocalElem(K, (), poly.one(K))
    if len(den) > 1:
        g = poly.gcd(K, num, den)
        if poly.degree(g) > 0:
            num, _ = poly.divmod_poly(K, num, g)
            den, _ = poly.divmod_poly(K, den, g)
    c = den[0]
    if c != K.one:
        cinv = K.inv(c)
        num = poly.scale(K, num, cinv)
        den = poly.scale(K, den, cinv)
    return LocalElem(K, num, den)


def zero(field: FieldSpec) -> LocalElem:
    return LocalElem(field, (), poly.one(field))


def one(field: FieldSpec) -> LocalElem:
    return LocalElem(field, poly.one(field), poly.one(field))


def from_int(field: FieldSpec, n: int) -> LocalElem:
    return LocalElem(field, poly.const(field, field.of_int(n)), poly.one(field))


def from_scalar(field: FieldSpec, c: Scalar) -> LocalElem:
    return LocalElem(field, poly.const(field, c), poly.one(field))


def x_power(field: FieldSpec, k: int) -> LocalElem:
    """The monomial x^k, k >= 0."""
    if k < 0:
        raise ValueError("negative power of x is not in the local ring")
    return LocalElem(field, poly.x_pow(field, k), poly.one(field))


def valuation(e: LocalElem) -> Valuation:
    return e.valuation


def inverse(e: LocalElem) -> LocalElem:
    """Inverse of a unit (valuation 0); NonUnitError otherwise."""
    if e.valuation != 0:
        raise NonUnitError("element has positive valuation (or is zero)")
    K = e.field
    num, den = e.den, e.num
    c = den[0]
    if c != K.one:
        cinv = K.inv(c)
        num = poly.scale(K, num, cinv)
        den = poly.scale(K, den, cinv)
    return LocalElem(K, num, den)


def x_shift(e: LocalElem, k: int) -> LocalElem:
    """Multiply by x^k; for k < 0 requires valuation(e) >= -k."""
    if not e.num or k == 0:
        return e
    K = e.field
    if k > 0:
        return LocalElem(K, poly.shift_up(K, e.num, k), e.den)
    o = poly.order(e.num)
    if o is None or o < -k:
        raise NotDivisibleError("valuation too small for division by x^%d" % (-k))
    return LocalElem(K, poly.shift_down(e.num, -k), e.den)


def unit_part(e: LocalElem) -> LocalElem:
    """The unit u with e = u * x^valuation(e); undefined (error) for zero."""
    if not e.num:
        raise NonUnitError("zero has no unit part")
    return x_shift(e, -poly.order(e.num))


# ---------------------------------------------------------------------------
# Text grammar


_TERM_RE = re.compile(
    r"^([+-])?"
    r"(\d+(?:/\d+)?)?"
    r"(?:\*?(x)(?:\^(\d+))?)?$"
)


def _strip_outer_parens(s: str) -> str:
    while s.startswith("(") and s.endswith(")"):
        depth = 0
        for i, ch in enumerate(s):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0 and i != len(s) - 1:
                    return s
        s = s[1:-1]
    return s


def _split_fraction(s: str) -> tuple[str, str | None]:
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == "/" and depth == 0 and i + 1 < len(s) and s[i + 1] == "(":
            return s[:i], s[i + 1 :]
    return s, None


def parse_poly(field: FieldSpec, text: str) -> Poly:
    """Parse "c0 + c1*x + c2*x^2" (whitespace already removed)."""
    s = _strip_outer_parens(text)
    if not s:
        raise ParseError("empty polynomial")
    if "(" in s or ")" in s:
        raise ParseError(f"unexpected parentheses in polynomial {text!r}")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"malformed polynomial {text!r}")
    coeffs: dict[int, Scalar] = {}
    for term in terms:
        m = _TERM_RE.match(term)
        if not m or (m.group(2) is None and m.group(3) is None):
            raise ParseError(f"bad term {term!r} in polynomial {text!r}")
        sign, coeff_tok, xpart, exp_tok = m.groups()
        if coeff_tok is None:
            c = field.one
        else:
            c = field.parse_scalar(coeff_tok)
        if sign == "-":
            c = field.neg(c)
        d = 0 if xpart is None else (1 if exp_tok is None else int(exp_tok))
        coeffs[d] = field.add(coeffs.get(d, field.zero), c)
    if not coeffs:
        raise ParseError(f"empty polynomial {text!r}")
    out = [field.zero] * (max(coeffs) + 1)
    for d, c in coeffs.items():
        out[d] = c
    return poly.trim(field, out)


def parse_element(field: FieldSpec, text: str) -> LocalElem:
    """Parse an element of R from the shared text grammar."""
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty ring element")
    num_part, den_part = _split_fraction(s)
    num = parse_poly(field, num_part)
    if den_part is None:
        return elem(field, num)
    den = parse_poly(field, den_part)
    if poly.eval0(field, den) == field.zero:
        raise ParseError(f"denominator vanishes at x = 0 in {text!r}")
    return elem(field, num, den)


def format_poly(field: FieldSpec, f: Poly) -> str:
    if not f:
        return "0"
    parts: list[str] = []
    for d, c in enumerate(f):
        if c == 0:
            continue
        negative = field.is_rationals and c < 0
        mag = -c if negative else c
        if d == 0:
            body = field.format_scalar(mag)
        else:
            xs = "x" if d == 1 else f"x^{d}"
            body = xs if mag == field.one else f"{field.format_scalar(mag)}*{xs}"
        if not parts:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


def format_element(e: LocalElem) -> str:
    num = format_poly(e.field, e.num)
    if len(e.den) == 1:
        return num
    den = format_poly(e.field, e.den)
    if " " in num:
        num = f"({num})"
    return f"{num}/({den})"
