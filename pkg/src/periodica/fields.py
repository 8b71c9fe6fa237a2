"""Coefficient fields: the rationals and the prime fields F_p.

Field elements are plain Python values (``Fraction`` over Q, ints reduced
into ``[0, p)`` over F_p); a :class:`FieldSpec` carries the arithmetic so
polynomials and matrices stay lightweight and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import ParseError

Scalar = Union[Fraction, int]

_QZERO = Fraction(0)
_QONE = Fraction(1)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The coefficient field k: the rationals when ``p == 0``, else F_p."""

    p: int = 0

    def __post_init__(self) -> None:
        if self.p != 0 and not _is_prime(self.p):
            raise ValueError(f"field characteristic must be prime, got {self.p}")

    @staticmethod
    def rationals() -> "FieldSpec":
        return FieldSpec(0)

    @staticmethod
    def prime_field(p: int) -> "FieldSpec":
        return FieldSpec(p)

    @staticmethod
    def from_label(label: str) -> "FieldSpec":
        """Parse a field label, either ``"Q"`` or ``"Fp:<p>"``."""
        if label == "Q":
            return FieldSpec(0)
        if isinstance(label, str) and label.startswith("Fp:"):
            try:
                p = int(label[3:])
            except ValueError:
                raise ParseError(f"bad field label {label!r}") from None
            try:
                return FieldSpec(p)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        raise ParseError(f"bad field label {label!r}; expected 'Q' or 'Fp:<p>'")

    @property
    def is_rationals(self) -> bool:
        return self.p == 0

    @property
    def label(self) -> str:
        return "Q" if self.p == 0 else f"Fp:{self.p}"

    # -- arithmetic on plain scalar values ---------------------------------

    @property
    def zero(self) -> Scalar:
        return _QZERO if self.p == 0 else 0

    @property
    def one(self) -> Scalar:
        return _QONE if self.p == 0 else 1

    def of_int(self, n: int) -> Scalar:
        return Fraction(n) if self.p == 0 else n % self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p == 0 else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p == 0 else (a - b) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p == 0 else (a * b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p == 0 else (-a) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if self.p == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return _QONE / a
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    # -- text form ----------------------------------------------------------

    def parse_scalar(self, token: str) -> Scalar:
        """Parse one coefficient: ``p/q`` or an integer over Q, an integer over F_p."""
        token = token.strip()
        try:
            if self.p == 0:
                return Fraction(token)
            return int(token) % self.p
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficient {token!r} over {self.label}") from None

    def format_scalar(self, a: Scalar) -> str:
        return str(a)
