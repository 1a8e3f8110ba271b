"""Exact arithmetic in the ordered field Q(sqrt 2)."""
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import sympy

from app.main.util.exceptions import WeightSyntaxError

RAT_PATTERN = r"-?\d+(?:/\d+)?"
SCALAR_RE = re.compile(rf"^\s*({RAT_PATTERN})\s*(?:\+\s*({RAT_PATTERN})\s*\*\s*t)?\s*$")

Number = Union[int, Fraction, "Scalar"]


def parse_rational(text: str) -> Fraction:
    """Parse `p` or `p/q` with q > 0"""
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise WeightSyntaxError(f"Zero denominator in '{text}'")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, eq=False)
class Scalar:
    """The number a + b*sqrt(2) with rational a, b"""
    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def of(cls, value: Number) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(Fraction(value), Fraction(0))

    @classmethod
    def parse(cls, text: str) -> "Scalar":
        match = SCALAR_RE.match(text)
        if not match:
            raise WeightSyntaxError(f"Malformed scalar '{text}'")
        a = parse_rational(match.group(1))
        b = parse_rational(match.group(2)) if match.group(2) else Fraction(0)
        return cls(a, b)

    @classmethod
    def from_sympy(cls, expr) -> "Scalar":
        """Convert an expanded sympy expression p + q*sqrt(2)"""
        expr = sympy.expand(expr)
        b = expr.coeff(sympy.sqrt(2))
        a = sympy.expand(expr - b * sympy.sqrt(2))
        a, b = sympy.Rational(a), sympy.Rational(b)
        return cls(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)))

    def to_sympy(self):
        return (sympy.Rational(self.a.numerator, self.a.denominator)
                + sympy.Rational(self.b.numerator, self.b.denominator) * sympy.sqrt(2))

    # arithmetic

    def __add__(self, other: Number) -> "Scalar":
        other = Scalar.of(other)
        return Scalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "Scalar":
        return Scalar(-self.a, -self.b)

    def __sub__(self, other: Number) -> "Scalar":
        return self + (-Scalar.of(other))

    def __rsub__(self, other: Number) -> "Scalar":
        return Scalar.of(other) - self

    def __mul__(self, other: Number) -> "Scalar":
        other = Scalar.of(other)
        return Scalar(self.a * other.a + 2 * self.b * other.b,
                      self.a * other.b + self.b * other.a)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        norm = self.a * self.a - 2 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("Scalar division by zero")
        return Scalar(self.a / norm, -self.b / norm)

    def __truediv__(self, other: Number) -> "Scalar":
        return self * Scalar.of(other).inverse()

    def __rtruediv__(self, other: Number) -> "Scalar":
        return Scalar.of(other) * self.inverse()

    # order

    def sign(self) -> int:
        a, b = self.a, self.b
        if b == 0:
            return (a > 0) - (a < 0)
        if a == 0:
            return (b > 0) - (b < 0)
        if (a > 0) == (b > 0):
            return 1 if a > 0 else -1
        # opposite signs: the larger square wins
        if a * a > 2 * b * b:
            return 1 if a > 0 else -1
        return 1 if b > 0 else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Scalar.of(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __le__(self, other: Number) -> bool:
        return (self - other).sign() <= 0

    def __gt__(self, other: Number) -> bool:
        return (self - other).sign() > 0

    def __ge__(self, other: Number) -> bool:
        return (self - other).sign() >= 0

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    # membership

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1

    def to_int(self) -> int:
        if not self.is_integer():
            raise ValueError(f"{self} is not an integer")
        return self.a.numerator

    def __str__(self) -> str:
        if self.b == 0:
            return format_rational(self.a)
        return f"{format_rational(self.a)}+{format_rational(self.b)}*t"

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar(Fraction(1))
SQRT2 = Scalar(Fraction(0), Fraction(1))
