"""
Exact Quadratic Surds.

A Surd is a real number p + c*sqrt(k) with integer p, c and k >= 0. Surds,
ints and Fractions are ordered exactly: the radical term is isolated and both
sides squared with explicit sign bookkeeping, so no floating point is involved.
Floats appear only in display helpers.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm
from typing import Tuple, Union

from ..errors import IncomparableSurdError, NegativeRadicandError
from ..exact_core import isqrt

logger = logging.getLogger(__name__)

# digits kept beyond the coefficient size when rendering sqrt(k)
_GUARD_DIGITS = 20


class Ordering(Enum):
    """Result of an exact comparison."""

    LESS = -1
    EQUAL = 0
    GREATER = 1


# (lhs, rhs) of the last squared comparison that decided an ordering
Certificate = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class Surd:
    """Exact value p + c*sqrt(k).

    The stored form is canonical with respect to rationality: a zero
    coefficient, a zero radicand or a perfect-square radicand is folded into p
    and stored as (p, 0, 0).
    """

    p: int = 0
    c: int = 0
    k: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise NegativeRadicandError(f"negative radicand: {self.k}")
        if self.c == 0 or self.k == 0:
            object.__setattr__(self, "c", 0)
            object.__setattr__(self, "k", 0)
            return
        root = isqrt(self.k)
        if root * root == self.k:
            object.__setattr__(self, "p", self.p + self.c * root)
            object.__setattr__(self, "c", 0)
            object.__setattr__(self, "k", 0)

    @classmethod
    def sqrt(cls, k: int) -> "Surd":
        """sqrt(k)."""
        return cls(0, 1, k)

    @classmethod
    def power_three_halves(cls, x: int) -> "Surd":
        """x^(3/2) for x >= 0, stored as sqrt(x^3)."""
        if x < 0:
            raise NegativeRadicandError(f"negative radicand: {x}")
        return cls(0, 1, x ** 3)

    @classmethod
    def _with_radicand(cls, p: int, c: int, k: int) -> "Surd":
        """Build from the radicand of a canonical Surd, skipping the square test."""
        if c == 0 or k == 0:
            return cls(p)
        surd = object.__new__(cls)
        object.__setattr__(surd, "p", p)
        object.__setattr__(surd, "c", c)
        object.__setattr__(surd, "k", k)
        return surd

    @property
    def is_rational(self) -> bool:
        return self.c == 0

    def _combine(self, other: "Surd", sign: int) -> "Surd":
        if other.is_rational:
            return Surd._with_radicand(self.p + sign * other.p, self.c, self.k)
        if self.is_rational:
            return Surd._with_radicand(self.p + sign * other.p, sign * other.c, other.k)
        if self.k != other.k:
            raise IncomparableSurdError(
                f"incomparable surd pair: cannot combine sqrt({self.k}) with sqrt({other.k})"
            )
        return Surd._with_radicand(self.p + sign * other.p, self.c + sign * other.c, self.k)

    def __add__(self, other):
        if isinstance(other, int):
            return Surd._with_radicand(self.p + other, self.c, self.k)
        if isinstance(other, Surd):
            return self._combine(other, 1)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return Surd._with_radicand(self.p - other, self.c, self.k)
        if isinstance(other, Surd):
            return self._combine(other, -1)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Surd._with_radicand(other - self.p, -self.c, self.k)
        return NotImplemented

    def __neg__(self):
        return Surd._with_radicand(-self.p, -self.c, self.k)

    def __mul__(self, other):
        if isinstance(other, int):
            return Surd._with_radicand(self.p * other, self.c * other, self.k)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            return surd_cmp(self, other) is Ordering.EQUAL
        except IncomparableSurdError:
            return NotImplemented

    # value equality without a cheap canonical hash
    __hash__ = None

    def __lt__(self, other):
        return surd_cmp(self, other) is Ordering.LESS

    def __le__(self, other):
        return surd_cmp(self, other) is not Ordering.GREATER

    def __gt__(self, other):
        return surd_cmp(self, other) is Ordering.GREATER

    def __ge__(self, other):
        return surd_cmp(self, other) is not Ordering.LESS

    def __float__(self):
        return to_float(self)

    def __str__(self):
        if self.is_rational:
            return str(self.p)
        radical = f"sqrt({self.k})" if self.c == 1 else f"{self.c}*sqrt({self.k})"
        if self.p == 0:
            return radical
        return f"{self.p} + {radical}"


ExactNumber = Union[int, Fraction, Surd]


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _parts(value: ExactNumber) -> Tuple[int, int, int, int]:
    """Split an exact number into (numerator, denominator, coefficient, radicand)."""
    if isinstance(value, Surd):
        return value.p, 1, value.c, value.k
    if isinstance(value, bool):
        raise IncomparableSurdError(f"incomparable surd pair: unsupported operand {value!r}")
    if isinstance(value, int):
        return value, 1, 0, 0
    if isinstance(value, Fraction):
        return value.numerator, value.denominator, 0, 0
    raise IncomparableSurdError(f"incomparable surd pair: unsupported operand {value!r}")


def _radical_sign(x: int, y: int, k: int) -> Tuple[int, Certificate]:
    """Sign of x + y*sqrt(k) for integers x, y and k >= 0."""
    if y == 0 or k == 0:
        return _sign(x), (x, 0)
    radical_sign = _sign(y)
    lhs, rhs = x * x, y * y * k
    if x == 0:
        return radical_sign, (lhs, rhs)
    if _sign(x) == radical_sign:
        return radical_sign, (lhs, rhs)
    if lhs > rhs:
        return _sign(x), (lhs, rhs)
    if lhs < rhs:
        return radical_sign, (lhs, rhs)
    return 0, (lhs, rhs)


def _two_radical_sign(x: int, a: int, j: int, b: int, k: int) -> Tuple[int, Certificate]:
    """Sign of x + a*sqrt(j) - b*sqrt(k)."""
    if b == 0 or k == 0:
        return _radical_sign(x, a, j)
    if a == 0 or j == 0:
        return _radical_sign(x, -b, k)
    if j == k:
        return _radical_sign(x, a - b, j)

    # u = x + a*sqrt(j) against v = b*sqrt(k)
    u_sign, cert = _radical_sign(x, a, j)
    v_sign = _sign(b)
    if u_sign != v_sign:
        return (1 if u_sign > v_sign else -1), cert
    # equal signs: compare magnitudes through u^2 - v^2
    magnitude, cert = _radical_sign(x * x + a * a * j - b * b * k, 2 * x * a, j)
    return v_sign * magnitude, cert


def compare_with_certificate(a: ExactNumber, b: ExactNumber) -> Tuple[Ordering, Certificate]:
    """Exact ordering of a and b together with the deciding integer pair.

    Args:
        a: Left operand (int, Fraction or Surd)
        b: Right operand (int, Fraction or Surd)

    Returns:
        (ordering, (lhs, rhs)) where lhs/rhs are the integers whose comparison
        settled the result
    """
    na, da, ca, ka = _parts(a)
    nb, db, cb, kb = _parts(b)
    if da == db == 1:
        den, x = 1, na - nb
    else:
        den = lcm(da, db)
        x = na * (den // da) - nb * (den // db)
    sign, cert = _two_radical_sign(x, ca * den, ka, cb * den, kb)
    return Ordering(sign), cert


def surd_cmp(a: ExactNumber, b: ExactNumber) -> Ordering:
    """Exact ordering of two exact numbers."""
    return compare_with_certificate(a, b)[0]


def to_float(value: ExactNumber) -> float:
    """Nearest float to an exact number. For display only.

    sqrt(k) is taken as a scaled integer square root, keeping the absolute
    error of c*sqrt(k) below 10**-_GUARD_DIGITS before the final rounding.
    """
    if isinstance(value, Surd):
        if value.is_rational:
            return float(value.p)
        scale = 10 ** (_GUARD_DIGITS + len(str(abs(value.c))))
        root = isqrt(value.k * scale * scale)
        # int / int rounds correctly
        return (value.p * scale + value.c * root) / scale
    return float(value)


def display(value: ExactNumber, digits: int = 6) -> str:
    """Render an exact number with `digits` significant digits (display only)."""
    return f"{to_float(value):.{digits}g}"
