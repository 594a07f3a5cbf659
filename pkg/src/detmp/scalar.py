"""Exact and approximate real scalars.

Everything that can be exact is a :class:`fractions.Fraction`.  Values that
involve ``e`` or non-terminating Cantor-function evaluations are carried as
:class:`Approx` with an explicit error bound, so that no approximate answer is
ever mistaken for an exact one.
"""

from __future__ import annotations

import math
from decimal import Decimal, InvalidOperation
from fractions import Fraction
from typing import Union

INF = math.inf
DEFAULT_EPS = 1e-12

_ULP = 4 * 2.0 ** -52


class ApproximateOnly(Exception):
    """An exact answer was requested but only an epsilon-verdict exists."""


class Approx:
    """A double-precision value together with an absolute error bound."""

    __slots__ = ("value", "eps")

    def __init__(self, value: float, eps: float = 0.0):
        self.value = float(value)
        self.eps = float(eps) + _ULP * abs(self.value)

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _lift(other) -> "Approx":
        if isinstance(other, Approx):
            return other
        if isinstance(other, (int, Fraction)):
            v = float(other)
            return Approx(v, _ULP * abs(v))
        if isinstance(other, float):
            return Approx(other, 0.0)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Approx(self.value + o.value, self.eps + o.eps)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return Approx(self.value - o.value, self.eps + o.eps)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return Approx(-self.value, self.eps)

    def __pos__(self):
        return self

    def __abs__(self):
        return Approx(abs(self.value), self.eps)

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        eps = abs(self.value) * o.eps + abs(o.value) * self.eps + self.eps * o.eps
        return Approx(self.value * o.value, eps)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if abs(o.value) <= o.eps:
            raise ZeroDivisionError("division by an approximate zero")
        q = self.value / o.value
        eps = (self.eps + abs(q) * o.eps) / (abs(o.value) - o.eps)
        return Approx(q, eps)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return o / self

    # comparisons --------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return False
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return abs(self.value - o.value) <= self.eps + o.eps

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __lt__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return other > 0
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o.value and not self == o

    def __le__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return other > 0
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.value < o.value or self == o

    def __gt__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return other < 0
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o < self

    def __ge__(self, other):
        if isinstance(other, float) and math.isinf(other):
            return other < 0
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return o <= self

    __hash__ = None

    def __float__(self):
        return self.value

    def __repr__(self):
        return f"Approx({self.value!r}, eps={self.eps:.3g})"


Scalar = Union[Fraction, Approx]


def is_exact(x) -> bool:
    if isinstance(x, tuple):
        return all(is_exact(c) for c in x)
    return not isinstance(x, Approx)


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions, strings and Approx into a Scalar."""
    if isinstance(x, (Fraction, Approx)):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, float):
        if math.isinf(x):
            raise ValueError("infinite scalar")
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"p/q"``, integers and finite decimals exactly."""
    s = text.strip()
    if "/" in s:
        p, q = s.split("/", 1)
        return Fraction(int(p), int(q))
    try:
        return Fraction(Decimal(s))
    except InvalidOperation:
        raise ValueError(f"not a rational literal: {text!r}") from None


def parse_time(text) -> Union[Fraction, float]:
    if isinstance(text, str) and text.strip().lower() in ("inf", "+inf", "infinity"):
        return INF
    if isinstance(text, str) and text.strip().lower() in ("-inf", "-infinity"):
        return -INF
    if isinstance(text, float) and math.isinf(text):
        return text
    return as_scalar(text)


def fmt(x) -> str:
    """Render a scalar or time point in the ``"p/q"`` wire format."""
    if isinstance(x, float) and math.isinf(x):
        return "inf" if x > 0 else "-inf"
    if isinstance(x, Approx):
        return repr(x.value)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def to_float(x) -> float:
    return float(x.value) if isinstance(x, Approx) else float(x)


def sign(x) -> int:
    if isinstance(x, Approx):
        if x == 0:
            return 0
        return 1 if x.value > 0 else -1
    return (x > 0) - (x < 0)


def exp(x, eps: float = DEFAULT_EPS) -> Scalar:
    if not isinstance(x, Approx) and x == 0:
        return Fraction(1)
    v = math.exp(to_float(x))
    err = eps * max(1.0, v)
    if isinstance(x, Approx):
        err += v * math.expm1(x.eps)
    return Approx(v, err)


def log(x, eps: float = DEFAULT_EPS) -> Scalar:
    if not isinstance(x, Approx) and x == 1:
        return Fraction(0)
    v = to_float(x)
    if v <= 0:
        raise ValueError("log of a nonpositive value")
    err = eps if not isinstance(x, Approx) else x.eps / (v - x.eps) + eps
    return Approx(math.log(v), err)


def sqrt(x) -> Scalar:
    """Exact square root when ``x`` is the square of a rational."""
    if isinstance(x, Approx):
        v = math.sqrt(max(x.value, 0.0))
        return Approx(v, math.sqrt(x.eps) if v == 0 else x.eps / (2 * v))
    x = Fraction(x)
    if x < 0:
        raise ValueError("sqrt of a negative value")
    p, q = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if p * p == x.numerator and q * q == x.denominator:
        return Fraction(p, q)
    return Approx(math.sqrt(float(x)), 0.0)


def floor(x) -> int:
    if isinstance(x, Approx):
        return math.floor(x.value)
    return math.floor(x)
