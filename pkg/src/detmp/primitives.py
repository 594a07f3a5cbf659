"""Continuous building blocks of piecewise paths.

Each primitive is a function of absolute time ``t`` (not of the offset inside
its segment) and is either constant or strictly monotone in every component.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Optional

from . import scalar as sc
from .intervals import Interval
from .scalar import Approx, INF

Vector = tuple

_CANTOR_DEPTH = 48  # 3**-48 is far below double precision


def vec(*xs) -> Vector:
    return tuple(sc.as_scalar(x) for x in xs)


# --- Cantor function -------------------------------------------------------

def cantor_h(y) -> Fraction:
    """The Cantor function on [0, 1], exact at every rational argument.

    Rationals have eventually periodic ternary digits, so reading digits up to
    the first 1 either stops or cycles; a cycle is summed as a binary
    geometric series.
    """
    return _cantor_h(Fraction(y))


@lru_cache(maxsize=1 << 14)
def _cantor_h(y: Fraction) -> Fraction:
    if y <= 0:
        return Fraction(0)
    if y >= 1:
        return Fraction(1)
    bits: list = []
    seen: dict = {}
    x = y
    while x not in seen:
        seen[x] = len(bits)
        x *= 3
        d = int(x)
        x -= d
        if d == 1:
            return _binary_value(bits) + Fraction(1, 2 ** (len(bits) + 1))
        bits.append(d // 2)
        if x == 0:
            return _binary_value(bits)
    start = seen[x]
    prefix, cycle = bits[:start], bits[start:]
    period = Fraction(1, 2 ** len(cycle))
    return _binary_value(prefix) + _binary_value(cycle) * Fraction(1, 2 ** len(prefix)) / (1 - period)


def _binary_value(bits) -> Fraction:
    v = 0
    for b in bits:
        v = 2 * v + b
    return Fraction(v, 2 ** len(bits))


def cantor_g(y) -> Fraction:
    """``(h(y) + y) / 2`` on [0, 1]; a strictly increasing homeomorphism."""
    y = Fraction(y)
    return (cantor_h(y) + y) / 2


def cantor_g_inverse(v, depth: int = _CANTOR_DEPTH):
    """Solve ``g(y) = v`` for ``v`` in [0, 1].

    Descends through the middle-thirds where ``h`` is constant and ``g`` is
    affine.  Values that are images of Cantor-set points with infinite
    ternary expansions fall through to a bisection bracket of width 3**-depth.
    """
    if isinstance(v, Approx):
        return _cantor_g_inverse_float(v.value, v.eps)
    return _cantor_g_inverse(Fraction(v), depth)


@lru_cache(maxsize=1 << 14)
def _cantor_g_inverse(v: Fraction, depth: int):
    a, b = Fraction(0), Fraction(1)
    ha, hb = Fraction(0), Fraction(1)
    for _ in range(depth):
        if v == (ha + a) / 2:
            return a
        if v == (hb + b) / 2:
            return b
        third = (b - a) / 3
        m1, m2 = a + third, a + 2 * third
        hm = (ha + hb) / 2
        lo, hi = (hm + m1) / 2, (hm + m2) / 2
        if lo <= v <= hi:
            return 2 * v - hm
        if v < lo:
            b, hb = m1, hm
        else:
            a, ha = m2, hm
    return Approx(float((a + b) / 2), float(b - a))


@lru_cache(maxsize=1 << 12)
def _cantor_g_inverse_float(v: float, eps: float):
    lo, hi = 0.0, 1.0
    for _ in range(80):
        mid = (lo + hi) / 2
        if float(cantor_g(Fraction(mid))) < v:
            lo = mid
        else:
            hi = mid
    # g has inverse modulus of continuity at most 2 * |dv|
    return Approx((lo + hi) / 2, (hi - lo) + 2 * eps)


# --- primitives ------------------------------------------------------------

class Primitive:
    dim: int = 1
    absolutely_continuous: bool = True
    exact_capable: bool = True

    def value(self, t) -> Vector:
        raise NotImplementedError

    def right_derivative(self, t) -> Optional[Vector]:
        raise NotImplementedError

    def monotone_sign(self) -> tuple:
        """Per-component sign of the (constant) direction of motion."""
        raise NotImplementedError

    @property
    def is_constant(self) -> bool:
        return all(s == 0 for s in self.monotone_sign())

    def preimage(self, y, lo, hi, hi_closed: bool = False):
        """Earliest ``t`` in ``[lo, hi)`` with ``value(t) == y``, else None.

        For a constant primitive the whole interval maps to ``y``; ``lo`` is
        returned.  ``d = 1`` only for non-affine primitives.
        """
        raise NotImplementedError

    def shifted(self, dt) -> "Primitive":
        """The primitive ``t -> self(t - dt)``."""
        raise NotImplementedError

    def limit_at_inf(self) -> Vector:
        return tuple(INF * s if s else c for s, c in zip(self.monotone_sign(), self.value(0)))

    def value_or_limit(self, t) -> Vector:
        return self.limit_at_inf() if t == INF else self.value(t)

    def range_on(self, lo, hi):
        """Value range on ``[lo, hi)`` as an :class:`Interval` (d = 1)."""
        a = self.value(lo)[0]
        if self.is_constant:
            return Interval.point(a)
        return Interval.between(a, True, self.value_or_limit(hi)[0], False)

    def to_json(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Affine(Primitive):
    slope: Vector
    intercept: Vector

    def __post_init__(self):
        object.__setattr__(self, "slope", tuple(Fraction(c) for c in self.slope))
        object.__setattr__(self, "intercept", tuple(Fraction(c) for c in self.intercept))
        if len(self.slope) != len(self.intercept) or len(self.slope) not in (1, 2):
            raise ValueError("slope/intercept dimension mismatch")

    @property
    def dim(self) -> int:
        return len(self.slope)

    def value(self, t) -> Vector:
        return tuple(k * t + c for k, c in zip(self.slope, self.intercept))

    def right_derivative(self, t) -> Vector:
        return self.slope

    def monotone_sign(self) -> tuple:
        return tuple(sc.sign(k) for k in self.slope)

    def preimage(self, y, lo, hi, hi_closed=False):
        t = None
        for k, c, yc in zip(self.slope, self.intercept, y):
            if k == 0:
                if c != yc:
                    return None
                continue
            tc = (yc - c) / k
            if t is None:
                t = tc
            elif t != tc:
                return None
        if t is None:
            return lo
        if t < lo or t > hi or (t == hi and not hi_closed):
            return None
        return t

    def shifted(self, dt) -> "Affine":
        return Affine(self.slope, tuple(c - k * dt for k, c in zip(self.slope, self.intercept)))

    def to_json(self) -> dict:
        return {"type": "affine", "slope": [sc.fmt(k) for k in self.slope],
                "intercept": [sc.fmt(c) for c in self.intercept]}


@dataclass(frozen=True)
class Constant(Primitive):
    val: Vector

    def __post_init__(self):
        object.__setattr__(self, "val", tuple(Fraction(c) for c in self.val))

    @property
    def dim(self) -> int:
        return len(self.val)

    def value(self, t) -> Vector:
        return self.val

    def right_derivative(self, t) -> Vector:
        return tuple(Fraction(0) for _ in self.val)

    def monotone_sign(self) -> tuple:
        return tuple(0 for _ in self.val)

    def preimage(self, y, lo, hi, hi_closed=False):
        return lo if tuple(y) == self.val else None

    def shifted(self, dt) -> "Constant":
        return self

    def to_json(self) -> dict:
        return {"type": "constant", "value": [sc.fmt(c) for c in self.val]}


@dataclass(frozen=True)
class Exponential(Primitive):
    """``t -> sign * exp(t - shift)`` in one dimension."""

    sign: int = 1
    shift: Fraction = Fraction(0)
    exact_capable = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        object.__setattr__(self, "shift", Fraction(self.shift))

    def value(self, t) -> Vector:
        return (self.sign * sc.exp(t - self.shift),)

    def right_derivative(self, t) -> Vector:
        return self.value(t)

    def monotone_sign(self) -> tuple:
        return (self.sign,)

    def preimage(self, y, lo, hi, hi_closed=False):
        (y,) = y
        r = y * self.sign
        if sc.sign(r) <= 0:
            return None
        t = self.shift + sc.log(r)
        if t < lo or t > hi or (t == hi and not hi_closed):
            return None
        return t

    def shifted(self, dt) -> "Exponential":
        return Exponential(self.sign, self.shift + dt)

    def to_json(self) -> dict:
        return {"type": "exponential", "sign": self.sign, "shift": sc.fmt(self.shift)}


@dataclass(frozen=True)
class CantorDevil(Primitive):
    """``t -> g({t - shift}) + floor(t - shift)`` with ``g = (h + id) / 2``."""

    shift: Fraction = Fraction(0)
    absolutely_continuous = False

    def __post_init__(self):
        object.__setattr__(self, "shift", Fraction(self.shift))

    def value(self, t) -> Vector:
        u = t - self.shift
        if isinstance(u, Approx):
            n = sc.floor(u)
            frac = u - n
            g = float(cantor_g(Fraction(min(max(frac.value, 0.0), 1.0))))
            # g is 1-Lipschitz from the right only up to the Cantor modulus;
            # the bound log(2)/log(3)-Holder gives |dg| <= |du|**0.63
            return (Approx(g + n, frac.eps ** 0.63 + frac.eps),)
        n = sc.floor(u)
        return (cantor_g(u - n) + n,)

    def right_derivative(self, t):
        # Difference quotients of the Cantor part diverge or oscillate on the
        # Cantor set, and no rational point has a usable finite limit here.
        return None

    def monotone_sign(self) -> tuple:
        return (1,)

    def preimage(self, y, lo, hi, hi_closed=False):
        (y,) = y
        n = sc.floor(y)
        t = cantor_g_inverse(y - n) + n + self.shift
        if t < lo or t > hi or (t == hi and not hi_closed):
            return None
        return t

    def shifted(self, dt) -> "CantorDevil":
        return CantorDevil(self.shift + dt)

    def to_json(self) -> dict:
        return {"type": "cantor", "shift": sc.fmt(self.shift)}


def primitive_from_json(d: dict) -> Primitive:
    kind = d["type"]
    if kind == "affine":
        return Affine(tuple(sc.parse_scalar(x) for x in d["slope"]),
                      tuple(sc.parse_scalar(x) for x in d["intercept"]))
    if kind == "constant":
        return Constant(tuple(sc.parse_scalar(x) for x in d["value"]))
    if kind == "exponential":
        return Exponential(int(d.get("sign", 1)), sc.parse_scalar(d.get("shift", "0")))
    if kind == "cantor":
        return CantorDevil(sc.parse_scalar(d.get("shift", "0")))
    raise ValueError(f"unknown primitive type {kind!r}")
