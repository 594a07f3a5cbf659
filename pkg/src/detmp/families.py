"""Infinite families of affine pieces accumulating at one time point (d = 1).

A *left* family occupies ``[acc - scale, acc)`` with piece ``n`` on
``[b_n, b_{n+1})`` and ``b_n`` increasing to ``acc``.  A *right* family
occupies ``[acc, acc + scale)``; piece ``n`` lives on ``[b_{n+1}, b_n)`` with
``b_n`` decreasing to ``acc``, and the point ``acc`` itself carries the limit
value so the path stays right-continuous there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import scalar as sc
from .intervals import Interval
from .primitives import Affine, primitive_from_json
from .scalar import Approx
from .series import Divergent, TermSeq

_SEARCH_CAP = 1 << 40


class UnsupportedStructure(Exception):
    """The representation is outside what the exact decision procedures cover."""


def _pos(v):
    return v if v > 0 else Fraction(0)


def _neg(v):
    return -v if v < 0 else Fraction(0)


PART_FN = {"abs": abs, "pos": _pos, "neg": _neg}


class Family:
    dim = 1
    kind: str
    acc: Fraction
    scale: Fraction
    side: str

    # subclasses provide: boundary, piece, limit, jump_tail, cont_tail,
    # tail_hulls, scaling_form, to_json

    @property
    def lo(self):
        return self.acc - self.scale if self.side == "left" else self.acc

    @property
    def hi(self):
        return self.acc if self.side == "left" else self.acc + self.scale

    def interval(self, n: int) -> tuple:
        if self.side == "left":
            return self.boundary(n), self.boundary(n + 1)
        return self.boundary(n + 1), self.boundary(n)

    def _first_index(self, pred, start: int = 0) -> int:
        """Smallest ``n >= start`` with ``pred(n)``, for a monotone predicate."""
        if pred(start):
            return start
        step = 1
        lo = start
        while not pred(start + step):
            lo = start + step
            step *= 2
            if step > _SEARCH_CAP:
                raise UnsupportedStructure("index search did not terminate")
        hi = start + step
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if pred(mid):
                hi = mid
            else:
                lo = mid
        return hi

    def index_at(self, t) -> int:
        """Index of the piece whose half-open interval contains ``t``."""
        if not (self.lo <= t < self.hi) or (self.side == "right" and t == self.acc):
            raise ValueError(f"time {t} is not inside a piece of this family")
        if self.side == "left":
            return self._first_index(lambda n: self.boundary(n + 1) > t)
        return self._first_index(lambda n: self.boundary(n + 1) <= t)

    def index_left_of(self, t) -> int:
        """Index of the piece containing ``(t - eps, t)`` for small eps."""
        if self.side == "left":
            return self._first_index(lambda n: self.boundary(n + 1) >= t)
        return self._first_index(lambda n: self.boundary(n + 1) < t)

    def value(self, t):
        if self.side == "right" and t == self.acc:
            return (self.limit,)
        return self.piece(self.index_at(t)).value(t)

    def left_limit(self, t):
        """Left limit for ``lo < t <= hi``."""
        if self.side == "left" and t == self.hi:
            return (self.limit,)
        return self.piece(self.index_left_of(t)).value(t)

    def closed_value(self, n: int):
        l, _ = self.interval(n)
        return self.piece(n).value(l)[0]

    def open_value(self, n: int):
        _, r = self.interval(n)
        return self.piece(n).value(r)[0]

    def piece_range(self, n: int) -> Interval:
        p = self.piece(n)
        l, r = self.interval(n)
        if p.is_constant:
            return Interval.point(p.value(l)[0])
        return Interval.between(p.value(l)[0], True, p.value(r)[0], False)

    def jump(self, n: int):
        """Signed jump at the interior boundary ``b_n`` (``n >= 1``)."""
        t = self.boundary(n)
        before, after = (n - 1, n) if self.side == "left" else (n, n - 1)
        return self.piece(after).value(t)[0] - self.piece(before).value(t)[0]

    def jump_times(self, wl, wh, include_lo: bool = False) -> tuple:
        """Interior boundaries in ``(wl, wh]`` as an index range.

        Returns ``(first, last)``; ``last`` is None for an infinite range and
        the range is empty when ``first > last``.
        """
        above = (lambda x: x >= wl) if include_lo else (lambda x: x > wl)
        if self.side == "left":
            first = self._first_index(lambda n: above(self.boundary(n)), 1)
            if wh >= self.acc:
                return first, None
            last = self._first_index(lambda n: self.boundary(n) > wh, 1) - 1
            return first, last
        first = self._first_index(lambda n: self.boundary(n) <= wh, 1)
        if wl <= self.acc:
            return first, None
        last = self._first_index(lambda n: not above(self.boundary(n)), 1) - 1
        return first, last

    def _piece_part(self, n: int, a, b, fn):
        l, r = self.interval(n)
        a, b = max(a, l), min(b, r)
        if a >= b:
            return Fraction(0)
        p = self.piece(n)
        return fn(p.value(b)[0] - p.value(a)[0])

    def cont_var(self, a, b, fn=abs):
        """Variation of the continuous pieces over ``[a, b]``."""
        a, b = max(a, self.lo), min(b, self.hi)
        if a >= b:
            return Fraction(0)
        if self.side == "left":
            n0 = self.index_at(a)
            if b == self.acc:
                tail = self.cont_tail(n0 + 1, fn)
                return self._piece_part(n0, a, b, fn) + tail
            n1 = self.index_left_of(b)
            return sum((self._piece_part(n, a, b, fn) for n in range(n0, n1 + 1)), Fraction(0))
        n1 = self.index_left_of(b)
        if a == self.acc:
            return self._piece_part(n1, a, b, fn) + self.cont_tail(n1 + 1, fn)
        n0 = self.index_at(a)
        return sum((self._piece_part(n, a, b, fn) for n in range(n1, n0 + 1)), Fraction(0))

    def jump_sum(self, first: int, last: Optional[int], fn=abs):
        if last is None:
            return self.jump_tail(first, fn)
        return sum((fn(self.jump(n)) for n in range(first, last + 1)), Fraction(0))

    def divergence_witness(self, first: int, bound, cap: int = 10 ** 7) -> Optional[int]:
        """Smallest N with ``sum_{first <= n < first+N} |jump(n)| > bound``."""
        total = Fraction(0)
        for k in range(cap):
            total += abs(self.jump(first + k))
            if total > bound:
                return k + 1
        return None

    def injectivity(self) -> Optional[tuple]:
        """None when the family is injective, else an intra-family piece pair.

        Raises :class:`UnsupportedStructure` when neither certificate applies.
        """
        form = self.scaling_form()
        if form is not None:
            pairs = scaling_pairs(self, self, same=True)
            return pairs[0] if pairs else None
        sigma = self.monotone_chain()
        if sigma:
            return None
        raise UnsupportedStructure(f"{self.kind}: no injectivity certificate")

    def monotone_chain(self) -> int:
        return 0

    def shifted(self, dt) -> "Family":
        raise NotImplementedError


@dataclass(frozen=True)
class GeometricFamily(Family):
    """Boundaries ``acc -/+ scale * ratio**n`` with TermSeq slopes/intercepts."""

    kind: str
    acc: Fraction
    scale: Fraction
    ratio: Fraction
    side: str
    slope: TermSeq
    intercept: TermSeq
    even: Optional[Affine] = None
    odd: Optional[Affine] = None
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    def __post_init__(self):
        for name in ("acc", "scale", "ratio"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if not (0 < self.ratio < 1) or self.scale <= 0:
            raise ValueError("need 0 < ratio < 1 and scale > 0")

    @classmethod
    def alternating(cls, kind, acc, scale, ratio, side, even: Affine, odd: Affine):
        if even.dim != 1 or odd.dim != 1:
            raise ValueError("families are one-dimensional")
        ke, ko = even.slope[0], odd.slope[0]
        ce, co = even.intercept[0], odd.intercept[0]
        slope = TermSeq([((ke + ko) / 2, 1), ((ke - ko) / 2, -1)])
        intercept = TermSeq([((ce + co) / 2, 1), ((ce - co) / 2, -1)])
        return cls(kind, acc, scale, ratio, side, slope, intercept, even, odd)

    # sequences ----------------------------------------------------------
    def _seq(self, name):
        if name not in self._cache:
            sgn = -1 if self.side == "left" else 1
            b = TermSeq([(self.acc, 1), (sgn * self.scale, self.ratio)])
            u = self.slope * b + self.intercept
            v = self.slope * b.shift(1) + self.intercept
            prev = self.slope.shift(-1) * b + self.intercept.shift(-1)
            if self.side == "left":
                seqs = {"b": b, "cl": u, "op": v, "inc": v - u, "jump": u - prev}
            else:
                seqs = {"b": b, "cl": v, "op": u, "inc": u - v, "jump": prev - u}
            self._cache.update(seqs)
        return self._cache[name]

    def boundary(self, n: int):
        return self._seq("b")(n)

    def piece(self, n: int) -> Affine:
        if self.even is not None:
            return self.even if n % 2 == 0 else self.odd
        return Affine((self.slope(n),), (self.intercept(n),))

    @property
    def limit(self):
        return self._seq("cl").limit()

    def validate(self) -> list:
        errs = []
        lu, lv = self._seq("cl").limit(), self._seq("op").limit()
        if lu is None or lv is None or lu != lv:
            errs.append("pieces do not converge to a common limit at the accumulation time")
        return errs

    def jump(self, n: int):
        return self._seq("jump")(n)

    def jump_tail(self, first: int, fn=abs):
        return self._seq("jump")._part_sum(first, fn)

    def cont_tail(self, first: int, fn=abs):
        return self._seq("inc")._part_sum(first, fn)

    def tail_hulls(self, n: int) -> list:
        """Per-parity intervals containing all values of pieces ``m >= n``."""
        cache = self.__dict__.setdefault("_hulls", {})  # frozen, so memoize beside the fields
        if n not in cache:
            cache[n] = self._tail_hulls(n)
        return cache[n]

    def _tail_hulls(self, n: int) -> list:
        L = self.limit
        out = []
        for p in (0, 1):
            k0 = max((n - p + 1) // 2, 0)
            x = (self._seq("cl") - TermSeq.const(L)).parity(p)
            y = (self._seq("op") - TermSeq.const(L)).parity(p)
            delta = max(_decay_bound(x, k0), _decay_bound(y, k0))
            sx = x.signs_from(k0) if not x.is_zero else {0}
            sy = y.signs_from(k0) if not y.is_zero else {0}
            signs = sx | sy
            closed = 0 in sx
            if signs <= {0, 1}:
                out.append(Interval(L, L + delta, closed, True))
            elif signs <= {0, -1}:
                out.append(Interval(L - delta, L, True, closed))
            else:
                out.append(Interval(L - delta, L + delta, True, True))
        return out

    def scaling_form(self):
        """``(L, R, {p: J_p})`` when piece ``2m+p`` has range ``L + R**m * J_p``."""
        L = self.limit
        js, ratios = {}, set()
        for p in (0, 1):
            x = (self._seq("cl") - TermSeq.const(L)).parity(p)
            y = (self._seq("op") - TermSeq.const(L)).parity(p)
            if len(x.terms) != 1 or len(y.terms) != 1:
                return None
            (cx, rx), (cy, ry) = x.terms[0], y.terms[0]
            ratios |= {rx, ry}
            js[p] = Interval.between(cx, True, cy, False)
        if len(ratios) != 1:
            return None
        return L, ratios.pop(), js

    def monotone_chain(self) -> int:
        signs = self._seq("inc").signs_from(0)
        if signs not in ({1}, {-1}):
            return 0
        sigma = signs.pop()
        if self._seq("jump").signs_from(1) <= {0, sigma}:
            return sigma
        return 0

    def shifted(self, dt) -> "GeometricFamily":
        if self.even is not None:
            return GeometricFamily.alternating(self.kind, self.acc + dt, self.scale, self.ratio,
                                               self.side, self.even.shifted(dt), self.odd.shifted(dt))
        return GeometricFamily(self.kind, self.acc + dt, self.scale, self.ratio, self.side,
                               self.slope, self.intercept - self.slope * dt)

    def to_json(self) -> dict:
        d = {"kind": self.kind, "acc": sc.fmt(self.acc), "scale": sc.fmt(self.scale)}
        if self.kind != "dyadic_alternating":
            d["ratio"] = sc.fmt(self.ratio)
        d["side"] = self.side
        if self.even is not None:
            d["even"] = self.even.to_json()
            d["odd"] = self.odd.to_json()
        else:
            d["slope"] = [[sc.fmt(c), sc.fmt(r)] for c, r in self.slope.terms]
            d["intercept"] = [[sc.fmt(c), sc.fmt(r)] for c, r in self.intercept.terms]
        return d


def _decay_bound(x: TermSeq, k0: int):
    return sum((abs(c) * r ** k0 for c, r in x.terms), Fraction(0))


@dataclass(frozen=True)
class HarmonicFamily(Family):
    """Left family with boundaries ``acc - scale/(n+1)`` and alternating pieces.

    Both pieces pass through the limit at ``acc`` with different slopes, so
    the jump at ``b_n`` has size ``|k_even - k_odd| * scale / (n+1)`` and the
    jumps are never summable.
    """

    acc: Fraction
    scale: Fraction
    even: Affine
    odd: Affine
    kind = "harmonic_flip"
    side = "left"

    def __post_init__(self):
        object.__setattr__(self, "acc", Fraction(self.acc))
        object.__setattr__(self, "scale", Fraction(self.scale))
        if self.scale <= 0:
            raise ValueError("scale must be positive")

    def boundary(self, n: int):
        return self.acc - self.scale / (n + 1)

    def piece(self, n: int) -> Affine:
        return self.even if n % 2 == 0 else self.odd

    @property
    def limit(self):
        return self.even.value(self.acc)[0]

    def validate(self) -> list:
        errs = []
        if self.even.value(self.acc) != self.odd.value(self.acc):
            errs.append("even and odd pieces disagree at the accumulation time")
        if self.even.slope == self.odd.slope:
            errs.append("even and odd pieces coincide; the family has no jumps")
        return errs

    def index_at(self, t) -> int:
        if not (self.lo <= t < self.hi):
            raise ValueError(f"time {t} is not inside a piece of this family")
        n = max(math.floor(self.scale / (self.acc - t)) - 1, 0)
        while self.boundary(n) > t:
            n -= 1
        while self.boundary(n + 1) <= t:
            n += 1
        return n

    def jump_tail(self, first: int, fn=abs):
        return Divergent(reason="jump sizes decay like 1/n")

    def divergence_witness(self, first: int, bound, cap: int = 10 ** 7) -> Optional[int]:
        """As for any family, but using ``|jump(n)| = C/(n+1)``.

        Counts up to a few thousand are found exactly; larger ones from the
        asymptotic expansion of harmonic numbers (error far below 1e-12).
        None when the count exceeds ``cap``.
        """
        C = abs(self.even.slope[0] - self.odd.slope[0]) * self.scale
        need = float(Fraction(bound) / C)

        def H(m: int) -> float:
            if m < 64:
                return math.fsum(1 / k for k in range(1, m + 1))
            return math.log(m) + 0.5772156649015329 + 1 / (2 * m) - 1 / (12 * m * m) + 1 / (120 * m ** 4)

        base = H(first)
        if H(first + cap) - base <= need:
            return None
        lo, hi = 0, cap  # S(lo) <= need < S(hi), S(N) = H(first + N) - H(first)
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if H(first + mid) - base > need:
                hi = mid
            else:
                lo = mid
        if hi <= 4000:
            return super().divergence_witness(first, bound, cap)
        return hi

    def cont_tail(self, first: int, fn=abs):
        we, wo = fn(self.even.slope[0]), fn(self.odd.slope[0])
        if we == wo:
            return we * self.scale / (first + 1)
        # sum over even m >= 0 of 1/((m+1)(m+2)) is log 2
        head_even = sum((Fraction(1, (m + 1) * (m + 2)) for m in range(0, first, 2)), Fraction(0))
        even_part = Approx(math.log(2), 1e-15) - head_even
        total = Fraction(1, first + 1)
        odd_part = total - even_part
        return self.scale * (we * even_part + wo * odd_part)

    def tail_hulls(self, n: int) -> list:
        L = self.limit
        out = []
        for p in (0, 1):
            k = self.piece(p).slope[0]
            m = n if n % 2 == p else n + 1
            delta = abs(k) * self.scale / (m + 1)
            # values are k * (t - acc) + L with t < acc
            if k > 0:
                out.append(Interval(L - delta, L, True, False))
            elif k < 0:
                out.append(Interval(L, L + delta, False, True))
            else:
                out.append(Interval.point(L))
        return out

    def scaling_form(self):
        return None

    def injectivity(self) -> Optional[tuple]:
        # |value - L| = |k| (acc - t) is strictly decreasing within a parity,
        # so opposite slopes put the two parities on opposite sides of L
        ke, ko = self.even.slope[0], self.odd.slope[0]
        if ke * ko < 0:
            return None
        raise UnsupportedStructure("harmonic family with equal-sign slopes")

    def shifted(self, dt) -> "HarmonicFamily":
        return HarmonicFamily(self.acc + dt, self.scale, self.even.shifted(dt), self.odd.shifted(dt))

    def to_json(self) -> dict:
        return {"kind": self.kind, "acc": sc.fmt(self.acc), "scale": sc.fmt(self.scale),
                "even": self.even.to_json(), "odd": self.odd.to_json()}


# --- scaling comparison ----------------------------------------------------

def scaling_pairs(f: Family, g: Family, same: bool = False) -> list:
    """Earliest intersecting piece pairs ``(n, n')`` of two self-similar families.

    Both families need a common limit and ratio; piece
    ranges are then ``L + R**m * J_p`` and intersection only depends on the
    parity pair and the index offset.
    """
    ff, fg = f.scaling_form(), g.scaling_form()
    if ff is None or fg is None:
        raise UnsupportedStructure("families are not self-similar")
    (L1, R1, J1), (L2, R2, J2) = ff, fg
    if L1 != L2 or R1 != R2:
        raise UnsupportedStructure("self-similar families with different limits or ratios")
    mags = [abs(x) for J in (*J1.values(), *J2.values()) for x in (J.lo, J.hi)]
    lo_mag, hi_mag = min(mags), max(mags)
    if lo_mag == 0:
        raise UnsupportedStructure("piece ranges touch the limit value")
    D = 0
    while R1 ** D * hi_mag >= lo_mag:
        D += 1
    out = []
    for p in (0, 1):
        for q in (0, 1):
            for d in range(-D, D + 1):
                if same and d == 0 and p == q:
                    continue
                if not J1[p].meets(J2[q].scaled(R1 ** d)):
                    continue
                m = max(0, -d)
                n, n2 = 2 * m + p, 2 * (m + d) + q
                if same and n2 <= n:
                    continue
                out.append((n, n2))
    return sorted(set(out))


def family_from_json(d: dict) -> Family:
    kind = d["kind"]
    P = sc.parse_scalar
    if kind == "harmonic_flip":
        return HarmonicFamily(P(d["acc"]), P(d["scale"]),
                              primitive_from_json(d["even"]), primitive_from_json(d["odd"]))
    if kind in ("dyadic_alternating", "geometric_flip"):
        ratio = Fraction(1, 2) if kind == "dyadic_alternating" else P(d["ratio"])
        return GeometricFamily.alternating(kind, P(d["acc"]), P(d["scale"]), ratio,
                                           d.get("side", "left"),
                                           primitive_from_json(d["even"]),
                                           primitive_from_json(d["odd"]))
    if kind == "geometric_landing":
        def seq(key):
            return TermSeq((P(c), P(r)) for c, r in d[key])
        return GeometricFamily(kind, P(d["acc"]), P(d["scale"]), P(d["ratio"]),
                               d.get("side", "left"), seq("slope"), seq("intercept"))
    raise ValueError(f"unknown family kind {kind!r}")
