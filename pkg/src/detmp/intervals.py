"""Real intervals with explicit open/closed ends, used for value ranges."""

from __future__ import annotations

from dataclasses import dataclass

from .scalar import INF


@dataclass(frozen=True)
class Interval:
    lo: object
    hi: object
    lo_closed: bool = True
    hi_closed: bool = True

    @staticmethod
    def point(x) -> "Interval":
        return Interval(x, x, True, True)

    @staticmethod
    def between(a, a_closed: bool, b, b_closed: bool) -> "Interval":
        """Interval spanned by two endpoints given in either order."""
        if a <= b:
            return Interval(a, b, a_closed, b_closed)
        return Interval(b, a, b_closed, a_closed)

    @property
    def empty(self) -> bool:
        if self.lo < self.hi:
            return False
        if self.lo == self.hi:
            return not (self.lo_closed and self.hi_closed) or self.lo in (INF, -INF)
        return True

    def contains(self, x) -> bool:
        if x < self.lo or x > self.hi:
            return False
        if x == self.lo and not self.lo_closed:
            return False
        if x == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> "Interval":
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif self.lo < other.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif self.hi > other.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        return Interval(lo, hi, lc, hc)

    def meets(self, other: "Interval") -> bool:
        return not self.intersect(other).empty

    def hull(self, other: "Interval") -> "Interval":
        if self.empty:
            return other
        if other.empty:
            return self
        if self.lo < other.lo:
            lo, lc = self.lo, self.lo_closed
        elif self.lo > other.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed or other.lo_closed
        if self.hi > other.hi:
            hi, hc = self.hi, self.hi_closed
        elif self.hi < other.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed or other.hi_closed
        return Interval(lo, hi, lc, hc)

    def scaled(self, k) -> "Interval":
        """``{k * x : x in self}`` for a nonzero scalar ``k``."""
        if k > 0:
            return Interval(self.lo * k, self.hi * k, self.lo_closed, self.hi_closed)
        return Interval(self.hi * k, self.lo * k, self.hi_closed, self.lo_closed)

    def shifted(self, c) -> "Interval":
        return Interval(self.lo + c, self.hi + c, self.lo_closed, self.hi_closed)


EMPTY = Interval(0, 0, False, False)
