"""Exponential-polynomial sequences ``a_n = sum_k c_k * r_k**n`` over rationals.

Jump sizes, interval lengths and slopes of the infinite segment families are
all of this shape, so absolute sums, positive/negative parts and eventual
signs can be decided exactly.  The trick for absolute values is to split by
index parity (turning every ratio into a positive one) and then find the index
after which the term with the largest ratio dominates the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .scalar import INF

_DOMINANCE_CAP = 100_000


@dataclass(frozen=True)
class Divergent:
    """Certificate that a series of nonnegative terms has no finite sum.

    ``witness`` is the smallest index count whose partial sum exceeds
    ``bound`` when one was requested.
    """

    bound: Optional[Fraction] = None
    witness: Optional[int] = None
    reason: str = ""


def _normalize(terms: Iterable[tuple]) -> tuple:
    acc: dict = {}
    for c, r in terms:
        c, r = Fraction(c), Fraction(r)
        if r == 0:
            raise ValueError("ratio 0 is not allowed")
        acc[r] = acc.get(r, Fraction(0)) + c
    return tuple(sorted(((c, r) for r, c in acc.items() if c != 0), key=lambda t: t[1]))


class TermSeq:
    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[tuple] = ()):
        self.terms = _normalize(terms)

    @classmethod
    def const(cls, c) -> "TermSeq":
        return cls([(c, 1)])

    @classmethod
    def geometric(cls, c, r) -> "TermSeq":
        return cls([(c, r)])

    def __call__(self, n: int) -> Fraction:
        return sum((c * r ** n for c, r in self.terms), Fraction(0))

    def __add__(self, other: "TermSeq") -> "TermSeq":
        return TermSeq(self.terms + other.terms)

    def __neg__(self) -> "TermSeq":
        return TermSeq((-c, r) for c, r in self.terms)

    def __sub__(self, other: "TermSeq") -> "TermSeq":
        return self + (-other)

    def __mul__(self, other) -> "TermSeq":
        if isinstance(other, TermSeq):
            return TermSeq((c1 * c2, r1 * r2) for c1, r1 in self.terms for c2, r2 in other.terms)
        k = Fraction(other)
        return TermSeq((c * k, r) for c, r in self.terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, TermSeq) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f"TermSeq({list(self.terms)!r})"

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def shift(self, k: int) -> "TermSeq":
        """The sequence ``n -> a_{n+k}``."""
        return TermSeq((c * r ** k, r) for c, r in self.terms)

    def backward_difference(self) -> "TermSeq":
        """The sequence ``n -> a_n - a_{n-1}``."""
        return TermSeq((c * (1 - 1 / r), r) for c, r in self.terms)

    def parity(self, p: int) -> "TermSeq":
        """The sequence ``m -> a_{2m+p}``; all of its ratios are positive."""
        return TermSeq((c * r ** p, r * r) for c, r in self.terms)

    def limit(self) -> Optional[Fraction]:
        """Limit as n -> infinity, or None when it does not exist."""
        out = Fraction(0)
        for c, r in self.terms:
            if abs(r) < 1:
                continue
            if r == 1:
                out += c
            else:
                return None
        return out

    def extended_limit(self):
        """Like :meth:`limit` but returns +-inf for sequences diverging monotonically."""
        big = [(c, r) for c, r in self.terms if abs(r) > 1 or r == -1]
        if not big:
            return self.limit()
        top = max(abs(r) for _, r in big)
        lead = [(c, r) for c, r in big if abs(r) == top]
        if len(lead) == 1 and lead[0][1] > 1:
            return INF if lead[0][0] > 0 else -INF
        return None

    def converges_to_zero(self) -> bool:
        return all(abs(r) < 1 for _, r in self.terms)

    # sums ---------------------------------------------------------------
    def sum_from(self, start: int):
        """Exact ``sum_{n >= start} a_n`` or :class:`Divergent`."""
        if not self.converges_to_zero():
            return Divergent(reason="terms do not tend to zero")
        return sum((c * r ** start / (1 - r) for c, r in self.terms), Fraction(0))

    def partial_sum(self, start: int, stop: int, fn=None) -> Fraction:
        fn = fn or (lambda v: v)
        return sum((fn(self(n)) for n in range(start, stop)), Fraction(0))

    def _dominance_index(self, start: int) -> int:
        """Smallest m >= start from which the largest-ratio term dominates.

        Only valid for sequences with positive ratios.
        """
        c0, r0 = self.terms[-1]
        rest = [(abs(c), r / r0) for c, r in self.terms[:-1]]
        powers = [q ** start for _, q in rest]
        m = start
        for _ in range(_DOMINANCE_CAP):
            if abs(c0) > sum(c * p for (c, _), p in zip(rest, powers)):
                return m
            powers = [p * q for p, (_, q) in zip(powers, rest)]
            m += 1
        raise RuntimeError("dominance index not found within cap")

    def _positive_ratio_part_sum(self, start: int, fn):
        # self has positive ratios; returns sum_{m>=start} fn(a_m)
        if self.is_zero:
            return Fraction(0)
        m = self._dominance_index(start)
        head = self.partial_sum(start, m, fn)
        c0, r0 = self.terms[-1]
        tail_sign = 1 if c0 > 0 else -1
        weight = fn(Fraction(tail_sign))
        if weight == 0:
            return head
        if r0 >= 1:
            return Divergent(reason="dominant ratio >= 1")
        tail = sum((c * r ** m / (1 - r) for c, r in self.terms), Fraction(0))
        return head + weight * tail_sign * tail

    def _part_sum(self, start: int, fn):
        total = Fraction(0)
        for p in (0, 1):
            sub = self.parity(p)
            m0 = (start - p + 1) // 2
            s = sub._positive_ratio_part_sum(max(m0, 0), fn)
            if isinstance(s, Divergent):
                return s
            total += s
        return total

    def abs_sum_from(self, start: int):
        """Exact ``sum_{n >= start} |a_n|`` or :class:`Divergent`."""
        return self._part_sum(start, abs)

    def pos_sum_from(self, start: int):
        return self._part_sum(start, lambda v: max(v, Fraction(0)))

    def neg_sum_from(self, start: int):
        return self._part_sum(start, lambda v: max(-v, Fraction(0)))

    def signs_from(self, start: int) -> set:
        """The set of signs (-1, 0, 1) taken by ``a_n`` for ``n >= start``."""
        out: set = set()
        for p in (0, 1):
            sub = self.parity(p)
            m0 = max((start - p + 1) // 2, 0)
            if sub.is_zero:
                out.add(0)
                continue
            m = sub._dominance_index(m0)
            for k in range(m0, m):
                v = sub(k)
                out.add((v > 0) - (v < 0))
            out.add(1 if sub.terms[-1][0] > 0 else -1)
        return out

    def first_exceeding(self, bound, start: int = 0, cap: int = 10 ** 7, fn=abs) -> Optional[int]:
        """Smallest N with ``sum_{start <= n < start+N} fn(a_n) > bound``."""
        total = Fraction(0)
        for k in range(cap):
            total += fn(self(start + k))
            if total > bound:
                return k + 1
        return None
