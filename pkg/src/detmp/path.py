"""Exact piecewise càdlàg paths ``f: [0, inf) -> R^d``."""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from . import scalar as sc
from .families import PART_FN, Family, family_from_json
from .intervals import Interval
from .primitives import Constant, Primitive, primitive_from_json
from .scalar import INF
from .series import Divergent


class PathError(ValueError):
    pass


class UnvalidatedPath(PathError):
    pass


class EvaluationAtInfinity(PathError):
    pass


class LeftLimitUndefined(PathError):
    pass


@dataclass(frozen=True)
class Segment:
    lo: Fraction
    hi: Union[Fraction, float]
    prim: Primitive

    def value(self, t):
        return self.prim.value(t)

    def left_limit(self, t):
        return self.prim.value(t)

    def cont_var(self, a, b, fn=abs):
        a, b = max(a, self.lo), min(b, self.hi)
        if a >= b:
            return Fraction(0)
        return increment_size(vsub(self.prim.value(b), self.prim.value(a)), fn)


@dataclass(frozen=True)
class ConstantTail:
    start: Fraction
    value: tuple


@dataclass(frozen=True)
class PeriodicRepeat:
    t0: Fraction
    period: Fraction


@dataclass(frozen=True)
class UnboundedPrimitive:
    start: Fraction
    prim: Primitive


Tail = Union[ConstantTail, PeriodicRepeat, UnboundedPrimitive]


@dataclass(frozen=True)
class JumpPoint:
    time: Fraction
    left_limit: tuple
    value: tuple
    size: tuple


@dataclass(frozen=True)
class FamilyTail:
    """Infinitely many jumps of one family, summarized by a closed form."""

    family: Family
    shift: Fraction
    first: int
    abs_sum: Fraction
    pos_sum: Fraction
    neg_sum: Fraction


@dataclass(frozen=True)
class JumpInventory:
    points: tuple
    tails: tuple = ()

    def __iter__(self) -> Iterator[JumpPoint]:
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    @property
    def finite(self) -> bool:
        return not self.tails

    def times(self) -> list:
        return [j.time for j in self.points]

    def part_sum(self, kind: str = "abs"):
        """Sum of ``|size|`` (or of positive/negative parts) over all jumps."""
        fn = PART_FN[kind]
        total = sum((increment_size(j.size, fn) for j in self.points), Fraction(0))
        for tail in self.tails:
            total += getattr(tail, f"{kind}_sum")
        return total


@dataclass(frozen=True)
class DivergentInventory:
    """The window contains infinitely many jumps with no finite absolute sum."""

    family: Family
    accumulation_time: Fraction
    first: int
    bound: Fraction
    witness: Optional[int]
    points: tuple = ()


@dataclass
class ValidationReport:
    violations: list = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def vsub(a, b) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vadd(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def increment_size(v: tuple, fn=abs):
    """``fn`` of a 1-d increment; Euclidean length in two dimensions."""
    if len(v) == 1:
        return fn(v[0])
    if fn is not abs:
        raise ValueError("positive/negative parts are only defined in one dimension")
    return sc.sqrt(sum((x * x for x in v), Fraction(0)))


class PathSpec:
    """A càdlàg path given by segments, families and a tail rule."""

    def __init__(self, dim: int, segments=(), families=(), tail: Optional[Tail] = None):
        self.dim = dim
        self.segments = tuple(segments)
        self.families = tuple(families)
        self.tail = tail
        comps = list(self.segments) + list(self.families)
        if isinstance(tail, ConstantTail):
            comps.append(Segment(tail.start, INF, Constant(tail.value)))
        elif isinstance(tail, UnboundedPrimitive):
            comps.append(Segment(tail.start, INF, tail.prim))
        self.components = tuple(sorted(comps, key=lambda c: c.lo))
        self._los = [c.lo for c in self.components]
        self._report: Optional[ValidationReport] = None

    # construction helpers ----------------------------------------------
    @classmethod
    def build(cls, dim, pieces, families=(), tail=None) -> "PathSpec":
        segs = [Segment(Fraction(l), Fraction(r), p) for l, r, p in pieces]
        return cls(dim, segs, families, tail)

    @property
    def periodic(self) -> bool:
        return isinstance(self.tail, PeriodicRepeat)

    @property
    def end(self):
        """End of the explicitly described part (pattern end for periodic paths)."""
        if self.periodic:
            return self.tail.t0 + self.tail.period
        return INF

    # validation ---------------------------------------------------------
    def validate(self) -> ValidationReport:
        if self._report is not None:
            return self._report
        rep = ValidationReport()
        v = rep.violations
        if self.dim not in (1, 2):
            v.append(f"dimension {self.dim} not supported")
        if self.tail is None:
            v.append("missing tail rule")
        for c in self.components:
            if isinstance(c, Segment):
                if c.prim.dim != self.dim:
                    v.append(f"segment [{sc.fmt(c.lo)},{sc.fmt(c.hi)}): primitive dimension mismatch")
                if not c.lo < c.hi:
                    v.append(f"segment [{sc.fmt(c.lo)},{sc.fmt(c.hi)}): empty interval")
            else:
                if self.dim != 1:
                    v.append("segment families are one-dimensional")
                for msg in c.validate():
                    v.append(f"family at {sc.fmt(c.acc)}: {msg}")
        pos = Fraction(0)
        for c in self.components:
            if c.lo > pos:
                v.append(f"gap at [{sc.fmt(pos)},{sc.fmt(c.lo)})")
            elif c.lo < pos:
                v.append(f"overlap at [{sc.fmt(c.lo)},{sc.fmt(min(pos, c.hi))})")
            pos = max(pos, c.hi)
        for f in self.families:
            for c in self.components:
                if c is not f and isinstance(c, Segment) and c.lo < f.acc < c.hi:
                    v.append(f"accumulation time {sc.fmt(f.acc)} lies inside segment "
                             f"[{sc.fmt(c.lo)},{sc.fmt(c.hi)})")
        if self.periodic:
            t0, P = self.tail.t0, self.tail.period
            if P <= 0:
                v.append("period must be positive")
            if pos != self.end:
                v.append(f"pattern must end at t0 + period = {sc.fmt(self.end)}")
            if t0 not in self._los:
                v.append(f"periodic start {sc.fmt(t0)} must be a piece boundary")
        elif self.tail is not None and pos != INF:
            v.append(f"gap at [{sc.fmt(pos)},inf)")
        self._report = rep
        return rep

    def require_valid(self) -> None:
        rep = self.validate()
        if not rep.valid:
            raise UnvalidatedPath("; ".join(rep.violations))

    # evaluation ---------------------------------------------------------
    def reduce(self, t):
        """Map ``t`` into the explicitly described part using periodicity."""
        if self.periodic and t >= self.end:
            t0, P = self.tail.t0, self.tail.period
            k = sc.floor((t - t0) / P)
            t = t - k * P
            while t >= self.end:
                t -= P
            while t < t0:
                t += P
        return t

    def component_at(self, t):
        i = bisect_right(self._los, t) - 1
        if i < 0:
            raise PathError(f"time {t} precedes the path")
        return self.components[i]

    def component_left_of(self, t):
        i = bisect_left(self._los, t) - 1
        if i < 0:
            raise LeftLimitUndefined(f"no left limit at {t}")
        return self.components[i]

    def evaluate(self, t) -> tuple:
        self.require_valid()
        if t == INF:
            raise EvaluationAtInfinity("cannot evaluate at +inf")
        if t < 0:
            raise PathError("negative time")
        t = self.reduce(t)
        return self.component_at(t).value(t)

    __call__ = evaluate

    def left_limit(self, t) -> tuple:
        self.require_valid()
        if t == INF:
            raise EvaluationAtInfinity("cannot take a left limit at +inf")
        if not t > 0:
            raise LeftLimitUndefined("left limits need t > 0")
        if self.periodic and t > self.end:
            r = self.reduce(t)
            t = self.end if r == self.tail.t0 else r
        return self.component_left_of(t).left_limit(t)

    # windows ------------------------------------------------------------
    def cover(self, a, b) -> list:
        """Pieces ``(component, l, r, shift)`` covering ``[a, b)`` in absolute time."""
        out = []
        blocks = [(Fraction(0), self.end, Fraction(0))]
        if self.periodic and b > self.end:
            t0, P = self.tail.t0, self.tail.period
            k0 = max(1, sc.floor((a - self.end) / P) + 1)
            k = k0
            while self.end + (k - 1) * P < b:
                blocks.append((self.end + (k - 1) * P, self.end + k * P, k * P))
                k += 1
        for blo, bhi, shift in blocks:
            lo, hi = max(a, blo), min(b, bhi)
            if lo >= hi:
                continue
            for c in self.components:
                if shift and c.lo < self.tail.t0:
                    continue
                l, r = max(lo, c.lo + shift), min(hi, c.hi + shift)
                if l < r:
                    out.append((c, l, r, shift))
        return out

    def breakpoints(self, a, b) -> list:
        """Component start times in ``(a, b)`` (absolute)."""
        return sorted({l for _, l, _, _ in self.cover(a, b) if l > a})

    def jumps_in(self, a, b, include_lo: bool = True, bound=Fraction(10)):
        """Jumps in ``[a, b]`` (or ``(a, b]``) as an inventory."""
        self.require_valid()
        a, b = Fraction(a), Fraction(b)
        points: dict = {}
        tails = []
        covered = []  # time ranges whose jumps are summed by a tail
        cands = set()
        pieces = self.cover(a, b)
        for c, l, r, shift in pieces:
            if l > a or include_lo:
                cands.add(l)
            if isinstance(c, Family):
                first, last = c.jump_times(l - shift, r - shift, include_lo=(l == a and include_lo))
                if last is None:
                    s_abs = c.jump_tail(first, abs)
                    if isinstance(s_abs, Divergent):
                        return DivergentInventory(c, c.acc + shift, first, Fraction(bound),
                                                  c.divergence_witness(first, bound),
                                                  tuple(sorted(points.values(), key=lambda j: j.time)))
                    tails.append(FamilyTail(c, shift, first, s_abs,
                                            c.jump_tail(first, PART_FN["pos"]),
                                            c.jump_tail(first, PART_FN["neg"])))
                    edge, acc = c.boundary(first) + shift, c.acc + shift
                    covered.append(Interval.between(edge, True, acc, False) if c.side == "left"
                                   else Interval.between(acc, False, edge, True))
                    continue
                for n in range(first, last + 1):
                    tau = c.boundary(n) + shift
                    if tau >= r:
                        continue
                    cands.add(tau)
        cands.add(b)
        for tau in cands:
            if tau <= 0 or tau < a or (tau == a and not include_lo) or tau > b:
                continue
            if any(iv.contains(tau) for iv in covered):
                continue
            ll, v = self.left_limit(tau), self.evaluate(tau)
            if ll != v:
                points[tau] = JumpPoint(tau, ll, v, vsub(v, ll))
        pts = tuple(sorted(points.values(), key=lambda j: j.time))
        return JumpInventory(pts, tuple(tails))

    def cont_var(self, a, b, fn=abs):
        total = Fraction(0)
        for c, l, r, shift in self.cover(a, b):
            total = total + c.cont_var(l - shift, r - shift, fn)
        return total

    # serialization ------------------------------------------------------
    def to_json(self) -> dict:
        d = {"dimension": self.dim,
             "segments": [{"interval": [sc.fmt(s.lo), sc.fmt(s.hi)], "primitive": s.prim.to_json()}
                          for s in self.segments],
             "families": [f.to_json() for f in self.families]}
        t = self.tail
        if isinstance(t, ConstantTail):
            d["tail"] = {"type": "constant", "from": sc.fmt(t.start), "value": [sc.fmt(x) for x in t.value]}
        elif isinstance(t, PeriodicRepeat):
            d["tail"] = {"type": "periodic", "t0": sc.fmt(t.t0), "period": sc.fmt(t.period)}
        elif isinstance(t, UnboundedPrimitive):
            d["tail"] = {"type": "unbounded", "from": sc.fmt(t.start), "primitive": t.prim.to_json()}
        return d

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, d: dict) -> "PathSpec":
        P = sc.parse_scalar
        dim = int(d["dimension"])
        segs = [Segment(P(s["interval"][0]), sc.parse_time(s["interval"][1]),
                        primitive_from_json(s["primitive"])) for s in d.get("segments", [])]
        fams = [family_from_json(f) for f in d.get("families", [])]
        t = d.get("tail")
        tail = None
        if t is not None:
            kind = t["type"]
            if kind == "constant":
                tail = ConstantTail(P(t["from"]), tuple(P(x) for x in t["value"]))
            elif kind == "periodic":
                tail = PeriodicRepeat(P(t["t0"]), P(t["period"]))
            elif kind == "unbounded":
                tail = UnboundedPrimitive(P(t["from"]), primitive_from_json(t["primitive"]))
            else:
                raise PathError(f"unknown tail type {kind!r}")
        return cls(dim, segs, fams, tail)

    @classmethod
    def loads(cls, text: str) -> "PathSpec":
        return cls.from_json(json.loads(text))

    def __repr__(self) -> str:
        return f"PathSpec(dim={self.dim}, components={len(self.components)}, tail={self.tail!r})"
