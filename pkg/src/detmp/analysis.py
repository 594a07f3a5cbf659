"""Revisit times, the injective / finally constant / jump-periodic trichotomy,
generalized inverses and structural reports on paths."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import scalar as sc
from .families import Family, UnsupportedStructure
from .path import DivergentInventory, PathSpec, Segment, UnboundedPrimitive
from .primitives import Affine, CantorDevil, Constant, Exponential
from .revisit import (FamAtom, Hit, PointAtom, Tracker, _better, atoms_of, earliest,
                      self_revisit)
from .scalar import INF, ApproximateOnly


class NotInRange(ValueError):
    pass


@dataclass(frozen=True)
class Revisit:
    t0: object
    t1: object
    witness: Optional[tuple]
    t0_attained: bool = True
    t1_attained: bool = True
    approximate: bool = False


@dataclass(frozen=True)
class Classification:
    kind: str
    t0: object = INF
    t1: object = INF
    period: Optional[Fraction] = None
    witness: Optional[tuple] = None
    approximate: bool = False
    evidence: str = ""

    @property
    def markov(self) -> bool:
        return self.kind != "NotMarkovExpandable"

    def to_json(self) -> dict:
        return {"classification": self.kind,
                "t0": sc.fmt(self.t0),
                "t1": sc.fmt(self.t1),
                "period": None if self.period is None else sc.fmt(self.period),
                "witness": None if self.witness is None else [sc.fmt(x) for x in self.witness],
                "approximate": self.approximate,
                "evidence": self.evidence}


# --- revisits ----------------------------------------------------------------

def first_revisit(path: PathSpec, allow_approx: bool = False) -> Revisit:
    """``t0 = inf{s : f(s) = f(t) for some t > s}`` and ``t1 = inf{t : ...}``."""
    path.require_valid()
    atoms = atoms_of(path)
    tr = Tracker()
    best_s: Optional[Hit] = None
    best_t: Optional[Hit] = None
    for i, a in enumerate(atoms):
        s_hit, t_hit = self_revisit(a, tr)
        best_s, best_t = _better(best_s, s_hit), _better(best_t, t_hit)
        for b in atoms[i + 1:]:
            need_s = best_s is None or a.lo <= best_s.time
            need_t = best_t is None or b.lo <= best_t.time
            if not (need_s or need_t):
                continue
            if need_s:
                best_s = _better(best_s, earliest(a, b, tr))
            if need_t:
                best_t = _better(best_t, earliest(b, a, tr))
    if tr.approximate and not allow_approx:
        raise ApproximateOnly("revisit decision needs comparisons of transcendental values")
    if best_t is None:
        return Revisit(INF, INF, None, approximate=tr.approximate)
    t0, t1 = best_s.time, best_t.time
    witness = None
    if best_s.attained and best_t.attained and path.evaluate(t0) == path.evaluate(t1):
        witness = (t0, t1)
    return Revisit(t0, t1, witness, best_s.attained, best_t.attained, tr.approximate)


def _same_function(c1, sh1, c2, sh2) -> bool:
    """Whether ``u -> c1(u - sh1)`` and ``u -> c2(u - sh2)`` are identical."""
    if isinstance(c1, Segment) and isinstance(c2, Segment):
        p, q = c1.prim.shifted(sh1), c2.prim.shifted(sh2)
        if isinstance(p, (Affine, Constant)) and isinstance(q, (Affine, Constant)):
            return (p.right_derivative(0) == q.right_derivative(0)) and p.value(0) == q.value(0)
        return p == q
    if isinstance(c1, Family) and isinstance(c2, Family):
        return c1.shifted(sh1) == c2.shifted(sh2)
    return False


def _probe_points(c, sh, l, r) -> list:
    pts = [l, r, (l + r) / 2]
    if isinstance(c, Family):
        for n in range(8):
            a, b = c.interval(n)
            a, b = a + sh, b + sh
            if l <= a < r:
                pts.append(a)
            if l < (a + b) / 2 < r:
                pts.append((a + b) / 2)
    return pts


def _first_mismatch(path: PathSpec, lag, lo, hi) -> Optional[object]:
    """Smallest probe ``u`` in ``[lo, hi)`` with ``f(u) != f(u - lag)``, or None."""
    left = path.cover(lo, hi)
    right = path.cover(lo - lag, hi - lag)
    cuts = sorted({lo, hi} | {l for _, l, _, _ in left} | {l + lag for _, l, _, _ in right})
    cuts = [c for c in cuts if lo <= c <= hi]
    for x, y in zip(cuts, cuts[1:]):
        c1, sh1 = _locate(left, x)
        c2, sh2 = _locate(right, x - lag)
        if _same_function(c1, sh1, c2, sh2 + lag):
            continue
        for u in _probe_points(c1, sh1, x, y):
            if path.evaluate(u) != path.evaluate(u - lag):
                return u
        raise UnsupportedStructure(f"cannot separate representations on [{x},{y})")
    return None


def _locate(cover, t):
    for c, l, r, sh in cover:
        if l <= t < r:
            return c, sh
    raise UnsupportedStructure(f"no piece at {t}")


def _tail_start(path: PathSpec):
    return path.components[-1].lo


def classify(path: PathSpec, allow_approx: bool = False) -> Classification:
    rv = first_revisit(path, allow_approx)
    t0, t1 = rv.t0, rv.t1
    if t1 == INF:
        return Classification("Injective", approximate=rv.approximate,
                              evidence="no value is attained twice")
    if t0 == t1:
        hi = path.end if path.periodic else max(_tail_start(path), t0) + 1
        ref = path.evaluate(t0)
        for c, l, r, sh in path.cover(t0, hi):
            if isinstance(c, Segment) and c.prim.is_constant and c.prim.value(0) == ref:
                continue
            for u in _probe_points(c, sh, l, r):
                if u >= t0 and path.evaluate(u) != ref:
                    return Classification("NotMarkovExpandable", t0, t1, None, (t0, t1, u),
                                          rv.approximate,
                                          f"f({sc.fmt(u)}) differs from f({sc.fmt(t0)}) after t0 = t1")
            raise UnsupportedStructure("constancy check inconclusive")
        return Classification("FinallyConstant", t0, t1, None, rv.witness or (t0, t1), rv.approximate,
                              f"constant {_fmt_vec(ref)} from t0")
    lag = t1 - t0
    if not (rv.t0_attained and rv.t1_attained):
        u = t1
        return Classification("NotMarkovExpandable", t0, t1, None, (t0, t1, u), rv.approximate,
                              "revisit infimum is not attained")
    if path.periodic:
        hi = max(t1, path.tail.t0 + lag) + path.tail.period
    else:
        hi = max(t1, _tail_start(path) + lag)
    u = _first_mismatch(path, lag, t1, hi) if hi > t1 else None
    if u is None and not path.periodic:
        tail = path.components[-1]
        if not tail.prim.is_constant:
            u = hi
    if u is not None:
        return Classification("NotMarkovExpandable", t0, t1, None, (t0, t1, u), rv.approximate,
                              f"f({sc.fmt(u)}) != f({sc.fmt(u - lag)})")
    return Classification("JumpPeriodic", t0, t1, lag, rv.witness, rv.approximate,
                          f"f(u) = f(u - {sc.fmt(lag)}) for u >= {sc.fmt(t1)}")


def _fmt_vec(v) -> str:
    return "(" + ", ".join(sc.fmt(x) for x in v) + ")"


# --- generalized inverse -------------------------------------------------------

def generalized_inverse(path: PathSpec, y) -> object:
    """``min{t >= 0 : f(t) = y}``; raises :class:`NotInRange`."""
    path.require_valid()
    y = tuple(sc.as_scalar(c) for c in (y if isinstance(y, (tuple, list)) else (y,)))
    target = PointAtom(None, y)
    tr = Tracker()
    for a in atoms_of(path):
        if isinstance(a, PointAtom) and path.periodic and a.time == path.end:
            continue
        h = earliest(a, target, tr)
        if h is not None and h.attained:
            return h.time
    raise NotInRange(f"{_fmt_vec(y)} is not attained")


# --- monotone structure --------------------------------------------------------

@dataclass(frozen=True)
class MonoRun:
    lo: object
    hi: object
    kind: str  # "+", "-", "0", or "alt" for an infinite alternating run
    detail: tuple = ()

    def to_json(self) -> dict:
        d = {"interval": [sc.fmt(self.lo), sc.fmt(self.hi)], "type": self.kind}
        if self.detail:
            d["pattern"] = list(self.detail)
        return d


_SYM = {1: "+", -1: "-", 0: "0"}


def monotone_structure(path: PathSpec) -> list:
    """Maximal runs of increase, decrease and constancy (d = 1)."""
    path.require_valid()
    if path.dim != 1:
        raise ValueError("monotone structure is defined for d = 1")
    hi = path.end if path.periodic else INF
    runs: list = []
    for c in path.components:
        if c.lo >= hi:
            break
        if isinstance(c, Segment):
            run = MonoRun(c.lo, c.hi, _SYM[c.prim.monotone_sign()[0]])
        else:
            even = _SYM[sc.sign(c.piece(0).slope[0])]
            odd = _SYM[sc.sign(c.piece(1).slope[0])]
            sigma = c.monotone_chain()
            run = MonoRun(c.lo, c.hi, "alt", (even, odd)) if not sigma else MonoRun(
                c.lo, c.hi, "alt", (_SYM[sigma],))
        if runs and _mergeable(path, runs[-1], run):
            runs[-1] = MonoRun(runs[-1].lo, run.hi, run.kind)
        else:
            runs.append(run)
    return runs


def _mergeable(path, a: MonoRun, b: MonoRun) -> bool:
    if a.kind != b.kind or a.kind == "alt":
        return False
    return path.left_limit(b.lo) == path.evaluate(b.lo)


# --- continuity, absolute continuity, derivatives ------------------------------

def _horizon(path: PathSpec):
    return path.end if path.periodic else max(_tail_start(path), Fraction(0))


@dataclass(frozen=True)
class ContinuityReport:
    continuous: bool
    discontinuity_times: tuple
    family_accumulations: tuple = ()
    periodic_from: Optional[object] = None

    def to_json(self) -> dict:
        return {"continuous": self.continuous,
                "discontinuity_times": [sc.fmt(t) for t in self.discontinuity_times],
                "family_accumulations": [{"time": sc.fmt(t), "side": s}
                                         for t, s in self.family_accumulations],
                "periodic_from": None if self.periodic_from is None else sc.fmt(self.periodic_from)}


def continuity_report(path: PathSpec) -> ContinuityReport:
    path.require_valid()
    H = _horizon(path)
    inv = path.jumps_in(0, H) if H > 0 else None
    times: list = []
    if isinstance(inv, DivergentInventory):
        times = [j.time for j in inv.points]
    elif inv is not None:
        times = inv.times()
    # every family with nonzero interior jumps has infinitely many discontinuities
    accs = sorted({(f.acc, f.side) for f in path.families if any(f.jump(n) != 0 for n in (1, 2, 3))})
    continuous = not times and not accs
    return ContinuityReport(continuous, tuple(times), tuple(sorted(accs)),
                            path.tail.t0 if path.periodic else None)


def first_jump_time(path: PathSpec) -> Optional[object]:
    H = _horizon(path)
    if H <= 0:
        return None
    inv = path.jumps_in(0, H)
    cands = list(j.time for j in inv.points)
    if isinstance(inv, DivergentInventory):
        f = inv.family
        cands.append(f.boundary(inv.first) + inv.accumulation_time - f.acc)
    else:
        cands += [t.family.boundary(t.first) + t.shift for t in inv.tails]
    return min(cands) if cands else None


@dataclass(frozen=True)
class ACReport:
    absolutely_continuous: bool
    obstruction: Optional[str] = None
    at: Optional[object] = None

    def to_json(self) -> dict:
        return {"absolutely_continuous": self.absolutely_continuous,
                "obstruction": self.obstruction,
                "at": None if self.at is None else sc.fmt(self.at)}


def ac_check(path: PathSpec) -> ACReport:
    path.require_valid()
    jt = first_jump_time(path)
    singular = [c.lo for c in path.components
                if isinstance(c, Segment) and not c.prim.absolutely_continuous]
    st = min(singular) if singular else None
    if jt is None and st is None:
        return ACReport(True)
    if st is None or (jt is not None and jt <= st):
        return ACReport(False, "JumpFound", jt)
    return ACReport(False, "SingularPrimitive", st)


@dataclass(frozen=True)
class Derivative:
    value: Optional[tuple]
    reason: str = ""

    @property
    def defined(self) -> bool:
        return self.value is not None


def right_derivative(path: PathSpec, t) -> Derivative:
    path.require_valid()
    t = path.reduce(t)
    c = path.component_at(t)
    if isinstance(c, Segment):
        d = c.prim.right_derivative(t)
        if d is None:
            return Derivative(None, "difference quotients of the Cantor part have no finite limit")
        return Derivative(tuple(d))
    if c.side == "right" and t == c.acc:
        return Derivative(None, "accumulation point of a segment family")
    return Derivative(c.piece(c.index_at(t)).slope)


@dataclass(frozen=True)
class SmoothnessReport:
    c1_on_open_halfline: bool
    right_diff_at_zero: bool
    derivative_support: Optional[object]
    kinks: tuple = ()

    @property
    def support_pattern(self) -> bool:
        return self.derivative_support is not None

    def to_json(self) -> dict:
        return {"c1_on_open_halfline": self.c1_on_open_halfline,
                "right_diff_at_zero": self.right_diff_at_zero,
                "derivative_support": None if self.derivative_support is None
                else sc.fmt(self.derivative_support),
                "kinks": [sc.fmt(t) for t in self.kinks]}


def smoothness_check(path: PathSpec) -> SmoothnessReport:
    path.require_valid()
    if path.dim != 1:
        raise ValueError("smoothness check is defined for d = 1")
    c1 = not path.families
    kinks = []
    for c in path.components:
        if isinstance(c, Segment) and isinstance(c.prim, CantorDevil):
            c1 = False
            kinks.append(c.lo)
    bounds = [c.lo for c in path.components[1:]]
    if path.periodic:
        bounds.append(path.end)
    for b in bounds:
        if b in kinks:
            continue
        left = path.component_left_of(b if b != path.end or not path.periodic else path.end)
        right = path.component_at(path.reduce(b))
        if not (isinstance(left, Segment) and isinstance(right, Segment)):
            c1 = False
            continue
        jump = path.left_limit(b) != path.evaluate(b)
        dl = left.prim.right_derivative(b)
        dr = right.prim.right_derivative(path.reduce(b))
        if jump or dl is None or dr is None or dl != dr:
            c1 = False
            kinks.append(b)
    first = path.components[0]
    rd0 = not (isinstance(first, Family) or isinstance(getattr(first, "prim", None), CantorDevil))
    return SmoothnessReport(c1, rd0, _derivative_support(path), tuple(sorted(set(kinks))))


def _derivative_support(path: PathSpec):
    """``t0`` with derivative nonzero on ``[0, t0)`` and zero afterwards, else None."""
    zero_from = None
    for c in path.components:
        if not isinstance(c, Segment) or isinstance(c.prim, CantorDevil):
            return None
        if c.prim.is_constant:
            if zero_from is None:
                zero_from = c.lo
        elif zero_from is not None:
            return None
    if path.periodic and zero_from is not None and zero_from > path.tail.t0:
        return None
    return INF if zero_from is None else zero_from
