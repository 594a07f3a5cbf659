"""Earliest-revisit search over the pieces of a path.

A path is split into *atoms*: continuous monotone segments, isolated points
and infinite families.  For two atoms ``A`` (earlier) and ``B`` (later) the
search asks for the earliest time in one atom whose value lies in the range of
the other.  Families are handled lazily: their pieces are scanned in order and
the scan stops once the hull of all remaining pieces misses the target.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .families import Family, UnsupportedStructure, scaling_pairs
from .intervals import Interval
from .path import PathSpec, Segment
from .primitives import Affine, Constant
from .scalar import INF, Approx

_PIECE_CAP = 4000


@dataclass(frozen=True)
class SegAtom:
    lo: object
    hi: object
    prim: object

    @property
    def dim(self):
        return self.prim.dim

    def range(self) -> Interval:
        return self.prim.range_on(self.lo, self.hi)


@dataclass(frozen=True)
class PointAtom:
    time: object
    value: tuple

    @property
    def lo(self):
        return self.time

    @property
    def hi(self):
        return self.time

    def range(self) -> Interval:
        return Interval.point(self.value[0])


@dataclass(frozen=True)
class FamAtom:
    fam: Family

    @property
    def lo(self):
        return self.fam.lo

    def piece_atom(self, n: int) -> SegAtom:
        l, r = self.fam.interval(n)
        return SegAtom(l, r, self.fam.piece(n))


@dataclass
class Hit:
    """Earliest time with the requested property and whether it is a minimum."""

    time: object
    attained: bool


class Tracker:
    """Records whether any decision relied on approximate comparisons."""

    def __init__(self):
        self.approximate = False

    def note(self, *xs):
        for x in xs:
            if isinstance(x, Approx):
                self.approximate = True


def atoms_of(path: PathSpec) -> list:
    """Atoms covering the part of the path relevant to revisits, in time order."""
    out = []
    for c in path.components:
        if isinstance(c, Segment):
            out.append(SegAtom(c.lo, c.hi, c.prim))
        else:
            if c.side == "right":
                out.append(PointAtom(c.acc, (c.limit,)))
            out.append(FamAtom(c))
    if path.periodic:
        out.append(PointAtom(path.end, path.evaluate(path.tail.t0)))
    return out


# --- one-dimensional helpers ----------------------------------------------

def _seg_time_of(seg: SegAtom, v, closed: bool, tr: Tracker) -> Hit:
    t = seg.prim.preimage((v,), seg.lo, seg.hi, hi_closed=True)
    if t is None:
        # v is the open limit at the right end of an unbounded segment
        t = seg.hi
        closed = False
    tr.note(t, v)
    return Hit(t, closed and t != seg.hi)


def _extreme_hit(seg: SegAtom, I: Interval, tr: Tracker) -> Optional[Hit]:
    """Earliest time in a monotone segment whose value lies in ``I``."""
    J = seg.range().intersect(I)
    if J.empty:
        if (isinstance(J.lo, Approx) or isinstance(J.hi, Approx)) and J.lo == J.hi:
            tr.note(J.lo, J.hi)
        return None
    tr.note(J.lo, J.hi)
    if seg.prim.is_constant:
        return Hit(seg.lo, True)
    if seg.prim.monotone_sign()[0] > 0:
        return _seg_time_of(seg, J.lo, J.lo_closed, tr)
    return _seg_time_of(seg, J.hi, J.hi_closed, tr)


def _better(a: Optional[Hit], b: Optional[Hit]) -> Optional[Hit]:
    if a is None:
        return b
    if b is None:
        return a
    if b.time < a.time:
        return b
    if b.time == a.time and b.attained and not a.attained:
        return b
    return a


def meets(I: Interval, atom, tr: Tracker) -> bool:
    """Whether ``I`` meets the value set of ``atom`` (d = 1)."""
    if isinstance(atom, (SegAtom, PointAtom)):
        return atom.range().meets(I)
    fam = atom.fam
    for n in range(_PIECE_CAP):
        if fam.piece_range(n).meets(I):
            return True
        if not any(h.meets(I) for h in fam.tail_hulls(n + 1)):
            return False
    raise UnsupportedStructure("family range query did not settle")


def _seg_vs_family(seg: SegAtom, fam: Family, tr: Tracker) -> Optional[Hit]:
    """Earliest time in ``seg`` with a value in the range of ``fam``."""
    R = seg.range()
    if seg.prim.is_constant:
        return Hit(seg.lo, True) if meets(R, FamAtom(fam), tr) else None
    increasing = seg.prim.monotone_sign()[0] > 0
    best: Optional[Interval] = None
    for n in range(_PIECE_CAP):
        J = fam.piece_range(n).intersect(R)
        if not J.empty:
            best = J if best is None else _pick(best, J, increasing)
        hulls = [h.intersect(R) for h in fam.tail_hulls(n + 1)]
        if all(h.empty or (best is not None and _cannot_improve(best, h, increasing)) for h in hulls):
            break
    else:
        raise UnsupportedStructure("extreme value over a family did not settle")
    if best is None:
        return None
    if increasing:
        return _seg_time_of(seg, best.lo, best.lo_closed, tr)
    return _seg_time_of(seg, best.hi, best.hi_closed, tr)


def _pick(a: Interval, b: Interval, increasing: bool) -> Interval:
    if increasing:
        if b.lo < a.lo or (b.lo == a.lo and b.lo_closed and not a.lo_closed):
            return b
        return a
    if b.hi > a.hi or (b.hi == a.hi and b.hi_closed and not a.hi_closed):
        return b
    return a


def _cannot_improve(best: Interval, h: Interval, increasing: bool) -> bool:
    if increasing:
        return h.lo > best.lo or (h.lo == best.lo and (best.lo_closed or not h.lo_closed))
    return h.hi < best.hi or (h.hi == best.hi and (best.hi_closed or not h.hi_closed))


def _family_scan(fa: FamAtom, target, tr: Tracker) -> Optional[Hit]:
    """Earliest time in a family whose value lies in the value set of ``target``."""
    fam = fa.fam
    if isinstance(target, FamAtom):
        same_limit = target.fam.limit == fam.limit
        if same_limit and fam.side == target.fam.side == "left":
            pairs = scaling_pairs(fam, target.fam)
            best = None
            for n, _ in pairs:
                best = _better(best, earliest(fa.piece_atom(n), target, tr))
            return best
    if fam.side == "left":
        for n in range(_PIECE_CAP):
            h = earliest(fa.piece_atom(n), target, tr)
            if h is not None:
                return h
            if not any(meets(hull, target, tr) for hull in fam.tail_hulls(n + 1)):
                return None
        raise UnsupportedStructure("family scan did not settle")
    # right family: pieces near the accumulation time come first
    for N in range(_PIECE_CAP):
        if not any(meets(hull, target, tr) for hull in fam.tail_hulls(N)):
            break
    else:
        raise UnsupportedStructure("right-family scan did not settle")
    for n in range(N - 1, -1, -1):
        h = earliest(fa.piece_atom(n), target, tr)
        if h is not None:
            return h
    return None


# --- two-dimensional helpers ----------------------------------------------

def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot(a, b):
    return a[0] * b[0] + a[1] * b[1]


def _affine_parts(p):
    if isinstance(p, Constant):
        return (Fraction(0), Fraction(0)), p.val
    if isinstance(p, Affine):
        return p.slope, p.intercept
    raise UnsupportedStructure("two-dimensional paths use affine pieces only")


def _earliest_2d(x, y, tr: Tracker) -> Optional[Hit]:
    if isinstance(y, PointAtom):
        if isinstance(x, PointAtom):
            return Hit(x.time, True) if x.value == y.value else None
        t = x.prim.preimage(y.value, x.lo, x.hi)
        return None if t is None else Hit(t, True)
    if isinstance(x, PointAtom):
        return Hit(x.time, True) if y.prim.preimage(x.value, y.lo, y.hi) is not None else None
    kx, bx = _affine_parts(x.prim)
    ky, by = _affine_parts(y.prim)
    if kx == (0, 0):
        return Hit(x.lo, True) if y.prim.preimage(bx, y.lo, y.hi) is not None else None
    if ky == (0, 0):
        t = x.prim.preimage(by, x.lo, x.hi)
        return None if t is None else Hit(t, True)
    d = (by[0] - bx[0], by[1] - bx[1])
    cr = _cross(kx, ky)
    if cr != 0:
        # kx t - ky s = d
        t = _cross(d, ky) / cr
        s = _cross(d, kx) / cr
        if x.lo <= t < x.hi and y.lo <= s < y.hi:
            return Hit(t, True)
        return None
    if _cross(d, kx) != 0:
        return None
    # collinear: t(s) = (y(s) - bx) . kx / |kx|^2
    nk = _dot(kx, kx)

    def t_of(s):
        if s == INF:
            return INF if _dot(ky, kx) > 0 else -INF
        return _dot((ky[0] * s + d[0], ky[1] * s + d[1]), kx) / nk

    T = Interval.between(t_of(y.lo), True, t_of(y.hi), False)
    J = T.intersect(Interval(x.lo, x.hi, True, False))
    if J.empty:
        return None
    return Hit(J.lo, J.lo_closed)


# --- public entry ----------------------------------------------------------

def earliest(x, y, tr: Tracker) -> Optional[Hit]:
    """Earliest time in atom ``x`` whose value lies in the value set of ``y``."""
    if getattr(x, "dim", 1) == 2 or getattr(y, "dim", 1) == 2 or (
            isinstance(x, PointAtom) and len(x.value) == 2):
        return _earliest_2d(x, y, tr)
    if isinstance(x, PointAtom):
        return Hit(x.time, True) if meets(x.range(), y, tr) else None
    if isinstance(x, FamAtom):
        return _family_scan(x, y, tr)
    if isinstance(y, FamAtom):
        return _seg_vs_family(x, y.fam, tr)
    return _extreme_hit(x, y.range(), tr)


def self_revisit(atom, tr: Tracker) -> tuple:
    """``(s_hit, t_hit)`` for revisits inside a single atom."""
    if isinstance(atom, SegAtom):
        if atom.prim.is_constant and atom.lo < atom.hi:
            return Hit(atom.lo, True), Hit(atom.lo, False)
        return None, None
    if isinstance(atom, FamAtom):
        pair = atom.fam.injectivity()
        if pair is None:
            return None, None
        if atom.fam.side == "right":
            # revisits among pieces repeat at every scale down to the accumulation time
            return Hit(atom.fam.acc, False), Hit(atom.fam.acc, False)
        pairs = scaling_pairs(atom.fam, atom.fam, same=True)
        s_best = t_best = None
        for n, m in pairs:
            a, b = atom.piece_atom(n), atom.piece_atom(m)
            s_best = _better(s_best, earliest(a, b, tr))
            t_best = _better(t_best, earliest(b, a, tr))
        return s_best, t_best
    return None, None


def value_at_hit(atom, hit: Hit):
    if isinstance(atom, PointAtom):
        return atom.value
    if isinstance(atom, FamAtom):
        return atom.fam.value(hit.time)
    return atom.prim.value(hit.time)
