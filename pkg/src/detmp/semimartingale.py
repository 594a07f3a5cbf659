"""Total variation, jump summability and semimartingale verdicts for paths."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from . import analysis as an
from . import scalar as sc
from .families import PART_FN, Family
from .path import DivergentInventory, PathSpec, increment_size, vadd, vsub
from .series import Divergent


class DivergentJumps(ValueError):
    pass


class InfiniteVariation(ValueError):
    pass


@dataclass(frozen=True)
class Exact:
    value: object

    def to_json(self):
        return {"exact": sc.fmt(self.value), "decimal": sc.to_float(self.value)}


@dataclass(frozen=True)
class Infinite:
    reason: str = ""

    def to_json(self):
        return {"infinite": True, "reason": self.reason}


def _div_json(d: Divergent) -> dict:
    return {"divergent": True, "bound": None if d.bound is None else sc.fmt(d.bound),
            "witness_N": d.witness, "reason": d.reason}


SEMIMARTINGALE, NOT_SEMIMARTINGALE, NOT_APPLICABLE = "Semimartingale", "NotSemimartingale", "NotApplicable"


@dataclass(frozen=True)
class VariationReport:
    window: tuple
    continuous_variation: object
    jump_abs_sum: Union[Exact, Divergent]
    total_variation: Union[Exact, Infinite]
    verdict: str
    oracle: Optional[object] = None
    oracle_depth: Optional[int] = None

    def to_json(self) -> dict:
        js = self.jump_abs_sum
        d = {"window": [sc.fmt(x) for x in self.window],
             "continuous_variation": Exact(self.continuous_variation).to_json(),
             "jump_abs_sum": js.to_json() if isinstance(js, Exact) else _div_json(js),
             "total_variation": self.total_variation.to_json(),
             "verdict": self.verdict}
        if self.oracle is not None:
            d["oracle"] = {"depth": self.oracle_depth, "lower_bound": sc.fmt(self.oracle),
                           "decimal": sc.to_float(self.oracle)}
        return d


# --- exact variation -------------------------------------------------------------

def jump_abs_sum(path: PathSpec, T, a=Fraction(0), bound=Fraction(10)):
    """``sum |Delta f(s)|`` over ``(a, T]``: :class:`Exact` or :class:`Divergent`."""
    inv = path.jumps_in(a, T, include_lo=False, bound=bound)
    if isinstance(inv, DivergentInventory):
        return Divergent(Fraction(bound), inv.witness,
                         f"jumps accumulating at {sc.fmt(inv.accumulation_time)} are not summable")
    return Exact(inv.part_sum("abs"))


def continuous_variation(path: PathSpec, T, a=Fraction(0)):
    return path.cont_var(a, T)


def total_variation(path: PathSpec, T, a=Fraction(0)):
    """Variation of ``path`` on ``[a, T]``: :class:`Exact` or :class:`Infinite`."""
    path.require_valid()
    js = jump_abs_sum(path, T, a)
    if isinstance(js, Divergent):
        return Infinite(js.reason)
    return Exact(continuous_variation(path, T, a) + js.value)


def variation_report(path: PathSpec, T, oracle_depth: Optional[int] = None,
                     bound=Fraction(10), a=Fraction(0)) -> VariationReport:
    """Report on ``[a, T]``; the oracle is only run for windows starting at 0."""
    path.require_valid()
    T, a = sc.as_scalar(T), sc.as_scalar(a)
    cv = continuous_variation(path, T, a)
    js = jump_abs_sum(path, T, a, bound=bound)
    if isinstance(js, Divergent):
        tv, verdict = Infinite(js.reason), NOT_SEMIMARTINGALE
    else:
        tv, verdict = Exact(cv + js.value), SEMIMARTINGALE
    if oracle_depth is not None and a != 0:
        raise ValueError("the partition oracle works on windows [0, T]")
    orc = None if oracle_depth is None else variation_oracle(path, T, oracle_depth)
    return VariationReport((a, T), cv, js, tv, verdict, orc, oracle_depth)


def variation_additivity(path: PathSpec, a, b, c) -> tuple:
    """``(TV[a,c], TV[a,b] + TV[b,c], equal)``."""
    whole = total_variation(path, c, a)
    left, right = total_variation(path, b, a), total_variation(path, c, b)
    if isinstance(whole, Infinite) or isinstance(left, Infinite) or isinstance(right, Infinite):
        parts_inf = isinstance(left, Infinite) or isinstance(right, Infinite)
        return whole, (Infinite() if parts_inf else Exact(left.value + right.value)), \
            isinstance(whole, Infinite) == parts_inf
    s = left.value + right.value
    return whole, Exact(s), whole.value == s


# --- partition oracle ---------------------------------------------------------------

def _family_points(path: PathSpec, T, depth: int) -> set:
    """Family boundaries at distance >= T 4^-depth from the accumulation time (capped)."""
    pts = set()
    floor_gap = T / 4 ** depth
    cap = 2 ** depth
    for c, l, r, shift in path.cover(Fraction(0), T):
        if not isinstance(c, Family):
            continue
        for n in range(cap):
            tau = c.boundary(n) + shift
            if abs(tau - (c.acc + shift)) < floor_gap:
                break
            if l <= tau <= r:
                pts.add(tau)
    return pts


def variation_oracle(path: PathSpec, T, depth: int):
    """Sum of increments over the dyadic partition of ``[0, T]`` at ``depth``,
    refined with piece starts, (budgeted) family boundaries and points
    ``b - T 4^-k`` approaching each such boundary ``b`` from the left.

    Partitions grow with ``depth``, so the result is a nondecreasing lower bound.
    """
    path.require_valid()
    T = Fraction(T)
    n = 2 ** depth
    pts = {T * k / n for k in range(n + 1)}
    ends = set(path.breakpoints(Fraction(0), T)) | _family_points(path, T, depth) | {T}
    pts |= ends
    pts |= {b - T / 4 ** k for b in ends for k in range(1, depth + 1)}
    grid = sorted(p for p in pts if 0 <= p <= T)
    vals = [path.evaluate(t) for t in grid]
    total = Fraction(0)
    for u, v in zip(vals, vals[1:]):
        total = total + increment_size(vsub(v, u))
    return total


# --- verdicts -------------------------------------------------------------------------

@dataclass(frozen=True)
class SemimartingaleVerdict:
    verdict: str
    jump_route: Optional[str]
    variation_route: str
    windows: int
    failing_window: Optional[int] = None

    @property
    def agree(self) -> bool:
        return self.jump_route is None or self.jump_route == self.variation_route

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "jump_route": self.jump_route,
                "variation_route": self.variation_route, "windows": self.windows,
                "failing_window": self.failing_window, "routes_agree": self.agree}


def default_windows(path: PathSpec) -> int:
    H = path.end if path.periodic else path.components[-1].lo
    return max(1, math.ceil(H) + 1)


def is_semimartingale_path(path: PathSpec, windows: Optional[int] = None) -> SemimartingaleVerdict:
    """Finite variation on every ``[0, n]``; in d = 1 for Markov-expandable paths
    the jump-summability criterion is evaluated as well."""
    path.require_valid()
    N = windows or default_windows(path)
    use_jumps = path.dim == 1 and an.classify(path, allow_approx=True).markov
    jr = SEMIMARTINGALE if use_jumps else None
    vr = SEMIMARTINGALE
    failing = None
    for n in range(1, N + 1):
        if use_jumps and jr == SEMIMARTINGALE and isinstance(jump_abs_sum(path, n), Divergent):
            jr = NOT_SEMIMARTINGALE
            failing = failing or n
        if vr == SEMIMARTINGALE and isinstance(total_variation(path, n), Infinite):
            vr = NOT_SEMIMARTINGALE
            failing = failing or n
    return SemimartingaleVerdict(vr, jr, vr, N, failing)


# --- decomposition ----------------------------------------------------------------------

def _signed_jump_sum(path: PathSpec, a, t, include_lo: bool) -> tuple:
    zero = tuple(Fraction(0) for _ in range(path.dim))
    if t <= a:
        return zero
    inv = path.jumps_in(a, t, include_lo=include_lo)
    if isinstance(inv, DivergentInventory):
        raise DivergentJumps(f"jumps accumulating at {sc.fmt(inv.accumulation_time)} are not summable")
    total = zero
    for j in inv:
        total = vadd(total, j.size)
    for tl in inv.tails:
        total = vadd(total, (tl.pos_sum - tl.neg_sum,))
    return total


@dataclass(frozen=True)
class JumpPart:
    """``g(t) = sum_{0 < s <= t} Delta h(s)``."""

    path: PathSpec

    def evaluate(self, t):
        memo = self.__dict__.setdefault("_memo", {})
        try:
            return memo[t]
        except KeyError:
            memo[t] = g = _signed_jump_sum(self.path, Fraction(0), t, include_lo=False)
            return g
        except TypeError:
            return _signed_jump_sum(self.path, Fraction(0), t, include_lo=False)

    def left_limit(self, t):
        # jumps in (0, t): everything up to t minus the jump at t itself
        g = self.evaluate(t)
        return vsub(g, vsub(self.path.evaluate(t), self.path.left_limit(t)))

    __call__ = evaluate


@dataclass(frozen=True)
class ContinuousPart:
    """``f = h - g``."""

    path: PathSpec
    jumps: JumpPart

    def evaluate(self, t):
        return vsub(self.path.evaluate(t), self.jumps.evaluate(t))

    def left_limit(self, t):
        return vsub(self.path.left_limit(t), self.jumps.left_limit(t))

    __call__ = evaluate


def decompose(path: PathSpec, T=None) -> tuple:
    """``(continuous part, pure-jump part)``; jumps must be summable up to ``T``."""
    path.require_valid()
    T = T if T is not None else default_windows(path)
    js = jump_abs_sum(path, T)
    if isinstance(js, Divergent):
        raise DivergentJumps(js.reason)
    g = JumpPart(path)
    return ContinuousPart(path, g), g


@dataclass(frozen=True)
class _VariationSide:
    path: PathSpec
    kind: str
    T: object
    base: object

    def evaluate(self, t):
        if t > self.T or t < 0:
            raise ValueError(f"t = {sc.fmt(t)} is outside the window [0, {sc.fmt(self.T)}]")
        fn = PART_FN[self.kind]
        cv = self.path.cont_var(Fraction(0), t, fn)
        inv = self.path.jumps_in(Fraction(0), t, include_lo=False) if t > 0 else None
        js = inv.part_sum(self.kind) if inv is not None else Fraction(0)
        return (self.base + cv + js,)

    __call__ = evaluate

    def jump_times(self, per_family: int = 64) -> list:
        """Times where this side jumps; family tails contribute their first
        ``per_family`` boundaries."""
        inv = self.path.jumps_in(Fraction(0), self.T, include_lo=False)
        sgn = 1 if self.kind == "pos" else -1
        out = [j.time for j in inv if sc.sign(j.size[0]) == sgn]
        for tl in inv.tails:
            fam = tl.family
            for n in range(tl.first, tl.first + per_family):
                if sc.sign(fam.jump(n)) == sgn:
                    out.append(fam.boundary(n) + tl.shift)
        return sorted(out)


def jordan_split(path: PathSpec, T) -> tuple:
    """``(h_plus, h_minus)`` nondecreasing with ``h = h_plus - h_minus`` on ``[0, T]``."""
    path.require_valid()
    if path.dim != 1:
        raise ValueError("the Jordan split is one-dimensional")
    if isinstance(total_variation(path, T), Infinite):
        raise InfiniteVariation(f"infinite variation on [0, {sc.fmt(T)}]")
    h0 = path.evaluate(Fraction(0))[0]
    return _VariationSide(path, "pos", T, h0), _VariationSide(path, "neg", T, Fraction(0))
