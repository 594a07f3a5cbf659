"""Universal deterministic processes built from generating paths.

A process is a finite list of regions, each carrying a generating path
``Phi`` (or none, for regions where nothing moves).  Off all regions the
process stays put.  For ``x`` in a region ``X_t^x = Phi(t + Phi^{-1}(x))``;
jump rules add event-driven relocations on top of this motion.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import analysis as an
from . import scalar as sc
from .expandability import YES, check_markov
from .families import UnsupportedStructure
from .intervals import Interval
from .path import PathSpec, ValidationReport
from .primitives import Affine, CantorDevil, Constant, Exponential, primitive_from_json
from .scalar import INF
from .series import Divergent, TermSeq

DEFAULT_EVENT_CAP = 10 ** 4

FROM_BELOW, FROM_ABOVE, EITHER = "from_below", "from_above", "either"


class ProcessError(ValueError):
    pass


class NotExpandable(ProcessError):
    pass


class EventCapExceeded(ProcessError):
    pass


class AmbiguousRegion(ProcessError):
    pass


class StructureInvalid(ProcessError):
    pass


def event_cap() -> int:
    return int(os.environ.get("DETMP_EVENT_CAP", DEFAULT_EVENT_CAP))


def vec(x) -> tuple:
    if isinstance(x, (tuple, list)):
        return tuple(sc.as_scalar(c) for c in x)
    return (sc.as_scalar(x),)


@dataclass(frozen=True)
class Killed:
    tau: object

    def __str__(self) -> str:
        return f"killed at {sc.fmt(self.tau)}"


# --- generating paths ----------------------------------------------------------

def _limit_at(prim, end):
    """Value or one-sided limit of a primitive at a domain endpoint."""
    if end == INF:
        return prim.limit_at_inf()
    if end == -INF:
        if isinstance(prim, Exponential):
            return (Fraction(0),)
        if isinstance(prim, Constant):
            return prim.val
        return tuple(-INF * s if s else c for s, c in zip(prim.monotone_sign(), prim.value(0)))
    return prim.value(end)


class GeneratingPath:
    dim: int
    lo: object
    hi: object
    lo_closed: bool

    def value(self, s) -> tuple:
        raise NotImplementedError

    def inverse(self, x) -> Optional[object]:
        raise NotImplementedError

    def right_derivative(self, s):
        raise NotImplementedError

    @property
    def sign(self) -> Optional[int]:
        """Monotone sign for strictly monotone continuous paths (d = 1), else None."""
        return None

    def limit_hi(self) -> tuple:
        raise NotImplementedError


@dataclass(frozen=True)
class PrimitiveGen(GeneratingPath):
    """A single monotone primitive on ``(lo, hi)`` or ``[lo, hi)``."""

    prim: object
    lo: object = -INF
    hi: object = INF
    lo_closed: bool = False

    @property
    def dim(self):
        return self.prim.dim

    def value(self, s):
        return self.prim.value(s)

    def inverse(self, x):
        t = self.prim.preimage(vec(x), self.lo, self.hi)
        if t is None or (t == self.lo and not self.lo_closed):
            return None
        return t

    def right_derivative(self, s):
        d = self.prim.right_derivative(s)
        return None if d is None else tuple(d)

    @property
    def sign(self):
        if self.dim != 1 or self.prim.is_constant:
            return None
        return self.prim.monotone_sign()[0]

    def limit_lo(self):
        return _limit_at(self.prim, self.lo)

    def limit_hi(self):
        return _limit_at(self.prim, self.hi)

    def range(self) -> Interval:
        a, b = self.limit_lo()[0], self.limit_hi()[0]
        return Interval.between(a, self.lo_closed and self.lo != -INF, b, False)

    def to_json(self) -> dict:
        return {"type": "primitive", "primitive": self.prim.to_json(), "lo": sc.fmt(self.lo),
                "lo_closed": self.lo_closed, "hi": sc.fmt(self.hi)}


@dataclass(frozen=True)
class PathGen(GeneratingPath):
    """A validated path used as generating path on ``[start, inf)``."""

    path: PathSpec
    start: Fraction = Fraction(0)
    lo_closed = True
    hi = INF

    @property
    def dim(self):
        return self.path.dim

    @property
    def lo(self):
        return self.start

    def value(self, s):
        return self.path.evaluate(s - self.start)

    def inverse(self, x):
        x = vec(x)
        memo = self.__dict__.setdefault("_inverse_memo", {})
        try:
            return memo[x]
        except KeyError:
            pass
        except TypeError:  # approximate states are unhashable
            return self._inverse(x)
        memo[x] = r = self._inverse(x)
        return r

    def _inverse(self, x):
        try:
            return an.generalized_inverse(self.path, x) + self.start
        except an.NotInRange:
            return None

    def right_derivative(self, s):
        return an.right_derivative(self.path, s - self.start).value

    def limit_hi(self):
        raise ProcessError("path generators have unbounded domains")

    def to_json(self) -> dict:
        return {"type": "path", "start": sc.fmt(self.start), "path": self.path.to_json()}


def gen_from_json(d: dict) -> GeneratingPath:
    if d["type"] == "path":
        return PathGen(PathSpec.from_json(d["path"]), sc.parse_scalar(d.get("start", "0")))
    return PrimitiveGen(primitive_from_json(d["primitive"]), sc.parse_time(d.get("lo", "-inf")),
                        sc.parse_time(d.get("hi", "inf")), d.get("lo_closed", False))


# --- regions and rules -------------------------------------------------------

@dataclass(frozen=True)
class Region:
    """``kind`` is ``"+"``, ``"-"``, ``"0"`` or ``"general"``."""

    kind: str
    gen: Optional[GeneratingPath] = None
    interval: Optional[Interval] = None
    name: str = ""

    def contains(self, x: tuple) -> bool:
        if self.interval is not None:
            return self.interval.contains(x[0])
        return self.gen is not None and self.gen.inverse(x) is not None

    def to_json(self) -> dict:
        d = {"kind": self.kind, "name": self.name}
        if self.interval is not None:
            I = self.interval
            d["interval"] = {"lo": sc.fmt(I.lo), "hi": sc.fmt(I.hi),
                             "lo_closed": I.lo_closed, "hi_closed": I.hi_closed}
        return d


def region_from_json(d: dict, gen) -> Region:
    I = None
    if "interval" in d:
        i = d["interval"]
        I = Interval(sc.parse_time(i["lo"]), sc.parse_time(i["hi"]), i["lo_closed"], i["hi_closed"])
    return Region(d["kind"], gen, I, d.get("name", ""))


@dataclass(frozen=True)
class JumpRule:
    """When the state approaches ``a`` (from the given side) it is moved to ``b``."""

    a: tuple
    b: tuple
    approach: str = EITHER

    def __post_init__(self):
        object.__setattr__(self, "a", vec(self.a))
        object.__setattr__(self, "b", vec(self.b))
        if self.approach not in (FROM_BELOW, FROM_ABOVE, EITHER):
            raise ValueError(f"unknown approach {self.approach!r}")

    def fires_moving(self, sigma: int) -> bool:
        return self.approach == EITHER or (self.approach == FROM_BELOW) == (sigma > 0)

    def to_json(self) -> dict:
        return {"a": [sc.fmt(c) for c in self.a], "b": [sc.fmt(c) for c in self.b],
                "approach": self.approach}


@dataclass(frozen=True)
class JumpRuleFamily:
    """Rules ``a_n -> b_n`` for ``n >= first`` with closed-form sequences."""

    a: TermSeq
    b: TermSeq
    first: int = 0
    approach: str = EITHER

    def rule(self, n: int) -> JumpRule:
        return JumpRule((self.a(n),), (self.b(n),), self.approach)

    def fires_moving(self, sigma: int) -> bool:
        return self.approach == EITHER or (self.approach == FROM_BELOW) == (sigma > 0)

    def monotone(self) -> int:
        signs = self.a.backward_difference().signs_from(self.first + 1)
        if signs in ({1}, {-1}):
            return next(iter(signs))
        raise UnsupportedStructure("trigger sequence is not strictly monotone")

    def next_ahead(self, x, sigma: int) -> Optional[int]:
        """Index of the nearest trigger strictly ahead of ``x`` in direction ``sigma``."""
        ahead = lambda n: sigma * (self.a(n) - x) > 0
        d = self.monotone() * sigma
        lim = self.a.extended_limit()
        if d > 0:
            if not sigma * (lim - x) > 0:
                return None
            return _first_true(ahead, self.first)
        if not ahead(self.first):
            return None
        if sigma * (lim - x) > 0:
            raise UnsupportedStructure("triggers accumulate immediately ahead of the state")
        return _first_true(lambda n: not ahead(n), self.first) - 1

    def to_json(self) -> dict:
        return {"family": True, "a": [[sc.fmt(c), sc.fmt(r)] for c, r in self.a.terms],
                "b": [[sc.fmt(c), sc.fmt(r)] for c, r in self.b.terms],
                "first": self.first, "approach": self.approach}


def _first_true(pred, start: int) -> int:
    step, hi = 1, start
    while not pred(hi):
        hi = start + step
        step *= 2
        if step > 2 ** 60:
            raise UnsupportedStructure("index search did not terminate")
    lo = max(start, hi - step // 2)
    while lo < hi:
        mid = (lo + hi) // 2
        if pred(mid):
            hi = mid
        else:
            lo = mid + 1
    return lo


def rule_from_json(d: dict):
    P = sc.parse_scalar
    if d.get("family"):
        seq = lambda key: TermSeq((P(c), P(r)) for c, r in d[key])
        return JumpRuleFamily(seq("a"), seq("b"), int(d.get("first", 0)), d.get("approach", EITHER))
    return JumpRule(tuple(P(c) for c in d["a"]), tuple(P(c) for c in d["b"]), d.get("approach", EITHER))


# --- processes ---------------------------------------------------------------

class Process:
    """Anything with ``evaluate(x, t)`` returning a state or :class:`Killed`."""

    def evaluate(self, x, t):
        raise NotImplementedError

    def right_derivative(self, x, t):
        """Right derivative of ``t -> X_t^x``; None when undefined."""
        return None


@dataclass(frozen=True)
class FunctionProcess(Process):
    """A process given by a closed formula ``fn(x, t)``."""

    fn: Callable
    dim: int = 1
    name: str = ""
    deriv: Optional[Callable] = None

    def evaluate(self, x, t):
        return vec(self.fn(vec(x), t))

    def right_derivative(self, x, t):
        return None if self.deriv is None else vec(self.deriv(vec(x), t))


@dataclass(frozen=True)
class SingleStartProcess(Process):
    """Only the path started in ``x0``; other starts are undefined."""

    path: PathSpec
    x0: tuple

    @property
    def dim(self):
        return self.path.dim

    def evaluate(self, x, t):
        if vec(x) != vec(self.x0):
            raise ProcessError(f"only the start {self.x0} is defined")
        return self.path.evaluate(t)


@dataclass(frozen=True)
class UniversalProcess(Process):
    dim: int
    regions: tuple
    rules: tuple = ()
    name: str = ""

    # lookup ------------------------------------------------------------
    def region_of(self, x: tuple) -> Optional[Region]:
        hits = [r for r in self.regions if r.contains(x)]
        if len(hits) > 1:
            raise AmbiguousRegion(f"{x} lies in {len(hits)} regions")
        return hits[0] if hits else None

    def evaluate(self, x, t):
        x, t = vec(x), sc.as_scalar(t)
        if t == INF:
            raise ProcessError("t must be finite")
        if t < 0:
            raise ProcessError("t must be nonnegative")
        return _Run(self, x).run(t)

    def right_derivative(self, x, t):
        if self.rules:
            return None
        y = self.evaluate(x, t)
        if isinstance(y, Killed):
            return None
        reg = self.region_of(y)
        if reg is None or reg.gen is None:
            return tuple(Fraction(0) for _ in y)
        return reg.gen.right_derivative(reg.gen.inverse(y))

    def with_rules(self, rules) -> "UniversalProcess":
        return UniversalProcess(self.dim, self.regions, tuple(self.rules) + tuple(rules), self.name)

    def to_json(self) -> dict:
        return {"dimension": self.dim,
                "regions": [r.to_json() for r in self.regions],
                "generating_paths": [None if r.gen is None else r.gen.to_json() for r in self.regions],
                "jump_rules": [r.to_json() for r in self.rules],
                "default": "identity"}

    @classmethod
    def from_json(cls, d: dict) -> "UniversalProcess":
        gens = [None if g is None else gen_from_json(g) for g in d["generating_paths"]]
        regs = tuple(region_from_json(r, g) for r, g in zip(d["regions"], gens))
        return cls(int(d["dimension"]), regs, tuple(rule_from_json(r) for r in d.get("jump_rules", ())))


class _Run:
    """One event-driven evaluation."""

    def __init__(self, P: UniversalProcess, x: tuple):
        self.P = P
        self.x = x
        self.elapsed = Fraction(0)
        self.events = 0
        self.cap = event_cap()
        self.certified: dict = {}

    def run(self, t):
        P = self.P
        while True:
            x = self.x
            remaining = t - self.elapsed
            if remaining == 0:
                return x
            reg = P.region_of(x)
            if reg is None or reg.gen is None:
                return x
            gen = reg.gen
            s = gen.inverse(x)
            if s is None:
                raise AmbiguousRegion(f"{x} is not on the generating path of its region")
            if not P.rules:
                if s + remaining < gen.hi:
                    return gen.value(s + remaining)
                self._exit(gen, s)
                if isinstance(self.x, Killed):
                    return self.x
                continue
            sigma = gen.sign
            if sigma is None:
                raise ProcessError("jump rules need strictly monotone continuous generating paths")
            nxt = self._next_trigger(x, gen, s, sigma)
            exit_dt = gen.hi - s
            if nxt is None or nxt[0] > exit_dt:
                if remaining < exit_dt:
                    return gen.value(s + remaining)
                self._exit(gen, s)
                if isinstance(self.x, Killed):
                    return self.x
                continue
            dt, rule, fam, n = nxt
            if remaining < dt:
                return gen.value(s + remaining)
            self.elapsed += dt
            self.x = rule.b
            self.events += 1
            if fam is not None:
                acc = self._accumulation(fam, n, gen, sigma)
                if acc is not None:
                    tau, limit = acc
                    if t >= tau:
                        if limit in (INF, -INF):
                            return Killed(tau)
                        self.elapsed = tau
                        self.x = (limit,)
                        continue
            if self.events > self.cap:
                raise EventCapExceeded(f"more than {self.cap} events before t = {sc.fmt(t)}")

    def _exit(self, gen, s):
        """Leave the domain of ``gen`` at its right end."""
        self.elapsed += gen.hi - s
        y = gen.limit_hi()
        if any(c in (INF, -INF) for c in y):
            self.x = Killed(self.elapsed)
        else:
            self.x = tuple(y)
        self.events += 1
        if self.events > self.cap:
            raise EventCapExceeded("too many region exits")

    def _time_to(self, gen, s, a) -> Optional[object]:
        u = gen.inverse(a)
        if u is not None and u > s:
            return u - s
        if gen.hi != INF and tuple(gen.limit_hi()) == a:
            return gen.hi - s
        return None

    def _next_trigger(self, x, gen, s, sigma):
        best = None
        for r in self.P.rules:
            if not r.fires_moving(sigma):
                continue
            if isinstance(r, JumpRuleFamily):
                n = r.next_ahead(x[0], sigma)
                if n is None:
                    continue
                rule, fam = r.rule(n), r
            else:
                if not sigma * (r.a[0] - x[0]) > 0:
                    continue
                rule, fam, n = r, None, None
            dt = self._time_to(gen, s, rule.a)
            if dt is not None and (best is None or dt < best[0]):
                best = (dt, rule, fam, n)
        return best

    def _accumulation(self, fam: JumpRuleFamily, n: int, gen, sigma):
        """``(tau, limit)`` when events from rule ``n`` on chain through the family."""
        if not (isinstance(gen, PrimitiveGen) and isinstance(gen.prim, Affine)
                and gen.lo == -INF and gen.hi == INF):
            return None
        key = (id(fam), n)
        if key in self.certified:
            return self.certified[key]
        gap = fam.a.shift(1) - fam.b
        ok = (gap * sigma).signs_from(n) == {1} \
            and (fam.b - fam.a).signs_from(n) <= {0, sigma} \
            and fam.monotone() == sigma
        b_n = fam.b(n)
        for r in self.P.rules:
            if r is fam or not r.fires_moving(sigma):
                continue
            if isinstance(r, JumpRuleFamily):
                if r.next_ahead(b_n, sigma) is not None:
                    ok = False
            elif sigma * (r.a[0] - b_n) > 0:
                ok = False
        res = None
        if ok:
            total = gap.sum_from(n)
            if not isinstance(total, Divergent):
                res = (self.elapsed + total / gen.prim.slope[0], fam.b.extended_limit())
        self.certified[key] = res
        return res


def evaluate(P: Process, x, t):
    return P.evaluate(x, t)


def identity_process(dim: int = 1) -> UniversalProcess:
    return UniversalProcess(dim, (), (), "identity")


# --- construction ------------------------------------------------------------

def from_expandable_path(f: PathSpec) -> UniversalProcess:
    """Every start in the range of ``f`` follows a shift of ``f``; others stay."""
    v = check_markov(f)
    if v.answer != YES:
        raise NotExpandable(v.evidence)
    return UniversalProcess(f.dim, (Region("general", PathGen(f)),), (), "expansion")


def add_jump_structure(P: UniversalProcess, rules: Sequence) -> UniversalProcess:
    if not rules:
        return P
    if P.dim != 1:
        raise ProcessError("jump structures are one-dimensional")
    for reg in P.regions:
        if reg.gen is not None and reg.gen.sign is None:
            raise ProcessError("jump structures need monotone continuous generating paths")
    return P.with_rules(rules)


@dataclass(frozen=True)
class StructureEntry:
    interval: Interval
    kind: str
    gen: Optional[PrimitiveGen] = None


def validate_structure(seq: Sequence[StructureEntry]) -> ValidationReport:
    rep = ValidationReport()
    v = rep.violations
    for i, e in enumerate(seq):
        where = f"region {i} {_fmt_interval(e.interval)}"
        if e.interval.empty:
            v.append(f"{where}: empty")
        if e.kind not in ("+", "-", "0"):
            v.append(f"{where}: unknown type {e.kind!r}")
            continue
        if e.kind == "0":
            if e.gen is not None:
                v.append(f"{where}: constant regions take no generating path")
            continue
        if e.gen is None:
            v.append(f"{where}: missing generating path")
            continue
        if e.gen.sign != (1 if e.kind == "+" else -1):
            v.append(f"{where}: generating path monotonicity does not match type {e.kind}")
            continue
        if e.gen.range() != e.interval:
            v.append(f"{where}: generating path maps onto {_fmt_interval(e.gen.range())}")
    for i, (p, q) in enumerate(zip(seq, seq[1:])):
        I, J = p.interval, q.interval
        if not I.hi <= J.lo:
            if I.meets(J):
                v.append(f"regions {i} and {i + 1} overlap")
            else:
                v.append(f"regions {i} and {i + 1} are out of order")
        elif I.hi == J.lo and I.hi_closed == J.lo_closed:
            owner = "both" if I.hi_closed else "neither"
            v.append(f"boundary {sc.fmt(I.hi)} owned by {owner} of regions {i} and {i + 1}")
    return rep


def _fmt_interval(I: Interval) -> str:
    return f"{'[' if I.lo_closed else '('}{sc.fmt(I.lo)},{sc.fmt(I.hi)}{']' if I.hi_closed else ')'}"


def build_from_structure(seq: Sequence[StructureEntry]) -> UniversalProcess:
    rep = validate_structure(seq)
    if not rep.valid:
        raise StructureInvalid("; ".join(rep.violations))
    regs = tuple(Region(e.kind, e.gen, e.interval) for e in seq)
    return UniversalProcess(1, regs, (), "|".join(e.kind for e in seq))


# --- grid verification ---------------------------------------------------------

@dataclass(frozen=True)
class Pass:
    checked: int = 0
    passed = True

    def to_json(self) -> dict:
        return {"result": "Pass", "checked": self.checked}


@dataclass(frozen=True)
class Witness:
    fields: dict = field(default_factory=dict)
    passed = False

    def __getattr__(self, name):
        try:
            return self.__dict__["fields"][name]
        except KeyError:
            raise AttributeError(name) from None

    def to_json(self) -> dict:
        return {"result": "Witness", **{k: _fmt_state(v) for k, v in self.fields.items()}}


def _fmt_state(v):
    if isinstance(v, Killed):
        return str(v)
    if isinstance(v, tuple):
        return [sc.fmt(c) for c in v]
    return sc.fmt(v)


def _scalar_or_vec(x):
    return x[0] if isinstance(x, tuple) and len(x) == 1 else x


def _agree(a, b, shift=Fraction(0)) -> bool:
    """State equality; two killed runs agree when their killing times differ by ``shift``."""
    if isinstance(a, Killed) or isinstance(b, Killed):
        return isinstance(a, Killed) and isinstance(b, Killed) and a.tau == b.tau + shift
    return a == b


def _buckets(vals) -> Optional[list]:
    """Indices of equal unkilled states, grouped; None if some state is unhashable."""
    out: dict = {}
    try:
        for i, v in enumerate(vals):
            if not isinstance(v, Killed):
                out.setdefault(v, []).append(i)
    except TypeError:
        return None
    return list(out.values())


def _hashable(v) -> bool:
    try:
        hash(v)
    except TypeError:
        return False
    return True


def verify_time_homogeneity(P: Process, grid, horizon=Fraction(1), step=Fraction(1, 2)):
    """For grid pairs with ``X_s^x = X_t^y`` require ``X_{s+h}^x = X_{t+h}^y``.

    With exact states agreement is an equivalence relation (killing times
    compared in absolute time), so each group of equal states is checked
    against its first member; any failure falls back to the ordered pair scan,
    which reports the lexicographically first witness.
    """
    grid = [(vec(x), sc.as_scalar(s)) for x, s in grid]
    hs = [step * k for k in range(1, int(horizon / step) + 1)]
    vals = [P.evaluate(x, s) for x, s in grid]
    later = [[None] * len(hs) for _ in grid]

    def at(i, k):
        if later[i][k] is None:
            x, s = grid[i]
            later[i][k] = P.evaluate(x, s + hs[k])
        return later[i][k]

    def group_agrees(g):
        i0, s0 = g[0], grid[g[0]][1]
        for k in range(len(hs)):
            a = at(i0, k)
            if not _hashable(a):
                return False
            for j in g[1:]:
                b = at(j, k)
                if not _hashable(b) or not _agree(a, b, s0 - grid[j][1]):
                    return False
        return True

    groups = _buckets(vals)
    if groups is not None and all(group_agrees(g) for g in groups):
        return Pass(sum(len(g) * (len(g) - 1) // 2 for g in groups) * len(hs))
    n = 0
    for i in range(len(grid)):
        if isinstance(vals[i], Killed):
            continue
        for j in range(i + 1, len(grid)):
            if vals[i] != vals[j]:
                continue
            (x, s), (y, t) = grid[i], grid[j]
            for k, h in enumerate(hs):
                n += 1
                a, b = at(i, k), at(j, k)
                if not _agree(a, b, s - t):
                    return Witness({"x": _scalar_or_vec(x), "y": _scalar_or_vec(y), "s": s, "t": t,
                                    "h": h, "left": a, "right": b})
    return Pass(n)


def verify_markov_semigroup(P: Process, grid):
    """``X_{t+h}^x = X_h^{X_t^x}`` over grid triples ``(x, t, h)``."""
    n = 0
    for x, t, h in grid:
        n += 1
        mid = P.evaluate(x, t)
        lhs = P.evaluate(x, sc.as_scalar(t) + sc.as_scalar(h))
        if isinstance(mid, Killed):
            if not isinstance(lhs, Killed) or lhs.tau != mid.tau:
                return Witness({"x": x, "t": t, "h": h, "left": lhs, "right": mid})
            continue
        rhs = P.evaluate(mid, h)
        if not _agree(lhs, rhs, sc.as_scalar(t)):
            return Witness({"x": x, "t": t, "h": h, "left": lhs, "right": rhs})
    return Pass(n)


def verify_space_homogeneity(P: Process, grid):
    """``X_t^{x+z} = X_t^x + z`` over grid triples ``(x, z, t)``."""
    n = 0
    for x, z, t in grid:
        n += 1
        xv, zv = vec(x), vec(z)
        lhs = P.evaluate(tuple(a + b for a, b in zip(xv, zv)), t)
        base = P.evaluate(xv, t)
        rhs = base if isinstance(base, Killed) else tuple(a + b for a, b in zip(base, zv))
        if lhs != rhs:
            return Witness({"x": x, "z": z, "t": t, "left": lhs, "right": rhs})
    return Pass(n)


def product_grid(*axes) -> list:
    out = [()]
    for ax in axes:
        out = [p + (a,) for p in out for a in ax]
    return out


# --- trajectories --------------------------------------------------------------

def trajectory(P: Process, x, times) -> list:
    return [(t, P.evaluate(x, t)) for t in times]


def trajectory_csv(P: Process, x, times, exact: bool = False) -> str:
    d = P.dim
    head = ["t"] + [f"x{i + 1}" for i in range(d)] + (["exact"] if exact else [])
    lines = [",".join(head)]
    for t, y in trajectory(P, x, times):
        if isinstance(y, Killed):
            row = [_dec(t)] + ["killed"] * d
            ex = f"{sc.fmt(t)} killed@{sc.fmt(y.tau)}"
        else:
            row = [_dec(t)] + [_dec(c) for c in y]
            ex = " ".join(sc.fmt(c) for c in (t, *y))
        lines.append(",".join(row + ([ex] if exact else [])))
    return "\n".join(lines) + "\n"


def _dec(v) -> str:
    return format(sc.to_float(v), ".15g")
