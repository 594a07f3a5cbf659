"""Gallery of worked paths and processes with expected-verdict tables.

Each fixture ships as ``data/<id>.json`` holding its path and/or process in
the usual JSON formats plus a table of expected verdicts.  Objects that have
no serial form (closed-formula processes, lifts) are rebuilt from code.
:func:`check_fixture` recomputes every entry of the table.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Callable, Optional

from . import analysis as an
from . import expandability as ex
from . import process as pr
from . import scalar as sc
from . import semimartingale as sm
from .families import GeometricFamily, HarmonicFamily
from .flows import InhomogeneousFlow, LiftedProcess, space_time_lift, symbol_eval
from .intervals import Interval
from .path import ConstantTail, PathSpec, PeriodicRepeat, Segment, UnboundedPrimitive
from .primitives import Affine, CantorDevil, Constant, Exponential
from .scalar import INF
from .series import Divergent, TermSeq

F = Fraction


class UnknownFixture(KeyError):
    pass


def _a(k, c) -> Affine:
    return Affine((F(k),), (F(c),))


def _a2(k, c) -> Affine:
    return Affine(tuple(F(v) for v in k), tuple(F(v) for v in c))


# --- paths -----------------------------------------------------------------------

def hexagon_path() -> PathSpec:
    """Closed polygon loop in the plane, repeated with period 6."""
    pieces = [(0, 1, _a2((1, 0), (0, 0))), (1, 2, _a2((-1, 1), (2, -1))),
              (2, 3, _a2((0, -1), (0, 3))), (3, 4, _a2((-1, 0), (3, 0))),
              (4, 5, _a2((1, -1), (-5, 4))), (5, 6, _a2((0, 1), (0, -6)))]
    return PathSpec.build(2, pieces, tail=PeriodicRepeat(F(0), F(6)))


def sawtooth_path() -> PathSpec:
    return PathSpec.build(1, [(0, 1, _a(1, 0))], tail=PeriodicRepeat(F(0), F(1)))


def affine_line_path(slope=3, intercept=1) -> PathSpec:
    return PathSpec(1, [], [], UnboundedPrimitive(F(0), _a(slope, intercept)))


def dyadic_zigzag_path() -> PathSpec:
    """Zigzag on [0, 1) with slopes -1/+1 on dyadic blocks, mirrored zigzag
    around 2 on (1, 2), value 2 at 1 and constant 3 from 2 on."""
    left = GeometricFamily.alternating("dyadic_alternating", 1, 1, F(1, 2), "left",
                                       _a(-1, 1), _a(1, -1))
    right = GeometricFamily.alternating("dyadic_alternating", 1, 1, F(1, 2), "right",
                                        _a(-1, 3), _a(1, 1))
    return PathSpec(1, [], [left, right], ConstantTail(F(2), (F(3),)))


def feller_gap_path(blocks: int = 8) -> PathSpec:
    """Continuous injective plane path; the first ``blocks`` double-steps of
    the infinite pattern, then the vertical ray it is heading along."""
    pieces = []
    for n in range(blocks):
        x, s = 1 - F(1, 2 ** n), (-1) ** n
        pieces.append((2 * n, 2 * n + 1, _a2((0, s), (x, -s * 2 * n))))
        dx = F(1, 2 ** (n + 1))
        pieces.append((2 * n + 1, 2 * n + 2,
                       _a2((dx, -s), (x - dx * (2 * n + 1), s + s * (2 * n + 1)))))
    x = 1 - F(1, 2 ** blocks)
    tail = UnboundedPrimitive(F(2 * blocks), _a2((0, 1), (x, -2 * blocks)))
    return PathSpec.build(2, pieces, tail=tail)


def harmonic_flip_path() -> PathSpec:
    """Flips between -(1 - t_n) and (1 - t_n) at t_n = 1 - 1/(n+1), then 0."""
    fam = HarmonicFamily(1, 1, _a(-1, 1), _a(1, -1))
    return PathSpec(1, [], [fam], ConstantTail(F(1), (F(0),)))


def cantor_path() -> PathSpec:
    return PathSpec(1, [], [], UnboundedPrimitive(F(0), CantorDevil(F(0))))


def exponential_path() -> PathSpec:
    return PathSpec(1, [], [], UnboundedPrimitive(F(0), Exponential(1, F(0))))


def shrinking_path(x=1) -> PathSpec:
    """``t -> x (1 - t)``: the path started in ``x`` of the shrinking process."""
    return PathSpec(1, [], [], UnboundedPrimitive(F(0), _a(-F(x), x)))


def sum_path() -> PathSpec:
    return PathSpec.build(1, [(0, 1, Constant((F(0),))), (1, 2, _a(-1, 1))],
                          tail=ConstantTail(F(2), (F(-1),)))


def zero_often_path() -> PathSpec:
    """Two dyadic zigzags per period 2, hitting zero at 0 and 1 in every period."""
    f1 = GeometricFamily.alternating("dyadic_alternating", 1, 1, F(1, 2), "left",
                                     _a(-1, 1), _a(1, -1))
    f2 = GeometricFamily.alternating("dyadic_alternating", 2, 1, F(1, 2), "left",
                                     _a(1, -2), _a(-1, 2))
    return PathSpec(1, [], [f1, f2], PeriodicRepeat(F(0), F(2)))


def landing_path() -> PathSpec:
    land = GeometricFamily("geometric_landing", F(1), F(1, 2), F(1, 2), "left",
                           TermSeq([(F(1, 2), F(1, 2))]),
                           TermSeq([(1, 1), (F(-1, 2), F(1, 2)), (F(-1, 8), F(1, 4))]))
    return PathSpec(1, [Segment(F(0), F(1, 2), _a(1, -1))], [land], ConstantTail(F(1), (F(1),)))


def sawtooth_cascade(level: int) -> PathSpec:
    """Continuous injective plane path whose first coordinate runs through
    ``level`` blocks of teeth; block ``k`` has ``k`` teeth of height ``1/k``.

    The second coordinate is ``t``, so variation grows by 2 per block.
    """
    pieces = []
    for k in range(1, level + 1):
        start, w = 1 - F(2, 2 ** k), F(1, 2 ** k) / k
        slope = 2 / (k * w)
        for j in range(k):
            s = start + j * w
            pieces.append((s, s + w / 2, _a2((slope, 1), (-slope * s, 0))))
            pieces.append((s + w / 2, s + w, _a2((-slope, 1), (slope * (s + w), 0))))
    end = 1 - F(1, 2 ** level)
    return PathSpec.build(2, pieces, tail=UnboundedPrimitive(end, _a2((0, 1), (0, 0))))


def stern_brocot(n: int) -> list:
    """The first ``n`` positive rationals in breadth-first Stern-Brocot order."""
    # seq holds one row of the tree's in-order listing, bracketed by 0/1 and 1/0
    out, seq = [], [(0, 1), (1, 0)]
    while len(out) < n:
        new = []
        for (a, b), (c, d) in zip(seq, seq[1:]):
            m = (a + c, b + d)
            new.append((a, b))
            new.append(m)
            out.append(F(*m))
        new.append(seq[-1])
        seq = new
    return out[:n]


def cantor_digits_start(digits: tuple) -> Fraction:
    return sum((F(d, 3 ** (j + 1)) for j, d in enumerate(digits)), F(0))


def cantor_set_path(digits: tuple, n_rationals: int = 12) -> PathSpec:
    """Start ``0.a_1 a_2 ...`` (ternary, ``a_j`` in {0, 2}); the n-th rational
    adds ``3^-h_n`` where ``h_n`` is the n-th position with ``a_j = 0``."""
    zeros = [j + 1 for j, d in enumerate(digits) if d == 0]
    qs = stern_brocot(n_rationals)
    jumps = sorted(zip(qs, zeros))
    x = cantor_digits_start(digits)
    pieces, t, v = [], F(0), x
    for q, h in jumps:
        pieces.append((t, q, Constant((v,))))
        t, v = q, v + F(1, 3 ** h)
    if not pieces:
        return PathSpec(1, [], [], ConstantTail(F(0), (v,)))
    return PathSpec.build(1, pieces, tail=ConstantTail(t, (v,)))


def cantor_set_starts(count: int = 12, digits: int = 20, seed: int = 7) -> list:
    rng = random.Random(seed)
    out = set()
    while len(out) < count:
        out.add(tuple(rng.choice((0, 2)) for _ in range(digits)))
    return sorted(out)


# --- processes ---------------------------------------------------------------------

def _line(kind, gen, iv) -> pr.StructureEntry:
    return pr.StructureEntry(iv, kind, gen)


def cantor_process() -> pr.UniversalProcess:
    reg = pr.Region("+", pr.PrimitiveGen(CantorDevil(F(0))), Interval(-INF, INF, False, False))
    return pr.UniversalProcess(1, (reg,), name="cantor")


def exponential_process() -> pr.UniversalProcess:
    return pr.build_from_structure([
        _line("-", pr.PrimitiveGen(Exponential(-1, F(0))), Interval(-INF, F(0), False, False)),
        pr.StructureEntry(Interval.point(F(0)), "0"),
        _line("+", pr.PrimitiveGen(Exponential(1, F(0))), Interval(F(0), INF, False, False))])


def harmonic_structure_process() -> pr.UniversalProcess:
    """Drift toward 0 from both sides, reaching it at time 1 and stopping."""
    return pr.build_from_structure([
        _line("+", pr.PrimitiveGen(_a(1, -1), hi=F(1)), Interval(-INF, F(0), False, False)),
        pr.StructureEntry(Interval.point(F(0)), "0"),
        _line("-", pr.PrimitiveGen(_a(-1, 1), hi=F(1)), Interval(F(0), INF, False, False))])


def killing_rules(c=F(1)) -> pr.JumpRuleFamily:
    """Triggers ``a_n`` and landings ``b_n`` growing like ``2^n``, ``n >= 1``."""
    c = F(c)
    a = TermSeq([(c - 1, 1), (-c, F(1, 2)), (F(1, 2), 2)])
    b = TermSeq([(c - 1, 1), (-c, F(1, 2)), (1, 2)])
    return pr.JumpRuleFamily(a, b, 1)


def killing_process(c=F(1)) -> pr.UniversalProcess:
    drift = pr.UniversalProcess(1, (pr.Region("+", pr.PrimitiveGen(_a(c, 0)),
                                              Interval(-INF, INF, False, False)),))
    return pr.add_jump_structure(drift, [killing_rules(c)])


def killing_time(x, c=F(1)):
    """Closed form: ``(a_m - x)/c + 2^-m`` for the first trigger ``a_m > x``."""
    rules = killing_rules(c)
    m = 1
    while rules.a(m) <= x:
        m += 1
    return (rules.a(m) - F(x)) / F(c) + F(1, 2 ** m)


def shrinking_process() -> pr.FunctionProcess:
    return pr.FunctionProcess(lambda x, t: x[0] * (1 - t), 1, "x(1-t)", lambda x, t: -x[0])


def shrinking_flow() -> InhomogeneousFlow:
    """Started in ``x`` at time ``s < 1``, follow the path through ``x``."""

    def fn(s, t, x):
        if s == 1:
            raise pr.AmbiguousRegion("every path passes through 0 at time 1")
        return (x[0] * (1 - t) / (1 - s),)

    def deriv(s, t, x):
        if s == 1:
            raise pr.AmbiguousRegion("every path passes through 0 at time 1")
        return (-x[0] / (1 - s),)

    return InhomogeneousFlow(fn, 1, deriv, "x(1-t)/(1-s)")


def space_time_process() -> LiftedProcess:
    return space_time_lift(shrinking_flow())


def drift_process(c) -> pr.FunctionProcess:
    c = F(c)
    return pr.FunctionProcess(lambda x, t: x[0] + c * t, 1, f"x+{c}t", lambda x, t: c)


# --- fixture records ----------------------------------------------------------------

@dataclass(frozen=True)
class Fixture:
    id: str
    title: str
    path: Optional[PathSpec] = None
    process: Optional[object] = None
    expected: dict = field(default_factory=dict)
    notes: str = ""

    def to_json(self) -> dict:
        proc = self.process.to_json() if isinstance(self.process, pr.UniversalProcess) else None
        return {"id": self.id, "title": self.title,
                "path": None if self.path is None else self.path.to_json(),
                "process": proc, "expected": self.expected, "notes": self.notes}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> dict:
        return {"check": self.name, "expected": self.expected, "actual": self.actual, "ok": self.ok}


@dataclass(frozen=True)
class FixtureReport:
    id: str
    results: tuple

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.results)

    def to_json(self) -> dict:
        return {"id": self.id, "passed": self.passed, "checks": [r.to_json() for r in self.results]}


def norm(v):
    """JSON-stable rendering of a computed value."""
    if isinstance(v, pr.Killed):
        return {"killed": sc.fmt(v.tau)}
    if isinstance(v, (list, tuple)):
        return [norm(x) for x in v]
    if isinstance(v, dict):
        return {k: norm(x) for k, x in v.items()}
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, int):
        return sc.fmt(F(v))
    if isinstance(v, (Fraction, sc.Approx)):
        return sc.fmt(v)
    if isinstance(v, float):
        return sc.fmt(F(v))
    return v


# generic checks that only need the path
def _cls(fx):
    return an.classify(fx.path, allow_approx=True)


def _revisit_window(fx):
    c = _cls(fx)
    return [c.t0, c.t1]


def _tv_at(T):
    def run(fx):
        r = sm.total_variation(fx.path, F(T))
        return "Infinite" if isinstance(r, sm.Infinite) else r.value
    return run


def _js_at(T):
    def run(fx):
        r = sm.jump_abs_sum(fx.path, F(T))
        return {"divergent_N": r.witness} if isinstance(r, Divergent) else r.value
    return run


GENERIC: dict = {
    "classification": lambda fx: _cls(fx).kind,
    "revisit": _revisit_window,
    "witness": lambda fx: list(_cls(fx).witness) if _cls(fx).witness else None,
    "period": lambda fx: _cls(fx).period,
    "semimartingale": lambda fx: sm.is_semimartingale_path(fx.path).verdict,
    "continuous": lambda fx: an.continuity_report(fx.path).continuous,
}
for _k in ex.CLASSES:
    GENERIC[_k] = (lambda k: lambda fx: ex.check(fx.path, k).answer)(_k)


def _actual(fx: Fixture, name: str):
    if name in GENERIC:
        return GENERIC[name](fx)
    if name.startswith("total_variation@"):
        return _tv_at(sc.parse_scalar(name.split("@")[1]))(fx)
    if name.startswith("jump_abs_sum@"):
        return _js_at(sc.parse_scalar(name.split("@")[1]))(fx)
    fn = SPECIAL.get(fx.id, {}).get(name)
    if fn is None:
        raise KeyError(f"fixture {fx.id!r} has no check named {name!r}")
    return fn(fx)


# fixture-specific checks -------------------------------------------------------------

def _wit(w):
    return w.to_json() if hasattr(w, "to_json") else w


def _process_from_path_faithful(fx, n=200):
    P = pr.from_expandable_path(fx.path)
    x0 = fx.path.evaluate(F(0))
    H = max(2, sm.default_windows(fx.path))
    return all(P.evaluate(x0, F(k * H, n)) == fx.path.evaluate(F(k * H, n)) for k in range(n + 1))


def _feller_gap_alternation(fx):
    P = pr.from_expandable_path(fx.path)
    out = []
    for n in range(1, 7):
        xn = (1 - F(1, 2 ** n), F(0))
        assert P.evaluate((0, 0), 2 * n) == xn
        out.append(P.evaluate(xn, 1)[1])
    return out


def _cantor_set_claims(fx):
    starts = cantor_set_starts()
    paths = [cantor_set_path(d) for d in starts]
    inc, bounded, values = True, True, []
    for p in paths:
        ts = [F(0)] + sorted(p.breakpoints(F(0), F(10 ** 6)))
        vs = [p.evaluate(t)[0] for t in ts]
        inc &= all(u < v for u, v in zip(vs, vs[1:]))
        bounded &= all(0 <= v <= 1 for v in vs)
        values.append(set(vs))
    disjoint = all(not (values[i] & values[j])
                   for i in range(len(values)) for j in range(i + 1, len(values)))
    return {"strictly_increasing": inc, "bounded": bounded, "disjoint": disjoint,
            "starts": len(paths)}


def _cascade_growth(fx):
    out = []
    for L in range(1, 7):
        tv = sm.total_variation(sawtooth_cascade(L), F(1))
        out.append(sc.to_float(tv.value) >= L)
    return out


SPECIAL: dict = {
    "dyadic_zigzag": {
        "t0": lambda fx: _cls(fx).t0,
        "generalized_inverse(2)": lambda fx: an.generalized_inverse(fx.path, 2),
        "oracle_gap@12_below_2^-8": lambda fx: 10 - sm.variation_oracle(fx.path, 2, 12) < F(1, 256),
        "process_faithful": _process_from_path_faithful,
    },
    "sawtooth": {"process_faithful": _process_from_path_faithful},
    "affine_line": {"process_faithful": _process_from_path_faithful},
    "feller_gap": {"second_component_at_time_1": _feller_gap_alternation},
    "cantor_set_process": {"claims": _cantor_set_claims},
    "harmonic_flip": {
        "t0": lambda fx: _cls(fx).t0,
        "structure_process(2,1/2)": lambda fx: harmonic_structure_process().evaluate(2, F(1, 2)),
        "structure_process(-2,5)": lambda fx: harmonic_structure_process().evaluate(-2, 5),
    },
    "cantor_process": {
        "evaluate(0,1)": lambda fx: fx.process.evaluate(0, 1),
        "evaluate(0,1/3)": lambda fx: fx.process.evaluate(0, F(1, 3)),
        "generalized_inverse(5/12)": lambda fx: an.generalized_inverse(fx.path, F(5, 12)),
    },
    "exponential": {
        "space_homogeneity": lambda fx: _wit(pr.verify_space_homogeneity(
            fx.process, [(0, 0, 1), (0, 1, sc.log(2))])).get("result"),
        "time_homogeneity": lambda fx: _wit(pr.verify_time_homogeneity(
            fx.process, [(1, 1), (sc.exp(1), 0), (-1, 0), (2, 0)], 2, F(1, 2)))["result"],
        "evaluate(0,5)": lambda fx: fx.process.evaluate(0, 5),
    },
    "instant_killing": {
        "evaluate(2,10)": lambda fx: fx.process.evaluate(2, 10),
        "evaluate(5/2,10)": lambda fx: fx.process.evaluate(F(5, 2), 10),
        "closed_form(2)": lambda fx: killing_time(2),
        "closed_form(5/2)": lambda fx: killing_time(F(5, 2)),
        "evaluate(2,1/10)": lambda fx: fx.process.evaluate(2, F(1, 10)),
    },
    "shrinking": {
        "markov_semigroup": lambda fx: _wit(pr.verify_markov_semigroup(
            fx.process, pr.product_grid([0, 1, 2], [F(1, 2), 1], [F(1, 2), 1]))),
    },
    "sum_not_markov": {
        "time_homogeneity": lambda fx: _wit(pr.verify_time_homogeneity(
            fx.process, [(0, 0), (0, 1)], 1, F(1, 2))),
    },
    "zero_infinitely_often": {"process_faithful": _process_from_path_faithful},
    "infinite_landing": {
        "t0": lambda fx: _cls(fx).t0,
        "left_limit(1)": lambda fx: fx.path.left_limit(F(1)),
        "process_faithful": _process_from_path_faithful,
    },
    "space_time": {
        "time_homogeneity": lambda fx: _wit(pr.verify_time_homogeneity(
            fx.process, SPACE_TIME_GRID, 2, F(1, 2)))["result"],
        "symbol(c=2,xi=(1,3))": lambda fx: str(symbol_eval(space_time_lift(drift_process(2)),
                                                           (5, 1), (1, 3))),
    },
    "sawtooth_cascade": {"variation_at_least_level": _cascade_growth},
}

# includes the start (1, 0) observed at time 1, where the shrinking process failed;
# the other pairs meet before time 1
SPACE_TIME_GRID = [((1, 0), 1), ((1, 0), F(1, 2)), ((F(1, 2), F(1, 2)), 0),
                   ((1, 0), F(5, 6)), ((F(1, 3), F(2, 3)), F(1, 6)), ((2, F(1, 3)), 0)]


def _registry() -> dict:
    return {
        "hexagon": lambda: Fixture(
            "hexagon", "closed hexagonal loop in the plane", hexagon_path(), None),
        "sawtooth": lambda: Fixture(
            "sawtooth", "t mod 1", sawtooth_path(), None),
        "affine_line": lambda: Fixture(
            "affine_line", "3t + 1", affine_line_path(), None),
        "dyadic_zigzag": lambda: Fixture(
            "dyadic_zigzag", "dyadic zigzags on [0,1) and (1,2), constant 3 afterwards",
            dyadic_zigzag_path(), None),
        "feller_gap": lambda: Fixture(
            "feller_gap", "plane path that is Hunt- but not Feller-expandable",
            feller_gap_path(), None,
            notes="truncated after 8 double steps; the check times only need 13"),
        "cantor_set_process": lambda: Fixture(
            "cantor_set_process", "uncountably many increasing jump paths, truncated",
            None, None,
            notes="12 starts with 20 ternary digits, jumps at the first 12 rationals "
                  "in breadth-first Stern-Brocot order"),
        "harmonic_flip": lambda: Fixture(
            "harmonic_flip", "flips with non-summable jumps 2/(n+1) before time 1",
            harmonic_flip_path(), None,
            notes="flip times 1 - 1/(n+1) are one concrete choice of non-summable flips"),
        "cantor_process": lambda: Fixture(
            "cantor_process", "generating path (c(t) + t)/2 on each unit interval",
            cantor_path(), cantor_process()),
        "exponential": lambda: Fixture(
            "exponential", "X_t^x = x exp(t)", exponential_path(), exponential_process()),
        "instant_killing": lambda: Fixture(
            "instant_killing", "drift t with jumps a_n -> b_n accumulating in finite time",
            None, killing_process()),
        "shrinking": lambda: Fixture(
            "shrinking", "X_t^x = x (1 - t)", shrinking_path(), shrinking_process()),
        "sum_not_markov": lambda: Fixture(
            "sum_not_markov", "0 on [0,1), 1 - t on [1,2), -1 afterwards",
            sum_path(), pr.SingleStartProcess(sum_path(), (F(0),))),
        "zero_infinitely_often": lambda: Fixture(
            "zero_infinitely_often", "two zigzags per period 2",
            zero_often_path(), None),
        "infinite_landing": lambda: Fixture(
            "infinite_landing", "geometric landing family accumulating at 1",
            landing_path(), None),
        "space_time": lambda: Fixture(
            "space_time", "space-time lift of the shrinking flow x(1-t)/(1-s)",
            None, space_time_process()),
        "sawtooth_cascade": lambda: Fixture(
            "sawtooth_cascade", "continuous injective plane path with growing tooth blocks",
            sawtooth_cascade(6), None, notes="level 6"),
    }


FIXTURE_IDS = tuple(_registry())


def build_fixture(fid: str) -> Fixture:
    """The fixture constructed from code; the expected table is read from data."""
    reg = _registry()
    if fid not in reg:
        raise UnknownFixture(fid)
    base = reg[fid]()
    return Fixture(base.id, base.title, base.path, base.process, _load_data(fid)["expected"], base.notes)


def _load_data(fid: str) -> dict:
    try:
        text = resources.files(__package__).joinpath("data").joinpath(f"{fid}.json").read_text()
    except FileNotFoundError:
        raise UnknownFixture(fid) from None
    return json.loads(text)


def fixture(fid: str) -> Fixture:
    """The fixture as shipped: path and process loaded from the data file."""
    if fid not in FIXTURE_IDS:
        raise UnknownFixture(fid)
    d = _load_data(fid)
    built = _registry()[fid]()
    path = PathSpec.from_json(d["path"]) if d.get("path") else None
    proc = pr.UniversalProcess.from_json(d["process"]) if d.get("process") else built.process
    return Fixture(fid, d["title"], path, proc, d["expected"], d.get("notes", ""))


def check_fixture(fid: str) -> FixtureReport:
    fx = fixture(fid)
    results = tuple(CheckResult(name, exp, norm(_actual(fx, name))) for name, exp in fx.expected.items())
    return FixtureReport(fid, results)


def compute_table(fx: Fixture, names) -> dict:
    """Actual values for ``names``; used to draft a data file's table."""
    return {n: norm(_actual(fx, n)) for n in names}
