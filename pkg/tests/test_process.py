import math
import random
from fractions import Fraction as F

import pytest

from detmp import fixtures as fx
from detmp import process as pr
from detmp import scalar as sc
from detmp.intervals import Interval
from detmp.path import ConstantTail, PathSpec
from detmp.primitives import Affine, Exponential
from strategies import aff

INF = math.inf


def drift(c=1):
    return pr.UniversalProcess(1, (pr.Region("+", pr.PrimitiveGen(aff(c, 0)),
                                             Interval(-INF, INF, False, False)),))


# --- construction -------------------------------------------------------------------

def test_zigzag_expansion_value():
    P = pr.from_expandable_path(fx.dyadic_zigzag_path())
    assert P.evaluate(1, 1) == (2,)


def test_constant_expansion():
    P = pr.from_expandable_path(PathSpec(1, [], [], ConstantTail(F(0), (F(7),))))
    assert P.evaluate(7, 5) == (7,)
    assert P.evaluate(F(1, 3), 5) == (F(1, 3),)


def test_sawtooth_expansion_wraps():
    P = pr.from_expandable_path(fx.sawtooth_path())
    assert P.evaluate(F(1, 2), F(3, 4)) == (F(1, 4),)


def test_not_expandable():
    with pytest.raises(pr.NotExpandable):
        pr.from_expandable_path(fx.hexagon_path())


# --- evaluation -----------------------------------------------------------------------

def test_exponential_doubles():
    y = fx.exponential_process().evaluate(1, sc.log(F(2)))
    assert y == (2,)
    assert not sc.is_exact(y)


def test_exponential_zero_stays():
    assert fx.exponential_process().evaluate(0, 5) == (0,)
    assert fx.exponential_process().evaluate(-3, 0) == (-3,)


def test_time_zero_is_identity():
    procs = [fx.cantor_process(), fx.exponential_process(), fx.harmonic_structure_process(),
             fx.killing_process(), pr.from_expandable_path(fx.dyadic_zigzag_path()), drift()]
    for P in procs:
        for x in (F(-5, 2), F(0), F(1, 3), F(2)):
            assert P.evaluate(x, 0) == (x,)


def test_cantor_process_values():
    P = fx.cantor_process()
    assert P.evaluate(0, 1) == (1,)
    assert P.evaluate(0, F(1, 3)) == (F(5, 12),)


def test_identity_process():
    P = pr.identity_process()
    assert P.evaluate(F(3, 7), 100) == (F(3, 7),)


# --- jump structures --------------------------------------------------------------------

def test_empty_rules_change_nothing():
    P = drift()
    assert pr.add_jump_structure(P, []) is P


def test_single_rule_gives_sawtooth():
    P = pr.add_jump_structure(drift(), [pr.JumpRule((1,), (0,))])
    for k in range(40):
        t = F(k, 7)
        assert P.evaluate(0, t) == (t - math.floor(t),)


def test_killing_from_trigger_starts():
    P = fx.killing_process()
    rules = fx.killing_rules()
    for n in range(1, 6):
        x = rules.b(n)
        y = P.evaluate(x, 10)
        assert isinstance(y, pr.Killed)
        assert y.tau == fx.killing_time(x)


def test_killing_closed_forms():
    assert fx.killing_time(2) == 2
    assert fx.killing_time(F(5, 2)) == F(3, 2)


def test_killed_before_tau_is_alive():
    P = fx.killing_process()
    tau = fx.killing_time(2)
    y = P.evaluate(2, tau - F(1, 1000))
    assert not isinstance(y, pr.Killed)
    assert isinstance(P.evaluate(2, tau), pr.Killed)


def test_event_cap(monkeypatch):
    P = pr.add_jump_structure(drift(), [pr.JumpRule((1,), (0,))])
    monkeypatch.setenv("DETMP_EVENT_CAP", "10")
    with pytest.raises(pr.EventCapExceeded):
        P.evaluate(0, 50)
    assert P.evaluate(0, F(19, 2)) == (F(1, 2),)


def test_structure_validation():
    good = [pr.StructureEntry(Interval(-INF, F(0), False, False), "+",
                              pr.PrimitiveGen(aff(1, -1), hi=F(1))),
            pr.StructureEntry(Interval.point(F(0)), "0")]
    assert pr.validate_structure(good).valid
    bad = [good[0], pr.StructureEntry(Interval(F(-1), F(1), True, True), "0")]
    assert not pr.validate_structure(bad).valid
    wrong_sign = [pr.StructureEntry(Interval(-INF, F(0), False, False), "-",
                                    pr.PrimitiveGen(aff(1, -1), hi=F(1)))]
    assert not pr.validate_structure(wrong_sign).valid
    with pytest.raises(pr.StructureInvalid):
        pr.build_from_structure(bad)


def test_harmonic_structure_process():
    P = fx.harmonic_structure_process()
    assert P.evaluate(2, F(1, 2)) == (F(3, 2),)
    assert P.evaluate(-2, 5) == (0,)


# --- verifiers ---------------------------------------------------------------------------

def test_shrinking_semigroup_witness():
    w = pr.verify_markov_semigroup(fx.shrinking_process(), [((1,), 1, 1)])
    assert not w.passed
    assert (w.left, w.right) == ((-1,), (0,))


def test_sum_path_time_witness():
    P = pr.SingleStartProcess(fx.sum_path(), (F(0),))
    grid = [((0,), 0), ((0,), 1)]
    w = pr.verify_time_homogeneity(P, grid, F(1, 2), F(1, 2))
    assert not w.passed
    assert (w.s, w.t, w.h, w.left, w.right) == (0, 1, F(1, 2), (0,), (F(-1, 2),))


def test_killing_passes_semigroup():
    P = fx.killing_process()
    xs = [fx.killing_rules().b(n) for n in range(1, 4)] + [F(-1), F(0)]
    ts = [F(0), F(1, 2), F(1), F(3, 2), F(5, 2)]
    assert pr.verify_markov_semigroup(P, pr.product_grid(xs, ts, ts)).passed
    assert pr.verify_time_homogeneity(P, pr.product_grid(xs, ts), F(2), F(1, 2)).passed


def test_expansion_passes_verifiers():
    P = pr.from_expandable_path(fx.dyadic_zigzag_path())
    xs = [(F(1),), (F(1, 2),), (F(2),), (F(5, 2),), (F(3),), (F(-7),)]
    ts = [F(0), F(1, 4), F(1, 2), F(1), F(3, 2), F(2)]
    assert pr.verify_markov_semigroup(P, pr.product_grid(xs, ts, [F(1, 2), F(1)])).passed
    assert pr.verify_time_homogeneity(P, pr.product_grid(xs, ts)).passed
    assert pr.verify_markov_semigroup(pr.identity_process(), pr.product_grid(xs, ts, ts)).passed


def test_space_homogeneity():
    D = fx.drift_process(F(3, 2))
    grid = pr.product_grid([(F(0),), (F(2),)], [(F(1),), (F(-1, 3),)], [F(0), F(1), F(5, 2)])
    assert pr.verify_space_homogeneity(D, grid).passed
    w = pr.verify_space_homogeneity(fx.exponential_process(), [((0,), (1,), sc.log(F(2)))])
    assert not w.passed
    assert w.left == (2,) and w.right == (1,)


# --- flow property --------------------------------------------------------------------------

FLOW_CASES = {
    "zigzag": (lambda: pr.from_expandable_path(fx.dyadic_zigzag_path()),
               lambda r: fx.dyadic_zigzag_path().evaluate(F(r.randint(0, 255), 128))[0]),
    "sawtooth": (lambda: pr.from_expandable_path(fx.sawtooth_path()), lambda r: F(r.randint(0, 63), 64)),
    "landing": (lambda: pr.from_expandable_path(fx.landing_path()),
                lambda r: fx.landing_path().evaluate(F(r.randint(0, 127), 128))[0]),
    "harmonic_structure": (fx.harmonic_structure_process, lambda r: F(r.randint(-40, 40), 8)),
    "killing": (fx.killing_process, lambda r: F(r.randint(-16, 40), 8)),
    "drift": (lambda: fx.drift_process(F(-2, 3)), lambda r: F(r.randint(-40, 40), 8)),
    "cantor": (fx.cantor_process, lambda r: F(r.randint(0, 27), 27)),
}


@pytest.mark.parametrize("name", sorted(FLOW_CASES))
def test_flow_property(name):
    make, start = FLOW_CASES[name]
    P = make()
    rng = random.Random(name)
    den = 27 if name == "cantor" else 16
    for _ in range(1000):
        x = start(rng)
        t, h = F(rng.randint(0, 4 * den), den), F(rng.randint(0, 4 * den), den)
        mid = P.evaluate(x, t)
        whole = P.evaluate(x, t + h)
        if isinstance(mid, pr.Killed):
            assert whole == mid
            continue
        after = P.evaluate(mid, h)
        if isinstance(after, pr.Killed):
            # killing times count from each run's own start
            assert isinstance(whole, pr.Killed) and whole.tau == t + after.tau
        else:
            assert whole == after


# --- trajectories -------------------------------------------------------------------------

def test_trajectory_csv():
    P = pr.from_expandable_path(fx.sawtooth_path())
    text = pr.trajectory_csv(P, (F(0),), [F(0), F(1, 3), F(1)], exact=True)
    lines = text.strip().splitlines()
    assert lines[0] == "t,x1,exact"
    assert lines[2].startswith("0.333333")
    assert lines[2].endswith("1/3")
    assert lines[3].split(",")[1] == "0.0" or float(lines[3].split(",")[1]) == 0


def test_trajectory_csv_killed():
    P = fx.killing_process()
    text = pr.trajectory_csv(P, (F(2),), [F(0), F(3)])
    assert "killed" in text.strip().splitlines()[-1]


# --- further construction invariants ----------------------------------------------------

@pytest.mark.parametrize("fid", ["sawtooth", "dyadic_zigzag", "infinite_landing", "affine_line",
                                 "zero_infinitely_often", "feller_gap"])
def test_expansion_is_faithful(fid):
    f = fx.build_fixture(fid).path
    P = pr.from_expandable_path(f)
    x0 = f.evaluate(F(0))
    for k in range(400):
        t = F(k, 64)
        assert P.evaluate(x0, t) == f.evaluate(t)


def test_jump_periodic_expansion_keeps_starts_apart():
    f = fx.zero_often_path()
    P = pr.from_expandable_path(f)
    starts = sorted({f.evaluate(F(k, 16))[0] for k in range(32)})
    for t in (F(0), F(1, 8), F(1, 2), F(3, 4), F(5, 4)):
        vals = [P.evaluate(x, t) for x in starts]
        assert len(set(vals)) == len(vals)


def test_either_rule_equals_one_sided_rule():
    base = drift()
    for approach in (pr.FROM_BELOW,):
        P = pr.add_jump_structure(base, [pr.JumpRule((1,), (0,))])
        Q = pr.add_jump_structure(base, [pr.JumpRule((1,), (0,), approach)])
        for k in range(60):
            t = F(k, 9)
            for x in (F(0), F(1, 3), F(-2)):
                assert P.evaluate(x, t) == Q.evaluate(x, t)
    # moving down, a rule that fires only from below never fires
    down = pr.add_jump_structure(drift(-1), [pr.JumpRule((0,), (5,), pr.FROM_BELOW)])
    assert down.evaluate(1, 3) == (-2,)


def test_exponential_structure_grid():
    P = fx.exponential_process()
    for x in (F(-3), F(-1, 2), F(0), F(1, 4), F(2)):
        for t in (F(0), F(1, 2), F(1), F(3)):
            y = P.evaluate(x, t)
            assert y == (x * sc.exp(t),)


def test_single_constant_region_is_identity():
    P = pr.build_from_structure([pr.StructureEntry(Interval(-INF, INF, False, False), "0")])
    assert P.evaluate(F(5, 3), 11) == (F(5, 3),)
