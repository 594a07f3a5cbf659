"""Acceptance criteria, one test each.

Every test prints a single ``criterion N PASS|FAIL`` line; the lines are
repeated in the terminal summary.  Run directly (``python3
tests/test_acceptance.py``) for the summary alone.
"""

import math
import os
import random
import sys
from fractions import Fraction as F

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from detmp import analysis as an  # noqa: E402
from detmp import expandability as ex  # noqa: E402
from detmp import fixtures as fx  # noqa: E402
from detmp import flows as fl  # noqa: E402
from detmp import process as pr  # noqa: E402
from detmp import scalar as sc  # noqa: E402
from detmp import semimartingale as sm  # noqa: E402
from detmp.flows import SymbolValue  # noqa: E402
from detmp.series import Divergent  # noqa: E402
from strategies import injective_case, random_spec  # noqa: E402

TITLES = {
    1: "trichotomy fidelity",
    2: "construction faithfulness",
    3: "counterexample reproduction",
    4: "semimartingale criterion",
    5: "finite variation iff summable jumps (injective paths)",
    6: "decomposition exactness",
    7: "class hierarchy",
    8: "Cantor process verdicts",
    9: "space-time lift",
    10: "killing",
    11: "Feller gap",
}
RESULTS: dict = {}


def _path_fixtures():
    for fid in fx.FIXTURE_IDS:
        p = fx.build_fixture(fid).path
        if p is not None:
            yield fid, p


# --- criteria ---------------------------------------------------------------------------

def criterion_1():
    h = fx.hexagon_path()
    c = an.classify(h)
    assert c.kind == "NotMarkovExpandable", c.kind
    assert (c.t0, c.t1) == (0, 3)
    assert h.evaluate(F(0)) == h.evaluate(F(3)) == (0, 0)
    assert h.evaluate(F(1)) != h.evaluate(F(4))
    z = an.classify(fx.dyadic_zigzag_path())
    assert (z.kind, z.t0) == ("FinallyConstant", 2)
    for k, d in ((3, 1), (F(-1, 7), 2), (F(5, 3), F(-9, 2))):
        assert an.classify(fx.affine_line_path(k, d)).kind == "Injective"
    return "hexagon witness (0, 3), f(1) != f(4); zigzag finally constant at 2; lines injective"


def _grid_starts(p, n=50):
    xs = []
    for k in range(n):
        x = p.evaluate(F(k, 8))
        if x not in xs:
            xs.append(x)
    k = 0
    while len(xs) < n:  # top up with points the path may never visit
        xs.append(tuple(F(-1000 - k, 3) for _ in range(p.dim)))
        k += 1
    return xs[:n]


def criterion_2():
    done = []
    for fid, p in _path_fixtures():
        if ex.check_markov(p).answer != "Yes" or not sc.is_exact(p.evaluate(F(1, 3))):
            continue
        P = pr.from_expandable_path(p)
        x0 = p.evaluate(F(0))
        for k in range(1000):
            t = F(k, 97) * 5
            assert P.evaluate(x0, t) == p.evaluate(t), (fid, t)
        xs = _grid_starts(p)
        ts = [F(k, 8) for k in range(50)]
        res = pr.verify_markov_semigroup(P, [(x, t, h) for x in xs for t in ts for h in (F(1, 2),)])
        assert res.passed, (fid, res.to_json())
        res = pr.verify_time_homogeneity(P, pr.product_grid(xs, ts), F(1), F(1, 2))
        assert res.passed, (fid, res.to_json())
        done.append(fid)
    assert len(done) >= 6, done
    return f"{len(done)} exact Markov-expandable fixtures, 1000 times each, 50x50 grids"


def criterion_3():
    w = pr.verify_markov_semigroup(fx.shrinking_process(), [((1,), 1, 1)])
    assert not w.passed and (w.x, w.t, w.h) == ((1,), 1, 1)
    assert (w.left, w.right) == ((-1,), (0,))
    Z = pr.SingleStartProcess(fx.sum_path(), (F(0),))
    w = pr.verify_time_homogeneity(Z, [((0,), 0), ((0,), 1)], F(1, 2), F(1, 2))
    assert not w.passed and (w.s, w.t, w.h) == (0, 1, F(1, 2))
    assert (w.left, w.right) == ((0,), (F(-1, 2),))
    return "semigroup witness X_2^1 = -1 vs 0; time witness 0 vs -1/2"


def criterion_4():
    n = 0
    for fid, p in _path_fixtures():
        if p.dim != 1 or not an.classify(p, allow_approx=True).markov:
            continue
        v = sm.is_semimartingale_path(p)
        assert v.jump_route is not None and v.agree, fid
        n += 1
    h = fx.harmonic_flip_path()
    assert sm.is_semimartingale_path(h).verdict == sm.NOT_SEMIMARTINGALE
    js = sm.jump_abs_sum(h, 1, bound=10)
    assert isinstance(js, Divergent) and js.witness is not None and js.witness <= 2 * 10 ** 4
    z = fx.dyadic_zigzag_path()
    assert sm.is_semimartingale_path(z).verdict == sm.SEMIMARTINGALE
    tv = sm.total_variation(z, 2)
    assert isinstance(tv, sm.Exact) and sc.is_exact(tv.value)
    orc = sm.variation_oracle(z, 2, 12)
    assert orc <= tv.value and tv.value - orc < F(1, 2 ** 8)
    return (f"routes agree on {n} fixtures; divergence witness N = {js.witness}; "
            f"TV = {sc.fmt(tv.value)}, oracle gap {float(tv.value - orc):.2e}")


def criterion_5():
    rng = random.Random(20240)
    counts = {True: 0, False: 0}
    for i in range(1000):
        case = injective_case(rng)
        js = sm.jump_abs_sum(case.path, case.T)
        tv = sm.total_variation(case.path, case.T)
        finite, summable = isinstance(tv, sm.Exact), isinstance(js, sm.Exact)
        assert finite == summable, (i, case.path.dumps())
        assert finite == case.finite, i
        if finite:
            assert tv.value == case.variation and js.value == case.jump_sum, i
        counts[finite] += 1
    return f"1000 injective paths: {counts[True]} finite, {counts[False]} divergent, no discrepancy"


def criterion_6():
    rng = random.Random(6)
    n = 0
    for fid, p in _path_fixtures():
        T = F(3)
        if not sc.is_exact(p.evaluate(F(1, 3))) or isinstance(sm.jump_abs_sum(p, T), Divergent):
            continue
        c, g = sm.decompose(p, T)
        for _ in range(1000):
            t = T * F(rng.randint(0, 10 ** 6), 10 ** 6)
            assert tuple(a + b for a, b in zip(c(t), g(t))) == p.evaluate(t), (fid, t)
        if p.dim == 1:
            hp, hm = sm.jordan_split(p, T)
            grid = sorted({T * F(k, 256) for k in range(257)})
            prev = None
            for t in grid:
                a, b = hp(t)[0], hm(t)[0]
                assert a - b == p.evaluate(t)[0]
                if prev is not None:
                    assert a >= prev[0] and b >= prev[1], (fid, t)
                prev = (a, b)
            assert not set(hp.jump_times()) & set(hm.jump_times()), fid
        n += 1
    return f"{n} fixtures: f + g = h at 1000 points, Jordan parts monotone with disjoint jumps"


def _chain(p) -> bool:
    h = {k: v.answer for k, v in ex.hierarchy(p).items()}
    chain = ["levy", "rich_feller", "ito", "hunt", "markov"] if p.dim == 1 else ["levy", "ito", "hunt", "markov"]
    if any(h[a] == "Yes" and h[b] != "Yes" for a, b in zip(chain, chain[1:])):
        return False
    if p.dim == 1 and (ex.check_feller_1d(p).answer == "Yes") != (ex.check_hunt_1d(p).answer == "Yes"):
        return False
    return True


def criterion_7():
    n = 0
    for fid, p in _path_fixtures():
        assert _chain(p), fid
        n += 1
    rng = random.Random(7)
    m = 0
    while m < 1000:
        p = random_spec(rng)
        if not p.validate().valid:
            continue
        assert _chain(p), p.dumps()
        m += 1
    return f"{n} fixtures and {m} random paths monotone"


def criterion_8():
    p = fx.cantor_path()
    assert ex.check_feller_1d(p).answer == "Yes"
    assert ex.check_rich_feller_1d(p).answer == "No"
    assert ex.check_ito(p).answer == "No"
    assert sm.is_semimartingale_path(p).verdict == sm.SEMIMARTINGALE
    P = fx.cantor_process()
    a, b = P.evaluate(0, 1), P.evaluate(0, F(1, 3))
    assert a == (1,) and b == (F(5, 12),) and sc.is_exact(a) and sc.is_exact(b)
    assert isinstance(a[0], F) and isinstance(b[0], F)
    return "Feller yes, rich Feller no, Ito no, semimartingale; X_1^0 = 1, X_{1/3}^0 = 5/12"


def criterion_9():
    Y = fx.space_time_process()
    grid = fx.SPACE_TIME_GRID
    assert ((1, 0), 1) in grid
    res = pr.verify_time_homogeneity(Y, grid, F(1), F(1, 2))
    assert res.passed and res.checked > 0, res.to_json()
    rng = random.Random(9)
    for _ in range(10):
        c = F(rng.randint(-50, 50), rng.randint(1, 12))
        xi = (F(rng.randint(-50, 50), rng.randint(1, 12)), F(rng.randint(-50, 50), rng.randint(1, 12)))
        t = F(rng.randint(0, 40), 9)
        v = fl.symbol_eval(fl.space_time_lift(fx.drift_process(c)), (c * t, t), xi)
        assert v == SymbolValue(F(0), -(xi[0] * c + xi[1]))
        assert isinstance(v.im, F)
    return f"lift passes with {res.checked} comparisons; 10 drift symbols exact"


def _printed_trigger(n, c):
    return c * F(2 ** n - 1, 2 ** n) + sum(2 ** j for j in range(n - 1))


def _printed_starts(c, count=4, per=3):
    out = []
    for n in range(count):
        lo = 2 ** n + c * F(2 ** n - 1, 2 ** n)
        hi = 2 ** n + c * F(2 ** (n + 1) - 1, 2 ** (n + 1))
        out += [lo + (hi - lo) * F(k, per) for k in range(per)]
    return out


def criterion_10():
    n = 0
    for c in (F(1), F(3, 2)):
        P = fx.killing_process(c)
        for x in _printed_starts(c):
            m = next(k for k in range(1, 64) if _printed_trigger(k, c) > x)
            # later gaps are (a_{k+1} - b_k)/c = 2^-(k+1); they sum to 2^-m
            tau = (_printed_trigger(m, c) - x) / c + F(1, 2 ** m)
            y = P.evaluate(x, tau + 1)
            assert isinstance(y, pr.Killed) and y.tau == tau, (c, x, y, tau)
            n += 1
    return f"{n} printed starts killed at the geometric accumulation time"


def criterion_11():
    P = pr.from_expandable_path(fx.feller_gap_path())
    out = []
    for n in range(1, 7):
        xn = (1 - F(1, 2 ** n), F(0))
        assert P.evaluate((0, 0), 2 * n) == xn
        out.append(P.evaluate(xn, 1)[1])
    assert out == [(-1) ** n for n in range(1, 7)], out
    return "second component " + " ".join(sc.fmt(v) for v in out)


CRITERIA = {k: globals()[f"criterion_{k}"] for k in TITLES}


def _run(k):
    try:
        detail, ok = CRITERIA[k](), True
    except AssertionError as e:
        detail, ok = f"failed: {e}" if str(e) else "failed", False
    line = f"criterion {k:2d} {'PASS' if ok else 'FAIL'}  {TITLES[k]}: {detail}"
    RESULTS[k] = line
    print(line)
    return ok, line


@pytest.mark.parametrize("k", sorted(TITLES))
def test_criterion(k):
    ok, line = _run(k)
    assert ok, line


if __name__ == "__main__":
    sys.exit(0 if all(_run(k)[0] for k in sorted(TITLES)) else 1)
