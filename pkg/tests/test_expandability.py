import random
from fractions import Fraction as F

import pytest

from detmp import expandability as ex
from detmp import fixtures as fx
from detmp.path import ConstantTail, PathSpec, PeriodicRepeat, UnboundedPrimitive
from detmp.primitives import Affine
from strategies import aff, random_spec

YES, NO, UNKNOWN = "Yes", "No", "Unknown"


def ans(path, klass):
    return ex.check(path, klass).answer


def constant():
    return PathSpec(1, [], [], ConstantTail(F(0), (F(2),)))


def zigzag_up_down():
    return PathSpec.build(1, [(0, 1, aff(1, 0))], tail=UnboundedPrimitive(F(1), aff(-1, 2)))


def kinked():
    return PathSpec.build(1, [(0, 1, aff(1, 0))], tail=UnboundedPrimitive(F(1), aff(2, -1)))


def square_loop():
    a2 = lambda k, c: Affine(tuple(F(x) for x in k), tuple(F(x) for x in c))
    pieces = [(0, 1, a2((1, 0), (0, 0))), (1, 2, a2((0, 1), (1, -1))),
              (2, 3, a2((-1, 0), (3, 1))), (3, 4, a2((0, -1), (0, 4)))]
    return PathSpec.build(2, pieces, tail=PeriodicRepeat(F(0), F(4)))


def test_markov_examples():
    assert ans(fx.hexagon_path(), "markov") == NO
    assert ans(fx.dyadic_zigzag_path(), "markov") == YES
    assert ans(fx.affine_line_path(F(-2, 3), 5), "markov") == YES


def test_hunt_examples():
    assert ans(fx.hexagon_path(), "hunt") == NO
    assert ans(fx.cantor_path(), "hunt") == YES
    assert ans(fx.dyadic_zigzag_path(), "hunt") == NO


def test_hunt_1d_examples():
    assert ex.check_hunt_1d(fx.exponential_path()).answer == YES
    assert ex.check_hunt_1d(zigzag_up_down()).answer == NO
    assert ex.check_hunt_1d(constant()).answer == YES


def test_ito_examples():
    assert ans(fx.cantor_path(), "ito") == NO
    assert ans(fx.affine_line_path(), "ito") == YES
    assert ans(fx.exponential_path(), "ito") == YES


def test_feller_1d_mirrors_hunt_1d():
    for p in (fx.exponential_path(), zigzag_up_down(), constant()):
        assert ex.check_feller_1d(p).answer == ex.check_hunt_1d(p).answer


def test_feller_sufficient_examples():
    assert ex.check_feller_sufficient(square_loop()).answer == YES
    assert ex.check_feller_sufficient(fx.feller_gap_path()).answer == UNKNOWN
    assert ex.check_feller_sufficient(fx.dyadic_zigzag_path()).answer == NO


def test_rich_feller_examples():
    assert ans(fx.exponential_path(), "rich_feller") == YES
    assert ans(fx.cantor_path(), "rich_feller") == NO
    assert ans(kinked(), "rich_feller") == NO


def test_levy_examples():
    assert ans(fx.affine_line_path(F(5, 2), -1), "levy") == YES
    assert ans(constant(), "levy") == YES
    assert ans(fx.exponential_path(), "levy") == NO
    assert ans(fx.dyadic_zigzag_path(), "levy") == NO


def test_unknown_only_for_feller_family_in_two_dims():
    for fid in fx.FIXTURE_IDS:
        p = fx.build_fixture(fid).path
        if p is None:
            continue
        for k, v in ex.hierarchy(p).items():
            if v.answer == UNKNOWN:
                assert p.dim >= 2 and k in ("feller", "rich_feller")


def test_unknown_class_rejected():
    with pytest.raises(ValueError):
        ex.check(constant(), "gaussian")


# --- hierarchy --------------------------------------------------------------------------

def _chain_ok(path) -> bool:
    h = {k: v.answer for k, v in ex.hierarchy(path).items()}
    chain = ["levy", "rich_feller", "ito", "hunt", "markov"] if path.dim == 1 else \
        ["levy", "ito", "hunt", "markov"]
    for hi, lo in zip(chain, chain[1:]):
        if h[hi] == YES and h[lo] != YES:
            return False
    if path.dim == 1:
        if (ex.check_feller_1d(path).answer == YES) != (ex.check_hunt_1d(path).answer == YES):
            return False
        if ex.check_hunt(path).answer != ex.check_hunt_1d(path).answer:
            return False
    if path.dim == 1 and h["rich_feller"] == YES and h["feller"] != YES:
        return False
    return True


@pytest.mark.parametrize("fid", [f for f in fx.FIXTURE_IDS if fx.build_fixture(f).path is not None])
def test_hierarchy_on_fixtures(fid):
    assert _chain_ok(fx.build_fixture(fid).path)


def test_hierarchy_on_random_specs():
    rng = random.Random(2024)
    checked = 0
    for _ in range(1000):
        p = random_spec(rng)
        if not p.validate().valid:
            continue
        assert _chain_ok(p), p.dumps()
        checked += 1
    assert checked >= 900


def test_invalid_path_never_yes():
    bad = PathSpec.build(1, [(0, 2, aff(1, 0)), (1, 3, aff(0, 5))], tail=ConstantTail(F(3), (F(0),)))
    for k in ex.CLASSES:
        try:
            v = ex.check(bad, k)
        except ValueError:
            continue
        assert v.answer != YES


def test_deterministic_serialization():
    for fid in ("feller_gap", "dyadic_zigzag", "exponential"):
        a = {k: v.to_json() for k, v in ex.hierarchy(fx.build_fixture(fid).path).items()}
        b = {k: v.to_json() for k, v in ex.hierarchy(fx.build_fixture(fid).path).items()}
        assert a == b
