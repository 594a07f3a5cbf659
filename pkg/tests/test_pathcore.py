import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from detmp import fixtures as fx
from detmp.families import HarmonicFamily
from detmp.path import (ConstantTail, DivergentInventory, PathSpec, PeriodicRepeat,
                        UnboundedPrimitive, UnvalidatedPath)
from detmp.primitives import Affine, Constant
from strategies import aff, random_spec, specs


def test_hexagon_value():
    assert fx.hexagon_path().evaluate(F(3, 2)) == (F(1, 2), F(1, 2))


def test_value_at_zero_is_first_piece():
    h = fx.hexagon_path()
    assert h.evaluate(F(0)) == h.components[0].prim.value(F(0))


def test_cantor_generating_path_value():
    assert fx.cantor_path().evaluate(F(1, 3)) == (F(5, 12),)


def test_zigzag_left_limits():
    z = fx.dyadic_zigzag_path()
    assert z.left_limit(F(1)) == (F(0),)
    assert z.left_limit(F(2)) == (F(1),)


def test_continuous_left_limit_is_value():
    h = fx.hexagon_path()
    for t in (F(1, 3), F(1), F(5, 2), F(6), F(37, 7)):
        assert h.left_limit(t) == h.evaluate(t)


def test_zigzag_jumps_before_nine_tenths():
    inv = fx.dyadic_zigzag_path().jumps_in(F(0), F(9, 10))
    assert [(j.time, j.size) for j in inv] == [
        (F(1, 2), (F(-1),)), (F(3, 4), (F(1, 2),)), (F(7, 8), (F(-1, 4),))]


def test_affine_path_has_no_jumps():
    assert list(fx.affine_line_path().jumps_in(F(0), F(17))) == []


def test_harmonic_divergent_inventory():
    inv = fx.harmonic_flip_path().jumps_in(F(0), F(1))
    assert isinstance(inv, DivergentInventory)
    assert inv.witness == 226


def test_jump_point_invariants():
    for j in fx.dyadic_zigzag_path().jumps_in(F(0), F(3)):
        assert j.time > 0 and any(c != 0 for c in j.size)
        assert j.size == tuple(v - l for v, l in zip(j.value, j.left_limit))


# --- validation -------------------------------------------------------------------

def test_hexagon_valid():
    assert fx.hexagon_path().validate().valid


def test_overlap_reported():
    p = PathSpec.build(1, [(0, 2, aff(1, 0)), (1, 3, aff(0, 5))], tail=ConstantTail(F(3), (F(0),)))
    rep = p.validate()
    assert not rep.valid
    assert "overlap at [1,2)" in rep.violations


def test_gap_reported():
    p = PathSpec.build(1, [(0, 1, aff(1, 0))], tail=ConstantTail(F(2), (F(0),)))
    assert not p.validate().valid


def test_family_accumulating_inside_segment():
    fam = HarmonicFamily(1, 1, aff(-1, 1), aff(1, -1))
    p = PathSpec(1, [PathSpec.build(1, [(F(1, 2), 2, aff(0, 0))]).segments[0]], [fam],
                 ConstantTail(F(2), (F(0),)))
    assert not p.validate().valid


def test_unvalidated_path_refused():
    p = PathSpec.build(1, [(0, 2, aff(1, 0)), (1, 3, aff(0, 5))], tail=ConstantTail(F(3), (F(0),)))
    with pytest.raises(UnvalidatedPath):
        p.evaluate(F(1, 2))


# --- serialization ------------------------------------------------------------------

@pytest.mark.parametrize("fid", [f for f in fx.FIXTURE_IDS if fx.build_fixture(f).path is not None])
def test_fixture_json_roundtrip(fid):
    p = fx.build_fixture(fid).path
    text = p.dumps()
    assert PathSpec.loads(text).dumps() == text


@given(specs())
def test_random_json_roundtrip(p):
    text = p.dumps()
    q = PathSpec.loads(text)
    assert q.dumps() == text
    if p.validate().valid:
        for t in (F(0), F(1, 3), F(5, 2), F(11)):
            assert q.evaluate(t) == p.evaluate(t)


# --- properties ---------------------------------------------------------------------

def _multiset(inv):
    return sorted((j.time, j.size) for j in inv)


@given(specs(), st.fractions(min_value=F(1, 16), max_value=12, max_denominator=16),
       st.fractions(min_value=F(1, 16), max_value=6, max_denominator=16))
def test_jump_partition(p, a, extra):
    if not p.validate().valid:
        return
    T = a + extra
    whole = p.jumps_in(F(0), T)
    left, right = p.jumps_in(F(0), a), p.jumps_in(a, T, include_lo=False)
    assert _multiset(whole) == sorted(_multiset(left) + _multiset(right))


def test_jump_partition_zigzag():
    z = fx.dyadic_zigzag_path()
    for a in (F(1, 2), F(5, 8), F(3, 4), F(9, 10)):
        whole = z.jumps_in(F(0), F(1, 1) - F(1, 1024))
        left, right = z.jumps_in(F(0), a), z.jumps_in(a, F(1) - F(1, 1024), include_lo=False)
        assert _multiset(whole) == sorted(_multiset(left) + _multiset(right))


@given(specs(), st.fractions(min_value=0, max_value=12, max_denominator=12))
def test_left_limit_off_jumps(p, t):
    if not p.validate().valid or t == 0:
        return
    jt = {j.time for j in p.jumps_in(F(0), t + 1)}
    if t not in jt:
        assert p.left_limit(t) == p.evaluate(t)


@given(specs(), st.fractions(min_value=0, max_value=30, max_denominator=24))
def test_periodic_coherence(p, u):
    if not p.periodic or not p.validate().valid:
        return
    tl = p.tail
    u = u + tl.t0 + tl.period
    assert p.evaluate(u) == p.evaluate(u - tl.period)


def test_periodic_coherence_zero_often():
    p = fx.zero_often_path()
    rng = random.Random(3)
    for _ in range(200):
        u = F(rng.randint(0, 4000), rng.choice((1, 3, 7, 64)))
        assert p.evaluate(u + 2) == p.evaluate(u)
