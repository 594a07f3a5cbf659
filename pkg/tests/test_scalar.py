import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from detmp import scalar as sc
from detmp.scalar import Approx

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=64)


def test_parse_scalar_forms():
    assert sc.parse_scalar("3/4") == F(3, 4)
    assert sc.parse_scalar(" -7 ") == F(-7)
    assert sc.parse_scalar("0.125") == F(1, 8)
    with pytest.raises(ValueError):
        sc.parse_scalar("pi")


def test_parse_time_infinities():
    assert sc.parse_time("inf") == math.inf
    assert sc.parse_time("-inf") == -math.inf
    assert sc.parse_time("5/2") == F(5, 2)


def test_fmt():
    assert sc.fmt(F(6, 4)) == "3/2"
    assert sc.fmt(F(4)) == "4"
    assert sc.fmt(math.inf) == "inf"


@given(rationals)
def test_fmt_parse_roundtrip(x):
    assert sc.parse_scalar(sc.fmt(x)) == x


def test_exp_log_are_flagged():
    e = sc.exp(F(1))
    assert isinstance(e, Approx) and abs(e.value - math.e) <= e.eps
    assert sc.exp(F(0)) == F(1) and sc.is_exact(sc.exp(F(0)))
    assert sc.log(F(1)) == 0 and sc.is_exact(sc.log(F(1)))
    assert sc.log(sc.exp(F(2))) == F(2)


def test_sqrt_exact_on_squares():
    assert sc.sqrt(F(9, 4)) == F(3, 2)
    assert isinstance(sc.sqrt(F(2)), Approx)


@given(rationals, rationals)
def test_approx_arithmetic_encloses(a, b):
    x, y = Approx(float(a), 1e-9), Approx(float(b), 1e-9)
    assert x + y == a + b
    assert x - y == a - b
    assert x * y == a * b


def test_approx_comparisons():
    x = Approx(1.0, 1e-6)
    assert x == F(1) and x == 1.0000001
    assert not x < 1 and x <= 1
    assert x < math.inf and not x == math.inf
