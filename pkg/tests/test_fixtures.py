import json
from fractions import Fraction as F
from importlib import resources

import pytest

from detmp import fixtures as fx
from detmp import process as pr
from detmp.path import PathSpec


@pytest.mark.parametrize("fid", fx.FIXTURE_IDS)
def test_fixture_table_reproduced(fid):
    rep = fx.check_fixture(fid)
    bad = [r.to_json() for r in rep.results if not r.ok]
    assert rep.passed, bad
    assert rep.results


@pytest.mark.parametrize("fid", fx.FIXTURE_IDS)
def test_data_file_matches_build(fid):
    text = resources.files("detmp").joinpath("data").joinpath(f"{fid}.json").read_text()
    built = fx.build_fixture(fid)
    assert built.dumps() == text
    assert fx.fixture(fid).dumps() == text


@pytest.mark.parametrize("fid", fx.FIXTURE_IDS)
def test_data_file_paths_load(fid):
    d = json.loads(fx.fixture(fid).dumps())
    if d["path"] is not None:
        p = PathSpec.from_json(d["path"])
        assert p.dumps() == fx.build_fixture(fid).path.dumps()
    if d["process"] is not None:
        P = pr.UniversalProcess.from_json(d["process"])
        assert P.to_json() == d["process"]


def test_unknown_fixture():
    with pytest.raises(fx.UnknownFixture):
        fx.fixture("no_such_example")
    with pytest.raises(fx.UnknownFixture):
        fx.check_fixture("no_such_example")


def test_hexagon_table():
    e = fx.fixture("hexagon").expected
    assert e["classification"] == "NotMarkovExpandable" and e["markov"] == "No"


def test_cantor_process_table():
    e = fx.fixture("cantor_process").expected
    assert (e["feller"], e["rich_feller"], e["ito"], e["semimartingale"]) == \
        ("Yes", "No", "No", "Semimartingale")


def test_sum_not_markov_table():
    w = fx.fixture("sum_not_markov").expected["time_homogeneity"]
    assert (w["result"], w["s"], w["t"], w["h"], w["left"], w["right"]) == \
        ("Witness", "0", "1", "1/2", ["0"], ["-1/2"])


def test_every_fixture_documents_itself():
    for fid in fx.FIXTURE_IDS:
        f = fx.fixture(fid)
        assert f.title and f.expected


def test_concretization_notes():
    for fid in ("harmonic_flip", "cantor_set_process", "feller_gap"):
        assert fx.fixture(fid).notes


# --- truncated families --------------------------------------------------------------------

def test_stern_brocot_order():
    assert fx.stern_brocot(7) == [1, F(1, 2), 2, F(1, 3), F(2, 3), F(3, 2), 3]


@pytest.mark.parametrize("n", [1, 4, 8, 12])
def test_cantor_set_paths(n):
    # truncated to finitely many jump times: strictly increasing across the
    # jumps, constant in between
    starts = fx.cantor_set_starts(n, 20)
    paths = [fx.cantor_set_path(d) for d in starts]
    seen = {}
    for i, p in enumerate(paths):
        assert p.validate().valid
        jumps = sorted(p.breakpoints(F(0), F(100)))
        vals = [p.evaluate(t)[0] for t in [F(0)] + jumps]
        assert all(a < b for a, b in zip(vals, vals[1:]))
        grid = [p.evaluate(F(k, 64))[0] for k in range(64 * 4)]
        assert all(a <= b for a, b in zip(grid, grid[1:]))
        assert all(0 <= v <= 1 for v in grid)
        for v in vals:
            assert seen.setdefault(v, i) == i


@pytest.mark.parametrize("L", range(1, 7))
def test_cascade_claims(L):
    from detmp import semimartingale as sm
    p = fx.sawtooth_cascade(L)
    assert p.validate().valid
    assert sm.total_variation(p, 1 - F(1, 2 ** L)).value >= L
