"""Command-line front end.

Inputs are path or process JSON files; a bare fixture id (``hexagon``) may
stand in for a file.  Exit codes: 0 verdict produced, 1 negative verdict
under ``--assert``, 2 invalid input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import analysis as an
from . import expandability as ex
from . import fixtures as fx
from . import process as pr
from . import scalar as sc
from . import semimartingale as sm
from .path import PathSpec


class InputError(ValueError):
    pass


# --- inputs -------------------------------------------------------------------------

def _load(src: str):
    """``PathSpec`` or ``UniversalProcess`` from a file or fixture id."""
    p = Path(src)
    if p.is_file():
        try:
            d = json.loads(p.read_text())
        except json.JSONDecodeError as e:
            raise InputError(f"{src}: not JSON ({e})") from None
    elif src in fx.FIXTURE_IDS:
        f = fx.fixture(src)
        if f.path is not None:
            return f.path
        if isinstance(f.process, pr.UniversalProcess):
            return f.process
        raise InputError(f"fixture {src!r} has no path or serializable process")
    else:
        raise InputError(f"{src}: no such file or fixture")
    try:
        if "regions" in d:
            return pr.UniversalProcess.from_json(d)
        if "path" in d and "expected" in d:
            return PathSpec.from_json(d["path"])
        return PathSpec.from_json(d)
    except (KeyError, TypeError, ValueError) as e:
        raise InputError(f"{src}: malformed input ({e})") from None


def _path(src: str) -> PathSpec:
    obj = _load(src)
    if not isinstance(obj, PathSpec):
        raise InputError(f"{src}: expected a path, got a process")
    rep = obj.validate()
    if not rep.valid:
        raise InputError(f"{src}: invalid path: {'; '.join(rep.violations)}")
    return obj


def _process(src: str):
    obj = _load(src)
    if isinstance(obj, PathSpec):
        return pr.from_expandable_path(obj), obj
    return obj, None


def _scalar(text: str):
    try:
        return sc.parse_scalar(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"not a rational number: {text!r}") from None


def _state(text: str) -> tuple:
    return tuple(_scalar(c) for c in text.split(","))


def _list(text: str) -> list:
    return [_scalar(c) for c in text.split(",") if c.strip()]


def _interval(text: str) -> tuple:
    try:
        a, b = text.split(":")
    except ValueError:
        raise InputError(f"interval must look like a:b, got {text!r}") from None
    a, b = _scalar(a), _scalar(b)
    if not 0 <= a < b:
        raise InputError(f"need 0 <= a < b, got {text!r}")
    return a, b


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


# --- subcommands ------------------------------------------------------------------

def cmd_classify(args) -> int:
    path = _path(args.input)
    c = an.classify(path, allow_approx=True)
    _emit(c.to_json())
    if args.assert_ == "markov" and not c.markov:
        return 1
    return 0


def cmd_expand(args) -> int:
    path = _path(args.input)
    if args.klass == "all":
        _emit({k: v.to_json() for k, v in ex.hierarchy(path).items()})
        return 0
    v = ex.check(path, args.klass)
    _emit(v.to_json())
    return 1 if args.assert_ and v.answer != ex.YES else 0


def cmd_eval(args) -> int:
    P, path = _process(args.input)
    x = _state(args.x) if args.x is not None else (path.evaluate(Fraction(0)) if path else None)
    if x is None:
        raise InputError("--x is required for process input")
    out = []
    for t in _list(args.t):
        y = P.evaluate(x, t)
        out.append({"t": sc.fmt(t), "value": fx.norm(y)})
    _emit({"x": fx.norm(x), "values": out})
    return 0


def cmd_verify(args) -> int:
    P, path = _process(args.input)
    xs = [_state(s) for s in args.xs.split(";")]
    ts = _list(args.ts)
    if args.check == "markov":
        res = pr.verify_markov_semigroup(P, pr.product_grid(xs, ts, _list(args.hs)))
    elif args.check == "time":
        res = pr.verify_time_homogeneity(P, pr.product_grid(xs, ts), _scalar(args.horizon),
                                         _scalar(args.step))
    else:
        res = pr.verify_space_homogeneity(P, pr.product_grid(xs, [_state(z) for z in args.zs.split(";")], ts))
    _emit(res.to_json())
    return 1 if args.assert_ and not res.passed else 0


def cmd_variation(args) -> int:
    path = _path(args.input)
    a, b = _interval(args.interval)
    depth = args.depth if args.oracle else None
    if args.oracle and a != 0:
        raise InputError("--oracle needs an interval starting at 0")
    rep = sm.variation_report(path, b, depth, a=a)
    _emit(rep.to_json())
    if args.assert_ == "finite" and isinstance(rep.total_variation, sm.Infinite):
        return 1
    if args.assert_ == "infinite" and not isinstance(rep.total_variation, sm.Infinite):
        return 1
    return 0


def cmd_fixtures(args) -> int:
    if args.action == "list":
        for fid in fx.FIXTURE_IDS:
            print(f"{fid}\t{fx.fixture(fid).title}")
        return 0
    if not args.id:
        raise InputError(f"fixtures {args.action} needs an id")
    ids = fx.FIXTURE_IDS if args.id == "all" and args.action == "check" else [args.id]
    for fid in ids:
        if fid not in fx.FIXTURE_IDS:
            raise InputError(f"unknown fixture {fid!r}")
    if args.action == "show":
        print(fx.fixture(ids[0]).dumps(), end="")
        return 0
    reports = [fx.check_fixture(fid) for fid in ids]
    _emit([r.to_json() for r in reports] if len(reports) > 1 else reports[0].to_json())
    return 0 if all(r.passed for r in reports) else 1


def cmd_plot(args) -> int:
    P, path = _process(args.input)
    x = _state(args.x) if args.x is not None else (path.evaluate(Fraction(0)) if path else None)
    if x is None:
        raise InputError("--x is required for process input")
    a, b = _interval(args.interval)
    step = _scalar(args.step)
    if step <= 0:
        raise InputError("--step must be positive")
    n = int((b - a) / step)
    times = [a + k * step for k in range(n + 1)]
    out = Path(args.out)
    if out.suffix == ".csv":
        out.write_text(pr.trajectory_csv(P, x, times, exact=args.exact))
    elif out.suffix == ".svg":
        from .plotting import svg_plot
        jumps = None
        if path is not None and tuple(x) == tuple(path.evaluate(Fraction(0))):
            jumps = path
        out.write_text(svg_plot(P, x, times, jumps))
    else:
        raise InputError("--out must end in .csv or .svg")
    print(str(out))
    return 0


# --- parser ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="detmp", description="Deterministic cadlag paths and Markov processes.")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="trichotomy classification of a path")
    s.add_argument("input")
    s.add_argument("--assert", dest="assert_", choices=["markov"])
    s.set_defaults(fn=cmd_classify)

    s = sub.add_parser("expand", help="expandability into a process class")
    s.add_argument("input")
    s.add_argument("--class", dest="klass", required=True, choices=list(ex.CLASSES) + ["all"])
    s.add_argument("--assert", dest="assert_", action="store_true",
                   help="exit 1 unless the answer is Yes")
    s.set_defaults(fn=cmd_expand)

    s = sub.add_parser("eval", help="evaluate X_t^x")
    s.add_argument("input")
    s.add_argument("--x", help="start, comma separated for d = 2 (default: f(0))")
    s.add_argument("--t", required=True, help="comma separated times")
    s.set_defaults(fn=cmd_eval)

    s = sub.add_parser("verify", help="grid check of the semigroup or homogeneity identities")
    s.add_argument("input")
    s.add_argument("--check", choices=["markov", "time", "space"], required=True)
    s.add_argument("--xs", required=True, help="starts separated by ';', components by ','")
    s.add_argument("--ts", required=True, help="comma separated times")
    s.add_argument("--hs", default="1/2,1", help="increments for --check markov")
    s.add_argument("--zs", default="1", help="shifts for --check space")
    s.add_argument("--horizon", default="1")
    s.add_argument("--step", default="1/2")
    s.add_argument("--assert", dest="assert_", action="store_true", help="exit 1 on a witness")
    s.set_defaults(fn=cmd_verify)

    s = sub.add_parser("variation", help="total variation report")
    s.add_argument("input")
    s.add_argument("--interval", required=True, help="a:b")
    s.add_argument("--assert", dest="assert_", choices=["finite", "infinite"])
    s.add_argument("--oracle", action="store_true", help="add the partition lower bound")
    s.add_argument("--depth", type=int, default=8)
    s.set_defaults(fn=cmd_variation)

    s = sub.add_parser("fixtures", help="the built-in fixture gallery")
    s.add_argument("action", choices=["list", "show", "check"])
    s.add_argument("id", nargs="?")
    s.set_defaults(fn=cmd_fixtures)

    s = sub.add_parser("plot", help="sample a trajectory to CSV or SVG")
    s.add_argument("input")
    s.add_argument("--x")
    s.add_argument("--interval", default="0:4")
    s.add_argument("--step", default="1/16")
    s.add_argument("--out", required=True)
    s.add_argument("--exact", action="store_true", help="add a column of exact values")
    s.set_defaults(fn=cmd_plot)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, pr.ProcessError, an.NotInRange, fx.UnknownFixture) as e:
        print(f"detmp: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as e:
        print(f"detmp: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
