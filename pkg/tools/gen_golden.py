"""Record CLI outputs for the fixture commands under tests/golden/.

Run after a deliberate output change; the test suite compares against these.
"""

import contextlib
import io
import sys
from pathlib import Path

from detmp import cli
from detmp import fixtures as fx

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden"


def commands():
    for fid in fx.FIXTURE_IDS:
        yield f"show_{fid}", ["fixtures", "show", fid]
        yield f"check_{fid}", ["fixtures", "check", fid]
        if fx.build_fixture(fid).path is not None:
            yield f"classify_{fid}", ["classify", fid]
            yield f"expand_{fid}", ["expand", "--class", "all", fid]
    yield "list", ["fixtures", "list"]
    yield "variation_zigzag", ["variation", "dyadic_zigzag", "--interval", "0:2", "--oracle", "--depth", "10"]
    yield "variation_harmonic", ["variation", "harmonic_flip", "--interval", "0:1"]


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(argv)
    return code, buf.getvalue()


def main():
    OUT.mkdir(exist_ok=True)
    for name, argv in commands():
        code, text = run(argv)
        (OUT / f"{name}.out").write_text(f"# exit {code}\n" + text)
    print(f"wrote {len(list(OUT.glob('*.out')))} files to {OUT}", file=sys.stderr)


if __name__ == "__main__":
    main()
