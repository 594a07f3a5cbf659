"""Write src/detmp/data/<id>.json from the fixture builders and the expected
tables below.  Tables are derived by hand; the script refuses to write a file
whose table disagrees with the computed values."""

import sys
from pathlib import Path

from detmp import fixtures as fx

Y, N, U = "Yes", "No", "Unknown"
HIER = ("markov", "hunt", "ito", "feller", "rich_feller", "levy")


def h(*answers):
    return dict(zip(HIER, answers))


TABLES = {
    "hexagon": {"classification": "NotMarkovExpandable", "revisit": ["0", "3"],
                "witness": ["0", "3", "4"], "continuous": True,
                **h(N, N, N, N, N, N), "semimartingale": "Semimartingale"},
    "sawtooth": {"classification": "JumpPeriodic", "revisit": ["0", "1"], "period": "1",
                 **h(Y, N, N, N, N, N), "semimartingale": "Semimartingale",
                 "total_variation@3": "6", "jump_abs_sum@3": "3", "process_faithful": True},
    "affine_line": {"classification": "Injective", **h(Y, Y, Y, Y, Y, Y),
                    "semimartingale": "Semimartingale", "total_variation@2": "6",
                    "process_faithful": True},
    "dyadic_zigzag": {"classification": "FinallyConstant", "t0": "2", "continuous": False,
                      **h(Y, N, N, N, N, N), "semimartingale": "Semimartingale",
                      "total_variation@2": "10", "jump_abs_sum@2": "8",
                      "generalized_inverse(2)": "1", "oracle_gap@12_below_2^-8": True,
                      "process_faithful": True},
    "feller_gap": {"classification": "Injective", "continuous": True,
                   **h(Y, Y, Y, U, U, N), "semimartingale": "Semimartingale",
                   "second_component_at_time_1": ["-1", "1", "-1", "1", "-1", "1"]},
    "cantor_set_process": {"claims": {"strictly_increasing": True, "bounded": True,
                                      "disjoint": True, "starts": "12"}},
    "harmonic_flip": {"classification": "FinallyConstant", "t0": "1", "continuous": False,
                      **h(Y, N, N, N, N, N), "semimartingale": "NotSemimartingale",
                      "total_variation@1": "Infinite", "jump_abs_sum@1": {"divergent_N": "226"},
                      "structure_process(2,1/2)": ["3/2"], "structure_process(-2,5)": ["0"]},
    "cantor_process": {"classification": "Injective", "continuous": True,
                       **h(Y, Y, N, Y, N, N), "semimartingale": "Semimartingale",
                       "evaluate(0,1)": ["1"], "evaluate(0,1/3)": ["5/12"],
                       "generalized_inverse(5/12)": "1/3"},
    "exponential": {"classification": "Injective", **h(Y, Y, Y, Y, Y, N),
                    "space_homogeneity": "Witness", "time_homogeneity": "Pass",
                    "evaluate(0,5)": ["0"]},
    "instant_killing": {"evaluate(2,10)": {"killed": "2"}, "closed_form(2)": "2",
                        "evaluate(5/2,10)": {"killed": "3/2"}, "closed_form(5/2)": "3/2",
                        "evaluate(2,1/10)": ["21/10"]},
    "shrinking": {"classification": "Injective", "semimartingale": "Semimartingale",
                  "markov_semigroup": {"result": "Witness", "x": "1", "t": "1/2", "h": "1/2",
                                       "left": ["0"], "right": ["1/4"]}},
    "sum_not_markov": {"classification": "NotMarkovExpandable", "markov": N,
                       "semimartingale": "Semimartingale",
                       "time_homogeneity": {"result": "Witness", "x": "0", "y": "0", "s": "0",
                                            "t": "1", "h": "1/2", "left": ["0"], "right": ["-1/2"]}},
    "zero_infinitely_often": {"classification": "JumpPeriodic", "period": "2",
                              **h(Y, N, N, N, N, N), "semimartingale": "Semimartingale",
                              "process_faithful": True},
    "infinite_landing": {"classification": "FinallyConstant", "t0": "1",
                         **h(Y, N, N, N, N, N), "semimartingale": "Semimartingale",
                         "process_faithful": True},
    "space_time": {"time_homogeneity": "Pass", "symbol(c=2,xi=(1,3))": "0-5i"},
    "sawtooth_cascade": {"classification": "Injective", "continuous": True,
                         "semimartingale": "Semimartingale",
                         "variation_at_least_level": [True] * 6},
}


def main(out: Path) -> int:
    bad = 0
    for fid in fx.FIXTURE_IDS:
        base = fx._registry()[fid]()
        table = TABLES[fid]
        got = fx.compute_table(base, table)
        diff = {k: (table[k], got[k]) for k in table if table[k] != got[k]}
        if diff:
            bad += 1
            print(f"{fid}: MISMATCH {diff}")
            continue
        data = fx.Fixture(fid, base.title, base.path, base.process, table, base.notes)
        (out / f"{fid}.json").write_text(data.dumps())
        print(f"{fid}: written")
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main(Path(__file__).resolve().parent.parent / "src" / "detmp" / "data"))
