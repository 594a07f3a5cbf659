"""Which process classes a path can be expanded into.

Every checker returns an :class:`ExpandabilityVerdict` whose evidence names
the deciding fact: the classification, a jump, a kink, a singular piece.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import analysis as an
from . import scalar as sc
from .path import PathSpec, Segment
from .primitives import Affine, Constant

YES, NO, UNKNOWN = "Yes", "No", "Unknown"

CLASSES = ("markov", "hunt", "ito", "feller", "rich_feller", "levy")


@dataclass(frozen=True)
class ExpandabilityVerdict:
    klass: str
    answer: str
    evidence: str

    def to_json(self) -> dict:
        return {"class": self.klass, "answer": self.answer, "evidence": self.evidence}


def _v(klass, ok, why_yes, why_no) -> ExpandabilityVerdict:
    return ExpandabilityVerdict(klass, YES if ok else NO, why_yes if ok else why_no)


def _structure_string(runs) -> str:
    return "|".join(r.kind if r.kind != "alt" else "alt(" + ",".join(r.detail) + ")" for r in runs)


def check_markov(path: PathSpec) -> ExpandabilityVerdict:
    c = an.classify(path)
    if c.kind == "NotMarkovExpandable":
        w = ", ".join(sc.fmt(x) for x in c.witness)
        return ExpandabilityVerdict("markov", NO, f"NotMarkovExpandable, witness ({w}): {c.evidence}")
    return ExpandabilityVerdict("markov", YES, f"{c.kind}: {c.evidence}")


def _continuity(path):
    rep = an.continuity_report(path)
    if rep.continuous:
        return True, "continuous"
    if rep.discontinuity_times:
        return False, f"jump at {sc.fmt(rep.discontinuity_times[0])}"
    return False, f"jumps accumulating at {sc.fmt(rep.family_accumulations[0][0])}"


def check_hunt(path: PathSpec) -> ExpandabilityVerdict:
    m = check_markov(path)
    if m.answer != YES:
        return ExpandabilityVerdict("hunt", m.answer, m.evidence)
    ok, why = _continuity(path)
    return _v("hunt", ok, f"Markov-expandable and {why}", why)


def check_hunt_1d(path: PathSpec) -> ExpandabilityVerdict:
    """d = 1: monotone up to a (possibly empty) constant tail, and continuous."""
    runs = an.monotone_structure(path)
    kinds = [r.kind for r in runs]
    shape = _structure_string(runs)
    good = len(kinds) == 1 and kinds[0] != "alt" or (len(kinds) == 2 and kinds[1] == "0"
                                                      and kinds[0] in ("+", "-"))
    if not good:
        return ExpandabilityVerdict("hunt", NO, f"monotone structure {shape}")
    ok, why = _continuity(path)
    return _v("hunt", ok, f"monotone structure {shape}, {why}", why)


def check_ito(path: PathSpec) -> ExpandabilityVerdict:
    h = check_hunt(path)
    if h.answer != YES:
        return ExpandabilityVerdict("ito", h.answer, h.evidence)
    ac = an.ac_check(path)
    if ac.absolutely_continuous:
        return ExpandabilityVerdict("ito", YES, "Hunt-expandable and absolutely continuous")
    return ExpandabilityVerdict("ito", NO, f"{ac.obstruction} at {sc.fmt(ac.at)}")


def check_feller_1d(path: PathSpec) -> ExpandabilityVerdict:
    v = check_hunt_1d(path)
    return ExpandabilityVerdict("feller", v.answer, v.evidence)


def check_feller_sufficient(path: PathSpec) -> ExpandabilityVerdict:
    if path.dim == 1:
        return check_feller_1d(path)
    c = an.classify(path)
    if c.kind == "NotMarkovExpandable":
        return ExpandabilityVerdict("feller", NO, f"not Markov-expandable: {c.evidence}")
    ok, why = _continuity(path)
    if not ok:
        return ExpandabilityVerdict("feller", NO, why)
    if c.kind in ("FinallyConstant", "JumpPeriodic"):
        return ExpandabilityVerdict("feller", YES, f"continuous and {c.kind}")
    return ExpandabilityVerdict("feller", UNKNOWN,
                                "continuous and injective in d >= 2: the sufficient criterion does not decide")


def check_rich_feller_1d(path: PathSpec) -> ExpandabilityVerdict:
    if path.dim != 1:
        f = check_feller_sufficient(path)
        if f.answer == NO:
            return ExpandabilityVerdict("rich_feller", NO, f.evidence)
        return ExpandabilityVerdict("rich_feller", UNKNOWN, "criterion is one-dimensional")
    f = check_feller_1d(path)
    if f.answer != YES:
        return ExpandabilityVerdict("rich_feller", f.answer, f.evidence)
    s = an.smoothness_check(path)
    if not s.c1_on_open_halfline:
        where = f" (kink at {sc.fmt(s.kinks[0])})" if s.kinks else ""
        return ExpandabilityVerdict("rich_feller", NO, "not C1 on (0, inf)" + where)
    if not s.right_diff_at_zero:
        return ExpandabilityVerdict("rich_feller", NO, "not right-differentiable at 0")
    if not s.support_pattern:
        return ExpandabilityVerdict("rich_feller", NO, "derivative vanishes and revives")
    return ExpandabilityVerdict("rich_feller", YES,
                                f"C1, derivative nonzero exactly on [0, {sc.fmt(s.derivative_support)})")


def check_levy(path: PathSpec) -> ExpandabilityVerdict:
    path.require_valid()
    comps = path.components
    ok = (not path.periodic and len(comps) == 1 and isinstance(comps[0], Segment)
          and isinstance(comps[0].prim, (Affine, Constant)))
    if ok:
        p = comps[0].prim
        return ExpandabilityVerdict("levy", YES, f"single {type(p).__name__.lower()} piece on [0, inf)")
    return ExpandabilityVerdict("levy", NO, "representation is not a single affine piece on [0, inf)")


CHECKERS = {
    "markov": check_markov,
    "hunt": lambda p: check_hunt_1d(p) if p.dim == 1 else check_hunt(p),
    "ito": check_ito,
    "feller": check_feller_sufficient,
    "rich_feller": check_rich_feller_1d,
    "levy": check_levy,
}


def check(path: PathSpec, klass: str) -> ExpandabilityVerdict:
    try:
        fn = CHECKERS[klass]
    except KeyError:
        raise ValueError(f"unknown class {klass!r}; choose from {', '.join(CLASSES)}") from None
    return fn(path)


def hierarchy(path: PathSpec) -> dict:
    return {k: check(path, k) for k in CLASSES}
