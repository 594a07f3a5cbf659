"""Deterministic cadlag paths and the Markov processes built from them."""

from .analysis import (Classification, NotInRange, classify, first_revisit,
                       generalized_inverse)
from .expandability import ExpandabilityVerdict, check, hierarchy
from .fixtures import UnknownFixture, check_fixture, fixture
from .path import PathSpec
from .process import (Killed, UniversalProcess, evaluate, from_expandable_path,
                      verify_markov_semigroup, verify_time_homogeneity)
from .semimartingale import (is_semimartingale_path, jump_abs_sum, total_variation,
                             variation_oracle)

__version__ = "0.1.0"

__all__ = [
    "Classification", "ExpandabilityVerdict", "Killed", "NotInRange", "PathSpec",
    "UniversalProcess", "UnknownFixture", "check", "check_fixture", "classify",
    "evaluate", "first_revisit", "fixture", "from_expandable_path",
    "generalized_inverse", "hierarchy", "is_semimartingale_path", "jump_abs_sum",
    "total_variation", "variation_oracle", "verify_markov_semigroup",
    "verify_time_homogeneity",
]
